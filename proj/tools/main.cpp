#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bialg/quantum.hpp"
#include "bialg/theorems.hpp"

using namespace bialg;

namespace {

enum Exit { Pass = 0, AxiomFailure = 1, UsageError = 2, Refused = 3 };

struct Options {
  std::string command, path, r = "trivial", out;
  bool left = false, right = false, machine = false;
  std::optional<uint32_t> trunc;
};

struct Outcome {
  Report report;
  std::optional<json> emitted;
};

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

// The fixture as loaded by the command, over a field where linear algebra is available.
template <class S>
struct Input {
  BialgebroidData<S> d;
  FieldDesc field;
  std::string chirality;
  std::function<YDAlgebra<S>(const std::string&)> block;
  LeftBialgebroid<S> left() const { return LeftBialgebroid<S>{d}; }
  RightBialgebroid<S> right() const { return RightBialgebroid<S>{d}; }
};

template <class S>
Report check_input(const Input<S>& in) {
  Report R = in.chirality == "right" ? check_right_bialgebroid(in.right()) : check_left_bialgebroid(in.left());
  R.title = "input " + R.title;
  return R;
}

template <class S>
void require_left(const Input<S>& in, const std::string& cmd) {
  if (in.chirality != "left") throw ChiralityError(cmd + " needs a left bialgebroid fixture");
}

template <class S>
YDAlgebra<S> coefficients(const Input<S>& in, const std::string& r) {
  auto L = in.left();
  if (r == "weyl") {
    try {
      return weyl_tilde(L);
    } catch (const NotHopf& e) {
      throw HypothesesUnmet("the Weyl algebra needs a right Hopf bialgebroid", e.what());
    }
  }
  YDAlgebra<S> A = r == "trivial" ? base_yd_algebra(L) : in.block(r);
  Report y = verify_yd(L, A.M);
  Report b;
  if (A.M.verified) b = verify_braided_commutative(L, A);
  if (!A.verified)
    throw HypothesesUnmet("R = " + r + " is not a braided commutative YD algebra", join(y.pass() ? b.failed() : y.failed()));
  return A;
}

template <class S>
json translation_block(const TranslationMap<S>& T, size_t n) {
  json a = json::array();
  for (const auto& col : T.map.cols) a.push_back(write_tensor2<S>(col, n, n));
  return a;
}

template <class S>
Outcome cmd_check(const Input<S>& in) {
  Outcome o;
  o.report = in.chirality == "right" ? check_right_bialgebroid(in.right()) : check_left_bialgebroid(in.left());
  return o;
}

template <class S>
Outcome cmd_dual(const Input<S>& in, bool right) {
  require_left(in, "dual");
  auto L = in.left();
  Dual<S> D = right ? right_dual(L) : left_dual(L);
  Outcome o;
  o.report.title = right ? "right dual" : "left dual";
  o.report.note("rank", std::to_string(D.V.d.n()));
  o.report.sub.push_back(check_right_bialgebroid(D.V));
  if (right) {
    // the right dual is the coopposite of the left dual of U^cop
    auto C = coopposite(L);
    o.report.sub.push_back(check_dual_pairing(C, left_dual(C)));
  } else {
    o.report.sub.push_back(check_dual_pairing(L, D));
  }
  o.emitted = write_bialgebroid(D.V.d, in.field, "right");
  return o;
}

template <class S>
Outcome cmd_hopf(const Input<S>& in, bool dual) {
  Outcome o;
  o.report.title = "Hopf structures";
  json maps;
  size_t n = in.d.n();
  auto attempt = [&](const std::string& name, const std::function<Report()>& f) {
    try {
      o.report.sub.push_back(f());
    } catch (const NotHopf& e) {
      o.report.count(name);
      o.report.fail(name, "Galois map is bijective", e.what());
    }
  };
  if (in.chirality == "right") {
    attempt("left-hopf", [&] {
      auto T = translation_map(in.right());
      maps["left-hopf"] = translation_block(T, n);
      return check_uch(in.right(), T);
    });
  } else {
    auto L = in.left();
    attempt("left-hopf", [&] {
      auto T = translation_map(L, Flavor::LeftHopf);
      maps["left-hopf"] = translation_block(T, n);
      return check_sch(L, T);
    });
    attempt("right-hopf", [&] {
      auto T = translation_map(L, Flavor::RightHopf);
      maps["right-hopf"] = translation_block(T, n);
      return check_tch(L, T);
    });
    if (maps.contains("left-hopf") && maps.contains("right-hopf"))
      o.report.sub.push_back(verify_hopf_identities(L, Suite::Mixed));
    if (dual) {
      attempt("dual-hopf", [&] {
        auto D = left_dual(L);
        Report R = check_uch(D.V, dual_hopf_structure(L, D));
        R.title = "left dual " + R.title;
        return R;
      });
    }
  }
  json j = write_bialgebroid(in.d, in.field, in.chirality);
  j["translation"] = maps;
  o.emitted = j;
  return o;
}

template <class S>
Outcome cmd_smash(const Input<S>& in, const std::string& r, bool right) {
  require_left(in, "smash");
  auto L = in.left();
  YDAlgebra<S> A = coefficients(in, r);
  Outcome o;
  if (right) {
    auto D = left_dual(L);
    auto X = smash_right(D.V, transport_braided_monoid(L, D, A));
    o.report.title = "V # R for V the left dual, R = " + r;
    o.report.note("rank", std::to_string(X.B.d.n()));
    o.report.sub.push_back(check_right_bialgebroid(X.B));
    if (X.translation) o.report.sub.push_back(check_uch(X.B, *X.translation));
    o.emitted = write_bialgebroid(X.B.d, in.field, "right");
  } else {
    auto X = smash_left(L, A);
    o.report.title = "R # U for R = " + r;
    o.report.note("rank", std::to_string(X.B.d.n()));
    o.report.sub.push_back(check_left_bialgebroid(X.B));
    if (X.translation) o.report.sub.push_back(check_tch(X.B, *X.translation));
    o.emitted = write_bialgebroid(X.B.d, in.field, "left");
  }
  return o;
}

template <class S>
Outcome cmd_eta(const Input<S>& in, const std::string& r) {
  require_left(in, "eta");
  auto W = verify_eta(in.left(), coefficients(in, r));
  Outcome o;
  o.report = W.report;
  o.report.note("rank", std::to_string(W.eta.rows()));
  o.emitted = write_bialgebroid(W.right.B.d, in.field, "right");
  return o;
}

template <class S>
Outcome cmd_recognize(const Input<S>& in, const std::string& r) {
  require_left(in, "recognize");
  auto W = in.left();
  YDAlgebra<S> A = coefficients(in, r);
  auto P = action_presentation(W, smash_left(W, A), A);
  auto rec = recognize_action(P.U, W, P.morphism, P.rho);
  Outcome o;
  o.report = rec.report;
  std::vector<std::string> failed;
  for (int c : rec.failed) failed.push_back(std::to_string(c));
  o.report.note("recognized", rec.recognized ? "yes" : "no");
  if (!failed.empty()) o.report.note("failed conditions", join(failed));
  if (rec.recognized) {
    json j = write_bialgebroid(W.d, in.field, "left");
    j["yd"]["recovered"] = write_yd_algebra(rec.base, W.d.n());
    o.emitted = j;
  }
  return o;
}

template <class S>
Outcome pipeline(const Options& opt, const Input<S>& in) {
  const std::string& c = opt.command;
  if (c == "check") return cmd_check(in);
  Report input = check_input(in);
  if (!input.pass()) {
    Outcome o;
    o.report = input;
    return o;
  }
  Outcome o;
  if (c == "dual") o = cmd_dual(in, opt.right);
  else if (c == "hopf") o = cmd_hopf(in, opt.right);
  else if (c == "smash") o = cmd_smash(in, opt.r, opt.right);
  else if (c == "weyl") o = cmd_smash(in, "weyl", opt.right);
  else if (c == "eta") o = cmd_eta(in, opt.r);
  else if (c == "recognize") o = cmd_recognize(in, opt.r);
  else throw FixtureError(c + " needs a truncated quantum fixture");
  o.report.sub.insert(o.report.sub.begin(), input);
  return o;
}

FieldDesc prime_field(uint32_t p) {
  FieldDesc f;
  f.kind = FieldKind::Prime;
  f.p = p;
  return f;
}

template <class S>
Input<S> classical_input(const json& j, const FieldDesc& f, const Options& opt) {
  Input<S> in;
  in.d = read_bialgebroid<S>(j, f);
  in.field = f;
  in.chirality = j.value("chirality", std::string("left"));
  if (opt.left) in.chirality = "left";
  if (opt.right && opt.command == "check") in.chirality = "right";
  in.block = [j, f, d = in.d](const std::string& name) {
    if (!j.contains("yd") || !j["yd"].contains(name)) throw FixtureError("no YD block named " + name);
    return read_yd_algebra<S>(j["yd"][name], f, d);
  };
  return in;
}

YDAlgebra<HPoly> truncated_block(const json& j, const TruncatedFormalBialgebroid& F, const std::string& name) {
  if (name == "trivial") return base_yd_algebra(LeftBialgebroid<HPoly>{F.d});
  if (!j.contains("yd") || !j["yd"].contains(name)) throw FixtureError("no YD block named " + name);
  return read_yd_algebra<HPoly>(j["yd"][name], read_field(j["field"]), F.d);
}

Outcome quantum(const Options& opt, const json& j) {
  TruncatedFormalBialgebroid F = read_truncated(j, opt.trunc);
  const std::string& c = opt.command;
  Outcome o;
  if (c == "check") {
    o.report = check_truncated(F);
    return o;
  }
  if (c == "vee" || c == "vee-smash") {
    Report input = check_truncated(F);
    input.title = "input " + input.title;
    if (!input.pass()) {
      o.report = input;
      return o;
    }
    if (c == "vee") {
      try {
        VeeResult V = drinfeld_vee(F);
        o.report = V.report;
        o.report.count("divisibility", V.certificates.size());
        for (const auto& cert : V.certificates) {
          std::string where;
          for (size_t w : cert.where) where += (where.empty() ? "" : ",") + std::to_string(w);
          o.report.note("certificate", cert.kind + "(" + where + "): h^" + std::to_string(cert.required) +
                                           " divides, order " + std::to_string(cert.order));
        }
        o.emitted = write_truncated(V.result);
      } catch (const DivisibilityViolation& e) {
        o.report.title = "F^∨";
        o.report.count("divisibility");
        o.report.fail("divisibility", e.kind, e.witness, "needs h^" + std::to_string(e.required));
      }
    } else {
      VeeSmash V = verify_vee_smash(F, truncated_block(j, F, opt.r));
      o.report = V.report;
      o.emitted = write_truncated(V.smash_of_vee);
    }
    o.report.sub.insert(o.report.sub.begin(), input);
    return o;
  }
  Input<Fp> in;
  in.d = materialize(F, F.N).d;
  in.field = prime_field(F.p);
  in.chirality = "left";
  in.block = [&j, &F](const std::string& name) { return materialize(F, truncated_block(j, F, name), F.N); };
  return pipeline(opt, in);
}

Outcome run(const Options& opt, const json& j) {
  FieldDesc f = read_field(j.value("field", json()));
  switch (f.kind) {
    case FieldKind::Rational: return pipeline(opt, classical_input<Rational>(j, f, opt));
    case FieldKind::Prime: return pipeline(opt, classical_input<Fp>(j, f, opt));
    case FieldKind::HPolynomial: return quantum(opt, j);
  }
  throw FixtureError("unknown field");
}

// The fixture re-serialized through its reader and writer, keeping unknown keys.
json canonical(const json& j) {
  FieldDesc f = read_field(j.value("field", json()));
  std::string chir = j.value("chirality", std::string("left"));
  json out = j;
  auto put = [&out](const json& x) {
    for (const auto& [k, v] : x.items()) out[k] = v;
  };
  auto blocks = [&](auto tag, const auto& d) {
    using S = decltype(tag);
    if (!j.contains("yd")) return;
    for (const auto& [k, v] : j["yd"].items()) out["yd"][k] = write_yd_algebra(read_yd_algebra<S>(v, f, d), d.n());
  };
  switch (f.kind) {
    case FieldKind::Rational: {
      auto d = read_bialgebroid<Rational>(j, f);
      put(write_bialgebroid(d, f, chir));
      blocks(Rational(), d);
      break;
    }
    case FieldKind::Prime: {
      auto d = read_bialgebroid<Fp>(j, f);
      put(write_bialgebroid(d, f, chir));
      blocks(Fp(0, f.p), d);
      break;
    }
    case FieldKind::HPolynomial: {
      auto F = read_truncated(j);
      put(write_truncated(F));
      blocks(HPoly(), F.d);
      break;
    }
  }
  return out;
}

std::string invocation(const Options& o) {
  std::string s = o.command;
  if (o.left) s += " --left";
  if (o.right) s += " --right";
  if (o.trunc) s += " --trunc " + std::to_string(*o.trunc);
  if (o.command != "check" && o.command != "dual" && o.command != "hopf" && o.command != "vee" &&
      o.command != "weyl")
    s += " --r " + o.r;
  return s;
}

void emit(const Options& opt, const std::string& digest_in, const Report& R, int code, const std::string& error,
          const std::string& out_digest) {
  if (opt.machine) {
    json j;
    j["command"] = invocation(opt);
    j["fixture"] = opt.path;
    j["digest"] = digest_in;
    j["exit"] = code;
    if (!error.empty()) j["error"] = error;
    if (!out_digest.empty()) j["emitted"] = {{"path", opt.out}, {"digest", out_digest}};
    if (error.empty() || code == AxiomFailure) j["report"] = R.json();
    std::cout << j.dump(1) << "\n";
    return;
  }
  std::cout << "command: " << invocation(opt) << "\n";
  std::cout << "fixture: " << opt.path << "\n";
  std::cout << "digest: " << digest_in << "\n";
  if (!error.empty()) std::cout << (code == Refused ? "refused: " : "error: ") << error << "\n";
  if (error.empty() || code == AxiomFailure) std::cout << R.text();
  if (!out_digest.empty()) std::cout << "emitted: " << opt.out << " (" << out_digest << ")\n";
  std::cout << "result: " << (code == Pass ? "pass" : code == AxiomFailure ? "fail" : "not run") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of bialgebroid, Hopf algebroid and smash product identities"};
  app.require_subcommand(1);
  Options opt;
  struct Spec {
    const char* name;
    const char* help;
    bool r;
  };
  const Spec specs[] = {
      {"check", "run the bialgebroid axiom suite on a fixture", false},
      {"dual", "construct the left (or --right) dual", false},
      {"hopf", "translation maps and their identities (--right adds the left dual)", false},
      {"smash", "the smash product R # U (or --right, U_* # R)", true},
      {"weyl", "the Weyl Hopf algebroid", false},
      {"eta", "the isomorphism between the dual of R # U and U_* # R", true},
      {"recognize", "recognize R # U as an action bialgebroid over U", true},
      {"vee", "the Drinfeld functor at truncation", false},
      {"vee-smash", "compare R # F^∨ with (R # F)^∨", true},
  };
  uint32_t trunc = 0;
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("fixture", opt.path, "fixture path")->required();
    auto* l = sub->add_flag("--left", opt.left, "left chirality");
    sub->add_flag("--right", opt.right, "right chirality")->excludes(l);
    sub->add_option("--trunc", trunc, "truncation order for quantum fixtures")->check(CLI::PositiveNumber);
    sub->add_option("-o", opt.out, "write the constructed fixture here");
    sub->add_flag("--machine", opt.machine, "machine-readable report");
    if (s.r) sub->add_option("--r", opt.r, "coefficients: a YD block name, weyl or trivial");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Pass : UsageError;
  }
  opt.command = app.get_subcommands().front()->get_name();
  if (trunc) opt.trunc = trunc;

  auto t0 = std::chrono::steady_clock::now();
  Report R;
  int code = Pass;
  std::string error, digest_in, out_digest;
  try {
    std::string bytes = read_text_file(opt.path);
    digest_in = digest(bytes);
    json j;
    try {
      j = json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
      throw FixtureError(opt.path + ": " + e.what());
    }
    Outcome o = run(opt, j);
    if (opt.command == "check" && o.report.pass()) o.emitted = canonical(j);
    R = o.report;
    code = R.pass() ? Pass : AxiomFailure;
    if (!opt.out.empty() && o.emitted) {
      std::string text = dump_fixture(*o.emitted);
      std::filesystem::path p(opt.out);
      if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
      write_text_file(opt.out, text);
      out_digest = digest(text);
    }
  } catch (const HypothesesUnmet& e) {
    code = Refused, error = e.what();
  } catch (const UncheckedSubstrate& e) {
    code = Refused, error = e.what();
  } catch (const NoDualBasis& e) {
    code = Refused, error = e.what();
  } catch (const NotHopf& e) {
    code = Refused, error = e.what();
  } catch (const DivisibilityViolation& e) {
    code = AxiomFailure, error = e.what();
  } catch (const std::exception& e) {
    code = UsageError, error = e.what();
  }
  emit(opt, digest_in, R, code, error, out_digest);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "wall time: " << ms << " ms\n";
  return code;
}
