#ifndef BIALG_HOPF_HPP
#define BIALG_HOPF_HPP

#include <stdexcept>
#include <string>

#include "bialg/bialgebroid.hpp"

namespace bialg {

enum class Galois { AlphaL, AlphaR, BetaL };

class ChiralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Singular Galois map; certificate is a nonzero kernel element (as a lift).
class NotHopf : public std::runtime_error {
 public:
  NotHopf(const std::string& what, std::string cert) : std::runtime_error(what), certificate(std::move(cert)) {}
  std::string certificate;
};

// Galois map between two quotient tensor spaces, with its lift and its matrix
// on the canonical quotient bases.
template <class S>
struct GaloisMap {
  Galois kind;
  TensorQuotient<S> dom, cod;
  TMap<S> lift;
  Mat<S> mat;
};

// u_+ ⊗ u_-, u_[+] ⊗ u_[-], v^[-] ⊗ v^[+] respectively.
enum class Flavor { LeftHopf, RightHopf, DualLeftHopf };

inline const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::LeftHopf: return "u_+ ⊗ u_-";
    case Flavor::RightHopf: return "u_[+] ⊗ u_[-]";
    case Flavor::DualLeftHopf: return "v^[-] ⊗ v^[+]";
  }
  return "?";
}

template <class S>
struct TranslationMap {
  Flavor flavor;
  TMap<S> map;  // u -> lift in U ⊗_k U
};

// ▶U ⊗_Aop U◁, U◀ ⊗_A ▷U and U◁ ⊗_A ▷U.
template <class S>
TensorQuotient<S> left_hopf_space(const BialgebroidData<S>& d) {
  return linked_space(d, 2, {{0, Act::BlkL, 1, Act::TriR}});
}

template <class S>
TensorQuotient<S> right_hopf_space(const BialgebroidData<S>& d) {
  return linked_space(d, 2, {{0, Act::BlkR, 1, Act::TriL}});
}

template <class S>
Mat<S> matrix_between(const TensorQuotient<S>& dom, const TensorQuotient<S>& cod, const TMap<S>& lift) {
  Mat<S> m(cod.dim(), dom.dim());
  for (size_t c = 0; c < dom.dim(); ++c)
    for (const auto& [i, x] : cod.project(sparse_apply(lift.cols, dom.section(c)))) m(i, c) = x;
  return m;
}

template <class S>
TMap<S> unit_tensor(const BialgebroidData<S>& d, bool unit_first) {
  size_t n = d.n();
  TMap<S> t{{n, n}, {}};
  SparseVec<S> one = to_sparse(d.U.unit);
  for (size_t u = 0; u < n; ++u) {
    SparseVec<S> col;
    for (const auto& [k, c] : one) col.emplace_back(unit_first ? k * n + u : u * n + k, c);
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    t.cols.push_back(std::move(col));
  }
  return t;
}

template <class S>
GaloisMap<S> galois_data(const BialgebroidData<S>& d, Galois kind) {
  size_t n = d.n();
  TMap<S> idU = tm_identity<S>(n);
  GaloisMap<S> G{kind, {}, {}, {}, {}};
  switch (kind) {
    case Galois::AlphaL:  // u ⊗ u' -> u_(1) ⊗ u_(2) u'
      G.dom = left_hopf_space(d);
      G.cod = left_coproduct_space(d);
      G.lift = tm_mul(tm_tensor(d.delta, idU), 1, 2, d.U);
      break;
    case Galois::AlphaR:  // u ⊗ u' -> u_(1) u' ⊗ u_(2)
      G.dom = right_hopf_space(d);
      G.cod = left_coproduct_space(d);
      G.lift = tm_mul(tm_tensor(d.delta, idU), 0, 2, d.U);
      break;
    case Galois::BetaL:  // v' ⊗ v -> v^(1) ⊗ v' v^(2)
      G.dom = right_hopf_space(d);
      G.cod = right_coproduct_space(d);
      G.lift = tm_permute(tm_mul(tm_tensor(idU, d.delta), 0, 2, d.U), {1, 0});
      break;
  }
  G.mat = matrix_between(G.dom, G.cod, G.lift);
  return G;
}

template <class S>
GaloisMap<S> galois_map(const LeftBialgebroid<S>& L, Galois kind) {
  if (kind == Galois::BetaL) throw ChiralityError("beta_l is defined for right bialgebroids");
  return galois_data(L.d, kind);
}

template <class S>
GaloisMap<S> galois_map(const RightBialgebroid<S>& V, Galois kind) {
  if (kind != Galois::BetaL) throw ChiralityError("alpha_l and alpha_r are defined for left bialgebroids");
  return galois_data(V.d, kind);
}

template <class S>
TranslationMap<S> translation_from(const BialgebroidData<S>& d, Galois kind) {
  GaloisMap<S> G = galois_data(d, kind);
  const char* gname = kind == Galois::AlphaL ? "alpha_l" : kind == Galois::AlphaR ? "alpha_r" : "beta_l";
  if (G.dom.dim() != G.cod.dim())
    throw NotHopf(std::string(gname) + " between spaces of different dimension",
                  std::to_string(G.dom.dim()) + " vs " + std::to_string(G.cod.dim()));
  Inversion<S> inv = invert(G.mat);
  if (!inv.inverse) {
    SparseVec<S> lift;
    for (size_t c = 0; c < inv.kernel_vector.size(); ++c)
      if (!inv.kernel_vector[c].is_zero()) lift = sparse_add(lift, G.dom.section(c), inv.kernel_vector[c]);
    throw NotHopf(std::string(gname) + " is singular", "kernel element " + sparse_str(lift));
  }
  TMap<S> target = unit_tensor(d, kind == Galois::AlphaR);
  TMap<S> section = G.dom.section_map();
  TranslationMap<S> T{kind == Galois::AlphaL   ? Flavor::LeftHopf
                      : kind == Galois::AlphaR ? Flavor::RightHopf
                                               : Flavor::DualLeftHopf,
                      {G.dom.dims(), {}}};
  for (size_t u = 0; u < d.n(); ++u) {
    Vec<S> y = *inv.inverse * G.cod.project_dense(target.cols[u]);
    T.map.cols.push_back(sparse_apply(section.cols, to_sparse(y)));
  }
  return T;
}

template <class S>
TranslationMap<S> translation_map(const LeftBialgebroid<S>& L, Flavor f) {
  if (f == Flavor::DualLeftHopf) throw ChiralityError("v^[-] ⊗ v^[+] lives on right bialgebroids");
  return translation_from(L.d, f == Flavor::LeftHopf ? Galois::AlphaL : Galois::AlphaR);
}

template <class S>
TranslationMap<S> translation_map(const RightBialgebroid<S>& V) {
  return translation_from(V.d, Galois::BetaL);
}

template <class S>
TMap<S> tm_concat(const std::vector<TMap<S>>& parts) {
  TMap<S> out{parts.at(0).dims, {}};
  for (const auto& p : parts) {
    if (p.dims != out.dims) throw ShapeError("tm_concat: shapes");
    out.cols.insert(out.cols.end(), p.cols.begin(), p.cols.end());
  }
  return out;
}

// Columns (a, u) -> ops_x[a] on factor fx of T(u), resp. ops_y[a] on fy.
template <class S>
std::pair<TMap<S>, TMap<S>> takeuchi_probe(const TMap<S>& T, size_t fx, const Ops<S>& ox, size_t fy,
                                           const Ops<S>& oy) {
  std::vector<TMap<S>> l, r;
  for (size_t a = 0; a < ox.size(); ++a) {
    l.push_back(tm_apply(T, fx, ox[a]));
    r.push_back(tm_apply(T, fy, oy[a]));
  }
  return {tm_concat(l), tm_concat(r)};
}

template <class S>
Witness au_witness(const BialgebroidData<S>& d, const std::string& var = "u") {
  size_t n = d.n();
  return [&d, n, var](size_t j) { return "(a," + var + ")=(" + d.base_label(j / n) + "," + d.label(j % n) + ")"; };
}

template <class S>
Witness base_pair_witness(const BialgebroidData<S>& d) {
  size_t nA = d.nA();
  return [&d, nA](size_t j) { return "(a,a')=(" + d.base_label(j / nA) + "," + d.base_label(j % nA) + ")"; };
}

template <class S>
Report check_sch(const LeftBialgebroid<S>& L, const TranslationMap<S>& Tl) {
  const auto& d = L.d;
  const TMap<S>& T = Tl.map;
  const TMap<S>& D = d.delta;
  Report R;
  R.title = "left Hopf identities" + (d.name.empty() ? "" : " " + d.name);
  auto Ql = left_hopf_space(d);
  auto Qc = left_coproduct_space(d);
  auto QU = plain_space<S>(d.n());
  auto bw = basis_witness(d);
  Ops<S> triR = action_ops(d, Act::TriR), blkL = action_ops(d, Act::BlkL);
  auto [l1, r1] = takeuchi_probe(T, 0, triR, 1, blkL);
  probe_equal(R, "Sch1", "u_+◁a ⊗ u_- = u_+ ⊗ a▶u_-", Ql, l1, r1, au_witness(d));
  probe_equal(R, "Sch2", "u_+(1) ⊗ u_+(2)u_- = u ⊗ 1", Qc, tm_mul(tm_apply(T, 0, D), 1, 2, d.U),
              unit_tensor(d, false), bw);
  probe_equal(R, "Sch3", "u_(1)+ ⊗ u_(1)-u_(2) = u ⊗ 1", Ql, tm_mul(tm_apply(D, 0, T), 1, 2, d.U),
              unit_tensor(d, false), bw);
  {
    auto Q = linked_space(d, 3, {{0, Act::TriR, 1, Act::TriL}, {1, Act::BlkL, 2, Act::TriR}});
    probe_equal(R, "Sch4", "u_+(1) ⊗ u_+(2) ⊗ u_- = u_(1) ⊗ u_(2)+ ⊗ u_(2)-", Q, tm_apply(T, 0, D),
                tm_apply(D, 1, T), bw);
  }
  {
    auto Q = linked_space(d, 3, {{0, Act::BlkL, 2, Act::TriR}, {1, Act::TriR, 2, Act::TriL}});
    probe_equal(R, "Sch5", "u_+ ⊗ u_-(1) ⊗ u_-(2) = u_++ ⊗ u_- ⊗ u_+-", Q, tm_apply(T, 1, D),
                tm_permute(tm_apply(T, 0, T), {0, 2, 1}), bw);
  }
  probe_equal(R, "Sch6", "(uv)_+ ⊗ (uv)_- = u_+v_+ ⊗ v_-u_-", Ql, tm_compose(T, mult_map(d.U)),
              tm_mul(tm_mul(tm_tensor(T, T), 0, 2, d.U), 2, 1, d.U), pair_witness(d));
  probe_equal(R, "Sch7", "u_+u_- = s(ε(u))", QU, tm_mul(T, 0, 1, d.U), tm_from_mat(d.s * d.eps), bw);
  probe_equal(R, "Sch8", "ε(u_-)▶u_+ = u", QU, tm_contract(T, 1, 0, d.eps, blkL), tm_identity<S>(d.n()), bw);
  probe_equal(R, "Sch9", "(s(a)t(a'))_+ ⊗ (s(a)t(a'))_- = s(a) ⊗ s(a')", Ql,
              tm_compose(T, products_of(d.U, d.s, d.t)), tm_tensor(tm_from_mat(d.s), tm_from_mat(d.s)),
              base_pair_witness(d));
  return R;
}

template <class S>
Report check_tch(const LeftBialgebroid<S>& L, const TranslationMap<S>& Tr) {
  const auto& d = L.d;
  const TMap<S>& T = Tr.map;
  const TMap<S>& D = d.delta;
  Report R;
  R.title = "right Hopf identities" + (d.name.empty() ? "" : " " + d.name);
  auto Qr = right_hopf_space(d);
  auto Qc = left_coproduct_space(d);
  auto QU = plain_space<S>(d.n());
  auto bw = basis_witness(d);
  Ops<S> triL = action_ops(d, Act::TriL), blkR = action_ops(d, Act::BlkR);
  auto [l1, r1] = takeuchi_probe(T, 0, triL, 1, blkR);
  probe_equal(R, "Tch1", "a▷u_[+] ⊗ u_[-] = u_[+] ⊗ u_[-]◀a", Qr, l1, r1, au_witness(d));
  probe_equal(R, "Tch2", "u_[+](1)u_[-] ⊗ u_[+](2) = 1 ⊗ u", Qc, tm_mul(tm_apply(T, 0, D), 0, 2, d.U),
              unit_tensor(d, true), bw);
  probe_equal(R, "Tch3", "u_(2)[+] ⊗ u_(2)[-]u_(1) = u ⊗ 1", Qr, tm_mul(tm_apply(D, 1, T), 2, 0, d.U),
              unit_tensor(d, false), bw);
  {
    auto Q = linked_space(d, 3, {{0, Act::TriR, 2, Act::TriL}, {0, Act::BlkR, 1, Act::TriL}});
    probe_equal(R, "Tch4", "u_[+](1) ⊗ u_[-] ⊗ u_[+](2) = u_(1)[+] ⊗ u_(1)[-] ⊗ u_(2)", Q,
                tm_permute(tm_apply(T, 0, D), {0, 2, 1}), tm_apply(D, 0, T), bw);
  }
  {
    auto Q = linked_space(d, 3, {{0, Act::BlkR, 1, Act::TriL}, {1, Act::TriR, 2, Act::TriL}});
    probe_equal(R, "Tch5", "u_[+][+] ⊗ u_[+][-] ⊗ u_[-] = u_[+] ⊗ u_[-](1) ⊗ u_[-](2)", Q, tm_apply(T, 0, T),
                tm_apply(T, 1, D), bw);
  }
  probe_equal(R, "Tch6", "(uv)_[+] ⊗ (uv)_[-] = u_[+]v_[+] ⊗ v_[-]u_[-]", Qr, tm_compose(T, mult_map(d.U)),
              tm_mul(tm_mul(tm_tensor(T, T), 0, 2, d.U), 2, 1, d.U), pair_witness(d));
  probe_equal(R, "Tch7", "u_[+]u_[-] = t(ε(u))", QU, tm_mul(T, 0, 1, d.U), tm_from_mat(d.t * d.eps), bw);
  probe_equal(R, "Tch8", "u_[+]◀ε(u_[-]) = u", QU, tm_contract(T, 1, 0, d.eps, blkR), tm_identity<S>(d.n()), bw);
  probe_equal(R, "Tch9", "(s(a)t(a'))_[+] ⊗ (s(a)t(a'))_[-] = t(a') ⊗ t(a)", Qr,
              tm_compose(T, products_of(d.U, d.s, d.t)),
              tm_permute(tm_tensor(tm_from_mat(d.t), tm_from_mat(d.t)), {1, 0}), base_pair_witness(d));
  return R;
}

template <class S>
Report check_mixed(const LeftBialgebroid<S>& L, const TranslationMap<S>& Tl, const TranslationMap<S>& Tr) {
  const auto& d = L.d;
  const TMap<S>& D = d.delta;
  Report R;
  R.title = "mixed Hopf identities" + (d.name.empty() ? "" : " " + d.name);
  auto bw = basis_witness(d);
  {
    auto Q = linked_space(d, 3, {{0, Act::BlkL, 1, Act::TriR}, {0, Act::BlkR, 2, Act::TriL}});
    probe_equal(R, "mampf1", "u_+[+] ⊗ u_- ⊗ u_+[-] = u_[+]+ ⊗ u_[+]- ⊗ u_[-]", Q,
                tm_permute(tm_apply(Tl.map, 0, Tr.map), {0, 2, 1}), tm_apply(Tr.map, 0, Tl.map), bw);
  }
  {
    auto Q = linked_space(d, 3, {{0, Act::BlkL, 1, Act::TriR}, {1, Act::BlkR, 2, Act::TriL}});
    probe_equal(R, "mampf2", "u_+ ⊗ u_-[+] ⊗ u_-[-] = u_(1)+ ⊗ u_(1)- ⊗ u_(2)", Q, tm_apply(Tl.map, 1, Tr.map),
                tm_apply(D, 0, Tl.map), bw);
  }
  {
    auto Q = linked_space(d, 3, {{0, Act::BlkR, 1, Act::TriL}, {1, Act::BlkL, 2, Act::TriR}});
    probe_equal(R, "mampf3", "u_[+] ⊗ u_[-]+ ⊗ u_[-]- = u_(2)[+] ⊗ u_(2)[-] ⊗ u_(1)", Q,
                tm_apply(Tr.map, 1, Tl.map), tm_permute(tm_apply(D, 1, Tr.map), {1, 2, 0}), bw);
  }
  return R;
}

template <class S>
Report check_uch(const RightBialgebroid<S>& V, const TranslationMap<S>& Tu) {
  const auto& d = V.d;
  const TMap<S>& T = Tu.map;
  const TMap<S>& D = d.delta;
  Report R;
  R.title = "left Hopf identities over a right bialgebroid" + (d.name.empty() ? "" : " " + d.name);
  auto Qu = right_hopf_space(d);
  auto Qrc = right_coproduct_space(d);
  auto QV = plain_space<S>(d.n());
  auto bw = basis_witness(d, "v");
  Ops<S> triL = action_ops(d, Act::TriL), blkR = action_ops(d, Act::BlkR);
  auto [l1, r1] = takeuchi_probe(T, 0, triL, 1, blkR);
  probe_equal(R, "Uch1", "b▷v^[-] ⊗ v^[+] = v^[-] ⊗ v^[+]◀b", Qu, l1, r1, au_witness(d, "v"));
  probe_equal(R, "Uch2", "v^[+](1) ⊗ v^[-]v^[+](2) = v ⊗ 1", Qrc,
              tm_permute(tm_mul(tm_apply(T, 1, D), 0, 2, d.U), {1, 0}), unit_tensor(d, false), bw);
  probe_equal(R, "Uch3", "v^(2)v^(1)[-] ⊗ v^(1)[+] = 1 ⊗ v", Qu,
              tm_permute(tm_mul(tm_apply(D, 0, T), 2, 0, d.U), {1, 0}), unit_tensor(d, true), bw);
  {
    auto Q = linked_space(d, 3, {{0, Act::BlkR, 2, Act::BlkL}, {1, Act::BlkR, 2, Act::TriL}});
    probe_equal(R, "Uch4", "v^(1) ⊗ v^(2)[-] ⊗ v^(2)[+] = v^[+](1) ⊗ v^[-] ⊗ v^[+](2)", Q, tm_apply(D, 1, T),
                tm_permute(tm_apply(T, 1, D), {1, 0, 2}), bw);
  }
  {
    auto Q = linked_space(d, 3, {{0, Act::BlkR, 1, Act::BlkL}, {1, Act::BlkR, 2, Act::TriL}});
    probe_equal(R, "Uch5", "v^[-](1) ⊗ v^[-](2) ⊗ v^[+] = v^[-] ⊗ v^[+][-] ⊗ v^[+][+]", Q, tm_apply(T, 0, D),
                tm_apply(T, 1, T), bw);
  }
  probe_equal(R, "Uch6", "(vw)^[-] ⊗ (vw)^[+] = w^[-]v^[-] ⊗ v^[+]w^[+]", Qu, tm_compose(T, mult_map(d.U)),
              tm_permute(tm_mul(tm_mul(tm_tensor(T, T), 2, 0, d.U), 0, 2, d.U), {1, 0}), pair_witness(d, "v", "w"));
  probe_equal(R, "Uch7", "v^[-]v^[+] = t(∂(v))", QV, tm_mul(T, 0, 1, d.U), tm_from_mat(d.t * d.eps), bw);
  probe_equal(R, "Uch8", "v^[+]◀∂(v^[-]) = v", QV, tm_contract(T, 0, 1, d.eps, blkR), tm_identity<S>(d.n()), bw);
  probe_equal(R, "Uch9", "(s(b)t(b'))^[-] ⊗ (s(b)t(b'))^[+] = t(b) ⊗ t(b')", Qu,
              tm_compose(T, products_of(d.U, d.s, d.t)), tm_tensor(tm_from_mat(d.t), tm_from_mat(d.t)),
              base_pair_witness(d));
  return R;
}

enum class Suite { Sch, Tch, Mixed, Uch };

template <class S>
Report verify_hopf_identities(const LeftBialgebroid<S>& L, Suite suite) {
  switch (suite) {
    case Suite::Sch: return check_sch(L, translation_map(L, Flavor::LeftHopf));
    case Suite::Tch: return check_tch(L, translation_map(L, Flavor::RightHopf));
    case Suite::Mixed:
      return check_mixed(L, translation_map(L, Flavor::LeftHopf), translation_map(L, Flavor::RightHopf));
    case Suite::Uch: break;
  }
  throw ChiralityError("the Uch suite concerns right bialgebroids");
}

template <class S>
Report verify_hopf_identities(const RightBialgebroid<S>& V, Suite suite) {
  if (suite != Suite::Uch) throw ChiralityError("Sch, Tch and mixed suites concern left bialgebroids");
  return check_uch(V, translation_map(V));
}

}  // namespace bialg

#endif
