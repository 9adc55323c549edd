#ifndef BIALG_YD_HPP
#define BIALG_YD_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "bialg/comodule.hpp"
#include "bialg/duals.hpp"

namespace bialg {

class UncheckedSubstrate : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// LeftLeft and LeftRight live over left bialgebroids, RightLeft over right ones.
enum class YDFlavor { LeftLeft, LeftRight, RightLeft };

inline const char* flavor_name(YDFlavor f) {
  switch (f) {
    case YDFlavor::LeftLeft: return "left-left";
    case YDFlavor::LeftRight: return "left-right";
    case YDFlavor::RightLeft: return "right-left";
  }
  return "?";
}

template <class S>
struct YDModule {
  YDFlavor flavor = YDFlavor::LeftRight;
  UModule<S> module;
  UComodule<S> comodule;
  bool verified = false;

  size_t dim() const { return module.dim; }
};

template <class S>
struct YDAlgebra {
  YDModule<S> M;
  Algebra<S> R;
  bool braided = true;  // probe braided commutativity
  bool verified = false;
};

namespace detail {

inline void expect_flavor(YDFlavor got, std::initializer_list<YDFlavor> allowed, const char* owner) {
  for (YDFlavor f : allowed)
    if (f == got) return;
  throw ChiralityError(std::string(flavor_name(got)) + " YD modules do not live over " + owner);
}

template <class S>
void expect_shapes(const YDModule<S>& Y, size_t n) {
  if (Y.module.act.size() != n) throw ShapeError("YD module: one operator per basis element expected");
  if (Y.comodule.dim != Y.module.dim) throw ShapeError("YD module: action and coaction on different spaces");
  bool right_mod = Y.flavor == YDFlavor::RightLeft;
  CoSide side = Y.flavor == YDFlavor::LeftRight ? CoSide::Right : CoSide::Left;
  if (Y.module.right != right_mod || Y.comodule.side != side) throw ChiralityError("YD module sides disagree with its flavor");
}

template <class S>
void compare_ops(Report& R, const std::string& axiom, const std::string& probe, const Ops<S>& got,
                 const Ops<S>& want, const BialgebroidData<S>& d) {
  R.count(axiom, got.size());
  for (size_t a = 0; a < got.size(); ++a)
    if (got[a] != want[a]) R.fail(axiom, probe, "a=" + d.base_label(a));
}

template <class S>
Ops<S> ops_along(const UModule<S>& M, const Mat<S>& map) {
  Ops<S> out;
  for (size_t a = 0; a < map.cols(); ++a) out.push_back(M.op(map.col(a)));
  return out;
}

template <class S>
TMap<S> identity_pair(size_t d) {
  TMap<S> T{{d, d}, {}};
  for (size_t i = 0; i < d * d; ++i) T.cols.push_back({{i, S(1)}});
  return T;
}

}  // namespace detail

template <class S>
Report check_yd(const LeftBialgebroid<S>& U, const YDModule<S>& Y) {
  detail::expect_flavor(Y.flavor, {YDFlavor::LeftLeft, YDFlavor::LeftRight}, "left bialgebroids");
  const auto& d = U.d;
  detail::expect_shapes(Y, d.n());
  size_t dm = Y.dim();
  Report R;
  R.title = std::string(flavor_name(Y.flavor)) + " YD module";
  R.merge(check_module(d.U, Y.module));
  R.merge(check_comodule(U, Y.comodule), "comodule ");

  const UComodule<S>& C = Y.comodule;
  Ops<S> s = detail::ops_along(Y.module, d.s), t = detail::ops_along(Y.module, d.t);
  Ops<S> ind = induced_action(U, C);
  bool lr = Y.flavor == YDFlavor::LeftRight;
  R.axiom("forgetful");
  detail::compare_ops(R, "forgetful", "a ▷ m = am", lr ? ind : C.base, s, d);
  detail::compare_ops(R, "forgetful", "m ◁ a = ma", lr ? C.base : ind, t, d);

  TMap<S> act = action_map(Y.module);
  auto um = [&d, &Y, dm](size_t j) { return "(u,m)=(" + d.label(j / dm) + "," + Y.module.label(j % dm) + ")"; };
  TensorQuotient<S> Q = coaction_space(U, C);
  TMap<S> pair = tm_tensor(d.delta, tm_identity<S>(dm));
  if (lr) {
    // u_(1) m_[0] ⊗ u_(2) m_[1] = (u_(2) m)_[0] ⊗ (u_(2) m)_[1] u_(1)
    TMap<S> lhs = tm_bilinear(tm_mul(tm_tensor(d.delta, C.coaction), 1, 3, d.U), 0, 2, act);
    TMap<S> rhs = tm_mul(tm_apply(tm_bilinear(pair, 1, 2, act), 1, C.coaction), 2, 0, d.U);
    probe_equal(R, "yd", "u_(1)m_[0] ⊗ u_(2)m_[1] = (u_(2)m)_[0] ⊗ (u_(2)m)_[1]u_(1)", Q, lhs, rhs, um);
  } else {
    // u_(1) m_(-1) ⊗ u_(2) m_(0) = (u_(1) m)_(-1) u_(2) ⊗ (u_(1) m)_(0)
    TMap<S> lhs = tm_bilinear(tm_mul(tm_tensor(d.delta, C.coaction), 0, 2, d.U), 1, 2, act);
    TMap<S> rhs = tm_mul(tm_apply(tm_bilinear(pair, 0, 2, act), 0, C.coaction), 0, 2, d.U);
    probe_equal(R, "yd", "u_(1)m_(-1) ⊗ u_(2)m_(0) = (u_(1)m)_(-1)u_(2) ⊗ (u_(1)m)_(0)", Q, lhs, rhs, um);
  }
  return R;
}

template <class S>
Report check_yd(const RightBialgebroid<S>& V, const YDModule<S>& Y) {
  detail::expect_flavor(Y.flavor, {YDFlavor::RightLeft}, "right bialgebroids");
  const auto& d = V.d;
  detail::expect_shapes(Y, d.n());
  size_t dm = Y.dim();
  Report R;
  R.title = "right-left YD module";
  R.merge(check_module(d.U, Y.module));
  R.merge(check_comodule(V, Y.comodule), "comodule ");

  const UComodule<S>& C = Y.comodule;
  Ops<S> s = detail::ops_along(Y.module, d.s), t = detail::ops_along(Y.module, d.t);
  R.axiom("forgetful");
  detail::compare_ops(R, "forgetful", "b ▶ m = bm", C.base, t, d);
  detail::compare_ops(R, "forgetful", "m ◀ b = mb", induced_action(V, C), s, d);

  // m^(-1) v^(1) ⊗ m^(0) v^(2) = v^(2) (m v^(1))^(-1) ⊗ (m v^(1))^(0)
  TMap<S> act = action_map(Y.module);
  TMap<S> lhs = tm_bilinear(tm_mul(tm_tensor(d.delta, C.coaction), 2, 0, d.U), 2, 0, act);
  TMap<S> rhs = tm_mul(tm_apply(tm_bilinear(tm_tensor(d.delta, tm_identity<S>(dm)), 2, 0, act), 1, C.coaction), 0, 1, d.U);
  auto vm = [&d, &Y, dm](size_t j) { return "(v,m)=(" + d.label(j / dm) + "," + Y.module.label(j % dm) + ")"; };
  probe_equal(R, "yd", "m^(-1)v^(1) ⊗ m^(0)v^(2) = v^(2)(mv^(1))^(-1) ⊗ (mv^(1))^(0)", coaction_space(V, C), lhs,
              rhs, vm);
  return R;
}

// Runs check_yd and records the outcome in the verified flag.
template <class B, class S>
Report verify_yd(const B& owner, YDModule<S>& Y) {
  Report R = check_yd(owner, Y);
  Y.verified = R.pass();
  return R;
}

namespace detail {

template <class S>
struct MonoidProbes {
  size_t dm;
  TMap<S> mult;
  std::function<std::string(size_t)> pair;
};

template <class S>
MonoidProbes<S> monoid_probes(const YDAlgebra<S>& R) {
  size_t dm = R.M.dim();
  if (R.R.n != dm) throw ShapeError("YD algebra: product on a different space");
  const UModule<S>& M = R.M.module;
  MonoidProbes<S> P{dm, TMap<S>{{dm}, R.R.table}, {}};
  P.pair = [&M, dm](size_t j) { return "(r,r')=(" + M.label(j / dm) + "," + M.label(j % dm) + ")"; };
  return P;
}

// The three base identities x(rr') = (xr)r', (rr')y = r(r'y), (ry)r' = r(xr'),
// with x the left and y the right base action.
template <class S>
void check_base_identities(Report& Rep, const MonoidProbes<S>& P, const Ops<S>& left, const Ops<S>& right,
                           const BialgebroidData<S>& d) {
  size_t dm = P.dm, nA = left.size();
  auto stackL = [&](bool after, bool right_slot, const Ops<S>& ops) {
    TMap<S> out{{dm}, {}};
    for (size_t a = 0; a < nA; ++a) {
      TMap<S> id2 = identity_pair<S>(dm);
      TMap<S> F = after ? tm_compose(tm_from_mat(ops[a]), P.mult) : tm_bilinear(tm_apply(id2, right_slot ? 1 : 0, ops[a]), 0, 1, P.mult);
      for (auto& c : F.cols) out.cols.push_back(std::move(c));
    }
    return out;
  };
  auto wit = [&d, &P, dm](size_t j) { return "a=" + d.base_label(j / (dm * dm)) + ", " + P.pair(j % (dm * dm)); };
  TensorQuotient<S> plain = plain_space<S>(dm);
  probe_equal(Rep, "monoid-base", "a(rr') = (ar)r'", plain, stackL(true, false, left), stackL(false, false, left), wit);
  probe_equal(Rep, "monoid-base", "(rr')a = r(r'a)", plain, stackL(true, false, right), stackL(false, true, right), wit);
  probe_equal(Rep, "monoid-base", "(ra)r' = r(ar')", plain, stackL(false, false, right), stackL(false, true, left), wit);
}

}  // namespace detail

// Monoid in the YD category, plus braided commutativity when R.braided is set.
template <class S>
Report check_braided_commutative(const LeftBialgebroid<S>& U, const YDAlgebra<S>& A) {
  detail::expect_flavor(A.M.flavor, {YDFlavor::LeftRight}, "left bialgebroids as monoids");
  if (!A.M.verified) throw UncheckedSubstrate("YD module not verified; run verify_yd first");
  const auto& d = U.d;
  auto P = detail::monoid_probes(A);
  size_t dm = P.dm, n = d.n();
  const UModule<S>& M = A.M.module;
  const UComodule<S>& C = A.M.comodule;
  TMap<S> act = action_map(M);
  Report R;
  R.title = "braided commutative monoid in left-right YD modules";
  for (const auto& x : algebra_defects(A.R)) R.fail("algebra", x.law, "basis element " + std::to_string(x.basis[0]));
  R.count("algebra", dm * dm * dm);

  TensorQuotient<S> plain = plain_space<S>(dm);
  // u(rr') = (u_(1) r)(u_(2) r')
  {
    TMap<S> lhs = tm_compose(act, tm_tensor(tm_identity<S>(n), P.mult));
    TMap<S> T = tm_tensor(d.delta, detail::identity_pair<S>(dm));
    TMap<S> rhs = tm_bilinear(tm_bilinear(tm_bilinear(T, 0, 2, act), 1, 2, act), 0, 1, P.mult);
    auto w = [&d, &M, dm](size_t j) {
      return "(u,r,r')=(" + d.label(j / (dm * dm)) + "," + M.label(j / dm % dm) + "," + M.label(j % dm) + ")";
    };
    probe_equal(R, "monoid-module", "u(rr') = (u_(1)r)(u_(2)r')", plain, lhs, rhs, w);
    TMap<S> l1{{dm}, {}}, r1{{dm}, {}};
    for (size_t u = 0; u < n; ++u) {
      l1.cols.push_back(to_sparse(M.act[u] * A.R.unit));
      r1.cols.push_back(to_sparse(M.op(d.src(d.eps.col(u))) * A.R.unit));
    }
    probe_equal(R, "monoid-module", "u1 = ε(u) ▷ 1", plain, l1, r1, basis_witness(d));
  }
  detail::check_base_identities(R, P, detail::ops_along(M, d.s), detail::ops_along(M, d.t), d);

  TensorQuotient<S> Q = coaction_space(U, C);
  {
    // ρ(rr') = r_[0] r'_[0] ⊗ r'_[1] r_[1]
    TMap<S> lhs = tm_compose(C.coaction, P.mult);
    TMap<S> rhs = tm_bilinear(tm_mul(tm_tensor(C.coaction, C.coaction), 3, 1, d.U), 0, 1, P.mult);
    probe_equal(R, "monoid-comodule", "ρ(rr') = r_[0]r'_[0] ⊗ r'_[1]r_[1]", Q, lhs, rhs, P.pair);
    TMap<S> l1{{dm, n}, {sparse_apply(C.coaction.cols, to_sparse(A.R.unit))}};
    TMap<S> r1{{dm, n}, {tm_tensor(TMap<S>{{dm}, {to_sparse(A.R.unit)}}, TMap<S>{{n}, {to_sparse(d.U.unit)}}).cols[0]}};
    probe_equal(R, "monoid-comodule", "ρ(1) = 1 ⊗ 1", Q, l1, r1, [](size_t) { return std::string("1"); });
  }
  if (A.braided) {
    // rr' = r'_[0] (r'_[1] r)
    TMap<S> rhs = tm_bilinear(tm_bilinear(tm_tensor(tm_identity<S>(dm), C.coaction), 2, 0, act), 0, 1, P.mult);
    probe_equal(R, "braided-commutative", "rr' = r'_[0](r'_[1]r)", plain, P.mult, rhs, P.pair);
  }
  return R;
}

template <class S>
Report check_braided_commutative(const RightBialgebroid<S>& V, const YDAlgebra<S>& A) {
  detail::expect_flavor(A.M.flavor, {YDFlavor::RightLeft}, "right bialgebroids");
  if (!A.M.verified) throw UncheckedSubstrate("YD module not verified; run verify_yd first");
  const auto& d = V.d;
  auto P = detail::monoid_probes(A);
  size_t dm = P.dm, n = d.n();
  const UModule<S>& M = A.M.module;
  const UComodule<S>& C = A.M.comodule;
  TMap<S> act = action_map(M);
  Report R;
  R.title = "braided commutative monoid in right-left YD modules";
  for (const auto& x : algebra_defects(A.R)) R.fail("algebra", x.law, "basis element " + std::to_string(x.basis[0]));
  R.count("algebra", dm * dm * dm);

  TensorQuotient<S> plain = plain_space<S>(dm);
  {
    // (rr')v = (r v^(1))(r' v^(2))
    TMap<S> lhs = tm_compose(act, tm_tensor(P.mult, tm_identity<S>(n)));
    TMap<S> T = tm_tensor(detail::identity_pair<S>(dm), d.delta);
    TMap<S> rhs = tm_bilinear(tm_bilinear(tm_bilinear(T, 0, 2, act), 1, 2, act), 0, 1, P.mult);
    auto w = [&d, &M, dm, n](size_t j) {
      return "(r,r',v)=(" + M.label(j / (dm * n)) + "," + M.label(j / n % dm) + "," + d.label(j % n) + ")";
    };
    probe_equal(R, "monoid-module", "(rr')v = (rv^(1))(r'v^(2))", plain, lhs, rhs, w);
    TMap<S> l1{{dm}, {}}, r1{{dm}, {}};
    for (size_t v = 0; v < n; ++v) {
      l1.cols.push_back(to_sparse(M.act[v] * A.R.unit));
      r1.cols.push_back(to_sparse(M.op(d.src(d.eps.col(v))) * A.R.unit));
    }
    probe_equal(R, "monoid-module", "1v = 1 ◀ ∂(v)", plain, l1, r1, basis_witness(d, "v"));
  }
  detail::check_base_identities(R, P, detail::ops_along(M, d.t), detail::ops_along(M, d.s), d);

  TensorQuotient<S> Q = coaction_space(V, C);
  {
    // λ(rr') = r'^(-1) r^(-1) ⊗ r^(0) r'^(0)
    TMap<S> lhs = tm_compose(C.coaction, P.mult);
    TMap<S> t = tm_bilinear(tm_mul(tm_tensor(C.coaction, C.coaction), 2, 0, d.U), 0, 2, P.mult);
    TMap<S> rhs = tm_permute(t, {1, 0});
    probe_equal(R, "monoid-comodule", "λ(rr') = r'^(-1)r^(-1) ⊗ r^(0)r'^(0)", Q, lhs, rhs, P.pair);
    TMap<S> l1{{n, dm}, {sparse_apply(C.coaction.cols, to_sparse(A.R.unit))}};
    TMap<S> r1{{n, dm}, {tm_tensor(TMap<S>{{n}, {to_sparse(d.U.unit)}}, TMap<S>{{dm}, {to_sparse(A.R.unit)}}).cols[0]}};
    probe_equal(R, "monoid-comodule", "λ(1) = 1 ⊗ 1", Q, l1, r1, [](size_t) { return std::string("1"); });
  }
  if (A.braided) {
    // rr' = (r' r^(-1)) r^(0)
    TMap<S> rhs = tm_bilinear(tm_bilinear(tm_tensor(C.coaction, tm_identity<S>(dm)), 2, 0, act), 1, 0, P.mult);
    probe_equal(R, "braided-commutative", "rr' = (r'r^(-1))r^(0)", plain, P.mult, rhs, P.pair);
  }
  return R;
}

template <class B, class S>
Report verify_braided_commutative(const B& owner, YDAlgebra<S>& A) {
  Report R = check_braided_commutative(owner, A);
  A.verified = R.pass();
  return R;
}

// Replaces the coaction by the canonical lift of its class in the coaction space.
template <class B, class S>
UComodule<S> canonical_coaction(const B& owner, UComodule<S> C) {
  TensorQuotient<S> Q = coaction_space(owner, C);
  C.coaction = tm_compose(Q.section_map(), tm_from_mat(Q.project_map(C.coaction)));
  return C;
}

template <class B, class S>
bool same_coaction(const B& owner, const UComodule<S>& C, const UComodule<S>& D) {
  if (C.side != D.side || C.dim != D.dim || C.base != D.base) return false;
  return compare_in(coaction_space(owner, C), C.coaction, D.coaction).empty();
}

namespace detail {

// m_[0] ⊗ m_[1]  ->  m_[1]- ⊗ m_[0] ε(m_[1]+)
template <class S>
UComodule<S> right_to_left(const LeftBialgebroid<S>& U, const UComodule<S>& C, const TranslationMap<S>& Tl) {
  UComodule<S> out;
  out.side = CoSide::Left;
  out.dim = C.dim;
  out.labels = C.labels;
  out.base = induced_action(U, C);
  out.coaction = tm_permute(tm_contract(tm_apply(C.coaction, 1, Tl.map), 1, 0, U.d.eps, C.base), {1, 0});
  return canonical_coaction(U, out);
}

// m_(-1) ⊗ m_(0)  ->  ε(m_(-1)[+]) m_(0) ⊗ m_(-1)[-]
template <class S>
UComodule<S> left_to_right(const LeftBialgebroid<S>& U, const UComodule<S>& C, const TranslationMap<S>& Tr) {
  UComodule<S> out;
  out.side = CoSide::Right;
  out.dim = C.dim;
  out.labels = C.labels;
  out.base = induced_action(U, C);
  out.coaction = tm_permute(tm_contract(tm_apply(C.coaction, 0, Tr.map), 0, 2, U.d.eps, C.base), {1, 0});
  return canonical_coaction(U, out);
}

}  // namespace detail

// Right comodules to left ones and back over a left and right Hopf algebroid.
// Both translation maps are required; the reverse transport is computed as well
// and must give back the input.
template <class S>
UComodule<S> transport_coaction(const LeftBialgebroid<S>& U, const UComodule<S>& C) {
  Report in = check_comodule(U, C);
  if (!in.pass()) throw std::invalid_argument("transport_coaction: input is not a comodule:\n" + in.text());
  TranslationMap<S> Tl = translation_map(U, Flavor::LeftHopf);
  TranslationMap<S> Tr = translation_map(U, Flavor::RightHopf);
  bool to_left = C.side == CoSide::Right;
  UComodule<S> out = to_left ? detail::right_to_left(U, C, Tl) : detail::left_to_right(U, C, Tr);
  UComodule<S> back = to_left ? detail::left_to_right(U, out, Tr) : detail::right_to_left(U, out, Tl);
  if (!same_coaction(U, back, C)) throw std::logic_error("transport_coaction: the two transports are not mutually inverse");
  return out;
}

// Left-right YD modules to left-left ones and back; the action is unchanged.
template <class S>
YDModule<S> transport_yd(const LeftBialgebroid<S>& U, const YDModule<S>& Y) {
  detail::expect_flavor(Y.flavor, {YDFlavor::LeftLeft, YDFlavor::LeftRight}, "left bialgebroids");
  YDModule<S> out = Y;
  out.comodule = transport_coaction(U, Y.comodule);
  out.flavor = Y.flavor == YDFlavor::LeftRight ? YDFlavor::LeftLeft : YDFlavor::LeftRight;
  out.verified = false;
  return out;
}

// Right U-comodule -> right U_*-module, mψ = m_[0] ⟨ψ, m_[1]⟩.
template <class S>
UModule<S> comodule_to_dual_module(const LeftBialgebroid<S>& U, const Dual<S>& D, const UComodule<S>& C) {
  if (C.side != CoSide::Right) throw ChiralityError("a right comodule is needed");
  detail::validate(U.d, C);
  UModule<S> M;
  M.right = true;
  M.dim = C.dim;
  M.labels = C.labels;
  for (size_t x = 0; x < D.P.dim(); ++x) M.act.push_back(tm_to_mat(tm_contract(C.coaction, 1, 0, D.P.eval[x], C.base)));
  return M;
}

// Right U_*-module -> right U-comodule, m -> Σ_j m e^j ⊗ e_j.
template <class S>
UComodule<S> dual_module_to_comodule(const LeftBialgebroid<S>& U, const Dual<S>& D, const UModule<S>& M) {
  if (!M.right) throw ChiralityError("a right module over the left dual is needed");
  const auto& d = U.d;
  UComodule<S> C;
  C.side = CoSide::Right;
  C.dim = M.dim;
  C.labels = M.labels;
  C.base = detail::ops_along(M, D.V.d.s);
  C.coaction = TMap<S>{{M.dim, d.n()}, std::vector<SparseVec<S>>(M.dim)};
  for (size_t j = 0; j < D.P.r; ++j) {
    Mat<S> op = M.op(D.P.dual_basis.col(j));
    TMap<S> part = tm_tensor(tm_from_mat(op), TMap<S>{{d.n()}, {to_sparse(D.P.basis.col(j))}});
    for (size_t m = 0; m < M.dim; ++m) C.coaction.cols[m] = sparse_add(C.coaction.cols[m], part.cols[m]);
  }
  return canonical_coaction(U, C);
}

// Left U-module -> left U_*-comodule, m -> Σ_j e^j ⊗ e_j m.
template <class S>
UComodule<S> module_to_dual_comodule(const LeftBialgebroid<S>& U, const Dual<S>& D, const UModule<S>& M) {
  if (M.right) throw ChiralityError("a left module is needed");
  size_t nd = D.P.dim();
  UComodule<S> C;
  C.side = CoSide::Left;
  C.dim = M.dim;
  C.labels = M.labels;
  C.base = detail::ops_along(M, U.d.s);
  C.coaction = TMap<S>{{nd, M.dim}, std::vector<SparseVec<S>>(M.dim)};
  for (size_t j = 0; j < D.P.r; ++j) {
    Mat<S> op = M.op(D.P.basis.col(j));
    TMap<S> part = tm_tensor(TMap<S>{{nd}, {to_sparse(D.P.dual_basis.col(j))}}, tm_from_mat(op));
    for (size_t m = 0; m < M.dim; ++m) C.coaction.cols[m] = sparse_add(C.coaction.cols[m], part.cols[m]);
  }
  return canonical_coaction(D.V, C);
}

// Left U_*-comodule -> left U-module, um = ⟨m^(-1), u⟩ m^(0).
template <class S>
UModule<S> dual_comodule_to_module(const LeftBialgebroid<S>& U, const Dual<S>& D, const UComodule<S>& C) {
  if (C.side != CoSide::Left) throw ChiralityError("a left comodule over the left dual is needed");
  detail::validate(D.V.d, C);
  const auto& d = U.d;
  size_t nd = D.P.dim();
  UModule<S> M;
  M.dim = C.dim;
  M.labels = C.labels;
  for (size_t u = 0; u < d.n(); ++u) {
    Mat<S> at(d.nA(), nd);
    for (size_t x = 0; x < nd; ++x) at.set_col(x, D.P.eval[x].col(u));
    M.act.push_back(tm_to_mat(tm_contract(C.coaction, 0, 1, at, C.base)));
  }
  return M;
}

// Left U-module -> right U^*-comodule, m -> Σ_i f_i m ⊗ f^i over the dual basis of U◁.
template <class S>
UComodule<S> module_to_right_dual_comodule(const LeftBialgebroid<S>& U, const Dual<S>& Dr, const UModule<S>& M) {
  if (M.right) throw ChiralityError("a left module is needed");
  if (Dr.P.side != DualPairing<S>::Side::Right) throw ChiralityError("the right dual is needed");
  size_t nd = Dr.P.dim();
  UComodule<S> C;
  C.side = CoSide::Right;
  C.dim = M.dim;
  C.labels = M.labels;
  C.base = detail::ops_along(M, U.d.t);
  C.coaction = TMap<S>{{M.dim, nd}, std::vector<SparseVec<S>>(M.dim)};
  for (size_t i = 0; i < Dr.P.r; ++i) {
    Mat<S> op = M.op(Dr.P.basis.col(i));
    TMap<S> part = tm_tensor(tm_from_mat(op), TMap<S>{{nd}, {to_sparse(Dr.P.dual_basis.col(i))}});
    for (size_t m = 0; m < M.dim; ++m) C.coaction.cols[m] = sparse_add(C.coaction.cols[m], part.cols[m]);
  }
  return canonical_coaction(Dr.V, C);
}

// Right U^*-comodule -> left U_*-comodule, m -> Σ_j e^j ⊗ m^[0] ⟨m^[1], e_j⟩.
template <class S>
UComodule<S> right_dual_comodule_to_dual_comodule(const Dual<S>& Dl, const Dual<S>& Dr, const UComodule<S>& C) {
  if (C.side != CoSide::Right) throw ChiralityError("a right comodule over the right dual is needed");
  detail::validate(Dr.V.d, C);
  size_t nA = Dl.P.nA, nd = Dl.P.dim(), nr = Dr.P.dim();
  UComodule<S> out;
  out.side = CoSide::Left;
  out.dim = C.dim;
  out.labels = C.labels;
  out.base = induced_action(Dr.V, C);
  out.coaction = TMap<S>{{nd, C.dim}, std::vector<SparseVec<S>>(C.dim)};
  for (size_t j = 0; j < Dl.P.r; ++j) {
    Vec<S> ej = Dl.P.basis.col(j);
    Mat<S> at(nA, nr);
    for (size_t x = 0; x < nr; ++x) at.set_col(x, Dr.P.eval[x] * ej);
    Mat<S> op = tm_to_mat(tm_contract(C.coaction, 1, 0, at, C.base));
    TMap<S> part = tm_tensor(TMap<S>{{nd}, {to_sparse(Dl.P.dual_basis.col(j))}}, tm_from_mat(op));
    for (size_t m = 0; m < C.dim; ++m) out.coaction.cols[m] = sparse_add(out.coaction.cols[m], part.cols[m]);
  }
  return canonical_coaction(Dl.V, out);
}

// A braided commutative monoid in left-right YD modules over U becomes one in
// right-left YD modules over U_*, and back.  Product and unit are kept verbatim.
template <class S>
YDAlgebra<S> transport_braided_monoid(const LeftBialgebroid<S>& U, const Dual<S>& D, const YDAlgebra<S>& A) {
  detail::expect_flavor(A.M.flavor, {YDFlavor::LeftRight}, "left bialgebroids as monoids");
  if (!A.verified) throw UncheckedSubstrate("braided commutative monoid not verified");
  YDAlgebra<S> out = A;
  out.M.flavor = YDFlavor::RightLeft;
  out.M.module = comodule_to_dual_module(U, D, A.M.comodule);
  out.M.comodule = module_to_dual_comodule(U, D, A.M.module);
  Report Y = verify_yd(D.V, out.M);
  Report B = verify_braided_commutative(D.V, out);
  if (!Y.pass() || !B.pass())
    throw std::logic_error("transport_braided_monoid: transported monoid fails\n" + Y.text() + B.text());
  return out;
}

template <class S>
YDAlgebra<S> transport_braided_monoid_back(const LeftBialgebroid<S>& U, const Dual<S>& D, const YDAlgebra<S>& A) {
  detail::expect_flavor(A.M.flavor, {YDFlavor::RightLeft}, "right bialgebroids");
  if (!A.verified) throw UncheckedSubstrate("braided commutative monoid not verified");
  YDAlgebra<S> out = A;
  out.M.flavor = YDFlavor::LeftRight;
  out.M.module = dual_comodule_to_module(U, D, A.M.comodule);
  out.M.comodule = dual_module_to_comodule(U, D, A.M.module);
  Report Y = verify_yd(U, out.M);
  Report B = verify_braided_commutative(U, out);
  if (!Y.pass() || !B.pass())
    throw std::logic_error("transport_braided_monoid_back: transported monoid fails\n" + Y.text() + B.text());
  return out;
}

// The base algebra as a YD algebra: ε-action and coaction a -> 1 ⊗ t(a).
template <class S>
YDAlgebra<S> base_yd_algebra(const LeftBialgebroid<S>& U) {
  YDAlgebra<S> A;
  A.M.flavor = YDFlavor::LeftRight;
  A.M.module = base_module(U.d);
  A.M.comodule = base_comodule(U);
  A.R = U.d.A;
  return A;
}

}  // namespace bialg

#endif
