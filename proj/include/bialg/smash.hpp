#ifndef BIALG_SMASH_HPP
#define BIALG_SMASH_HPP

#include <optional>
#include <string>

#include "bialg/yd.hpp"

namespace bialg {

template <class S>
struct SmashLeft {
  LeftBialgebroid<S> B;              // R # U over R
  TensorQuotient<S> under;           // R ⊗_A ▷U
  TensorQuotient<S> codomain;        // (R#U)◁ ⊗_R ▷(R#U)
  Mat<S> embed_R, embed_U;           // r -> r ⊗ 1, u -> 1 ⊗ u
  std::optional<TranslationMap<S>> translation;  // right Hopf structure
};

template <class S>
struct SmashRight {
  RightBialgebroid<S> B;             // V # R over R
  TensorQuotient<S> under;           // V◀ ⊗_B R
  TensorQuotient<S> codomain;        // (V#R)◀ ⊗_R ▶(V#R)
  Mat<S> embed_V, embed_R;           // v -> v ⊗ 1, r -> 1 ⊗ r
  std::optional<TranslationMap<S>> translation;  // left Hopf structure
};

namespace detail {

inline std::string join_label(const std::string& a, const std::string& b) { return a + "⊗" + b; }

template <class S>
std::string vec_label(const SparseVec<S>& v, const std::function<std::string(size_t)>& name) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : v) {
    std::string coeff = c == S(1) ? "" : c == S(-1) ? "-" : c.str() + "·";
    if (!out.empty()) out += coeff.empty() || coeff[0] != '-' ? "+" : "";
    out += coeff + name(i);
  }
  return v.size() == 1 ? out : "(" + out + ")";
}

template <class S>
std::vector<std::string> section_labels(const TensorQuotient<S>& X, const std::function<std::string(size_t)>& l0,
                                        const std::function<std::string(size_t)>& l1) {
  size_t n1 = X.dims()[1];
  std::vector<std::string> out;
  for (size_t c = 0; c < X.dim(); ++c)
    out.push_back(vec_label<S>(X.section(c), [&](size_t i) { return join_label(l0(i / n1), l1(i % n1)); }));
  return out;
}

// Projection of the plain tensor of the two factors onto X, as a one-factor map.
template <class S>
TMap<S> projection(const TensorQuotient<S>& X) {
  TMap<S> P{{X.dim()}, {}};
  for (size_t i = 0; i < X.ambient(); ++i) P.cols.push_back(X.project({{i, S(1)}}));
  return P;
}

template <class S>
std::vector<SparseVec<S>> project_table(const TensorQuotient<S>& X, const TMap<S>& F) {
  std::vector<SparseVec<S>> out;
  for (const auto& col : F.cols) out.push_back(X.project(col));
  return out;
}

// Both pairs of factors of a four-factor lift projected into X ⊗ X.
template <class S>
TMap<S> project_pairs(const TMap<S>& F, const TMap<S>& proj) {
  return tm_bilinear(tm_bilinear(F, 0, 1, proj), 1, 2, proj);
}

template <class S>
SparseVec<S> pure(size_t n0, size_t n1, const Vec<S>& a, const Vec<S>& b) {
  return tm_tensor(TMap<S>{{n0}, {to_sparse(a)}}, TMap<S>{{n1}, {to_sparse(b)}}).cols.at(0);
}

template <class S>
Vec<S> coordinates(const Mat<S>& K, const Vec<S>& v, const std::string& what) {
  Solution<S> sol = solve_linear(K, v);
  if (!sol.consistent) throw std::logic_error(what + " leaves the subspace");
  return sol.x;
}

template <class S>
Mat<S> restrict_op(const Mat<S>& K, const Mat<S>& op, const std::string& what) {
  Mat<S> out(K.cols(), K.cols());
  for (size_t i = 0; i < K.cols(); ++i) out.set_col(i, coordinates(K, op * K.col(i), what));
  return out;
}

// Coordinates in Ũ of the sandwich x K_i y summed over a lift Σ x ⊗ y.
template <class S>
Vec<S> sandwich(const Algebra<S>& U, const Mat<S>& K, size_t i, const SparseVec<S>& lift, const std::string& what) {
  size_t n = U.n;
  Vec<S> acc(n, S(0));
  Vec<S> ki = K.col(i);
  for (const auto& [idx, c] : lift) {
    Vec<S> v = U.mul(U.mul(unit_vec<S>(n, idx / n), ki), unit_vec<S>(n, idx % n));
    for (size_t j = 0; j < n; ++j) acc[j] += c * v[j];
  }
  return coordinates(K, acc, what);
}

// Lift of each element of Δ(K_i) to K ⊗ U (left) or U ⊗ K (right), solved in Q.
template <class S>
TMap<S> restricted_coproduct(const BialgebroidData<S>& d, const Mat<S>& K, const TensorQuotient<S>& Q, bool left,
                             const std::string& what) {
  size_t n = d.n(), k = K.cols();
  TMap<S> inc = left ? tm_tensor(tm_from_mat(K), tm_identity<S>(n)) : tm_tensor(tm_identity<S>(n), tm_from_mat(K));
  Mat<S> P = Q.project_map(inc);
  TMap<S> out{left ? std::vector<size_t>{k, n} : std::vector<size_t>{n, k}, {}};
  for (size_t i = 0; i < k; ++i) {
    Vec<S> b = Q.project_dense(sparse_apply(d.delta.cols, to_sparse(K.col(i))));
    Solution<S> sol = solve_linear(P, b);
    if (!sol.consistent) throw std::logic_error("the coproduct of " + what + " element " + std::to_string(i) + " is not in the restricted tensor product");
    out.cols.push_back(to_sparse(sol.x));
  }
  return out;
}

template <class S>
Algebra<S> subalgebra(const Algebra<S>& U, const Mat<S>& K, bool opposite, const std::string& what) {
  size_t k = K.cols();
  std::vector<SparseVec<S>> table;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Vec<S> p = opposite ? U.mul(K.col(j), K.col(i)) : U.mul(K.col(i), K.col(j));
      table.push_back(to_sparse(coordinates(K, p, what + " product")));
    }
  return Algebra<S>(k, table, coordinates(K, U.unit, what + " unit"));
}

}  // namespace detail

// {u : s(a) u = u s(a) for all a}.
template <class S>
Mat<S> source_commutant(const BialgebroidData<S>& d) {
  size_t n = d.n(), nA = d.nA();
  Mat<S> C(n * nA, n);
  for (size_t a = 0; a < nA; ++a) {
    Mat<S> diff = d.U.lmul(d.src(a)) - d.U.rmul(d.src(a));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) C(a * n + i, j) = diff(i, j);
  }
  return kernel(C);
}

// R # U on R ⊗_A ▷U with the smash product, s(r) = r ⊗ 1, t(r) = r_[0] ⊗ r_[1],
// Δ(r ⊗ u) = (r ⊗ u_(1)) ⊗_R (1 ⊗ u_(2)) and ε(r ⊗ u) = r ε(u).
template <class S>
SmashLeft<S> smash_left(const LeftBialgebroid<S>& U, const YDAlgebra<S>& A) {
  detail::expect_flavor(A.M.flavor, {YDFlavor::LeftRight}, "left bialgebroids as monoids");
  if (!A.verified) throw UncheckedSubstrate("smash_left needs a verified braided commutative monoid");
  const auto& d = U.d;
  const UComodule<S>& C = A.M.comodule;
  const UModule<S>& M = A.M.module;
  size_t n = d.n(), dR = A.R.n;
  if (M.act.size() != n || dR != M.dim) throw ShapeError("smash_left: YD algebra shape");
  Ops<S> triL = action_ops(d, Act::TriL);
  SmashLeft<S> out;
  out.under = TensorQuotient<S>({dR, n}, {Pairing<S>{0, C.base, 1, triL}});
  const auto& X = out.under;
  size_t N = X.dim();
  TMap<S> sec = X.section_map(), proj = detail::projection(X);
  TMap<S> act = action_map(M), mult{{dR}, A.R.table};

  BialgebroidData<S>& b = out.B.d;
  b.name = "R#" + (d.name.empty() ? std::string("U") : d.name);
  // (r ⊗ u)(r' ⊗ u') = r(u_(1) r') ⊗ u_(2) u'
  TMap<S> F = tm_apply(tm_tensor(sec, sec), 1, d.delta);
  F = tm_mul(tm_bilinear(tm_bilinear(F, 1, 3, act), 0, 1, mult), 1, 2, d.U);
  b.U = Algebra<S>(N, detail::project_table(X, F), X.project_dense(detail::pure(dR, n, A.R.unit, d.U.unit)));
  b.A = A.R;
  b.s = Mat<S>(N, dR);
  b.t = Mat<S>(N, dR);
  for (size_t r = 0; r < dR; ++r) {
    b.s.set_col(r, X.project_dense(detail::pure(dR, n, unit_vec<S>(dR, r), d.U.unit)));
    b.t.set_col(r, X.project_dense(C.coaction.cols[r]));
  }
  b.eps = tm_to_mat(tm_contract(sec, 1, 0, d.eps, C.base));
  b.delta = detail::project_pairs(tm_insert(tm_apply(sec, 1, d.delta), 2, A.R.unit), proj);
  b.labels = detail::section_labels(X, [&M](size_t i) { return M.label(i); }, [&d](size_t i) { return d.label(i); });
  b.base_labels.clear();
  for (size_t r = 0; r < dR; ++r) b.base_labels.push_back(M.label(r));
  out.embed_R = b.s;
  out.embed_U = Mat<S>(N, n);
  for (size_t u = 0; u < n; ++u) out.embed_U.set_col(u, X.project_dense(detail::pure(dR, n, A.R.unit, unit_vec<S>(n, u))));
  out.codomain = left_coproduct_space(b);

  try {
    TranslationMap<S> Tr = translation_map(U, Flavor::RightHopf);
    // r ⊗ u -> (r_[0] ⊗ u_[+]) ⊗_R (1 ⊗ u_[-] r_[1])
    TMap<S> G = tm_mul(tm_apply(tm_apply(sec, 0, C.coaction), 2, Tr.map), 3, 1, d.U);
    out.translation = TranslationMap<S>{Flavor::RightHopf, detail::project_pairs(tm_insert(G, 2, A.R.unit), proj)};
  } catch (const NotHopf&) {
  }
  return out;
}

// V # R on V◀ ⊗_B R with (v ⊗ r)(v' ⊗ r') = v v'^(1) ⊗ (r v'^(2)) r', s(r) = 1 ⊗ r,
// t(r) = r^(-1) ⊗ r^(0), Δ(v ⊗ r) = (v^(1) ⊗ 1) ⊗_R (v^(2) ⊗ r), ∂(v ⊗ r) = ∂(v) r.
template <class S>
SmashRight<S> smash_right(const RightBialgebroid<S>& V, const YDAlgebra<S>& A) {
  detail::expect_flavor(A.M.flavor, {YDFlavor::RightLeft}, "right bialgebroids");
  if (!A.verified) throw UncheckedSubstrate("smash_right needs a verified braided commutative monoid");
  const auto& d = V.d;
  const UComodule<S>& C = A.M.comodule;
  const UModule<S>& M = A.M.module;
  size_t n = d.n(), dR = A.R.n;
  if (M.act.size() != n || dR != M.dim) throw ShapeError("smash_right: YD algebra shape");
  SmashRight<S> out;
  out.under = TensorQuotient<S>({n, dR}, {Pairing<S>{0, action_ops(d, Act::BlkR), 1, C.base}});
  const auto& X = out.under;
  size_t N = X.dim();
  TMap<S> sec = X.section_map(), proj = detail::projection(X);
  TMap<S> act = action_map(M), mult{{dR}, A.R.table};

  BialgebroidData<S>& b = out.B.d;
  b.name = (d.name.empty() ? "V" : d.name) + std::string("#R");
  TMap<S> F = tm_mul(tm_apply(tm_tensor(sec, sec), 2, d.delta), 0, 2, d.U);
  F = tm_bilinear(tm_bilinear(F, 1, 2, act), 1, 2, mult);
  b.U = Algebra<S>(N, detail::project_table(X, F), X.project_dense(detail::pure(n, dR, d.U.unit, A.R.unit)));
  b.A = A.R;
  b.s = Mat<S>(N, dR);
  b.t = Mat<S>(N, dR);
  for (size_t r = 0; r < dR; ++r) {
    b.s.set_col(r, X.project_dense(detail::pure(n, dR, d.U.unit, unit_vec<S>(dR, r))));
    b.t.set_col(r, X.project_dense(C.coaction.cols[r]));
  }
  b.eps = tm_to_mat(tm_contract(sec, 0, 1, d.eps, C.base));
  b.delta = detail::project_pairs(tm_insert(tm_apply(sec, 0, d.delta), 1, A.R.unit), proj);
  b.labels = detail::section_labels(X, [&d](size_t i) { return d.label(i); }, [&M](size_t i) { return M.label(i); });
  for (size_t r = 0; r < dR; ++r) b.base_labels.push_back(M.label(r));
  out.embed_R = b.s;
  out.embed_V = Mat<S>(N, n);
  for (size_t v = 0; v < n; ++v) out.embed_V.set_col(v, X.project_dense(detail::pure(n, dR, unit_vec<S>(n, v), A.R.unit)));
  out.codomain = right_coproduct_space(b);

  try {
    TranslationMap<S> Tu = translation_map(V);
    // v ⊗ r -> (r^(-1) v^[-] ⊗ 1) ⊗_R (v^[+] ⊗ r^(0))
    TMap<S> G = tm_mul(tm_apply(tm_apply(sec, 1, C.coaction), 0, Tu.map), 2, 0, d.U);
    G = tm_permute(G, {1, 0, 2});
    out.translation = TranslationMap<S>{Flavor::DualLeftHopf, detail::project_pairs(tm_insert(G, 1, A.R.unit), proj)};
  } catch (const NotHopf&) {
  }
  return out;
}

// Ũ^op with the adjoint action w ➤ u = w_[+] u w_[-] and the coaction u -> u_(1) ⊗ u_(2).
template <class S>
YDAlgebra<S> weyl_tilde(const LeftBialgebroid<S>& U) {
  const auto& d = U.d;
  size_t n = d.n();
  TranslationMap<S> Tr = translation_map(U, Flavor::RightHopf);
  Mat<S> K = source_commutant(d);
  size_t k = K.cols();
  YDAlgebra<S> A;
  A.M.flavor = YDFlavor::LeftRight;
  A.R = detail::subalgebra(d.U, K, true, "Ũ");
  UModule<S>& M = A.M.module;
  M.dim = k;
  for (size_t i = 0; i < k; ++i) M.labels.push_back(detail::vec_label<S>(to_sparse(K.col(i)), [&d](size_t j) { return d.label(j); }));
  for (size_t w = 0; w < n; ++w) {
    Mat<S> op(k, k);
    for (size_t i = 0; i < k; ++i) op.set_col(i, detail::sandwich(d.U, K, i, Tr.map.cols[w], "the adjoint action"));
    M.act.push_back(std::move(op));
  }
  UComodule<S>& C = A.M.comodule;
  C.side = CoSide::Right;
  C.dim = k;
  C.labels = M.labels;
  for (size_t a = 0; a < d.nA(); ++a) C.base.push_back(detail::restrict_op(K, d.U.lmul(d.tgt(a)), "the target action"));
  C.coaction = detail::restricted_coproduct(d, K, left_coproduct_space(d), true, "Ũ");
  C = canonical_coaction(U, C);
  verify_yd(U, A.M);
  if (A.M.verified) verify_braided_commutative(U, A);
  return A;
}

// Ũ_*^op ⊂ U_* with the adjoint right action ψ̃ ⊲ ψ = ψ^[-] ψ̃ ψ^[+] and the coaction Δ_r.
template <class S>
YDAlgebra<S> weyl_tilde_dual(const LeftBialgebroid<S>& U, const Dual<S>& D) {
  const auto& d = D.V.d;
  size_t n = d.n();
  TranslationMap<S> Tu = dual_hopf_structure(U, D);
  Mat<S> K = source_commutant(d);
  size_t k = K.cols();
  YDAlgebra<S> A;
  A.M.flavor = YDFlavor::RightLeft;
  A.R = detail::subalgebra(d.U, K, true, "Ũ_*");
  UModule<S>& M = A.M.module;
  M.right = true;
  M.dim = k;
  for (size_t i = 0; i < k; ++i) M.labels.push_back(detail::vec_label<S>(to_sparse(K.col(i)), [&d](size_t j) { return d.label(j); }));
  for (size_t psi = 0; psi < n; ++psi) {
    Mat<S> op(k, k);
    for (size_t i = 0; i < k; ++i) op.set_col(i, detail::sandwich(d.U, K, i, Tu.map.cols[psi], "the adjoint action"));
    M.act.push_back(std::move(op));
  }
  UComodule<S>& C = A.M.comodule;
  C.side = CoSide::Left;
  C.dim = k;
  C.labels = M.labels;
  for (size_t b = 0; b < d.nA(); ++b) C.base.push_back(detail::restrict_op(K, d.U.rmul(d.tgt(b)), "the target action"));
  C.coaction = detail::restricted_coproduct(d, K, right_coproduct_space(d), false, "Ũ_*");
  C = canonical_coaction(D.V, C);
  verify_yd(D.V, A.M);
  if (A.M.verified) verify_braided_commutative(D.V, A);
  return A;
}

}  // namespace bialg

#endif
