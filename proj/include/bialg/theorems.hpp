#ifndef BIALG_THEOREMS_HPP
#define BIALG_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bialg/smash.hpp"

namespace bialg {

// (F, f): (W, A) -> (U, B); F is nU x nW, f is nB x nA.
template <class S>
struct BialgebroidMorphism {
  Mat<S> F, f;
};

// The data fed to recognize_action: a candidate morphism and a coaction U -> U◁f ⊗_A ▷W.
template <class S>
struct ActionPresentation {
  LeftBialgebroid<S> U;
  BialgebroidMorphism<S> morphism;
  TMap<S> rho;
};

template <class S>
struct Recognition {
  Report report;
  bool recognized = false;
  std::vector<int> failed;   // failing condition numbers, 0 for invalid inputs
  TensorQuotient<S> domain;  // B_f ⊗_A ▷W
  Mat<S> xi, xi_inverse;
  YDAlgebra<S> base;         // B as a braided commutative monoid over W
  std::optional<SmashLeft<S>> smash;
  Mat<S> iso;                // B # W -> U on the canonical bases
};

namespace detail {

template <class S>
Ops<S> ops_of_map(const Algebra<S>& X, const Mat<S>& map, bool left) {
  Ops<S> out;
  for (size_t a = 0; a < map.cols(); ++a) out.push_back(left ? X.lmul(map.col(a)) : X.rmul(map.col(a)));
  return out;
}

// (b, w) -> s(b) F(w) as a bilinear map B ⊗ W -> U.
template <class S>
TMap<S> source_times_F(const BialgebroidData<S>& d, const Mat<S>& F) {
  TMap<S> G{{d.n()}, {}};
  for (size_t b = 0; b < d.nA(); ++b)
    for (size_t w = 0; w < F.cols(); ++w) G.cols.push_back(to_sparse(d.U.mul(d.src(b), F.col(w))));
  return G;
}

template <class S>
void probe_mat(Report& R, const std::string& axiom, const std::string& probe, const Mat<S>& lhs, const Mat<S>& rhs,
               const Witness& wit) {
  probe_equal(R, axiom, probe, plain_space<S>(lhs.rows()), tm_from_mat(lhs), tm_from_mat(rhs), wit);
}

}  // namespace detail

// U := B # W with F(w) = 1 ⊗ w, f(a) = 1·a and ρ_U = B ⊗_A Δ_W.
template <class S>
ActionPresentation<S> action_presentation(const LeftBialgebroid<S>& W, const SmashLeft<S>& S_, const YDAlgebra<S>& A) {
  const auto& X = S_.under;
  size_t nR = A.R.n, nA = W.d.nA();
  ActionPresentation<S> out;
  out.U = S_.B;
  out.morphism.F = S_.embed_U;
  out.morphism.f = Mat<S>(nR, nA);
  for (size_t a = 0; a < nA; ++a) out.morphism.f.set_col(a, A.M.comodule.base[a] * A.R.unit);
  TMap<S> T = tm_apply(X.section_map(), 1, W.d.delta);
  out.rho = tm_bilinear(T, 0, 1, detail::projection(X));
  return out;
}

// Conditions (i) morphism, (ii) B-linear coaction with Eq. atlas, (iii) colinearity of F,
// each checked independently; on success B is recovered as a braided commutative
// monoid over W and ξ: B # W -> U is verified to be an isomorphism of left bialgebroids.
template <class S>
Recognition<S> recognize_action(const LeftBialgebroid<S>& U, const LeftBialgebroid<S>& W,
                                const BialgebroidMorphism<S>& mor, const TMap<S>& rho) {
  const auto& d = U.d;
  const auto& w = W.d;
  size_t nU = d.n(), nB = d.nA(), nW = w.n(), nA = w.nA();
  const Mat<S>& F = mor.F;
  const Mat<S>& f = mor.f;
  if (F.rows() != nU || F.cols() != nW) throw ShapeError("morphism: F must be dim U x dim W");
  if (f.rows() != nB || f.cols() != nA) throw ShapeError("morphism: f must be dim B x dim A");
  if (rho.dims != std::vector<size_t>{nU, nW} || rho.src() != nU) throw ShapeError("coaction: U -> U ⊗ W expected");

  Recognition<S> out;
  Report& R = out.report;
  R.title = "recognition of an action bialgebroid";
  {
    Report in;
    in.title = "inputs";
    in.merge(check_left_bialgebroid(U), "U ");
    in.merge(check_left_bialgebroid(W), "W ");
    bool ok = in.pass();
    R.sub.push_back(std::move(in));
    if (!ok) {
      out.failed.push_back(0);
      return out;
    }
  }

  auto wW = basis_witness(w, "w");
  auto wU = basis_witness(d, "u");
  auto wa = [&w](size_t j) { return "a=" + w.base_label(j); };
  {
    Report C;
    C.title = "condition (i): morphism of left bialgebroids";
    auto QU = plain_space<S>(nU);
    auto QB = plain_space<S>(nB);
    probe_equal(C, "ring", "F(1) = 1", QU, TMap<S>{{nU}, {to_sparse(F * w.U.unit)}}, TMap<S>{{nU}, {to_sparse(d.U.unit)}},
                [](size_t) { return std::string("1"); });
    probe_equal(C, "ring", "F(ww') = F(w)F(w')", QU, tm_compose(tm_from_mat(F), mult_map(w.U)), products_of(d.U, F, F),
                pair_witness(w, "w", "w'"));
    probe_equal(C, "base", "f(1) = 1", QB, TMap<S>{{nB}, {to_sparse(f * w.A.unit)}}, TMap<S>{{nB}, {to_sparse(d.A.unit)}},
                [](size_t) { return std::string("1"); });
    probe_equal(C, "base", "f(aa') = f(a)f(a')", QB, tm_compose(tm_from_mat(f), mult_map(w.A)), products_of(d.A, f, f),
                base_pair_witness(w));
    detail::probe_mat(C, "source", "F∘s_W = s∘f", F * w.s, d.s * f, wa);
    detail::probe_mat(C, "target", "F∘t_W = t∘f", F * w.t, d.t * f, wa);
    probe_equal(C, "coring", "Δ(F(w)) = F(w_(1)) ⊗ F(w_(2))", left_coproduct_space(d),
                tm_compose(d.delta, tm_from_mat(F)), tm_apply(tm_apply(w.delta, 0, F), 1, F), wW);
    detail::probe_mat(C, "counit", "ε∘F = f∘ε_W", d.eps * F, f * w.eps, wW);
    if (!C.pass()) out.failed.push_back(1);
    R.sub.push_back(std::move(C));
  }

  Ops<S> tf = detail::ops_of_map(d.U, d.t * f, true);
  Ops<S> triLW = action_ops(w, Act::TriL);
  TensorQuotient<S> Qrho({nU, nW}, {Pairing<S>{0, tf, 1, triLW}});
  UComodule<S> Cu;
  Cu.side = CoSide::Right;
  Cu.dim = nU;
  Cu.base = tf;
  Cu.coaction = rho;
  Cu.labels = d.labels;
  {
    Report C;
    C.title = "condition (ii): left B-linear right W-coaction on U";
    C.merge(check_comodule(W, Cu), "coaction ");
    TMap<S> lhs{{nU, nW}, {}}, rhs{{nU, nW}, {}};
    for (size_t b = 0; b < nB; ++b) {
      Mat<S> sb = d.U.lmul(d.src(b));
      TMap<S> l = tm_compose(rho, tm_from_mat(sb)), r = tm_apply(rho, 0, sb);
      lhs.cols.insert(lhs.cols.end(), l.cols.begin(), l.cols.end());
      rhs.cols.insert(rhs.cols.end(), r.cols.begin(), r.cols.end());
    }
    probe_equal(C, "B-linearity", "ρ(b ▷ u) = b ▷ u_[0] ⊗ u_[1]", Qrho, lhs, rhs,
                [&d, nU](size_t j) { return "(b,u)=(" + d.base_label(j / nU) + "," + d.label(j % nU) + ")"; });
    probe_equal(C, "atlas", "u_[0] ⊗ F(u_[1]) = Δ(u)", left_coproduct_space(d), tm_apply(rho, 1, F), d.delta, wU);
    if (!C.pass()) out.failed.push_back(2);
    R.sub.push_back(std::move(C));
  }
  {
    Report C;
    C.title = "condition (iii): F is colinear";
    probe_equal(C, "colinearity", "ρ(F(w)) = F(w_(1)) ⊗ w_(2)", Qrho, tm_compose(rho, tm_from_mat(F)),
                tm_apply(w.delta, 0, F), wW);
    if (!C.pass()) out.failed.push_back(3);
    R.sub.push_back(std::move(C));
  }
  if (!out.failed.empty()) return out;

  Report Rec;
  Rec.title = "recovered structure";
  Ops<S> rf = detail::ops_of_map(d.A, f, false);
  out.domain = TensorQuotient<S>({nB, nW}, {Pairing<S>{0, rf, 1, triLW}});
  const auto& X = out.domain;
  TMap<S> G = detail::source_times_F(d, F);
  out.xi = tm_to_mat(tm_bilinear(X.section_map(), 0, 1, G));
  out.xi_inverse = X.project_map(tm_apply(rho, 0, d.eps));
  Rec.count("xi-inverse", 2);
  if (out.xi * out.xi_inverse != Mat<S>::identity(nU)) Rec.fail("xi-inverse", "ξ∘ξ⁻¹ = id", "U");
  if (out.xi_inverse * out.xi != Mat<S>::identity(X.dim())) Rec.fail("xi-inverse", "ξ⁻¹∘ξ = id", "B ⊗_A W");

  YDAlgebra<S>& Y = out.base;
  Y.M.flavor = YDFlavor::LeftRight;
  Y.R = d.A;
  UModule<S>& M = Y.M.module;
  M.dim = nB;
  M.labels = d.base_labels;
  for (size_t x = 0; x < nW; ++x) {
    Mat<S> op(nB, nB);
    for (size_t b = 0; b < nB; ++b) op.set_col(b, d.eps * d.U.mul(F.col(x), d.src(b)));
    M.act.push_back(std::move(op));
  }
  UComodule<S>& C = Y.M.comodule;
  C.side = CoSide::Right;
  C.dim = nB;
  C.labels = d.base_labels;
  C.base = rf;
  C.coaction = TMap<S>{{nB, nW}, {}};
  TMap<S> secX = X.section_map();
  for (size_t b = 0; b < nB; ++b) C.coaction.cols.push_back(sparse_apply(secX.cols, to_sparse(out.xi_inverse * d.tgt(b))));
  Rec.merge(verify_yd(W, Y.M), "yd ");
  if (Y.M.verified) Rec.merge(verify_braided_commutative(W, Y), "monoid ");

  {
    // ξ ⊗_B F on B ⊗_A ▷W ⊗_A ▷W, injective as a rank condition
    TensorQuotient<S> Q3({nB, nW, nW}, {Pairing<S>{0, rf, 1, triLW}, Pairing<S>{1, action_ops(w, Act::TriR), 2, triLW}});
    TMap<S> L = tm_apply(tm_bilinear(Q3.section_map(), 0, 1, G), 1, F);
    Mat<S> m = left_coproduct_space(d).project_map(L);
    Rec.count("xi-tensor-F-injective");
    if (rank(m) != Q3.dim())
      Rec.fail("xi-tensor-F-injective", "rank(ξ ⊗_B F) = dim", "B ⊗_A W ⊗_A W",
               "rank " + std::to_string(rank(m)) + " of " + std::to_string(Q3.dim()));
  }

  if (Y.verified) {
    out.smash = smash_left(W, Y);
    const auto& Sm = *out.smash;
    const auto& s = Sm.B.d;
    out.iso = tm_to_mat(tm_bilinear(Sm.under.section_map(), 0, 1, G));
    const Mat<S>& I = out.iso;
    auto QU = plain_space<S>(nU);
    Rec.count("iso-bijective");
    if (I.rows() != I.cols() || rank(I) != nU) Rec.fail("iso-bijective", "rank", "ξ");
    else {
      auto sw = basis_witness(s, "x");
      auto bw = [&d](size_t j) { return "b=" + d.base_label(j); };
      probe_equal(Rec, "iso-ring", "ξ(1) = 1", QU, TMap<S>{{nU}, {to_sparse(I * s.U.unit)}},
                  TMap<S>{{nU}, {to_sparse(d.U.unit)}}, [](size_t) { return std::string("1"); });
      probe_equal(Rec, "iso-ring", "ξ(xy) = ξ(x)ξ(y)", QU, tm_compose(tm_from_mat(I), mult_map(s.U)),
                  products_of(d.U, I, I), pair_witness(s, "x", "y"));
      detail::probe_mat(Rec, "iso-source", "ξ∘s = s", I * s.s, d.s, bw);
      detail::probe_mat(Rec, "iso-target", "ξ∘t = t", I * s.t, d.t, bw);
      detail::probe_mat(Rec, "iso-counit", "ε∘ξ = ε", d.eps * I, s.eps, sw);
      probe_equal(Rec, "iso-coproduct", "Δ∘ξ = (ξ ⊗ ξ)∘Δ", left_coproduct_space(d), tm_compose(d.delta, tm_from_mat(I)),
                  tm_apply(tm_apply(s.delta, 0, I), 1, I), sw);
    }
  }
  out.recognized = Rec.pass() && out.smash.has_value();
  R.sub.push_back(std::move(Rec));
  return out;
}

template <class S>
struct EtaWitness {
  Mat<S> eta, inverse;  // Hom_R(R # U, R) -> U_* # R on the canonical bases
  Report report;        // sub-reports: bimodule, ring, coring, hopf
  SmashLeft<S> left;
  Dual<S> dual, smash_dual;  // U_* and Hom_R(R # U, R)
  YDAlgebra<S> transported;
  SmashRight<S> right;
};

namespace detail {

// Pure-tensor expansion of the canonical basis of V◀ ⊗_B R.
template <class S>
struct PureTerm {
  size_t psi, r;
  S c;
};

template <class S>
std::vector<std::vector<PureTerm<S>>> pure_terms(const TensorQuotient<S>& X) {
  size_t dR = X.dims()[1];
  std::vector<std::vector<PureTerm<S>>> out(X.dim());
  for (size_t c = 0; c < X.dim(); ++c)
    for (const auto& [idx, x] : X.section(c)) out[c].push_back({idx / dR, idx % dR, x});
  return out;
}

// Pairing matrix: column q = the R-valued function (u, u') -> ⟨section(q), u ⊗ u'⟩ on
// rows (u * n + u') * dR + i, where value(ψ ⊗ r, ψ̃ ⊗ r', u, u') is supplied by pure.
template <class S, class Fn>
Mat<S> pairing_matrix(const TensorQuotient<S>& Q, const std::vector<std::vector<PureTerm<S>>>& terms, size_t N,
                      size_t n, size_t dR, Fn pure) {
  Mat<S> P(n * n * dR, Q.dim());
  for (size_t q = 0; q < Q.dim(); ++q)
    for (const auto& [idx, x] : Q.section(q))
      for (const auto& t1 : terms[idx / N])
        for (const auto& t2 : terms[idx % N]) {
          S c = x * t1.c * t2.c;
          for (size_t u = 0; u < n; ++u)
            for (size_t u2 = 0; u2 < n; ++u2) {
              Vec<S> v = pure(t1.psi, t1.r, t2.psi, t2.r, u, u2);
              for (size_t i = 0; i < dR; ++i)
                if (!v[i].is_zero()) P((u * n + u2) * dR + i, q) += c * v[i];
            }
        }
  return P;
}

template <class S>
Vec<S> act_combination(const Ops<S>& ops, const Vec<S>& a, const Vec<S>& m) {
  Vec<S> out(m.size(), S(0));
  for (size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero()) out = out + scaled(ops[k] * m, a[k]);
  return out;
}

}  // namespace detail

// η: Hom_R(R # U, R) -> U_* # R, f -> Σ_j e^j ⊗ f(1 ⊗ e_j), verified as an isomorphism of
// right bialgebroids and, for right Hopf U, of left Hopf algebroids.
template <class S>
EtaWitness<S> verify_eta(const LeftBialgebroid<S>& U, const YDAlgebra<S>& R) {
  if (!R.verified) throw UncheckedSubstrate("verify_eta needs a verified braided commutative monoid");
  const auto& d = U.d;
  size_t n = d.n(), dR = R.R.n;
  EtaWitness<S> W{Mat<S>(), Mat<S>(), {}, smash_left(U, R), left_dual(U), {}, {}, {}};
  const Dual<S>& D = W.dual;
  LeftBialgebroid<S> SL = W.left.B;
  SL.d.a_basis = W.left.embed_U * D.P.basis;
  W.smash_dual = left_dual(SL);
  const Dual<S>& H = W.smash_dual;
  if (H.P.basis != *SL.d.a_basis) throw std::logic_error("verify_eta: the dual basis 1 ⊗ e_j was not accepted");
  W.transported = transport_braided_monoid(U, D, R);
  W.right = smash_right(D.V, W.transported);
  const auto& h = H.V.d;
  const auto& v = W.right.B.d;
  const auto& X = W.right.under;
  size_t m = h.n(), N = v.n(), nD = D.P.dim();
  if (m != N) throw std::logic_error("verify_eta: the two sides have different dimensions");

  // φ_{jk} = e^j ◀ r_k -> e^j ⊗ r_k
  W.eta = Mat<S>(N, m);
  for (size_t j = 0; j < H.P.r; ++j)
    for (size_t k = 0; k < dR; ++k)
      W.eta.set_col(j * dR + k, X.project_dense(detail::pure(nD, dR, D.P.dual_basis.col(j), unit_vec<S>(dR, k))));
  Inversion<S> inv = invert(W.eta);
  Report& Rep = W.report;
  Rep.title = "η: Hom_R(R # U, R) -> U_* # R" + (d.name.empty() ? "" : " over " + d.name);
  Rep.count("bijective");
  if (!inv.inverse) {
    Rep.fail("bijective", "rank", "η", "rank " + std::to_string(rank(W.eta)));
    return W;
  }
  W.inverse = *inv.inverse;
  const Mat<S>& E = W.eta;
  TMap<S> Et = tm_from_mat(E);
  auto QN = plain_space<S>(N);
  auto fw = basis_witness(h, "f");
  auto rw = [&h](size_t j) { return "r=" + h.base_label(j); };
  auto frw = [&h, m](size_t j) { return "(r,f)=(" + h.base_label(j / m) + "," + h.label(j % m) + ")"; };

  {
    Report B;
    B.title = "bimodule";
    detail::probe_mat(B, "source", "η∘s = s", E * h.s, v.s, rw);
    detail::probe_mat(B, "target", "η∘t = t", E * h.t, v.t, rw);
    TMap<S> l1{{N}, {}}, r1{{N}, {}}, l2{{N}, {}}, r2{{N}, {}};
    for (size_t r = 0; r < dR; ++r) {
      Mat<S> a = E * h.U.rmul(h.src(r)), b = v.U.rmul(v.src(r)) * E;
      Mat<S> c = E * h.U.rmul(h.tgt(r)), e = v.U.rmul(v.tgt(r)) * E;
      for (size_t x = 0; x < m; ++x) {
        l1.cols.push_back(to_sparse(a.col(x)));
        r1.cols.push_back(to_sparse(b.col(x)));
        l2.cols.push_back(to_sparse(c.col(x)));
        r2.cols.push_back(to_sparse(e.col(x)));
      }
    }
    probe_equal(B, "right-action", "η(f ◀ r) = η(f) ◀ r", QN, l1, r1, frw);
    probe_equal(B, "left-action", "η(r ▶ f) = r ▶ η(f)", QN, l2, r2, frw);
    Rep.sub.push_back(std::move(B));
  }
  {
    Report B;
    B.title = "ring";
    probe_equal(B, "unit", "η(1) = 1", QN, TMap<S>{{N}, {to_sparse(E * h.U.unit)}}, TMap<S>{{N}, {to_sparse(v.U.unit)}},
                [](size_t) { return std::string("1"); });
    probe_equal(B, "product", "η(fg) = η(f)η(g)", QN, tm_compose(Et, mult_map(h.U)), products_of(v.U, E, E),
                pair_witness(h, "f", "g"));
    Rep.sub.push_back(std::move(B));
  }

  auto terms = detail::pure_terms(X);
  const UModule<S>& Ma = R.M.module;
  const UComodule<S>& Ca = R.M.comodule;
  // (u, u') -> f(1 ⊗ u u')
  auto closed_form = [&](size_t x) {
    Vec<S> out(n * n * dR, S(0));
    for (size_t u = 0; u < n; ++u)
      for (size_t u2 = 0; u2 < n; ++u2) {
        Vec<S> val = H.P.eval[x] * (W.left.embed_U * d.U.mul(unit_vec<S>(n, u), unit_vec<S>(n, u2)));
        for (size_t i = 0; i < dR; ++i) out[(u * n + u2) * dR + i] = val[i];
      }
    return out;
  };
  auto uw = [&d, n, dR](size_t row) {
    size_t p = row / dR;
    return "(u,u')=(" + d.label(p / n) + "," + d.label(p % n) + ")";
  };
  auto compare_vals = [&](Report& B, const std::string& axiom, const std::string& probe, size_t x, const Vec<S>& got,
                          const Vec<S>& want) {
    B.count(axiom);
    for (size_t row = 0; row < got.size(); ++row)
      if (got[row] != want[row]) {
        B.fail(axiom, probe, h.label(x) + " at " + uw(row));
        return;
      }
  };
  {
    Report B;
    B.title = "coring";
    detail::probe_mat(B, "counit", "∂∘η = ∂", v.eps * E, h.eps, fw);
    const TensorQuotient<S>& Q = W.right.codomain;
    // ⟨(ψ ⊗ r) ⊗ (ψ̃ ⊗ r'), u ⊗ u'⟩ = ((u_(1) ◀ ⟨ψ, u'⟩) r) · (⟨ψ̃, u_(2)⟩ r')
    Mat<S> P = detail::pairing_matrix(Q, terms, N, n, dR, [&](size_t psi, size_t r, size_t psi2, size_t r2, size_t u, size_t u2) {
      Vec<S> out(dR, S(0));
      Vec<S> a = D.P.eval[psi].col(u2);
      for (const auto& [idx, c] : d.delta.cols[u]) {
        Vec<S> x = Ma.op(d.U.mul(unit_vec<S>(n, idx / n), d.src(a))) * unit_vec<S>(dR, r);
        Vec<S> y = Ma.op(d.src(D.P.eval[psi2].col(idx % n))) * unit_vec<S>(dR, r2);
        out = out + scaled(R.R.mul(x, y), c);
      }
      return out;
    });
    B.count("pairing-nondegenerate");
    if (rank(P) != Q.dim())
      B.fail("pairing-nondegenerate", "rank", "(U_* # R)◀ ⊗_R ▶(U_* # R)", "rank " + std::to_string(rank(P)));
    TMap<S> lhs = tm_apply(tm_apply(h.delta, 0, E), 1, E);
    TMap<S> rhs = tm_compose(v.delta, Et);
    for (size_t x = 0; x < m; ++x) {
      Vec<S> want = closed_form(x);
      compare_vals(B, "coproduct", "⟨(η ⊗ η)Δ_r f, u ⊗ u'⟩ = f(1 ⊗ uu')", x, P * Q.project_dense(lhs.cols[x]), want);
      compare_vals(B, "coproduct", "⟨Δ_r η(f), u ⊗ u'⟩ = f(1 ⊗ uu')", x, P * Q.project_dense(rhs.cols[x]), want);
    }
    Rep.sub.push_back(std::move(B));
  }

  bool hopf = true;
  try {
    translation_map(U, Flavor::RightHopf);
  } catch (const NotHopf&) {
    hopf = false;
  }
  if (hopf) {
    Report B;
    B.title = "hopf";
    if (!W.right.translation) throw std::logic_error("verify_eta: right Hopf U without a translation map on U_* # R");
    TranslationMap<S> Th = dual_hopf_structure(SL, H);
    TensorQuotient<S> Q = right_hopf_space(v);
    // ⟨(ψ ⊗ r) ⊗ (ψ̃ ⊗ r'), u ⊗ u'⟩ = (r_[0] ⟨ψ̃, r_[1] (u ◁ ⟨ψ, u'⟩)⟩) · r'
    Mat<S> P = detail::pairing_matrix(Q, terms, N, n, dR, [&](size_t psi, size_t r, size_t psi2, size_t r2, size_t u, size_t u2) {
      Vec<S> out(dR, S(0));
      Vec<S> a = D.P.eval[psi].col(u2);
      Vec<S> tu = d.U.mul(d.tgt(a), unit_vec<S>(n, u));
      for (const auto& [idx, c] : Ca.coaction.cols[r]) {
        Vec<S> b = D.P.eval[psi2] * d.U.mul(unit_vec<S>(n, idx % n), tu);
        Vec<S> x = detail::act_combination(Ca.base, b, unit_vec<S>(dR, idx / n));
        out = out + scaled(R.R.mul(x, unit_vec<S>(dR, r2)), c);
      }
      return out;
    });
    B.count("pairing-nondegenerate");
    if (rank(P) != Q.dim())
      B.fail("pairing-nondegenerate", "rank", "(U_* # R)◀ ⊗_R ▷(U_* # R)", "rank " + std::to_string(rank(P)));
    TMap<S> lhs = tm_apply(tm_apply(Th.map, 0, E), 1, E);
    TMap<S> rhs = tm_compose(W.right.translation->map, Et);
    for (size_t x = 0; x < m; ++x)
      compare_vals(B, "translation", "⟨(η ⊗ η) β_ℓ⁻¹(f), u ⊗ u'⟩ = ⟨β_ℓ⁻¹(η f), u ⊗ u'⟩", x,
                   P * Q.project_dense(lhs.cols[x]), P * Q.project_dense(rhs.cols[x]));
    Rep.sub.push_back(std::move(B));
  } else {
    Rep.note("hopf", "U is not right Hopf; translation maps not compared");
  }
  return W;
}

}  // namespace bialg

#endif
