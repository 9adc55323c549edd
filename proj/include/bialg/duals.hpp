#ifndef BIALG_DUALS_HPP
#define BIALG_DUALS_HPP

#include <stdexcept>
#include <string>

#include "bialg/hopf.hpp"

namespace bialg {

class NoDualBasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dual basis {e_j} ⊂ U, {e^j} of the dual, with the evaluation ⟨ψ, u⟩ ∈ A.
// The dual has k-basis φ_{jk} = e^j ◀ a_k at index j * nA + k, determined by
// φ_{jk}(e_l) = δ_jl a_k.
template <class S>
struct DualPairing {
  enum class Side { Left, Right } side = Side::Left;
  size_t n = 0, nA = 0, r = 0;
  Mat<S> basis;              // n x r, the e_j
  Mat<S> coords;             // (r*nA) x n: u -> the coefficients c_j(u) ∈ A of u = Σ c_j(u) ▷ e_j
  std::vector<Mat<S>> eval;  // dual basis element -> nA x n matrix u -> ⟨φ, u⟩
  Mat<S> dual_basis;         // (r*nA) x r, the e^j as elements of the dual

  size_t dim() const { return r * nA; }

  Mat<S> values(const Vec<S>& psi) const {
    Mat<S> m(nA, n);
    for (size_t i = 0; i < psi.size(); ++i)
      if (!psi[i].is_zero())
        for (size_t a = 0; a < nA; ++a)
          for (size_t u = 0; u < n; ++u) m(a, u) += eval[i](a, u) * psi[i];
    return m;
  }
  Vec<S> pair(const Vec<S>& psi, const Vec<S>& u) const { return values(psi) * u; }

  // The A-linear functional with the given values on U, in dual coordinates.
  Vec<S> from_values(const Mat<S>& vals) const {
    Vec<S> out(dim(), S(0));
    for (size_t j = 0; j < r; ++j) {
      Vec<S> a = vals * basis.col(j);
      for (size_t k = 0; k < nA; ++k) out[j * nA + k] = a[k];
    }
    return out;
  }
};

template <class S>
struct Dual {
  RightBialgebroid<S> V;
  DualPairing<S> P;
};

// Coordinates of the free module with basis b under the action ops, if b is a basis.
template <class S>
std::optional<Mat<S>> free_coordinates(const Ops<S>& act, const Mat<S>& b) {
  if (act.empty()) return std::nullopt;
  size_t n = act[0].rows(), nA = act.size(), r = b.cols();
  if (r * nA != n) return std::nullopt;
  Mat<S> M(n, n);
  for (size_t j = 0; j < r; ++j)
    for (size_t k = 0; k < nA; ++k) {
      Vec<S> v = act[k] * b.col(j);
      for (size_t i = 0; i < n; ++i) M(i, j * nA + k) = v[i];
    }
  return invert(M).inverse;
}

// The fixture's basis when it is one, otherwise a basis drawn from the k-basis of U.
template <class S>
Mat<S> find_free_basis(const Ops<S>& act, const std::optional<Mat<S>>& hint) {
  if (hint && free_coordinates(act, *hint)) return *hint;
  size_t n = act.at(0).rows();
  SpanBuilder<S> span(n);
  std::vector<Vec<S>> chosen;
  for (size_t i = 0; i < n; ++i) {
    SpanBuilder<S> trial = span;
    size_t grew = 0;
    for (const auto& op : act) grew += trial.add(op.col(i)) ? 1 : 0;
    if (grew != act.size()) continue;
    span = trial;
    chosen.push_back(unit_vec<S>(n, i));
  }
  Mat<S> b = Mat<S>::from_cols(n, chosen);
  if (span.dim() != n || !free_coordinates(act, b)) throw NoDualBasis("no basis of the base module found");
  return b;
}

// U_* = Hom_A(▷U, A) as a right bialgebroid.
template <class S>
Dual<S> left_dual(const LeftBialgebroid<S>& L) {
  const BialgebroidData<S>& d = L.d;
  validate_shapes(d);
  size_t n = d.n(), nA = d.nA();
  Ops<S> triL = action_ops(d, Act::TriL);
  if (n % nA != 0) throw NoDualBasis("dim U is not a multiple of dim A");
  Mat<S> b = find_free_basis(triL, d.a_basis);
  DualPairing<S> P;
  P.n = n;
  P.nA = nA;
  P.r = b.cols();
  P.basis = b;
  P.coords = *free_coordinates(triL, b);
  size_t m = P.dim();
  for (size_t j = 0; j < P.r; ++j)
    for (size_t k = 0; k < nA; ++k) {
      Mat<S> E(nA, n);
      for (size_t u = 0; u < n; ++u) {
        Vec<S> c(nA);
        for (size_t a = 0; a < nA; ++a) c[a] = P.coords(j * nA + a, u);
        Vec<S> v = d.A.mul(c, unit_vec<S>(nA, k));
        for (size_t a = 0; a < nA; ++a) E(a, u) = v[a];
      }
      P.eval.push_back(std::move(E));
    }
  P.dual_basis = Mat<S>(m, P.r);
  for (size_t j = 0; j < P.r; ++j)
    for (size_t k = 0; k < nA; ++k) P.dual_basis(j * nA + k, j) = d.A.unit[k];

  BialgebroidData<S> v;
  v.name = d.name.empty() ? "" : d.name + "_*";
  v.A = d.A;
  v.base_labels = d.base_labels;
  for (size_t j = 0; j < P.r; ++j) {
    Vec<S> e = b.col(j);
    size_t nz = 0, at = 0;
    for (size_t i = 0; i < n; ++i)
      if (!e[i].is_zero()) ++nz, at = i;
    std::string stem = nz == 1 && e[at] == S(1) ? "δ_" + d.label(at) : "e^" + std::to_string(j);
    for (size_t k = 0; k < nA; ++k) v.labels.push_back(nA == 1 ? stem : stem + "◀" + d.base_label(k));
  }

  // (ψψ')(u) = ⟨ψ', t(⟨ψ, u_(2)⟩) u_(1)⟩ evaluated on the e_p
  std::vector<SparseVec<S>> table(m * m);
  std::vector<SparseVec<S>> dE;
  for (size_t p = 0; p < P.r; ++p) dE.push_back(sparse_apply(d.delta.cols, to_sparse(b.col(p))));
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y) {
      Vec<S> psi(m, S(0));
      for (size_t p = 0; p < P.r; ++p) {
        Vec<S> val(nA, S(0));
        for (const auto& [idx, c] : dE[p]) {
          size_t u1 = idx / n, u2 = idx % n;
          Vec<S> a = P.eval[x].col(u2);
          Vec<S> z = d.U.mul(d.tgt(a), unit_vec<S>(n, u1));
          val = val + scaled(P.eval[y] * z, c);
        }
        for (size_t k = 0; k < nA; ++k) psi[p * nA + k] = val[k];
      }
      table[x * m + y] = to_sparse(psi);
    }
  Mat<S> epsvals = d.eps;
  v.U = Algebra<S>(m, std::move(table), P.from_values(epsvals));

  // s^r(a) = ε(-) a, t^r(a) = ε(- t(a))
  v.s = Mat<S>(m, nA);
  v.t = Mat<S>(m, nA);
  for (size_t a = 0; a < nA; ++a) {
    Mat<S> sv(nA, n), tv(nA, n);
    Mat<S> ta = d.U.rmul(d.tgt(a));
    Mat<S> et = d.eps * ta;
    for (size_t u = 0; u < n; ++u) {
      Vec<S> x = d.A.mul(d.eps.col(u), unit_vec<S>(nA, a));
      for (size_t i = 0; i < nA; ++i) {
        sv(i, u) = x[i];
        tv(i, u) = et(i, u);
      }
    }
    Vec<S> sc = P.from_values(sv), tc = P.from_values(tv);
    for (size_t i = 0; i < m; ++i) {
      v.s(i, a) = sc[i];
      v.t(i, a) = tc[i];
    }
  }
  // ∂ψ = ψ(1)
  v.eps = Mat<S>(nA, m);
  for (size_t x = 0; x < m; ++x) {
    Vec<S> a = P.eval[x] * d.U.unit;
    for (size_t i = 0; i < nA; ++i) v.eps(i, x) = a[i];
  }
  v.a_basis = P.dual_basis;
  v.delta = TMap<S>{{m, m}, std::vector<SparseVec<S>>(m)};

  // Δ_r through ψ ⊗ ψ' -> (u ⊗ u' -> ⟨ψ', u ◀ ⟨ψ, u'⟩⟩) on V_◀ ⊗_A ▶V.
  TensorQuotient<S> Qrc = right_coproduct_space(v);
  size_t rows = n * n * nA;
  // R[x * n + u'] = right multiplication by s(⟨φ_x, u'⟩)
  std::vector<Mat<S>> R(m * n);
  for (size_t x = 0; x < m; ++x)
    for (size_t u2 = 0; u2 < n; ++u2) R[x * n + u2] = d.U.rmul(d.src(P.eval[x].col(u2)));
  Mat<S> Z(rows, Qrc.dim());
  for (size_t c = 0; c < Qrc.dim(); ++c)
    for (const auto& [idx, coef] : Qrc.section(c)) {
      size_t x = idx / m, y = idx % m;
      for (size_t u2 = 0; u2 < n; ++u2) {
        Mat<S> G = P.eval[y] * R[x * n + u2];
        for (size_t u = 0; u < n; ++u)
          for (size_t i = 0; i < nA; ++i) Z((u * n + u2) * nA + i, c) += coef * G(i, u);
      }
    }
  if (rank(Z) != Qrc.dim()) throw std::logic_error("degenerate pairing on the dual coproduct space");
  Mat<S> T(rows, m);
  for (size_t x = 0; x < m; ++x)
    for (size_t u = 0; u < n; ++u)
      for (size_t u2 = 0; u2 < n; ++u2) {
        Vec<S> a = P.eval[x] * d.U.mul(unit_vec<S>(n, u), unit_vec<S>(n, u2));
        for (size_t i = 0; i < nA; ++i) T((u * n + u2) * nA + i, x) = a[i];
      }
  auto X = solve_many(Z, T);
  if (!X) throw std::logic_error("no dual coproduct satisfies the pairing equations");
  for (size_t x = 0; x < m; ++x) {
    SparseVec<S> col;
    for (size_t c = 0; c < Qrc.dim(); ++c)
      if (!(*X)(c, x).is_zero()) col = sparse_add(col, Qrc.section(c), (*X)(c, x));
    v.delta.cols[x] = std::move(col);
  }
  return Dual<S>{RightBialgebroid<S>{std::move(v)}, std::move(P)};
}

// U^* = Hom_Aop(U_◁, A), built as the coopposite of (U^coop)_*.
template <class S>
Dual<S> right_dual(const LeftBialgebroid<S>& L) {
  Dual<S> D = left_dual(coopposite(L));
  D.V = coopposite(D.V);
  D.V.d.name = L.d.name.empty() ? "" : L.d.name + "^*";
  D.V.d.base_labels = L.d.base_labels;
  D.P.side = DualPairing<S>::Side::Right;
  return D;
}

// The translation map ψ^[-] ⊗ ψ^[+] = Σ_j e^j ⊗ (e_j ➤ ψ) of U_* for a right Hopf U,
// with (u ➤ ψ)(u') = ε(u_[+] ◀ ψ(u_[-] u')).
template <class S>
TranslationMap<S> dual_hopf_structure(const LeftBialgebroid<S>& L, const Dual<S>& D) {
  const auto& d = L.d;
  const auto& P = D.P;
  TranslationMap<S> Tr = translation_map(L, Flavor::RightHopf);
  size_t n = d.n(), nA = d.nA(), m = P.dim();
  TranslationMap<S> out{Flavor::DualLeftHopf, TMap<S>{{m, m}, std::vector<SparseVec<S>>(m)}};
  std::vector<SparseVec<S>> te;
  for (size_t j = 0; j < P.r; ++j) te.push_back(sparse_apply(Tr.map.cols, to_sparse(P.basis.col(j))));
  for (size_t x = 0; x < m; ++x) {
    SparseAcc<S> acc;
    for (size_t j = 0; j < P.r; ++j) {
      Mat<S> vals(nA, n);
      for (const auto& [idx, c] : te[j]) {
        size_t up = idx / n, um = idx % n;
        Mat<S> left = d.U.lmul(unit_vec<S>(n, um));
        Mat<S> psi = P.eval[x] * left;  // u' -> ψ(u_[-] u')
        for (size_t u = 0; u < n; ++u) {
          Vec<S> e = d.eps * d.U.mul(unit_vec<S>(n, up), d.src(psi.col(u)));
          for (size_t i = 0; i < nA; ++i) vals(i, u) += c * e[i];
        }
      }
      Vec<S> arrow = P.from_values(vals);
      Vec<S> ej = P.dual_basis.col(j);
      for (size_t a = 0; a < m; ++a) {
        if (ej[a].is_zero()) continue;
        for (size_t b = 0; b < m; ++b)
          if (!arrow[b].is_zero()) acc.add(SparseVec<S>{{a * m + b, S(1)}}, ej[a] * arrow[b]);
      }
    }
    out.map.cols[x] = acc.finish();
  }
  return out;
}

// The evaluation U -> dual of U_* against ◀, together with its structure check.
template <class S>
struct DoubleDual {
  LeftBialgebroid<S> DD;
  Mat<S> iso;  // n x n, column u = coordinates of ⟨-, u⟩
  Report report;
};

template <class S>
DoubleDual<S> double_dual_iso(const LeftBialgebroid<S>& L) {
  const auto& d = L.d;
  size_t n = d.n(), nA = d.nA();
  Dual<S> D1 = left_dual(L);
  // Hom_A(U_*◀, A): the right dual of the left bialgebroid (U_*)^op, read back as a left bialgebroid.
  Dual<S> D2 = right_dual(op_left(D1.V));
  LeftBialgebroid<S> DD = op_left(D2.V);
  DD.d.name = d.name.empty() ? "" : d.name + "_*^*";
  DD.d.labels.clear();
  for (size_t u = 0; u < n; ++u) DD.d.labels.push_back("ev_" + d.label(u));
  size_t m = D1.P.dim();
  if (D2.P.dim() != n) throw std::logic_error("double dual has the wrong dimension");
  // ⟨ξ, ψ⟩ for every basis ξ of the double dual, as rows (ψ, i).
  Mat<S> M(m * nA, n), T(m * nA, n);
  for (size_t xi = 0; xi < n; ++xi)
    for (size_t psi = 0; psi < m; ++psi)
      for (size_t i = 0; i < nA; ++i) M(psi * nA + i, xi) = D2.P.eval[xi](i, psi);
  for (size_t u = 0; u < n; ++u)
    for (size_t psi = 0; psi < m; ++psi)
      for (size_t i = 0; i < nA; ++i) T(psi * nA + i, u) = D1.P.eval[psi](i, u);
  auto F = solve_many(M, T);
  if (!F) throw std::logic_error("evaluation is not representable in the double dual");
  DoubleDual<S> out{DD, *F, {}};
  Report& R = out.report;
  R.title = "double dual evaluation" + (d.name.empty() ? "" : " " + d.name);
  Mat<S> Fm = *F;
  TMap<S> Ft = tm_from_mat(Fm);
  auto QX = plain_space<S>(n);
  auto QA = plain_space<S>(nA);
  R.count("bijective");
  if (rank(Fm) != n) R.fail("bijective", "rank", "evaluation", "rank " + std::to_string(rank(Fm)));
  probe_equal(R, "unit", "ev_1 = 1", QX, TMap<S>{{n}, {to_sparse(Fm * d.U.unit)}},
              TMap<S>{{n}, {to_sparse(DD.d.U.unit)}}, [](size_t) { return std::string("1"); });
  probe_equal(R, "product", "ev_(uv) = ev_u ev_v", QX, tm_compose(Ft, mult_map(d.U)),
              products_of(DD.d.U, Fm, Fm), pair_witness(d));
  auto aw = [&d](size_t j) { return "a=" + d.base_label(j); };
  probe_equal(R, "source", "ev_s(a) = s(a)", QX, tm_from_mat(Fm * d.s), tm_from_mat(DD.d.s), aw);
  probe_equal(R, "target", "ev_t(a) = t(a)", QX, tm_from_mat(Fm * d.t), tm_from_mat(DD.d.t), aw);
  probe_equal(R, "counit", "ε(ev_u) = ε(u)", QA, tm_from_mat(DD.d.eps * Fm), tm_from_mat(d.eps), basis_witness(d));
  probe_equal(R, "coproduct", "Δ(ev_u) = ev_u(1) ⊗ ev_u(2)", left_coproduct_space(DD.d),
              tm_compose(DD.d.delta, Ft), tm_apply(tm_apply(d.delta, 0, Fm), 1, Fm), basis_witness(d));
  return out;
}

// Dual-basis and pairing identities of a dual constructed by left_dual.
template <class S>
Report check_dual_pairing(const LeftBialgebroid<S>& L, const Dual<S>& D) {
  const auto& d = L.d;
  const auto& v = D.V.d;
  const auto& P = D.P;
  size_t n = d.n(), nA = d.nA(), m = P.dim();
  Report R;
  R.title = "dual pairing" + (d.name.empty() ? "" : " " + d.name);
  auto QU = plain_space<S>(n), QV = plain_space<S>(m), QA = plain_space<S>(nA);
  {
    // u = Σ_j ⟨e^j, u⟩ ▷ e_j
    TMap<S> lhs{{n}, {}};
    for (size_t u = 0; u < n; ++u) {
      Vec<S> acc(n, S(0));
      for (size_t j = 0; j < P.r; ++j)
        acc = acc + d.U.mul(d.src(P.pair(P.dual_basis.col(j), unit_vec<S>(n, u))), P.basis.col(j));
      lhs.cols.push_back(to_sparse(acc));
    }
    probe_equal(R, "dual-basis", "u = Σ ⟨e^j,u⟩▷e_j", QU, lhs, tm_identity<S>(n), basis_witness(d));
    // ψ = Σ_j e^j ◀ ⟨ψ, e_j⟩
    TMap<S> rhs{{m}, {}};
    for (size_t x = 0; x < m; ++x) {
      Vec<S> acc(m, S(0));
      for (size_t j = 0; j < P.r; ++j)
        acc = acc + v.U.mul(P.dual_basis.col(j), v.src(P.pair(unit_vec<S>(m, x), P.basis.col(j))));
      rhs.cols.push_back(to_sparse(acc));
    }
    probe_equal(R, "dual-basis", "ψ = Σ e^j◀⟨ψ,e_j⟩", QV, rhs, tm_identity<S>(m), basis_witness(v, "ψ"));
  }
  {
    // five compatibilities on (ψ, u, a)
    TMap<S> l[5], r[5];
    for (auto& t : l) t.dims = {nA};
    for (auto& t : r) t.dims = {nA};
    for (size_t x = 0; x < m; ++x)
      for (size_t u = 0; u < n; ++u)
        for (size_t a = 0; a < nA; ++a) {
          Vec<S> psi = unit_vec<S>(m, x), uu = unit_vec<S>(n, u), aa = unit_vec<S>(nA, a);
          Vec<S> pu = P.pair(psi, uu);
          l[0].cols.push_back(to_sparse(P.pair(psi, d.U.mul(d.src(aa), uu))));
          r[0].cols.push_back(to_sparse(d.A.mul(aa, pu)));
          l[1].cols.push_back(to_sparse(P.pair(psi, d.U.mul(d.tgt(aa), uu))));
          r[1].cols.push_back(to_sparse(P.pair(v.U.mul(v.src(aa), psi), uu)));
          l[2].cols.push_back(to_sparse(P.pair(psi, d.U.mul(uu, d.tgt(aa)))));
          r[2].cols.push_back(to_sparse(P.pair(v.U.mul(v.tgt(aa), psi), uu)));
          l[3].cols.push_back(to_sparse(P.pair(psi, d.U.mul(uu, d.src(aa)))));
          r[3].cols.push_back(to_sparse(P.pair(v.U.mul(psi, v.tgt(aa)), uu)));
          l[4].cols.push_back(to_sparse(P.pair(v.U.mul(psi, v.src(aa)), uu)));
          r[4].cols.push_back(to_sparse(d.A.mul(pu, aa)));
        }
    auto w = [&d, &v, n, nA](size_t j) {
      size_t a = j % nA, u = (j / nA) % n, x = j / (nA * n);
      return "(ψ,u,a)=(" + v.label(x) + "," + d.label(u) + "," + d.base_label(a) + ")";
    };
    const char* probes[5] = {"⟨ψ,a▷u⟩ = a⟨ψ,u⟩", "⟨ψ,u◁a⟩ = ⟨a▷ψ,u⟩", "⟨ψ,a▶u⟩ = ⟨ψ◁a,u⟩",
                             "⟨ψ,u◀a⟩ = ⟨a▶ψ,u⟩", "⟨ψ◀a,u⟩ = ⟨ψ,u⟩a"};
    for (int k = 0; k < 5; ++k) probe_equal(R, "pairing", probes[k], QA, l[k], r[k], w);
  }
  {
    // ⟨ψ^(2), u ◀ ⟨ψ^(1), u'⟩⟩ = ⟨ψ, uu'⟩
    TMap<S> lhs{{nA}, {}}, rhs{{nA}, {}};
    for (size_t x = 0; x < m; ++x)
      for (size_t u = 0; u < n; ++u)
        for (size_t u2 = 0; u2 < n; ++u2) {
          Vec<S> acc(nA, S(0));
          for (const auto& [idx, c] : v.delta.cols[x]) {
            Vec<S> a = P.eval[idx / m].col(u2);
            acc = acc + scaled(P.eval[idx % m] * d.U.mul(unit_vec<S>(n, u), d.src(a)), c);
          }
          lhs.cols.push_back(to_sparse(acc));
          rhs.cols.push_back(to_sparse(P.pair(unit_vec<S>(m, x), d.U.mul(unit_vec<S>(n, u), unit_vec<S>(n, u2)))));
        }
    probe_equal(R, "coproduct-pairing", "⟨ψ^(2), u◀⟨ψ^(1),u'⟩⟩ = ⟨ψ,uu'⟩", QA, lhs, rhs, [&d, &v, n](size_t j) {
      return "(ψ,u,u')=(" + v.label(j / (n * n)) + "," + d.label((j / n) % n) + "," + d.label(j % n) + ")";
    });
  }
  return R;
}

// ⟨ψ^[-], u⟩ ▷ ψ^[+] = u ➤ ψ on all basis pairs.
template <class S>
Report check_dual_translation(const LeftBialgebroid<S>& L, const Dual<S>& D, const TranslationMap<S>& Tu) {
  const auto& d = L.d;
  const auto& v = D.V.d;
  const auto& P = D.P;
  size_t n = d.n(), nA = d.nA(), m = P.dim();
  TranslationMap<S> Tr = translation_map(L, Flavor::RightHopf);
  Report R;
  R.title = "dual translation map" + (d.name.empty() ? "" : " " + d.name);
  TMap<S> lhs{{m}, {}}, rhs{{m}, {}};
  for (size_t x = 0; x < m; ++x)
    for (size_t u = 0; u < n; ++u) {
      Vec<S> acc(m, S(0));
      for (const auto& [idx, c] : Tu.map.cols[x]) {
        Vec<S> a = P.eval[idx / m].col(u);
        acc = acc + scaled(v.U.mul(v.src(a), unit_vec<S>(m, idx % m)), c);
      }
      lhs.cols.push_back(to_sparse(acc));
      Mat<S> vals(nA, n);
      for (const auto& [idx, c] : Tr.map.cols[u]) {
        Mat<S> psi = P.eval[x] * d.U.lmul(unit_vec<S>(n, idx % n));
        for (size_t w = 0; w < n; ++w) {
          Vec<S> e = d.eps * d.U.mul(unit_vec<S>(n, idx / n), d.src(psi.col(w)));
          for (size_t i = 0; i < nA; ++i) vals(i, w) += c * e[i];
        }
      }
      rhs.cols.push_back(to_sparse(P.from_values(vals)));
    }
  probe_equal(R, "translation-pairing", "⟨ψ^[-],u⟩▷ψ^[+] = u➤ψ", plain_space<S>(m), lhs, rhs,
              [&d, &v, n](size_t j) { return "(ψ,u)=(" + v.label(j / n) + "," + d.label(j % n) + ")"; });
  return R;
}

}  // namespace bialg

#endif
