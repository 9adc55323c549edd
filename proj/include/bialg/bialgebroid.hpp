#ifndef BIALG_BIALGEBROID_HPP
#define BIALG_BIALGEBROID_HPP

#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "bialg/bimodule.hpp"
#include "bialg/report.hpp"

namespace bialg {

// Shared carrier of (U, A, s, t, Δ, ε-or-∂); chirality lives in the wrappers.
template <class S>
struct BialgebroidData {
  std::string name;
  Algebra<S> U, A;
  Mat<S> s, t;    // nU x nA
  TMap<S> delta;  // U -> U ⊗_k U lift
  Mat<S> eps;     // nA x nU
  std::vector<std::string> labels, base_labels;
  std::optional<Mat<S>> a_basis;  // columns: a basis of ▷U over A (left case)

  size_t n() const { return U.n; }
  size_t nA() const { return A.n; }
  Vec<S> src(size_t a) const { return s.col(a); }
  Vec<S> tgt(size_t a) const { return t.col(a); }
  Vec<S> src(const Vec<S>& a) const { return s * a; }
  Vec<S> tgt(const Vec<S>& a) const { return t * a; }
  std::string label(size_t i) const { return i < labels.size() ? labels[i] : "e" + std::to_string(i); }
  std::string base_label(size_t i) const {
    return i < base_labels.size() ? base_labels[i] : "a" + std::to_string(i);
  }
};

template <class S>
struct LeftBialgebroid {
  BialgebroidData<S> d;
};

template <class S>
struct RightBialgebroid {
  BialgebroidData<S> d;
};

template <class S>
void validate_shapes(const BialgebroidData<S>& d) {
  size_t n = d.U.n, nA = d.A.n;
  if (d.s.rows() != n || d.s.cols() != nA) throw ShapeError("source matrix shape");
  if (d.t.rows() != n || d.t.cols() != nA) throw ShapeError("target matrix shape");
  if (d.eps.rows() != nA || d.eps.cols() != n) throw ShapeError("counit matrix shape");
  if (d.delta.dims != std::vector<size_t>{n, n} || d.delta.src() != n) throw ShapeError("coproduct shape");
  for (const auto& col : d.delta.cols)
    for (const auto& [i, x] : col)
      if (i >= n * n) throw ShapeError("coproduct index out of range");
  if (d.a_basis && d.a_basis->rows() != n) throw ShapeError("A-basis shape");
}

// Operators of the four actions of each base basis element on U.
template <class S>
Ops<S> action_ops(const BialgebroidData<S>& d, Act a) {
  Ops<S> out;
  for (size_t b = 0; b < d.nA(); ++b) {
    switch (a) {
      case Act::TriL: out.push_back(d.U.lmul(d.src(b))); break;
      case Act::TriR: out.push_back(d.U.lmul(d.tgt(b))); break;
      case Act::BlkL: out.push_back(d.U.rmul(d.tgt(b))); break;
      case Act::BlkR: out.push_back(d.U.rmul(d.src(b))); break;
    }
  }
  return out;
}

template <class S>
ABimodule<S> underlying_bimodule(const BialgebroidData<S>& d) {
  ABimodule<S> M{d.n(), d.nA(), {}};
  for (Act a : {Act::TriL, Act::TriR, Act::BlkL, Act::BlkR}) M.set(a, action_ops(d, a));
  return M;
}

// n-fold tensor of U balanced consecutively by (right of factor i, left of factor i+1).
template <class S>
TensorQuotient<S> chain_space(const BialgebroidData<S>& d, size_t factors, Act right, Act left) {
  Ops<S> r = action_ops(d, right), l = action_ops(d, left);
  std::vector<Pairing<S>> ps;
  for (size_t i = 0; i + 1 < factors; ++i) ps.push_back(Pairing<S>{i, r, i + 1, l});
  return TensorQuotient<S>(std::vector<size_t>(factors, d.n()), ps);
}

// U_◁ ⊗_A ▷U (and its threefold version), the codomain of a left coproduct.
template <class S>
TensorQuotient<S> left_coproduct_space(const BialgebroidData<S>& d, size_t factors = 2) {
  return chain_space(d, factors, Act::TriR, Act::TriL);
}

// V_◀ ⊗_B ▶V, the codomain of a right coproduct.
template <class S>
TensorQuotient<S> right_coproduct_space(const BialgebroidData<S>& d, size_t factors = 2) {
  return chain_space(d, factors, Act::BlkR, Act::BlkL);
}

// Balancing of factor left (by action la) against factor right (by action ra).
struct Link {
  size_t left;
  Act la;
  size_t right;
  Act ra;
};

template <class S>
TensorQuotient<S> linked_space(const BialgebroidData<S>& d, size_t factors, const std::vector<Link>& links) {
  std::vector<Pairing<S>> ps;
  for (const auto& l : links) ps.push_back(Pairing<S>{l.left, action_ops(d, l.la), l.right, action_ops(d, l.ra)});
  return TensorQuotient<S>(std::vector<size_t>(factors, d.n()), ps);
}

template <class S>
TensorQuotient<S> plain_space(size_t n) {
  return TensorQuotient<S>({n}, {});
}

template <class S>
std::string sparse_str(const SparseVec<S>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k].first << ":" << v[k].second.str();
  os << "}";
  return os.str();
}

using Witness = std::function<std::string(size_t)>;

template <class S>
void probe_equal(Report& R, const std::string& axiom, const std::string& probe, const TensorQuotient<S>& Q,
                 const TMap<S>& lhs, const TMap<S>& rhs, const Witness& wit) {
  R.count(axiom, lhs.src());
  for (const auto& mm : compare_in(Q, lhs, rhs))
    R.fail(axiom, probe, wit(mm.column), "difference " + sparse_str(mm.difference));
}

template <class S>
Witness basis_witness(const BialgebroidData<S>& d, const std::string& var = "u") {
  return [&d, var](size_t j) { return var + "=" + d.label(j); };
}

template <class S>
Witness pair_witness(const BialgebroidData<S>& d, const std::string& a = "u", const std::string& b = "v") {
  return [&d, a, b](size_t j) {
    return "(" + a + "," + b + ")=(" + d.label(j / d.n()) + "," + d.label(j % d.n()) + ")";
  };
}

template <class S>
TMap<S> mult_map(const Algebra<S>& A) {
  return tm_from_mat(multiplication_matrix(A));
}

// Columns (a, b) -> x(a) y(b) for maps x, y from the base into U.
template <class S>
TMap<S> products_of(const Algebra<S>& U, const Mat<S>& x, const Mat<S>& y) {
  TMap<S> out{{U.n}, {}};
  for (size_t a = 0; a < x.cols(); ++a)
    for (size_t b = 0; b < y.cols(); ++b) out.cols.push_back(to_sparse(U.mul(x.col(a), y.col(b))));
  return out;
}

// The axiom suite of a left bialgebroid; every violation is reported.
template <class S>
Report check_left_bialgebroid(const LeftBialgebroid<S>& L, const std::string& title = "left bialgebroid") {
  const BialgebroidData<S>& d = L.d;
  validate_shapes(d);
  Report R;
  R.title = title + (d.name.empty() ? "" : " " + d.name);
  size_t n = d.n(), nA = d.nA();
  auto QU = plain_space<S>(n);
  auto QA = plain_space<S>(nA);

  R.axiom("total-algebra");
  R.count("total-algebra", n * n * n + 2 * n);
  for (const auto& def : algebra_defects(d.U)) {
    std::string w;
    for (size_t k = 0; k < def.basis.size(); ++k) w += (k ? "," : "") + d.label(def.basis[k]);
    R.fail("total-algebra", def.law, "(" + w + ")");
  }
  R.axiom("base-algebra");
  R.count("base-algebra", nA * nA * nA + 2 * nA);
  for (const auto& def : algebra_defects(d.A)) {
    std::string w;
    for (size_t k = 0; k < def.basis.size(); ++k) w += (k ? "," : "") + d.base_label(def.basis[k]);
    R.fail("base-algebra", def.law, "(" + w + ")");
  }

  auto bpair = [&d, nA](size_t j) { return "(a,b)=(" + d.base_label(j / nA) + "," + d.base_label(j % nA) + ")"; };
  TMap<S> Smap = tm_from_mat(d.s), Tmap = tm_from_mat(d.t);
  TMap<S> multA = mult_map(d.A);
  {
    TMap<S> unitL{{n}, {to_sparse(d.src(d.A.unit))}}, unitR{{n}, {to_sparse(d.U.unit)}};
    probe_equal(R, "source-morphism", "s(1)=1", QU, unitL, unitR, [](size_t) { return std::string("1"); });
    probe_equal(R, "source-morphism", "s(ab)=s(a)s(b)", QU, tm_compose(Smap, multA), products_of(d.U, d.s, d.s),
                bpair);
  }
  {
    TMap<S> unitL{{n}, {to_sparse(d.tgt(d.A.unit))}}, unitR{{n}, {to_sparse(d.U.unit)}};
    probe_equal(R, "target-antimorphism", "t(1)=1", QU, unitL, unitR, [](size_t) { return std::string("1"); });
    // t(ab) = t(b)t(a)
    TMap<S> rhs{{n}, {}};
    for (size_t a = 0; a < nA; ++a)
      for (size_t b = 0; b < nA; ++b) rhs.cols.push_back(to_sparse(d.U.mul(d.tgt(b), d.tgt(a))));
    probe_equal(R, "target-antimorphism", "t(ab)=t(b)t(a)", QU, tm_compose(Tmap, multA), rhs, bpair);
  }
  {
    TMap<S> st = products_of(d.U, d.s, d.t), ts{{n}, {}};
    for (size_t a = 0; a < nA; ++a)
      for (size_t b = 0; b < nA; ++b) ts.cols.push_back(to_sparse(d.U.mul(d.tgt(b), d.src(a))));
    probe_equal(R, "source-target-commute", "s(a)t(b)=t(b)s(a)", QU, st, ts, bpair);
  }

  TensorQuotient<S> Qc = left_coproduct_space(d);
  Ops<S> triL = action_ops(d, Act::TriL), triR = action_ops(d, Act::TriR);
  Ops<S> blkL = action_ops(d, Act::BlkL), blkR = action_ops(d, Act::BlkR);
  auto au = [&d, n](size_t j) { return "(a,u)=(" + d.base_label(j / n) + "," + d.label(j % n) + ")"; };
  {
    TMap<S> lhs{{n, n}, {}}, rhs{{n, n}, {}}, lhs2{{n, n}, {}}, rhs2{{n, n}, {}};
    for (size_t a = 0; a < nA; ++a) {
      TMap<S> da = tm_apply(d.delta, 0, triL[a]);
      TMap<S> db = tm_apply(d.delta, 1, triR[a]);
      TMap<S> ta = tm_compose(d.delta, tm_from_mat(triL[a]));
      TMap<S> tb = tm_compose(d.delta, tm_from_mat(triR[a]));
      for (size_t u = 0; u < n; ++u) {
        lhs.cols.push_back(ta.cols[u]);
        rhs.cols.push_back(da.cols[u]);
        lhs2.cols.push_back(tb.cols[u]);
        rhs2.cols.push_back(db.cols[u]);
      }
    }
    probe_equal(R, "coproduct-linearity", "Δ(s(a)u)=s(a)u_(1)⊗u_(2)", Qc, lhs, rhs, au);
    probe_equal(R, "coproduct-linearity", "Δ(t(a)u)=u_(1)⊗t(a)u_(2)", Qc, lhs2, rhs2, au);
  }
  {
    TMap<S> lhs{{n, n}, {}}, rhs{{n, n}, {}};
    for (size_t a = 0; a < nA; ++a) {
      TMap<S> x = tm_apply(d.delta, 0, blkL[a]);
      TMap<S> y = tm_apply(d.delta, 1, blkR[a]);
      for (size_t u = 0; u < n; ++u) {
        lhs.cols.push_back(x.cols[u]);
        rhs.cols.push_back(y.cols[u]);
      }
    }
    probe_equal(R, "coproduct-takeuchi", "u_(1)t(a)⊗u_(2)=u_(1)⊗u_(2)s(a)", Qc, lhs, rhs, au);
  }
  {
    TMap<S> lhs = tm_compose(d.delta, mult_map(d.U));
    TMap<S> rhs = tm_mul(tm_mul(tm_tensor(d.delta, d.delta), 0, 2, d.U), 1, 2, d.U);
    probe_equal(R, "coproduct-multiplicative", "Δ(uv)=Δ(u)Δ(v)", Qc, lhs, rhs, pair_witness(d));
    TMap<S> one{{n}, {to_sparse(d.U.unit)}};
    TMap<S> oneone = tm_tensor(one, one);
    probe_equal(R, "coproduct-multiplicative", "Δ(1)=1⊗1", Qc, tm_compose(d.delta, one), oneone,
                [](size_t) { return std::string("1"); });
  }
  {
    TensorQuotient<S> Q3 = left_coproduct_space(d, 3);
    probe_equal(R, "coassociativity", "(Δ⊗id)Δ=(id⊗Δ)Δ", Q3, tm_apply(d.delta, 0, d.delta),
                tm_apply(d.delta, 1, d.delta), basis_witness(d));
  }
  {
    const std::string ax = "counit";
    TMap<S> id = tm_identity<S>(n);
    probe_equal(R, ax, "ε(u_(1))▷u_(2)=u", QU, tm_contract(d.delta, 0, 1, d.eps, triL), id, basis_witness(d));
    probe_equal(R, ax, "u_(1)◁ε(u_(2))=u", QU, tm_contract(d.delta, 1, 0, d.eps, triR), id, basis_witness(d));
    TMap<S> E = tm_from_mat(d.eps);
    auto aw = [&d](size_t j) { return "a=" + d.base_label(j); };
    probe_equal(R, ax, "ε(s(a))=a", QA, tm_compose(E, Smap), tm_identity<S>(nA), aw);
    probe_equal(R, ax, "ε(t(a))=a", QA, tm_compose(E, Tmap), tm_identity<S>(nA), aw);
    // ε(s(a)t(b)u) = a ε(u) b
    TMap<S> lhs{{nA}, {}}, rhs{{nA}, {}};
    for (size_t a = 0; a < nA; ++a)
      for (size_t b = 0; b < nA; ++b) {
        Vec<S> st = d.U.mul(d.src(a), d.tgt(b));
        for (size_t u = 0; u < n; ++u) {
          lhs.cols.push_back(to_sparse(d.eps * d.U.mul(st, unit_vec<S>(n, u))));
          rhs.cols.push_back(
              to_sparse(d.A.mul(d.A.mul(unit_vec<S>(nA, a), d.eps.col(u)), unit_vec<S>(nA, b))));
        }
      }
    probe_equal(R, ax, "ε(s(a)t(b)u)=aε(u)b", QA, lhs, rhs, [&d, n, nA](size_t j) {
      size_t u = j % n, ab = j / n;
      return "(a,b,u)=(" + d.base_label(ab / nA) + "," + d.base_label(ab % nA) + "," + d.label(u) + ")";
    });
    TMap<S> euv = tm_compose(E, mult_map(d.U)), eus{{nA}, {}}, eut{{nA}, {}};
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v) {
        Vec<S> ev = d.eps.col(v);
        eus.cols.push_back(to_sparse(d.eps * d.U.mul(unit_vec<S>(n, u), d.src(ev))));
        eut.cols.push_back(to_sparse(d.eps * d.U.mul(unit_vec<S>(n, u), d.tgt(ev))));
      }
    probe_equal(R, ax, "ε(uv)=ε(u s(ε(v)))", QA, euv, eus, pair_witness(d));
    probe_equal(R, ax, "ε(uv)=ε(u t(ε(v)))", QA, euv, eut, pair_witness(d));
  }
  return R;
}

// (V, B, s, t, Δ, ∂) right  <->  (V^op, B, t, s, Δ, ∂) left.
template <class S>
LeftBialgebroid<S> op_left(const RightBialgebroid<S>& V) {
  LeftBialgebroid<S> L{V.d};
  L.d.U = V.d.U.opposite();
  L.d.s = V.d.t;
  L.d.t = V.d.s;
  return L;
}

template <class S>
RightBialgebroid<S> op_right(const LeftBialgebroid<S>& U) {
  RightBialgebroid<S> V{U.d};
  V.d.U = U.d.U.opposite();
  V.d.s = U.d.t;
  V.d.t = U.d.s;
  return V;
}

template <class S>
Report check_right_bialgebroid(const RightBialgebroid<S>& V) {
  validate_shapes(V.d);
  return check_left_bialgebroid(op_left(V), "right bialgebroid");
}

// (U, A^op, t, s, Δ^cop, ε) is again a left bialgebroid.
template <class S>
LeftBialgebroid<S> coopposite(const LeftBialgebroid<S>& U) {
  LeftBialgebroid<S> C{U.d};
  C.d.A = U.d.A.opposite();
  C.d.s = U.d.t;
  C.d.t = U.d.s;
  C.d.delta = tm_permute(U.d.delta, {1, 0});
  C.d.name = U.d.name.empty() ? "" : U.d.name + "^coop";
  return C;
}

template <class S>
RightBialgebroid<S> coopposite(const RightBialgebroid<S>& V) {
  RightBialgebroid<S> C{V.d};
  C.d.A = V.d.A.opposite();
  C.d.s = V.d.t;
  C.d.t = V.d.s;
  C.d.delta = tm_permute(V.d.delta, {1, 0});
  return C;
}

template <class S>
LeftBialgebroid<S> trivial_bialgebroid() {
  LeftBialgebroid<S> L;
  L.d.name = "trivial";
  L.d.U = Algebra<S>::ground();
  L.d.A = Algebra<S>::ground();
  L.d.s = Mat<S>::identity(1);
  L.d.t = Mat<S>::identity(1);
  L.d.eps = Mat<S>::identity(1);
  L.d.delta = TMap<S>{{1, 1}, {{{0, S(1)}}}};
  L.d.a_basis = Mat<S>::identity(1);
  return L;
}

}  // namespace bialg

#endif
