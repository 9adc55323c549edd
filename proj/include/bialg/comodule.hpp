#ifndef BIALG_COMODULE_HPP
#define BIALG_COMODULE_HPP

#include <string>

#include "bialg/bialgebroid.hpp"

namespace bialg {

// A module over the total algebra: u m for left modules, m v for right modules.
template <class S>
struct UModule {
  bool right = false;
  size_t dim = 0;
  Ops<S> act;  // total basis element -> operator on M
  std::vector<std::string> labels;

  Mat<S> op(const Vec<S>& x) const {
    Mat<S> m(dim, dim);
    for (size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) m += scaled_mat(act[i], x[i]);
    return m;
  }
  std::string label(size_t i) const { return i < labels.size() ? labels[i] : "m" + std::to_string(i); }

  static Mat<S> scaled_mat(const Mat<S>& a, const S& c) {
    Mat<S> r = a;
    for (size_t i = 0; i < r.rows(); ++i)
      for (size_t j = 0; j < r.cols(); ++j) r(i, j) *= c;
    return r;
  }
};

// The action as a bilinear map: U ⊗ M -> M (left, source index u * dim + m) or
// M ⊗ V -> M (right, source index m * n + v).
template <class S>
TMap<S> action_map(const UModule<S>& M) {
  size_t n = M.act.size();
  TMap<S> T{{M.dim}, {}};
  if (!M.right) {
    for (size_t u = 0; u < n; ++u)
      for (size_t m = 0; m < M.dim; ++m) T.cols.push_back(to_sparse(M.act[u].col(m)));
  } else {
    for (size_t m = 0; m < M.dim; ++m)
      for (size_t v = 0; v < n; ++v) T.cols.push_back(to_sparse(M.act[v].col(m)));
  }
  return T;
}

template <class S>
Report check_module(const Algebra<S>& U, const UModule<S>& M, const std::string& title = "module") {
  if (M.act.size() != U.n) throw ShapeError("module: one operator per basis element expected");
  for (const auto& a : M.act)
    if (a.rows() != M.dim || a.cols() != M.dim) throw ShapeError("module operator shape");
  Report R;
  R.title = title;
  R.axiom("module");
  R.count("module", U.n * U.n + 1);
  if (M.op(U.unit) != Mat<S>::identity(M.dim)) R.fail("module", "1m = m", "1", "unit acts nontrivially");
  for (size_t x = 0; x < U.n; ++x)
    for (size_t y = 0; y < U.n; ++y) {
      Mat<S> lhs = M.op(to_dense(U.prod(x, y), U.n));
      Mat<S> rhs = M.right ? M.act[y] * M.act[x] : M.act[x] * M.act[y];
      if (lhs != rhs)
        R.fail("module", M.right ? "m(uv) = (mu)v" : "(uv)m = u(vm)",
               "(u,v)=(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  return R;
}

// Right comodules m -> m_[0] ⊗ m_[1] and left comodules m -> m_(-1) ⊗ m_(0).
enum class CoSide { Right, Left };

template <class S>
struct UComodule {
  CoSide side = CoSide::Right;
  size_t dim = 0;
  Ops<S> base;       // the given base action: right for right comodules, left for left ones
  TMap<S> coaction;  // M -> M ⊗ U (right) or M -> U ⊗ M (left)
  std::vector<std::string> labels;

  std::string label(size_t i) const { return i < labels.size() ? labels[i] : "m" + std::to_string(i); }
};

namespace detail {

// Every flavor is checked as a right comodule over a left bialgebroid.
template <class S>
struct ReducedComodule {
  BialgebroidData<S> d;
  TMap<S> rho;
};

template <class S>
ReducedComodule<S> reduce(const LeftBialgebroid<S>& U, const UComodule<S>& C) {
  if (C.side == CoSide::Right) return {U.d, C.coaction};
  return {coopposite(U).d, tm_permute(C.coaction, {1, 0})};
}

template <class S>
ReducedComodule<S> reduce(const RightBialgebroid<S>& V, const UComodule<S>& C) {
  if (C.side == CoSide::Right) return {op_left(V).d, C.coaction};
  return {coopposite(op_left(V)).d, tm_permute(C.coaction, {1, 0})};
}

template <class S>
void validate(const BialgebroidData<S>& d, const UComodule<S>& C) {
  if (C.base.size() != d.nA()) throw ShapeError("comodule: one base operator per base element expected");
  for (const auto& b : C.base)
    if (b.rows() != C.dim || b.cols() != C.dim) throw ShapeError("comodule base operator shape");
  std::vector<size_t> dims = C.side == CoSide::Right ? std::vector<size_t>{C.dim, d.n()}
                                                       : std::vector<size_t>{d.n(), C.dim};
  if (C.coaction.dims != dims || C.coaction.src() != C.dim) throw ShapeError("coaction shape");
}

template <class S>
Ops<S> induced(const BialgebroidData<S>& d, const Ops<S>& base, const TMap<S>& rho) {
  Ops<S> out;
  Ops<S> blkR = action_ops(d, Act::BlkR);
  for (size_t a = 0; a < d.nA(); ++a) out.push_back(tm_to_mat(tm_contract(tm_apply(rho, 1, blkR[a]), 1, 0, d.eps, base)));
  return out;
}

template <class S>
void check_reduced(Report& R, const BialgebroidData<S>& d, const UComodule<S>& C, const TMap<S>& rho) {
  size_t dm = C.dim, nA = d.nA();
  TensorQuotient<S> Qm({dm, d.n()}, {Pairing<S>{0, C.base, 1, action_ops(d, Act::TriL)}});
  Ops<S> triR = action_ops(d, Act::TriR), blkL = action_ops(d, Act::BlkL), blkR = action_ops(d, Act::BlkR);
  Ops<S> ind = induced(d, C.base, rho);
  auto mw = [&C](size_t j) { return "m=" + C.label(j); };
  auto amw = [&C, &d, dm](size_t j) { return "(a,m)=(" + d.base_label(j / dm) + "," + C.label(j % dm) + ")"; };
  auto stack = [&](auto part) {
    TMap<S> out{{}, {}};
    for (size_t a = 0; a < nA; ++a) {
      TMap<S> p = part(a);
      out.dims = p.dims;
      for (auto& c : p.cols) out.cols.push_back(std::move(c));
    }
    return out;
  };

  R.axiom("base-action");
  R.count("base-action", nA * nA + 1);
  Mat<S> unitop(dm, dm);
  for (size_t a = 0; a < nA; ++a) unitop += UModule<S>::scaled_mat(C.base[a], d.A.unit[a]);
  if (unitop != Mat<S>::identity(dm)) R.fail("base-action", "m·1 = m", "1");
  for (size_t a = 0; a < nA; ++a)
    for (size_t b = 0; b < nA; ++b) {
      Vec<S> ab = d.A.mul(unit_vec<S>(nA, a), unit_vec<S>(nA, b));
      Mat<S> lhs(dm, dm);
      for (size_t k = 0; k < nA; ++k) lhs += UModule<S>::scaled_mat(C.base[k], ab[k]);
      if (lhs != C.base[b] * C.base[a])
        R.fail("base-action", "m·(ab) = (m·a)·b", "(a,b)=(" + d.base_label(a) + "," + d.base_label(b) + ")");
    }

  probe_equal(R, "linearity", "ρ(m·a) = m_[0] ⊗ t(a)m_[1]", Qm,
              stack([&](size_t a) { return tm_compose(rho, tm_from_mat(C.base[a])); }),
              stack([&](size_t a) { return tm_apply(rho, 1, triR[a]); }), amw);
  probe_equal(R, "linearity", "ρ(am) = m_[0] ⊗ m_[1]t(a)", Qm,
              stack([&](size_t a) { return tm_compose(rho, tm_from_mat(ind[a])); }),
              stack([&](size_t a) { return tm_apply(rho, 1, blkL[a]); }), amw);
  probe_equal(R, "takeuchi", "am_[0] ⊗ m_[1] = m_[0] ⊗ m_[1]s(a)", Qm,
              stack([&](size_t a) { return tm_apply(rho, 0, ind[a]); }),
              stack([&](size_t a) { return tm_apply(rho, 1, blkR[a]); }), amw);
  TensorQuotient<S> Q3({dm, d.n(), d.n()}, {Pairing<S>{0, C.base, 1, action_ops(d, Act::TriL)},
                                            Pairing<S>{1, triR, 2, action_ops(d, Act::TriL)}});
  probe_equal(R, "coassociativity", "(ρ⊗id)ρ = (id⊗Δ)ρ", Q3, tm_apply(rho, 0, rho), tm_apply(rho, 1, d.delta), mw);
  probe_equal(R, "counit", "m_[0]·ε(m_[1]) = m", plain_space<S>(dm), tm_contract(rho, 1, 0, d.eps, C.base),
              tm_identity<S>(dm), mw);
}

}  // namespace detail

template <class S>
Report check_comodule(const LeftBialgebroid<S>& U, const UComodule<S>& C) {
  detail::validate(U.d, C);
  Report R;
  R.title = std::string(C.side == CoSide::Right ? "right" : "left") + " comodule over a left bialgebroid";
  auto red = detail::reduce(U, C);
  detail::check_reduced(R, red.d, C, red.rho);
  return R;
}

template <class S>
Report check_comodule(const RightBialgebroid<S>& V, const UComodule<S>& C) {
  detail::validate(V.d, C);
  Report R;
  R.title = std::string(C.side == CoSide::Right ? "right" : "left") + " comodule over a right bialgebroid";
  auto red = detail::reduce(V, C);
  detail::check_reduced(R, red.d, C, red.rho);
  return R;
}

// The base action a comodule induces through the counit: the left action
// m_[0]·ε(m_[1]s(a)) of a right comodule over a left bialgebroid, and the
// corresponding mirrored formulas for the other flavors.
template <class S>
Ops<S> induced_action(const LeftBialgebroid<S>& U, const UComodule<S>& C) {
  auto red = detail::reduce(U, C);
  return detail::induced(red.d, C.base, red.rho);
}

template <class S>
Ops<S> induced_action(const RightBialgebroid<S>& V, const UComodule<S>& C) {
  auto red = detail::reduce(V, C);
  return detail::induced(red.d, C.base, red.rho);
}

// Codomain of the coaction: M ⊗_A ▷U, U◁ ⊗_A M, V◀ ⊗_B M, M ⊗_B ▶V.
template <class S>
TensorQuotient<S> coaction_space(const LeftBialgebroid<S>& U, const UComodule<S>& C) {
  const auto& d = U.d;
  if (C.side == CoSide::Right)
    return TensorQuotient<S>({C.dim, d.n()}, {Pairing<S>{0, C.base, 1, action_ops(d, Act::TriL)}});
  return TensorQuotient<S>({d.n(), C.dim}, {Pairing<S>{0, action_ops(d, Act::TriR), 1, C.base}});
}

template <class S>
TensorQuotient<S> coaction_space(const RightBialgebroid<S>& V, const UComodule<S>& C) {
  const auto& d = V.d;
  if (C.side == CoSide::Right)
    return TensorQuotient<S>({C.dim, d.n()}, {Pairing<S>{0, C.base, 1, action_ops(d, Act::BlkL)}});
  return TensorQuotient<S>({d.n(), C.dim}, {Pairing<S>{0, action_ops(d, Act::BlkR), 1, C.base}});
}

// Left action in the ▷ slot, right action in the ◁ slot.
template <class S, class B>
ABimodule<S> forgetful_actions(const B& owner, const UComodule<S>& C) {
  ABimodule<S> M{C.dim, owner.d.nA(), {}};
  Ops<S> ind = induced_action(owner, C);
  M.set(Act::TriL, C.side == CoSide::Right ? ind : C.base);
  M.set(Act::TriR, C.side == CoSide::Right ? C.base : ind);
  return M;
}

// a ▷ m ◁ b = s(a)t(b)m for left modules, b ▶ n ◀ a = n s(a)t(b) for right modules.
template <class S>
ABimodule<S> forgetful_actions(const BialgebroidData<S>& d, const UModule<S>& M) {
  ABimodule<S> out{M.dim, d.nA(), {}};
  Ops<S> s, t;
  for (size_t a = 0; a < d.nA(); ++a) {
    s.push_back(M.op(d.src(a)));
    t.push_back(M.op(d.tgt(a)));
  }
  if (!M.right) {
    out.set(Act::TriL, s);
    out.set(Act::TriR, t);
  } else {
    out.set(Act::BlkR, s);
    out.set(Act::BlkL, t);
  }
  return out;
}

// (U, Δ) as a right comodule over itself, with m·a = t(a)m.
template <class S>
UComodule<S> regular_comodule(const LeftBialgebroid<S>& U) {
  UComodule<S> C;
  C.side = CoSide::Right;
  C.dim = U.d.n();
  C.base = action_ops(U.d, Act::TriR);
  C.coaction = U.d.delta;
  C.labels = U.d.labels;
  return C;
}

// A as a right comodule, a -> 1 ⊗ t(a), with the multiplication of A as right action.
template <class S>
UComodule<S> base_comodule(const LeftBialgebroid<S>& U) {
  const auto& d = U.d;
  size_t nA = d.nA(), n = d.n();
  UComodule<S> C;
  C.side = CoSide::Right;
  C.dim = nA;
  for (size_t a = 0; a < nA; ++a) C.base.push_back(d.A.rmul(unit_vec<S>(nA, a)));
  C.coaction = tm_tensor(TMap<S>{{nA}, {to_sparse(d.A.unit)}}, tm_from_mat(d.t));
  C.labels = d.base_labels;
  return C;
}

// The counit action u·a = ε(u s(a)) making A a left U-module.
template <class S>
UModule<S> base_module(const BialgebroidData<S>& d) {
  UModule<S> M;
  M.dim = d.nA();
  for (size_t u = 0; u < d.n(); ++u) {
    Mat<S> op(d.nA(), d.nA());
    for (size_t a = 0; a < d.nA(); ++a) op.set_col(a, d.eps * d.U.mul(unit_vec<S>(d.n(), u), d.src(a)));
    M.act.push_back(std::move(op));
  }
  M.labels = d.base_labels;
  return M;
}

}  // namespace bialg

#endif
