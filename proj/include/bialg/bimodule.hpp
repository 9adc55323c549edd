#ifndef BIALG_BIMODULE_HPP
#define BIALG_BIMODULE_HPP

#include <array>
#include <optional>
#include <string>

#include "bialg/tensor.hpp"

namespace bialg {

// The four actions a▷m, m◁a, a▶m, m◀a.
enum class Act { TriL = 0, TriR = 1, BlkL = 2, BlkR = 3 };

inline const char* act_name(Act a) {
  switch (a) {
    case Act::TriL: return "tri-left";
    case Act::TriR: return "tri-right";
    case Act::BlkL: return "black-left";
    case Act::BlkR: return "black-right";
  }
  return "?";
}

inline bool act_is_left(Act a) { return a == Act::TriL || a == Act::BlkL; }

template <class S>
using Ops = std::vector<Mat<S>>;

template <class S>
struct ABimodule {
  size_t dim = 0;
  size_t base_dim = 0;
  std::array<std::optional<Ops<S>>, 4> acts;

  bool has(Act a) const { return acts[static_cast<int>(a)].has_value(); }
  const Ops<S>& ops(Act a) const {
    const auto& o = acts[static_cast<int>(a)];
    if (!o) throw ShapeError(std::string("action absent: ") + act_name(a));
    return *o;
  }
  void set(Act a, Ops<S> o) {
    if (o.size() != base_dim) throw ShapeError("action count differs from base dimension");
    for (const auto& m : o)
      if (m.rows() != dim || m.cols() != dim) throw ShapeError("action matrix shape");
    acts[static_cast<int>(a)] = std::move(o);
  }
};

// Pairs (left action, right action) that fail to commute, as (a, b, action names).
template <class S>
std::vector<std::string> bimodule_defects(const ABimodule<S>& M) {
  std::vector<std::string> out;
  for (Act l : {Act::TriL, Act::BlkL})
    for (Act r : {Act::TriR, Act::BlkR}) {
      if (!M.has(l) || !M.has(r)) continue;
      for (size_t a = 0; a < M.base_dim; ++a)
        for (size_t b = 0; b < M.base_dim; ++b)
          if (M.ops(l)[a] * M.ops(r)[b] != M.ops(r)[b] * M.ops(l)[a])
            out.push_back(std::string(act_name(l)) + "/" + act_name(r) + " at (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
    }
  return out;
}

// M ⊗_A N with the outer actions carried over.
template <class S>
struct BalancedTensor {
  TensorQuotient<S> Q;
  ABimodule<S> outer;  // actions induced on the quotient
  std::array<std::optional<Ops<S>>, 4> left_factor, right_factor;
};

template <class S>
BalancedTensor<S> tensor_over_A(const ABimodule<S>& M, Act right, const ABimodule<S>& N, Act left) {
  if (M.base_dim != N.base_dim) throw ShapeError("tensor_over_A: different base algebras");
  BalancedTensor<S> T;
  T.Q = TensorQuotient<S>({M.dim, N.dim}, {Pairing<S>{0, M.ops(right), 1, N.ops(left)}});
  T.outer.dim = T.Q.dim();
  T.outer.base_dim = M.base_dim;
  for (int k = 0; k < 4; ++k) {
    Act a = static_cast<Act>(k);
    if (M.has(a) && a != right) {
      Ops<S> o;
      for (const auto& m : M.ops(a)) o.push_back(T.Q.induced(0, m));
      T.left_factor[k] = std::move(o);
    }
    if (N.has(a) && a != left) {
      Ops<S> o;
      for (const auto& m : N.ops(a)) o.push_back(T.Q.induced(1, m));
      T.right_factor[k] = std::move(o);
    }
  }
  // left outer actions from M, right outer actions from N
  for (int k = 0; k < 4; ++k) {
    Act a = static_cast<Act>(k);
    if (act_is_left(a) && T.left_factor[k])
      T.outer.acts[k] = T.left_factor[k];
    else if (!act_is_left(a) && T.right_factor[k])
      T.outer.acts[k] = T.right_factor[k];
  }
  return T;
}

// Basis (as columns in quotient coordinates) of { x : left_op(a) x = right_op(a) x for all a }.
template <class S>
Mat<S> takeuchi_subspace(const TensorQuotient<S>& Q, size_t fl, const Ops<S>& opl, size_t fr, const Ops<S>& opr) {
  if (opl.size() != opr.size()) throw ShapeError("takeuchi_subspace: operator counts");
  size_t q = Q.dim();
  Mat<S> stacked(0, q);
  for (size_t a = 0; a < opl.size(); ++a) stacked = stacked.vstack(Q.induced(fl, opl[a]) - Q.induced(fr, opr[a]));
  return kernel(stacked);
}

template <class S>
Mat<S> takeuchi_subspace(const BalancedTensor<S>& T, Act on_left_factor, Act on_right_factor) {
  const auto& l = T.left_factor[static_cast<int>(on_left_factor)];
  const auto& r = T.right_factor[static_cast<int>(on_right_factor)];
  if (!l || !r) throw ShapeError("takeuchi_subspace: auxiliary action absent");
  size_t q = T.Q.dim();
  Mat<S> stacked(0, q);
  for (size_t a = 0; a < l->size(); ++a) stacked = stacked.vstack((*l)[a] - (*r)[a]);
  return kernel(stacked);
}

template <class S>
bool in_span(const Mat<S>& basis, const Vec<S>& v) {
  SpanBuilder<S> sp(basis.rows());
  for (size_t j = 0; j < basis.cols(); ++j) sp.add(basis.col(j));
  return sp.contains(v);
}

}  // namespace bialg

#endif
