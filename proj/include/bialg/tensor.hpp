#ifndef BIALG_TENSOR_HPP
#define BIALG_TENSOR_HPP

#include <numeric>
#include <queue>
#include <unordered_map>
#include <vector>

#include "bialg/algebra.hpp"

namespace bialg {

inline size_t shape_total(const std::vector<size_t>& dims) {
  size_t t = 1;
  for (size_t d : dims) t *= d;
  return t;
}

inline std::vector<size_t> shape_decode(const std::vector<size_t>& dims, size_t idx) {
  std::vector<size_t> m(dims.size());
  for (size_t k = dims.size(); k-- > 0;) {
    m[k] = idx % dims[k];
    idx /= dims[k];
  }
  return m;
}

inline size_t shape_encode(const std::vector<size_t>& dims, const std::vector<size_t>& m) {
  size_t idx = 0;
  for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + m[k];
  return idx;
}

// Linear map from a space of dimension cols.size() into a plain tensor
// product of factor spaces with dimensions dims; columns are sparse lifts.
template <class S>
struct TMap {
  std::vector<size_t> dims;
  std::vector<SparseVec<S>> cols;

  size_t src() const { return cols.size(); }
  size_t tgt() const { return shape_total(dims); }
  bool operator==(const TMap&) const = default;
};

template <class S>
TMap<S> tm_from_mat(const Mat<S>& m) {
  return TMap<S>{{m.rows()}, mat_to_cols(m)};
}

template <class S>
TMap<S> tm_identity(size_t n) {
  TMap<S> t{{n}, {}};
  for (size_t i = 0; i < n; ++i) t.cols.push_back({{i, S(1)}});
  return t;
}

template <class S>
Mat<S> tm_to_mat(const TMap<S>& F) {
  return cols_to_mat(F.tgt(), F.cols);
}

// Replace factor i of every term by its image under G (G.src() == dims[i]).
template <class S>
TMap<S> tm_apply(const TMap<S>& F, size_t i, const TMap<S>& G) {
  if (F.dims.at(i) != G.src()) throw ShapeError("tm_apply: factor dimension");
  TMap<S> R;
  R.dims.insert(R.dims.end(), F.dims.begin(), F.dims.begin() + i);
  R.dims.insert(R.dims.end(), G.dims.begin(), G.dims.end());
  R.dims.insert(R.dims.end(), F.dims.begin() + i + 1, F.dims.end());
  size_t after = 1;
  for (size_t k = i + 1; k < F.dims.size(); ++k) after *= F.dims[k];
  size_t gt = G.tgt();
  R.cols.reserve(F.cols.size());
  for (const auto& col : F.cols) {
    SparseAcc<S> acc;
    for (const auto& [idx, c] : col) {
      size_t lo = idx % after;
      size_t mid = (idx / after) % F.dims[i];
      size_t hi = idx / after / F.dims[i];
      for (const auto& [g, x] : G.cols[mid]) acc.add((hi * gt + g) * after + lo, c * x);
    }
    R.cols.push_back(acc.finish());
  }
  return R;
}

template <class S>
TMap<S> tm_apply(const TMap<S>& F, size_t i, const Mat<S>& G) {
  return tm_apply(F, i, tm_from_mat(G));
}

// Multiply factors i and j (x_i x_j), store at position i and drop factor j.
template <class S>
TMap<S> tm_mul(const TMap<S>& F, size_t i, size_t j, const Algebra<S>& alg) {
  if (i == j || F.dims.at(i) != alg.n || F.dims.at(j) != alg.n) throw ShapeError("tm_mul: factors");
  TMap<S> R;
  for (size_t k = 0; k < F.dims.size(); ++k)
    if (k != j) R.dims.push_back(F.dims[k]);
  for (const auto& col : F.cols) {
    SparseAcc<S> acc;
    for (const auto& [idx, c] : col) {
      auto m = shape_decode(F.dims, idx);
      size_t a = m[i], b = m[j];
      std::vector<size_t> r;
      r.reserve(m.size() - 1);
      for (size_t k = 0; k < m.size(); ++k)
        if (k != j) r.push_back(m[k]);
      size_t pos = j < i ? i - 1 : i;
      for (const auto& [p, x] : alg.prod(a, b)) {
        r[pos] = p;
        acc.add(shape_encode(R.dims, r), c * x);
      }
    }
    R.cols.push_back(acc.finish());
  }
  return R;
}

// Replace factors i and j by G(x_i ⊗ x_j), G having one target factor and
// source index x_i * dims[j] + x_j; the result sits at i, or i - 1 if j < i.
template <class S>
TMap<S> tm_bilinear(const TMap<S>& F, size_t i, size_t j, const TMap<S>& G) {
  if (i == j || G.dims.size() != 1 || G.src() != F.dims.at(i) * F.dims.at(j)) throw ShapeError("tm_bilinear: shapes");
  TMap<S> R;
  size_t pos = j < i ? i - 1 : i;
  for (size_t k = 0; k < F.dims.size(); ++k)
    if (k != j) R.dims.push_back(F.dims[k]);
  R.dims[pos] = G.dims[0];
  for (const auto& col : F.cols) {
    SparseAcc<S> acc;
    for (const auto& [idx, c] : col) {
      auto m = shape_decode(F.dims, idx);
      std::vector<size_t> r;
      r.reserve(m.size() - 1);
      for (size_t k = 0; k < m.size(); ++k)
        if (k != j) r.push_back(m[k]);
      for (const auto& [p, x] : G.cols[m[i] * F.dims[j] + m[j]]) {
        r[pos] = p;
        acc.add(shape_encode(R.dims, r), c * x);
      }
    }
    R.cols.push_back(acc.finish());
  }
  return R;
}

// Contract factor i to base coordinates via phi and let them act on factor j:
// x_i (x) x_j  ->  sum_a phi(x_i)_a acts[a] x_j; factor i is dropped.
template <class S>
TMap<S> tm_contract(const TMap<S>& F, size_t i, size_t j, const Mat<S>& phi, const std::vector<Mat<S>>& acts) {
  if (i == j || phi.cols() != F.dims.at(i) || phi.rows() != acts.size()) throw ShapeError("tm_contract: shapes");
  std::vector<std::vector<SparseVec<S>>> acols;
  for (const auto& a : acts) acols.push_back(mat_to_cols(a));
  TMap<S> R;
  for (size_t k = 0; k < F.dims.size(); ++k)
    if (k != i) R.dims.push_back(F.dims[k]);
  size_t pos = i < j ? j - 1 : j;
  for (const auto& col : F.cols) {
    SparseAcc<S> acc;
    for (const auto& [idx, c] : col) {
      auto m = shape_decode(F.dims, idx);
      std::vector<size_t> r;
      for (size_t k = 0; k < m.size(); ++k)
        if (k != i) r.push_back(m[k]);
      for (size_t a = 0; a < phi.rows(); ++a) {
        const S& w = phi(a, m[i]);
        if (w.is_zero()) continue;
        for (const auto& [y, x] : acols[a][m[j]]) {
          r[pos] = y;
          acc.add(shape_encode(R.dims, r), c * w * x);
        }
      }
    }
    R.cols.push_back(acc.finish());
  }
  return R;
}

// (F ⊗ G)(a ⊗ b) = F(a) ⊗ G(b); source index a * G.src() + b.
template <class S>
TMap<S> tm_tensor(const TMap<S>& F, const TMap<S>& G) {
  TMap<S> R;
  R.dims = F.dims;
  R.dims.insert(R.dims.end(), G.dims.begin(), G.dims.end());
  size_t gt = G.tgt();
  for (const auto& a : F.cols)
    for (const auto& b : G.cols) {
      SparseVec<S> col;
      col.reserve(a.size() * b.size());
      for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) col.emplace_back(i * gt + j, x * y);
      R.cols.push_back(std::move(col));
    }
  return R;
}

// New factor k is old factor perm[k].
template <class S>
TMap<S> tm_permute(const TMap<S>& F, const std::vector<size_t>& perm) {
  TMap<S> R;
  for (size_t k : perm) R.dims.push_back(F.dims.at(k));
  for (const auto& col : F.cols) {
    SparseAcc<S> acc;
    for (const auto& [idx, c] : col) {
      auto m = shape_decode(F.dims, idx);
      std::vector<size_t> r(perm.size());
      for (size_t k = 0; k < perm.size(); ++k) r[k] = m[perm[k]];
      acc.add(shape_encode(R.dims, r), c);
    }
    R.cols.push_back(acc.finish());
  }
  return R;
}

// F o G where G lands in the flattened source of F.
template <class S>
TMap<S> tm_compose(const TMap<S>& F, const TMap<S>& G) {
  if (G.tgt() != F.src()) throw ShapeError("tm_compose: dimension");
  TMap<S> R{F.dims, {}};
  for (const auto& col : G.cols) R.cols.push_back(sparse_apply(F.cols, col));
  return R;
}

// Insert a constant factor v at position pos.
template <class S>
TMap<S> tm_insert(const TMap<S>& F, size_t pos, const Vec<S>& v) {
  TMap<S> R;
  R.dims = F.dims;
  R.dims.insert(R.dims.begin() + pos, v.size());
  for (const auto& col : F.cols) {
    SparseAcc<S> acc;
    for (const auto& [idx, c] : col) {
      auto m = shape_decode(F.dims, idx);
      m.insert(m.begin() + pos, 0);
      for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        m[pos] = k;
        acc.add(shape_encode(R.dims, m), c * v[k]);
      }
    }
    R.cols.push_back(acc.finish());
  }
  return R;
}

template <class S>
TMap<S> tm_sub(const TMap<S>& F, const TMap<S>& G) {
  if (F.dims != G.dims || F.src() != G.src()) throw ShapeError("tm_sub: shapes");
  TMap<S> R{F.dims, {}};
  for (size_t j = 0; j < F.src(); ++j) R.cols.push_back(sparse_add(F.cols[j], G.cols[j], S(-1)));
  return R;
}

template <class S>
TMap<S> tm_add(const TMap<S>& F, const TMap<S>& G) {
  if (F.dims != G.dims || F.src() != G.src()) throw ShapeError("tm_add: shapes");
  TMap<S> R{F.dims, {}};
  for (size_t j = 0; j < F.src(); ++j) R.cols.push_back(sparse_add(F.cols[j], G.cols[j]));
  return R;
}

// Precompose with a family of source vectors.
template <class S>
TMap<S> tm_restrict(const TMap<S>& F, const std::vector<SparseVec<S>>& srcvecs) {
  TMap<S> R{F.dims, {}};
  for (const auto& v : srcvecs) R.cols.push_back(sparse_apply(F.cols, v));
  return R;
}

// Identification op_left[a] on factor left == op_right[a] on factor right.
template <class S>
struct Pairing {
  size_t left;
  std::vector<Mat<S>> left_ops;
  size_t right;
  std::vector<Mat<S>> right_ops;
};

// Quotient of a plain tensor product of factor spaces by balancing relations
// between pairs of factors.  The pairings must form a forest.  Factors are
// joined one at a time; a new factor that is generated under its operators is
// presented through generators so that only syzygies need elimination.
template <class S>
class TensorQuotient {
 public:
  TensorQuotient() = default;
  TensorQuotient(std::vector<size_t> dims, std::vector<Pairing<S>> pairings)
      : dims_(std::move(dims)), pairings_(std::move(pairings)) {
    build();
  }

  size_t dim() const { return steps_.empty() ? 1 : steps_.back().q; }
  const std::vector<size_t>& dims() const { return dims_; }
  size_t ambient() const { return shape_total(dims_); }

  SparseVec<S> project(const SparseVec<S>& lift) const {
    SparseVec<S> p = to_processing(lift);
    return project_prefix(steps_.size() - 1, p);
  }
  Vec<S> project_dense(const SparseVec<S>& lift) const { return to_dense(project(lift), dim()); }

  Mat<S> project_map(const TMap<S>& F) const {
    if (F.dims != dims_) throw ShapeError("project_map: factor shape");
    Mat<S> m(dim(), F.src());
    for (size_t j = 0; j < F.src(); ++j)
      for (const auto& [i, x] : project(F.cols[j])) m(i, j) = x;
    return m;
  }

  // Canonical lift of quotient basis vector c.
  SparseVec<S> section(size_t c) const { return from_processing(sec_lift_.back().at(c)); }

  TMap<S> section_map() const {
    TMap<S> t{dims_, {}};
    for (size_t c = 0; c < dim(); ++c) t.cols.push_back(section(c));
    return t;
  }

  // Operator induced on the quotient by op acting on one factor.
  Mat<S> induced(size_t factor, const Mat<S>& op) const {
    TMap<S> lifted = tm_apply(section_map(), factor, op);
    return project_map(lifted);
  }

 private:
  struct Step {
    size_t factor = 0;
    size_t n = 0;
    size_t qprev = 1;
    size_t q = 0;
    size_t g = 0;
    std::vector<SparseVec<S>> gens;
    std::vector<SparseVec<S>> P;  // column (x*n + l)
    std::vector<std::pair<size_t, size_t>> sec;
  };

  void build() {
    size_t F = dims_.size();
    if (F == 0) throw ShapeError("tensor quotient without factors");
    for (size_t d : dims_)
      if (d == 0) throw ShapeError("tensor quotient with a zero-dimensional factor");
    std::vector<std::vector<size_t>> adj(F);
    for (size_t e = 0; e < pairings_.size(); ++e) {
      const auto& pr = pairings_[e];
      if (pr.left >= F || pr.right >= F || pr.left == pr.right) throw ShapeError("pairing factors");
      if (pr.left_ops.size() != pr.right_ops.size()) throw ShapeError("pairing operator counts");
      adj[pr.left].push_back(e);
      adj[pr.right].push_back(e);
    }
    std::vector<int> parent_edge(F, -1);
    std::vector<bool> seen(F, false);
    order_.clear();
    for (size_t root = 0; root < F; ++root) {
      if (seen[root]) continue;
      std::queue<size_t> bfs;
      bfs.push(root);
      seen[root] = true;
      while (!bfs.empty()) {
        size_t f = bfs.front();
        bfs.pop();
        order_.push_back(f);
        for (size_t e : adj[f]) {
          const auto& pr = pairings_[e];
          size_t o = pr.left == f ? pr.right : pr.left;
          if (seen[o]) {
            if (parent_edge[f] != static_cast<int>(e)) throw ShapeError("pairings contain a cycle");
            continue;
          }
          seen[o] = true;
          parent_edge[o] = static_cast<int>(e);
          bfs.push(o);
        }
      }
    }
    pos_.assign(F, 0);
    for (size_t k = 0; k < F; ++k) pos_[order_[k]] = k;
    pdims_.clear();
    for (size_t f : order_) pdims_.push_back(dims_[f]);

    steps_.clear();
    sec_lift_.clear();
    Step s0;
    s0.factor = order_[0];
    s0.n = pdims_[0];
    s0.qprev = 1;
    s0.q = s0.n;
    s0.g = s0.n;
    for (size_t l = 0; l < s0.n; ++l) {
      s0.P.push_back({{l, S(1)}});
      s0.sec.emplace_back(0, l);
    }
    steps_.push_back(std::move(s0));
    std::vector<SparseVec<S>> lifts0;
    for (size_t l = 0; l < pdims_[0]; ++l) lifts0.push_back({{l, S(1)}});
    sec_lift_.push_back(std::move(lifts0));

    for (size_t k = 1; k < F; ++k) {
      size_t f = order_[k];
      int e = parent_edge[f];
      if (e < 0)
        join_free(k);
      else {
        const auto& pr = pairings_[e];
        bool f_is_left = pr.left == f;
        size_t p = f_is_left ? pr.right : pr.left;
        const auto& opsP = f_is_left ? pr.right_ops : pr.left_ops;
        const auto& opsN = f_is_left ? pr.left_ops : pr.right_ops;
        join_paired(k, pos_[p], opsP, opsN);
      }
    }
  }

  void join_free(size_t k) {
    Step st;
    st.factor = order_[k];
    st.n = pdims_[k];
    st.qprev = steps_.back().q;
    st.g = st.n;
    st.q = st.qprev * st.n;
    for (size_t l = 0; l < st.n; ++l) st.gens.push_back({{l, S(1)}});
    for (size_t x = 0; x < st.qprev; ++x)
      for (size_t l = 0; l < st.n; ++l) {
        st.P.push_back({{x * st.n + l, S(1)}});
        st.sec.emplace_back(x, l);
      }
    push_step(std::move(st));
  }

  // Matrices of the prefix-induced operators for the edge to factor position p.
  std::vector<std::vector<SparseVec<S>>> induced_prefix(size_t k, size_t p, const std::vector<Mat<S>>& opsP) const {
    std::vector<size_t> pd(pdims_.begin(), pdims_.begin() + k);
    size_t qprev = steps_[k - 1].q;
    std::vector<std::vector<SparseVec<S>>> out;
    for (const auto& op : opsP) {
      auto opc = mat_to_cols(op);
      std::vector<SparseVec<S>> cols;
      cols.reserve(qprev);
      for (size_t x = 0; x < qprev; ++x) {
        SparseAcc<S> acc;
        for (const auto& [idx, c] : sec_lift_[k - 1][x]) {
          auto m = shape_decode(pd, idx);
          for (const auto& [y, v] : opc[m[p]]) {
            m[p] = y;
            acc.add(shape_encode(pd, m), c * v);
          }
        }
        cols.push_back(project_prefix(k - 1, acc.finish()));
      }
      out.push_back(std::move(cols));
    }
    return out;
  }

  void join_paired(size_t k, size_t p, const std::vector<Mat<S>>& opsP, const std::vector<Mat<S>>& opsN) {
    Step st;
    st.factor = order_[k];
    st.n = pdims_[k];
    st.qprev = steps_.back().q;
    size_t nB = opsN.size();
    for (const auto& m : opsN)
      if (m.rows() != st.n || m.cols() != st.n) throw ShapeError("pairing operator shape (new factor)");
    for (const auto& m : opsP)
      if (m.rows() != dims_[order_[p]] || m.cols() != dims_[order_[p]])
        throw ShapeError("pairing operator shape (earlier factor)");
    auto ind = induced_prefix(k, p, opsP);

    // generators of the new factor under its operators
    SpanBuilder<S> span(st.n);
    std::vector<Vec<S>> gcols;  // column (a, i) -> opsN[a] m_i, index i*nB + a
    bool generated = true;
    for (size_t l = 0; l < st.n; ++l) {
      Vec<S> el = unit_vec<S>(st.n, l);
      if (span.contains(el)) continue;
      st.gens.push_back({{l, S(1)}});
      for (size_t a = 0; a < nB; ++a) {
        Vec<S> im = opsN[a].col(l);
        span.add(im);
        gcols.push_back(std::move(im));
      }
      if (!span.contains(el)) {
        generated = false;
        break;
      }
    }
    if (!generated) {
      join_direct(k, std::move(st), ind, opsN);
      return;
    }
    st.g = st.gens.size();
    size_t g = st.g;
    Mat<S> G = Mat<S>::from_cols(st.n, gcols);
    Mat<S> K = kernel(G);
    auto sig = solve_many(G, Mat<S>::identity(st.n));
    if (!sig) throw ArithmeticError("generator presentation failed");

    size_t qt = st.qprev * g;
    // syzygy relations on prefix^g
    SpanBuilder<S> rel(qt);
    if (K.cols() > 0) {
      for (size_t kc = 0; kc < K.cols(); ++kc)
        for (size_t x = 0; x < st.qprev; ++x) {
          Vec<S> r(qt, S(0));
          for (size_t i = 0; i < g; ++i)
            for (size_t a = 0; a < nB; ++a) {
              const S& w = K(i * nB + a, kc);
              if (w.is_zero()) continue;
              for (const auto& [y, v] : ind[a][x]) r[y * g + i] += w * v;
            }
          rel.add(r);
        }
    }
    finish_step(st, qt, rel, [&](size_t x, size_t l) {
      Vec<S> w(qt, S(0));
      for (size_t i = 0; i < g; ++i)
        for (size_t a = 0; a < nB; ++a) {
          const S& c = (*sig)(i * nB + a, l);
          if (c.is_zero()) continue;
          for (const auto& [y, v] : ind[a][x]) w[y * g + i] += c * v;
        }
      return w;
    });
  }

  void join_direct(size_t k, Step st, const std::vector<std::vector<SparseVec<S>>>& ind,
                   const std::vector<Mat<S>>& opsN) {
    (void)k;
    st.gens.clear();
    for (size_t l = 0; l < st.n; ++l) st.gens.push_back({{l, S(1)}});
    st.g = st.n;
    size_t n = st.n, qt = st.qprev * n;
    SpanBuilder<S> rel(qt);
    for (size_t a = 0; a < opsN.size(); ++a)
      for (size_t x = 0; x < st.qprev; ++x)
        for (size_t l = 0; l < n; ++l) {
          Vec<S> r(qt, S(0));
          for (const auto& [y, v] : ind[a][x]) r[y * n + l] += v;
          for (size_t m = 0; m < n; ++m) {
            const S& v = opsN[a](m, l);
            if (!v.is_zero()) r[x * n + m] -= v;
          }
          rel.add(r);
        }
    finish_step(st, qt, rel, [&](size_t x, size_t l) { return unit_vec<S>(qt, x * n + l); });
  }

  template <class Fn>
  void finish_step(Step& st, size_t qt, const SpanBuilder<S>& rel, Fn image) {
    std::vector<bool> piv(qt, false);
    for (size_t p : rel.pivots()) piv[p] = true;
    std::vector<size_t> coord(qt, SIZE_MAX);
    size_t q = 0;
    for (size_t c = 0; c < qt; ++c)
      if (!piv[c]) {
        coord[c] = q++;
        st.sec.emplace_back(c / st.g, c % st.g);
      }
    st.q = q;
    st.P.reserve(st.qprev * st.n);
    for (size_t x = 0; x < st.qprev; ++x)
      for (size_t l = 0; l < st.n; ++l) {
        Vec<S> w = rel.reduce(image(x, l));
        SparseVec<S> col;
        for (size_t c = 0; c < qt; ++c)
          if (!w[c].is_zero()) col.emplace_back(coord[c], w[c]);
        st.P.push_back(std::move(col));
      }
    push_step(std::move(st));
  }

  void push_step(Step st) {
    size_t k = steps_.size();
    std::vector<size_t> pd(pdims_.begin(), pdims_.begin() + k + 1);
    std::vector<SparseVec<S>> lifts;
    lifts.reserve(st.q);
    for (size_t c = 0; c < st.q; ++c) {
      auto [x, i] = st.sec[c];
      SparseVec<S> lift;
      for (const auto& [a, u] : sec_lift_[k - 1][x])
        for (const auto& [b, v] : st.gens[i]) lift.emplace_back(a * st.n + b, u * v);
      lifts.push_back(std::move(lift));
    }
    steps_.push_back(std::move(st));
    sec_lift_.push_back(std::move(lifts));
  }

  // Project a lift over processing factors 0..k to prefix quotient k.
  SparseVec<S> project_prefix(size_t k, const SparseVec<S>& lift) const {
    size_t rest = 1;
    for (size_t j = 1; j <= k; ++j) rest *= pdims_[j];
    std::unordered_map<size_t, SparseAcc<S>> cur;
    for (const auto& [idx, c] : lift) cur[idx % rest].add(idx / rest, c);
    for (size_t s = 1; s <= k; ++s) {
      const Step& st = steps_[s];
      rest /= st.n;
      std::unordered_map<size_t, SparseAcc<S>> next;
      for (auto& [suffix, acc] : cur) {
        size_t l = suffix / rest, r = suffix % rest;
        SparseAcc<S>& dst = next[r];
        for (const auto& [x, c] : acc.finish()) dst.add(st.P[x * st.n + l], c);
      }
      cur = std::move(next);
    }
    if (cur.empty()) return {};
    return cur.begin()->second.finish();
  }

  SparseVec<S> to_processing(const SparseVec<S>& lift) const {
    SparseAcc<S> acc;
    for (const auto& [idx, c] : lift) {
      if (idx >= ambient()) throw ShapeError("lift index out of range");
      auto m = shape_decode(dims_, idx);
      std::vector<size_t> r(m.size());
      for (size_t k = 0; k < m.size(); ++k) r[k] = m[order_[k]];
      acc.add(shape_encode(pdims_, r), c);
    }
    return acc.finish();
  }

  SparseVec<S> from_processing(const SparseVec<S>& lift) const {
    SparseAcc<S> acc;
    for (const auto& [idx, c] : lift) {
      auto r = shape_decode(pdims_, idx);
      std::vector<size_t> m(r.size());
      for (size_t k = 0; k < r.size(); ++k) m[order_[k]] = r[k];
      acc.add(shape_encode(dims_, m), c);
    }
    return acc.finish();
  }

  std::vector<size_t> dims_;
  std::vector<Pairing<S>> pairings_;
  std::vector<size_t> order_, pos_, pdims_;
  std::vector<Step> steps_;
  std::vector<std::vector<SparseVec<S>>> sec_lift_;
};

// Columns j where F and G differ in the quotient, with the difference.
template <class S>
struct Mismatch {
  size_t column;
  SparseVec<S> difference;
};

template <class S>
std::vector<Mismatch<S>> compare_in(const TensorQuotient<S>& Q, const TMap<S>& F, const TMap<S>& G) {
  if (F.src() != G.src()) throw ShapeError("compare_in: source dimensions");
  if (F.dims != Q.dims() || G.dims != Q.dims()) throw ShapeError("compare_in: factor shapes");
  std::vector<Mismatch<S>> out;
  for (size_t j = 0; j < F.src(); ++j) {
    SparseVec<S> d = Q.project(sparse_add(F.cols[j], G.cols[j], S(-1)));
    if (!d.empty()) out.push_back({j, std::move(d)});
  }
  return out;
}

}  // namespace bialg

#endif
