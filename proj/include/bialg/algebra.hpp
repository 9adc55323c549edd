#ifndef BIALG_ALGEBRA_HPP
#define BIALG_ALGEBRA_HPP

#include <string>
#include <vector>

#include "bialg/linalg.hpp"

namespace bialg {

// Finite-dimensional unital algebra given by structure constants.
template <class S>
struct Algebra {
  size_t n = 0;
  std::vector<SparseVec<S>> table;  // table[i*n+j] = e_i e_j
  Vec<S> unit;

  Algebra() = default;
  Algebra(size_t dim, std::vector<SparseVec<S>> t, Vec<S> u) : n(dim), table(std::move(t)), unit(std::move(u)) {
    if (n == 0) throw ShapeError("zero-dimensional algebra");
    if (table.size() != n * n) throw ShapeError("structure table size");
    if (unit.size() != n) throw ShapeError("unit length");
  }

  static Algebra ground() {
    return Algebra(1, {SparseVec<S>{{0, S(1)}}}, Vec<S>{S(1)});
  }

  const SparseVec<S>& prod(size_t i, size_t j) const { return table[i * n + j]; }

  SparseVec<S> mul(const SparseVec<S>& x, const SparseVec<S>& y) const {
    SparseAcc<S> acc;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) acc.add(prod(i, j), a * b);
    return acc.finish();
  }
  Vec<S> mul(const Vec<S>& x, const Vec<S>& y) const {
    return to_dense(mul(to_sparse(x), to_sparse(y)), n);
  }

  // Matrix of left (right) multiplication by x.
  Mat<S> lmul(const Vec<S>& x) const {
    Mat<S> m(n, n);
    for (size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : prod(i, j)) m(k, j) += x[i] * c;
    }
    return m;
  }
  Mat<S> rmul(const Vec<S>& x) const {
    Mat<S> m(n, n);
    for (size_t j = 0; j < n; ++j) {
      if (x[j].is_zero()) continue;
      for (size_t i = 0; i < n; ++i)
        for (const auto& [k, c] : prod(i, j)) m(k, i) += x[j] * c;
    }
    return m;
  }

  Algebra opposite() const {
    std::vector<SparseVec<S>> t(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) t[i * n + j] = prod(j, i);
    return Algebra(n, std::move(t), unit);
  }

  // Tensor product algebra on basis (i,j) -> i*m.n + j.
  Algebra tensor(const Algebra& m) const {
    size_t N = n * m.n;
    std::vector<SparseVec<S>> t(N * N);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < m.n; ++j)
        for (size_t k = 0; k < n; ++k)
          for (size_t l = 0; l < m.n; ++l) {
            SparseAcc<S> acc;
            for (const auto& [a, x] : prod(i, k))
              for (const auto& [b, y] : m.prod(j, l)) acc.add(a * m.n + b, x * y);
            t[(i * m.n + j) * N + (k * m.n + l)] = acc.finish();
          }
    Vec<S> u(N, S(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < m.n; ++j) u[i * m.n + j] = unit[i] * m.unit[j];
    return Algebra(N, std::move(t), std::move(u));
  }
};

template <class S>
Algebra<S> make_algebra(size_t n, const std::vector<Vec<S>>& dense_table, Vec<S> unit) {
  std::vector<SparseVec<S>> t;
  t.reserve(dense_table.size());
  for (const auto& v : dense_table) t.push_back(to_sparse(v));
  return Algebra<S>(n, std::move(t), std::move(unit));
}

struct AlgebraDefect {
  std::string law;      // "associativity", "left unit", "right unit"
  std::vector<size_t> basis;
};

template <class S>
std::vector<AlgebraDefect> algebra_defects(const Algebra<S>& A) {
  std::vector<AlgebraDefect> out;
  size_t n = A.n;
  SparseVec<S> u = to_sparse(A.unit);
  for (size_t i = 0; i < n; ++i) {
    SparseVec<S> e{{i, S(1)}};
    if (A.mul(u, e) != e) out.push_back({"left unit", {i}});
    if (A.mul(e, u) != e) out.push_back({"right unit", {i}});
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        SparseVec<S> lhs = A.mul(A.prod(i, j), SparseVec<S>{{k, S(1)}});
        SparseVec<S> rhs = A.mul(SparseVec<S>{{i, S(1)}}, A.prod(j, k));
        if (lhs != rhs) out.push_back({"associativity", {i, j, k}});
      }
  return out;
}

// Multiplication map A (x) A -> A as a matrix (n x n^2).
template <class S>
Mat<S> multiplication_matrix(const Algebra<S>& A) {
  Mat<S> m(A.n, A.n * A.n);
  for (size_t i = 0; i < A.n * A.n; ++i)
    for (const auto& [k, c] : A.table[i]) m(k, i) = c;
  return m;
}

}  // namespace bialg

#endif
