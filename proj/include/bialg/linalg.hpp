#ifndef BIALG_LINALG_HPP
#define BIALG_LINALG_HPP

#include <optional>
#include <vector>

#include "bialg/matrix.hpp"

namespace bialg {

class PivotError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

template <class S>
struct Echelon {
  Mat<S> R;                    // reduced row echelon form
  std::vector<size_t> pivots;  // pivot column of each nonzero row
  Mat<S> T;                    // row operations: R = T * input (only when tracked)
  size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form with leftmost pivots.  Pivots must be units of the
// scalar ring; a column whose nonzero entries are all non-units raises PivotError.
template <class S>
Echelon<S> rref(Mat<S> m, bool track = false) {
  size_t rows = m.rows(), cols = m.cols();
  Echelon<S> e;
  if (track) e.T = Mat<S>::identity(rows);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = rows;
    bool nonzero = false;
    for (size_t i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      nonzero = true;
      if (m(i, c).is_unit()) {
        piv = i;
        break;
      }
    }
    if (piv == rows) {
      if (nonzero) throw PivotError("no unit pivot in column " + std::to_string(c));
      continue;
    }
    if (piv != r) {
      for (size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      if (track)
        for (size_t j = 0; j < rows; ++j) std::swap(e.T(piv, j), e.T(r, j));
    }
    S inv = m(r, c).inv();
    for (size_t j = c; j < cols; ++j) m(r, j) *= inv;
    if (track)
      for (size_t j = 0; j < rows; ++j) e.T(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      S f = m(i, c);
      for (size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      if (track)
        for (size_t j = 0; j < rows; ++j)
          if (!e.T(r, j).is_zero()) e.T(i, j) -= f * e.T(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.R = std::move(m);
  return e;
}

template <class S>
size_t rank(const Mat<S>& m) {
  return rref(m).rank();
}

// Basis of the right kernel, one column per free variable in increasing order.
template <class S>
Mat<S> kernel(const Mat<S>& m) {
  Echelon<S> e = rref(m);
  size_t cols = m.cols();
  std::vector<bool> is_piv(cols, false);
  for (size_t c : e.pivots) is_piv[c] = true;
  std::vector<Vec<S>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec<S> v(cols, S(0));
    v[f] = S(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.R(r, f);
    basis.push_back(std::move(v));
  }
  return Mat<S>::from_cols(cols, basis);
}

template <class S>
struct Solution {
  bool consistent = false;
  Vec<S> x;            // particular solution when consistent
  Vec<S> certificate;  // c with c*A = 0 and c*b != 0 when inconsistent
};

template <class S>
Solution<S> solve_linear(const Mat<S>& A, const Vec<S>& b) {
  if (A.rows() != b.size()) throw ShapeError("solve_linear: rhs length");
  Mat<S> aug(A.rows(), A.cols() + 1);
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  Echelon<S> e = rref(aug, true);
  Solution<S> s;
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == A.cols()) {
      s.consistent = false;
      s.certificate = e.T.row(r);
      return s;
    }
  }
  s.consistent = true;
  s.x.assign(A.cols(), S(0));
  for (size_t r = 0; r < e.pivots.size(); ++r) s.x[e.pivots[r]] = e.R(r, A.cols());
  return s;
}

// Solve A X = B for all columns at once; nullopt when some column is inconsistent.
template <class S>
std::optional<Mat<S>> solve_many(const Mat<S>& A, const Mat<S>& B) {
  if (A.rows() != B.rows()) throw ShapeError("solve_many: rhs rows");
  Echelon<S> e = rref(A.hstack(B));
  size_t n = A.cols();
  Mat<S> X(n, B.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (size_t j = 0; j < B.cols(); ++j) X(e.pivots[r], j) = e.R(r, n + j);
  }
  return X;
}

template <class S>
struct Inversion {
  std::optional<Mat<S>> inverse;
  Vec<S> kernel_vector;  // nonzero v with M v = 0 when singular
};

template <class S>
Inversion<S> invert(const Mat<S>& M) {
  if (M.rows() != M.cols()) throw ShapeError("invert: not square");
  Inversion<S> out;
  size_t n = M.rows();
  Echelon<S> e = rref(M.hstack(Mat<S>::identity(n)));
  bool full = e.rank() >= n;
  for (size_t r = 0; r < n && full; ++r)
    if (e.pivots[r] != r) full = false;
  if (!full) {
    Mat<S> K = kernel(M);
    if (K.cols() > 0) out.kernel_vector = K.col(0);
    return out;
  }
  Mat<S> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.R(i, n + j);
  out.inverse = std::move(inv);
  return out;
}

// Incrementally maintained span with membership test and reduction.
template <class S>
class SpanBuilder {
 public:
  explicit SpanBuilder(size_t n) : n_(n) {}
  size_t dim() const { return rows_.size(); }

  // Reduce v against the current basis; returns the residue.
  Vec<S> reduce(Vec<S> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const S& f = v[piv_[r]];
      if (f.is_zero()) continue;
      S c = f;
      for (size_t j = 0; j < n_; ++j)
        if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
    }
    return v;
  }
  bool contains(const Vec<S>& v) const { return is_zero(reduce(v)); }

  // Adds v if independent; returns whether the span grew.
  bool add(const Vec<S>& v) {
    Vec<S> w = reduce(v);
    size_t p = n_;
    for (size_t j = 0; j < n_; ++j) {
      if (w[j].is_zero()) continue;
      if (w[j].is_unit()) {
        p = j;
        break;
      }
      throw PivotError("no unit pivot while extending span");
    }
    if (p == n_) return false;
    S inv = w[p].inv();
    for (auto& x : w) x *= inv;
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      S f = row[p];
      for (size_t j = 0; j < n_; ++j)
        if (!w[j].is_zero()) row[j] -= f * w[j];
    }
    rows_.push_back(std::move(w));
    piv_.push_back(p);
    return true;
  }

  const std::vector<Vec<S>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return piv_; }

 private:
  size_t n_;
  std::vector<Vec<S>> rows_;
  std::vector<size_t> piv_;
};

}  // namespace bialg

#endif
