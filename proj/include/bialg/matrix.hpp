#ifndef BIALG_MATRIX_HPP
#define BIALG_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bialg/scalar.hpp"

namespace bialg {

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
using Vec = std::vector<S>;

template <class S>
Vec<S> zeros(size_t n) {
  return Vec<S>(n, S(0));
}

template <class S>
Vec<S> unit_vec(size_t n, size_t i) {
  Vec<S> v(n, S(0));
  v[i] = S(1);
  return v;
}

template <class S>
bool is_zero(const Vec<S>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class S>
Vec<S> scaled(Vec<S> a, const S& c) {
  for (auto& x : a) x *= c;
  return a;
}

template <class S>
std::string vec_str(const Vec<S>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

// Dense row-major matrix.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(size_t r, size_t c) : rows_(r), cols_(c), a_(r * c, S(0)) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Mat from_cols(size_t rows, const std::vector<Vec<S>>& cols) {
    Mat m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw ShapeError("column length mismatch");
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  S& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec<S> col(size_t j) const {
    Vec<S> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<S> row(size_t i) const { return Vec<S>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  void set_col(size_t j, const Vec<S>& v) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (size_t i = 0; i < x.a_.size(); ++i)
      if (x.a_[i] != y.a_[i]) return false;
    return true;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  Mat& operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw ShapeError("matrix product shape");
    Mat r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        const S& a = x(i, k);
        if (a.is_zero()) continue;
        for (size_t j = 0; j < y.cols_; ++j) {
          const S& b = y(k, j);
          if (!b.is_zero()) r(i, j) += a * b;
        }
      }
    return r;
  }
  friend Vec<S> operator*(const Mat& x, const Vec<S>& v) {
    if (x.cols_ != v.size()) throw ShapeError("matrix-vector shape");
    Vec<S> r(x.rows_, S(0));
    for (size_t k = 0; k < x.cols_; ++k) {
      if (v[k].is_zero()) continue;
      for (size_t i = 0; i < x.rows_; ++i) {
        const S& a = x(i, k);
        if (!a.is_zero()) r[i] += a * v[k];
      }
    }
    return r;
  }

  Mat hstack(const Mat& o) const {
    if (rows_ != o.rows_) throw ShapeError("hstack rows");
    Mat r(rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
  }
  Mat vstack(const Mat& o) const {
    if (cols_ != o.cols_) throw ShapeError("vstack cols");
    Mat r(rows_ + o.rows_, cols_);
    std::copy(a_.begin(), a_.end(), r.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + a_.size());
    return r;
  }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

// Sparse vector: sorted (index, nonzero value) pairs.
template <class S>
using SparseVec = std::vector<std::pair<size_t, S>>;

template <class S>
class SparseAcc {
 public:
  void add(size_t i, const S& v) {
    if (v.is_zero()) return;
    auto it = m_.find(i);
    if (it == m_.end())
      m_.emplace(i, v);
    else
      it->second += v;
  }
  void add(const SparseVec<S>& v, const S& c) {
    for (const auto& [i, x] : v) add(i, x * c);
  }
  SparseVec<S> finish() const {
    SparseVec<S> out;
    out.reserve(m_.size());
    for (const auto& [i, x] : m_)
      if (!x.is_zero()) out.emplace_back(i, x);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }
  bool empty() const { return m_.empty(); }

 private:
  std::unordered_map<size_t, S> m_;
};

template <class S>
SparseVec<S> to_sparse(const Vec<S>& v) {
  SparseVec<S> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

template <class S>
Vec<S> to_dense(const SparseVec<S>& v, size_t n) {
  Vec<S> out(n, S(0));
  for (const auto& [i, x] : v) {
    if (i >= n) throw ShapeError("sparse index out of range");
    out[i] = x;
  }
  return out;
}

template <class S>
SparseVec<S> sparse_add(const SparseVec<S>& a, const SparseVec<S>& b, const S& cb = S(1)) {
  SparseVec<S> out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      S v = b[j].second * cb;
      if (!v.is_zero()) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      S v = a[i].second + b[j].second * cb;
      if (!v.is_zero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class S>
SparseVec<S> sparse_scaled(SparseVec<S> a, const S& c) {
  SparseVec<S> out;
  for (auto& [i, x] : a) {
    S v = x * c;
    if (!v.is_zero()) out.emplace_back(i, v);
  }
  return out;
}

// Sparse matrix stored by columns.
template <class S>
Mat<S> cols_to_mat(size_t rows, const std::vector<SparseVec<S>>& cols) {
  Mat<S> m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, x] : cols[j]) m(i, j) = x;
  return m;
}

template <class S>
std::vector<SparseVec<S>> mat_to_cols(const Mat<S>& m) {
  std::vector<SparseVec<S>> cols(m.cols());
  for (size_t j = 0; j < m.cols(); ++j)
    for (size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) cols[j].emplace_back(i, m(i, j));
  return cols;
}

template <class S>
SparseVec<S> sparse_apply(const std::vector<SparseVec<S>>& cols, const SparseVec<S>& v) {
  SparseAcc<S> acc;
  for (const auto& [j, x] : v) acc.add(cols[j], x);
  return acc.finish();
}

}  // namespace bialg

#endif
