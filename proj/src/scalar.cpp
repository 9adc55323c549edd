#include "bialg/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace bialg {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw ArithmeticError("zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ArithmeticError("bad rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw ArithmeticError("zero denominator: " + s);
  return Rational(q);
}

Rational Rational::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

Fp::Fp(long n, uint32_t p) : v_(n), p_(p) { normalize(); }

void Fp::normalize() {
  if (p_ == 0) return;
  v_ %= static_cast<int64_t>(p_);
  if (v_ < 0) v_ += p_;
}

uint32_t Fp::join(uint32_t a, uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw ArithmeticError("mixing different prime fields");
}

bool Fp::is_unit() const {
  if (p_ == 0) return v_ == 1 || v_ == -1;
  return v_ != 0;
}

Fp Fp::inv() const {
  if (p_ == 0) {
    if (v_ == 1 || v_ == -1) return *this;
    throw ArithmeticError("inverse of unbound integer constant");
  }
  if (v_ == 0) throw ArithmeticError("inverse of zero");
  int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    int64_t q = a / m;
    std::swap(a, m);
    m -= q * a;
    std::swap(x0, x1);
    x1 -= q * x0;
  }
  return Fp(x0, p_);
}

Fp Fp::operator-() const { return Fp(-v_, p_); }

Fp& Fp::operator+=(const Fp& o) {
  p_ = join(p_, o.p_);
  v_ += o.v_;
  normalize();
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  p_ = join(p_, o.p_);
  v_ -= o.v_;
  normalize();
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  p_ = join(p_, o.p_);
  normalize();
  int64_t b = o.v_;
  if (p_ != 0) {
    b %= static_cast<int64_t>(p_);
    if (b < 0) b += p_;
  }
  v_ *= b;
  normalize();
  return *this;
}

bool operator==(const Fp& a, const Fp& b) {
  uint32_t p = Fp::join(a.p_, b.p_);
  if (p == 0) return a.v_ == b.v_;
  return Fp(a.v_, p).v_ == Fp(b.v_, p).v_;
}

namespace {

uint32_t join_mod(uint32_t a, uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw ArithmeticError("mixing different prime fields");
}

uint32_t join_trunc(uint32_t a, uint32_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  return std::min(a, b);
}

}  // namespace

HPoly::HPoly(std::vector<int64_t> coeffs, uint32_t p, uint32_t N)
    : c_(std::move(coeffs)), p_(p), n_(N) {
  normalize();
}

HPoly HPoly::h_power(unsigned k, uint32_t p, uint32_t N) {
  std::vector<int64_t> c(k + 1, 0);
  c[k] = 1;
  return HPoly(std::move(c), p, N);
}

void HPoly::normalize() {
  if (n_ != 0 && c_.size() > n_) c_.resize(n_);
  if (p_ != 0)
    for (auto& x : c_) {
      x %= static_cast<int64_t>(p_);
      if (x < 0) x += p_;
    }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool HPoly::is_unit() const {
  if (c_.empty()) return false;
  int64_t c0 = c_[0];
  if (c0 == 0) return false;
  if (p_ == 0 && c0 != 1 && c0 != -1) return false;
  if (n_ == 0) return c_.size() == 1;
  return true;
}

HPoly HPoly::inv() const {
  if (!is_unit()) throw ArithmeticError("inverse of non-unit polynomial " + str());
  Fp c0inv = Fp(c_[0], p_).inv();
  if (n_ == 0) return HPoly({c0inv.value()}, p_, 0);
  // power series inverse modulo h^N
  std::vector<int64_t> r(n_, 0);
  for (uint32_t k = 0; k < n_; ++k) {
    Fp acc = k == 0 ? Fp(1, p_) : Fp(0, p_);
    for (uint32_t i = 1; i <= k; ++i) acc -= Fp(coeff(i), p_) * Fp(r[k - i], p_);
    r[k] = (acc * c0inv).value();
  }
  return HPoly(std::move(r), p_, n_);
}

unsigned HPoly::ord() const {
  if (c_.empty()) throw ArithmeticError("order of zero polynomial");
  unsigned k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

HPoly HPoly::div_h(unsigned k) const {
  if (k == 0 || c_.empty()) {
    if (n_ != 0 && k > 0) return HPoly({}, p_, n_ > k ? n_ - k : 1);
    return *this;
  }
  for (unsigned i = 0; i < k; ++i)
    if (coeff(i) != 0) throw ArithmeticError("h^" + std::to_string(k) + " does not divide " + str());
  std::vector<int64_t> r(c_.begin() + std::min<size_t>(k, c_.size()), c_.end());
  uint32_t N = n_ == 0 ? 0 : (n_ > k ? n_ - k : 1);
  return HPoly(std::move(r), p_, N);
}

HPoly HPoly::mul_h(unsigned k) const {
  std::vector<int64_t> r(k, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return HPoly(std::move(r), p_, n_);
}

HPoly HPoly::truncated(uint32_t N) const { return HPoly(c_, p_, join_trunc(n_, N)); }

HPoly HPoly::operator-() const {
  std::vector<int64_t> r(c_);
  for (auto& x : r) x = -x;
  return HPoly(std::move(r), p_, n_);
}

HPoly& HPoly::operator+=(const HPoly& o) {
  p_ = join_mod(p_, o.p_);
  n_ = join_trunc(n_, o.n_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  p_ = join_mod(p_, o.p_);
  n_ = join_trunc(n_, o.n_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  uint32_t p = join_mod(a.p_, b.p_);
  uint32_t N = join_trunc(a.n_, b.n_);
  if (a.c_.empty() || b.c_.empty()) return HPoly({}, p, N);
  size_t len = a.c_.size() + b.c_.size() - 1;
  if (N != 0) len = std::min<size_t>(len, N);
  std::vector<int64_t> r(len, 0);
  for (size_t i = 0; i < a.c_.size() && i < len; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size() && i + j < len; ++j) {
      r[i + j] += a.c_[i] * b.c_[j];
      if (p != 0) r[i + j] %= static_cast<int64_t>(p);
    }
  }
  return HPoly(std::move(r), p, N);
}

HPoly& HPoly::operator*=(const HPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const HPoly& a, const HPoly& b) { return (a - b).is_zero(); }

std::string HPoly::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

}  // namespace bialg
