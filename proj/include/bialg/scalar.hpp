#ifndef BIALG_SCALAR_HPP
#define BIALG_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bialg {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact rational number.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational parse(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_unit() const { return !is_zero(); }
  Rational inv() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  std::string str() const;
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

// Element of Z/p.  p == 0 marks an integer constant not yet bound to a field;
// it adopts the modulus of the first bound operand it meets.
class Fp {
 public:
  Fp() = default;
  Fp(long n) : v_(n), p_(0) {}
  Fp(long n, uint32_t p);

  uint32_t modulus() const { return p_; }
  int64_t value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const;
  Fp inv() const;

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }

 private:
  static uint32_t join(uint32_t a, uint32_t b);
  void normalize();
  int64_t v_ = 0;
  uint32_t p_ = 0;
};

// Polynomial in h over Z/p, optionally truncated modulo h^N.
// N == 0 means exact (untruncated) polynomial arithmetic.
class HPoly {
 public:
  HPoly() = default;
  HPoly(long n) : c_{n}, p_(0), n_(0) { normalize(); }
  HPoly(std::vector<int64_t> coeffs, uint32_t p, uint32_t N);

  static HPoly h_power(unsigned k, uint32_t p, uint32_t N);

  uint32_t modulus() const { return p_; }
  uint32_t truncation() const { return n_; }
  const std::vector<int64_t>& coeffs() const { return c_; }
  int64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }

  bool is_zero() const { return c_.empty(); }
  bool is_unit() const;
  HPoly inv() const;
  // Least exponent with nonzero coefficient; throws on zero.
  unsigned ord() const;
  // Exact division by h^k; throws when h^k does not divide.
  HPoly div_h(unsigned k) const;
  HPoly mul_h(unsigned k) const;
  HPoly truncated(uint32_t N) const;
  HPoly exact() const { return HPoly(c_, p_, 0); }
  Fp mod_h() const { return Fp(coeff(0), p_); }

  HPoly operator-() const;
  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  HPoly& operator*=(const HPoly& o);
  HPoly& operator/=(const HPoly& o) { return *this *= o.inv(); }
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator/(HPoly a, const HPoly& b) { return a /= b; }
  friend bool operator==(const HPoly& a, const HPoly& b);
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();
  std::vector<int64_t> c_;
  uint32_t p_ = 0;
  uint32_t n_ = 0;
};

template <class S>
inline S zero() { return S(0); }
template <class S>
inline S one() { return S(1); }

}  // namespace bialg

#endif
