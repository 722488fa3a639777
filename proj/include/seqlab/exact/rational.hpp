#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "seqlab/exact/integer.hpp"

namespace seqlab {

/// Exact rational number, always in lowest terms with a positive
/// denominator; zero is 0/1.
///
/// Text form: optional sign, digits, optional "/" and positive digits,
/// e.g. "-101/3".
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT: literals convert implicitly
  explicit Rational(const Integer& v) : v_(v.mpz()) {}
  Rational(const Integer& num, const Integer& den);

  static Rational parse(std::string_view text);

  Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(v_.get_den())); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  std::string to_string() const { return v_.get_str(); }
  const mpq_class& mpq() const { return v_; }

  Rational operator-() const { return from_mpq(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

 private:
  static Rational from_mpq(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }

  mpq_class v_;
};

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline bool is_unit(const Rational& a) { return !a.is_zero(); }
inline Rational unit_inverse(const Rational& a) { return Rational(1) / a; }
// Negative exponents are allowed for a nonzero base.
Rational pow(const Rational& base, long exponent);
inline std::string to_string(const Rational& a) { return a.to_string(); }

}  // namespace seqlab
