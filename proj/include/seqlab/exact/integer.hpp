#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace seqlab {

// Arbitrary-precision integer. Thin value wrapper over GMP.
class Integer {
 public:
  Integer() = default;
  Integer(long v) : v_(v) {}  // NOLINT: literals convert implicitly
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  static Integer parse(std::string_view text);

  const mpz_class& mpz() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  std::string to_string() const { return v_.get_str(); }

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

 private:
  mpz_class v_;
};

// Quotient a/b, which must be exact. Throws DivisionByZero or InexactDivision.
Integer exact_div(const Integer& a, const Integer& b);
bool is_unit(const Integer& a);
Integer unit_inverse(const Integer& a);
Integer pow(const Integer& base, unsigned exponent);
Integer binomial(long n, long k);
Integer catalan_number(unsigned n);
inline std::string to_string(const Integer& a) { return a.to_string(); }

}  // namespace seqlab
