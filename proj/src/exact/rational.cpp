#include "seqlab/exact/rational.hpp"

#include <cstdlib>

#include "seqlab/error.hpp"

namespace seqlab {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw DivisionByZero();
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
    throw ParseError("malformed rational '" + std::string(text) + "'", slash + 1);
  }
  Integer den = Integer::parse(den_text);
  if (den.is_zero()) throw DivisionByZero();
  return Rational(Integer::parse(text.substr(0, slash)), den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DivisionByZero();
    return pow(Rational(1) / base, -exponent);
  }
  mpz_class num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), e);
  return Rational(Integer(std::move(num)), Integer(std::move(den)));
}

}  // namespace seqlab
