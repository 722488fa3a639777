#include "seqlab/exact/integer.hpp"

#include <cctype>

#include "seqlab/error.hpp"

namespace seqlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw ParseError("malformed integer '" + std::string(text) + "'", 0);
  mpz_class v(std::string(body), 10);
  if (negative) v = -v;
  return Integer(std::move(v));
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!mpz_divisible_p(a.mpz().get_mpz_t(), b.mpz().get_mpz_t())) {
    throw InexactDivision("integer division " + a.to_string() + " / " + b.to_string() +
                          " is not exact");
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(q));
}

bool is_unit(const Integer& a) {
  return a == Integer(1) || a == Integer(-1);
}

Integer unit_inverse(const Integer& a) {
  if (!is_unit(a)) throw DomainError(a.to_string() + " is not a unit of the integers");
  return a;
}

Integer pow(const Integer& base, unsigned exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Integer(std::move(r));
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Integer(std::move(r));
}

Integer catalan_number(unsigned n) {
  return exact_div(binomial(2L * n, n), Integer(static_cast<long>(n) + 1));
}

}  // namespace seqlab
