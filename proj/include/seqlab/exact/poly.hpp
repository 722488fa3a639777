#pragma once

#include <atomic>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "seqlab/error.hpp"
#include "seqlab/exact/integer.hpp"
#include "seqlab/exact/rational.hpp"

namespace seqlab {

using Bindings = std::map<std::string, Rational>;

/// Sparse multivariate polynomial over the rationals in named parameters.
///
/// Canonical form: variables sorted by name and restricted to those that
/// actually occur; terms keyed by exponent vector in graded-lex order; no
/// zero coefficients. Two polys are equal iff their canonical forms are.
///
/// Products whose total degree would exceed degree_cap() throw
/// DegreeCapExceeded rather than truncating.
class Poly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, GrlexLess>;

  Poly() = default;
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  Poly(const Rational& c);             // NOLINT
  explicit Poly(const Integer& c) : Poly(Rational(c)) {}

  static Poly variable(const std::string& name);
  // Reads the sum-of-monomials form produced by to_string(), e.g.
  // "-1 - 4*r - r^2 + 1/2*r*s^3".
  static Poly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  Rational constant_term() const;
  unsigned total_degree() const;
  unsigned degree_in(const std::string& name) const;
  // Coefficients of r^0..r^deg for a poly in (at most) the single variable r.
  std::vector<Rational> univariate_coefficients(const std::string& name) const;

  // Substitutes every variable; throws DomainError naming the first
  // variable without a binding.
  Rational eval(const Bindings& bindings) const;

  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

  static unsigned degree_cap() { return degree_cap_.load(); }
  static void set_degree_cap(unsigned cap) { degree_cap_.store(cap); }

 private:
  friend Poly exact_div(const Poly& a, const Poly& b);

  void normalize();
  static void align(Poly& a, Poly& b);

  std::vector<std::string> vars_;
  Terms terms_;

  static inline std::atomic<unsigned> degree_cap_{64};
};

class DegreeCapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

// Restores the previous cap on scope exit.
class DegreeCapScope {
 public:
  explicit DegreeCapScope(unsigned cap) : saved_(Poly::degree_cap()) { Poly::set_degree_cap(cap); }
  ~DegreeCapScope() { Poly::set_degree_cap(saved_); }
  DegreeCapScope(const DegreeCapScope&) = delete;
  DegreeCapScope& operator=(const DegreeCapScope&) = delete;

 private:
  unsigned saved_;
};

// Exact multivariate quotient; throws InexactDivision when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
inline bool is_unit(const Poly& a) { return a.is_constant() && !a.is_zero(); }
Poly unit_inverse(const Poly& a);
Poly pow(const Poly& base, unsigned exponent);
inline std::string to_string(const Poly& p) { return p.to_string(); }

}  // namespace seqlab
