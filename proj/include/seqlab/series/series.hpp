#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "seqlab/error.hpp"
#include "seqlab/exact/ring.hpp"

namespace seqlab {

inline constexpr std::size_t kDefaultOrder = 32;

/// Truncated formal power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
///
/// N is the truncation order: coefficients past it are unknown, not zero.
/// Every operation reports the order through which its result is exact,
/// and coefficient access past the order throws instead of returning zero.
template <Ring R>
class Series {
 public:
  explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("a series needs at least one coefficient");
  }

  static Series zero(std::size_t order) { return Series(std::vector<R>(order + 1, R(0))); }
  static Series constant(const R& c, std::size_t order) {
    Series s = zero(order);
    s.c_[0] = c;
    return s;
  }
  static Series one(std::size_t order) { return constant(R(1), order); }
  static Series monomial(const R& c, std::size_t exponent, std::size_t order) {
    Series s = zero(order);
    if (exponent <= order) s.c_[exponent] = c;
    return s;
  }
  static Series x(std::size_t order) { return monomial(R(1), 1, order); }

  // A polynomial in x given by its coefficient list, padded or cut to order.
  static Series from_polynomial(const std::vector<R>& coeffs, std::size_t order) {
    Series s = zero(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) s.c_[i] = coeffs[i];
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const std::vector<R>& coefficients() const { return c_; }

  const R& operator[](std::size_t i) const {
    if (i > order()) {
      throw DomainError("coefficient x^" + std::to_string(i) + " is beyond the truncation order " +
                        std::to_string(order()));
    }
    return c_[i];
  }

  // Index of the first nonzero coefficient; nullopt when zero through the order.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) return i;
    }
    return std::nullopt;
  }

  Series truncate(std::size_t order) const {
    if (order > this->order()) {
      throw DomainError("cannot extend a series of order " + std::to_string(this->order()) +
                        " to order " + std::to_string(order));
    }
    return Series(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  Series operator-() const {
    Series s = *this;
    for (auto& c : s.c_) c = -c;
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series s = zero(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series s = zero(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series s = zero(std::min(a.order(), b.order()));
    const std::size_t n = s.c_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (!b.c_[j].is_zero()) s.c_[i + j] = s.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return s;
  }
  friend Series operator*(const R& k, const Series& a) {
    Series s = a;
    for (auto& c : s.c_) c = k * c;
    return s;
  }

  // a/b for b = x^v * u with u(0) a unit. a must vanish below x^v; the
  // quotient is exact through order min(ord a, ord b) - v.
  friend Series operator/(const Series& a, const Series& b) {
    const auto v = b.valuation();
    if (!v) throw DivisionByZero();
    const R& lead = b.c_[*v];
    if (!is_unit(lead)) {
      throw DomainError("series divisor has non-invertible leading coefficient " + to_string(lead));
    }
    for (std::size_t i = 0; i < *v; ++i) {
      if (i <= a.order() && !a.c_[i].is_zero()) {
        throw DomainError("series quotient would have a pole at x = 0");
      }
    }
    const std::size_t base = std::min(a.order(), b.order());
    if (base < *v) throw DomainError("series quotient has no known coefficients");
    const std::size_t n = base - *v + 1;
    const R inv = unit_inverse(lead);
    std::vector<R> q(n, R(0));
    for (std::size_t k = 0; k < n; ++k) {
      R acc = a.c_[k + *v];
      for (std::size_t j = 1; j <= k; ++j) {
        const R& bj = b.c_[j + *v];
        if (!bj.is_zero() && !q[k - j].is_zero()) acc = acc - bj * q[k - j];
      }
      q[k] = inv * acc;
    }
    return Series(std::move(q));
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<R> c_;
};

template <Ring R>
Series<R> pow(const Series<R>& base, unsigned exponent) {
  Series<R> result = Series<R>::one(base.order());
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

// Divides every coefficient exactly by k.
template <Ring R>
Series<R> exact_scale_div(const Series<R>& a, const R& k) {
  std::vector<R> c = a.coefficients();
  for (auto& v : c) v = exact_div(v, k);
  return Series<R>(std::move(c));
}

/// outer(inner(x)) by Horner evaluation. inner must have zero constant
/// term. With v = valuation(inner) the result is exact through
/// min(ord inner, (ord outer + 1) * v - 1).
template <Ring R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner) {
  if (!inner[0].is_zero()) throw DomainError("composition needs an inner series with zero constant term");
  const auto v = inner.valuation();
  if (!v) return Series<R>::constant(outer[0], inner.order());
  const std::size_t order = std::min(inner.order(), (outer.order() + 1) * *v - 1);
  const Series<R> in = inner.truncate(order);
  const std::size_t top = std::min(outer.order(), order / *v);
  Series<R> acc = Series<R>::constant(outer[top], order);
  for (std::size_t i = top; i-- > 0;) acc = acc * in + Series<R>::constant(outer[i], order);
  return acc;
}

/// Square root with constant term 1, by Newton iteration s <- (s + a/s)/2
/// with doubling precision. The halving is an exact division, which is
/// well-defined over Integer too whenever the true root is integral.
template <Ring R>
Series<R> sqrt(const Series<R>& a) {
  if (a[0] != R(1)) throw DomainError("series square root needs constant term 1, got " + to_string(a[0]));
  const std::size_t order = a.order();
  Series<R> s = Series<R>::one(0);
  std::size_t done = 0;
  while (done < order) {
    const std::size_t next = std::min(order, 2 * done + 1);
    const Series<R> wide = Series<R>::from_polynomial(s.coefficients(), next);
    s = exact_scale_div(wide + a.truncate(next) / wide, R(2));
    done = next;
  }
  return s;
}

// Catalan generating function c(x) = C_0 + C_1 x + ... through order.
template <Ring R>
Series<R> catalan_gf(std::size_t order) {
  std::vector<R> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c.emplace_back(catalan_number(static_cast<unsigned>(n)));
  return Series<R>(std::move(c));
}

// One coefficient per line, in ring text form.
template <Ring R>
std::string to_csv(const Series<R>& s) {
  std::string out;
  for (const auto& c : s.coefficients()) out += to_string(c) + "\n";
  return out;
}

}  // namespace seqlab
