#pragma once

#include <cstddef>
#include <string>

#include "seqlab/error.hpp"
#include "seqlab/exact/matrix.hpp"
#include "seqlab/series/series.hpp"

namespace seqlab {

/// (Stretched) Riordan array (g, x^stretch * f) with entries
/// t_{n,k} = [x^n] g (x^stretch f)^k, acting on h by h -> g * h(x^stretch f).
template <Ring R>
class RiordanArray {
 public:
  RiordanArray(Series<R> g, Series<R> f, unsigned stretch)
      : g_(std::move(g)), f_(std::move(f)), stretch_(stretch) {
    if (g_[0].is_zero()) throw DomainError("Riordan array needs g(0) != 0");
    if (!f_[0].is_zero()) throw DomainError("Riordan array needs f(0) = 0");
  }

  // Splits a multiplier x^stretch * f with f of valuation 1. A multiplier
  // that vanishes through its order is kept as f with stretch 0.
  static RiordanArray from_multiplier(Series<R> g, const Series<R>& multiplier) {
    const auto v = multiplier.valuation();
    if (!v) return RiordanArray(std::move(g), multiplier, 0);
    if (*v == 0) throw DomainError("Riordan multiplier must vanish at x = 0");
    const unsigned stretch = static_cast<unsigned>(*v - 1);
    std::vector<R> shifted(multiplier.coefficients().begin() + stretch, multiplier.coefficients().end());
    return RiordanArray(std::move(g), Series<R>(std::move(shifted)), stretch);
  }

  const Series<R>& g() const { return g_; }
  const Series<R>& f() const { return f_; }
  unsigned stretch() const { return stretch_; }

  // x^stretch * f, exact through order(f) + stretch.
  Series<R> multiplier() const {
    std::vector<R> c(stretch_, R(0));
    c.insert(c.end(), f_.coefficients().begin(), f_.coefficients().end());
    return Series<R>(std::move(c));
  }

  std::size_t order() const { return std::min(g_.order(), f_.order() + stretch_); }

  R entry(std::size_t n, std::size_t k) const {
    if (n > order()) {
      throw DomainError("Riordan entry t_{" + std::to_string(n) + "," + std::to_string(k) +
                        "} needs truncation order " + std::to_string(n) + ", have " +
                        std::to_string(order()));
    }
    const Series<R> m = multiplier().truncate(n);
    Series<R> col = g_.truncate(n);
    for (std::size_t i = 0; i < k; ++i) col = col * m;
    return col[n];
  }

  // Rows/columns 0..size-1 of the matrix (t_{n,k}).
  Matrix<R> matrix(std::size_t size) const {
    Matrix<R> t(size, size);
    if (size == 0) return t;
    const Series<R> m = multiplier().truncate(size - 1);
    Series<R> col = g_.truncate(size - 1);
    for (std::size_t k = 0; k < size; ++k) {
      for (std::size_t n = 0; n < size; ++n) t(n, k) = col[n];
      col = col * m;
    }
    return t;
  }

  Series<R> apply(const Series<R>& h) const {
    const Series<R> composed = compose(h, multiplier().truncate(order()));
    return g_.truncate(std::min(order(), composed.order())) * composed;
  }

 private:
  Series<R> g_;
  Series<R> f_;
  unsigned stretch_;
};

}  // namespace seqlab
