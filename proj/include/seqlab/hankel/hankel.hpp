#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "seqlab/error.hpp"
#include "seqlab/exact/matrix.hpp"
#include "seqlab/exact/ring.hpp"

namespace seqlab {

/// Determinant by one-step fraction-free (Bareiss) elimination. Every
/// division is exact in an integral domain, so this runs over Integer and
/// Poly as well as Rational. A zero pivot is replaced by the first nonzero
/// entry below it (with a sign flip); an all-zero column gives 0.
template <Ring R>
R bareiss_det(Matrix<R> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  bool negate = false;
  R previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return R(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
      }
      m(i, k) = R(0);
    }
    previous = m(k, k);
  }
  R det = m(n - 1, n - 1);
  return negate ? -det : det;
}


// (seq_{i+j}) for 0 <= i, j <= n.
template <Ring R>
Matrix<R> hankel_matrix(std::span<const R> seq, std::size_t n) {
  if (seq.size() < 2 * n + 1) throw InsufficientTerms(2 * n + 1, seq.size());
  Matrix<R> m(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) m(i, j) = seq[i + j];
  }
  return m;
}

/// h_0..h_max_index with h_n = det (seq_{i+j})_{0<=i,j<=n}; needs
/// 2*max_index + 1 source terms.
template <Ring R>
std::vector<R> hankel_transform(std::span<const R> seq, std::size_t max_index) {
  if (seq.size() < 2 * max_index + 1) throw InsufficientTerms(2 * max_index + 1, seq.size());
  std::vector<R> out;
  out.reserve(max_index + 1);
  for (std::size_t n = 0; n <= max_index; ++n) out.push_back(bareiss_det(hankel_matrix(seq, n)));
  return out;
}

template <Ring R>
std::vector<R> hankel_transform(const std::vector<R>& seq, std::size_t max_index) {
  return hankel_transform(std::span<const R>(seq), max_index);
}

// Same, over a tagged column; the result stays in the input's ring.
std::vector<RingElem> hankel_transform(std::span<const RingElem> seq, std::size_t max_index);

enum class HankelFormula { conj1_powers, ex1_powers };

HankelFormula parse_hankel_formula(const std::string& id);

// Closed-form Hankel values h_0..h_max_index:
//   ex1_powers:   2^floor((n+1)^2/4)
//   conj1_powers: s^floor(n^2/4) (r+s+1)^floor((n+1)^2/4)
std::vector<Rational> predicted_hankel(HankelFormula formula, const Bindings& params,
                                       std::size_t max_index);

}  // namespace seqlab
