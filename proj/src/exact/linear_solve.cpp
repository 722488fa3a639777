#include "seqlab/exact/linear_solve.hpp"

#include <stdexcept>

namespace seqlab {

AffineSolutionSet exact_solve(const Matrix<Rational>& a, const RationalVector& b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (rows == 0 || cols == 0) throw std::invalid_argument("exact_solve needs a nonempty system");
  if (b.size() != rows) throw std::invalid_argument("exact_solve right-hand side size mismatch");

  Matrix<Rational> m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j <= cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  AffineSolutionSet out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i) {
    if (!m(i, cols).is_zero()) return out;
  }
  out.consistent = true;
  out.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.particular[pivot_cols[i]] = m(i, cols);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = Rational(1);
    for (std::size_t i = 0; i < r; ++i) v[pivot_cols[i]] = -m(i, free);
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool AffineSolutionSet::contains(const RationalVector& x) const {
  if (!consistent || x.size() != particular.size()) return false;
  RationalVector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - particular[i];
  if (basis.empty()) {
    for (const auto& d : diff) {
      if (!d.is_zero()) return false;
    }
    return true;
  }
  Matrix<Rational> span(x.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < x.size(); ++i) span(i, j) = basis[j][i];
  }
  return exact_solve(span, diff).consistent;
}

}  // namespace seqlab
