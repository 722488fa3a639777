#pragma once

#include <cstddef>
#include <vector>

#include "seqlab/exact/matrix.hpp"
#include "seqlab/exact/rational.hpp"

namespace seqlab {

using RationalVector = std::vector<Rational>;

// Solution set of A x = b: empty, or particular + span(basis).
struct AffineSolutionSet {
  bool consistent = false;
  RationalVector particular;
  std::vector<RationalVector> basis;
  std::size_t rank = 0;

  bool unique() const { return consistent && basis.empty(); }
  bool contains(const RationalVector& x) const;
};

// Exact Gauss-Jordan elimination (first nonzero pivot per column).
AffineSolutionSet exact_solve(const Matrix<Rational>& a, const RationalVector& b);

}  // namespace seqlab
