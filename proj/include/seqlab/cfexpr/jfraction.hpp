#pragma once

#include <cstddef>
#include <vector>

#include "seqlab/exact/rational.hpp"
#include "seqlab/series/series.hpp"

namespace seqlab::cf {

// 1/(1 - a_0 x - b_0 x^2/(1 - a_1 x - b_1 x^2/(...(1 - a_m x)))).
struct JFraction {
  std::vector<Rational> a;
  std::vector<Rational> b;
};

Series<Rational> expand(const JFraction& j, std::size_t order);

// h_0..h_max_index by h_n = prod_{k<n} b_k^{n-k}. Needs max_index b-levels.
std::vector<Rational> jfraction_hankel(const JFraction& j, std::size_t max_index);

}  // namespace seqlab::cf
