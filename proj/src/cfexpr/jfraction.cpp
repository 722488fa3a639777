#include "seqlab/cfexpr/jfraction.hpp"

#include "seqlab/error.hpp"

namespace seqlab::cf {

Series<Rational> expand(const JFraction& j, std::size_t order) {
  if (j.a.empty()) throw DomainError("a J-fraction needs at least one a-level");
  if (j.b.size() + 1 < j.a.size()) throw DomainError("a J-fraction needs a b-level between a-levels");
  const auto one = Series<Rational>::one(order);
  const auto x = Series<Rational>::x(order);
  const auto x2 = x * x;
  const std::size_t depth = j.a.size() - 1;
  Series<Rational> tail = one / (one - j.a[depth] * x);
  for (std::size_t k = depth; k-- > 0;) tail = one / (one - j.a[k] * x - j.b[k] * (x2 * tail));
  return tail;
}

std::vector<Rational> jfraction_hankel(const JFraction& j, std::size_t max_index) {
  if (j.b.size() < max_index) throw InsufficientTerms(max_index, j.b.size());
  std::vector<Rational> h;
  h.reserve(max_index + 1);
  for (std::size_t n = 0; n <= max_index; ++n) {
    Rational p(1);
    for (std::size_t k = 0; k < n; ++k) p *= pow(j.b[k], static_cast<long>(n - k));
    h.push_back(p);
  }
  return h;
}

}  // namespace seqlab::cf
