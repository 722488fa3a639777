#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seqlab/exact/integer.hpp"
#include "seqlab/exact/poly.hpp"
#include "seqlab/exact/rational.hpp"

namespace seqlab {

// An exact commutative ring usable as a coefficient type: Integer,
// Rational, or Poly.
template <typename R>
concept Ring = std::regular<R> && std::constructible_from<R, long> &&
               std::constructible_from<R, Integer> && requires(const R a, const R b) {
                 { a + b } -> std::convertible_to<R>;
                 { a - b } -> std::convertible_to<R>;
                 { a * b } -> std::convertible_to<R>;
                 { -a } -> std::convertible_to<R>;
                 { a.is_zero() } -> std::convertible_to<bool>;
                 { exact_div(a, b) } -> std::convertible_to<R>;
                 { is_unit(a) } -> std::convertible_to<bool>;
                 { unit_inverse(a) } -> std::convertible_to<R>;
                 { to_string(a) } -> std::convertible_to<std::string>;
               };

enum class RingKind { integer, rational, polynomial };

std::string_view ring_name(RingKind kind);

// Tagged exact value; computations never mix alternatives.
using RingElem = std::variant<Integer, Rational, Poly>;

RingKind kind_of(const RingElem& e);
std::string to_string(const RingElem& e);

// Classifies a text value: letters mean polynomial, a '/' rational,
// otherwise integer.
RingKind detect_ring(std::string_view text);
RingElem parse_ring_elem(std::string_view text, RingKind kind);

// Parses a whole column, choosing the smallest ring that holds every value.
std::vector<RingElem> parse_ring_column(std::span<const std::string> texts);

// Common ring of a list; throws RingMismatch if alternatives are mixed.
RingKind common_ring(std::span<const RingElem> values);

template <Ring R>
std::vector<R> unwrap(std::span<const RingElem> values) {
  std::vector<R> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    const R* p = std::get_if<R>(&v);
    if (p == nullptr) throw RingMismatch("mixed coefficient rings in one computation");
    out.push_back(*p);
  }
  return out;
}

template <Ring R>
std::vector<RingElem> wrap(std::span<const R> values) {
  return std::vector<RingElem>(values.begin(), values.end());
}

// Values as rationals; polynomial entries must be constant.
std::vector<Rational> to_rationals(std::span<const RingElem> values);

}  // namespace seqlab
