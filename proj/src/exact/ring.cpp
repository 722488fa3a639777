#include "seqlab/exact/ring.hpp"

#include <algorithm>
#include <cctype>

#include "seqlab/error.hpp"

namespace seqlab {

static_assert(Ring<Integer>);
static_assert(Ring<Rational>);
static_assert(Ring<Poly>);

std::string_view ring_name(RingKind kind) {
  switch (kind) {
    case RingKind::integer: return "integer";
    case RingKind::rational: return "rational";
    case RingKind::polynomial: return "polynomial";
  }
  return "?";
}

RingKind kind_of(const RingElem& e) {
  return static_cast<RingKind>(e.index());
}

std::string to_string(const RingElem& e) {
  return std::visit([](const auto& v) { return to_string(v); }, e);
}

RingKind detect_ring(std::string_view text) {
  if (std::any_of(text.begin(), text.end(),
                  [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; })) {
    return RingKind::polynomial;
  }
  if (text.find('/') != std::string_view::npos) return RingKind::rational;
  return RingKind::integer;
}

RingElem parse_ring_elem(std::string_view text, RingKind kind) {
  switch (kind) {
    case RingKind::integer: return Integer::parse(text);
    case RingKind::rational: return Rational::parse(text);
    case RingKind::polynomial: return Poly::parse(text);
  }
  throw DomainError("unknown ring");
}

std::vector<RingElem> parse_ring_column(std::span<const std::string> texts) {
  RingKind kind = RingKind::integer;
  for (const auto& t : texts) kind = std::max(kind, detect_ring(t));
  std::vector<RingElem> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_ring_elem(t, kind));
  return out;
}

RingKind common_ring(std::span<const RingElem> values) {
  if (values.empty()) return RingKind::integer;
  const RingKind first = kind_of(values.front());
  for (const auto& v : values) {
    if (kind_of(v) != first) throw RingMismatch("mixed coefficient rings in one computation");
  }
  return first;
}

std::vector<Rational> to_rationals(std::span<const RingElem> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (const auto* i = std::get_if<Integer>(&v)) {
      out.emplace_back(*i);
    } else if (const auto* q = std::get_if<Rational>(&v)) {
      out.push_back(*q);
    } else {
      const auto& p = std::get<Poly>(v);
      if (!p.is_constant()) throw RingMismatch("expected rational values, got " + p.to_string());
      out.push_back(p.constant_term());
    }
  }
  return out;
}

}  // namespace seqlab
