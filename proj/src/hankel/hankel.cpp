#include "seqlab/hankel/hankel.hpp"

namespace seqlab {

std::vector<RingElem> hankel_transform(std::span<const RingElem> seq, std::size_t max_index) {
  switch (common_ring(seq)) {
    case RingKind::integer: {
      const auto h = hankel_transform(std::span<const Integer>(unwrap<Integer>(seq)), max_index);
      return wrap<Integer>(h);
    }
    case RingKind::rational: {
      const auto h = hankel_transform(std::span<const Rational>(unwrap<Rational>(seq)), max_index);
      return wrap<Rational>(h);
    }
    case RingKind::polynomial: {
      const auto h = hankel_transform(std::span<const Poly>(unwrap<Poly>(seq)), max_index);
      return wrap<Poly>(h);
    }
  }
  return {};
}

HankelFormula parse_hankel_formula(const std::string& id) {
  if (id == "conj1_powers") return HankelFormula::conj1_powers;
  if (id == "ex1_powers") return HankelFormula::ex1_powers;
  throw DomainError("unknown Hankel formula '" + id + "'");
}

namespace {

const Rational& param(const Bindings& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) throw DomainError("missing binding for parameter '" + name + "'");
  return it->second;
}

}  // namespace

std::vector<Rational> predicted_hankel(HankelFormula formula, const Bindings& params,
                                       std::size_t max_index) {
  std::vector<Rational> out;
  out.reserve(max_index + 1);
  for (std::size_t n = 0; n <= max_index; ++n) {
    const long lo = static_cast<long>((n * n) / 4);
    const long hi = static_cast<long>(((n + 1) * (n + 1)) / 4);
    if (formula == HankelFormula::ex1_powers) {
      out.push_back(pow(Rational(2), hi));
    } else {
      const Rational& r = param(params, "r");
      const Rational& s = param(params, "s");
      out.push_back(pow(s, lo) * pow(r + s + Rational(1), hi));
    }
  }
  return out;
}

}  // namespace seqlab
