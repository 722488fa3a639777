#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqlab/exact/linear_solve.hpp"
#include "seqlab/exact/rational.hpp"

namespace seqlab {

// Which of the k/2 coefficients are free (true) or pinned to zero (false).
using SomosMask = std::vector<bool>;

/// Bilinear Somos-k relation, k in {4, 6, 8}:
///   a_n a_{n-k} = sum_{i=1}^{k/2} c_i a_{n-i} a_{n-k+i}.
struct SomosRelation {
  unsigned order = 4;
  std::vector<Rational> coefficients;
  SomosMask mask;

  static SomosRelation make(unsigned order, std::vector<Rational> coefficients, SomosMask mask = {});
};

void validate_order(unsigned order);
SomosMask full_mask(unsigned order);
// "1,0,1" -> {true, false, true}
SomosMask parse_mask(const std::string& text, unsigned order);

// One cross-multiplied identity at index n.
struct BilinearCheck {
  std::size_t n = 0;
  Rational lhs;  // a_n a_{n-k}
  Rational rhs;  // sum c_i a_{n-i} a_{n-k+i}
  bool holds() const { return lhs == rhs; }
};

struct CheckReport {
  unsigned order = 0;
  std::vector<BilinearCheck> rows;  // n = k .. |seq|-1
  std::vector<std::size_t> failing;

  bool passed() const { return failing.empty(); }
  std::optional<std::size_t> first_failure() const {
    if (failing.empty()) return std::nullopt;
    return failing.front();
  }
};

// Needs |seq| >= k + 1; no divisions, so zero terms are handled uniformly.
CheckReport somos_check(std::span<const Rational> seq, const SomosRelation& rel);

enum class FitStatus { unique, underdetermined, inconsistent };
std::string to_string(FitStatus s);

struct FitResult {
  unsigned order = 0;
  SomosMask mask;
  FitStatus status = FitStatus::inconsistent;
  // Full k/2-length tuples; masked positions are zero.
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> basis;
  std::size_t first_n = 0;  // rows span n = first_n .. last_n
  std::size_t last_n = 0;
  std::size_t rank = 0;
  std::optional<std::size_t> first_failing_n;  // inconsistent only
};

/// Solves for the unmasked coefficients from every available row
/// n = k .. |seq|-1 by exact elimination.
FitResult somos_fit(std::span<const Rational> seq, unsigned order, const SomosMask& mask);

// Whether the candidate tuple lies in the fitted affine set.
bool membership(const FitResult& fit, const std::vector<Rational>& candidate);

}  // namespace seqlab
