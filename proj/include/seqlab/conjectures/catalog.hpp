#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqlab/exact/poly.hpp"
#include "seqlab/riordan/families.hpp"
#include "seqlab/somos/somos.hpp"

namespace seqlab {

// One predicted coefficient as an exact rational function of the parameters.
struct ParamFormula {
  Poly numerator;
  Poly denominator;
};

struct ConjectureInfo {
  std::string id;  // C1..C8, EX1R, EX5A, EX5B, EX6A, EX6B
  FamilyId family;
  unsigned order;
  SomosMask mask;
  std::vector<std::string> params;  // names the caller binds
  Bindings fixed;                   // bindings the case always uses
  std::vector<ParamFormula> formulas;
  std::string statement;            // one-line description for reports
};

const std::vector<ConjectureInfo>& all_conjectures();
const ConjectureInfo& conjecture_info(const std::string& id);

// nullopt marks a pole: some denominator vanishes at these bindings.
std::optional<std::vector<Rational>> predicted_params(const std::string& id, const Bindings& bindings);

// Caller bindings merged with the fixed ones; errors on missing/unknown names.
Bindings case_bindings(const ConjectureInfo& info, const Bindings& given);

}  // namespace seqlab
