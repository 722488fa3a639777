#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqlab/conjectures/catalog.hpp"
#include "seqlab/somos/somos.hpp"

namespace seqlab {

struct ConjectureCase {
  std::string id;
  Bindings bindings;
  std::size_t terms = 0;         // 0 selects the default budget for the Somos order
  std::size_t hankel_terms = 0;  // largest Hankel index m; 0 selects the default
};

enum class Verdict { confirmed, refuted, pole, zero_hankel, underdetermined, error };

std::string to_string(Verdict v);
bool is_degenerate(Verdict v);

struct CaseReport {
  std::string id;
  Bindings params;  // includes fixed bindings
  std::size_t terms = 0;
  std::size_t hankel_terms = 0;
  std::vector<Rational> sequence;
  std::vector<Rational> hankel;
  std::optional<FitResult> fit;
  std::optional<std::vector<Rational>> predicted;  // nullopt: pole or not reached
  Verdict verdict = Verdict::error;
  std::optional<std::size_t> failing_n;             // refuted only
  std::optional<BilinearCheck> failing_identity;    // refuted only
  std::vector<std::string> notes;
};

std::size_t default_terms(unsigned order);
std::size_t default_hankel_terms(unsigned order);

// Never throws for stage failures; they become verdict error with a note.
// Unknown ids and bad bindings still throw.
CaseReport run_case(const ConjectureCase& c);

using Grid = std::map<std::string, std::vector<Rational>>;

struct SweepSummary {
  std::size_t confirmed = 0;
  std::size_t refuted = 0;
  std::size_t degenerate = 0;
};

struct SweepResult {
  std::string id;
  std::vector<CaseReport> cases;  // row-major over the sorted grid names
  SweepSummary summary;
};

// jobs == 0 uses the hardware concurrency.
SweepResult sweep(const std::string& id, const Grid& grid, std::size_t terms = 0,
                  std::size_t hankel_terms = 0, unsigned jobs = 0);

}  // namespace seqlab
