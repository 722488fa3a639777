#pragma once

#include <string>

#include <json.hpp>

#include "seqlab/conjectures/case.hpp"

namespace seqlab {

nlohmann::ordered_json to_json(const CaseReport& r);
nlohmann::ordered_json to_json(const SweepResult& s);

// Fixed-width text table, one row per case, followed by the summary line.
std::string to_table(const SweepResult& s);

}  // namespace seqlab
