#include "seqlab/conjectures/report.hpp"

#include <iomanip>
#include <sstream>

namespace seqlab {

namespace {

using nlohmann::ordered_json;

ordered_json texts(const std::vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string bindings_text(const Bindings& b) {
  std::string s;
  for (const auto& [k, v] : b) s += (s.empty() ? "" : ",") + k + "=" + to_string(v);
  return s;
}

}  // namespace

ordered_json to_json(const CaseReport& r) {
  ordered_json j;
  j["id"] = r.id;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = to_string(v);
  j["params"] = params;
  j["terms"] = r.terms;
  j["hankel_terms"] = r.hankel_terms;
  j["sequence"] = texts(r.sequence);
  j["hankel"] = texts(r.hankel);
  if (r.fit) {
    j["fit_status"] = to_string(r.fit->status);
    j["fit_solution"] = r.fit->status == FitStatus::inconsistent ? ordered_json() : texts(r.fit->particular);
    ordered_json basis = ordered_json::array();
    for (const auto& v : r.fit->basis) basis.push_back(texts(v));
    j["fit_basis"] = basis;
  } else {
    j["fit_status"] = nullptr;
    j["fit_solution"] = nullptr;
    j["fit_basis"] = ordered_json::array();
  }
  if (r.predicted) {
    j["predicted"] = texts(*r.predicted);
  } else {
    j["predicted"] = r.verdict == Verdict::pole ? ordered_json("pole") : ordered_json();
  }
  j["verdict"] = to_string(r.verdict);
  j["failing_n"] = r.failing_n ? ordered_json(*r.failing_n) : ordered_json();
  j["notes"] = r.notes;
  return j;
}

ordered_json to_json(const SweepResult& s) {
  ordered_json j;
  j["id"] = s.id;
  ordered_json cases = ordered_json::array();
  for (const auto& c : s.cases) cases.push_back(to_json(c));
  j["cases"] = cases;
  j["summary"] = {{"cases", s.cases.size()},
                  {"confirmed", s.summary.confirmed},
                  {"refuted", s.summary.refuted},
                  {"degenerate", s.summary.degenerate}};
  return j;
}

std::string to_table(const SweepResult& s) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "id" << std::setw(28) << "params" << std::setw(30) << "verdict"
      << "predicted\n";
  for (const auto& c : s.cases) {
    std::string predicted = c.verdict == Verdict::pole ? "pole" : "-";
    if (c.predicted) {
      predicted = "(";
      for (std::size_t i = 0; i < c.predicted->size(); ++i) predicted += (i ? ", " : "") + to_string((*c.predicted)[i]);
      predicted += ")";
    }
    std::string verdict = to_string(c.verdict);
    if (c.failing_n) verdict += " n=" + std::to_string(*c.failing_n);
    out << std::setw(6) << c.id << std::setw(28) << bindings_text(c.params) << std::setw(30) << verdict << predicted
        << "\n";
  }
  out << "cases=" << s.cases.size() << " confirmed=" << s.summary.confirmed << " refuted=" << s.summary.refuted
      << " degenerate=" << s.summary.degenerate << "\n";
  return out.str();
}

}  // namespace seqlab
