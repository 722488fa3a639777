#include "seqlab/cli/io.hpp"

#include <istream>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<RingElem> read_column(std::istream& in) {
  std::vector<std::string> texts;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    texts.push_back(line);
  }
  return parse_ring_column(texts);
}

std::string write_column(const std::vector<RingElem>& values) {
  std::string out;
  for (const auto& v : values) out += to_string(v) + "\n";
  return out;
}

std::string write_column(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += to_string(v) + "\n";
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) out.push_back(Rational::parse(item));
  return out;
}

Bindings parse_bindings(const std::string& text) {
  Bindings out;
  for (const auto& item : split_list(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + item + "'", 0);
    const std::string name = trim(item.substr(0, eq));
    if (name.empty()) throw ParseError("empty parameter name in '" + item + "'", 0);
    if (!out.emplace(name, Rational::parse(trim(item.substr(eq + 1)))).second) {
      throw ParseError("parameter '" + name + "' bound twice", 0);
    }
  }
  return out;
}

std::pair<std::string, std::vector<Rational>> parse_grid_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ParseError("expected name=values in '" + text + "'", 0);
  const std::string name = trim(text.substr(0, eq));
  const std::string rhs = trim(text.substr(eq + 1));
  const auto dots = rhs.find("..");
  if (dots == std::string::npos) return {name, parse_rationals(rhs)};
  const Integer lo = Integer::parse(trim(rhs.substr(0, dots)));
  const Integer hi = Integer::parse(trim(rhs.substr(dots + 2)));
  std::vector<Rational> values;
  for (Integer v = lo; v <= hi; v += Integer(1)) values.emplace_back(v);
  return {name, values};
}

std::string write_fit(const FitResult& fit) {
  std::ostringstream out;
  out << "# status=" << to_string(fit.status) << " order=" << fit.order << " rank=" << fit.rank
      << " rows=" << fit.first_n << ".." << fit.last_n;
  if (fit.first_failing_n) out << " first_failing_n=" << *fit.first_failing_n;
  out << "\n";
  if (fit.status == FitStatus::inconsistent) return out.str();
  for (std::size_t i = 0; i < fit.basis.size(); ++i) {
    out << "# basis " << i + 1 << ":";
    for (std::size_t j = 0; j < fit.basis[i].size(); ++j) out << (j ? "," : " ") << to_string(fit.basis[i][j]);
    out << "\n";
  }
  out << write_column(fit.particular);
  return out.str();
}

}  // namespace seqlab::cli
