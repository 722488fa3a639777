#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "seqlab/exact/poly.hpp"
#include "seqlab/exact/ring.hpp"
#include "seqlab/somos/somos.hpp"

namespace seqlab::cli {

// One ring element per line; blank lines and lines starting with '#' are skipped.
std::vector<RingElem> read_column(std::istream& in);
std::string write_column(const std::vector<RingElem>& values);
std::string write_column(const std::vector<Rational>& values);

// "r=1,s=-2/3"; empty text gives no bindings.
Bindings parse_bindings(const std::string& text);
// "a,b,c" split on commas with surrounding blanks trimmed.
std::vector<std::string> split_list(const std::string& text);
std::vector<Rational> parse_rationals(const std::string& text);
// "r=-3..4" or "r=0,1/2,3".
std::pair<std::string, std::vector<Rational>> parse_grid_axis(const std::string& text);

// Comment block describing a fit, followed by the particular solution.
std::string write_fit(const FitResult& fit);

}  // namespace seqlab::cli
