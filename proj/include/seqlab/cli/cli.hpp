#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqlab::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Runs one command. args excludes the program name; "-" as a path means
// the given stdin/stdout.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace seqlab::cli
