#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "monolift/sampler.hpp"

namespace monolift {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prints the outcome of a pmf comparison; kExitCheckFailed on the first
/// differing point.
int report_pmf_check(const Pmf& sampler, const Pmf& definition, std::ostream& out);

}  // namespace monolift
