#pragma once

#include <fusscat/oracles.hpp>

#include <string>
#include <vector>

namespace fusscat::cli {

/// Suite names accepted by run_suite, "all" first.
const std::vector<std::string>& suite_names();

/// Runs one suite (or every suite for "all") over 1 <= n <= n_max, 1 <= m <= m_max.
/// The oracle and lemmas suites only visit n <= 4, m <= 3 (the grid check n <= 3).
/// Throws InstanceTooLarge when some count exceeds `limit`.
std::vector<oracles::Verdict> run_suite(const std::string& suite, int n_max, int m_max,
                                        std::uint64_t limit = oracles::kDefaultCandidateLimit);

}  // namespace fusscat::cli
