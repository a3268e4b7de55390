#pragma once

#include <string_view>
#include <vector>

#include "arbor/report.hpp"

namespace arbor {

/// Property suites. `max_degree` bounds vertices for CK-side checks and
/// edges for H-side checks; a few checks reach one grade further where the
/// statement needs it (e.g. omega on trees with max_degree + 1 vertices).
/// Random characters come from a fixed seed, so reports are reproducible.
Report verify_trees(std::size_t max_degree);
Report verify_hopf(std::size_t max_degree);
Report verify_chv(std::size_t max_degree);
Report verify_prelie(std::size_t max_degree);
Report verify_qshuffle(std::size_t max_degree);
Report verify_bseries(std::size_t max_degree);

/// Every suite above, in that order.
Report verify_all(std::size_t max_degree);

/// "trees", "hopf", "chv", "prelie", "qshuffle", "bseries" or "all".
Report run_suite(std::string_view name, std::size_t max_degree);
const std::vector<std::string_view>& suite_names();

/// Known counts of rooted trees with 1..n vertices (n <= 12).
std::vector<std::size_t> tree_counts(std::size_t n);

}  // namespace arbor
