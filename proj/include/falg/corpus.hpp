#pragma once

#include <falg/multigraph.hpp>

#include <string>
#include <utility>
#include <vector>

namespace falg {

/// Desk-scale verification graphs covering every recurrence case: loops,
/// bridges, multi-edges, disconnection, and cycle-rich instances.
std::vector<std::pair<std::string, Multigraph>> builtin_corpus();

}  // namespace falg
