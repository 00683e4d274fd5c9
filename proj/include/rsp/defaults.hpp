#pragma once

#include <optional>
#include <string_view>

#include "rsp/algorithms.hpp"

namespace rsp {

// Tuned defaults per benchmark instance; unknown instances fall back to a
// population of 30 for the local search, 100 for the evolutionary methods,
// and a noise rate of 0.10.
AlgoConfig default_config(Algorithm a, std::string_view instance_name, int n_nodes);

// Standard wall-clock budget of the named benchmark instance, if it has one.
std::optional<Budget> default_budget(std::string_view instance_name);

}  // namespace rsp
