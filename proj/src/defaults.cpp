#include "rsp/defaults.hpp"

#include <string>

namespace rsp {

namespace {

struct InstanceDefaults {
  std::string_view name;
  int ls_population;    // iterated local search
  double noise_rate;    // iterated local search restarts
  int ibea_population;
  int nsga2_population;
  double budget_seconds;
};

// Benchmark tuning: local-search population and noise per instance, the
// per-method EA populations, and the standard wall-clock budget.
constexpr InstanceDefaults kTable[] = {
    {"eil51", 20, 0.10, 100, 100, 1200.0},  {"st70", 20, 0.10, 50, 100, 60.0},
    {"kroA100", 30, 0.10, 100, 200, 120.0}, {"bier127", 30, 0.10, 100, 200, 300.0},
    {"kroA150", 30, 0.10, 200, 200, 600.0}, {"kroA200", 30, 0.10, 200, 200, 1200.0},
    {"pr264", 30, 0.20, 50, 200, 1800.0},   {"pr299", 50, 0.10, 50, 200, 3000.0},
    {"pr439", 70, 0.10, 100, 100, 4200.0},  {"pr1002", 100, 0.10, 100, 100, 6000.0},
};

const InstanceDefaults* find(std::string_view name) {
  for (const auto& row : kTable)
    if (row.name == name) return &row;
  return nullptr;
}

}  // namespace

AlgoConfig default_config(Algorithm a, std::string_view instance_name, int n_nodes) {
  const InstanceDefaults* row = find(instance_name);
  AlgoConfig cfg;
  switch (a) {
    case Algorithm::IbmolsIterated:
      cfg.population_size = row ? row->ls_population : 30;
      cfg.noise_rate = row ? row->noise_rate : 0.10;
      break;
    case Algorithm::Seea:
      cfg.population_size = 100;
      break;
    case Algorithm::Ibea:
      cfg.population_size = row ? row->ibea_population : 100;
      break;
    case Algorithm::Nsga2:
      cfg.population_size = row ? row->nsga2_population : 100;
      break;
    case Algorithm::Pcs:
    case Algorithm::Acs:
      cfg.population_size = 100;  // the evolutionary side
      cfg.ls_population = n_nodes < 100 ? 20 : 30;
      cfg.noise_rate = row ? row->noise_rate : 0.10;
      break;
  }
  return cfg;
}

std::optional<Budget> default_budget(std::string_view instance_name) {
  if (const InstanceDefaults* row = find(instance_name)) return Budget::wall_clock(row->budget_seconds);
  return std::nullopt;
}

}  // namespace rsp
