#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "rsp/indicators.hpp"
#include "rsp/solution.hpp"
#include "rsp/variation.hpp"

namespace rsp {

enum class Algorithm { IbmolsIterated, Seea, Ibea, Nsga2, Pcs, Acs };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);
std::span<const std::string_view> algorithm_names();

struct Budget {
  enum class Mode { Evaluations, WallClock };
  Mode mode = Mode::Evaluations;
  std::uint64_t evaluations = 0;  // Evaluations mode
  double seconds = 0.0;           // WallClock mode

  static Budget evals(std::uint64_t n) { return {Mode::Evaluations, n, 0.0}; }
  static Budget wall_clock(double seconds) { return {Mode::WallClock, 0, seconds}; }
};

struct AlgoConfig {
  int population_size = 30;
  double noise_rate = 0.10;    // restart perturbation strength, fraction of n
  double kappa = 0.05;         // indicator-fitness scaling
  OperatorMix mix;
  double step_fraction = 0.005;  // hybrids: budget share between step boundaries
  double delta = 0.8;            // ACS: launch threshold on the contribution metric
  int ls_population = 30;        // hybrids: population handed to the local search
};

// Budget accounting shared by all algorithms.  The initial population of a
// run is the free starting state; every candidate solution examined after it
// (neighbour, offspring, restart member) consumes one evaluation through
// try_consume().  Wall-clock runs check expired() once per granule (one
// member neighbourhood or one generation) and may overshoot by at most that.
class RunClock {
 public:
  explicit RunClock(Budget b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  bool try_consume() {
    if (budget_.mode == Budget::Mode::Evaluations && used_ >= budget_.evaluations) return false;
    ++used_;
    return true;
  }

  bool expired() const {
    if (budget_.mode == Budget::Mode::Evaluations) return used_ >= budget_.evaluations;
    return elapsed_seconds() >= budget_.seconds;
  }

  std::uint64_t evaluations() const { return used_; }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Budget budget_;
  std::uint64_t used_ = 0;
  std::chrono::steady_clock::time_point start_;
};

struct RunResult {
  Algorithm algorithm = Algorithm::Seea;
  std::uint64_t seed = 0;
  AlgoConfig config;
  Budget budget;
  Archive archive;
  std::uint64_t evaluations = 0;
  double elapsed_seconds = 0.0;
  int launches_ls = -1;  // hybrids only; -1 elsewhere
};

// Hybrid instrumentation: called at every step boundary after the boundary
// has been processed (contribution computed, local search run or skipped).
struct BoundaryEvent {
  std::uint64_t evaluations = 0;
  double contribution = -1.0;  // ACS only; -1 when not computed
  bool launched = false;
  std::size_t archive_size = 0;
};

struct HybridHooks {
  std::function<void(const BoundaryEvent&, const Archive&)> on_boundary;
};

// --- population helpers shared by the indicator-based methods -------------

// True when population[i] must survive a replacement/truncation event: it is
// non-dominated and attains the population minimum of f1 or of f2, and no
// other member carries an identical objective vector.
bool extreme_protected(std::span<const ObjectiveVector> population, std::size_t i);

// Index of the member to delete: the lowest-fitness unprotected one (lowest
// index on fitness ties); nullopt when every member is protected.
std::optional<std::size_t> pick_victim(std::span<const ObjectiveVector> population,
                                       std::span<const double> fitness);

// --- NSGA-II building blocks (exposed for verification) -------------------

// Rank 0 = non-dominated; rank k = non-dominated after removing ranks < k.
std::vector<int> fast_nondominated_ranks(std::span<const ObjectiveVector> population);

// Crowding distance within one front; boundary members get +infinity.
std::vector<double> crowding_distances(std::span<const ObjectiveVector> front);

// --- algorithms ------------------------------------------------------------

// One local-search pass: every population slot in order explores its
// neighbourhood until a neighbour beats the population's minimum indicator
// fitness; that neighbour replaces the worst unprotected member and is
// offered to the archive.  Returns true iff the archive changed.
bool ibmols_step(std::vector<RingSolution>& population, Archive& archive, const Instance& inst,
                 const AlgoConfig& cfg, Rng& rng, RunClock& clock);

// Iterated local search: repeated ibmols_step until a full pass leaves the
// archive unchanged, then a noise restart (ceil(noise_rate * n) mutations on
// archive members), for as long as the budget lasts.
RunResult ibmols_iterated(const Instance& inst, const AlgoConfig& cfg, Budget budget,
                          std::uint64_t seed);

// Elitist steady-state EA: offspring bred from uniformly drawn archive
// members replace the population wholesale each generation; the archive
// keeps every non-dominated candidate seen.
RunResult seea_run(const Instance& inst, const AlgoConfig& cfg, Budget budget,
                   std::uint64_t seed);

// Indicator-based EA: binary tournaments on indicator fitness, then the
// merged parent+offspring pool is truncated back one-by-one, worst first,
// recomputing fitness after every removal.
RunResult ibea_run(const Instance& inst, const AlgoConfig& cfg, Budget budget,
                   std::uint64_t seed);

// Elitist dominance/crowding EA (mu+lambda).
RunResult nsga2_run(const Instance& inst, const AlgoConfig& cfg, Budget budget,
                    std::uint64_t seed);

// Hybrids: SEEA interleaved with local-search phases on the shared archive.
// PCS launches the local search at every step boundary; ACS only when the
// contribution of the current archive against the previous boundary snapshot
// drops to delta or below.
RunResult pcs_run(const Instance& inst, const AlgoConfig& cfg, Budget budget, std::uint64_t seed,
                  const HybridHooks& hooks = {});
RunResult acs_run(const Instance& inst, const AlgoConfig& cfg, Budget budget, std::uint64_t seed,
                  const HybridHooks& hooks = {});

RunResult run_algorithm(Algorithm a, const Instance& inst, const AlgoConfig& cfg, Budget budget,
                        std::uint64_t seed, const HybridHooks& hooks = {});

}  // namespace rsp
