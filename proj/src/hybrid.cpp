#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "rsp/algorithms.hpp"
#include "search_detail.hpp"

namespace rsp {

namespace {

// Shared engine behind pcs_run and acs_run.  The steady-state EA runs on the
// archive; at every step boundary the archive's contribution against the
// previous boundary snapshot is computed and, unless the run is adaptive and
// the contribution exceeds delta, a local-search phase is launched on a
// population sampled from the archive.  Boundary bookkeeping itself draws no
// random numbers and consumes no evaluations, so a boundary that launches
// nothing leaves the trajectory identical to plain SEEA.
RunResult hybrid_run(Algorithm which, bool adaptive, const Instance& inst, const AlgoConfig& cfg,
                     Budget budget, std::uint64_t seed, const HybridHooks& hooks) {
  detail::validate_config(cfg, true);
  Rng rng(seed);
  RunClock clock(budget);
  Archive archive;
  detail::init_population(static_cast<std::size_t>(cfg.population_size), inst, rng, archive);

  std::vector<ObjectiveVector> snapshot = archive.vectors();
  int launches = 0;

  auto run_ls_phase = [&]() {
    const auto want = static_cast<std::size_t>(cfg.ls_population);
    std::vector<RingSolution> ls;
    ls.reserve(want);
    if (archive.size() > want) {
      for (std::size_t idx : rng.sample_indices(archive.size(), want))
        ls.push_back(decode(archive.entries()[idx].payload, inst));
    } else {
      for (const auto& e : archive.entries()) ls.push_back(decode(e.payload, inst));
    }
    while (ls.size() < want) {
      if (!clock.try_consume()) break;
      RingSolution s = decode(random_genotype(inst, rng), inst);
      archive.insert(s.objectives(), s.genotype);
      ls.push_back(std::move(s));
    }
    detail::ibmols_phase(ls, archive, inst, cfg, rng, clock);
  };

  auto process_boundary = [&]() {
    const double c = contribution(archive.vectors(), snapshot);
    const bool launch = !adaptive || c <= cfg.delta;
    if (launch) {
      ++launches;
      run_ls_phase();
    }
    snapshot = archive.vectors();
    if (hooks.on_boundary) {
      BoundaryEvent ev;
      ev.evaluations = clock.evaluations();
      ev.contribution = c;
      ev.launched = launch;
      ev.archive_size = archive.size();
      hooks.on_boundary(ev, archive);
    }
  };

  if (budget.mode == Budget::Mode::Evaluations) {
    const auto step = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(
               std::ceil(cfg.step_fraction * static_cast<double>(budget.evaluations))));
    std::uint64_t next = step;
    const auto after_offspring = [&]() {
      if (clock.evaluations() < next) return;
      process_boundary();  // may consume many evaluations; skip past them
      next = step * (clock.evaluations() / step + 1);
    };
    while (!clock.expired())
      if (!detail::seea_generation(inst, cfg, archive, rng, clock, after_offspring)) break;
  } else {
    const double step = std::max(1.0, std::ceil(cfg.step_fraction * budget.seconds));
    double next = step;
    while (!clock.expired()) {
      if (!detail::seea_generation(inst, cfg, archive, rng, clock, {})) break;
      if (clock.elapsed_seconds() >= next && !clock.expired()) {
        process_boundary();
        next = step * (std::floor(clock.elapsed_seconds() / step) + 1.0);
      }
    }
  }

  RunResult r;
  r.algorithm = which;
  r.seed = seed;
  r.config = cfg;
  r.budget = budget;
  r.archive = std::move(archive);
  r.evaluations = clock.evaluations();
  r.elapsed_seconds = clock.elapsed_seconds();
  r.launches_ls = launches;
  return r;
}

}  // namespace

RunResult pcs_run(const Instance& inst, const AlgoConfig& cfg, Budget budget, std::uint64_t seed,
                  const HybridHooks& hooks) {
  return hybrid_run(Algorithm::Pcs, false, inst, cfg, budget, seed, hooks);
}

RunResult acs_run(const Instance& inst, const AlgoConfig& cfg, Budget budget, std::uint64_t seed,
                  const HybridHooks& hooks) {
  return hybrid_run(Algorithm::Acs, true, inst, cfg, budget, seed, hooks);
}

}  // namespace rsp
