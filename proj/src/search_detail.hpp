#pragma once

#include <functional>
#include <vector>

#include "rsp/algorithms.hpp"

// Internals shared by the search algorithms.  Documented RNG draw order:
//   random_genotype   per node ascending: visit coin, then key (redrawn on an
//                     exact collision)
//   crossover         cut position (only when the pair's crossover coin hit)
//   mutate            mutation coin, operator draw, optional applicability
//                     redraw, target draw
//   breeding          per pair: two parent draws up front (batch selection),
//                     then crossover coin [+ cut], then each child's mutation
//   ibmols restart    archive member sample, then per member the mutation
//                     chains, then random fills
namespace rsp::detail {

void validate_config(const AlgoConfig& cfg, bool hybrid);

// Decoded random genotypes, each offered to the archive.  This is a run's
// free starting state: it consumes no budget.
std::vector<RingSolution> init_population(std::size_t count, const Instance& inst, Rng& rng,
                                          Archive& archive);

// Breeds `count` offspring from consecutive pairs of `parents`
// (parents.size() == 2 * ceil(count / 2)): per-pair crossover coin, then
// mutation per child; each offspring costs one evaluation and is offered to
// the archive, then `after_offspring` (when set) runs.  Returns false when
// the budget ran out mid-way.
bool breed_from_pool(std::span<const Genotype> parents, std::size_t count, const Instance& inst,
                     const OperatorMix& mix, Rng& rng, RunClock& clock, Archive& archive,
                     std::vector<RingSolution>* offspring_out,
                     const std::function<void()>& after_offspring);

// One steady-state generation: 2*ceil(N/2) parents drawn uniformly from the
// archive (snapshot semantics: all draws precede variation), then bred as
// above.  Offspring live on only through the archive.
bool seea_generation(const Instance& inst, const AlgoConfig& cfg, Archive& archive, Rng& rng,
                     RunClock& clock, const std::function<void()>& after_offspring);

// Local-search phase: ibmols_step until a full pass leaves the phase's own
// archive (seeded from the starting population) unchanged or the budget runs
// out; everything the phase kept is then folded into `archive`.
void ibmols_phase(std::vector<RingSolution>& population, Archive& archive, const Instance& inst,
                  const AlgoConfig& cfg, Rng& rng, RunClock& clock);

}  // namespace rsp::detail
