#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rsp/algorithms.hpp"
#include "search_detail.hpp"

namespace rsp {

namespace {

// Indicator fitness of the population, cached per exploration so that the
// common case (a neighbour inside the population's bounding box) costs O(N)
// instead of O(N^2).  A neighbour that stretches the box forces a full
// recomputation under the extended bounds, since every normalized coordinate
// shifts.
class ProbeFitness {
 public:
  void rebuild(const std::vector<RingSolution>& pop, double kappa) {
    kappa_ = kappa;
    vectors_.clear();
    for (const auto& s : pop) vectors_.push_back(s.objectives());
    bounds_ = NormBounds::over(vectors_);
    pts_.clear();
    for (const auto& z : vectors_) pts_.push_back(normalize(z, bounds_));
    base_fit_.assign(pts_.size(), 0.0);
    for (std::size_t i = 0; i < pts_.size(); ++i)
      for (std::size_t j = 0; j < pts_.size(); ++j)
        if (i != j) base_fit_[i] -= std::exp(-eps_binary(pts_[j], pts_[i]) / kappa_);
  }

  // fitness of the candidate and of every member, all within P + {candidate}
  void probe(ObjectiveVector zy, double& fit_y, std::vector<double>& member_fit) const;

  const std::vector<ObjectiveVector>& vectors() const { return vectors_; }

 private:
  double kappa_ = 0.05;
  NormBounds bounds_;
  std::vector<ObjectiveVector> vectors_;
  std::vector<std::array<double, 2>> pts_;
  std::vector<double> base_fit_;
};

void ProbeFitness::probe(ObjectiveVector zy, double& fit_y, std::vector<double>& member_fit) const {
  member_fit.resize(pts_.size());
  if (bounds_.contains(zy)) {
    const auto y = normalize(zy, bounds_);
    fit_y = 0.0;
    for (std::size_t m = 0; m < pts_.size(); ++m) {
      fit_y -= std::exp(-eps_binary(pts_[m], y) / kappa_);
      member_fit[m] = base_fit_[m] - std::exp(-eps_binary(y, pts_[m]) / kappa_);
    }
    return;
  }
  NormBounds wide = bounds_;
  wide.expand(zy);
  const auto y = normalize(zy, wide);
  std::vector<std::array<double, 2>> pts;
  pts.reserve(pts_.size());
  for (const auto& z : vectors_) pts.push_back(normalize(z, wide));
  fit_y = 0.0;
  for (std::size_t m = 0; m < pts.size(); ++m) {
    fit_y -= std::exp(-eps_binary(pts[m], y) / kappa_);
    double f = -std::exp(-eps_binary(y, pts[m]) / kappa_);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != m) f -= std::exp(-eps_binary(pts[j], pts[m]) / kappa_);
    member_fit[m] = f;
  }
}

}  // namespace

bool ibmols_step(std::vector<RingSolution>& population, Archive& archive, const Instance& inst,
                 const AlgoConfig& cfg, Rng& rng, RunClock& clock) {
  if (population.empty()) throw std::invalid_argument("ibmols_step: empty population");
  bool improved = false;
  ProbeFitness cache;
  std::vector<double> member_fit;

  for (std::size_t slot = 0; slot < population.size(); ++slot) {
    if (clock.expired()) return improved;
    NeighborhoodStream stream(population[slot], inst, rng);
    cache.rebuild(population, cfg.kappa);

    RingSolution neighbour;
    while (stream.next(neighbour)) {
      if (!clock.try_consume()) return improved;
      // every evaluated neighbour is a visited candidate: the archive keeps
      // it if it is potentially efficient, whether or not it enters P
      improved |= archive.insert(neighbour.objectives(), neighbour.genotype);
      double fit_y = 0.0;
      cache.probe(neighbour.objectives(), fit_y, member_fit);
      const double weakest = *std::min_element(member_fit.begin(), member_fit.end());
      if (!(fit_y > weakest)) continue;  // ties lose

      const auto victim = pick_victim(cache.vectors(), member_fit);
      if (!victim) continue;  // two-member population of protected extremes
      population[*victim] = std::move(neighbour);
      break;
    }
  }
  return improved;
}

namespace detail {

void ibmols_phase(std::vector<RingSolution>& population, Archive& archive, const Instance& inst,
                  const AlgoConfig& cfg, Rng& rng, RunClock& clock) {
  // The stopping archive is the phase's own, seeded from its starting
  // population: a phase ends when the population cloud stops producing
  // points that are new *to the phase*, not new to the whole run.  A run
  // archive far ahead of a freshly perturbed population would otherwise end
  // every phase after a single pass.  Folding the phase archive into the run
  // archive afterwards keeps every visited candidate: a visitor evicted from
  // the phase archive was evicted by a dominator that would equally have
  // evicted it from the run archive.
  Archive local;
  for (const auto& s : population) local.insert(s.objectives(), s.genotype);
  while (!clock.expired())
    if (!ibmols_step(population, local, inst, cfg, rng, clock)) break;
  for (const auto& e : local.entries()) archive.insert(e.z, e.payload);
}

}  // namespace detail

RunResult ibmols_iterated(const Instance& inst, const AlgoConfig& cfg, Budget budget,
                          std::uint64_t seed) {
  detail::validate_config(cfg, false);
  Rng rng(seed);
  RunClock clock(budget);
  Archive archive;
  auto pop = detail::init_population(static_cast<std::size_t>(cfg.population_size), inst, rng,
                                     archive);

  const int perturbations = static_cast<int>(std::ceil(cfg.noise_rate * inst.n()));
  OperatorMix noise_mix = cfg.mix;
  noise_mix.p_mutation = 1.0;  // restart noise applies unconditionally

  while (!clock.expired()) {
    detail::ibmols_phase(pop, archive, inst, cfg, rng, clock);
    if (clock.expired()) break;

    // noise restart: perturbed archive members, then random fills
    std::vector<Genotype> seeds;
    if (archive.size() > pop.size()) {
      for (std::size_t idx : rng.sample_indices(archive.size(), pop.size()))
        seeds.push_back(archive.entries()[idx].payload);
    } else {
      for (const auto& e : archive.entries()) seeds.push_back(e.payload);
    }

    std::vector<RingSolution> next;
    next.reserve(pop.size());
    bool drained = false;
    for (const auto& g : seeds) {
      if (!clock.try_consume()) {
        drained = true;
        break;
      }
      RingSolution s = decode(g, inst);
      for (int t = 0; t < perturbations; ++t) s = mutate(std::move(s), inst, noise_mix, rng);
      archive.insert(s.objectives(), s.genotype);
      next.push_back(std::move(s));
    }
    while (!drained && next.size() < pop.size()) {
      if (!clock.try_consume()) {
        drained = true;
        break;
      }
      RingSolution s = decode(random_genotype(inst, rng), inst);
      archive.insert(s.objectives(), s.genotype);
      next.push_back(std::move(s));
    }
    if (drained) break;
    pop = std::move(next);
  }

  RunResult r;
  r.algorithm = Algorithm::IbmolsIterated;
  r.seed = seed;
  r.config = cfg;
  r.budget = budget;
  r.archive = std::move(archive);
  r.evaluations = clock.evaluations();
  r.elapsed_seconds = clock.elapsed_seconds();
  return r;
}

}  // namespace rsp
