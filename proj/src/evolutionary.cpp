#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rsp/algorithms.hpp"
#include "search_detail.hpp"

namespace rsp {

namespace {

constexpr std::array<std::string_view, 6> kNames = {"ibmols", "seea", "ibea",
                                                    "nsga2",  "pcs",  "acs"};

constexpr std::array<Algorithm, 6> kAlgos = {Algorithm::IbmolsIterated, Algorithm::Seea,
                                             Algorithm::Ibea,           Algorithm::Nsga2,
                                             Algorithm::Pcs,            Algorithm::Acs};

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  for (std::size_t i = 0; i < kAlgos.size(); ++i)
    if (kAlgos[i] == a) return kNames[i];
  return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return kAlgos[i];
  return std::nullopt;
}

std::span<const std::string_view> algorithm_names() { return kNames; }

bool extreme_protected(std::span<const ObjectiveVector> population, std::size_t i) {
  const ObjectiveVector z = population[i];
  std::int64_t min_f1 = z.f1, min_f2 = z.f2;
  for (const auto& other : population) {
    min_f1 = std::min(min_f1, other.f1);
    min_f2 = std::min(min_f2, other.f2);
  }
  if (z.f1 != min_f1 && z.f2 != min_f2) return false;
  for (std::size_t j = 0; j < population.size(); ++j) {
    if (j == i) continue;
    if (population[j] == z) return false;  // a twin may be deleted instead
    if (dominates(population[j], z)) return false;
  }
  return true;
}

std::optional<std::size_t> pick_victim(std::span<const ObjectiveVector> population,
                                       std::span<const double> fitness) {
  std::vector<std::size_t> order(population.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fitness[a] < fitness[b] || (fitness[a] == fitness[b] && a < b);
  });
  for (std::size_t i : order)
    if (!extreme_protected(population, i)) return i;
  return std::nullopt;
}

std::vector<int> fast_nondominated_ranks(std::span<const ObjectiveVector> population) {
  const std::size_t k = population.size();
  std::vector<std::vector<std::size_t>> dominated(k);
  std::vector<int> dom_count(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (dominates(population[i], population[j])) {
        dominated[i].push_back(j);
        ++dom_count[j];
      } else if (dominates(population[j], population[i])) {
        dominated[j].push_back(i);
        ++dom_count[i];
      }
    }
  }
  std::vector<int> rank(k, -1);
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < k; ++i)
    if (dom_count[i] == 0) current.push_back(i);
  int level = 0;
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      rank[i] = level;
      for (std::size_t j : dominated[i])
        if (--dom_count[j] == 0) next.push_back(j);
    }
    current = std::move(next);
    ++level;
  }
  return rank;
}

std::vector<double> crowding_distances(std::span<const ObjectiveVector> front) {
  const std::size_t k = front.size();
  std::vector<double> dist(k, 0.0);
  if (k == 0) return dist;
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<std::size_t> order(k);
  for (int obj = 0; obj < 2; ++obj) {
    auto value = [&](std::size_t i) {
      return static_cast<double>(obj == 0 ? front[i].f1 : front[i].f2);
    };
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
    dist[order.front()] = inf;
    dist[order.back()] = inf;
    const double range = value(order.back()) - value(order.front());
    if (range <= 0.0) continue;
    for (std::size_t p = 1; p + 1 < k; ++p)
      if (dist[order[p]] != inf)
        dist[order[p]] += (value(order[p + 1]) - value(order[p - 1])) / range;
  }
  return dist;
}

namespace detail {

void validate_config(const AlgoConfig& cfg, bool hybrid) {
  if (cfg.population_size < 2) throw std::invalid_argument("config: population_size must be >= 2");
  if (!(cfg.kappa > 0.0)) throw std::invalid_argument("config: kappa must be positive");
  if (cfg.noise_rate < 0.0 || cfg.noise_rate > 1.0)
    throw std::invalid_argument("config: noise_rate must lie in [0, 1]");
  const OperatorMix& m = cfg.mix;
  if (m.p_crossover < 0.0 || m.p_crossover > 1.0 || m.p_mutation < 0.0 || m.p_mutation > 1.0)
    throw std::invalid_argument("config: operator probabilities must lie in [0, 1]");
  if (m.w_remove < 0.0 || m.w_insert < 0.0 || m.w_two_opt < 0.0 ||
      m.w_remove + m.w_insert + m.w_two_opt <= 0.0)
    throw std::invalid_argument("config: operator weights must be non-negative with a positive sum");
  if (hybrid) {
    if (!(cfg.step_fraction > 0.0 && cfg.step_fraction < 1.0))
      throw std::invalid_argument("config: step_fraction must lie in (0, 1)");
    if (cfg.delta < 0.5 || cfg.delta > 1.0)
      throw std::invalid_argument("config: delta must lie in [0.5, 1]");
    if (cfg.ls_population < 2) throw std::invalid_argument("config: ls_population must be >= 2");
  }
}

std::vector<RingSolution> init_population(std::size_t count, const Instance& inst, Rng& rng,
                                          Archive& archive) {
  std::vector<RingSolution> pop;
  pop.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RingSolution s = decode(random_genotype(inst, rng), inst);
    archive.insert(s.objectives(), s.genotype);
    pop.push_back(std::move(s));
  }
  return pop;
}

bool breed_from_pool(std::span<const Genotype> parents, std::size_t count, const Instance& inst,
                     const OperatorMix& mix, Rng& rng, RunClock& clock, Archive& archive,
                     std::vector<RingSolution>* offspring_out,
                     const std::function<void()>& after_offspring) {
  std::size_t made = 0;
  for (std::size_t pair = 0; 2 * pair + 1 < parents.size() && made < count; ++pair) {
    Genotype c1 = parents[2 * pair];
    Genotype c2 = parents[2 * pair + 1];
    if (rng.chance(mix.p_crossover)) std::tie(c1, c2) = crossover(c1, c2, rng);
    for (Genotype* child : {&c1, &c2}) {
      if (made >= count) break;
      if (!clock.try_consume()) return false;
      RingSolution sol = mutate(decode(*child, inst), inst, mix, rng);
      archive.insert(sol.objectives(), sol.genotype);
      if (offspring_out) offspring_out->push_back(std::move(sol));
      ++made;
      if (after_offspring) after_offspring();
    }
  }
  return true;
}

bool seea_generation(const Instance& inst, const AlgoConfig& cfg, Archive& archive, Rng& rng,
                     RunClock& clock, const std::function<void()>& after_offspring) {
  const std::size_t n = static_cast<std::size_t>(cfg.population_size);
  const std::size_t pairs = (n + 1) / 2;
  std::vector<Genotype> pool;
  pool.reserve(2 * pairs);
  for (std::size_t i = 0; i < 2 * pairs; ++i)
    pool.push_back(archive.entries()[rng.below(archive.size())].payload);
  return breed_from_pool(pool, n, inst, cfg.mix, rng, clock, archive, nullptr, after_offspring);
}

}  // namespace detail

namespace {

RunResult finish(Algorithm a, std::uint64_t seed, const AlgoConfig& cfg, Budget budget,
                 Archive archive, const RunClock& clock, int launches = -1) {
  RunResult r;
  r.algorithm = a;
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

RunResult seea_run(const Instance& inst, const AlgoConfig& cfg, Budget budget,
                   std::uint64_t seed) {
  detail::validate_config(cfg, false);
  Rng rng(seed);
  RunClock clock(budget);
  Archive archive;
  detail::init_population(static_cast<std::size_t>(cfg.population_size), inst, rng, archive);
  while (!clock.expired())
    if (!detail::seea_generation(inst, cfg, archive, rng, clock, nullptr)) break;
  return finish(Algorithm::Seea, seed, cfg, budget, std::move(archive), clock);
}

RunResult ibea_run(const Instance& inst, const AlgoConfig& cfg, Budget budget,
                   std::uint64_t seed) {
  detail::validate_config(cfg, false);
  Rng rng(seed);
  RunClock clock(budget);
  Archive archive;
  const std::size_t n = static_cast<std::size_t>(cfg.population_size);
  auto pop = detail::init_population(n, inst, rng, archive);

  while (!clock.expired()) {
    std::vector<ObjectiveVector> vectors;
    vectors.reserve(pop.size());
    for (const auto& s : pop) vectors.push_back(s.objectives());
    const auto fits = all_indicator_fitness(FitnessContext::over(vectors, cfg.kappa));

    const std::size_t pairs = (n + 1) / 2;
    std::vector<Genotype> pool;
    pool.reserve(2 * pairs);
    for (std::size_t i = 0; i < 2 * pairs; ++i) {
      const std::size_t x = rng.below(n);
      const std::size_t y = rng.below(n);
      pool.push_back(pop[fits[y] > fits[x] ? y : x].genotype);
    }

    std::vector<RingSolution> offspring;
    offspring.reserve(n);
    if (!detail::breed_from_pool(pool, n, inst, cfg.mix, rng, clock, archive, &offspring, nullptr))
      break;

    // environmental selection: delete the worst member one at a time,
    // recomputing fitness after each removal; bounds stay fixed for the round
    std::vector<RingSolution> merged = std::move(pop);
    for (auto& s : offspring) merged.push_back(std::move(s));
    std::vector<ObjectiveVector> mv;
    mv.reserve(merged.size());
    for (const auto& s : merged) mv.push_back(s.objectives());

    const NormBounds bounds = NormBounds::over(mv);
    std::vector<std::array<double, 2>> pts;
    pts.reserve(mv.size());
    for (const auto& z : mv) pts.push_back(normalize(z, bounds));
    std::vector<double> fit(mv.size(), 0.0);
    for (std::size_t i = 0; i < mv.size(); ++i)
      for (std::size_t j = 0; j < mv.size(); ++j)
        if (i != j) fit[i] -= std::exp(-eps_binary(pts[j], pts[i]) / cfg.kappa);

    std::vector<std::size_t> alive(mv.size());
    std::iota(alive.begin(), alive.end(), std::size_t{0});
    while (alive.size() > n) {
      std::vector<ObjectiveVector> av;
      std::vector<double> af;
      av.reserve(alive.size());
      af.reserve(alive.size());
      for (std::size_t i : alive) {
        av.push_back(mv[i]);
        af.push_back(fit[i]);
      }
      auto victim_pos = pick_victim(av, af);
      if (!victim_pos) victim_pos = 0;  // unreachable for alive sets of 3+
      const std::size_t victim = alive[*victim_pos];
      alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(*victim_pos));
      for (std::size_t i : alive)
        fit[i] += std::exp(-eps_binary(pts[victim], pts[i]) / cfg.kappa);
    }

    std::vector<RingSolution> next;
    next.reserve(n);
    for (std::size_t i : alive) next.push_back(std::move(merged[i]));
    pop = std::move(next);
  }
  return finish(Algorithm::Ibea, seed, cfg, budget, std::move(archive), clock);
}

RunResult nsga2_run(const Instance& inst, const AlgoConfig& cfg, Budget budget,
                    std::uint64_t seed) {
  detail::validate_config(cfg, false);
  Rng rng(seed);
  RunClock clock(budget);
  Archive archive;
  const std::size_t n = static_cast<std::size_t>(cfg.population_size);
  auto pop = detail::init_population(n, inst, rng, archive);

  auto rank_and_crowd = [](std::span<const ObjectiveVector> vectors,
                           std::vector<int>& rank, std::vector<double>& crowd) {
    rank = fast_nondominated_ranks(vectors);
    crowd.assign(vectors.size(), 0.0);
    const int levels = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()) + 1;
    for (int level = 0; level < levels; ++level) {
      std::vector<std::size_t> members;
      std::vector<ObjectiveVector> front;
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (rank[i] != level) continue;
        members.push_back(i);
        front.push_back(vectors[i]);
      }
      const auto d = crowding_distances(front);
      for (std::size_t p = 0; p < members.size(); ++p) crowd[members[p]] = d[p];
    }
  };

  while (!clock.expired()) {
    std::vector<ObjectiveVector> vectors;
    vectors.reserve(pop.size());
    for (const auto& s : pop) vectors.push_back(s.objectives());
    std::vector<int> rank;
    std::vector<double> crowd;
    rank_and_crowd(vectors, rank, crowd);

    const std::size_t pairs = (n + 1) / 2;
    std::vector<Genotype> pool;
    pool.reserve(2 * pairs);
    for (std::size_t i = 0; i < 2 * pairs; ++i) {
      const std::size_t x = rng.below(n);
      const std::size_t y = rng.below(n);
      const bool y_wins = rank[y] < rank[x] || (rank[y] == rank[x] && crowd[y] > crowd[x]);
      pool.push_back(pop[y_wins ? y : x].genotype);
    }

    std::vector<RingSolution> offspring;
    offspring.reserve(n);
    if (!detail::breed_from_pool(pool, n, inst, cfg.mix, rng, clock, archive, &offspring, nullptr))
      break;

    std::vector<RingSolution> merged = std::move(pop);
    for (auto& s : offspring) merged.push_back(std::move(s));
    std::vector<ObjectiveVector> mv;
    mv.reserve(merged.size());
    for (const auto& s : merged) mv.push_back(s.objectives());
    std::vector<int> mrank;
    std::vector<double> mcrowd;
    rank_and_crowd(mv, mrank, mcrowd);

    std::vector<std::size_t> order(merged.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (mrank[a] != mrank[b]) return mrank[a] < mrank[b];
      if (mcrowd[a] != mcrowd[b]) return mcrowd[a] > mcrowd[b];
      return a < b;
    });

    std::vector<RingSolution> next;
    next.reserve(n);
    for (std::size_t p = 0; p < n; ++p) next.push_back(std::move(merged[order[p]]));
    pop = std::move(next);
  }
  return finish(Algorithm::Nsga2, seed, cfg, budget, std::move(archive), clock);
}

RunResult run_algorithm(Algorithm a, const Instance& inst, const AlgoConfig& cfg, Budget budget,
                        std::uint64_t seed, const HybridHooks& hooks) {
  switch (a) {
    case Algorithm::IbmolsIterated:
      return ibmols_iterated(inst, cfg, budget, seed);
    case Algorithm::Seea:
      return seea_run(inst, cfg, budget, seed);
    case Algorithm::Ibea:
      return ibea_run(inst, cfg, budget, seed);
    case Algorithm::Nsga2:
      return nsga2_run(inst, cfg, budget, seed);
    case Algorithm::Pcs:
      return pcs_run(inst, cfg, budget, seed, hooks);
    case Algorithm::Acs:
      return acs_run(inst, cfg, budget, seed, hooks);
  }
  throw std::invalid_argument("run_algorithm: unknown algorithm");
}

}  // namespace rsp
