#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rsp/algorithms.hpp"
#include "support.hpp"

using rsp::Algorithm;
using rsp::AlgoConfig;
using rsp::Budget;
using rsp::HybridHooks;
using rsp::ObjectiveVector;
using rsp::RunClock;

namespace {

AlgoConfig small_config(int population, int ls_population = 4) {
  AlgoConfig cfg;
  cfg.population_size = population;
  cfg.ls_population = ls_population;
  cfg.step_fraction = 0.2;
  return cfg;
}

// The free initial state of every run: the archive-offered decodes of the
// first population, replayed from the seed.
std::vector<ObjectiveVector> replayed_init_vectors(const rsp::Instance& inst, std::uint64_t seed,
                                                   int count) {
  rsp::Rng rng(seed);
  std::vector<ObjectiveVector> out;
  for (int i = 0; i < count; ++i)
    out.push_back(rsp::decode(rsp::random_genotype(inst, rng), inst).objectives());
  return out;
}

struct EventLog {
  std::vector<rsp::BoundaryEvent> events;

  HybridHooks hooks() {
    HybridHooks h;
    h.on_boundary = [this](const rsp::BoundaryEvent& ev, const rsp::Archive&) {
      events.push_back(ev);
    };
    return h;
  }
};

constexpr std::array<Algorithm, 6> kAll = {Algorithm::IbmolsIterated, Algorithm::Seea,
                                           Algorithm::Ibea,           Algorithm::Nsga2,
                                           Algorithm::Pcs,            Algorithm::Acs};

}  // namespace

TEST_SUITE("algorithms") {
  TEST_CASE("run clock accounting") {
    RunClock evals(Budget::evals(3));
    CHECK_FALSE(evals.expired());
    CHECK(evals.try_consume());
    CHECK(evals.try_consume());
    CHECK(evals.try_consume());
    CHECK_FALSE(evals.try_consume());
    CHECK(evals.expired());
    CHECK(evals.evaluations() == 3);

    RunClock zero(Budget::evals(0));
    CHECK(zero.expired());
    CHECK_FALSE(zero.try_consume());

    RunClock wall(Budget::wall_clock(10.0));
    CHECK_FALSE(wall.expired());
    CHECK(wall.try_consume());  // wall-clock runs never refuse a consumption
    CHECK(wall.evaluations() == 1);

    RunClock instant(Budget::wall_clock(0.0));
    CHECK(instant.expired());
  }

  TEST_CASE("extreme members are protected unless twinned or dominated") {
    using V = std::vector<ObjectiveVector>;
    const V spread{{0, 5}, {5, 0}, {3, 3}};
    CHECK(rsp::extreme_protected(spread, 0));
    CHECK(rsp::extreme_protected(spread, 1));
    CHECK_FALSE(rsp::extreme_protected(spread, 2));

    const V twins{{0, 5}, {0, 5}, {5, 0}};
    CHECK_FALSE(rsp::extreme_protected(twins, 0));
    CHECK_FALSE(rsp::extreme_protected(twins, 1));
    CHECK(rsp::extreme_protected(twins, 2));

    const V column{{0, 5}, {0, 4}};
    CHECK_FALSE(rsp::extreme_protected(column, 0));  // shares min f1 but is dominated
    CHECK(rsp::extreme_protected(column, 1));
  }

  TEST_CASE("victim choice follows fitness with protection") {
    using V = std::vector<ObjectiveVector>;
    const V pop{{1, 5}, {0, 6}, {5, 0}};
    const std::vector<double> fits{-5, -1, -3};
    auto victim = rsp::pick_victim(pop, fits);
    REQUIRE(victim.has_value());
    CHECK(*victim == 0);  // worst fitness and not an extreme

    const V shielded{{0, 5}, {5, 0}, {3, 3}};
    victim = rsp::pick_victim(shielded, fits);  // members 0 and 1 are protected
    REQUIRE(victim.has_value());
    CHECK(*victim == 2);

    const V tied{{2, 2}, {2, 2}, {0, 3}, {3, 0}};
    const std::vector<double> flat{-1, -1, -1, -1};
    victim = rsp::pick_victim(tied, flat);
    REQUIRE(victim.has_value());
    CHECK(*victim == 0);  // fitness tie broken toward the lowest index

    const V extremes{{0, 5}, {5, 0}};
    CHECK_FALSE(rsp::pick_victim(extremes, std::vector<double>{-2, -2}).has_value());
  }

  TEST_CASE("dominance ranks match layer peeling") {
    rsp::Rng rng(70);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t count = 1 + rng.below(25);
      std::vector<ObjectiveVector> pop;
      for (std::size_t i = 0; i < count; ++i)
        pop.push_back({static_cast<std::int64_t>(rng.below(10)),
                       static_cast<std::int64_t>(rng.below(10))});  // duplicates likely
      CHECK(rsp::fast_nondominated_ranks(pop) == support::ref_ranks(pop));
    }
  }

  TEST_CASE("crowding distances on fixed fronts") {
    const double inf = std::numeric_limits<double>::infinity();
    using V = std::vector<ObjectiveVector>;

    const auto d = rsp::crowding_distances(V{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
    REQUIRE(d.size() == 4);
    CHECK(d[0] == inf);
    CHECK(d[3] == inf);
    CHECK(d[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(d[2] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    // a collapsed objective contributes nothing but still marks boundaries
    const auto flat = rsp::crowding_distances(V{{5, 1}, {5, 2}, {5, 3}});
    CHECK(flat[0] == inf);
    CHECK(flat[2] == inf);
    CHECK(flat[1] == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(rsp::crowding_distances(V{}).empty());
    CHECK(rsp::crowding_distances(V{{1, 1}}) == std::vector<double>{inf});
    CHECK(rsp::crowding_distances(V{{1, 2}, {2, 1}}) == std::vector<double>{inf, inf});
  }

  TEST_CASE("a local-search pass over an already optimal population changes nothing") {
    rsp::Rng build(71);
    const rsp::Instance inst = support::random_instance(6, build);
    const auto front = rsp::brute_force_front(inst);

    rsp::Archive archive;
    std::vector<rsp::RingSolution> pop;
    for (const auto& p : front) {
      rsp::RingSolution s = rsp::decode(rsp::genotype_from_ring(p.ring, inst.n()), inst);
      REQUIRE(s.objectives() == p.z);
      archive.insert(s.objectives(), s.genotype);
      pop.push_back(std::move(s));
    }
    const auto before = archive.vectors();

    rsp::Rng rng(72);
    RunClock clock(Budget::evals(100000));
    const bool improved = rsp::ibmols_step(pop, archive, inst, small_config(10), rng, clock);
    CHECK_FALSE(improved);
    CHECK(archive.vectors() == before);

    std::vector<rsp::RingSolution> empty;
    CHECK_THROWS_AS(rsp::ibmols_step(empty, archive, inst, small_config(10), rng, clock),
                    std::invalid_argument);
  }

  TEST_CASE("evaluation budgets are spent exactly") {
    rsp::Rng build(73);
    const rsp::Instance inst = support::random_instance(10, build);
    for (Algorithm a : kAll) {
      const auto r = rsp::run_algorithm(a, inst, small_config(10), Budget::evals(503), 9);
      CHECK(r.evaluations == 503);
      CHECK(r.algorithm == a);
      CHECK(r.archive.size() >= 1);
      if (a == Algorithm::Pcs || a == Algorithm::Acs) CHECK(r.launches_ls >= 0);
      else CHECK(r.launches_ls == -1);
    }
  }

  TEST_CASE("a zero budget leaves exactly the filtered initial population") {
    rsp::Rng build(74);
    const rsp::Instance inst = support::random_instance(9, build);
    const AlgoConfig cfg = small_config(8);
    const auto r = rsp::ibmols_iterated(inst, cfg, Budget::evals(0), 21);
    CHECK(r.evaluations == 0);
    CHECK(r.archive.vectors() == support::ref_front(replayed_init_vectors(inst, 21, 8)));
  }

  TEST_CASE("identical seeds reproduce identical runs") {
    rsp::Rng build(75);
    const rsp::Instance inst = support::random_instance(9, build);
    for (Algorithm a : kAll) {
      const auto r1 = rsp::run_algorithm(a, inst, small_config(8), Budget::evals(300), 4);
      const auto r2 = rsp::run_algorithm(a, inst, small_config(8), Budget::evals(300), 4);
      CHECK(r1.evaluations == r2.evaluations);
      CHECK(r1.launches_ls == r2.launches_ls);
      REQUIRE(r1.archive.size() == r2.archive.size());
      CHECK(r1.archive.vectors() == r2.archive.vectors());
      for (std::size_t i = 0; i < r1.archive.size(); ++i)
        CHECK(r1.archive.entries()[i].payload == r2.archive.entries()[i].payload);
    }
  }

  TEST_CASE("the archive never regresses from its starting front") {
    rsp::Rng build(76);
    const rsp::Instance inst = support::random_instance(9, build);
    for (Algorithm a : kAll) {
      const auto r = rsp::run_algorithm(a, inst, small_config(8), Budget::evals(400), 5);
      const auto final_front = r.archive.vectors();
      for (const auto& z : support::ref_front(replayed_init_vectors(inst, 5, 8))) {
        const bool covered = std::any_of(final_front.begin(), final_front.end(),
                                         [&](ObjectiveVector w) { return rsp::weakly_dominates(w, z); });
        CHECK(covered);
      }
    }
  }

  TEST_CASE("periodic hybrid launches at every boundary") {
    rsp::Rng build(77);
    const rsp::Instance inst = support::random_instance(12, build);
    EventLog log;
    const auto r = rsp::pcs_run(inst, small_config(10), Budget::evals(600), 3, log.hooks());
    REQUIRE(!log.events.empty());
    CHECK(r.launches_ls == static_cast<int>(log.events.size()));
    std::uint64_t prev = 0;
    for (const auto& ev : log.events) {
      CHECK(ev.launched);
      CHECK(ev.contribution >= 0.5);
      CHECK(ev.contribution <= 1.0);
      CHECK(ev.evaluations >= 120);  // first boundary of a 600-evaluation run at step 0.2
      CHECK(ev.evaluations > prev);
      CHECK(ev.archive_size >= 1);
      prev = ev.evaluations;
    }
  }

  TEST_CASE("an always-firing threshold makes the adaptive hybrid periodic") {
    rsp::Rng build(78);
    const rsp::Instance inst = support::random_instance(12, build);
    AlgoConfig cfg = small_config(10);
    cfg.delta = 1.0;  // the contribution can never exceed this

    EventLog pcs_log, acs_log;
    const auto pcs = rsp::pcs_run(inst, cfg, Budget::evals(600), 3, pcs_log.hooks());
    const auto acs = rsp::acs_run(inst, cfg, Budget::evals(600), 3, acs_log.hooks());

    CHECK(pcs.evaluations == acs.evaluations);
    CHECK(pcs.launches_ls == acs.launches_ls);
    CHECK(pcs.archive.vectors() == acs.archive.vectors());
    REQUIRE(pcs_log.events.size() == acs_log.events.size());
    for (std::size_t i = 0; i < pcs_log.events.size(); ++i) {
      CHECK(pcs_log.events[i].evaluations == acs_log.events[i].evaluations);
      CHECK(pcs_log.events[i].contribution == acs_log.events[i].contribution);
      CHECK(pcs_log.events[i].launched == acs_log.events[i].launched);
      CHECK(pcs_log.events[i].archive_size == acs_log.events[i].archive_size);
    }
  }

  TEST_CASE("a never-firing threshold reduces the adaptive hybrid to the plain EA") {
    rsp::Rng build(79);
    const rsp::Instance inst = support::random_instance(15, build);
    AlgoConfig cfg = small_config(20, 5);
    cfg.step_fraction = 0.3;
    cfg.delta = 0.5;  // launches only when a boundary adds nothing new

    bool found = false;
    for (std::uint64_t seed = 1; seed <= 60 && !found; ++seed) {
      const auto acs = rsp::acs_run(inst, cfg, Budget::evals(1200), seed);
      if (acs.launches_ls != 0) continue;
      found = true;
      const auto seea = rsp::seea_run(inst, cfg, Budget::evals(1200), seed);
      CHECK(acs.evaluations == seea.evaluations);
      CHECK(acs.archive.vectors() == seea.archive.vectors());
    }
    CHECK(found);  // some seed keeps improving across every boundary
  }

  TEST_CASE("wall-clock hybrid crosses its first boundary") {
    rsp::Rng build(80);
    const rsp::Instance inst = support::random_instance(10, build);
    AlgoConfig cfg = small_config(8);
    cfg.step_fraction = 0.8;  // one-second boundary granularity, floored at 1
    const auto r = rsp::pcs_run(inst, cfg, Budget::wall_clock(1.15), 2);
    CHECK(r.evaluations > 0);
    CHECK(r.launches_ls >= 1);
    CHECK(r.elapsed_seconds >= 1.15);
  }

  TEST_CASE("wall-clock smoke run stops on time") {
    rsp::Rng build(81);
    const rsp::Instance inst = support::random_instance(10, build);
    const auto r = rsp::seea_run(inst, small_config(8), Budget::wall_clock(0.15), 2);
    CHECK(r.evaluations > 0);
    CHECK(r.elapsed_seconds >= 0.15);
    CHECK(r.archive.size() >= 1);
  }

  TEST_CASE("algorithm names round-trip") {
    CHECK(rsp::algorithm_names().size() == 6);
    for (Algorithm a : kAll) {
      const auto name = rsp::algorithm_name(a);
      REQUIRE(rsp::algorithm_from_name(name).has_value());
      CHECK(*rsp::algorithm_from_name(name) == a);
    }
    CHECK(rsp::algorithm_name(Algorithm::IbmolsIterated) == "ibmols");
    CHECK_FALSE(rsp::algorithm_from_name("spea2").has_value());
    CHECK_FALSE(rsp::algorithm_from_name("").has_value());
  }

  TEST_CASE("configuration validation") {
    rsp::Rng build(82);
    const rsp::Instance inst = support::random_instance(6, build);
    const Budget tiny = Budget::evals(10);

    auto expect_throw = [&](AlgoConfig cfg, const char* fragment, bool hybrid_only = false) {
      if (!hybrid_only)
        CHECK_THROWS_WITH_AS(rsp::seea_run(inst, cfg, tiny, 1), doctest::Contains(fragment),
                             std::invalid_argument);
      CHECK_THROWS_WITH_AS(rsp::pcs_run(inst, cfg, tiny, 1), doctest::Contains(fragment),
                           std::invalid_argument);
    };

    AlgoConfig cfg = small_config(1);
    expect_throw(cfg, "population_size");

    cfg = small_config(8);
    cfg.kappa = 0.0;
    expect_throw(cfg, "kappa");

    cfg = small_config(8);
    cfg.noise_rate = -0.1;
    expect_throw(cfg, "noise_rate");

    cfg = small_config(8);
    cfg.mix.p_crossover = 1.5;
    expect_throw(cfg, "probabilities");

    cfg = small_config(8);
    cfg.mix.w_remove = cfg.mix.w_insert = cfg.mix.w_two_opt = 0.0;
    expect_throw(cfg, "weights");

    cfg = small_config(8);
    cfg.step_fraction = 0.0;
    expect_throw(cfg, "step_fraction", true);
    cfg.step_fraction = 1.0;
    expect_throw(cfg, "step_fraction", true);
    cfg.step_fraction = 1.5;
    expect_throw(cfg, "step_fraction", true);

    cfg = small_config(8);
    cfg.delta = 0.4;
    expect_throw(cfg, "delta", true);
    cfg.delta = 1.01;
    expect_throw(cfg, "delta", true);

    cfg = small_config(8, 1);
    expect_throw(cfg, "ls_population", true);

    // hybrid-only knobs are ignored by the non-hybrid algorithms
    cfg = small_config(8);
    cfg.step_fraction = 0.0;
    CHECK_NOTHROW(rsp::seea_run(inst, cfg, tiny, 1));
  }
}
