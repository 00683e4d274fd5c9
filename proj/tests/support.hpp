// Shared fixtures and independently written reference implementations.  The
// reference routines deliberately take the slow, obvious road (quadratic
// filters, exhaustive recursion, inclusion-exclusion) so that agreement with
// the production code is meaningful.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rsp/instance.hpp"
#include "rsp/pareto.hpp"
#include "rsp/rng.hpp"
#include "rsp/solution.hpp"

namespace support {

// --- instance builders -------------------------------------------------------

inline rsp::Instance make_instance(std::vector<std::array<double, 2>> coords,
                                   rsp::CostModel model = rsp::CostModel::plain(),
                                   std::string name = "synthetic") {
  return rsp::Instance(std::move(name), std::move(coords), model);
}

// Unit square: nodes 0..3 at the corners, all neighbouring distances 1.
inline rsp::Instance unit_square() {
  return make_instance({{0, 0}, {0, 1}, {1, 1}, {1, 0}}, rsp::CostModel::plain(), "square4");
}

inline rsp::Instance random_instance(int n, rsp::Rng& rng,
                                     rsp::CostModel model = rsp::CostModel::plain()) {
  std::vector<std::array<double, 2>> coords;
  std::set<std::pair<int, int>> used;
  while (static_cast<int>(coords.size()) < n) {
    const int x = static_cast<int>(rng.below(101));
    const int y = static_cast<int>(rng.below(101));
    if (used.insert({x, y}).second) coords.push_back({static_cast<double>(x), static_cast<double>(y)});
  }
  return make_instance(std::move(coords), model, "random" + std::to_string(n));
}

// Ten-node fixture carrying the documented worked examples: two genotypes
// whose rings are (v1,v7,v4,v9,v2,v6) and (v1,v8,v4,v3,v5) in 1-based vertex
// naming, crossed over after the sixth vertex.
inline rsp::Instance ten_node_instance() {
  std::vector<std::array<double, 2>> coords;
  for (int i = 0; i < 10; ++i)
    coords.push_back({static_cast<double>(10 * i), static_cast<double>((i * 3) % 7)});
  return make_instance(std::move(coords), rsp::CostModel::plain(), "ten");
}

inline rsp::Genotype worked_parent_1() {
  rsp::Genotype g(10);
  g.keys = {0.0, 0.7, -1.0, 0.3, -1.0, 0.8, 0.2, -1.0, 0.5, -1.0};
  return g;
}

inline rsp::Genotype worked_parent_2() {
  rsp::Genotype g(10);
  g.keys = {0.0, -1.0, 0.8, 0.7, 0.9, -1.0, -1.0, 0.2, -1.0, -1.0};
  return g;
}

constexpr int worked_cut = 6;  // "after vertex 6": keys 0..5 stay, 6..9 swap

// --- reference fronts and ranks ----------------------------------------------

inline bool ref_dominates(rsp::ObjectiveVector a, rsp::ObjectiveVector b) {
  return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

// Quadratic non-dominated filter with first-in duplicate handling, sorted by
// ascending f1.
inline std::vector<rsp::ObjectiveVector> ref_front(std::vector<rsp::ObjectiveVector> v) {
  std::vector<rsp::ObjectiveVector> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < v.size() && keep; ++j) {
      if (j == i) continue;
      if (ref_dominates(v[j], v[i])) keep = false;
      if (v[j] == v[i] && j < i) keep = false;  // duplicate: first one stands
    }
    if (keep) out.push_back(v[i]);
  }
  std::sort(out.begin(), out.end(),
            [](rsp::ObjectiveVector a, rsp::ObjectiveVector b) { return a.f1 < b.f1; });
  return out;
}

// Rank by repeated peeling of the current non-dominated layer.
inline std::vector<int> ref_ranks(const std::vector<rsp::ObjectiveVector>& v) {
  std::vector<int> rank(v.size(), -1);
  int level = 0;
  std::size_t assigned = 0;
  while (assigned < v.size()) {
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (rank[i] != -1) continue;
      bool dominated = false;
      for (std::size_t j = 0; j < v.size() && !dominated; ++j)
        if (j != i && rank[j] == -1 && ref_dominates(v[j], v[i])) dominated = true;
      if (!dominated) layer.push_back(i);
    }
    for (std::size_t i : layer) rank[i] = level;
    assigned += layer.size();
    ++level;
  }
  return rank;
}

// --- reference hypervolume ----------------------------------------------------

// Area of the union of the boxes [p, ref] by inclusion-exclusion; exponential
// in the point count, fine for the small sets used in tests.
inline double ref_hypervolume(const std::vector<std::array<double, 2>>& points,
                              std::array<double, 2> ref) {
  std::vector<std::array<double, 2>> kept;
  for (const auto& p : points)
    if (p[0] <= ref[0] && p[1] <= ref[1]) kept.push_back(p);
  const std::size_t k = kept.size();
  double area = 0.0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::array<double, 2> corner = {-std::numeric_limits<double>::infinity(),
                                    -std::numeric_limits<double>::infinity()};
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++bits;
      corner[0] = std::max(corner[0], kept[i][0]);
      corner[1] = std::max(corner[1], kept[i][1]);
    }
    const double vol = (ref[0] - corner[0]) * (ref[1] - corner[1]);
    area += (bits % 2 == 1 ? vol : -vol);
  }
  return area;
}

// --- reference indicator fitness ----------------------------------------------

inline double ref_fitness(const std::vector<rsp::ObjectiveVector>& population, double kappa,
                          std::size_t index) {
  double f1_min = std::numeric_limits<double>::infinity(), f1_max = -f1_min;
  double f2_min = f1_min, f2_max = -f1_min;
  for (const auto& z : population) {
    f1_min = std::min(f1_min, static_cast<double>(z.f1));
    f1_max = std::max(f1_max, static_cast<double>(z.f1));
    f2_min = std::min(f2_min, static_cast<double>(z.f2));
    f2_max = std::max(f2_max, static_cast<double>(z.f2));
  }
  auto norm = [&](rsp::ObjectiveVector z) {
    const double a = f1_max > f1_min ? (static_cast<double>(z.f1) - f1_min) / (f1_max - f1_min) : 0.0;
    const double b = f2_max > f2_min ? (static_cast<double>(z.f2) - f2_min) / (f2_max - f2_min) : 0.0;
    return std::array<double, 2>{a, b};
  };
  double fit = 0.0;
  for (std::size_t j = 0; j < population.size(); ++j) {
    if (j == index) continue;
    const auto a = norm(population[j]);
    const auto b = norm(population[index]);
    const double eps = std::max(a[0] - b[0], a[1] - b[1]);
    fit -= std::exp(-eps / kappa);
  }
  return fit;
}

// --- exhaustive solver ---------------------------------------------------------

// Every (subset, tour) pair by plain recursion: subsets by include/exclude
// DFS over nodes 1..n-1, tours by recursive permutation building (both
// directions generated, no symmetry pruning), evaluated from scratch.
namespace exhaustive_detail {

inline std::int64_t tour_cost(const std::vector<int>& ring, const rsp::Instance& inst) {
  if (ring.size() <= 1) return 0;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < ring.size(); ++i)
    total += inst.ring_cost(ring[i], ring[(i + 1) % ring.size()]);
  return total;
}

inline std::int64_t service_cost(const std::vector<int>& ring, const rsp::Instance& inst) {
  std::int64_t total = 0;
  for (int v = 0; v < inst.n(); ++v) {
    if (std::find(ring.begin(), ring.end(), v) != ring.end()) continue;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int r : ring) best = std::min<std::int64_t>(best, inst.assign_cost(v, r));
    total += best;
  }
  return total;
}

template <typename Fn>
void tours(std::vector<int>& ring, std::vector<int>& rest, Fn&& fn) {
  if (rest.empty()) {
    fn(ring);
    return;
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<int> next_rest = rest;
    next_rest.erase(next_rest.begin() + static_cast<std::ptrdiff_t>(i));
    ring.push_back(rest[i]);
    tours(ring, next_rest, fn);
    ring.pop_back();
  }
}

template <typename Fn>
void subsets(int node, int n, std::vector<int>& chosen, Fn&& fn) {
  if (node == n) {
    fn(chosen);
    return;
  }
  subsets(node + 1, n, chosen, fn);
  chosen.push_back(node);
  subsets(node + 1, n, chosen, fn);
  chosen.pop_back();
}

}  // namespace exhaustive_detail

template <typename Fn>
void for_each_solution(const rsp::Instance& inst, Fn&& fn) {
  namespace d = exhaustive_detail;
  std::vector<int> chosen;
  d::subsets(1, inst.n(), chosen, [&](const std::vector<int>& subset) {
    std::vector<int> ring = {rsp::Instance::depot};
    std::vector<int> rest = subset;
    d::tours(ring, rest, [&](const std::vector<int>& tour) {
      fn(tour, d::tour_cost(tour, inst), d::service_cost(tour, inst));
    });
  });
}

inline std::vector<rsp::ObjectiveVector> exhaustive_front(const rsp::Instance& inst) {
  std::vector<rsp::ObjectiveVector> all;
  for_each_solution(inst, [&](const std::vector<int>&, std::int64_t f1, std::int64_t f2) {
    all.push_back({f1, f2});
  });
  return ref_front(std::move(all));
}

inline std::int64_t exhaustive_scalar_min(const rsp::Instance& inst) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for_each_solution(inst, [&](const std::vector<int>&, std::int64_t f1, std::int64_t f2) {
    best = std::min(best, f1 + f2);
  });
  return best;
}

// --- reference rank-sum p-values ------------------------------------------------

// Exact one-sided p-values from the U statistic (pair counting, no ranks):
// every way of relabelling the pooled values is enumerated.
struct RefMw {
  double p_a_low = 0.0;   // P(U <= observed)
  double p_a_high = 0.0;  // P(U >= observed)
};

inline double u_statistic(const std::vector<double>& a, const std::vector<double>& b) {
  double u = 0.0;
  for (double x : a)
    for (double y : b) {
      if (x > y) u += 1.0;
      else if (x == y) u += 0.5;
    }
  return u;
}

inline RefMw ref_mann_whitney(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::size_t n = a.size();
  const double observed = u_statistic(a, b);

  std::vector<std::size_t> pick(n);
  std::uint64_t total = 0, leq = 0, geq = 0;
  // enumerate index subsets of size n in lexicographic order
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<double> xa, xb;
    std::vector<bool> used(pooled.size(), false);
    for (std::size_t i : pick) {
      xa.push_back(pooled[i]);
      used[i] = true;
    }
    for (std::size_t i = 0; i < pooled.size(); ++i)
      if (!used[i]) xb.push_back(pooled[i]);
    const double u = u_statistic(xa, xb);
    ++total;
    if (u <= observed + 1e-9) ++leq;
    if (u >= observed - 1e-9) ++geq;

    // next combination
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == pooled.size() - n + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t i = k; i < n; ++i) pick[i] = pick[i - 1] + 1;
  }
  return {static_cast<double>(leq) / static_cast<double>(total),
          static_cast<double>(geq) / static_cast<double>(total)};
}

}  // namespace support
