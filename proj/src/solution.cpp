#include "rsp/solution.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rsp {

namespace {

void check_node(int v, const Instance& inst) {
  if (v < 0 || v >= inst.n()) throw std::invalid_argument("node index out of range");
}

int nearest_ring_node(int v, std::span<const int> ring, const Instance& inst) {
  int best = ring[0];
  std::int32_t best_d = inst.assign_cost(v, best);
  for (int r : ring.subspan(1)) {
    const std::int32_t d = inst.assign_cost(v, r);
    if (d < best_d || (d == best_d && r < best)) {
      best_d = d;
      best = r;
    }
  }
  return best;
}

std::int64_t cycle_cost(std::span<const int> ring, const Instance& inst) {
  if (ring.size() <= 1) return 0;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < ring.size(); ++i)
    total += inst.ring_cost(ring[i], ring[(i + 1) % ring.size()]);
  return total;
}

// Even key re-spacing that reproduces the current ring order.
void respace_keys(RingSolution& s) {
  const double k = static_cast<double>(s.ring.size());
  for (std::size_t i = 0; i < s.ring.size(); ++i)
    s.genotype.keys[static_cast<std::size_t>(s.ring[i])] = static_cast<double>(i) / k;
}

}  // namespace

ObjectiveVector evaluate(std::span<const int> ring, const Instance& inst) {
  if (ring.empty()) throw std::invalid_argument("evaluate: empty ring");
  if (ring[0] != Instance::depot) throw std::invalid_argument("evaluate: ring must start at the depot");
  std::vector<char> on_ring(static_cast<std::size_t>(inst.n()), 0);
  for (int v : ring) {
    check_node(v, inst);
    if (on_ring[static_cast<std::size_t>(v)]) throw std::invalid_argument("evaluate: duplicate ring node");
    on_ring[static_cast<std::size_t>(v)] = 1;
  }
  std::int64_t f2 = 0;
  for (int v = 0; v < inst.n(); ++v)
    if (!on_ring[static_cast<std::size_t>(v)])
      f2 += inst.assign_cost(v, nearest_ring_node(v, ring, inst));
  return {cycle_cost(ring, inst), f2};
}

RingSolution decode(const Genotype& g, const Instance& inst) {
  if (g.size() != inst.n()) throw std::invalid_argument("decode: genotype size mismatch");
  if (g.keys[0] != 0.0) throw std::invalid_argument("decode: depot key must be 0");

  std::vector<std::pair<double, int>> order;
  order.reserve(g.keys.size());
  for (int v = 0; v < g.size(); ++v) {
    const double key = g.keys[static_cast<std::size_t>(v)];
    if (key == Genotype::unvisited_key) continue;
    if (!(key >= 0.0 && key < 1.0)) throw std::invalid_argument("decode: key outside [0, 1)");
    order.emplace_back(key, v);
  }
  std::sort(order.begin(), order.end());
  for (std::size_t i = 1; i < order.size(); ++i)
    if (order[i].first == order[i - 1].first)
      throw std::invalid_argument("decode: duplicate key");

  RingSolution s;
  s.genotype = g;
  s.ring.reserve(order.size());
  for (const auto& [key, v] : order) s.ring.push_back(v);

  s.assigned_to.assign(static_cast<std::size_t>(inst.n()), -1);
  s.ring_cost = cycle_cost(s.ring, inst);
  s.assign_cost = 0;
  for (int v = 0; v < inst.n(); ++v) {
    if (g.visited(v)) continue;
    const int target = nearest_ring_node(v, s.ring, inst);
    s.assigned_to[static_cast<std::size_t>(v)] = target;
    s.assign_cost += inst.assign_cost(v, target);
  }
  return s;
}

RingSolution apply_insert(RingSolution s, int v, const Instance& inst) {
  check_node(v, inst);
  if (s.visited(v)) throw std::invalid_argument("apply_insert: node already on the ring");

  const std::size_t k = s.ring.size();
  std::size_t best_gap = 0;
  std::int64_t best_delta = 0;
  for (std::size_t p = 0; p < k; ++p) {
    const int a = s.ring[p];
    const int b = s.ring[(p + 1) % k];
    const std::int64_t delta = static_cast<std::int64_t>(inst.ring_cost(a, v)) + inst.ring_cost(v, b) -
                               inst.ring_cost(a, b);
    if (p == 0 || delta < best_delta) {
      best_delta = delta;
      best_gap = p;
    }
  }

  const double pred_key = s.genotype.keys[static_cast<std::size_t>(s.ring[best_gap])];
  const double succ_key =
      best_gap + 1 < k ? s.genotype.keys[static_cast<std::size_t>(s.ring[best_gap + 1])] : 1.0;

  s.ring_cost += best_delta;
  s.assign_cost -= inst.assign_cost(v, s.assigned_to[static_cast<std::size_t>(v)]);
  s.assigned_to[static_cast<std::size_t>(v)] = -1;
  s.ring.insert(s.ring.begin() + static_cast<std::ptrdiff_t>(best_gap) + 1, v);

  const double mid = (pred_key + succ_key) / 2.0;
  if (mid > pred_key && mid < succ_key)
    s.genotype.keys[static_cast<std::size_t>(v)] = mid;
  else
    respace_keys(s);

  // only the new ring node can attract existing assignments
  for (int u = 0; u < inst.n(); ++u) {
    const int cur = s.assigned_to[static_cast<std::size_t>(u)];
    if (cur < 0) continue;
    const std::int32_t d_new = inst.assign_cost(u, v);
    const std::int32_t d_cur = inst.assign_cost(u, cur);
    if (d_new < d_cur) {
      s.assign_cost += d_new - d_cur;
      s.assigned_to[static_cast<std::size_t>(u)] = v;
    } else if (d_new == d_cur && v < cur) {
      s.assigned_to[static_cast<std::size_t>(u)] = v;
    }
  }
  return s;
}

RingSolution apply_remove(RingSolution s, int v, const Instance& inst) {
  check_node(v, inst);
  if (v == Instance::depot) throw std::invalid_argument("apply_remove: the depot cannot leave the ring");
  if (!s.visited(v)) throw std::invalid_argument("apply_remove: node not on the ring");

  const std::size_t k = s.ring.size();
  std::size_t pos = 0;
  while (s.ring[pos] != v) ++pos;
  const int prev = s.ring[pos - 1];
  const int next = s.ring[(pos + 1) % k];
  s.ring_cost += static_cast<std::int64_t>(inst.ring_cost(prev, next)) - inst.ring_cost(prev, v) -
                 inst.ring_cost(v, next);
  s.ring.erase(s.ring.begin() + static_cast<std::ptrdiff_t>(pos));
  s.genotype.keys[static_cast<std::size_t>(v)] = Genotype::unvisited_key;

  const int target = nearest_ring_node(v, s.ring, inst);
  s.assigned_to[static_cast<std::size_t>(v)] = target;
  s.assign_cost += inst.assign_cost(v, target);

  // nodes that leaned on v need a fresh nearest; everyone else keeps theirs
  for (int u = 0; u < inst.n(); ++u) {
    if (u == v || s.assigned_to[static_cast<std::size_t>(u)] != v) continue;
    const int t = nearest_ring_node(u, s.ring, inst);
    s.assign_cost += inst.assign_cost(u, t) - inst.assign_cost(u, v);
    s.assigned_to[static_cast<std::size_t>(u)] = t;
  }
  return s;
}

RingSolution apply_two_opt(RingSolution s, int i, int j, const Instance& inst) {
  const int k = static_cast<int>(s.ring.size());
  if (i < 1 || j < i || j >= k) throw std::invalid_argument("apply_two_opt: positions out of range");
  if (i == j) return s;

  const int a = s.ring[static_cast<std::size_t>(i - 1)];
  const int b = s.ring[static_cast<std::size_t>(i)];
  const int c = s.ring[static_cast<std::size_t>(j)];
  const int d = s.ring[static_cast<std::size_t>((j + 1) % k)];
  s.ring_cost += static_cast<std::int64_t>(inst.ring_cost(a, c)) + inst.ring_cost(b, d) -
                 inst.ring_cost(a, b) - inst.ring_cost(c, d);

  // keep the key values attached to the positions so the genotype still
  // decodes to the (new) ring order
  std::vector<double> seg_keys;
  seg_keys.reserve(static_cast<std::size_t>(j - i + 1));
  for (int q = i; q <= j; ++q)
    seg_keys.push_back(s.genotype.keys[static_cast<std::size_t>(s.ring[static_cast<std::size_t>(q)])]);
  std::reverse(s.ring.begin() + i, s.ring.begin() + j + 1);
  for (int q = i; q <= j; ++q)
    s.genotype.keys[static_cast<std::size_t>(s.ring[static_cast<std::size_t>(q)])] =
        seg_keys[static_cast<std::size_t>(q - i)];
  return s;
}

Genotype genotype_from_ring(std::span<const int> ring, int n) {
  if (ring.empty() || ring[0] != Instance::depot)
    throw std::invalid_argument("genotype_from_ring: ring must start at the depot");
  Genotype g(n);
  const double k = static_cast<double>(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i)
    g.keys[static_cast<std::size_t>(ring[i])] = static_cast<double>(i) / k;
  return g;
}

Genotype random_genotype(const Instance& inst, Rng& rng) {
  Genotype g(inst.n());
  std::vector<double> used{0.0};
  for (int v = 1; v < inst.n(); ++v) {
    if (!rng.chance(0.5)) continue;
    double key = rng.real01();
    while (std::find(used.begin(), used.end(), key) != used.end()) key = rng.real01();
    used.push_back(key);
    g.keys[static_cast<std::size_t>(v)] = key;
  }
  return g;
}

std::vector<FrontPoint> brute_force_front(const Instance& inst) {
  const int n = inst.n();
  if (n > 10)
    throw std::invalid_argument("brute_force_front: exhaustive enumeration is limited to n <= 10");

  ParetoSet<std::vector<int>> front;
  const std::uint32_t masks = 1u << (n - 1);  // subsets of the non-depot nodes
  std::vector<int> others, ring;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    others.clear();
    for (int v = 1; v < n; ++v)
      if (mask & (1u << (v - 1))) others.push_back(v);

    if (others.size() <= 1) {
      ring.assign(1, Instance::depot);
      ring.insert(ring.end(), others.begin(), others.end());
      front.insert(evaluate(ring, inst), ring);
      continue;
    }
    // depot fixed first; tours differing only by direction collapse via
    // first-interior < last-interior
    std::sort(others.begin(), others.end());
    do {
      if (others.front() > others.back()) continue;
      ring.assign(1, Instance::depot);
      ring.insert(ring.end(), others.begin(), others.end());
      front.insert(evaluate(ring, inst), ring);
    } while (std::next_permutation(others.begin(), others.end()));
  }

  std::vector<FrontPoint> out;
  out.reserve(front.size());
  for (const auto& e : front.entries()) out.push_back({e.z, e.payload});
  return out;
}

}  // namespace rsp
