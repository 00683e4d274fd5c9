#pragma once

#include <span>
#include <vector>

#include "rsp/instance.hpp"
#include "rsp/pareto.hpp"
#include "rsp/rng.hpp"

namespace rsp {

// Random-keys genotype over the instance nodes.  A visited node v carries
// keys[v] in [0,1); unvisited nodes carry the sentinel.  The depot is always
// visited with key 0, and no two visited nodes may share a key, so sorting
// the visited nodes by key yields a unique ring order starting at the depot.
struct Genotype {
  static constexpr double unvisited_key = -1.0;

  std::vector<double> keys;

  Genotype() = default;
  explicit Genotype(int n) : keys(static_cast<std::size_t>(n), unvisited_key) {
    if (n > 0) keys[0] = 0.0;
  }

  int size() const { return static_cast<int>(keys.size()); }
  bool visited(int v) const { return keys[static_cast<std::size_t>(v)] >= 0.0; }
  int visited_count() const {
    int c = 0;
    for (double k : keys) c += (k >= 0.0);
    return c;
  }

  friend bool operator==(const Genotype&, const Genotype&) = default;
};

// Decoded phenotype.  ring lists the visited nodes in tour order starting at
// the depot; assigned_to[v] is the ring node serving unvisited v, or -1 when
// v itself is on the ring.  The objective pair is kept in sync by the move
// routines below.
//
// Ring cost follows the cyclic-sum convention: a single-node ring costs 0 and
// a two-node ring pays its edge in both directions.
struct RingSolution {
  Genotype genotype;
  std::vector<int> ring;
  std::vector<int> assigned_to;
  std::int64_t ring_cost = 0;
  std::int64_t assign_cost = 0;

  ObjectiveVector objectives() const { return {ring_cost, assign_cost}; }
  bool visited(int v) const { return assigned_to[static_cast<std::size_t>(v)] < 0; }
};

// Full decode + evaluation.  Throws std::invalid_argument when the genotype
// breaks its invariants (wrong depot key, key out of range, duplicate keys).
RingSolution decode(const Genotype& g, const Instance& inst);

// Objectives of an explicit ring (depot first, no duplicates).  Assignment
// ties go to the smallest node index.
ObjectiveVector evaluate(std::span<const int> ring, const Instance& inst);

// Incremental moves; each returns the updated solution with objectives,
// assignments and genotype maintained, matching a full re-evaluation exactly.
//
// insert: v joins the ring at the position minimising the ring-cost increase
//         (earliest such position on ties); its key becomes the midpoint of
//         its neighbours' keys, with an even re-spacing of all keys when the
//         midpoint is not representable strictly between them.
// remove: v leaves the ring; v and its former assignees are re-assigned.
// two_opt: ring positions i..j (0-based, 1 <= i <= j < |ring|) are reversed;
//         keys are permuted so the genotype decodes to the new order; the
//         assignment cost is untouched.
RingSolution apply_insert(RingSolution s, int v, const Instance& inst);
RingSolution apply_remove(RingSolution s, int v, const Instance& inst);
RingSolution apply_two_opt(RingSolution s, int i, int j, const Instance& inst);

// Evenly spaced keys (position/|ring|) reproducing the given ring.
Genotype genotype_from_ring(std::span<const int> ring, int n);

// Each non-depot node visited with probability 1/2; keys drawn uniformly,
// redrawing on the (astronomically rare) exact collision.
Genotype random_genotype(const Instance& inst, Rng& rng);

struct FrontPoint {
  ObjectiveVector z;
  std::vector<int> ring;
};

// Exact Pareto front by exhaustive enumeration of visited subsets and ring
// orders (depot fixed, tour direction collapsed).  Guarded to n <= 10.
std::vector<FrontPoint> brute_force_front(const Instance& inst);

// Archive of potentially efficient solutions.
using Archive = ParetoSet<Genotype>;

}  // namespace rsp
