#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rsp/solution.hpp"

namespace rsp {

// Variation operator probabilities and the mutation operator mix.
struct OperatorMix {
  double p_crossover = 0.25;  // per offspring pair
  double p_mutation = 1.0;    // per offspring
  double w_remove = 0.25;
  double w_insert = 0.25;
  double w_two_opt = 0.50;
};

// One-point crossover over node-index order: child 1 takes the keys of nodes
// 0..cut-1 from a and the rest from b, child 2 the converse.  Keys travel
// unchanged; when the halves collide on a key, the later-indexed node is
// nudged by the smallest representable step toward 1 (an even re-spacing of
// the child's keys if that would leave [0,1)).
std::pair<Genotype, Genotype> crossover_at(const Genotype& a, const Genotype& b, int cut);

// Cut position drawn uniformly from 1..n-1.
std::pair<Genotype, Genotype> crossover(const Genotype& a, const Genotype& b, Rng& rng);

// One mutation: an operator is drawn from the mix (subject to p_mutation) and
// applied to uniformly chosen eligible targets.  An operator with no eligible
// target falls through to a redraw among the applicable ones; a solution no
// operator applies to is returned unchanged.
RingSolution mutate(RingSolution s, const Instance& inst, const OperatorMix& mix, Rng& rng);
Genotype mutate(const Genotype& g, const Instance& inst, const OperatorMix& mix, Rng& rng);

struct Move {
  enum class Kind { Insert, Remove, TwoOpt };
  Kind kind;
  int a = 0;  // Insert/Remove: the node; TwoOpt: segment start position
  int b = 0;  // TwoOpt: segment end position (inclusive)
};

RingSolution apply_move(const RingSolution& s, const Move& m, const Instance& inst);

// Lazily yields every distinct insert, remove and two-opt neighbour of a
// solution exactly once, in a uniformly random order.  Two-opt moves are the
// reversals of segments lying strictly between two anchor nodes of the ring,
// C(|ring|-2, 2) of them.
class NeighborhoodStream {
 public:
  NeighborhoodStream(RingSolution base, const Instance& inst, Rng& rng);

  // Fills `out` with the next neighbour; false once exhausted.
  bool next(RingSolution& out, Move* move = nullptr);

  std::size_t total_moves() const { return moves_.size(); }

 private:
  RingSolution base_;
  const Instance* inst_;
  std::vector<Move> moves_;
  std::size_t cursor_ = 0;
};

}  // namespace rsp
