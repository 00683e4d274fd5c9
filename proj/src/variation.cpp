#include "rsp/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsp {

namespace {

// Strictly increasing keys in visited order; equal keys bump the later node
// by one ulp toward 1, falling back to an even re-spacing when a bump would
// leave [0, 1).
void resolve_key_collisions(Genotype& g) {
  std::vector<std::pair<double, int>> order;
  for (int v = 0; v < g.size(); ++v)
    if (g.visited(v)) order.emplace_back(g.keys[static_cast<std::size_t>(v)], v);
  std::sort(order.begin(), order.end());

  double prev = -1.0;
  bool overflow = false;
  for (auto& [key, v] : order) {
    if (key <= prev) {
      key = std::nextafter(prev, 1.0);
      if (key >= 1.0 || key <= prev) {
        overflow = true;
        break;
      }
      g.keys[static_cast<std::size_t>(v)] = key;
    }
    prev = key;
  }
  if (!overflow) return;

  const double k = static_cast<double>(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    g.keys[static_cast<std::size_t>(order[i].second)] = static_cast<double>(i) / k;
}

}  // namespace

std::pair<Genotype, Genotype> crossover_at(const Genotype& a, const Genotype& b, int cut) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover: genotype size mismatch");
  if (cut < 1 || cut >= a.size()) throw std::invalid_argument("crossover: cut out of range");

  Genotype c1 = a, c2 = b;
  for (int v = cut; v < a.size(); ++v) {
    c1.keys[static_cast<std::size_t>(v)] = b.keys[static_cast<std::size_t>(v)];
    c2.keys[static_cast<std::size_t>(v)] = a.keys[static_cast<std::size_t>(v)];
  }
  resolve_key_collisions(c1);
  resolve_key_collisions(c2);
  return {std::move(c1), std::move(c2)};
}

std::pair<Genotype, Genotype> crossover(const Genotype& a, const Genotype& b, Rng& rng) {
  const int cut = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(a.size() - 1)));
  return crossover_at(a, b, cut);
}

namespace {

// number of two-opt segment pairs [i..j] with 1 <= i < j <= k-2
std::size_t two_opt_move_count(std::size_t k) {
  if (k < 4) return 0;
  return (k - 2) * (k - 3) / 2;
}

std::pair<int, int> unrank_two_opt(std::size_t r, std::size_t k) {
  for (std::size_t i = 1; i + 1 <= k - 2; ++i) {
    const std::size_t with_this_i = (k - 2) - i;
    if (r < with_this_i) return {static_cast<int>(i), static_cast<int>(i + 1 + r)};
    r -= with_this_i;
  }
  throw std::logic_error("unrank_two_opt: rank out of range");
}

enum Op : std::size_t { OpRemove = 0, OpInsert = 1, OpTwoOpt = 2 };

}  // namespace

RingSolution mutate(RingSolution s, const Instance& inst, const OperatorMix& mix, Rng& rng) {
  if (!rng.chance(mix.p_mutation)) return s;

  const std::size_t k = s.ring.size();
  const bool can_remove = k >= 2;
  const bool can_insert = k < static_cast<std::size_t>(inst.n());
  const bool can_two_opt = two_opt_move_count(k) > 0;

  const double weights[3] = {mix.w_remove, mix.w_insert, mix.w_two_opt};
  const bool applicable[3] = {can_remove, can_insert, can_two_opt};

  std::size_t op = rng.weighted(weights);
  if (!applicable[op]) {
    double filtered[3] = {0.0, 0.0, 0.0};
    double total = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      if (applicable[i]) total += filtered[i] = weights[i];
    if (total <= 0.0) return s;  // nothing applies (single-node instance)
    op = rng.weighted(filtered);
  }

  switch (op) {
    case OpRemove: {
      const int v = s.ring[1 + rng.below(k - 1)];
      return apply_remove(std::move(s), v, inst);
    }
    case OpInsert: {
      std::vector<int> out;
      for (int v = 0; v < inst.n(); ++v)
        if (!s.visited(v)) out.push_back(v);
      const int v = out[rng.below(out.size())];
      return apply_insert(std::move(s), v, inst);
    }
    default: {
      const auto [i, j] = unrank_two_opt(rng.below(two_opt_move_count(k)), k);
      return apply_two_opt(std::move(s), i, j, inst);
    }
  }
}

Genotype mutate(const Genotype& g, const Instance& inst, const OperatorMix& mix, Rng& rng) {
  return mutate(decode(g, inst), inst, mix, rng).genotype;
}

RingSolution apply_move(const RingSolution& s, const Move& m, const Instance& inst) {
  switch (m.kind) {
    case Move::Kind::Insert:
      return apply_insert(s, m.a, inst);
    case Move::Kind::Remove:
      return apply_remove(s, m.a, inst);
    default:
      return apply_two_opt(s, m.a, m.b, inst);
  }
}

NeighborhoodStream::NeighborhoodStream(RingSolution base, const Instance& inst, Rng& rng)
    : base_(std::move(base)), inst_(&inst) {
  const std::size_t k = base_.ring.size();
  for (int v = 0; v < inst.n(); ++v)
    if (!base_.visited(v)) moves_.push_back({Move::Kind::Insert, v, 0});
  for (std::size_t pos = 1; pos < k; ++pos)
    moves_.push_back({Move::Kind::Remove, base_.ring[pos], 0});
  for (int i = 1; k >= 4 && i + 1 <= static_cast<int>(k) - 2; ++i)
    for (int j = i + 1; j <= static_cast<int>(k) - 2; ++j)
      moves_.push_back({Move::Kind::TwoOpt, i, j});
  rng.shuffle(moves_);
}

bool NeighborhoodStream::next(RingSolution& out, Move* move) {
  if (cursor_ >= moves_.size()) return false;
  const Move& m = moves_[cursor_++];
  if (move) *move = m;
  out = apply_move(base_, m, *inst_);
  return true;
}

}  // namespace rsp
