#pragma once

#include <array>
#include <span>
#include <vector>

#include "rsp/pareto.hpp"

namespace rsp {

// Binary additive epsilon indicator between two points in normalized space:
// the smallest eps by which b must be translated so that a weakly dominates
// it, i.e. max_i (a_i - b_i).
inline double eps_binary(std::array<double, 2> a, std::array<double, 2> b) {
  const double d1 = a[0] - b[0];
  const double d2 = a[1] - b[1];
  return d1 > d2 ? d1 : d2;
}

// Population fitness used for indicator-based selection: each rival x* adds
// -exp(-eps(x*, x) / kappa), so higher fitness is better and dominating
// members outrank dominated ones.
struct FitnessContext {
  std::vector<std::array<double, 2>> points;  // normalized population
  double kappa = 0.05;

  static FitnessContext over(std::span<const ObjectiveVector> population, double kappa);
};

double indicator_fitness(const FitnessContext& ctx, std::size_t index);
std::vector<double> all_indicator_fitness(const FitnessContext& ctx);

// Unary additive epsilon indicator of an approximation set against a
// reference set (both normalized with the given bounds): the smallest eps
// such that every reference point is weakly dominated by some translated
// member of the approximation.
double eps_unary(std::span<const ObjectiveVector> approx,
                 std::span<const ObjectiveVector> reference, const NormBounds& bounds);

// 2-D hypervolume (sort-and-sweep).  Points not weakly dominating the
// reference point contribute nothing; of points sharing an f1 only the
// smaller f2 counts.
double hypervolume_2d(std::span<const std::array<double, 2>> points, std::array<double, 2> ref);

// Hypervolume deficit of `approx` against a reference front (>= 0 whenever
// reference covers approx).
double hv_difference(std::span<const std::array<double, 2>> approx,
                     std::span<const std::array<double, 2>> reference,
                     std::array<double, 2> ref);

// Fraction of the combined non-dominated front contributed by s1; shared
// vectors (exact integer equality) count half toward each side.
// contribution(S, S) = 0.5 and contribution(S1, S2) + contribution(S2, S1) = 1.
double contribution(std::span<const ObjectiveVector> s1, std::span<const ObjectiveVector> s2);

}  // namespace rsp
