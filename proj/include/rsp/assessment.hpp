#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rsp/indicators.hpp"
#include "rsp/pareto.hpp"

namespace rsp {

// Pooled reference data for a set of runs on one instance: the combined
// non-dominated front, the componentwise worst point over every vector seen
// (not just the front), the hypervolume reference point at 1.05 * zmax, and
// the global normalization bounds.
struct ReferenceData {
  std::vector<ObjectiveVector> front;
  ObjectiveVector zmax;
  std::array<double, 2> ref_point;
  NormBounds bounds;
};

ReferenceData reference_set(std::span<const std::vector<ObjectiveVector>> fronts);

// Both quality scores of one approximation front, computed on globally
// normalized vectors: hypervolume deficit against the reference front and
// the unary additive epsilon indicator.  Lower is better for both.
struct RunScores {
  double hv_deficit = 0.0;
  double eps = 0.0;
};

RunScores score_front(std::span<const ObjectiveVector> front, const ReferenceData& ref);

// --- Mann-Whitney rank-sum test --------------------------------------------

enum class MwBranch { Exact, Normal };
enum class MwVerdict { ABetter, BBetter, NoDifference };

struct MwResult {
  double p_value = 1.0;  // min of the two one-sided p-values
  double p_a_better = 1.0;
  double p_b_better = 1.0;
  MwVerdict verdict = MwVerdict::NoDifference;
  MwBranch branch = MwBranch::Normal;
};

// One-sided tests in both directions, verdict at `alpha`.  Samples are
// indicator values, so lower means better by default.  The exact branch
// enumerates every rank assignment (combined size <= 12); larger samples use
// the normal approximation with tie correction and continuity correction.
MwResult mann_whitney(std::span<const double> a, std::span<const double> b, double alpha = 0.05,
                      bool lower_is_better = true);

// Branch forced, for cross-validation.
MwResult mann_whitney_branch(std::span<const double> a, std::span<const double> b, double alpha,
                             bool lower_is_better, MwBranch branch);

// --- attainment surfaces ----------------------------------------------------

// Corners of the staircase attained by at least ceil(level * #fronts) of the
// given fronts: for each observed f1 value, the smallest f2 such that enough
// fronts weakly dominate (f1, f2).  Abscissae not yet covered by enough
// fronts are omitted; runs of equal f2 are collapsed to their first corner.
std::vector<ObjectiveVector> attainment_surface(std::span<const std::vector<ObjectiveVector>> fronts,
                                                double level);

// --- scalarized probe -------------------------------------------------------

struct ScalarizedBest {
  std::int64_t value = 0;
  ObjectiveVector witness;
};

// min f1 + f2 over a front (intended for fronts built under the scalarized
// cost model); ties resolved toward the lexicographically smaller vector.
ScalarizedBest scalarize_front(std::span<const ObjectiveVector> front, int alpha);

}  // namespace rsp
