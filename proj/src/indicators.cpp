#include "rsp/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rsp {

FitnessContext FitnessContext::over(std::span<const ObjectiveVector> population, double kappa) {
  FitnessContext ctx;
  ctx.kappa = kappa;
  const NormBounds b = NormBounds::over(population);
  ctx.points.reserve(population.size());
  for (const auto& z : population) ctx.points.push_back(normalize(z, b));
  return ctx;
}

double indicator_fitness(const FitnessContext& ctx, std::size_t index) {
  double fit = 0.0;
  for (std::size_t j = 0; j < ctx.points.size(); ++j) {
    if (j == index) continue;
    fit -= std::exp(-eps_binary(ctx.points[j], ctx.points[index]) / ctx.kappa);
  }
  return fit;
}

std::vector<double> all_indicator_fitness(const FitnessContext& ctx) {
  std::vector<double> fits(ctx.points.size());
  for (std::size_t i = 0; i < fits.size(); ++i) fits[i] = indicator_fitness(ctx, i);
  return fits;
}

double eps_unary(std::span<const ObjectiveVector> approx,
                 std::span<const ObjectiveVector> reference, const NormBounds& bounds) {
  if (approx.empty() || reference.empty())
    throw std::invalid_argument("eps_unary: empty input set");
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& rz : reference) {
    const auto r = normalize(rz, bounds);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& az : approx) {
      best = std::min(best, eps_binary(normalize(az, bounds), r));
      if (best <= worst) break;  // cannot raise the outer max any more
    }
    worst = std::max(worst, best);
  }
  return worst;
}

double hypervolume_2d(std::span<const std::array<double, 2>> points, std::array<double, 2> ref) {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(points.size());
  for (const auto& p : points)
    if (p[0] <= ref[0] && p[1] <= ref[1]) pts.push_back(p);
  if (pts.empty()) return 0.0;
  std::sort(pts.begin(), pts.end());

  double area = 0.0;
  double prev_x = 0.0, prev_y = 0.0;
  bool have = false;
  for (const auto& p : pts) {
    if (have && p[1] >= prev_y) continue;  // dominated (or duplicate f1, larger f2)
    if (have) area += (p[0] - prev_x) * (ref[1] - prev_y);
    prev_x = p[0];
    prev_y = p[1];
    have = true;
  }
  area += (ref[0] - prev_x) * (ref[1] - prev_y);
  return area;
}

double hv_difference(std::span<const std::array<double, 2>> approx,
                     std::span<const std::array<double, 2>> reference,
                     std::array<double, 2> ref) {
  return hypervolume_2d(reference, ref) - hypervolume_2d(approx, ref);
}

double contribution(std::span<const ObjectiveVector> s1, std::span<const ObjectiveVector> s2) {
  if (s1.empty() || s2.empty()) throw std::invalid_argument("contribution: empty input set");

  auto ordered = [](std::span<const ObjectiveVector> s) {
    std::vector<ObjectiveVector> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(),
              [](ObjectiveVector a, ObjectiveVector b) { return a.f1 < b.f1 || (a.f1 == b.f1 && a.f2 < b.f2); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto v1 = ordered(s1);
  const auto v2 = ordered(s2);

  std::vector<ObjectiveVector> pooled = v1;
  pooled.insert(pooled.end(), v2.begin(), v2.end());
  const auto star = nondominated(pooled);

  auto member = [](const std::vector<ObjectiveVector>& v, ObjectiveVector z) {
    auto it = std::lower_bound(v.begin(), v.end(), z, [](ObjectiveVector a, ObjectiveVector b) {
      return a.f1 < b.f1 || (a.f1 == b.f1 && a.f2 < b.f2);
    });
    return it != v.end() && *it == z;
  };

  std::size_t only1 = 0, only2 = 0, shared = 0;
  for (const auto& z : star) {
    const bool in1 = member(v1, z);
    const bool in2 = member(v2, z);
    if (in1 && in2)
      ++shared;
    else if (in1)
      ++only1;
    else
      ++only2;
  }

  // The majority side's quotient lies in [0.5, 1], where 1 - q is exact, so
  // evaluating the minority side as the complement keeps
  // contribution(a, b) + contribution(b, a) == 1 to the last bit.
  const auto total = static_cast<double>(star.size());
  const double major =
      (static_cast<double>(std::max(only1, only2)) + 0.5 * static_cast<double>(shared)) / total;
  return only1 >= only2 ? major : 1.0 - major;
}

}  // namespace rsp
