#include "rsp/assessment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace rsp {

ReferenceData reference_set(std::span<const std::vector<ObjectiveVector>> fronts) {
  std::vector<ObjectiveVector> all;
  for (const auto& f : fronts) all.insert(all.end(), f.begin(), f.end());
  if (all.empty()) throw std::invalid_argument("reference_set: no objective vectors");

  ReferenceData ref;
  ref.front = nondominated(all);
  ref.zmax = all.front();
  for (const auto& z : all) {
    ref.zmax.f1 = std::max(ref.zmax.f1, z.f1);
    ref.zmax.f2 = std::max(ref.zmax.f2, z.f2);
  }
  ref.ref_point = {1.05 * static_cast<double>(ref.zmax.f1),
                   1.05 * static_cast<double>(ref.zmax.f2)};
  ref.bounds = NormBounds::over(all);
  return ref;
}

RunScores score_front(std::span<const ObjectiveVector> front, const ReferenceData& ref) {
  if (front.empty()) throw std::invalid_argument("score_front: empty front");
  const auto norm_ref_point = normalize(ref.ref_point, ref.bounds);
  std::vector<std::array<double, 2>> approx;
  approx.reserve(front.size());
  for (const auto& z : front) approx.push_back(normalize(z, ref.bounds));
  std::vector<std::array<double, 2>> reference;
  reference.reserve(ref.front.size());
  for (const auto& z : ref.front) reference.push_back(normalize(z, ref.bounds));

  RunScores s;
  s.hv_deficit = hv_difference(approx, reference, norm_ref_point);
  s.eps = eps_unary(front, ref.front, ref.bounds);
  return s;
}

// --- Mann-Whitney rank-sum test ---------------------------------------------

namespace {

// midranks of the pooled sample, first n entries belong to sample a
std::vector<double> midranks(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size() + b.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto value = [&](std::size_t i) { return i < a.size() ? a[i] : b[i - a.size()]; };
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return value(x) < value(y); });

  std::vector<double> rank(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && value(order[j + 1]) == value(order[i])) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;  // ranks are 1-based
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mid;
    i = j + 1;
  }
  return rank;
}

double rank_sum_a(std::span<const double> a, std::span<const double> b) {
  const auto rank = midranks(a, b);
  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) w += rank[i];
  return w;
}

// Exact null distribution of the sample-a rank sum, by enumerating every
// n-subset of the pooled midranks.  Ties are handled naturally because the
// enumeration runs over the observed midranks themselves.
void enumerate_rank_sums(const std::vector<double>& ranks, std::size_t n, std::size_t start,
                         double sum, double observed, std::uint64_t& total, std::uint64_t& leq,
                         std::uint64_t& geq) {
  if (n == 0) {
    ++total;
    constexpr double kSlack = 1e-9;  // midrank sums are multiples of 0.5
    if (sum <= observed + kSlack) ++leq;
    if (sum >= observed - kSlack) ++geq;
    return;
  }
  if (ranks.size() - start < n) return;
  for (std::size_t i = start; i + n <= ranks.size(); ++i)
    enumerate_rank_sums(ranks, n - 1, i + 1, sum + ranks[i], observed, total, leq, geq);
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

MwResult mann_whitney_branch(std::span<const double> a, std::span<const double> b, double alpha,
                             bool lower_is_better, MwBranch branch) {
  if (a.empty() || b.empty()) throw std::invalid_argument("mann_whitney: empty sample");
  const double n = static_cast<double>(a.size());
  const double m = static_cast<double>(b.size());
  const double w = rank_sum_a(a, b);

  MwResult r;
  r.branch = branch;
  double p_low = 0.0;   // P(W <= w): sample a ranks low
  double p_high = 0.0;  // P(W >= w)
  if (branch == MwBranch::Exact) {
    const auto rank = midranks(a, b);
    std::vector<double> pooled(rank.begin(), rank.end());
    std::sort(pooled.begin(), pooled.end());
    std::uint64_t total = 0, leq = 0, geq = 0;
    enumerate_rank_sums(pooled, a.size(), 0, 0.0, w, total, leq, geq);
    p_low = static_cast<double>(leq) / static_cast<double>(total);
    p_high = static_cast<double>(geq) / static_cast<double>(total);
  } else {
    const double big_n = n + m;
    const double mean = n * (big_n + 1.0) / 2.0;
    // tie correction over the pooled value multiplicities
    std::map<double, double> mult;
    for (double v : a) mult[v] += 1.0;
    for (double v : b) mult[v] += 1.0;
    double tie = 0.0;
    for (const auto& [value, t] : mult) tie += t * t * t - t;
    const double var =
        n * m / 12.0 * ((big_n + 1.0) - tie / (big_n * (big_n - 1.0)));
    if (var <= 0.0) {  // every pooled value identical
      p_low = p_high = 1.0;
    } else {
      const double sd = std::sqrt(var);
      p_low = normal_cdf((w - mean + 0.5) / sd);
      p_high = 1.0 - normal_cdf((w - mean - 0.5) / sd);
    }
  }

  // Low ranks of sample a mean small values; with lower-is-better semantics
  // that is evidence for a.
  r.p_a_better = lower_is_better ? p_low : p_high;
  r.p_b_better = lower_is_better ? p_high : p_low;
  r.p_value = std::min(r.p_a_better, r.p_b_better);
  if (r.p_a_better <= alpha && r.p_a_better < r.p_b_better)
    r.verdict = MwVerdict::ABetter;
  else if (r.p_b_better <= alpha && r.p_b_better < r.p_a_better)
    r.verdict = MwVerdict::BBetter;
  else
    r.verdict = MwVerdict::NoDifference;
  return r;
}

MwResult mann_whitney(std::span<const double> a, std::span<const double> b, double alpha,
                      bool lower_is_better) {
  const MwBranch branch = a.size() + b.size() <= 12 ? MwBranch::Exact : MwBranch::Normal;
  return mann_whitney_branch(a, b, alpha, lower_is_better, branch);
}

// --- attainment surfaces ----------------------------------------------------

std::vector<ObjectiveVector> attainment_surface(
    std::span<const std::vector<ObjectiveVector>> fronts, double level) {
  if (fronts.empty()) throw std::invalid_argument("attainment_surface: no fronts");
  if (!(level > 0.0 && level <= 1.0))
    throw std::invalid_argument("attainment_surface: level must be in (0, 1]");
  const auto needed = static_cast<std::size_t>(
      std::ceil(level * static_cast<double>(fronts.size()) - 1e-9));
  const std::size_t k = std::max<std::size_t>(1, needed);

  std::vector<std::int64_t> grid;
  for (const auto& f : fronts)
    for (const auto& z : f) grid.push_back(z.f1);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<ObjectiveVector> surface;
  std::int64_t last_f2 = std::numeric_limits<std::int64_t>::min();
  for (std::int64_t x : grid) {
    // best f2 each front attains at ring cost <= x; k-th smallest over fronts
    std::vector<std::int64_t> best;
    for (const auto& f : fronts) {
      std::int64_t b = std::numeric_limits<std::int64_t>::max();
      for (const auto& z : f)
        if (z.f1 <= x) b = std::min(b, z.f2);
      if (b != std::numeric_limits<std::int64_t>::max()) best.push_back(b);
    }
    if (best.size() < k) continue;  // not enough fronts reach this far yet
    std::nth_element(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(k - 1), best.end());
    const std::int64_t y = best[k - 1];
    if (!surface.empty() && y == last_f2) continue;  // same step, keep first corner
    surface.push_back({x, y});
    last_f2 = y;
  }
  return surface;
}

// --- scalarized probe -------------------------------------------------------

ScalarizedBest scalarize_front(std::span<const ObjectiveVector> front, int alpha) {
  if (alpha != 3 && alpha != 5 && alpha != 7 && alpha != 9)
    throw std::invalid_argument("scalarize_front: alpha must be one of 3, 5, 7, 9");
  if (front.empty()) throw std::invalid_argument("scalarize_front: empty front");
  ScalarizedBest best;
  best.value = std::numeric_limits<std::int64_t>::max();
  for (const auto& z : front) {
    const std::int64_t v = z.f1 + z.f2;
    const bool better =
        v < best.value || (v == best.value && (z.f1 < best.witness.f1 ||
                                               (z.f1 == best.witness.f1 && z.f2 < best.witness.f2)));
    if (better) {
      best.value = v;
      best.witness = z;
    }
  }
  return best;
}

}  // namespace rsp
