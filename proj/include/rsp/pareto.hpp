#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace rsp {

struct ObjectiveVector {
  std::int64_t f1 = 0;
  std::int64_t f2 = 0;

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

inline bool weakly_dominates(ObjectiveVector a, ObjectiveVector b) {
  return a.f1 <= b.f1 && a.f2 <= b.f2;
}

inline bool dominates(ObjectiveVector a, ObjectiveVector b) {
  return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

// Per-objective [min, max] box used for adaptive normalization.  Bounds are
// doubles so that real-valued points (e.g. hypervolume reference points) can
// share the same mapping as integer objective vectors.
struct NormBounds {
  double f1_min = 0, f1_max = 0;
  double f2_min = 0, f2_max = 0;

  static NormBounds over(std::span<const ObjectiveVector> zs) {
    NormBounds b;
    if (zs.empty()) return b;
    b.f1_min = b.f1_max = static_cast<double>(zs[0].f1);
    b.f2_min = b.f2_max = static_cast<double>(zs[0].f2);
    for (const auto& z : zs.subspan(1)) b.expand(z);
    return b;
  }

  void expand(ObjectiveVector z) {
    f1_min = std::min(f1_min, static_cast<double>(z.f1));
    f1_max = std::max(f1_max, static_cast<double>(z.f1));
    f2_min = std::min(f2_min, static_cast<double>(z.f2));
    f2_max = std::max(f2_max, static_cast<double>(z.f2));
  }

  bool contains(ObjectiveVector z) const {
    const double a = static_cast<double>(z.f1), b = static_cast<double>(z.f2);
    return a >= f1_min && a <= f1_max && b >= f2_min && b <= f2_max;
  }

  friend bool operator==(const NormBounds&, const NormBounds&) = default;
};

// Maps each objective onto [0, 1]; a degenerate objective (max == min)
// collapses to 0.
inline std::array<double, 2> normalize(std::array<double, 2> z, const NormBounds& b) {
  auto one = [](double v, double lo, double hi) { return hi > lo ? (v - lo) / (hi - lo) : 0.0; };
  return {one(z[0], b.f1_min, b.f1_max), one(z[1], b.f2_min, b.f2_max)};
}

inline std::array<double, 2> normalize(ObjectiveVector z, const NormBounds& b) {
  return normalize(std::array<double, 2>{static_cast<double>(z.f1), static_cast<double>(z.f2)}, b);
}

// Unbounded set of mutually non-dominated entries, sorted by ascending f1
// (hence strictly descending f2).  A candidate whose objective vector is
// already present is rejected: the first holder of a vector is kept.
template <class Payload>
class ParetoSet {
 public:
  struct Entry {
    ObjectiveVector z;
    Payload payload;
  };

  // Returns true iff the candidate entered the set (i.e. the set changed).
  bool insert(ObjectiveVector z, Payload payload) {
    auto lo = std::lower_bound(entries_.begin(), entries_.end(), z.f1,
                               [](const Entry& e, std::int64_t v) { return e.z.f1 < v; });
    if (lo != entries_.begin() && std::prev(lo)->z.f2 <= z.f2) return false;
    if (lo != entries_.end() && weakly_dominates(lo->z, z)) return false;
    auto hi = lo;
    while (hi != entries_.end() && hi->z.f2 >= z.f2) ++hi;
    if (lo != hi) {
      *lo = Entry{z, std::move(payload)};
      entries_.erase(lo + 1, hi);
    } else {
      entries_.insert(lo, Entry{z, std::move(payload)});
    }
    return true;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  void clear() { entries_.clear(); }

  std::vector<ObjectiveVector> vectors() const {
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.z);
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

// Non-dominated subset of arbitrary vectors, deduplicated, sorted by f1.
inline std::vector<ObjectiveVector> nondominated(std::span<const ObjectiveVector> zs) {
  ParetoSet<char> set;
  for (const auto& z : zs) set.insert(z, 0);
  return set.vectors();
}

}  // namespace rsp
