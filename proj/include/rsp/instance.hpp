#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsp {

struct TsplibError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cost model derived from the raw inter-node distances l_ij.
//
//   plain       ring c_ij = assignment d_ij = l_ij
//   scalarized  c_ij = ceil(alpha * l_ij), d_ij = ceil((10 - alpha) * l_ij)
//
// The scalarized model trades the two objectives against each other and is
// used to probe single-objective behaviour of bi-objective fronts.
struct CostModel {
  enum class Kind { Plain, Scalarized };
  Kind kind = Kind::Plain;
  int alpha = 0;  // meaningful for Scalarized only

  static CostModel plain() { return {}; }
  static CostModel scalarized(int alpha);

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

struct CostMatrices {
  std::vector<std::int32_t> ring;    // c_ij, row-major n*n
  std::vector<std::int32_t> assign;  // d_ij, row-major n*n
};

// A problem instance: node 0 is the depot, costs are symmetric integers with
// zero diagonal.  Matrices are precomputed once at construction.
class Instance {
 public:
  static constexpr int depot = 0;

  Instance() = default;
  Instance(std::string name, std::vector<std::array<double, 2>> coords, CostModel model);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  const std::vector<std::array<double, 2>>& coords() const { return coords_; }
  const CostModel& model() const { return model_; }

  std::int32_t ring_cost(int i, int j) const { return costs_.ring[idx(i, j)]; }
  std::int32_t assign_cost(int i, int j) const { return costs_.assign[idx(i, j)]; }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  std::string name_;
  int n_ = 0;
  std::vector<std::array<double, 2>> coords_;
  CostModel model_;
  CostMatrices costs_;
};

// Rounded euclidean distance: nint(sqrt(dx^2 + dy^2)), halves away from zero.
std::int32_t euclid_distance(const std::array<double, 2>& a, const std::array<double, 2>& b);

CostMatrices build_costs(std::span<const std::array<double, 2>> coords, const CostModel& model);

// Minimal TSPLIB reader: NAME, TYPE, DIMENSION, EDGE_WEIGHT_TYPE,
// NODE_COORD_SECTION, EOF.  Only EDGE_WEIGHT_TYPE EUC_2D is accepted;
// unrecognised specification keys are skipped.
Instance parse_tsplib(std::istream& in, const CostModel& model = CostModel::plain());
Instance load_tsplib(const std::string& path, const CostModel& model = CostModel::plain());

}  // namespace rsp
