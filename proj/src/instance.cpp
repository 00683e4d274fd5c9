#include "rsp/instance.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

namespace rsp {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail_line(const std::string& what, int lineno, const std::string& line) {
  std::ostringstream os;
  os << "TSPLIB parse error: " << what << " (line " << lineno << ": \"" << trim(line) << "\")";
  throw TsplibError(os.str());
}

}  // namespace

CostModel CostModel::scalarized(int alpha) {
  if (alpha != 3 && alpha != 5 && alpha != 7 && alpha != 9)
    throw std::invalid_argument("scalarized cost model: alpha must be one of {3, 5, 7, 9}");
  CostModel m;
  m.kind = Kind::Scalarized;
  m.alpha = alpha;
  return m;
}

std::int32_t euclid_distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  // nint: halves round up (away from zero; distances are non-negative)
  return static_cast<std::int32_t>(std::floor(std::sqrt(dx * dx + dy * dy) + 0.5));
}

CostMatrices build_costs(std::span<const std::array<double, 2>> coords, const CostModel& model) {
  const std::size_t n = coords.size();
  CostMatrices m;
  m.ring.assign(n * n, 0);
  m.assign.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int32_t l = euclid_distance(coords[i], coords[j]);
      std::int32_t ring = l, assign = l;
      if (model.kind == CostModel::Kind::Scalarized) {
        // distances are integral, so the ceilings are plain products
        ring = model.alpha * l;
        assign = (10 - model.alpha) * l;
      }
      m.ring[i * n + j] = m.ring[j * n + i] = ring;
      m.assign[i * n + j] = m.assign[j * n + i] = assign;
    }
  }
  return m;
}

Instance::Instance(std::string name, std::vector<std::array<double, 2>> coords, CostModel model)
    : name_(std::move(name)), n_(static_cast<int>(coords.size())), coords_(std::move(coords)),
      model_(model) {
  if (n_ < 1) throw std::invalid_argument("instance needs at least one node");
  if (model_.kind == CostModel::Kind::Scalarized) model_ = CostModel::scalarized(model_.alpha);
  costs_ = build_costs(coords_, model_);
}

Instance parse_tsplib(std::istream& in, const CostModel& model) {
  std::string name = "unnamed";
  std::string edge_type;
  long dimension = -1;
  std::vector<std::array<double, 2>> coords;
  std::vector<char> filled;

  std::string line;
  int lineno = 0;
  bool saw_coords = false;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t == "EOF") break;

    const auto colon = t.find(':');
    const std::string key = trim(colon == std::string::npos ? t : t.substr(0, colon));
    const std::string value = colon == std::string::npos ? "" : trim(t.substr(colon + 1));

    if (key == "NAME") {
      if (!value.empty()) name = value;
    } else if (key == "TYPE") {
      // informational; symmetric instances only, which EUC_2D guarantees
    } else if (key == "DIMENSION") {
      char* end = nullptr;
      dimension = std::strtol(value.c_str(), &end, 10);
      if (end == value.c_str() || *end != '\0' || dimension < 1)
        fail_line("malformed DIMENSION", lineno, line);
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value != "EUC_2D") fail_line("unsupported edge weight type '" + value + "'", lineno, line);
      edge_type = value;
    } else if (key == "NODE_COORD_SECTION") {
      if (dimension < 1) fail_line("NODE_COORD_SECTION before DIMENSION", lineno, line);
      saw_coords = true;
      coords.assign(static_cast<std::size_t>(dimension), {0.0, 0.0});
      filled.assign(static_cast<std::size_t>(dimension), 0);
      long seen = 0;
      while (seen < dimension && std::getline(in, line)) {
        ++lineno;
        const std::string c = trim(line);
        if (c.empty()) continue;
        if (c == "EOF") {
          std::ostringstream os;
          os << "TSPLIB parse error: node count mismatch: DIMENSION is " << dimension << " but only "
             << seen << " coordinate lines found";
          throw TsplibError(os.str());
        }
        std::istringstream ls(c);
        long idx;
        double x, y;
        if (!(ls >> idx >> x >> y)) fail_line("malformed coordinate line", lineno, line);
        if (idx < 1 || idx > dimension) fail_line("node index out of range", lineno, line);
        if (filled[static_cast<std::size_t>(idx - 1)])
          fail_line("duplicate node index", lineno, line);
        filled[static_cast<std::size_t>(idx - 1)] = 1;
        coords[static_cast<std::size_t>(idx - 1)] = {x, y};
        ++seen;
      }
      if (seen < dimension) {
        std::ostringstream os;
        os << "TSPLIB parse error: node count mismatch: DIMENSION is " << dimension << " but only "
           << seen << " coordinate lines found";
        throw TsplibError(os.str());
      }
    } else {
      // COMMENT and friends: skipped
    }
  }

  if (dimension < 1) throw TsplibError("TSPLIB parse error: missing DIMENSION");
  if (edge_type.empty()) throw TsplibError("TSPLIB parse error: missing EDGE_WEIGHT_TYPE");
  if (!saw_coords) throw TsplibError("TSPLIB parse error: missing NODE_COORD_SECTION");

  return Instance(name, std::move(coords), model);
}

Instance load_tsplib(const std::string& path, const CostModel& model) {
  std::ifstream in(path);
  if (!in) throw TsplibError("cannot open instance file: " + path);
  Instance inst = parse_tsplib(in, model);
  if (inst.name() != "unnamed") return inst;
  const std::string stem = std::filesystem::path(path).stem().string();
  if (stem.empty()) return inst;
  return Instance(stem, inst.coords(), model);
}

}  // namespace rsp
