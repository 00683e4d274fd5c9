#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsp/algorithms.hpp"
#include "rsp/instance.hpp"

namespace rsp {

// Serializable result of one run.  The front carries both objectives and the
// genotypes (unvisited nodes serialize as null keys), so any front point can
// be re-decoded later.
struct RunRecord {
  std::string instance;
  CostModel cost_model;
  std::string algorithm;
  std::uint64_t seed = 0;
  AlgoConfig config;
  Budget budget;
  std::uint64_t evaluations = 0;
  double elapsed_seconds = 0.0;
  int launches_ls = -1;

  struct FrontEntry {
    ObjectiveVector z;
    Genotype genotype;
  };
  std::vector<FrontEntry> front;  // sorted by ascending f1

  std::string run_id() const;
  std::vector<ObjectiveVector> front_vectors() const;
};

RunRecord make_record(const Instance& inst, const RunResult& result);

nlohmann::json to_json(const RunRecord& r);
RunRecord record_from_json(const nlohmann::json& j);

RunRecord load_record(const std::filesystem::path& path);

// The serialized `front` array alone; identical specs must reproduce this
// byte for byte.
std::string front_section_text(const RunRecord& r);

// Writes via a sibling temp file + rename so readers never observe a partial
// file.
void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace rsp
