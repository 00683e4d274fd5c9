#include "rsp/run_record.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace rsp {

namespace {

std::string mode_name(Budget::Mode m) {
  return m == Budget::Mode::Evaluations ? "evaluations" : "wall_clock";
}

Budget budget_from_json(const nlohmann::json& j) {
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "evaluations") return Budget::evals(j.at("amount").get<std::uint64_t>());
  if (mode == "wall_clock") return Budget::wall_clock(j.at("amount").get<double>());
  throw std::invalid_argument("run record: unknown budget mode \"" + mode + "\"");
}

nlohmann::json keys_to_json(const Genotype& g) {
  nlohmann::json keys = nlohmann::json::array();
  for (double k : g.keys) {
    if (k == Genotype::unvisited_key)
      keys.push_back(nullptr);
    else
      keys.push_back(k);
  }
  return keys;
}

Genotype keys_from_json(const nlohmann::json& keys) {
  if (!keys.is_array() || keys.empty())
    throw std::invalid_argument("run record: front entry keys must be a non-empty array");
  Genotype g(static_cast<int>(keys.size()));
  for (std::size_t i = 0; i < keys.size(); ++i)
    g.keys[i] = keys[i].is_null() ? Genotype::unvisited_key : keys[i].get<double>();
  return g;
}

}  // namespace

std::string RunRecord::run_id() const {
  return instance + "_" + algorithm + "_s" + std::to_string(seed);
}

std::vector<ObjectiveVector> RunRecord::front_vectors() const {
  std::vector<ObjectiveVector> v;
  v.reserve(front.size());
  for (const auto& e : front) v.push_back(e.z);
  return v;
}

RunRecord make_record(const Instance& inst, const RunResult& result) {
  RunRecord r;
  r.instance = inst.name();
  r.cost_model = inst.model();
  r.algorithm = std::string(algorithm_name(result.algorithm));
  r.seed = result.seed;
  r.config = result.config;
  r.budget = result.budget;
  r.evaluations = result.evaluations;
  r.elapsed_seconds = result.elapsed_seconds;
  r.launches_ls = result.launches_ls;
  for (const auto& e : result.archive.entries()) r.front.push_back({e.z, e.payload});
  return r;
}

nlohmann::json to_json(const RunRecord& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["algorithm"] = r.algorithm;
  j["seed"] = r.seed;

  nlohmann::json cfg;
  cfg["cost_model"] = r.cost_model.kind == CostModel::Kind::Plain ? "plain" : "scalarized";
  if (r.cost_model.kind == CostModel::Kind::Scalarized) cfg["alpha"] = r.cost_model.alpha;
  cfg["population_size"] = r.config.population_size;
  cfg["noise_rate"] = r.config.noise_rate;
  cfg["kappa"] = r.config.kappa;
  cfg["p_crossover"] = r.config.mix.p_crossover;
  cfg["p_mutation"] = r.config.mix.p_mutation;
  cfg["w_remove"] = r.config.mix.w_remove;
  cfg["w_insert"] = r.config.mix.w_insert;
  cfg["w_two_opt"] = r.config.mix.w_two_opt;
  cfg["step_fraction"] = r.config.step_fraction;
  cfg["delta"] = r.config.delta;
  cfg["ls_population"] = r.config.ls_population;
  j["config"] = std::move(cfg);

  j["budget"]["mode"] = mode_name(r.budget.mode);
  if (r.budget.mode == Budget::Mode::Evaluations)
    j["budget"]["amount"] = r.budget.evaluations;
  else
    j["budget"]["amount"] = r.budget.seconds;

  j["evaluations"] = r.evaluations;
  j["elapsed_seconds"] = r.elapsed_seconds;
  if (r.launches_ls >= 0) j["launches_ls"] = r.launches_ls;

  nlohmann::json front = nlohmann::json::array();
  for (const auto& e : r.front) {
    nlohmann::json p;
    p["f1"] = e.z.f1;
    p["f2"] = e.z.f2;
    p["keys"] = keys_to_json(e.genotype);
    front.push_back(std::move(p));
  }
  j["front"] = std::move(front);
  return j;
}

RunRecord record_from_json(const nlohmann::json& j) {
  RunRecord r;
  r.instance = j.at("instance").get<std::string>();
  r.algorithm = j.at("algorithm").get<std::string>();
  if (!algorithm_from_name(r.algorithm))
    throw std::invalid_argument("run record: unknown algorithm \"" + r.algorithm + "\"");
  r.seed = j.at("seed").get<std::uint64_t>();

  const auto& cfg = j.at("config");
  const std::string model = cfg.at("cost_model").get<std::string>();
  if (model == "plain") {
    r.cost_model = CostModel::plain();
  } else if (model == "scalarized") {
    r.cost_model = CostModel::scalarized(cfg.at("alpha").get<int>());
  } else {
    throw std::invalid_argument("run record: unknown cost model \"" + model + "\"");
  }
  r.config.population_size = cfg.at("population_size").get<int>();
  r.config.noise_rate = cfg.at("noise_rate").get<double>();
  r.config.kappa = cfg.at("kappa").get<double>();
  r.config.mix.p_crossover = cfg.at("p_crossover").get<double>();
  r.config.mix.p_mutation = cfg.at("p_mutation").get<double>();
  r.config.mix.w_remove = cfg.at("w_remove").get<double>();
  r.config.mix.w_insert = cfg.at("w_insert").get<double>();
  r.config.mix.w_two_opt = cfg.at("w_two_opt").get<double>();
  r.config.step_fraction = cfg.at("step_fraction").get<double>();
  r.config.delta = cfg.at("delta").get<double>();
  r.config.ls_population = cfg.at("ls_population").get<int>();

  r.budget = budget_from_json(j.at("budget"));
  r.evaluations = j.at("evaluations").get<std::uint64_t>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  r.launches_ls = j.value("launches_ls", -1);

  for (const auto& p : j.at("front")) {
    RunRecord::FrontEntry e;
    e.z.f1 = p.at("f1").get<std::int64_t>();
    e.z.f2 = p.at("f2").get<std::int64_t>();
    e.genotype = keys_from_json(p.at("keys"));
    r.front.push_back(std::move(e));
  }
  for (std::size_t i = 1; i < r.front.size(); ++i) {
    const auto prev = r.front[i - 1].z;
    const auto cur = r.front[i].z;
    if (!(prev.f1 < cur.f1 && prev.f2 > cur.f2))
      throw std::invalid_argument(
          "run record: front must be strictly increasing in f1 and strictly decreasing in f2");
  }
  return r;
}

RunRecord load_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open run record: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse run record " + path.string() + ": " + e.what());
  }
  try {
    return record_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed run record " + path.string() + ": " + e.what());
  }
}

std::string front_section_text(const RunRecord& r) {
  return to_json(r).at("front").dump();
}

void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                             ec.message());
  }
}

}  // namespace rsp
