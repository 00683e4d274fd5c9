// Command-line front end: solve instances, build pooled references, score and
// compare run sets, trace attainment surfaces, and dump exact small-instance
// fronts.  Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsp/assessment.hpp"
#include "rsp/defaults.hpp"
#include "rsp/run_record.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Post-parse problems with flag values; mapped to exit code 2 like CLI11's
// own parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

template <typename Int>
Int parse_int(std::string_view text, const std::string& what) {
  Int value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last)
    throw UsageError("cannot parse " + what + " from \"" + std::string(text) + "\"");
  return value;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_int<std::uint64_t>(text.substr(0, dots), "seed range start");
    const auto hi = parse_int<std::uint64_t>(text.substr(dots + 2), "seed range end");
    if (hi < lo) throw UsageError("seed range \"" + text + "\" is empty");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = std::min(text.find(',', pos), text.size());
      seeds.push_back(parse_int<std::uint64_t>(
          std::string_view(text).substr(pos, comma - pos), "seed"));
      pos = comma + 1;
    }
  }
  auto sorted = seeds;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw UsageError("seeds must be distinct: \"" + text + "\"");
  return seeds;
}

rsp::Budget parse_budget(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("budget must look like evals:<count> or seconds:<time>, got \"" + text + "\"");
  const std::string kind = text.substr(0, colon);
  const std::string amount = text.substr(colon + 1);
  if (kind == "evals") {
    const auto n = parse_int<std::uint64_t>(amount, "evaluation budget");
    if (n == 0) throw UsageError("evaluation budget must be positive");
    return rsp::Budget::evals(n);
  }
  if (kind == "seconds") {
    double s = 0.0;
    const auto res = std::from_chars(amount.data(), amount.data() + amount.size(), s);
    if (res.ec != std::errc() || res.ptr != amount.data() + amount.size() || !(s > 0.0))
      throw UsageError("wall-clock budget must be a positive number of seconds, got \"" + amount +
                       "\"");
    return rsp::Budget::wall_clock(s);
  }
  throw UsageError("unknown budget mode \"" + kind + "\" (use evals: or seconds:)");
}

int thread_count() {
  const char* env = std::getenv("RSP_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const int n = parse_int<int>(env, "RSP_THREADS");
  if (n < 1) throw UsageError("RSP_THREADS must be at least 1");
  return n;
}

rsp::CostModel make_cost_model(const std::string& kind, std::optional<int> alpha) {
  if (kind == "plain") {
    if (alpha) throw UsageError("--alpha only applies to the scalarized cost model");
    return rsp::CostModel::plain();
  }
  if (!alpha) throw UsageError("the scalarized cost model requires --alpha (3, 5, 7 or 9)");
  if (*alpha != 3 && *alpha != 5 && *alpha != 7 && *alpha != 9)
    throw UsageError("--alpha must be one of 3, 5, 7, 9");
  return rsp::CostModel::scalarized(*alpha);
}

std::string cost_model_name(const rsp::CostModel& m) {
  return m.kind == rsp::CostModel::Kind::Plain ? "plain" : "scalarized";
}

void write_text_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                             ec.message());
  }
}

// --- run-record loading with cross-file validation --------------------------

std::vector<rsp::RunRecord> load_records(const std::vector<std::string>& paths) {
  if (paths.empty()) throw std::runtime_error("no run records given");
  std::vector<rsp::RunRecord> records;
  records.reserve(paths.size());
  for (const auto& p : paths) records.push_back(rsp::load_record(p));
  for (const auto& r : records) {
    if (r.instance != records.front().instance)
      throw std::runtime_error("run records mix instances \"" + records.front().instance +
                               "\" and \"" + r.instance + "\"");
    if (!(r.cost_model == records.front().cost_model))
      throw std::runtime_error("run records mix cost models for instance \"" + r.instance + "\"");
  }
  return records;
}

std::vector<std::string> json_files_in(const std::string& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .json run records in " + dir);
  return files;
}

json front_to_json(std::span<const rsp::ObjectiveVector> front) {
  json arr = json::array();
  for (const auto& z : front) arr.push_back({{"f1", z.f1}, {"f2", z.f2}});
  return arr;
}

std::vector<rsp::ObjectiveVector> front_from_json(const json& arr) {
  std::vector<rsp::ObjectiveVector> front;
  for (const auto& p : arr)
    front.push_back({p.at("f1").get<std::int64_t>(), p.at("f2").get<std::int64_t>()});
  return front;
}

struct StoredReference {
  std::string instance;
  rsp::CostModel cost_model;
  rsp::ReferenceData data;
};

StoredReference load_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("cannot parse reference " + path + ": " + e.what());
  }
  try {
    StoredReference ref;
    ref.instance = j.at("instance").get<std::string>();
    const std::string model = j.at("cost_model").get<std::string>();
    ref.cost_model = model == "plain" ? rsp::CostModel::plain()
                                      : rsp::CostModel::scalarized(j.at("alpha").get<int>());
    ref.data.front = front_from_json(j.at("front"));
    if (ref.data.front.empty()) throw std::runtime_error("reference front is empty: " + path);
    ref.data.zmax = {j.at("zmax").at("f1").get<std::int64_t>(),
                     j.at("zmax").at("f2").get<std::int64_t>()};
    ref.data.ref_point = {1.05 * static_cast<double>(ref.data.zmax.f1),
                          1.05 * static_cast<double>(ref.data.zmax.f2)};
    const auto& b = j.at("bounds");
    ref.data.bounds.f1_min = b.at("f1_min").get<double>();
    ref.data.bounds.f1_max = b.at("f1_max").get<double>();
    ref.data.bounds.f2_min = b.at("f2_min").get<double>();
    ref.data.bounds.f2_max = b.at("f2_max").get<double>();
    return ref;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed reference " + path + ": " + e.what());
  }
}

// --- subcommand runners ------------------------------------------------------

struct SolveArgs {
  std::string instance_path;
  std::string algo;
  std::string budget;
  std::string seeds = "1";
  std::string out_dir = ".";
  std::string cost_model = "plain";
  std::optional<int> alpha;
  std::optional<int> population;
  std::optional<double> noise_rate;
  std::optional<double> kappa;
  std::optional<double> p_crossover;
  std::optional<double> p_mutation;
  std::optional<double> w_remove;
  std::optional<double> w_insert;
  std::optional<double> w_two_opt;
  std::optional<double> step_fraction;
  std::optional<double> delta;
  std::optional<int> ls_population;
};

void run_solve(const SolveArgs& args) {
  const rsp::CostModel model = make_cost_model(args.cost_model, args.alpha);
  const rsp::Instance inst = rsp::load_tsplib(args.instance_path, model);
  const auto algo = rsp::algorithm_from_name(args.algo);
  if (!algo) throw UsageError("unknown algorithm \"" + args.algo + "\"");

  rsp::AlgoConfig cfg = rsp::default_config(*algo, inst.name(), inst.n());
  if (args.population) cfg.population_size = *args.population;
  if (args.noise_rate) cfg.noise_rate = *args.noise_rate;
  if (args.kappa) cfg.kappa = *args.kappa;
  if (args.p_crossover) cfg.mix.p_crossover = *args.p_crossover;
  if (args.p_mutation) cfg.mix.p_mutation = *args.p_mutation;
  if (args.w_remove) cfg.mix.w_remove = *args.w_remove;
  if (args.w_insert) cfg.mix.w_insert = *args.w_insert;
  if (args.w_two_opt) cfg.mix.w_two_opt = *args.w_two_opt;
  if (args.step_fraction) cfg.step_fraction = *args.step_fraction;
  if (args.delta) cfg.delta = *args.delta;
  if (args.ls_population) cfg.ls_population = *args.ls_population;

  rsp::Budget budget;
  if (!args.budget.empty()) {
    budget = parse_budget(args.budget);
  } else if (const auto def = rsp::default_budget(inst.name())) {
    budget = *def;
  } else {
    throw UsageError("no default budget known for instance \"" + inst.name() +
                     "\"; pass --budget evals:<count> or seconds:<time>");
  }

  const auto seeds = parse_seeds(args.seeds);
  fs::create_directories(args.out_dir);

  const int threads = std::min<int>(thread_count(), static_cast<int>(seeds.size()));
  std::vector<std::string> lines(seeds.size());
  std::atomic<std::size_t> cursor{0};
  std::mutex error_mutex;
  std::string first_error;

  auto worker = [&]() {
    for (std::size_t i = cursor.fetch_add(1); i < seeds.size(); i = cursor.fetch_add(1)) {
      try {
        const rsp::RunResult result = rsp::run_algorithm(*algo, inst, cfg, budget, seeds[i]);
        const rsp::RunRecord record = rsp::make_record(inst, result);
        const fs::path out = fs::path(args.out_dir) / (record.run_id() + ".json");
        rsp::write_json_atomic(out, rsp::to_json(record));
        lines[i] = out.string() + ": front " + std::to_string(record.front.size()) + ", " +
                   std::to_string(record.evaluations) + " evaluations, " +
                   fmt(record.elapsed_seconds) + "s";
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!first_error.empty()) throw std::runtime_error(first_error);
  for (const auto& line : lines) std::cout << line << '\n';
}

void run_reference(const std::vector<std::string>& inputs, const std::string& out) {
  const auto records = load_records(inputs);
  std::vector<std::vector<rsp::ObjectiveVector>> fronts;
  fronts.reserve(records.size());
  for (const auto& r : records) fronts.push_back(r.front_vectors());
  const rsp::ReferenceData ref = rsp::reference_set(fronts);

  json j;
  j["instance"] = records.front().instance;
  j["cost_model"] = cost_model_name(records.front().cost_model);
  if (records.front().cost_model.kind == rsp::CostModel::Kind::Scalarized)
    j["alpha"] = records.front().cost_model.alpha;
  j["front"] = front_to_json(ref.front);
  j["zmax"] = {{"f1", ref.zmax.f1}, {"f2", ref.zmax.f2}};
  j["bounds"] = {{"f1_min", ref.bounds.f1_min},
                 {"f1_max", ref.bounds.f1_max},
                 {"f2_min", ref.bounds.f2_min},
                 {"f2_max", ref.bounds.f2_max}};
  rsp::write_json_atomic(out, j);
  std::cout << out << ": " << ref.front.size() << " reference points from " << records.size()
            << " runs\n";
}

void check_reference_match(const StoredReference& ref, const rsp::RunRecord& record) {
  if (record.instance != ref.instance)
    throw std::runtime_error("run " + record.run_id() + " is for instance \"" + record.instance +
                             "\" but the reference is for \"" + ref.instance + "\"");
  if (!(record.cost_model == ref.cost_model))
    throw std::runtime_error("run " + record.run_id() +
                             " uses a different cost model than the reference");
}

void run_assess(const std::vector<std::string>& inputs, const std::string& reference_path,
                const std::string& out) {
  const StoredReference ref = load_reference(reference_path);
  const auto records = load_records(inputs);
  std::string csv = "run_id,algorithm,seed,i_h_minus,i_eps_plus\n";
  for (const auto& r : records) {
    check_reference_match(ref, r);
    const auto front = r.front_vectors();
    const rsp::RunScores s = rsp::score_front(front, ref.data);
    csv += r.run_id() + "," + r.algorithm + "," + std::to_string(r.seed) + "," + fmt(s.hv_deficit) +
           "," + fmt(s.eps) + "\n";
  }
  write_text_atomic(out, csv);
  std::cout << out << ": " << records.size() << " runs scored\n";
}

std::string verdict_name(rsp::MwVerdict v) {
  switch (v) {
    case rsp::MwVerdict::ABetter: return "a_better";
    case rsp::MwVerdict::BBetter: return "b_better";
    case rsp::MwVerdict::NoDifference: return "no_difference";
  }
  return "no_difference";
}

void run_compare(const std::string& dir_a, const std::string& dir_b, const std::string& metric,
                 double significance, const std::string& out) {
  if (metric != "hv" && metric != "eps" && metric != "both")
    throw UsageError("--metric must be hv, eps or both");
  const auto records_a = load_records(json_files_in(dir_a));
  const auto records_b = load_records(json_files_in(dir_b));
  if (records_a.front().instance != records_b.front().instance ||
      !(records_a.front().cost_model == records_b.front().cost_model))
    throw std::runtime_error("the two run sets target different instances or cost models");
  for (const auto& set : {&records_a, &records_b})
    for (const auto& r : *set)
      if (r.algorithm != set->front().algorithm)
        throw std::runtime_error("run set mixes algorithms \"" + set->front().algorithm +
                                 "\" and \"" + r.algorithm + "\"");

  std::vector<std::vector<rsp::ObjectiveVector>> fronts;
  for (const auto& r : records_a) fronts.push_back(r.front_vectors());
  for (const auto& r : records_b) fronts.push_back(r.front_vectors());
  const rsp::ReferenceData ref = rsp::reference_set(fronts);

  std::vector<double> hv_a, hv_b, eps_a, eps_b;
  for (const auto& r : records_a) {
    const auto s = rsp::score_front(r.front_vectors(), ref);
    hv_a.push_back(s.hv_deficit);
    eps_a.push_back(s.eps);
  }
  for (const auto& r : records_b) {
    const auto s = rsp::score_front(r.front_vectors(), ref);
    hv_b.push_back(s.hv_deficit);
    eps_b.push_back(s.eps);
  }

  std::string csv = "algo_a,algo_b,metric,p_value,verdict,branch\n";
  auto add_row = [&](const std::string& name, std::span<const double> a,
                     std::span<const double> b) {
    const rsp::MwResult r = rsp::mann_whitney(a, b, significance);
    const std::string row = records_a.front().algorithm + "," + records_b.front().algorithm + "," +
                            name + "," + fmt(r.p_value) + "," + verdict_name(r.verdict) + "," +
                            (r.branch == rsp::MwBranch::Exact ? "exact" : "normal");
    csv += row + "\n";
    std::cout << row << '\n';
  };
  if (metric == "hv" || metric == "both") add_row("hv", hv_a, hv_b);
  if (metric == "eps" || metric == "both") add_row("eps", eps_a, eps_b);
  write_text_atomic(out, csv);
}

void run_attain(const std::vector<std::string>& inputs, double level, const std::string& out) {
  if (!(level > 0.0 && level <= 1.0)) throw UsageError("--level must be in (0, 1]");
  const auto records = load_records(inputs);
  std::vector<std::vector<rsp::ObjectiveVector>> fronts;
  fronts.reserve(records.size());
  for (const auto& r : records) fronts.push_back(r.front_vectors());
  const auto surface = rsp::attainment_surface(fronts, level);

  std::string csv = "f1,f2\n";
  for (const auto& z : surface)
    csv += std::to_string(z.f1) + "," + std::to_string(z.f2) + "\n";
  write_text_atomic(out, csv);
  std::cout << out << ": " << surface.size() << " corners at level " << fmt(level) << '\n';
}

void run_oracle(const std::string& instance_path, const std::string& cost_model,
                std::optional<int> alpha, const std::string& out) {
  const rsp::CostModel model = make_cost_model(cost_model, alpha);
  const rsp::Instance inst = rsp::load_tsplib(instance_path, model);
  if (inst.n() > 10)
    throw std::runtime_error("oracle supports at most 10 nodes, instance \"" + inst.name() +
                             "\" has " + std::to_string(inst.n()));
  const auto front = rsp::brute_force_front(inst);

  json j;
  j["instance"] = inst.name();
  j["cost_model"] = cost_model_name(model);
  if (model.kind == rsp::CostModel::Kind::Scalarized) j["alpha"] = model.alpha;
  json arr = json::array();
  for (const auto& p : front) {
    json e;
    e["f1"] = p.z.f1;
    e["f2"] = p.z.f2;
    e["ring"] = p.ring;
    arr.push_back(std::move(e));
  }
  j["front"] = std::move(arr);
  rsp::write_json_atomic(out, j);
  std::cout << out << ": exact front with " << front.size() << " points\n";
}

void run_scalarize(const std::vector<std::string>& inputs, const std::string& out) {
  const auto records = load_records(inputs);
  if (records.front().cost_model.kind != rsp::CostModel::Kind::Scalarized)
    throw std::runtime_error(
        "scalarize expects runs produced under the scalarized cost model (--cost-model scalarized)");
  const int alpha = records.front().cost_model.alpha;

  std::vector<rsp::ObjectiveVector> pooled;
  for (const auto& r : records)
    for (const auto& e : r.front) pooled.push_back(e.z);
  const auto front = rsp::nondominated(pooled);
  const rsp::ScalarizedBest best = rsp::scalarize_front(front, alpha);

  json j;
  j["instance"] = records.front().instance;
  j["alpha"] = alpha;
  j["value"] = best.value;
  j["witness"] = {{"f1", best.witness.f1}, {"f2", best.witness.f2}};
  rsp::write_json_atomic(out, j);
  std::cout << out << ": best aggregate " << best.value << " at (" << best.witness.f1 << ", "
            << best.witness.f2 << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bi-objective ring star solver and assessment toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> algo_names;
  for (const auto name : rsp::algorithm_names()) algo_names.emplace_back(name);

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "run an algorithm and write one record per seed");
  cmd_solve->add_option("--instance", solve.instance_path, "TSPLIB file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_solve->add_option("--algo", solve.algo, "search method")
      ->required()
      ->check(CLI::IsMember(algo_names));
  cmd_solve->add_option("--budget", solve.budget,
                        "evals:<count> or seconds:<time>; defaults per benchmark instance");
  cmd_solve->add_option("--seeds", solve.seeds, "list 1,2,7 or range 1..20 (default 1)");
  cmd_solve->add_option("--out-dir", solve.out_dir, "output directory (default .)");
  cmd_solve->add_option("--cost-model", solve.cost_model, "plain or scalarized")
      ->check(CLI::IsMember({"plain", "scalarized"}));
  cmd_solve->add_option("--alpha", solve.alpha, "scalarized cost weight (3, 5, 7 or 9)");
  cmd_solve->add_option("--population", solve.population, "population size");
  cmd_solve->add_option("--noise-rate", solve.noise_rate, "restart noise rate");
  cmd_solve->add_option("--kappa", solve.kappa, "indicator fitness scaling");
  cmd_solve->add_option("--p-crossover", solve.p_crossover, "per-pair crossover probability");
  cmd_solve->add_option("--p-mutation", solve.p_mutation, "per-child mutation probability");
  cmd_solve->add_option("--w-remove", solve.w_remove, "mutation weight: remove");
  cmd_solve->add_option("--w-insert", solve.w_insert, "mutation weight: insert");
  cmd_solve->add_option("--w-two-opt", solve.w_two_opt, "mutation weight: 2-opt");
  cmd_solve->add_option("--step-fraction", solve.step_fraction, "hybrid boundary step fraction");
  cmd_solve->add_option("--delta", solve.delta, "adaptive launch threshold");
  cmd_solve->add_option("--ls-population", solve.ls_population, "hybrid local-search population");

  std::vector<std::string> ref_inputs;
  std::string ref_out = "reference.json";
  auto* cmd_reference =
      app.add_subcommand("reference", "pool run records into a reference front");
  cmd_reference->add_option("inputs", ref_inputs, "run record files")->required();
  cmd_reference->add_option("--out", ref_out, "output file (default reference.json)");

  std::vector<std::string> assess_inputs;
  std::string assess_reference;
  std::string assess_out = "scores.csv";
  auto* cmd_assess = app.add_subcommand("assess", "score run records against a reference");
  cmd_assess->add_option("inputs", assess_inputs, "run record files")->required();
  cmd_assess->add_option("--reference", assess_reference, "reference file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_assess->add_option("--out", assess_out, "output CSV (default scores.csv)");

  std::string cmp_dir_a, cmp_dir_b;
  std::string cmp_metric = "both";
  double cmp_significance = 0.05;
  std::string cmp_out = "comparison.csv";
  auto* cmd_compare =
      app.add_subcommand("compare", "rank-sum comparison of two run directories");
  cmd_compare->add_option("dir_a", cmp_dir_a, "directory of run records")->required();
  cmd_compare->add_option("dir_b", cmp_dir_b, "directory of run records")->required();
  cmd_compare->add_option("--metric", cmp_metric, "hv, eps or both (default both)");
  cmd_compare->add_option("--significance", cmp_significance,
                          "verdict significance level (default 0.05)");
  cmd_compare->add_option("--out", cmp_out, "output CSV (default comparison.csv)");

  std::vector<std::string> attain_inputs;
  double attain_level = 0.9;
  std::string attain_out = "attainment.csv";
  auto* cmd_attain = app.add_subcommand("attain", "attainment-surface corners of a run set");
  cmd_attain->add_option("inputs", attain_inputs, "run record files")->required();
  cmd_attain->add_option("--level", attain_level, "attainment level in (0,1] (default 0.9)");
  cmd_attain->add_option("--out", attain_out, "output CSV (default attainment.csv)");

  std::string oracle_instance;
  std::string oracle_cost_model = "plain";
  std::optional<int> oracle_alpha;
  std::string oracle_out = "oracle_front.json";
  auto* cmd_oracle = app.add_subcommand("oracle", "exact front of a small instance (n <= 10)");
  cmd_oracle->add_option("--instance", oracle_instance, "TSPLIB file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_oracle->add_option("--cost-model", oracle_cost_model, "plain or scalarized")
      ->check(CLI::IsMember({"plain", "scalarized"}));
  cmd_oracle->add_option("--alpha", oracle_alpha, "scalarized cost weight (3, 5, 7 or 9)");
  cmd_oracle->add_option("--out", oracle_out, "output file (default oracle_front.json)");

  std::vector<std::string> scal_inputs;
  std::string scal_out = "scalarized.json";
  auto* cmd_scalarize =
      app.add_subcommand("scalarize", "best aggregated objective over scalarized runs");
  cmd_scalarize->add_option("inputs", scal_inputs, "run record files")->required();
  cmd_scalarize->add_option("--out", scal_out, "output file (default scalarized.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_solve)) run_solve(solve);
    if (app.got_subcommand(cmd_reference)) run_reference(ref_inputs, ref_out);
    if (app.got_subcommand(cmd_assess)) run_assess(assess_inputs, assess_reference, assess_out);
    if (app.got_subcommand(cmd_compare))
      run_compare(cmp_dir_a, cmp_dir_b, cmp_metric, cmp_significance, cmp_out);
    if (app.got_subcommand(cmd_attain)) run_attain(attain_inputs, attain_level, attain_out);
    if (app.got_subcommand(cmd_oracle))
      run_oracle(oracle_instance, oracle_cost_model, oracle_alpha, oracle_out);
    if (app.got_subcommand(cmd_scalarize)) run_scalarize(scal_inputs, scal_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
