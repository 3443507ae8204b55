#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "oddcycle/analysis.hpp"
#include "oddcycle/pipeline.hpp"
#include "oddcycle/random.hpp"
#include "oddcycle/size_rule.hpp"

namespace oddcycle {

namespace {

using nlohmann::json;

template <class T>
T get_field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("config: bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw InputError("config: top level must be an object");

  ExperimentConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "generators") cfg.generators = get_field<std::vector<std::string>>(j, "generators");
    else if (key == "q") cfg.qs = get_field<std::vector<std::size_t>>(j, "q");
    else if (key == "n") cfg.n_rule = value.is_number_unsigned() ? std::to_string(value.get<std::uint64_t>()) : get_field<std::string>(j, "n");
    else if (key == "seeds") {
      if (value.is_array()) cfg.seeds = get_field<std::vector<std::uint64_t>>(j, "seeds");
      else if (value.is_object()) {
        const auto count = get_field<std::size_t>(value, "count");
        const auto base = value.contains("base") ? get_field<std::uint64_t>(value, "base") : 0;
        cfg.seeds.clear();
        for (std::size_t i = 0; i < count; ++i) cfg.seeds.push_back(derive_seed(base, i));
      } else {
        throw InputError("config: 'seeds' must be a list or {count, base}");
      }
    } else if (key == "methods") cfg.methods = get_field<std::vector<std::string>>(j, "methods");
    else if (key == "eps") cfg.eps = get_field<double>(j, "eps");
    else if (key == "C") cfg.C = get_field<double>(j, "C");
    else if (key == "delta") cfg.delta = value.is_string() ? value.get<std::string>() : value.dump();
    else if (key == "k_rule") cfg.k_rule = get_field<std::string>(j, "k_rule");
    else if (key == "small_rule") cfg.small_rule = get_field<std::string>(j, "small_rule");
    else if (key == "fallback") cfg.fallback = get_field<std::string>(j, "fallback");
    else if (key == "threads") cfg.threads = get_field<std::size_t>(j, "threads");
    else if (key == "record_time") cfg.record_time = get_field<bool>(j, "record_time");
    else throw InputError("config: unknown key '" + key + "'");
  }
  if (cfg.qs.empty()) throw InputError("config: 'q' must list at least one value");
  for (const auto& g : cfg.generators)
    if (g != "random" && g != "binary") throw InputError("config: unknown generator '" + g + "'");
  for (const auto& m : cfg.methods)
    if (m != "pipeline" && m != "proposition" && m != "oracle") throw InputError("config: unknown method '" + m + "'");
  if (cfg.fallback != "oracle" && cfg.fallback != "fail") throw InputError("config: fallback must be oracle or fail");
  SizeRule{cfg.n_rule};
  SizeRule{cfg.k_rule};
  SizeRule{cfg.small_rule};
  Rational::parse(cfg.delta);
  if (cfg.threads == 0) cfg.threads = 1;
  return cfg;
}

namespace {

struct Cell {
  std::string generator;
  std::size_t q;
  std::uint64_t seed;
  std::string method;
};

std::string branch_path(const PipelineTrace& t) {
  std::string out;
  for (const auto& lvl : t.levels) {
    if (!out.empty()) out += '>';
    out += to_string(lvl.branch);
  }
  return out;
}

ExperimentRow run_cell(const ExperimentConfig& cfg, const Cell& cell) {
  ExperimentRow row;
  row.generator = cell.generator;
  row.q = cell.q;
  row.seed = cell.seed;
  row.method = cell.method;
  const auto start = std::chrono::steady_clock::now();
  try {
    EdgeColouring c;
    if (cell.generator == "binary") {
      c = binary_colouring(cell.q);
    } else {
      const std::uint64_t n = SizeRule(cfg.n_rule)(cell.q);
      if (n > 1u << 16) throw InputError("n = " + std::to_string(n) + " is too large");
      c = random_colouring(n, cell.q, cell.seed);
    }
    row.n = c.order();

    MonoOddCycle res;
    if (cell.method == "pipeline") {
      PipelineParams p;
      p.eps = cfg.eps;
      p.C = cfg.C;
      p.k_of_q = SizeRule(cfg.k_rule);
      p.small_threshold_of_q = SizeRule(cfg.small_rule);
      p.fallback = cfg.fallback == "fail" ? Fallback::fail : Fallback::oracle;
      res = find_mono_odd_cycle(c, p);
    } else if (cell.method == "proposition") {
      res = proposition_pipeline(c, cell.q, Rational::parse(cfg.delta));
    } else {
      res = oracle_mono_odd_cycle(c);
    }
    row.cycle_length = res.certificate.length();
    row.bound_claimed = res.bound_claimed;
    row.branch = branch_path(res.trace);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  if (cfg.record_time)
    row.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

template <class T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::vector<ExperimentRow> run_experiments(const ExperimentConfig& config) {
  std::vector<Cell> cells;
  for (const auto& g : config.generators)
    for (std::size_t q : config.qs)
      for (std::uint64_t s : config.seeds)
        for (const auto& m : config.methods) cells.push_back({g, q, s, m});

  std::vector<ExperimentRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) rows[i] = run_cell(config, cells[i]);
  };
  const std::size_t threads = std::min(config.threads, std::max<std::size_t>(cells.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "generator,q,n,seed,method,cycle_length,bound_claimed,branch,wall_time_ms,error\n";
  for (const auto& r : rows) {
    std::string ms;
    if (r.wall_time_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", *r.wall_time_ms);
      ms = buf;
    }
    out << csv_field(r.generator) << ',' << r.q << ',' << r.n << ',' << r.seed << ',' << csv_field(r.method) << ','
        << opt(r.cycle_length) << ',' << opt(r.bound_claimed) << ',' << csv_field(r.branch) << ',' << ms << ','
        << csv_field(r.error) << '\n';
  }
  return out.str();
}

std::string experiment_table(const ExperimentConfig& config) { return to_csv(run_experiments(config)); }

}  // namespace oddcycle
