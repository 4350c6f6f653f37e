#include "gcgt/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "gcgt/error.hpp"
#include "gcgt/gtcore.hpp"
#include "gcgt/parallel.hpp"

namespace gcgt {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::subgraph: return "subgraph";
    case Method::walk: return "walk";
    case Method::random: return "random";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "subgraph") return Method::subgraph;
  if (name == "walk") return Method::walk;
  if (name == "random") return Method::random;
  throw ParameterError("unknown method '" + std::string(name) + "' (subgraph|walk|random)");
}

GraphInput graph_input(const GraphFamily& family) {
  return {family_name(family), family_params(family), generate(family)};
}

std::uint64_t trial_seed(std::uint64_t master, std::string_view experiment_id, std::size_t tau,
                         std::size_t trial) {
  return derive_seed(master, {stable_hash(experiment_id), tau, trial});
}

TestCollection generate_tests(const GraphInput& input, Method method, unsigned d, std::size_t tau,
                              std::uint64_t seed, const WalkParams& walk) {
  const Graph& g = input.graph;
  switch (method) {
    case Method::subgraph: {
      MakeTestsParams params;
      params.d = d;
      params.delta = (static_cast<double>(d) + 1.0) / static_cast<double>(d);
      params.beta = 2.0 / static_cast<double>(g.n());
      params.mode = ComponentMode::largest_only;
      params.seed = seed;
      return make_tests_until(g, params, tau, 1000 * tau + 1000);
    }
    case Method::walk: {
      WalkParams p = walk;
      p.d = d;
      p.tau = tau;
      p.seed = seed;
      return random_walk_tests(g, p);
    }
    case Method::random:
      return random_tests(g.m(), d, tau, seed);
  }
  throw ParameterError("unknown method");
}

namespace {

std::string experiment_id(std::string_view kind, const GraphInput& in, std::string_view tag,
                          unsigned d) {
  std::ostringstream os;
  os << kind << '|' << in.family << '|' << in.params << '|' << tag << '|' << d;
  return os.str();
}

WalkParams walk_params_for(const GraphInput& in, const ExperimentConfig& config) {
  WalkParams walk;
  const bool needs_walk =
      std::find(config.methods.begin(), config.methods.end(), Method::walk) != config.methods.end();
  if (!needs_walk) return walk;
  walk.l = config.walk_l.value_or(in.family == "complete" ? 1.0 : 4.0);
  walk.c = degree_ratio(in.graph);
  const std::uint64_t mixing_seed =
      derive_seed(config.seed, {stable_hash("mixing|" + in.family + "|" + in.params)});
  walk.tau_mix = estimate_mixing_time(in.graph, mixing_seed).steps;
  return walk;
}

void validate(const ExperimentConfig& config) {
  if (config.d < 1) throw ParameterError("experiment: d must be at least 1");
  if (config.trials < 1) throw ParameterError("experiment: trials must be at least 1");
  if (config.methods.empty()) throw ParameterError("experiment: no methods given");
  if (config.taus.empty()) throw ParameterError("experiment: no tau values given");
}

// Runs every (method, tau, trial) cell and aggregates successes.
template <class Trial>
std::vector<ExperimentRecord> run_grid(std::string_view kind, const GraphInput& in,
                                       const ExperimentConfig& config, Trial&& trial) {
  const std::size_t per_method = config.taus.size() * config.trials;
  const std::size_t cells = config.methods.size() * per_method;
  std::vector<char> ok(cells, 0);
  std::vector<std::string> ids;
  for (Method m : config.methods) ids.push_back(experiment_id(kind, in, method_name(m), config.d));

  parallel_for(cells, config.threads, [&](std::size_t cell) {
    const std::size_t mi = cell / per_method;
    const std::size_t ti = (cell % per_method) / config.trials;
    const std::size_t k = cell % config.trials;
    const std::size_t tau = config.taus[ti];
    ok[cell] = trial(config.methods[mi], tau, k, trial_seed(config.seed, ids[mi], tau, k)) ? 1 : 0;
  });

  std::vector<ExperimentRecord> records;
  for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
    for (std::size_t ti = 0; ti < config.taus.size(); ++ti) {
      ExperimentRecord r;
      r.family = in.family;
      r.params = in.params;
      r.method = config.methods[mi];
      r.d = config.d;
      r.tau = config.taus[ti];
      r.trials = config.trials;
      const std::size_t base = mi * per_method + ti * config.trials;
      r.successes = static_cast<std::size_t>(
          std::count(ok.begin() + static_cast<std::ptrdiff_t>(base),
                     ok.begin() + static_cast<std::ptrdiff_t>(base + config.trials), 1));
      r.p_hat = static_cast<double>(r.successes) / static_cast<double>(r.trials);
      r.std_error = std::sqrt(r.p_hat * (1.0 - r.p_hat) / static_cast<double>(r.trials));
      r.seed = config.seed;
      records.push_back(std::move(r));
    }
  }
  std::sort(records.begin(), records.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
    return std::tie(a.family, a.params, a.method, a.d, a.tau) <
           std::tie(b.family, b.params, b.method, b.d, b.tau);
  });
  return records;
}

}  // namespace

std::vector<ExperimentRecord> experiment_disjunct_probability(const GraphInput& in,
                                                              const ExperimentConfig& config) {
  validate(config);
  for (std::size_t tau : config.taus) {
    const double cost = projected_disjunct_cost(in.graph.m(), tau, config.d);
    if (cost > config.disjunct_budget) {
      throw BudgetError("experiment disjunct-prob: tau = " + std::to_string(tau) +
                        " needs ~" + std::to_string(cost) + " mask operations per check, over budget");
    }
  }
  const WalkParams walk = walk_params_for(in, config);
  const DisjunctOptions options{config.disjunct_budget, 1};
  return run_grid("disjunct-prob", in, config,
                  [&](Method method, std::size_t tau, std::size_t, std::uint64_t seed) {
                    const TestCollection tests = generate_tests(in, method, config.d, tau, seed, walk);
                    return check_disjunct(tests, config.d, options).disjunct;
                  });
}

std::vector<ExperimentRecord> experiment_random_failures(const GraphInput& in,
                                                         const ExperimentConfig& config) {
  validate(config);
  const std::size_t m = in.graph.m();
  if (config.d > m) throw ParameterError("experiment random-failures: d exceeds the number of edges");
  const WalkParams walk = walk_params_for(in, config);
  const std::string failure_id = experiment_id("random-failures", in, "failures", config.d);
  return run_grid("random-failures", in, config,
                  [&](Method method, std::size_t tau, std::size_t trial, std::uint64_t seed) {
                    // The failed set depends only on (tau, trial), so every
                    // method faces the same failures.
                    SplitMix64 rng(trial_seed(config.seed, failure_id, tau, trial));
                    std::vector<EdgeId> ids(m);
                    for (std::size_t i = 0; i < m; ++i) ids[i] = static_cast<EdgeId>(i);
                    DefectiveSet failed(m);
                    for (std::size_t i = 0; i < config.d; ++i) {
                      const std::size_t j = i + rng.below(m - i);
                      std::swap(ids[i], ids[j]);
                      failed.set(ids[i]);
                    }
                    const TestCollection tests = generate_tests(in, method, config.d, tau, seed, walk);
                    return decode(tests, run_tests(tests, failed)) == failed;
                  });
}

namespace {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

template <class T>
T parse_field(const std::string& s, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw FormatError("csv line " + std::to_string(line) + ": bad field '" + s + "'");
  return value;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << kCsvHeader << '\n';
  for (const ExperimentRecord& r : records) {
    out << r.family << ',' << r.params << ',' << method_name(r.method) << ',' << r.d << ','
        << r.tau << ',' << r.trials << ',' << r.successes << ',' << format_double(r.p_hat) << ','
        << format_double(r.std_error) << ',' << r.seed << '\n';
  }
}

std::string to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream os;
  write_csv(os, records);
  return os.str();
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw FormatError("csv: unexpected header '" + line + "'");
  std::vector<ExperimentRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto f = split_csv(line);
    if (f.size() != 10) throw FormatError("csv line " + std::to_string(lineno) + ": expected 10 fields");
    ExperimentRecord r;
    r.family = f[0];
    r.params = f[1];
    try {
      r.method = parse_method(f[2]);
    } catch (const ParameterError& e) {
      throw FormatError("csv line " + std::to_string(lineno) + ": " + e.what());
    }
    r.d = parse_field<unsigned>(f[3], lineno);
    r.tau = parse_field<std::size_t>(f[4], lineno);
    r.trials = parse_field<std::size_t>(f[5], lineno);
    r.successes = parse_field<std::size_t>(f[6], lineno);
    r.p_hat = parse_field<double>(f[7], lineno);
    r.std_error = parse_field<double>(f[8], lineno);
    r.seed = parse_field<std::uint64_t>(f[9], lineno);
    if (r.trials == 0 || r.successes > r.trials)
      throw FormatError("csv line " + std::to_string(lineno) + ": inconsistent counts");
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::string iso8601(std::chrono::system_clock::time_point tp) {
  const std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

std::string manifest_json(std::string_view experiment, const GraphInput& input,
                          const ExperimentConfig& config,
                          std::chrono::system_clock::time_point started,
                          std::chrono::system_clock::time_point finished) {
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : config.methods) methods.push_back(std::string(method_name(m)));
  nlohmann::json j;
  j["tool"] = "gcgt";
  j["version"] = GCGT_VERSION;
  j["experiment"] = std::string(experiment);
  j["graph"] = {{"family", input.family},
                {"params", input.params},
                {"n", input.graph.n()},
                {"m", input.graph.m()}};
  j["parameters"] = {{"methods", methods},
                     {"d", config.d},
                     {"taus", config.taus},
                     {"trials", config.trials},
                     {"threads", config.threads},
                     {"disjunct_budget", config.disjunct_budget}};
  if (config.walk_l) j["parameters"]["walk_l"] = *config.walk_l;
  j["master_seed"] = config.seed;
  j["seed_rule"] = std::string(kSeedRule);
  j["started_at"] = iso8601(started);
  j["finished_at"] = iso8601(finished);
  return j.dump(2);
}

}  // namespace gcgt
