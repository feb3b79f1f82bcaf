// Experiment runner for the private densest-subgraph library: graph
// generation and ingestion, algorithm dispatch, trial batching, budget
// reporting, and CSV/JSON result emission.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "dsg/density_value.hpp"
#include "dsg/dsg_directed.hpp"
#include "dsg/dsg_private.hpp"
#include "dsg/dsg_weighted.hpp"
#include "dsg/generators.hpp"
#include "dsg/graph_io.hpp"
#include "dsg/oracles.hpp"
#include "dsg/pure_peel.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitInfeasible = 4;

struct RunConfig {
  std::string algo;
  std::string input;
  double eps = 1.0;
  double delta = 1e-6;
  double c = 1.0;
  double beta = 0.1;
  double eta = 0.1;
  double gamma = 0.0;  // 0 = default n^-1
  long long horizon_override = 0;
  double sigma_override = 0.0;
  bool zero_noise = false;
  int trials = 1;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  bool reveal_truth = false;
  std::string transcript_path;
  std::string value_mode = "whp";
};

struct ResultRow {
  std::string algo;
  int n = 0;
  long long m = 0;
  double eps = 0.0;
  double delta = 0.0;
  std::string params;
  std::uint64_t trial_seed = 0;
  double noisy_density = 0.0;
  std::optional<double> true_density;
  std::optional<double> lambda_star;
  int rounds = 0;
  double wall_ms = 0.0;
  double zcdp_total = 0.0;
  double pure_eps_total = 0.0;
  double eps_at_delta = 0.0;
};

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void write_rows(std::ostream& out, const std::vector<ResultRow>& rows,
                const std::string& format, bool reveal_truth) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j{{"algo", r.algo},
                       {"n", r.n},
                       {"m", r.m},
                       {"eps", r.eps},
                       {"delta", r.delta},
                       {"params", r.params},
                       {"trial_seed", r.trial_seed},
                       {"noisy_density", r.noisy_density},
                       {"rounds", r.rounds},
                       {"wall_ms", r.wall_ms},
                       {"zcdp_total", r.zcdp_total},
                       {"pure_eps_total", r.pure_eps_total},
                       {"eps_at_delta", r.eps_at_delta}};
      if (reveal_truth) {
        j["non_private_evaluation"] = true;
        if (r.true_density) j["true_density"] = *r.true_density;
        if (r.lambda_star) j["lambda_star"] = *r.lambda_star;
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (reveal_truth) out << "# NON-PRIVATE EVALUATION\n";
  out << "algo,n,m,eps,delta,params,trial_seed,noisy_density,rounds,wall_ms,"
         "zcdp_total,pure_eps_total,eps_at_delta";
  if (reveal_truth) out << ",true_density,lambda_star";
  out << "\n";
  for (const auto& r : rows) {
    out << r.algo << "," << r.n << "," << r.m << "," << format_double(r.eps)
        << "," << format_double(r.delta) << "," << r.params << ","
        << r.trial_seed << "," << format_double(r.noisy_density) << ","
        << r.rounds << "," << format_double(r.wall_ms) << ","
        << format_double(r.zcdp_total) << ","
        << format_double(r.pure_eps_total) << ","
        << format_double(r.eps_at_delta);
    if (reveal_truth) {
      out << "," << (r.true_density ? format_double(*r.true_density) : "");
      out << "," << (r.lambda_star ? format_double(*r.lambda_star) : "");
    }
    out << "\n";
  }
}

struct LoadedInput {
  std::optional<dsg::Graph> graph;
  std::optional<dsg::NodeWeightedGraph> weighted;
  std::optional<dsg::DirectedGraph> directed;

  int n() const {
    if (graph) return graph->vertex_count();
    if (weighted) return weighted->vertex_count();
    return directed->vertex_count();
  }
  long long m() const {
    if (graph) return graph->edge_count();
    if (weighted) return weighted->graph().edge_count();
    return directed->edge_count();
  }
};

// Exact-optimum calls are cached per graph hash: trials share one input and
// the flow solve is the expensive part of truth-revealing runs.
std::uint64_t graph_hash(const dsg::Graph& g) {
  std::uint64_t h = 1469598103934665603ULL ^ g.vertex_count();
  for (auto [u, v] : g.edges()) {
    h = (h ^ static_cast<std::uint64_t>(u * 2654435761ULL + v)) *
        1099511628211ULL;
  }
  return h;
}

double cached_exact_density(const dsg::Graph& g) {
  static std::mutex mutex;
  static std::map<std::uint64_t, double> cache;
  std::uint64_t h = graph_hash(g);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;
  }
  double value = dsg::exact_dsg_flow(g).value();
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(h, value);
  return value;
}

LoadedInput load_input(const RunConfig& cfg) {
  LoadedInput in;
  if (cfg.input.empty())
    throw dsg::ParseError("--input is required for algorithm runs");
  if (cfg.algo == "weighted") {
    in.weighted = dsg::read_weighted_edge_list_file(cfg.input).graph;
  } else if (cfg.algo == "directed") {
    in.directed = dsg::read_directed_edge_list_file(cfg.input).graph;
  } else {
    in.graph = dsg::read_edge_list_file(cfg.input).graph;
  }
  return in;
}

std::uint64_t trial_seed(std::uint64_t root_seed, int trial) {
  dsg::RngRoot root(root_seed);
  const std::uint64_t path[] = {dsg::stream_domain::kTrial,
                                static_cast<std::uint64_t>(trial)};
  return root.derive_key(path);
}

// One trial of the requested algorithm. Fills noisy_density, rounds, budget.
ResultRow run_trial(const RunConfig& cfg, const LoadedInput& in, int trial,
                    dsg::Transcript* transcript_out) {
  ResultRow row;
  row.algo = cfg.algo;
  row.n = in.n();
  row.m = in.m();
  row.eps = cfg.eps;
  row.delta = cfg.delta;
  row.trial_seed = trial_seed(cfg.seed, trial);

  dsg::RunOptions opts;
  opts.zero_noise = cfg.zero_noise;
  opts.record_transcript = transcript_out != nullptr;

  int n = in.n();
  double gamma = cfg.gamma > 0 ? cfg.gamma : 1.0 / n;

  auto target_sigma = [&](dsg::SigmaVariant variant, double cmax) {
    if (cfg.zero_noise) return 0.0;
    if (cfg.sigma_override > 0) return cfg.sigma_override;
    dsg::SigmaParams p;
    p.eps = cfg.eps;
    p.delta = cfg.delta;
    p.n = n;
    p.c = cfg.c;
    p.beta = cfg.beta;
    p.cmax = cmax;
    return dsg::sigma_for_target(variant, p);
  };
  auto horizon_for = [&](double sigma) {
    if (cfg.horizon_override > 0) return cfg.horizon_override;
    if (cfg.zero_noise) return static_cast<long long>(4096);
    auto h = dsg::default_horizon(n, sigma);
    if (h.capped)
      std::cerr << "warning: iteration count capped at " << h.rounds
                << "; utility guarantees weakened\n";
    return h.rounds;
  };

  std::ostringstream params;
  params.precision(10);
  auto start = std::chrono::steady_clock::now();

  if (cfg.algo == "ledp") {
    double sigma = target_sigma(dsg::SigmaVariant::ledp, 1.0);
    long long horizon = horizon_for(sigma);
    auto run = dsg::dsg_ledp(*in.graph, horizon, sigma, cfg.c, row.trial_seed,
                             opts);
    if (!run.noise_hypothesis_met)
      std::cerr << "warning: sqrt(T)*sigma < n; the utility guarantees "
                   "assume otherwise\n";
    row.noisy_density = run.best.noisy_density;
    row.rounds = static_cast<int>(horizon);
    row.zcdp_total = run.best.budget.zcdp;
    row.pure_eps_total = run.best.budget.pure_eps;
    row.eps_at_delta = cfg.zero_noise
                           ? std::numeric_limits<double>::infinity()
                           : run.best.budget.eps_at(cfg.delta);
    if (cfg.reveal_truth)
      row.true_density = dsg::density(*in.graph, run.best.members);
    params << "c=" << cfg.c << ";T=" << horizon << ";sigma=" << sigma;
    if (transcript_out) *transcript_out = std::move(run.transcript);
  } else if (cfg.algo == "centralized") {
    double sigma = target_sigma(dsg::SigmaVariant::centralized, 1.0);
    long long horizon = horizon_for(sigma);
    dsg::RngRoot root(row.trial_seed);
    std::function<dsg::LedpRun(int)> mech = [&](int copy) {
      const std::uint64_t path[] = {dsg::stream_domain::kSelect,
                                    static_cast<std::uint64_t>(copy + 1)};
      return dsg::centralized_dsg_core(*in.graph, horizon, sigma,
                                       root.derive_key(path), opts);
    };
    auto selected = dsg::ps_select<dsg::LedpRun>(
        mech, gamma, root.stream({dsg::stream_domain::kSelect, 0}),
        [](const dsg::LedpRun& r) { return r.best.noisy_density; });
    row.noisy_density = selected.best.best.noisy_density;
    row.rounds = selected.copies;
    double per_copy = selected.best.best.budget.zcdp;
    row.zcdp_total = per_copy;  // one copy; the wrapper reports (eps, delta)
    row.eps_at_delta = cfg.zero_noise
                           ? std::numeric_limits<double>::infinity()
                           : dsg::ps_select_eps(per_copy, gamma, cfg.delta);
    if (cfg.reveal_truth)
      row.true_density = dsg::density(*in.graph, selected.best.best.members);
    params << "c=" << cfg.c << ";T=" << horizon << ";sigma=" << sigma
           << ";gamma=" << gamma << ";copies=" << selected.copies;
    if (transcript_out) *transcript_out = std::move(selected.best.transcript);
  } else if (cfg.algo == "weighted") {
    double sigma = target_sigma(dsg::SigmaVariant::weighted,
                                in.weighted->max_cost());
    long long horizon = horizon_for(sigma);
    dsg::WeightedRunOptions wopts;
    wopts.base = opts;
    auto run = dsg::weighted_dsg_ledp(*in.weighted, horizon, sigma, cfg.c,
                                      cfg.beta, row.trial_seed, wopts);
    row.noisy_density = run.best.noisy_density;
    row.rounds = static_cast<int>(horizon);
    row.zcdp_total = run.best.budget.zcdp;
    row.eps_at_delta = cfg.zero_noise
                           ? std::numeric_limits<double>::infinity()
                           : run.best.budget.eps_at(cfg.delta);
    if (cfg.reveal_truth)
      row.true_density = dsg::weighted_density(*in.weighted, run.best.members);
    params << "c=" << cfg.c << ";beta=" << cfg.beta << ";T=" << horizon
           << ";sigma=" << sigma;
    if (transcript_out) *transcript_out = std::move(run.transcript);
  } else if (cfg.algo == "directed") {
    double sigma = target_sigma(dsg::SigmaVariant::directed, 1.0);
    long long horizon = horizon_for(sigma);
    auto run = dsg::directed_dsg_ledp(*in.directed, horizon, sigma, cfg.c,
                                      cfg.beta, row.trial_seed, opts);
    row.noisy_density = run.best.noisy_density;
    row.rounds = static_cast<int>(horizon);
    row.zcdp_total = run.budget.zcdp;
    row.eps_at_delta = cfg.zero_noise
                           ? std::numeric_limits<double>::infinity()
                           : run.budget.eps_at(cfg.delta);
    if (cfg.reveal_truth && !run.best.s.empty() && !run.best.t.empty())
      row.true_density =
          dsg::directed_density(*in.directed, run.best.s, run.best.t);
    params << "c=" << cfg.c << ";beta=" << cfg.beta << ";T=" << horizon
           << ";sigma=" << sigma;
    if (transcript_out) *transcript_out = std::move(run.transcript);
  } else if (cfg.algo == "pure") {
    double per_round =
        cfg.zero_noise ? 0.0 : dsg::pure_eps_per_round(cfg.eps, cfg.eta, n);
    auto run =
        dsg::simple_pure_ledp(*in.graph, per_round, cfg.eta, row.trial_seed,
                              opts);
    row.noisy_density = run.best.noisy_density;
    row.rounds = run.rounds;
    row.pure_eps_total = run.best.budget.pure_eps;
    row.eps_at_delta = run.best.budget.pure_eps;
    if (cfg.reveal_truth)
      row.true_density = dsg::density(*in.graph, run.best.members);
    params << "eta=" << cfg.eta << ";eps_per_round=" << per_round;
    if (transcript_out) *transcript_out = std::move(run.transcript);
  } else if (cfg.algo == "value") {
    dsg::ValueMode mode = cfg.value_mode == "expectation"
                              ? dsg::ValueMode::expectation
                              : dsg::ValueMode::whp;
    auto est =
        dsg::private_density_value(*in.graph, cfg.eps, mode, row.trial_seed);
    row.noisy_density = est.estimate;
    row.rounds = 1;
    row.pure_eps_total = est.budget.pure_eps;
    row.eps_at_delta = est.budget.pure_eps;
    if (cfg.reveal_truth)
      row.true_density = cached_exact_density(*in.graph);
    params << "mode=" << cfg.value_mode << ";x=" << est.clamp;
  } else if (cfg.algo == "oracle") {
    double exact = cached_exact_density(*in.graph);
    row.noisy_density = exact;
    row.true_density = exact;
    row.lambda_star = exact;
    row.rounds = 0;
    params << "method=flow";
  } else {
    throw CLI::ValidationError("--algo", "unknown algorithm " + cfg.algo);
  }

  auto stop = std::chrono::steady_clock::now();
  row.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  if (cfg.reveal_truth && cfg.algo != "oracle") {
    if (in.graph && in.graph->vertex_count() <= 2000)
      row.lambda_star = cached_exact_density(*in.graph);
    else if (in.weighted && in.weighted->vertex_count() <= 20)
      row.lambda_star =
          dsg::exact_weighted_bruteforce(*in.weighted).density;
    else if (in.directed && in.directed->vertex_count() <= 5)
      row.lambda_star = dsg::exact_directed_bruteforce(*in.directed).density;
  }
  if (cfg.zero_noise) {
    params << ";zero_noise=1";  // debug mode, not private
    row.eps_at_delta = std::numeric_limits<double>::infinity();
  }
  row.params = params.str();
  return row;
}

int run_main(const RunConfig& cfg) {
  LoadedInput in = load_input(cfg);
  std::vector<ResultRow> rows(cfg.trials);

  dsg::Transcript transcript;
  bool want_transcript = !cfg.transcript_path.empty();

  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  int workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(cfg.trials)));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (int t; (t = next.fetch_add(1)) < cfg.trials;) {
        try {
          rows[t] = run_trial(cfg, in, t,
                              (want_transcript && t == 0) ? &transcript
                                                          : nullptr);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  if (want_transcript) {
    std::ofstream tf(cfg.transcript_path);
    if (!tf)
      throw dsg::ParseError("cannot open " + cfg.transcript_path +
                            " for writing");
    transcript.to_jsonl(tf);
  }

  if (cfg.out.empty()) {
    write_rows(std::cout, rows, cfg.format, cfg.reveal_truth);
  } else {
    std::ofstream of(cfg.out);
    if (!of)
      throw dsg::ParseError("cannot open " + cfg.out + " for writing");
    write_rows(of, rows, cfg.format, cfg.reveal_truth);
  }
  return kExitOk;
}

// ---- summarize ----

struct SummaryOptions {
  std::string input;
  double lambda_ref = -1.0;
};

int summarize_main(const SummaryOptions& opts) {
  std::ifstream in(opts.input);
  if (!in) throw dsg::ParseError("cannot open " + opts.input);
  std::string line;
  std::vector<std::string> header;
  struct Row {
    std::string algo;
    double noisy = 0.0;
    std::optional<double> truth;
    double eps = 0.0, delta = 0.0;
    int n = 0;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (header.empty()) {
      header = fields;
      continue;
    }
    auto idx = [&](const std::string& name) -> int {
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
      }
      return -1;
    };
    Row r;
    r.algo = fields[idx("algo")];
    r.n = std::stoi(fields[idx("n")]);
    r.eps = std::stod(fields[idx("eps")]);
    r.delta = std::stod(fields[idx("delta")]);
    r.noisy = std::stod(fields[idx("noisy_density")]);
    int ti = idx("true_density");
    if (ti >= 0 && ti < static_cast<int>(fields.size()) &&
        !fields[ti].empty())
      r.truth = std::stod(fields[ti]);
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw dsg::ParseError("no result rows in " + opts.input);

  std::map<std::string, std::vector<Row>> by_algo;
  for (auto& r : rows) by_algo[r.algo].push_back(r);

  auto quantile = [](std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    std::size_t i = static_cast<std::size_t>(q * (v.size() - 1));
    return v[i];
  };

  for (auto& [algo, group] : by_algo) {
    std::vector<double> noisy, truth;
    for (auto& r : group) {
      noisy.push_back(r.noisy);
      if (r.truth) truth.push_back(*r.truth);
    }
    double mean = 0;
    for (double v : noisy) mean += v;
    mean /= noisy.size();
    std::cout << "algo=" << algo << " trials=" << group.size()
              << " noisy_density mean=" << mean
              << " median=" << quantile(noisy, 0.5)
              << " p10=" << quantile(noisy, 0.1)
              << " p90=" << quantile(noisy, 0.9) << "\n";
    if (!truth.empty()) {
      double tmean = 0;
      for (double v : truth) tmean += v;
      tmean /= truth.size();
      std::cout << "  true_density mean=" << tmean
                << " median=" << quantile(truth, 0.5) << "\n";
      if (opts.lambda_ref >= 0) {
        const Row& first = group.front();
        double bound = opts.lambda_ref -
                       10.0 * std::log(static_cast<double>(first.n)) *
                           std::sqrt(std::log(1.0 / first.delta)) / first.eps;
        int pass = 0;
        for (auto& r : group) {
          if (r.truth && *r.truth >= bound) ++pass;
        }
        std::cout << "  success_rate=" << pass << "/" << group.size()
                  << " vs bound " << bound << "\n";
      }
    }
  }
  return kExitOk;
}

// ---- gen ----

struct GenOptions {
  std::string kind;
  int n = 100;
  int k = 10;
  double pin = 0.5;
  double pout = 0.05;
  double p = 0.1;
  int s_size = 10;
  int t_size = 10;
  std::uint64_t seed = 1;
  std::string out;
};

int gen_main(const GenOptions& g) {
  std::ofstream of(g.out);
  if (!of) throw dsg::ParseError("cannot open " + g.out + " for writing");
  if (g.kind == "gnp") {
    dsg::write_edge_list(of, dsg::gnp(g.n, g.p, g.seed));
  } else if (g.kind == "planted") {
    auto planted = dsg::planted_dense(g.n, g.k, g.pin, g.pout, g.seed);
    dsg::write_edge_list(of, planted.graph);
    of << "# planted block density "
       << dsg::density(planted.graph, planted.planted) << "\n";
  } else if (g.kind == "planted-directed") {
    auto planted = dsg::planted_directed(g.n, g.s_size, g.t_size, g.pin,
                                         g.pout, g.seed);
    dsg::write_directed_edge_list(of, planted.graph);
  } else {
    throw CLI::ValidationError("gen", "unknown generator " + g.kind);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differentially private densest subgraph experiments"};
  app.set_config("--config");

  RunConfig cfg;
  app.add_option("--algo", cfg.algo,
                 "ledp|centralized|weighted|directed|pure|value|oracle");
  app.add_option("--input", cfg.input, "edge-list file");
  app.add_option("--eps", cfg.eps, "epsilon target");
  app.add_option("--delta", cfg.delta, "delta target");
  app.add_option("--c", cfg.c, "success-probability exponent");
  app.add_option("--beta", cfg.beta, "grid resolution");
  app.add_option("--eta", cfg.eta, "peeling slack");
  app.add_option("--gamma", cfg.gamma, "selection restart rate (default 1/n)");
  app.add_option("--T", cfg.horizon_override, "iteration override");
  app.add_option("--sigma", cfg.sigma_override, "noise scale override");
  app.add_flag("--zero-noise", cfg.zero_noise,
               "debug mode; results are not private");
  app.add_option("--trials", cfg.trials, "independent trials");
  app.add_option("--seed", cfg.seed, "root seed");
  app.add_option("--out", cfg.out, "result file (default stdout)");
  app.add_option("--format", cfg.format, "csv|json");
  app.add_flag("--reveal-truth", cfg.reveal_truth,
               "emit non-private evaluation columns");
  app.add_option("--transcript", cfg.transcript_path,
                 "write trial 0 transcript as JSON lines");
  app.add_option("--mode", cfg.value_mode, "value mechanism mode");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate benchmark graphs");
  gen_cmd->add_option("kind", gen.kind, "gnp|planted|planted-directed")
      ->required();
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--pin", gen.pin);
  gen_cmd->add_option("--pout", gen.pout);
  gen_cmd->add_option("--p", gen.p);
  gen_cmd->add_option("--s-size", gen.s_size);
  gen_cmd->add_option("--t-size", gen.t_size);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out)->required();

  SummaryOptions sum;
  CLI::App* sum_cmd = app.add_subcommand("summarize", "aggregate result CSV");
  sum_cmd->add_option("--in", sum.input)->required();
  sum_cmd->add_option("--lambda-ref", sum.lambda_ref,
                      "reference density for success rates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError&) {
    std::cerr << "bad arguments; see --help\n";
    return kExitBadArgs;
  }

  try {
    if (gen_cmd->parsed()) return gen_main(gen);
    if (sum_cmd->parsed()) return summarize_main(sum);
    if (cfg.algo.empty()) {
      std::cerr << "--algo is required (or use a subcommand)\n";
      return kExitBadArgs;
    }
    return run_main(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadArgs;
  } catch (const dsg::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "infeasible privacy parameters: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
}
