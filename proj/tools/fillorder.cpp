#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "fillorder/decorrelated_ordering.hpp"
#include "fillorder/exact_mindeg.hpp"
#include "fillorder/fill_oracle.hpp"
#include "fillorder/generators.hpp"
#include "fillorder/graph_io.hpp"
#include "fillorder/local_estimator.hpp"

using namespace fillorder;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr std::size_t kVerifyLimit = 2000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("FILLORDER_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t pos = 0;
    std::uint64_t s = std::stoull(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument("trailing");
    return s;
  } catch (const std::exception&) {
    throw UsageError("FILLORDER_SEED is not an unsigned integer");
  }
}

struct InputOptions {
  std::string path;
  std::string format;  // empty: from the extension
  std::string base = "auto";
};

GraphFormat resolve_format(const InputOptions& in) {
  if (!in.format.empty()) return parse_graph_format(in.format);
  const std::string& p = in.path;
  return p.size() >= 4 && p.compare(p.size() - 4, 4, ".mtx") == 0 ? GraphFormat::MatrixMarket : GraphFormat::EdgeList;
}

IndexBase resolve_base(const std::string& b) {
  if (b == "auto") return IndexBase::Auto;
  if (b == "0") return IndexBase::Zero;
  if (b == "1") return IndexBase::One;
  throw UsageError("--index-base must be auto, 0 or 1");
}

StaticGraph load_input(const InputOptions& in) {
  std::ifstream f(in.path);
  if (!f) throw ParseError("cannot open " + in.path);
  return load_graph(f, resolve_format(in), resolve_base(in.base));
}

json input_json(const InputOptions& in, const StaticGraph& g) {
  return json{{"path", in.path},
              {"format", resolve_format(in) == GraphFormat::MatrixMarket ? "mtx" : "edges"},
              {"n", g.n()},
              {"m", g.m()}};
}

std::int64_t label_of(const StaticGraph& g, Vertex v) { return g.labels().empty() ? v : g.labels()[v]; }

Vertex vertex_of(const StaticGraph& g, std::int64_t label) {
  if (g.labels().empty()) {
    if (label < 0 || static_cast<std::size_t>(label) >= g.n()) throw UsageError("unknown vertex " + std::to_string(label));
    return static_cast<Vertex>(label);
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.labels()[v] == label) return v;
  throw UsageError("unknown vertex " + std::to_string(label));
}

void emit(const json& j, const std::string& output) {
  std::string text = j.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw ParseError("cannot write " + output);
  f << text;
}

// Sum over steps of the pivot's fill degree, less the original edges.
std::uint64_t total_fill_of(const StaticGraph& g, const std::vector<Vertex>& order) {
  ComponentGraph cg(g);
  std::uint64_t filled = 0;
  for (Vertex v : order) {
    filled += cg.fill_degree(v);
    cg.pivot(v);
  }
  return filled - g.m();
}

// ---------------------------------------------------------------- order

struct OrderOptions {
  InputOptions in;
  std::string algorithm;
  double epsilon = 0.5;
  std::size_t delta = 0;
  std::uint64_t seed = 0;
  std::size_t sketch_count = 0;
  double estimator_epsilon = 0;
  int trim_exponent = 0;
  bool verify = false;
  bool timing = false;
  std::string output;
};

int run_order(const OrderOptions& o) {
  StaticGraph g = load_input(o.in);
  if (g.n() == 0) throw UsageError("the input graph has no vertices");
  if (o.verify && g.n() > kVerifyLimit)
    throw UsageError("--verify replays every step densely and is limited to n <= " + std::to_string(kVerifyLimit) +
                     " (this graph has n = " + std::to_string(g.n()) + ")");

  json params;
  OrderingResult res;
  if (o.algorithm == "bruteforce") {
    res = exact_mindeg_bruteforce(g);
  } else if (o.algorithm == "delta-capped") {
    std::size_t delta = o.delta ? o.delta : g.n();
    params["delta"] = delta;
    params["seed"] = o.seed;
    res = delta_capped_min_degree(g, delta, o.seed);
  } else if (o.algorithm == "output-sensitive") {
    params["seed"] = o.seed;
    res = output_sensitive_min_degree(g, o.seed);
  } else {
    ApproxOrderingOptions ao;
    ao.epsilon = o.epsilon;
    ao.sketch_count = o.sketch_count;
    ao.estimator_epsilon = o.estimator_epsilon;
    ao.trim_exponent = o.trim_exponent;
    params["epsilon"] = o.epsilon;
    params["seed"] = o.seed;
    params["sketch_count"] = o.sketch_count;
    params["estimator_epsilon"] = o.estimator_epsilon;
    params["trim_exponent"] = o.trim_exponent;
    res = approx_min_degree_sequence(g, o.seed, ao);
  }
  if (params.empty()) params = json::object();

  json order = json::array();
  for (Vertex v : res.order) order.push_back(label_of(g, v));
  json report{{"schema", 1},
              {"command", "order"},
              {"input", input_json(o.in, g)},
              {"algorithm", res.algorithm},
              {"parameters", params},
              {"order", order},
              {"reported_degree", res.reported_degree},
              {"total_fill", total_fill_of(g, res.order)},
              {"counters", res.counters}};

  bool ok = true;
  if (o.verify) {
    const bool exact = o.algorithm != "approx";
    const double factor = exact ? 1.0 : 1.0 + o.epsilon;
    EliminationReplay rep(g);
    json steps = json::array();
    std::size_t bad = 0;
    for (std::size_t t = 0; t < res.order.size(); ++t) {
      Vertex v = res.order[t];
      std::size_t truth = rep.degree(v), mn = rep.min_degree();
      bool step_ok = static_cast<double>(truth) <= factor * static_cast<double>(mn);
      if (exact) step_ok = step_ok && res.reported_degree[t] == static_cast<std::int64_t>(truth);
      bad += !step_ok;
      steps.push_back(json{{"vertex", label_of(g, v)},
                           {"reported_degree", res.reported_degree[t]},
                           {"true_degree", truth},
                           {"min_degree", mn},
                           {"ok", step_ok}});
      rep.pivot(v);
    }
    ok = bad == 0;
    report["verify"] = json{{"factor", factor}, {"failed_steps", bad}, {"passed", ok}, {"steps", steps}};
  }
  if (o.timing) report["wall_time"] = res.wall_time;
  emit(report, o.output);
  if (!ok) throw VerifyFailure("verification failed");
  return 0;
}

// ---------------------------------------------------------------- estimate

struct EstimateOptions {
  InputOptions in;
  std::int64_t vertex = 0;
  std::string eliminate;
  double epsilon = 0.25;
  std::uint64_t seed = 0;
  std::string estimator = "fast";
  std::string output;
};

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--eliminate expects comma-separated vertex ids, got '" + item + "'");
    }
  }
  return out;
}

int run_estimate(const EstimateOptions& o) {
  StaticGraph g = load_input(o.in);
  ComponentGraph cg(g);
  std::vector<char> elim(g.n(), 0);
  json eliminated = json::array();
  for (std::int64_t label : parse_list(o.eliminate)) {
    Vertex v = vertex_of(g, label);
    if (elim[v]) throw UsageError("vertex " + std::to_string(label) + " eliminated twice");
    cg.pivot(v);
    elim[v] = 1;
    eliminated.push_back(label);
  }
  Vertex u = vertex_of(g, o.vertex);
  if (elim[u]) throw UsageError("vertex " + std::to_string(o.vertex) + " is eliminated");
  if (!(o.epsilon > 0)) throw UsageError("--epsilon must be positive");

  Rng rng(derive_seed(o.seed, "estimate"));
  EstimatorStats st;
  double est;
  if (o.estimator == "slow") {
    FillNeighborhoodMatrix a(cg, u);
    est = estimate_nonzero_columns_slow(a, o.epsilon, rng, &st);
  } else {
    est = estimate_fill_1degree(cg, u, o.epsilon, rng, &st);
  }
  const std::size_t truth = fill_degree_bruteforce(g, elim, u) + 1;
  json report{{"schema", 1},
              {"command", "estimate"},
              {"input", input_json(o.in, g)},
              {"parameters", {{"vertex", o.vertex}, {"eliminated", eliminated}, {"epsilon", o.epsilon},
                              {"seed", o.seed}, {"estimator", o.estimator}}},
              {"true", truth},
              {"estimate", est},
              {"relative_error", (est - static_cast<double>(truth)) / static_cast<double>(truth)},
              {"draws", st.draws},
              {"oracle_queries", st.oracle_queries},
              {"row_samples", st.row_samples}};
  emit(report, o.output);
  return 0;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::string model;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<std::size_t> m;
  std::size_t d = 4;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::string format = "edges";
  std::string output;
};

int run_gen(const GenOptions& o) {
  Rng rng(derive_seed(o.seed, "gen"));
  StaticGraph g;
  if (o.model == "grid2d") {
    g = grid2d_graph(o.n);
  } else if (o.model == "gnp") {
    if (o.p && o.m) throw UsageError("give either --p or --m, not both");
    if (o.m)
      g = gnm_graph(o.n, *o.m, rng);
    else if (o.p)
      g = gnp_graph(o.n, *o.p, rng);
    else
      throw UsageError("gnp needs --p or --m");
  } else {
    std::vector<std::vector<std::uint8_t>> vecs(o.n, std::vector<std::uint8_t>(o.d));
    for (auto& v : vecs)
      for (auto& b : v) b = rng.bernoulli(o.density);
    g = ov_hard_graph(vecs).graph;
  }
  std::ostringstream out;
  if (o.format == "mtx")
    write_matrix_market(out, g);
  else
    write_edge_list(out, g);
  if (o.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(o.output);
    if (!f) throw ParseError("cannot write " + o.output);
    f << out.str();
  }
  return 0;
}

// ---------------------------------------------------------------- demo

struct DemoOptions {
  std::string mode = "fixed";
  std::size_t n = 4096;
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  std::optional<std::size_t> secret_size;
  std::string output;
};

int run_demo(const DemoOptions& o) {
  Rng rng(derive_seed(o.seed, "adversary"));
  AdversaryMode mode = o.mode == "fixed" ? AdversaryMode::FixedSketch : AdversaryMode::FreshSketch;
  AdversaryReport r = adversary_demo(o.n, o.epsilon, mode, rng, o.secret_size);
  json report{{"schema", 1},
              {"command", "demo adversary"},
              {"parameters", {{"mode", to_string(mode)}, {"n", o.n}, {"epsilon", o.epsilon}, {"seed", o.seed}}},
              {"secret_size", r.secret_size},
              {"final_size", r.final_size},
              {"deletions", r.deletions},
              {"recovered_fraction", r.recovered_fraction},
              {"equals_secret", r.equals_secret},
              {"queries", r.queries}};
  emit(report, o.output);
  return 0;
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "Graph file")->required();
  cmd->add_option("--format", in.format, "mtx or edges (default: from the extension)")
      ->check(CLI::IsMember({"mtx", "edges"}));
  cmd->add_option("--index-base", in.base, "Edge-list label base: auto, 0 or 1")
      ->check(CLI::IsMember({"auto", "0", "1"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-degree elimination orderings"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  OrderOptions oo;
  oo.seed = seed;
  CLI::App* order = app.add_subcommand("order", "Compute an elimination ordering");
  add_input(order, oo.in);
  order->add_option("--algorithm", oo.algorithm, "bruteforce, delta-capped, output-sensitive or approx")
      ->required()
      ->check(CLI::IsMember({"bruteforce", "delta-capped", "output-sensitive", "approx"}));
  order->add_option("--epsilon", oo.epsilon, "Approximation factor for approx, in (0, 0.5]");
  order->add_option("--delta", oo.delta, "Degree cap for delta-capped (default n)");
  order->add_option("--seed", oo.seed, "Master seed (default $FILLORDER_SEED or 0)");
  order->add_option("--sketch-count", oo.sketch_count, "approx: number of sketch copies (0: default)");
  order->add_option("--estimator-epsilon", oo.estimator_epsilon, "approx: estimator accuracy (0: default)");
  order->add_option("--trim-exponent", oo.trim_exponent, "approx: candidate trim exponent (0: default 7)");
  order->add_flag("--verify", oo.verify, "Replay every step against brute-force degrees (n <= 2000)");
  order->add_flag("--timing", oo.timing, "Include wall time in the report");
  order->add_option("--output", oo.output, "Write the report here instead of stdout");

  EstimateOptions eo;
  eo.seed = seed;
  CLI::App* estimate = app.add_subcommand("estimate", "Estimate a fill 1-degree after a partial elimination");
  add_input(estimate, eo.in);
  estimate->add_option("--vertex", eo.vertex, "Vertex id as written in the input")->required();
  estimate->add_option("--eliminate", eo.eliminate, "Comma-separated vertex ids to pivot first, in order");
  estimate->add_option("--epsilon", eo.epsilon, "Accuracy");
  estimate->add_option("--seed", eo.seed, "Master seed");
  estimate->add_option("--estimator", eo.estimator, "fast or slow")->check(CLI::IsMember({"fast", "slow"}));
  estimate->add_option("--output", eo.output, "Write the report here instead of stdout");

  GenOptions go;
  go.seed = seed;
  CLI::App* gen = app.add_subcommand("gen", "Generate a test graph");
  gen->add_option("--model", go.model, "gnp, grid2d or ov")->required()->check(CLI::IsMember({"gnp", "grid2d", "ov"}));
  gen->add_option("--n", go.n, "Vertices (ov: vectors)")->required();
  gen->add_option("--p", go.p, "gnp edge probability");
  gen->add_option("--m", go.m, "gnp: exact edge count instead of --p");
  gen->add_option("--d", go.d, "ov: dimension");
  gen->add_option("--density", go.density, "ov: probability of a 1 bit");
  gen->add_option("--seed", go.seed, "Master seed");
  gen->add_option("--format", go.format, "edges or mtx")->check(CLI::IsMember({"edges", "mtx"}));
  gen->add_option("--output", go.output, "Write here instead of stdout");

  DemoOptions dopt;
  dopt.seed = seed;
  CLI::App* demo = app.add_subcommand("demo", "Demonstrations");
  demo->require_subcommand(1);
  CLI::App* adversary = demo->add_subcommand("adversary", "Adaptive attack on a toy cardinality sketch");
  adversary->add_option("--mode", dopt.mode, "fixed or fresh")->check(CLI::IsMember({"fixed", "fresh"}));
  adversary->add_option("--n", dopt.n, "Universe size (at least 16)");
  adversary->add_option("--epsilon", dopt.epsilon, "Sketch accuracy");
  adversary->add_option("--seed", dopt.seed, "Master seed");
  adversary->add_option("--secret-size", dopt.secret_size, "Override the secret size");
  adversary->add_option("--output", dopt.output, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (order->parsed()) return run_order(oo);
    if (estimate->parsed()) return run_estimate(eo);
    if (gen->parsed()) return run_gen(go);
    if (adversary->parsed()) return run_demo(dopt);
  } catch (const VerifyFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
