#include <CLI11.hpp>
#include <array>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "modal_barrier/csv.hpp"
#include "modal_barrier/distributed.hpp"
#include "modal_barrier/dynamics.hpp"
#include "modal_barrier/epidemic.hpp"
#include "modal_barrier/errors.hpp"
#include "modal_barrier/graph.hpp"
#include "modal_barrier/partition_metrics.hpp"
#include "modal_barrier/resistance.hpp"
#include "modal_barrier/spectral.hpp"

namespace mb = modal_barrier;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct IoOptions {
  std::string graph_path;
  std::string format = "auto";
  std::string output_path;   // empty -> stdout
  std::string sidecar_path;  // empty -> output_path + ".meta.json" when output given
};

void add_io_options(CLI::App* cmd, IoOptions& io, bool needs_graph = true) {
  if (needs_graph)
    cmd->add_option("--graph", io.graph_path, "edge-list file (SNAP-compatible)")->required();
  cmd->add_option("--format", io.format, "edge-list format: auto|weighted|unweighted")
      ->check(CLI::IsMember({"auto", "weighted", "unweighted"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", io.output_path, "output file (default: stdout)");
  cmd->add_option("--sidecar", io.sidecar_path, "sidecar JSON path (default: <output>.meta.json)");
}

mb::EdgeListFormat parse_format(const std::string& s) {
  if (s == "weighted") return mb::EdgeListFormat::weighted;
  if (s == "unweighted") return mb::EdgeListFormat::unweighted;
  return mb::EdgeListFormat::auto_detect;
}

mb::Graph load_graph(const IoOptions& io) {
  std::ifstream in(io.graph_path);
  if (!in) throw mb::IoError("cannot open graph file '" + io.graph_path + "'");
  mb::Graph g = mb::Graph::from_edge_list(in, parse_format(io.format));
  if (g.isolated_vertex_count() > 0)
    std::cerr << "modal-barrier: note: graph has " << g.isolated_vertex_count()
              << " isolated vertices; diffusion never reaches them\n";
  return g;
}

mb::EdgeVector load_edge_file(const std::string& path, const mb::Graph& g, mb::EdgeVectorKind kind) {
  std::ifstream in(path);
  if (!in) throw mb::IoError("cannot open edge file '" + path + "'");
  return mb::read_edge_values_csv(in, g, kind);
}

void emit(const IoOptions& io, const std::string& body, const json& sidecar) {
  if (io.output_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(io.output_path);
    if (!out) throw mb::IoError("cannot open output file '" + io.output_path + "'");
    out << body;
    if (!out) throw mb::IoError("failed writing output file '" + io.output_path + "'");
  }
  std::string sidecar_path = io.sidecar_path;
  if (sidecar_path.empty() && !io.output_path.empty()) sidecar_path = io.output_path + ".meta.json";
  if (!sidecar_path.empty()) {
    std::ofstream out(sidecar_path);
    if (!out) throw mb::IoError("cannot open sidecar file '" + sidecar_path + "'");
    out << sidecar.dump(2) << '\n';
  }
}

json base_sidecar(const std::string& command, const IoOptions& io) {
  return json{{"tool", "modal-barrier"},
              {"version", kVersion},
              {"command", command},
              {"config", json{{"graph", io.graph_path}, {"format", io.format}}}};
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  IoOptions io;
  int max_q = 0;  // 0 -> default
  bool full = false;
};

void run_spectrum(const SpectrumArgs& a) {
  const mb::Graph g = load_graph(a.io);
  const mb::Spectrum s = mb::eigendecompose(mb::laplacian(g));
  const int max_q = a.max_q > 0 ? a.max_q : mb::default_max_q(g.vertex_count());
  const int rows = a.full ? s.n() : std::min(s.n(), max_q + 1);
  std::ostringstream body;
  body << "index,eigenvalue\n";
  for (int i = 0; i < rows; ++i) body << i << ',' << mb::format_double(s.eigenvalues[i]) << '\n';
  json sc = base_sidecar("spectrum", a.io);
  sc["config"]["max_q"] = max_q;
  sc["config"]["full"] = a.full;
  emit(a.io, body.str(), sc);
}

// ---------------------------------------------------------------- detect-q

void run_detect_q(const SpectrumArgs& a) {
  const mb::Graph g = load_graph(a.io);
  const mb::Spectrum s = mb::eigendecompose(mb::laplacian(g));
  const int max_q = a.max_q > 0 ? a.max_q : mb::default_max_q(g.vertex_count());
  const mb::QDetection d = mb::detect_q(s, max_q);
  std::ostringstream body;
  body << "q,gap_score\n" << d.q << ',' << mb::format_double(d.gap_score) << '\n';
  json sc = base_sidecar("detect-q", a.io);
  sc["config"]["max_q"] = max_q;
  sc["result"] = json{{"q", d.q}, {"gap_score", d.gap_score}};
  emit(a.io, body.str(), sc);
}

// -------------------------------------------------------------- resistance

struct ResistanceArgs {
  IoOptions io;
  std::string method = "exact";
  int q = 0;  // 0 -> detect
  double epsilon = 0.1;
  int p = -1;  // -1 -> ceil(n/2)
  double prune = 0.0;
  bool paper_literal = false;
};

void add_resistance_options(CLI::App* cmd, ResistanceArgs& a, bool with_method_default) {
  auto* method = cmd->add_option("--method", a.method, "exact|approx-i|approx-ii|distributed")
                     ->check(CLI::IsMember({"exact", "approx-i", "approx-ii", "distributed"}));
  if (with_method_default)
    method->capture_default_str();
  else
    method->required();
  cmd->add_option("--q", a.q, "mode count for the exact method (default: detected from the eigenvalue gaps)");
  cmd->add_option("--epsilon", a.epsilon, "resolvent shift for approx-i/approx-ii/distributed")->capture_default_str();
  cmd->add_option("--p", a.p, "Neumann truncation order (default: ceil(n/2))");
  cmd->add_option("--prune", a.prune, "drop row entries below this magnitude (distributed; 0 = off)")
      ->capture_default_str();
  cmd->add_flag("--paper-literal", a.paper_literal,
                "use the printed closing formula of the distributed algorithm (comparison only)");
}

mb::EdgeVector compute_resistance(const mb::Graph& g, const ResistanceArgs& a, json& outputs) {
  if (a.method == "exact") {
    int q = a.q;
    const mb::Spectrum s = mb::eigendecompose(mb::laplacian(g));
    if (q <= 0) {
      const mb::QDetection d = mb::detect_q(s, mb::default_max_q(g.vertex_count()));
      q = d.q;
      std::cerr << "modal-barrier: note: detected q = " << q << " (gap score " << d.gap_score << ")\n";
      outputs["gap_score"] = d.gap_score;
    }
    outputs["q"] = q;
    return mb::aggregated_resistance_exact(g, q, s);
  }
  if (a.method == "approx-i") {
    return mb::aggregated_resistance_approx1(g, a.epsilon);
  }
  const int p = a.p >= 0 ? a.p : (g.vertex_count() + 1) / 2;
  outputs["p"] = p;
  if (a.method == "approx-ii") {
    return mb::aggregated_resistance_approx2(g, a.epsilon, p);
  }
  mb::DistributedOptions opt;
  opt.prune_threshold = a.prune;
  opt.paper_literal_formula = a.paper_literal;
  auto [r, stats] = mb::run_distributed(g, a.epsilon, p, opt);
  outputs["stats"] = json{{"rounds", stats.rounds},
                          {"messages", stats.messages},
                          {"final_messages", stats.final_messages},
                          {"entries_transferred", stats.entries_transferred},
                          {"max_row_entries", stats.max_row_entries},
                          {"nonneighbor_reads", stats.nonneighbor_reads}};
  return r;
}

void run_resistance(const ResistanceArgs& a) {
  const mb::Graph g = load_graph(a.io);
  json sc = base_sidecar("resistance", a.io);
  sc["config"]["method"] = a.method;
  sc["config"]["epsilon"] = a.epsilon;
  sc["config"]["prune"] = a.prune;
  sc["config"]["paper_literal"] = a.paper_literal;
  json outputs = json::object();
  const mb::EdgeVector r = compute_resistance(g, a, outputs);
  sc["outputs"] = outputs;
  std::ostringstream body;
  mb::write_edge_values_csv(body, g, r, "resistance");
  emit(a.io, body.str(), sc);
}

// ----------------------------------------------------------------- weights

struct WeightsArgs {
  IoOptions io;
  std::string mode;
  double epsilon_b = 0.01;
  std::uint64_t seed = 0;
  std::string resistance_file;
  ResistanceArgs resistance;
};

mb::EdgeVector compute_weights(const mb::Graph& g, const WeightsArgs& a, json& outputs) {
  if (a.mode == "unit") return mb::unit_weights(g);
  mb::EdgeVector r = a.resistance_file.empty()
                         ? compute_resistance(g, a.resistance, outputs)
                         : load_edge_file(a.resistance_file, g, mb::EdgeVectorKind::resistance);
  mb::EdgeVector barrier = mb::barrier_weights(r, a.epsilon_b);
  if (a.mode == "barrier") return barrier;
  return mb::shuffle_weights(barrier, a.seed);
}

void run_weights(const WeightsArgs& a) {
  const mb::Graph g = load_graph(a.io);
  json sc = base_sidecar("weights", a.io);
  sc["config"]["mode"] = a.mode;
  sc["config"]["epsilon_b"] = a.epsilon_b;
  sc["config"]["seed"] = a.seed;
  if (!a.resistance_file.empty()) sc["config"]["resistance_file"] = a.resistance_file;
  json outputs = json::object();
  const mb::EdgeVector w = compute_weights(g, a, outputs);
  sc["outputs"] = outputs;
  std::ostringstream body;
  mb::write_edge_values_csv(body, g, w, "weight");
  emit(a.io, body.str(), sc);
}

// ----------------------------------------------------------------- diffuse

struct DiffuseArgs {
  IoOptions io;
  std::string weights_file;
  std::int64_t start = 0;
  std::int64_t target = 0;
  double gamma = -1.0;  // <0 -> 0.5/n
  double kappa = -1.0;  // <0 -> default
  int steps = 0;
};

void run_diffuse(const DiffuseArgs& a) {
  const mb::Graph g = load_graph(a.io);
  const mb::EdgeVector w =
      a.weights_file.empty() ? mb::unit_weights(g) : load_edge_file(a.weights_file, g, mb::EdgeVectorKind::weight);
  const int start = g.vertex_of_label(a.start);
  const int target = g.vertex_of_label(a.target);
  const double kappa = a.kappa > 0.0 ? a.kappa : mb::default_kappa(g, w);
  const double gamma = a.gamma >= 0.0 ? a.gamma : 0.5 / g.vertex_count();

  const mb::DiffusionRun run = mb::simulate_diffusion(g, w, start, kappa, a.steps, {target});
  std::vector<double> series(a.steps + 1);
  for (int t = 0; t <= a.steps; ++t) series[t] = run.value(t, target);
  const auto crossing = mb::threshold_crossing_time(run, target, gamma);

  std::ostringstream body;
  mb::write_series_csv(body, {"step", "x_target"}, {series});
  json sc = base_sidecar("diffuse", a.io);
  sc["config"]["weights_file"] = a.weights_file;
  sc["config"]["start"] = a.start;
  sc["config"]["target"] = a.target;
  sc["config"]["kappa"] = kappa;
  sc["config"]["gamma"] = gamma;
  sc["config"]["steps"] = a.steps;
  sc["outputs"]["crossing_time"] = crossing ? json(*crossing) : json(nullptr);
  emit(a.io, body.str(), sc);
}

// ---------------------------------------------------------------- epidemic

struct EpidemicArgs {
  IoOptions io;
  std::string weights_file;
  mb::EpidemicParams params;
  std::int64_t patient_zero = -1;  // -1 -> random
  std::string count = "all";
};

void run_epidemic(const EpidemicArgs& a) {
  const mb::Graph g = load_graph(a.io);
  const mb::EdgeVector w =
      a.weights_file.empty() ? mb::unit_weights(g) : load_edge_file(a.weights_file, g, mb::EdgeVectorKind::weight);
  mb::EpidemicParams params = a.params;
  params.count_contagious_only = a.count == "contagious-only";

  std::vector<double> curve;
  if (a.patient_zero >= 0) {
    curve = mb::simulate_epidemic(g, w, params, g.vertex_of_label(a.patient_zero));
  } else {
    curve = mb::monte_carlo_epidemic(g, w, params);
  }

  std::ostringstream body;
  mb::write_series_csv(body, {"day", "mean_infected"}, {curve});
  json sc = base_sidecar("epidemic", a.io);
  sc["config"]["weights_file"] = a.weights_file;
  sc["config"]["pa"] = params.pa;
  sc["config"]["days"] = params.horizon;
  sc["config"]["runs"] = params.runs;
  sc["config"]["seed"] = params.seed;
  sc["config"]["count"] = a.count;
  sc["config"]["patient_zero"] = a.patient_zero >= 0 ? json(a.patient_zero) : json("random");
  emit(a.io, body.str(), sc);
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  IoOptions io;
  std::string partition_file;
  std::string graph2_path;
};

std::string report_row(const mb::BoundReport& r) {
  std::ostringstream row;
  row << r.proposition << '\t';
  if (r.vacuous) {
    row << "-\t-\t-\tVACUOUS (" << r.note << ")";
  } else {
    row << mb::format_double(r.lhs) << '\t' << mb::format_double(r.rhs) << '\t' << mb::format_double(r.slack) << '\t'
        << (r.satisfied ? "SATISFIED" : "VIOLATED");
  }
  row << '\n';
  return row.str();
}

void run_verify(const VerifyArgs& a) {
  const mb::Graph g = load_graph(a.io);
  std::ifstream pin(a.partition_file);
  if (!pin) throw mb::IoError("cannot open partition file '" + a.partition_file + "'");
  const mb::Partition p = mb::Partition::from_stream(pin, g);

  // Without a second graph, prop3 degenerates to comparing g with itself.
  mb::Graph g2 = g;
  if (!a.graph2_path.empty()) {
    IoOptions io2 = a.io;
    io2.graph_path = a.graph2_path;
    g2 = load_graph(io2);
  }

  const mb::Spectrum s = mb::eigendecompose(mb::laplacian(g));
  const std::array<mb::BoundReport, 3> reports = {mb::check_prop1(g, p, s), mb::check_prop2(g, p, s),
                                                  mb::check_prop3(g, g2, p)};
  std::ostringstream body;
  body << "proposition\tlhs\trhs\tslack\tstatus\n";
  json rows = json::array();
  for (const auto& r : reports) {
    body << report_row(r);
    rows.push_back(json{{"proposition", r.proposition},
                        {"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"slack", r.slack},
                        {"satisfied", r.satisfied},
                        {"vacuous", r.vacuous},
                        {"note", r.note}});
  }
  json sc = base_sidecar("verify", a.io);
  sc["config"]["partition_file"] = a.partition_file;
  sc["config"]["graph2"] = a.graph2_path;
  sc["outputs"]["reports"] = rows;
  emit(a.io, body.str(), sc);
}

// ----------------------------------------------------------------- compare

struct CompareArgs {
  IoOptions io;
  std::string task;
  ResistanceArgs resistance;
  double epsilon_b = 0.01;
  std::uint64_t shuffle_seed = 0;
  // diffusion
  std::int64_t start = -1;
  std::int64_t target = -1;
  double gamma = -1.0;
  double kappa = -1.0;
  int steps = 0;
  // epidemic
  mb::EpidemicParams params;
};

void run_compare(const CompareArgs& a) {
  const mb::Graph g = load_graph(a.io);
  json sc = base_sidecar("compare", a.io);
  json outputs = json::object();
  const mb::EdgeVector unit = mb::unit_weights(g);
  const mb::EdgeVector resistance = compute_resistance(g, a.resistance, outputs);
  const mb::EdgeVector barrier = mb::barrier_weights(resistance, a.epsilon_b);
  const mb::EdgeVector shuffled = mb::shuffle_weights(barrier, a.shuffle_seed);
  sc["config"]["task"] = a.task;
  sc["config"]["epsilon_b"] = a.epsilon_b;
  sc["config"]["shuffle_seed"] = a.shuffle_seed;

  std::ostringstream body;
  if (a.task == "diffusion") {
    if (a.start < 0 || a.target < 0 || a.steps <= 0)
      throw mb::ValidationError("compare --task diffusion requires --start, --target and --steps");
    const int start = g.vertex_of_label(a.start);
    const int target = g.vertex_of_label(a.target);
    // One kappa for all three schemes; the unit-weight bound is the
    // tightest since barrier/shuffled weights are at most 1.
    const double kappa = a.kappa > 0.0 ? a.kappa : mb::default_kappa(g, unit);
    const double gamma = a.gamma >= 0.0 ? a.gamma : 0.5 / g.vertex_count();
    sc["config"]["kappa"] = kappa;
    sc["config"]["gamma"] = gamma;
    sc["config"]["steps"] = a.steps;
    std::vector<std::vector<double>> series;
    json crossings = json::object();
    const std::array<std::pair<const char*, const mb::EdgeVector*>, 3> schemes = {
        std::make_pair("unit", &unit), std::make_pair("barrier", &barrier), std::make_pair("shuffled", &shuffled)};
    for (const auto& [name, w] : schemes) {
      const mb::DiffusionRun run = mb::simulate_diffusion(g, *w, start, kappa, a.steps, {target});
      std::vector<double> s(a.steps + 1);
      for (int t = 0; t <= a.steps; ++t) s[t] = run.value(t, target);
      series.push_back(std::move(s));
      const auto crossing = mb::threshold_crossing_time(run, target, gamma);
      crossings[name] = crossing ? json(*crossing) : json(nullptr);
    }
    mb::write_series_csv(body, {"step", "unit", "barrier", "shuffled"}, series);
    outputs["crossing_times"] = crossings;
  } else {
    std::vector<std::vector<double>> series;
    for (const mb::EdgeVector* w : {&unit, &barrier, &shuffled})
      series.push_back(mb::monte_carlo_epidemic(g, *w, a.params));
    sc["config"]["pa"] = a.params.pa;
    sc["config"]["days"] = a.params.horizon;
    sc["config"]["runs"] = a.params.runs;
    sc["config"]["seed"] = a.params.seed;
    mb::write_series_csv(body, {"day", "unit", "barrier", "shuffled"}, series);
  }
  sc["outputs"] = outputs;
  emit(a.io, body.str(), sc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral barrier weights for inter-cluster transmission control"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("modal-barrier ") + kVersion);

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian eigenvalues as CSV");
  add_io_options(spectrum_cmd, spectrum_args.io);
  spectrum_cmd->add_option("--max-q", spectrum_args.max_q, "row cap (default: min(n-1, 32))");
  spectrum_cmd->add_flag("--full", spectrum_args.full, "emit all n eigenvalues");

  SpectrumArgs detect_args;
  auto* detect_cmd = app.add_subcommand("detect-q", "pick the cluster count from eigenvalue gaps");
  add_io_options(detect_cmd, detect_args.io);
  detect_cmd->add_option("--max-q", detect_args.max_q, "largest candidate q (default: min(n-1, 32))");

  ResistanceArgs resistance_args;
  auto* resistance_cmd = app.add_subcommand("resistance", "per-edge resistance values");
  add_io_options(resistance_cmd, resistance_args.io);
  add_resistance_options(resistance_cmd, resistance_args, /*with_method_default=*/false);

  WeightsArgs weights_args;
  auto* weights_cmd = app.add_subcommand("weights", "barrier / shuffled / unit edge weights");
  add_io_options(weights_cmd, weights_args.io);
  weights_cmd->add_option("--mode", weights_args.mode, "barrier|shuffled|unit")
      ->check(CLI::IsMember({"barrier", "shuffled", "unit"}))
      ->required();
  weights_cmd->add_option("--epsilon-b", weights_args.epsilon_b, "barrier softness")->capture_default_str();
  weights_cmd->add_option("--seed", weights_args.seed, "shuffle seed")->capture_default_str();
  weights_cmd->add_option("--resistance-file", weights_args.resistance_file,
                          "per-edge resistance CSV (default: computed from the graph)");
  add_resistance_options(weights_cmd, weights_args.resistance, /*with_method_default=*/true);

  DiffuseArgs diffuse_args;
  auto* diffuse_cmd = app.add_subcommand("diffuse", "discrete diffusion from a start vertex");
  add_io_options(diffuse_cmd, diffuse_args.io);
  diffuse_cmd->add_option("--weights-file", diffuse_args.weights_file, "per-edge weight CSV (default: unit weights)");
  diffuse_cmd->add_option("--start", diffuse_args.start, "start vertex id")->required();
  diffuse_cmd->add_option("--target", diffuse_args.target, "target vertex id")->required();
  diffuse_cmd->add_option("--gamma", diffuse_args.gamma, "crossing threshold (default: 0.5/n)");
  diffuse_cmd->add_option("--kappa", diffuse_args.kappa, "step size (default: 0.1/max weighted degree)");
  diffuse_cmd->add_option("--steps", diffuse_args.steps, "number of steps")->required();

  EpidemicArgs epidemic_args;
  auto* epidemic_cmd = app.add_subcommand("epidemic", "stochastic epidemic simulation");
  add_io_options(epidemic_cmd, epidemic_args.io);
  epidemic_cmd->add_option("--weights-file", epidemic_args.weights_file, "per-edge weight CSV (default: unit weights)");
  epidemic_cmd->add_option("--pa", epidemic_args.params.pa, "base daily contagion probability")->capture_default_str();
  epidemic_cmd->add_option("--days", epidemic_args.params.horizon, "days to simulate")->capture_default_str();
  epidemic_cmd->add_option("--runs", epidemic_args.params.runs, "Monte Carlo run count")->capture_default_str();
  epidemic_cmd->add_option("--seed", epidemic_args.params.seed, "base seed")->capture_default_str();
  epidemic_cmd->add_option("--patient-zero", epidemic_args.patient_zero,
                           "fixed patient zero (default: uniform per run)");
  epidemic_cmd->add_option("--count", epidemic_args.count, "all|contagious-only")
      ->check(CLI::IsMember({"all", "contagious-only"}))
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "evaluate the proved bounds on a partition");
  add_io_options(verify_cmd, verify_args.io);
  verify_cmd->add_option("--partition-file", verify_args.partition_file, "'vertex_id cluster_id' lines")->required();
  verify_cmd->add_option("--graph2", verify_args.graph2_path,
                         "same-topology graph for the robustness bound (default: the graph itself)");

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand("compare", "unit vs barrier vs shuffled transmission");
  add_io_options(compare_cmd, compare_args.io);
  compare_cmd->add_option("--task", compare_args.task, "diffusion|epidemic")
      ->check(CLI::IsMember({"diffusion", "epidemic"}))
      ->required();
  add_resistance_options(compare_cmd, compare_args.resistance, /*with_method_default=*/true);
  compare_cmd->add_option("--epsilon-b", compare_args.epsilon_b, "barrier softness")->capture_default_str();
  compare_cmd->add_option("--shuffle-seed", compare_args.shuffle_seed, "shuffle seed")->capture_default_str();
  compare_cmd->add_option("--start", compare_args.start, "diffusion start vertex");
  compare_cmd->add_option("--target", compare_args.target, "diffusion target vertex");
  compare_cmd->add_option("--gamma", compare_args.gamma, "crossing threshold (default: 0.5/n)");
  compare_cmd->add_option("--kappa", compare_args.kappa, "step size (default: 0.1/max unit-weight degree)");
  compare_cmd->add_option("--steps", compare_args.steps, "diffusion steps");
  compare_cmd->add_option("--pa", compare_args.params.pa, "epidemic contagion probability")->capture_default_str();
  compare_cmd->add_option("--days", compare_args.params.horizon, "epidemic days")->capture_default_str();
  compare_cmd->add_option("--runs", compare_args.params.runs, "epidemic runs")->capture_default_str();
  compare_cmd->add_option("--seed", compare_args.params.seed, "epidemic seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (spectrum_cmd->parsed()) run_spectrum(spectrum_args);
    if (detect_cmd->parsed()) run_detect_q(detect_args);
    if (resistance_cmd->parsed()) run_resistance(resistance_args);
    if (weights_cmd->parsed()) run_weights(weights_args);
    if (diffuse_cmd->parsed()) run_diffuse(diffuse_args);
    if (epidemic_cmd->parsed()) run_epidemic(epidemic_args);
    if (verify_cmd->parsed()) run_verify(verify_args);
    if (compare_cmd->parsed()) run_compare(compare_args);
  } catch (const mb::ValidationError& e) {
    std::cerr << "modal-barrier: validation error: " << e.what() << '\n';
    return 1;
  } catch (const mb::IoError& e) {
    std::cerr << "modal-barrier: i/o error: " << e.what() << '\n';
    return 2;
  } catch (const mb::NumericError& e) {
    std::cerr << "modal-barrier: numeric error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "modal-barrier: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
