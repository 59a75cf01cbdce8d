#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gamedyn/catalog.h"
#include "gamedyn/chain_report.h"
#include "gamedyn/content.h"
#include "gamedyn/dot.h"
#include "gamedyn/equilibrium.h"
#include "gamedyn/game_io.h"
#include "gamedyn/plot.h"
#include "gamedyn/random_game.h"
#include "gamedyn/trapping.h"
#include "gamedyn/witness.h"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace gamedyn;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "gamedyn 0.1.0";

struct Common {
  std::string path;     // positional game file
  std::string catalog_name;
  uint64_t seed = 0;
  std::string out = ".";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("game", c.path, "game JSON file");
  cmd->add_option("--catalog", c.catalog_name,
                  "built-in game (mp, co, sd, dd, rps, inner_diamond, "
                  "outer_diamond, cmmp)");
  cmd->add_option("--seed", c.seed, "seed for all randomized steps");
  cmd->add_option("--out", c.out, "output directory");
}

Game load_target(const Common& c) {
  if (!c.catalog_name.empty() && !c.path.empty())
    throw std::invalid_argument("pass either a game file or --catalog, not both");
  if (!c.catalog_name.empty()) return catalog(c.catalog_name);
  if (!c.path.empty()) return load_game_file(c.path);
  throw std::invalid_argument("pass a game file or --catalog <name>");
}

std::string shape_string(const Game& g) {
  std::string s;
  for (int c : g.strategy_counts()) {
    if (!s.empty()) s += "x";
    s += std::to_string(c);
  }
  return s;
}

void write_text(const fs::path& path, const std::string& text) {
  fs::path dir = path.parent_path();
  if (!dir.empty()) fs::create_directories(dir);
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void write_manifest(const Common& c, const std::string& command,
                    ordered_json params, const std::vector<std::string>& outputs,
                    std::chrono::steady_clock::time_point start) {
  ordered_json m;
  m["command"] = command;
  m["version"] = kVersion;
  if (!c.catalog_name.empty()) params["catalog"] = c.catalog_name;
  if (!c.path.empty()) params["game"] = c.path;
  params["seed"] = c.seed;
  m["parameters"] = std::move(params);
  m["outputs"] = outputs;
  m["seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  write_text(fs::path(c.out) / (command + "_manifest.json"), m.dump(2) + "\n");
}

std::vector<int> parse_shape(const std::string& text) {
  std::vector<int> shape;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('x', pos);
    std::string part =
        text.substr(pos, next == std::string::npos ? next : next - pos);
    shape.push_back(std::stoi(part));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (shape.size() < 2)
    throw std::invalid_argument("shape needs at least two players, like 2x2");
  return shape;
}

int cmd_analyze(const Common& c, const std::string& dot_file) {
  auto start = std::chrono::steady_clock::now();
  Game g = load_target(c);
  ResponseGraph rg = build_response_graph(g);
  SCCDecomposition d = scc_decomposition(rg);
  bool strict = is_strict(g);

  std::cout << "game: " << g.name() << " (" << shape_string(g) << "), "
            << g.profile_count() << " profiles\n";
  std::cout << "strict: " << (strict ? "yes" : "no") << "\n";
  std::cout << "dominance survivors: "
            << format_subgame(g, iterated_strict_dominance(g)) << "\n";
  int sinks = int(d.sink_ids().size());
  std::cout << "components: " << d.components.size() << " (" << sinks
            << (sinks == 1 ? " sink)" : " sinks)") << "\n";
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    std::cout << "  component " << k << ": size " << d.components[k].size();
    if (d.is_sink[k]) {
      std::cout << ", sink";
      auto sub = component_is_subgame(rg, d.components[k]);
      if (sub)
        std::cout << ", subgame " << format_subgame(g, *sub);
      else
        std::cout << ", not a subgame";
      ComponentContent cc = content(rg, d.components[k]);
      std::cout << ", content boxes: " << cc.maximal_boxes.size();
    }
    std::cout << "\n";
  }
  std::cout << "preference potential (acyclic): " << (is_dag(rg) ? "yes" : "no")
            << "\n";
  if (strict) {
    std::vector<int> ne = pure_nash(rg, g);
    std::cout << "pure nash equilibria:";
    if (ne.empty()) std::cout << " none";
    for (int z : ne) {
      std::cout << " (";
      for (int p = 0; p < g.num_players(); ++p)
        std::cout << (p ? "," : "") << g.label(p, g.strategy_of(z, p));
      std::cout << ")";
    }
    std::cout << "\n";
  } else {
    std::cout << "pure nash equilibria: skipped (game is not strict)\n";
  }

  std::vector<std::string> outputs;
  if (!dot_file.empty()) {
    fs::path path = fs::path(c.out) / dot_file;
    write_text(path, response_graph_dot(rg, d));
    outputs.push_back(path.string());
    std::cout << "wrote " << path.string() << "\n";
  }
  write_manifest(c, "analyze", {{"dot", dot_file}}, outputs, start);
  return 0;
}

int cmd_simulate(const Common& c, const std::string& start_text, double time,
                 double dt, bool reverse, const std::string& csv_file) {
  auto start = std::chrono::steady_clock::now();
  Game g = load_target(c);
  State x0 = parse_mixed_profile(g, start_text);

  IntegratorConfig cfg;
  cfg.dt = dt;
  cfg.reverse = reverse;
  Trajectory tr = integrate(g, x0, time, cfg);

  fs::path path = fs::path(c.out) / csv_file;
  write_text(path, trajectory_csv(g, tr));

  std::cout << "game: " << g.name() << ", t = " << format_double(time)
            << ", dt = " << format_double(dt)
            << (reverse ? ", reversed" : "") << "\n";
  std::cout << "endpoint: " << format_mixed_profile(g, tr.endpoint()) << "\n";
  std::cout << "simplex drift: " << format_double(tr.max_drift) << "\n";

  // constant of motion for square zero-sum games with an interior equilibrium
  std::string kl = "n/a";
  if (g.num_players() == 2 &&
      g.strategy_counts()[0] == g.strategy_counts()[1] &&
      g.strategy_counts()[0] <= 4 && is_strict(g)) {
    bool zero_sum = true;
    for (int z = 0; z < g.profile_count() && zero_sum; ++z)
      zero_sum = g.payoff(z, 0) + g.payoff(z, 1) == 0.0;
    if (zero_sum) {
      if (auto eq = zero_sum_interior_equilibrium(g)) {
        double base = kl_divergence_sum(g, *eq, tr.states.front());
        double drift = 0.0;
        for (const State& x : tr.states)
          drift = std::max(drift, std::abs(kl_divergence_sum(g, *eq, x) - base));
        kl = format_double(drift);
      }
    }
  }
  std::cout << "kl drift: " << kl << "\n";

  write_manifest(c, "simulate",
                 {{"start", start_text},
                  {"time", time},
                  {"dt", dt},
                  {"reverse", reverse},
                  {"csv", csv_file}},
                 {path.string()}, start);
  return 0;
}

int cmd_chain(const Common& c, int kappa, double horizon, double dt,
              double padding, const std::string& json_file,
              const std::string& dot_file) {
  auto start = std::chrono::steady_clock::now();
  Game g = load_target(c);
  BoxMapConfig cfg;
  cfg.horizon = horizon;
  cfg.dt = dt;
  cfg.padding = padding;
  cfg.seed = c.seed;
  ChainReport rep = sink_chain_estimate(g, kappa, cfg);

  std::cout << "game: " << g.name() << ", kappa = " << kappa << ", boxes = "
            << rep.boxes << ", arcs = " << rep.arcs << "\n";
  std::cout << "morse sets: " << rep.morse.sets.size() << " (sinks: "
            << rep.morse.sink_ids().size() << ")\n";
  for (std::size_t k = 0; k < rep.morse.sets.size(); ++k)
    std::cout << "  M" << k << ": " << rep.morse.sets[k].size() << " boxes"
              << (rep.morse.is_sink[k] ? ", sink" : "") << "\n";

  fs::path path = fs::path(c.out) / json_file;
  write_text(path, chain_report_json(rep));
  std::vector<std::string> outputs{path.string()};
  if (!dot_file.empty()) {
    fs::path dpath = fs::path(c.out) / dot_file;
    write_text(dpath, morse_graph_dot(rep));
    outputs.push_back(dpath.string());
  }
  write_manifest(c, "chain",
                 {{"kappa", kappa},
                  {"horizon", horizon},
                  {"dt", dt},
                  {"padding", padding},
                  {"json", json_file},
                  {"dot", dot_file}},
                 outputs, start);
  return 0;
}

int cmd_certify(const Common& c, const std::string& subgame_text, int samples,
                const std::string& json_file) {
  auto start = std::chrono::steady_clock::now();
  Game g = load_target(c);
  SubgameSpec y = parse_subgame(g, subgame_text);
  TrappingCertificate cert = trapping_certificate(g, y, samples, c.seed + 1);

  std::cout << "game: " << g.name() << ", subgame " << format_subgame(g, y)
            << "\n";
  std::cout << "radius: " << format_double(cert.radius) << "\n";
  std::cout << "audit: " << cert.audit.samples << " samples, max outside velocity "
            << format_double(cert.audit.max_velocity) << "\n";

  fs::path path = fs::path(c.out) / json_file;
  write_text(path, certificate_json(g, cert));
  write_manifest(c, "certify",
                 {{"subgame", subgame_text},
                  {"samples", samples},
                  {"json", json_file}},
                 {path.string()}, start);
  return 0;
}

int cmd_scan(const Common& c, const std::string& shape_text, int count,
             int kappa, const std::string& cls_text) {
  auto start = std::chrono::steady_clock::now();
  std::vector<int> shape = parse_shape(shape_text);
  GameClass cls = cls_text == "zero_sum"            ? GameClass::zero_sum
                  : cls_text == "identical_interest" ? GameClass::identical_interest
                                                     : GameClass::uniform;
  if (cls_text != "uniform" && cls_text != "zero_sum" &&
      cls_text != "identical_interest")
    throw std::invalid_argument("unknown game class: " + cls_text);

  ConjectureScan scan = conjecture_scan(shape, count, kappa, c.seed, cls);

  std::cout << "scan: " << shape_text << ", " << count << " games, kappa = "
            << kappa << "\n";
  std::cout << "match conjecture: " << scan.c1_holds << " holds, "
            << scan.c1_unresolved << " unresolved, " << scan.c1_violated
            << " violated\n";
  std::cout << "content conjecture: " << scan.c2_holds << " holds, "
            << scan.c2_unresolved << " unresolved\n";

  fs::path path = fs::path(c.out) / "scan.json";
  write_text(path, scan_json(scan));
  std::vector<std::string> outputs{path.string()};
  for (const auto& cs : scan.cases) {
    if (cs.game_json.empty()) continue;
    fs::path vpath =
        fs::path(c.out) / ("violated_seed" + std::to_string(cs.seed) + ".json");
    write_text(vpath, cs.game_json);
    outputs.push_back(vpath.string());
    std::cout << "dumped " << vpath.string() << "\n";
  }
  write_manifest(c, "scan",
                 {{"shape", shape_text},
                  {"count", count},
                  {"kappa", kappa},
                  {"class", cls_text}},
                 outputs, start);
  return 0;
}

int cmd_plot(const Common& c, int kappa, const std::string& svg_file) {
  auto start = std::chrono::steady_clock::now();
  Game g = load_target(c);
  BoxMapConfig cfg;
  cfg.seed = c.seed;
  fs::path path = fs::path(c.out) / svg_file;
  write_text(path, phase_portrait_svg(g, kappa, cfg));
  std::cout << "wrote " << path.string() << "\n";
  write_manifest(c, "plot", {{"kappa", kappa}, {"svg", svg_file}},
                 {path.string()}, start);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"replicator dynamics and response graph analysis"};
  app.require_subcommand(1);

  Common c_analyze, c_simulate, c_chain, c_certify, c_scan, c_plot;

  auto* analyze = app.add_subcommand("analyze", "response graph structure");
  add_common(analyze, c_analyze);
  std::string dot_file;
  analyze->add_option("--dot", dot_file, "write the response graph as DOT");

  auto* simulate = app.add_subcommand("simulate", "integrate the dynamic");
  add_common(simulate, c_simulate);
  std::string start_text = "uniform", csv_file = "trajectory.csv";
  double sim_time = 50.0, sim_dt = 0.01;
  bool reverse = false;
  simulate->add_option("--start", start_text, "start point, e.g. 0.9,0.1;0.5,0.5");
  simulate->add_option("--time", sim_time, "integration time");
  simulate->add_option("--dt", sim_dt, "step size");
  simulate->add_flag("--reverse", reverse, "integrate backwards");
  simulate->add_option("--csv", csv_file, "trajectory file name");

  auto* chain = app.add_subcommand("chain", "sink chain component estimate");
  add_common(chain, c_chain);
  int chain_kappa = 16;
  double chain_T = 1.0, chain_dt = 0.01, chain_padding = -1.0;
  std::string chain_json = "chain.json", chain_dot;
  chain->add_option("--kappa", chain_kappa, "grid denominator");
  chain->add_option("--T", chain_T, "flow time per box map step");
  chain->add_option("--dt", chain_dt, "integrator step");
  chain->add_option("--padding", chain_padding,
                    "image inflation (default: one box diameter)");
  chain->add_option("--json", chain_json, "report file name");
  chain->add_option("--dot", chain_dot, "morse graph DOT file name");

  auto* certify = app.add_subcommand("certify", "trapping certificate");
  add_common(certify, c_certify);
  std::string subgame_text;
  int cert_samples = 1000;
  std::string cert_json = "certificate.json";
  certify->add_option("--subgame", subgame_text, "per-player strategy lists, e.g. 0;0,1")
      ->required();
  certify->add_option("--samples", cert_samples, "audit sample count");
  certify->add_option("--json", cert_json, "certificate file name");

  auto* scan = app.add_subcommand("scan", "conjecture counterexample scan");
  add_common(scan, c_scan);
  std::string shape_text = "2x2", cls_text = "uniform";
  int scan_count = 100, scan_kappa = 16;
  scan->add_option("--shape", shape_text, "game shape, e.g. 2x3");
  scan->add_option("--count", scan_count, "number of games");
  scan->add_option("--kappa", scan_kappa, "grid denominator");
  scan->add_option("--class", cls_text,
                   "uniform | zero_sum | identical_interest");

  auto* plot = app.add_subcommand("plot", "phase portrait SVG (2x2 games)");
  add_common(plot, c_plot);
  int plot_kappa = 16;
  std::string svg_file = "plot.svg";
  plot->add_option("--kappa", plot_kappa, "grid denominator for the shading");
  plot->add_option("--svg", svg_file, "output file name");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(c_analyze, dot_file);
    if (simulate->parsed())
      return cmd_simulate(c_simulate, start_text, sim_time, sim_dt, reverse,
                          csv_file);
    if (chain->parsed())
      return cmd_chain(c_chain, chain_kappa, chain_T, chain_dt, chain_padding,
                       chain_json, chain_dot);
    if (certify->parsed())
      return cmd_certify(c_certify, subgame_text, cert_samples, cert_json);
    if (scan->parsed())
      return cmd_scan(c_scan, shape_text, scan_count, scan_kappa, cls_text);
    if (plot->parsed()) return cmd_plot(c_plot, plot_kappa, svg_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::string(e.what()).find("budget") != std::string::npos ? 2 : 1;
  }
  return 0;
}
