#include "gamedyn/game_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gamedyn {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Game load_game(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("game file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("game file must be a JSON object");
  if (!j.contains("players") || !j["players"].is_number_integer())
    throw std::runtime_error("missing or non-integer field 'players'");
  int n = j["players"].get<int>();
  if (n < 1) throw std::runtime_error("'players' must be at least 1");

  if (!j.contains("strategies") || !j["strategies"].is_array())
    throw std::runtime_error("missing field 'strategies'");
  auto strat = j["strategies"];
  if (int(strat.size()) != n)
    throw std::runtime_error("'strategies' must list one name array per player");
  std::vector<int> counts(n);
  std::vector<std::vector<std::string>> labels(n);
  for (int p = 0; p < n; ++p) {
    if (!strat[p].is_array() || strat[p].empty())
      throw std::runtime_error("'strategies' entry for player " + std::to_string(p) +
                               " must be a non-empty array of names");
    for (auto& s : strat[p]) {
      if (!s.is_string())
        throw std::runtime_error("strategy names must be strings (player " +
                                 std::to_string(p) + ")");
      labels[p].push_back(s.get<std::string>());
    }
    counts[p] = int(labels[p].size());
  }

  long long profiles = 1;
  for (int c : counts) profiles *= c;
  if (!j.contains("payoffs") || !j["payoffs"].is_array())
    throw std::runtime_error("missing field 'payoffs'");
  auto pj = j["payoffs"];
  if ((long long)pj.size() != profiles)
    throw std::runtime_error("'payoffs': expected " + std::to_string(profiles) +
                             " profiles, got " + std::to_string(pj.size()));
  std::vector<double> payoffs;
  payoffs.reserve(std::size_t(profiles) * n);
  for (std::size_t z = 0; z < pj.size(); ++z) {
    if (!pj[z].is_array() || int(pj[z].size()) != n)
      throw std::runtime_error("'payoffs' entry " + std::to_string(z) +
                               " must list one value per player");
    for (auto& v : pj[z]) {
      if (!v.is_number())
        throw std::runtime_error("'payoffs' entry " + std::to_string(z) +
                                 " has a non-numeric value");
      payoffs.push_back(v.get<double>());
    }
  }

  std::string name = j.value("name", std::string());
  try {
    return Game(counts, std::move(payoffs), std::move(labels), name);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

Game load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open game file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_game(ss.str());
}

std::string save_game(const Game& g) {
  std::ostringstream out;
  out << "{\n  \"players\": " << g.num_players() << ",\n  \"strategies\": [";
  for (int p = 0; p < g.num_players(); ++p) {
    out << (p ? ", [" : "[");
    for (int s = 0; s < g.strategy_counts()[p]; ++s)
      out << (s ? ", " : "") << json(g.label(p, s)).dump();
    out << "]";
  }
  out << "],\n  \"payoffs\": [\n";
  for (int z = 0; z < g.profile_count(); ++z) {
    out << "    [";
    for (int p = 0; p < g.num_players(); ++p)
      out << (p ? ", " : "") << format_double(g.payoff(z, p));
    out << (z + 1 < g.profile_count() ? "],\n" : "]\n");
  }
  out << "  ]";
  if (!g.name().empty()) out << ",\n  \"name\": " << json(g.name()).dump();
  out << "\n}\n";
  return out.str();
}

void save_game_file(const Game& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write game file: " + path);
  out << save_game(g);
}

State parse_mixed_profile(const Game& g, const std::string& text) {
  if (text == "uniform") return uniform_profile(g);
  State x(g.dim(), 0.0);
  std::stringstream ss(text);
  std::string part;
  int player = 0;
  while (std::getline(ss, part, ';')) {
    if (player >= g.num_players())
      throw std::runtime_error("mixed profile lists too many players");
    std::stringstream ps(part);
    std::string num;
    int s = 0;
    double sum = 0.0;
    while (std::getline(ps, num, ',')) {
      if (s >= g.strategy_counts()[player])
        throw std::runtime_error("too many probabilities for player " +
                                 std::to_string(player));
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(num, &used);
      } catch (...) {
        throw std::runtime_error("bad probability '" + num + "'");
      }
      if (used != num.size()) throw std::runtime_error("bad probability '" + num + "'");
      if (v < 0.0) throw std::runtime_error("negative probability");
      x[g.offset(player) + s] = v;
      sum += v;
      ++s;
    }
    if (s != g.strategy_counts()[player])
      throw std::runtime_error("player " + std::to_string(player) + " needs " +
                               std::to_string(g.strategy_counts()[player]) +
                               " probabilities");
    if (std::abs(sum - 1.0) > 1e-9)
      throw std::runtime_error("probabilities for player " + std::to_string(player) +
                               " sum to " + format_double(sum));
    ++player;
  }
  if (player != g.num_players())
    throw std::runtime_error("mixed profile lists too few players");
  return x;
}

std::string format_mixed_profile(const Game& g, const State& x) {
  std::ostringstream out;
  for (int p = 0; p < g.num_players(); ++p) {
    if (p) out << ";";
    for (int s = 0; s < g.strategy_counts()[p]; ++s)
      out << (s ? "," : "") << format_double(x[g.offset(p) + s]);
  }
  return out.str();
}

SubgameSpec parse_subgame(const Game& g, const std::string& text) {
  SubgameSpec spec;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<int> set;
    std::stringstream ps(part);
    std::string num;
    while (std::getline(ps, num, ',')) {
      try {
        set.push_back(std::stoi(num));
      } catch (...) {
        throw std::runtime_error("bad strategy index '" + num + "'");
      }
    }
    spec.sets.push_back(std::move(set));
  }
  if (int(spec.sets.size()) != g.num_players())
    throw std::runtime_error("subgame must list strategy sets for all " +
                             std::to_string(g.num_players()) + " players");
  for (int p = 0; p < g.num_players(); ++p) {
    auto& set = spec.sets[p];
    std::sort(set.begin(), set.end());
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 0 || set[i] >= g.strategy_counts()[p])
        throw std::runtime_error("strategy index out of range for player " +
                                 std::to_string(p));
      if (i && set[i] == set[i - 1])
        throw std::runtime_error("duplicate strategy index for player " +
                                 std::to_string(p));
    }
    if (set.empty())
      throw std::runtime_error("empty strategy set for player " + std::to_string(p));
  }
  return spec;
}

std::string format_subgame(const Game& g, const SubgameSpec& spec) {
  (void)g;
  std::ostringstream out;
  for (std::size_t p = 0; p < spec.sets.size(); ++p) {
    if (p) out << ";";
    for (std::size_t i = 0; i < spec.sets[p].size(); ++i)
      out << (i ? "," : "") << spec.sets[p][i];
  }
  return out.str();
}

}  // namespace gamedyn
