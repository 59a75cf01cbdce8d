#include "gamedyn/plot.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "gamedyn/chain_report.h"

namespace gamedyn {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string phase_portrait_svg(const Game& g, int denom,
                               const BoxMapConfig& cfg) {
  if (g.strategy_counts() != std::vector<int>{2, 2})
    throw std::invalid_argument(
        "phase portraits need two players with two strategies each");

  const double size = 600.0, margin = 48.0;
  const double span = size - 2.0 * margin;
  auto px = [&](double u) { return margin + span * u; };
  auto py = [&](double v) { return size - margin - span * v; };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
      "viewBox=\"0 0 600 600\">\n"
      "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";

  // shaded sink Morse boxes
  ChainReport rep = sink_chain_estimate(g, denom, cfg);
  BoxCover cover(g.strategy_counts(), denom);
  for (std::size_t k = 0; k < rep.morse.sets.size(); ++k) {
    if (!rep.morse.is_sink[k]) continue;
    for (int box : rep.morse.sets[k]) {
      auto cells = cover.factor(box);
      double u0 = double(cells[0]) / denom, v0 = double(cells[1]) / denom;
      double w = span / denom;
      svg += "<rect x=\"" + num(px(u0)) + "\" y=\"" + num(py(v0) - w) +
             "\" width=\"" + num(w) + "\" height=\"" + num(w) +
             "\" fill=\"#c8c8c8\"/>\n";
    }
  }

  svg += "<rect x=\"" + num(margin) + "\" y=\"" + num(margin) + "\" width=\"" +
         num(span) + "\" height=\"" + num(span) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

  // velocity arrows on a 15 by 15 interior grid
  FieldWorkspace ws;
  State x(4), f(4);
  double max_speed = 1e-12;
  const int grid = 15;
  std::vector<std::array<double, 4>> arrows;
  for (int i = 1; i <= grid; ++i)
    for (int j = 1; j <= grid; ++j) {
      double u = double(i) / (grid + 1), v = double(j) / (grid + 1);
      x = {u, 1.0 - u, v, 1.0 - v};
      replicator_field(g, x.data(), f.data(), ws);
      double du = f[0], dv = f[2];
      double speed = std::hypot(du, dv);
      max_speed = std::max(max_speed, speed);
      arrows.push_back({u, v, du, dv});
    }
  for (const auto& a : arrows) {
    double speed = std::hypot(a[2], a[3]);
    if (speed < 1e-15) {
      svg += "<circle cx=\"" + num(px(a[0])) + "\" cy=\"" + num(py(a[1])) +
             "\" r=\"1.5\" fill=\"black\"/>\n";
      continue;
    }
    double len = (4.0 + 10.0 * speed / max_speed) / span;  // plot units
    double ux = a[2] / speed, uy = a[3] / speed;
    double x0 = a[0] - 0.5 * len * ux, y0 = a[1] - 0.5 * len * uy;
    double x1 = a[0] + 0.5 * len * ux, y1 = a[1] + 0.5 * len * uy;
    svg += "<line x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(y0)) +
           "\" x2=\"" + num(px(x1)) + "\" y2=\"" + num(py(y1)) +
           "\" stroke=\"#1a4f8a\" stroke-width=\"1\"/>\n";
    // arrowhead
    double hx = -uy, hy = ux;
    double hl = 0.35 * len;
    svg += "<path d=\"M" + num(px(x1)) + " " + num(py(y1)) + " L" +
           num(px(x1 - hl * (ux + 0.6 * hx))) + " " +
           num(py(y1 - hl * (uy + 0.6 * hy))) + " L" +
           num(px(x1 - hl * (ux - 0.6 * hx))) + " " +
           num(py(y1 - hl * (uy - 0.6 * hy))) +
           " Z\" fill=\"#1a4f8a\"/>\n";
  }

  const auto& labels = g.labels();
  svg += "<text x=\"300\" y=\"" + num(size - 12.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">player 1: prob(" +
         labels[0][0] + ")</text>\n";
  svg += "<text x=\"16\" y=\"300\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\" "
         "transform=\"rotate(-90 16 300)\">player 2: prob(" +
         labels[1][0] + ")</text>\n";
  svg += "<text x=\"300\" y=\"28\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" +
         g.name() + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace gamedyn
