#include "hypchrom/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hypchrom {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_bound_line(const HoffmanResult& r) {
  return "d=" + format_number(r.d) + " psi_min=" + format_number(r.psi_min) +
         " s_star=" + format_number(r.s_star) + " bound=" + format_number(r.bound);
}

void write_sweep_csv(std::ostream& out, const std::vector<HoffmanResult>& results) {
  out << "d,psi_min,s_star,bound\n";
  for (const auto& r : results) {
    out << format_number(r.d) << ',' << format_number(r.psi_min) << ','
        << format_number(r.s_star) << ',' << format_number(r.bound) << '\n';
  }
}

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Round step for about `target` ticks over [lo, hi].
double tick_step(double lo, double hi, int target) {
  const double raw = (hi - lo) / target;
  if (!(raw > 0.0)) return 1.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (const double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

void write_sweep_svg(std::ostream& out, const std::vector<HoffmanResult>& results,
                     double asymptote) {
  double x_lo = results.empty() ? 0.0 : results.front().d;
  double x_hi = results.empty() ? 1.0 : results.back().d;
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  double y_lo = asymptote;
  double y_hi = asymptote;
  for (const auto& r : results) {
    y_lo = std::min(y_lo, r.bound);
    y_hi = std::max(y_hi, r.bound);
  }
  y_lo = std::floor(y_lo * 2.0) / 2.0;
  y_hi = std::ceil(y_hi * 2.0) / 2.0;
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"500\""
         " viewBox=\"0 0 800 500\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";

  // Axes.
  const double x0 = px(x_lo);
  const double y0 = py(y_lo);
  out << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << fixed(x0, 2) << "\" y1=\"" << fixed(y0, 2) << "\" x2=\""
      << fixed(px(x_hi), 2) << "\" y2=\"" << fixed(y0, 2) << "\"/>\n"
      << "<line x1=\"" << fixed(x0, 2) << "\" y1=\"" << fixed(y0, 2) << "\" x2=\""
      << fixed(x0, 2) << "\" y2=\"" << fixed(py(y_hi), 2) << "\"/>\n";
  const double xs = tick_step(x_lo, x_hi, 8);
  for (double t = std::ceil(x_lo / xs) * xs; t <= x_hi + 1e-9 * xs; t += xs) {
    out << "<line x1=\"" << fixed(px(t), 2) << "\" y1=\"" << fixed(y0, 2) << "\" x2=\""
        << fixed(px(t), 2) << "\" y2=\"" << fixed(y0 + 5.0, 2) << "\"/>\n";
  }
  const double ys = tick_step(y_lo, y_hi, 6);
  for (double t = std::ceil(y_lo / ys) * ys; t <= y_hi + 1e-9 * ys; t += ys) {
    out << "<line x1=\"" << fixed(x0 - 5.0, 2) << "\" y1=\"" << fixed(py(t), 2) << "\" x2=\""
        << fixed(x0, 2) << "\" y2=\"" << fixed(py(t), 2) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (double t = std::ceil(x_lo / xs) * xs; t <= x_hi + 1e-9 * xs; t += xs) {
    out << "<text x=\"" << fixed(px(t), 2) << "\" y=\"" << fixed(y0 + 20.0, 2)
        << "\" text-anchor=\"middle\">" << format_number(t) << "</text>\n";
  }
  for (double t = std::ceil(y_lo / ys) * ys; t <= y_hi + 1e-9 * ys; t += ys) {
    out << "<text x=\"" << fixed(x0 - 8.0, 2) << "\" y=\"" << fixed(py(t) + 4.0, 2)
        << "\" text-anchor=\"end\">" << format_number(t) << "</text>\n";
  }
  out << "<text x=\"" << fixed(kLeft + 0.5 * plot_w, 2) << "\" y=\"" << fixed(kHeight - 15.0, 2)
      << "\" text-anchor=\"middle\">d</text>\n"
      << "<text x=\"18\" y=\"" << fixed(kTop + 0.5 * plot_h, 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << fixed(kTop + 0.5 * plot_h, 2)
      << ")\">Hoffman bound</text>\n"
      << "<text x=\"" << fixed(px(x_hi) - 4.0, 2) << "\" y=\"" << fixed(py(asymptote) - 6.0, 2)
      << "\" text-anchor=\"end\" fill=\"gray\">1 - 1/nu = " << format_number(asymptote)
      << "</text>\n"
      << "</g>\n";

  out << "<line x1=\"" << fixed(x0, 2) << "\" y1=\"" << fixed(py(asymptote), 2) << "\" x2=\""
      << fixed(px(x_hi), 2) << "\" y2=\"" << fixed(py(asymptote), 2)
      << "\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (i > 0) out << ' ';
    out << fixed(px(results[i].d), 2) << ',' << fixed(py(results[i].bound), 2);
  }
  out << "\"/>\n</svg>\n";
}

nlohmann::json spindle_to_json(const SpindleEmbedding& s) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : s.points) points.push_back({p.re(), p.im()});
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : s.edges) edges.push_back({i, j});
  return {{"d", s.d}, {"points", points}, {"edges", edges}, {"max_deviation", s.max_deviation}};
}

}  // namespace hypchrom
