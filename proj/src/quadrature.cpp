#include "hypchrom/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "hypchrom/errors.hpp"

namespace hypchrom {

void QuadratureConfig::validate() const {
  if (base_nodes < 16) throw DomainError("base_nodes must be at least 16");
  if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
  if (max_refinements < 1) throw DomainError("max_refinements must be positive");
}

namespace {

GaussLegendreRule compute_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th largest root, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order) {
  if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_shared<const GaussLegendreRule>(compute_rule(order));
  return slot;
}

void append_composite_rule(const GaussLegendreRule& rule, double lo, double hi, int panels,
                           std::vector<double>& nodes, std::vector<double>& weights) {
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    const double half = 0.5 * width;
    const double mid = a + half;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      nodes.push_back(mid + half * rule.nodes[i]);
      weights.push_back(half * rule.weights[i]);
    }
  }
}

namespace {

struct Estimate {
  double value = 0.0;
  double magnitude = 0.0;
};

Estimate singular_estimate(const SingularIntegrand& fn, const GaussLegendreRule& rule,
                           double w_max, int panels) {
  std::vector<double> w;
  std::vector<double> weight;
  w.reserve(rule.nodes.size() * panels);
  weight.reserve(rule.nodes.size() * panels);
  append_composite_rule(rule, 0.0, w_max, panels, w, weight);
  Estimate est;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double tail = w[i] * w[i];
    const double term = weight[i] * 2.0 * w[i] * fn(1.0 - tail, tail);
    est.value += term;
    est.magnitude += std::abs(term);
  }
  return est;
}

}  // namespace

double integrate_singular(const SingularIntegrand& fn, const QuadratureConfig& quad,
                          SingularOptions options) {
  quad.validate();
  if (!(options.lower >= 0.0 && options.lower <= 1.0)) {
    throw DomainError("integration lower limit must lie in [0, 1]");
  }
  if (options.lower == 1.0) return 0.0;
  const auto rule = gauss_legendre(quad.base_nodes);
  const double w_max = std::sqrt(1.0 - options.lower);
  int panels = std::max(1, options.min_panels);
  Estimate previous = singular_estimate(fn, *rule, w_max, panels);
  for (int r = 0; r < quad.max_refinements; ++r) {
    panels *= 2;
    const Estimate current = singular_estimate(fn, *rule, w_max, panels);
    if (std::abs(current.value - previous.value) <= quad.rel_tol * current.magnitude) {
      return current.value;
    }
    previous = current;
  }
  throw QuadratureError("singular quadrature did not reach rel_tol " +
                        std::to_string(quad.rel_tol) + " after " +
                        std::to_string(quad.max_refinements) + " refinements");
}

}  // namespace hypchrom
