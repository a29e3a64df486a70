#pragma once

#include <concepts>
#include <functional>
#include <memory>
#include <vector>

namespace hypchrom {

struct QuadratureConfig {
  int base_nodes = 256;  ///< Gauss-Legendre order used on every panel.
  double rel_tol = 1e-10;
  int max_refinements = 12;  ///< Panel doublings allowed after the first estimate.

  /// Throws DomainError unless base_nodes >= 16, rel_tol > 0 and max_refinements >= 1.
  void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rules are computed once per order and shared; safe to call concurrently.
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int order);

/// Integrand of integrate_singular. It receives v together with 1 - v, the
/// latter computed without cancellation near the singular endpoint.
using SingularIntegrand = std::function<double(double v, double one_minus_v)>;

struct SingularOptions {
  double lower = 0.0;   ///< integrate over [lower, 1]
  int min_panels = 1;   ///< initial panel count, e.g. to resolve oscillation
};

/// Integrates g over [lower, 1] where g may blow up like (1 - v)^{-1/2} at
/// v = 1. Substitutes v = 1 - w^2 so the transformed integrand 2 w g(1 - w^2)
/// is bounded, then applies composite Gauss-Legendre with panel doubling until
/// two successive estimates agree to rel_tol relative to the integral of |g|.
/// Throws QuadratureError otherwise.
double integrate_singular(const SingularIntegrand& fn, const QuadratureConfig& quad,
                          SingularOptions options = {});

template <typename F>
  requires(std::invocable<const F&, double> && !std::invocable<const F&, double, double>)
double integrate_singular(const F& fn, const QuadratureConfig& quad, SingularOptions options = {}) {
  return integrate_singular(SingularIntegrand{[&fn](double v, double) { return fn(v); }}, quad,
                            options);
}

/// Composite Gauss-Legendre: `panels` equal panels on [lo, hi], each with the
/// given rule. Appends mapped nodes and weights.
void append_composite_rule(const GaussLegendreRule& rule, double lo, double hi, int panels,
                           std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace hypchrom
