#include "hypchrom/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>

#include "hypchrom/hoffman.hpp"
#include "hypchrom/hypgeo.hpp"
#include "hypchrom/report.hpp"
#include "hypchrom/spherical.hpp"
#include "hypchrom/spindle.hpp"

namespace hypchrom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CheckGroup finish(std::string name, double worst, double threshold) {
  return {std::move(name), worst < threshold,
          "worst " + format_number(worst) + " (threshold " + format_number(threshold) + ")"};
}

MobiusMap random_isometry(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> radius(0.0, 2.0);
  return rotation(angle(rng)) * translate_to(radius(rng)) * rotation(angle(rng));
}

DiskPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> radius(0.0, 2.0);
  return polar_point(radius(rng), angle(rng));
}

}  // namespace

CheckGroup check_oracle_grid() {
  double worst = 0.0;
  for (const double d : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    for (const double lambda : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      const double direct = spherical_function(lambda, d);
      const auto angular = spherical_function_angular(lambda, d);
      worst = std::max({worst, std::abs(direct - angular.real()), std::abs(angular.imag())});
    }
  }
  return finish("oracle-grid", worst, 1e-8);
}

CheckGroup check_cocycle(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double worst = 0.0;
  const DiskPoint o = DiskPoint::origin();
  for (int i = 0; i < samples; ++i) {
    const MobiusMap h = random_isometry(rng);
    const MobiusMap g = random_isometry(rng);
    const BoundaryPoint b(angle(rng));
    const double lhs = horocycle_bracket((h * g).apply(o), b);
    const double rhs = horocycle_bracket(g.apply(o), h.inverse().apply(b)) +
                       horocycle_bracket(h.apply(o), b);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return finish("cocycle", worst, 1e-10);
}

CheckGroup check_isometry(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const MobiusMap m = random_isometry(rng);
    const DiskPoint p = random_point(rng);
    const DiskPoint q = random_point(rng);
    worst = std::max(worst, std::abs(dist(m.apply(p), m.apply(q)) - dist(p, q)));
  }
  return finish("isometry", worst, 1e-12);
}

CheckGroup check_envelope(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int violations = 0;
  double worst_ratio = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double d = 200.0 * (1.0 - unit(rng));  // (0, 200]
    const double v = unit(rng);                  // [0, 1)
    const FdProfile profile(d);
    const double f = profile.density(v);
    const double normalized = f / profile.normalizer();
    const double normalized_cap = 1.0 / std::sqrt(1.0 - v);
    const double raw_cap = std::numbers::sqrt2 / std::sqrt((1.0 - v) * (1.0 + v));
    worst_ratio = std::max({worst_ratio, normalized / normalized_cap, f / raw_cap});
    if (!(normalized <= normalized_cap) || !(f <= raw_cap)) ++violations;
  }
  return {"envelope", violations == 0,
          std::to_string(violations) + " violations, largest value/cap " +
              format_number(worst_ratio)};
}

CheckGroup check_limit() {
  const LimitConstants c = limit_constants();
  const double worst =
      std::max(std::abs(std::tan(c.rho) - c.rho), std::abs(c.nu - std::cos(c.rho)));
  return finish("limit", worst, 1e-10);
}

CheckGroup check_spindle() {
  double worst = 0.0;
  const std::size_t chi = chromatic_number(spindle_graph());
  for (const double d : {0.5, 1.0, 4.0, 12.0}) {
    worst = std::max(worst, build_spindle(d).max_deviation);
  }
  CheckGroup group = finish("spindle", worst, kSpindleTolerance);
  group.passed = group.passed && chi == 4;
  group.detail += ", chromatic number " + std::to_string(chi);
  return group;
}

std::vector<CheckGroup> run_self_checks(std::uint64_t seed) {
  std::vector<CheckGroup> groups;
  auto guarded = [&groups](const char* name, auto&& fn) {
    try {
      groups.push_back(fn());
    } catch (const std::exception& e) {
      groups.push_back({name, false, std::string("error: ") + e.what()});
    }
  };
  guarded("oracle-grid", [] { return check_oracle_grid(); });
  guarded("cocycle", [seed] { return check_cocycle(1000, seed); });
  guarded("isometry", [seed] { return check_isometry(1000, seed + 1); });
  guarded("envelope", [seed] { return check_envelope(10000, seed + 2); });
  guarded("limit", [] { return check_limit(); });
  guarded("spindle", [] { return check_spindle(); });
  return groups;
}

}  // namespace hypchrom
