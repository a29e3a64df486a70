#include "hypchrom/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "hypchrom/errors.hpp"

namespace hypchrom {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_distance(double d, double limit) {
  if (!(d > 0.0 && d <= limit)) {
    throw DomainError("distance d = " + std::to_string(d) + " outside (0, " +
                      std::to_string(limit) + "]");
  }
}

// log(sinh x) for x > 0 without overflow.
double log_sinh(double x) {
  if (x > 18.0) return x - kLn2 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

// 2 w f_d(1 - w^2) e^{d/2}: the integrand after v = 1 - w^2, rescaled so that
// it stays O(d) for every d.
double scaled_transformed_density(double d, double w) {
  const double tail = w * w;
  const double a = 0.5 * d * (2.0 - tail);
  const double b = 0.5 * d * tail;
  const double log_value =
      std::log(2.0 * w * d) - 0.5 * (kLn2 + log_sinh(a) + log_sinh(b)) + 0.5 * d;
  return std::exp(log_value);
}

int next_power_of_two(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// FdProfile

FdProfile::FdProfile(double d, const QuadratureConfig& quad) : d_(d) {
  check_distance(d, kMaxDistance);
  normalizer_ = integrate_singular(
      [this](double v, double one_minus_v) { return density(v, one_minus_v); }, quad);
  if (!(normalizer_ > 0.0) || !std::isfinite(normalizer_)) {
    throw NumericError("normaliser of f_d is not positive at d = " + std::to_string(d));
  }
}

double FdProfile::density(double v) const {
  if (!(v >= 0.0 && v < 1.0)) throw DomainError("f_d is defined for v in [0, 1)");
  return density(v, 1.0 - v);
}

double FdProfile::density(double v, double one_minus_v) const {
  if (!(v >= 0.0) || !(one_minus_v > 0.0)) throw DomainError("f_d is defined for v in [0, 1)");
  const double a = 0.5 * d_ * (1.0 + v);
  const double b = 0.5 * d_ * one_minus_v;
  return d_ / (std::sqrt(2.0 * std::sinh(a)) * std::sqrt(std::sinh(b)));
}

// ---------------------------------------------------------------------------
// SpectralProfile

struct SpectralProfile::NodeTable {
  std::vector<double> v;
  std::vector<double> weight;
  double total = 0.0;
};

struct SpectralProfile::Cache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<const NodeTable>> tables;
};

SpectralProfile::SpectralProfile(double d, const QuadratureConfig& quad)
    : SpectralProfile(FdProfile(d, quad), quad) {}

SpectralProfile::SpectralProfile(FdProfile profile, const QuadratureConfig& quad)
    : profile_(profile), quad_(quad), cache_(std::make_shared<Cache>()) {
  quad_.validate();
}

const SpectralProfile::NodeTable& SpectralProfile::table(int panels) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->tables[panels];
  if (!slot) {
    auto built = std::make_unique<NodeTable>();
    std::vector<double> w;
    std::vector<double> gl_weight;
    append_composite_rule(*gauss_legendre(quad_.base_nodes), 0.0, 1.0, panels, w, gl_weight);
    built->v.resize(w.size());
    built->weight.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      built->v[i] = 1.0 - w[i] * w[i];
      built->weight[i] = gl_weight[i] * scaled_transformed_density(d(), w[i]);
      built->total += built->weight[i];
    }
    slot = std::move(built);
  }
  return *slot;
}

int SpectralProfile::initial_panels(double s) const {
  // After v = 1 - w^2 the phase s(1 - w^2) has frequency at most 2|s| in w;
  // ask for 8 nodes per period.
  const double nodes = 8.0 * 2.0 * std::abs(s) / (2.0 * std::numbers::pi);
  const int panels = static_cast<int>(std::ceil(nodes / quad_.base_nodes));
  return next_power_of_two(std::max(1, panels));
}

std::pair<int, double> SpectralProfile::converge(double s) const {
  auto estimate = [this, s](int panels) {
    const NodeTable& t = table(panels);
    double sum = 0.0;
    for (std::size_t i = 0; i < t.v.size(); ++i) sum += t.weight[i] * std::cos(s * t.v[i]);
    return sum / t.total;
  };
  int panels = initial_panels(s);
  double previous = estimate(panels);
  for (int r = 0; r < quad_.max_refinements; ++r) {
    panels *= 2;
    const double current = estimate(panels);
    // The normalised integrand has unit L1 norm, so this is the relative test.
    if (std::abs(current - previous) <= quad_.rel_tol) return {panels, current};
    previous = current;
  }
  throw QuadratureError("psi did not converge at d = " + std::to_string(d()) +
                        ", s = " + std::to_string(s));
}

double SpectralProfile::psi(double s) const {
  if (!std::isfinite(s)) throw DomainError("frequency must be finite");
  if (s == 0.0) return 1.0;
  return converge(s).second;
}

std::vector<double> SpectralProfile::psi_grid(double first, double step,
                                              std::size_t count) const {
  constexpr std::size_t kBlock = 512;
  constexpr std::size_t kReanchor = 64;
  if (!std::isfinite(first) || !std::isfinite(step)) throw DomainError("grid must be finite");

  std::vector<double> out(count);
  std::vector<double> c;
  std::vector<double> sn;
  std::vector<double> rc;
  std::vector<double> rs;
  for (std::size_t begin = 0; begin < count; begin += kBlock) {
    const std::size_t end = std::min(count, begin + kBlock);
    const double s_lo = first + static_cast<double>(begin) * step;
    const double s_hi = first + static_cast<double>(end - 1) * step;
    const int panels = converge(std::max(std::abs(s_lo), std::abs(s_hi))).first;
    const NodeTable& t = table(panels);
    const std::size_t n = t.v.size();
    c.resize(n);
    sn.resize(n);
    rc.resize(n);
    rs.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      rc[i] = std::cos(step * t.v[i]);
      rs[i] = std::sin(step * t.v[i]);
    }
    for (std::size_t k = begin; k < end; ++k) {
      if ((k - begin) % kReanchor == 0) {
        const double s = first + static_cast<double>(k) * step;
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = std::cos(s * t.v[i]);
          sn[i] = std::sin(s * t.v[i]);
        }
      }
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += t.weight[i] * c[i];
      out[k] = sum / t.total;
      for (std::size_t i = 0; i < n; ++i) {
        const double next_c = c[i] * rc[i] - sn[i] * rs[i];
        sn[i] = sn[i] * rc[i] + c[i] * rs[i];
        c[i] = next_c;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free functions

double spherical_function(double lambda, double d, const QuadratureConfig& quad) {
  const SpectralProfile sp(d, quad);
  return std::numbers::sqrt2 / std::numbers::pi * sp.profile().normalizer() * sp.psi(lambda * d);
}

namespace {

struct AngularEstimate {
  std::complex<double> value;
  double magnitude = 0.0;
};

// (1/pi) Int_0^pi h(t)^{-(1/2 + i lambda)} dt on dyadic panels [pi 2^{-k-1}, pi 2^{-k}],
// each split into `splits` Gauss-Legendre panels. The integrand peaks like
// e^{d/2} on a window of width ~e^{-d} around t = 0, which the dyadic grading
// resolves.
AngularEstimate angular_estimate(double lambda, double d, const GaussLegendreRule& rule,
                                 int levels, int splits) {
  const double e_minus_d = std::exp(-d);
  const double two_sinh_d = 2.0 * std::sinh(d);
  std::vector<double> t;
  std::vector<double> weight;
  double hi = std::numbers::pi;
  for (int k = 0; k < levels; ++k) {
    const double lo = 0.5 * hi;
    append_composite_rule(rule, lo, hi, splits, t, weight);
    hi = lo;
  }
  append_composite_rule(rule, 0.0, hi, splits, t, weight);

  AngularEstimate est;
  for (std::size_t i = 0; i < t.size(); ++i) {
    // cosh d - sinh d cos t, written without the cancellation at t = 0.
    const double half_sin = std::sin(0.5 * t[i]);
    const double base = e_minus_d + two_sinh_d * half_sin * half_sin;
    const double log_base = std::log(base);
    const double modulus = std::exp(-0.5 * log_base);
    const double phase = -lambda * log_base;
    est.value += weight[i] * std::polar(modulus, phase);
    est.magnitude += weight[i] * modulus;
  }
  est.value /= std::numbers::pi;
  est.magnitude /= std::numbers::pi;
  return est;
}

}  // namespace

std::complex<double> spherical_function_angular(double lambda, double d,
                                                const QuadratureConfig& quad) {
  check_distance(d, kMaxAngularDistance);
  if (!std::isfinite(lambda)) throw DomainError("lambda must be finite");
  quad.validate();
  // Stop grading once the innermost panel is far narrower than the e^{-d} peak.
  const int levels = static_cast<int>(std::ceil((d + 45.0) / std::numbers::ln2));
  const auto rule = gauss_legendre(quad.base_nodes);
  int splits = 1;
  AngularEstimate previous = angular_estimate(lambda, d, *rule, levels, splits);
  for (int r = 0; r < quad.max_refinements; ++r) {
    splits *= 2;
    const AngularEstimate current = angular_estimate(lambda, d, *rule, levels, splits);
    if (std::abs(current.value - previous.value) <= quad.rel_tol * current.magnitude) {
      return current.value;
    }
    previous = current;
  }
  throw QuadratureError("angular spherical function did not converge at d = " +
                        std::to_string(d));
}

double l1_deviation(const SpectralProfile& sp) {
  const FdProfile& profile = sp.profile();
  const double norm = profile.normalizer();
  // F_d is strictly increasing with mean 1, so it crosses 1 exactly once and
  // Int |F_d - 1| = 2 Int_{crossing}^1 (F_d - 1).
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (profile.density(mid) < norm) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double crossing = lo;
  const double upper = integrate_singular(
      [&profile, norm](double v, double one_minus_v) {
        return profile.density(v, one_minus_v) / norm;
      },
      sp.quad(), {.lower = crossing});
  return std::max(0.0, 2.0 * (upper - (1.0 - crossing)));
}

}  // namespace hypchrom
