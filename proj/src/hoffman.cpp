#include "hypchrom/hoffman.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "hypchrom/errors.hpp"

namespace hypchrom {

void SearchConfig::validate() const {
  if (!(grid_step > 0.0 && grid_step < 1.0)) throw DomainError("grid_step must lie in (0, 1)");
  if (!(s_max >= 20.0) || !std::isfinite(s_max)) throw DomainError("s_max must be at least 20");
  if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");
  if (!(tail_factor >= 2.0) || !std::isfinite(tail_factor)) {
    throw DomainError("tail_factor must be at least 2");
  }
}

namespace {

std::string d_label(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", d);
  return buf;
}

// Minimum of psi over (0, s_max] without the tail guard.
SpectralMinimum search(const SpectralProfile& sp, const SearchConfig& cfg) {
  cfg.validate();
  const double h = cfg.grid_step;
  const auto n = static_cast<std::size_t>(std::floor(cfg.s_max / h + 1e-9));
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = static_cast<double>(k + 1) * h;
  std::vector<double> values = sp.psi_grid(h, h, n);
  if (s.back() < cfg.s_max) {
    s.push_back(cfg.s_max);
    values.push_back(sp.psi(cfg.s_max));
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] < values[best]) best = k;
  }
  double lo = best == 0 ? 0.0 : s[best - 1];
  double hi = best + 1 < s.size() ? s[best + 1] : s[best];

  // Golden-section search on [lo, hi].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = sp.psi(x1);
  double f2 = sp.psi(x2);
  while (hi - lo > cfg.refine_tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = sp.psi(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = sp.psi(x2);
    }
  }
  SpectralMinimum result{values[best], s[best]};
  const double x = f1 <= f2 ? x1 : x2;
  const double fx = std::min(f1, f2);
  if (fx <= result.psi_min) result = {fx, x};
  return result;
}

}  // namespace

TailReport tail_check(const SpectralProfile& sp, const SearchConfig& cfg, double psi_min) {
  cfg.validate();
  const double span = (cfg.tail_factor - 1.0) * cfg.s_max;
  const auto n = static_cast<std::size_t>(std::floor(span / cfg.grid_step + 1e-9)) + 1;
  const std::vector<double> values = sp.psi_grid(cfg.s_max, cfg.grid_step, n);
  TailReport report;
  report.passed = true;
  report.min_value = values.front();
  for (const double v : values) {
    report.max_magnitude = std::max(report.max_magnitude, std::abs(v));
    report.min_value = std::min(report.min_value, v);
    if (!(v > psi_min)) report.passed = false;
  }
  return report;
}

TailReport tail_check(double d, const SearchConfig& cfg, const QuadratureConfig& quad) {
  const SpectralProfile sp(d, quad);
  return tail_check(sp, cfg, search(sp, cfg).psi_min);
}

SpectralMinimum find_min(const SpectralProfile& sp, const SearchConfig& cfg) {
  const SpectralMinimum minimum = search(sp, cfg);
  if (!(minimum.psi_min < 0.0)) {
    throw NumericError("spectral minimum is not negative at d = " + d_label(sp.d()));
  }
  const TailReport tail = tail_check(sp, cfg, minimum.psi_min);
  if (!tail.passed) {
    throw NumericError("tail scan beyond s_max found psi = " + d_label(tail.min_value) +
                       " below the truncated minimum at d = " + d_label(sp.d()));
  }
  return minimum;
}

SpectralMinimum find_min(double d, const SearchConfig& cfg, const QuadratureConfig& quad) {
  return find_min(SpectralProfile(d, quad), cfg);
}

double bound_from_minimum(double psi_min) {
  if (!(psi_min < 0.0)) throw NumericError("Hoffman bound needs a negative spectral minimum");
  return 1.0 - 1.0 / psi_min;
}

HoffmanResult hoffman_bound(double d, const SearchConfig& cfg, const QuadratureConfig& quad) {
  const SpectralProfile sp(d, quad);
  const SpectralMinimum minimum = find_min(sp, cfg);
  HoffmanResult result;
  result.d = d;
  result.psi_min = minimum.psi_min;
  result.s_star = minimum.s_star;
  result.bound = bound_from_minimum(minimum.psi_min);
  if (d <= kMaxAngularDistance) {
    result.max_eigenvalue = std::numbers::sqrt2 / std::numbers::pi * sp.profile().normalizer();
    result.min_eigenvalue = spherical_function(minimum.s_star / d, d, quad);
  }
  return result;
}

LimitConstants limit_constants(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  // Stationary points of sin(s)/s satisfy sin s - s cos s = 0, i.e. tan s = s.
  auto g = [](double s) { return std::sin(s) - s * std::cos(s); };
  double lo = std::numbers::pi;        // g > 0
  double hi = 1.5 * std::numbers::pi;  // g < 0
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  LimitConstants c;
  c.rho = 0.5 * (lo + hi);
  c.nu = std::sin(c.rho) / c.rho;
  c.limit = 1.0 - 1.0 / c.nu;
  return c;
}

std::vector<double> sweep_grid(double d_from, double d_to, double step) {
  if (!(d_from > 0.0) || !(d_from <= d_to) || !(d_to <= kMaxDistance)) {
    throw DomainError("sweep range must satisfy 0 < from <= to <= 700");
  }
  if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("sweep step must be positive");
  const auto intervals = static_cast<std::size_t>(std::floor((d_to - d_from) / step + 1e-9));
  std::vector<double> grid(intervals + 1);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid[k] = d_from + static_cast<double>(k) * step;
  }
  return grid;
}

std::vector<HoffmanResult> sweep(double d_from, double d_to, double step,
                                 const SearchConfig& cfg, const QuadratureConfig& quad,
                                 unsigned threads) {
  cfg.validate();
  quad.validate();
  const std::vector<double> grid = sweep_grid(d_from, d_to, step);
  std::vector<HoffmanResult> results(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < grid.size(); k = next++) {
      try {
        results[k] = hoffman_bound(grid[k], cfg, quad);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!errors[k]) continue;
    try {
      std::rethrow_exception(errors[k]);
    } catch (const std::exception& e) {
      throw NumericError("sweep failed at d = " + d_label(grid[k]) + ": " + e.what());
    }
  }
  return results;
}

}  // namespace hypchrom
