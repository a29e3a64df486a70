#pragma once

// Hoffman bound 1 - M(A_d)/m(A_d) for the distance-d graph of the hyperbolic
// plane. M(A_d) = phi_0(z_d) and m(A_d) = inf_lambda phi_lambda(z_d); in the
// normalised transform psi_d this ratio is 1/min_s psi_d(s).

#include <optional>
#include <vector>

#include "hypchrom/quadrature.hpp"
#include "hypchrom/spherical.hpp"

namespace hypchrom {

struct SearchConfig {
  double s_max = 60.0;
  double grid_step = 0.05;
  double refine_tol = 1e-10;
  double tail_factor = 10.0;  ///< tail scan covers [s_max, tail_factor * s_max]

  void validate() const;
};

struct SpectralMinimum {
  double psi_min = 0.0;
  double s_star = 0.0;
};

struct TailReport {
  bool passed = false;
  double max_magnitude = 0.0;  ///< max |psi_d| over the scanned tail
  double min_value = 0.0;      ///< smallest psi_d seen on the tail
};

struct HoffmanResult {
  double d = 0.0;
  double psi_min = 0.0;
  double s_star = 0.0;
  double bound = 0.0;
  std::optional<double> max_eigenvalue;  ///< M(A_d), only for d <= kMaxAngularDistance
  std::optional<double> min_eigenvalue;  ///< m(A_d), likewise
};

struct LimitConstants {
  double rho = 0.0;    ///< positive minimiser of sin(s)/s
  double nu = 0.0;     ///< min of sin(s)/s
  double limit = 0.0;  ///< 1 - 1/nu
};

/// Grid scan of psi_d over (0, s_max] followed by golden-section refinement
/// of the best bracket. Throws NumericError if the minimum is not negative or
/// if the tail scan finds a lower value beyond s_max.
SpectralMinimum find_min(const SpectralProfile& sp, const SearchConfig& cfg);
SpectralMinimum find_min(double d, const SearchConfig& cfg = {}, const QuadratureConfig& quad = {});

/// Samples psi_d on [s_max, tail_factor * s_max] at grid_step and passes iff
/// every sample exceeds psi_min.
TailReport tail_check(const SpectralProfile& sp, const SearchConfig& cfg, double psi_min);
/// As above, with psi_min taken from the truncated search on (0, s_max].
TailReport tail_check(double d, const SearchConfig& cfg = {}, const QuadratureConfig& quad = {});

/// 1 - 1/psi_min, with M and m reported for d <= kMaxAngularDistance.
HoffmanResult hoffman_bound(double d, const SearchConfig& cfg = {},
                            const QuadratureConfig& quad = {});

/// Hoffman bound from a spectral minimum of the normalised transform.
double bound_from_minimum(double psi_min);

/// rho from sin s - s cos s = 0 on [pi, 3pi/2] by bisection to `tol`.
LimitConstants limit_constants(double tol = 1e-15);

/// The distance grid d_from, d_from + step, ..., up to d_to.
std::vector<double> sweep_grid(double d_from, double d_to, double step);

/// hoffman_bound over sweep_grid(d_from, d_to, step). Evaluates on up to
/// `threads` workers (0: hardware concurrency); results are in grid order and
/// independent of the thread count. A failure at any d aborts the sweep with a
/// NumericError naming the smallest failing d.
std::vector<HoffmanResult> sweep(double d_from, double d_to, double step,
                                 const SearchConfig& cfg = {}, const QuadratureConfig& quad = {},
                                 unsigned threads = 0);

}  // namespace hypchrom
