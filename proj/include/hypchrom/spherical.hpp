#pragma once

// Spherical functions of the hyperbolic plane evaluated at a point z_d at
// distance d from the origin, through the cosine transform
//
//   phi_lambda(z_d) = (sqrt(2)/pi) * Int_0^1 f_d(v) cos(lambda d v) dv,
//   f_d(v) = d / sqrt(cosh d - cosh(d v)),
//
// and through the direct angular average
//
//   phi_lambda(z_d) = (1/2pi) Int_{-pi}^{pi} (cosh d - sinh d cos t)^{-(1/2 + i lambda)} dt.
//
// Production code works with the normalised transform
// psi_d(s) = Int_0^1 F_d(v) cos(s v) dv, F_d = f_d / Int_0^1 f_d, in the
// rescaled frequency s = lambda d. psi_d is scale free, so it stays finite
// where f_d itself under- or overflows.

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "hypchrom/quadrature.hpp"

namespace hypchrom {

/// Largest distance accepted by the cosine-transform route.
inline constexpr double kMaxDistance = 700.0;
/// Largest distance accepted by the angular-average route.
inline constexpr double kMaxAngularDistance = 300.0;

/// The density f_d together with its integral over [0, 1].
class FdProfile {
 public:
  /// Throws DomainError unless 0 < d <= kMaxDistance. The normaliser is
  /// computed here, once.
  explicit FdProfile(double d, const QuadratureConfig& quad = {});

  double d() const { return d_; }
  /// Int_0^1 f_d(u) du.
  double normalizer() const { return normalizer_; }

  /// f_d(v) for v in [0, 1); DomainError otherwise.
  double density(double v) const;
  /// f_d(v) given both v and 1 - v; uses the product
  /// cosh d - cosh(dv) = 2 sinh(d(1+v)/2) sinh(d(1-v)/2).
  double density(double v, double one_minus_v) const;
  /// F_d(v) = f_d(v) / normalizer().
  double normalized_density(double v) const { return density(v) / normalizer_; }

 private:
  double d_;
  double normalizer_ = 0.0;
};

inline double f_d(const FdProfile& profile, double v) { return profile.density(v); }

/// Evaluation context for psi_d. Copies share a node cache; all members are
/// safe to call concurrently.
class SpectralProfile {
 public:
  explicit SpectralProfile(double d, const QuadratureConfig& quad = {});
  SpectralProfile(FdProfile profile, const QuadratureConfig& quad);

  const FdProfile& profile() const { return profile_; }
  const QuadratureConfig& quad() const { return quad_; }
  double d() const { return profile_.d(); }

  /// psi_d(s); psi_d(0) = 1. Throws QuadratureError when panel doubling does
  /// not settle within quad().max_refinements.
  double psi(double s) const;

  /// psi_d at first + k * step for k < count. Uses a phase recurrence per
  /// block of samples, at the node resolution that psi() accepts for the
  /// block's highest frequency.
  std::vector<double> psi_grid(double first, double step, std::size_t count) const;

 private:
  struct NodeTable;
  struct Cache;

  const NodeTable& table(int panels) const;
  int initial_panels(double s) const;
  /// Panel count at which psi(s) converges, and the converged value.
  std::pair<int, double> converge(double s) const;

  FdProfile profile_;
  QuadratureConfig quad_;
  std::shared_ptr<Cache> cache_;
};

inline double psi(const SpectralProfile& sp, double s) { return sp.psi(s); }

/// phi_lambda(z_d) through the cosine transform. 0 < d <= kMaxDistance.
double spherical_function(double lambda, double d, const QuadratureConfig& quad = {});

/// phi_lambda(z_d) through the angular average, returned with its (vanishing)
/// imaginary part. 0 < d <= kMaxAngularDistance.
std::complex<double> spherical_function_angular(double lambda, double d,
                                                const QuadratureConfig& quad = {});

/// Int_0^1 |F_d(v) - 1| dv.
double l1_deviation(const SpectralProfile& sp);

}  // namespace hypchrom
