#pragma once

// Hyperbolic plane geometry on the Poincare disk (curvature -1).
//
// Points are stored as Cartesian disk coordinates. Isometries are SU(1,1)
// matrices [[a, b], [conj(b), conj(a)]] acting by z -> (az + b)/(conj(b)z + conj(a)).

#include <complex>

namespace hypchrom {

using Complex = std::complex<double>;

/// A point of the open unit disk. Construction rejects |z| >= 1.
class DiskPoint {
 public:
  DiskPoint() = default;
  DiskPoint(double re, double im);
  explicit DiskPoint(Complex z) : DiskPoint(z.real(), z.imag()) {}

  static DiskPoint origin() { return {}; }

  double re() const { return re_; }
  double im() const { return im_; }
  Complex z() const { return {re_, im_}; }

  /// 1 - |z|^2, the inverse of the conformal factor.
  double conformal_gap() const;

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  double re_ = 0.0;
  double im_ = 0.0;
};

/// A point e^{i angle} of the boundary circle; the angle is kept in [0, 2pi).
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  explicit BoundaryPoint(double angle);

  double angle() const { return angle_; }
  Complex z() const { return std::polar(1.0, angle_); }

 private:
  double angle_ = 0.0;
};

/// An element of SU(1,1). The entries are renormalised so that
/// |a|^2 - |b|^2 = 1 after every composition.
class MobiusMap {
 public:
  MobiusMap() = default;  // identity
  MobiusMap(Complex a, Complex b);

  static MobiusMap identity() { return {}; }
  /// Hyperbolic translation along the real axis moving O to distance d.
  static MobiusMap translation(double d);
  /// Rotation about O: z -> e^{i theta} z.
  static MobiusMap rotation(double theta);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

  /// |a|^2 - |b|^2; equals 1 for a valid map.
  double determinant() const { return std::norm(a_) - std::norm(b_); }
  bool is_rotation() const { return b_ == Complex{}; }

  DiskPoint apply(const DiskPoint& p) const;
  BoundaryPoint apply(const BoundaryPoint& b) const;
  MobiusMap inverse() const;

  /// Matrix product: (lhs * rhs).apply(p) == lhs.apply(rhs.apply(p)).
  friend MobiusMap operator*(const MobiusMap& lhs, const MobiusMap& rhs);

 private:
  Complex a_{1.0, 0.0};
  Complex b_{0.0, 0.0};
};

inline MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner) { return outer * inner; }
inline MobiusMap translate_to(double d) { return MobiusMap::translation(d); }
inline MobiusMap rotation(double theta) { return MobiusMap::rotation(theta); }
inline DiskPoint mobius_apply(const MobiusMap& m, const DiskPoint& p) { return m.apply(p); }
inline BoundaryPoint mobius_apply(const MobiusMap& m, const BoundaryPoint& b) { return m.apply(b); }

/// Hyperbolic distance between two disk points.
double dist(const DiskPoint& p, const DiskPoint& q);

/// Signed distance <p, b> from O to the horocycle through p tangent at b:
/// positive when O lies outside the horocycle, negative inside.
double horocycle_bracket(const DiskPoint& p, const BoundaryPoint& b);

struct CircleGeometry {
  double d = 0.0;
  double euclidean_radius = 0.0;
  double circumference = 0.0;
  double area = 0.0;
};

/// Measurements of the hyperbolic circle of radius d centred at O.
CircleGeometry circle_geometry(double d);

/// Side opposite the angle gamma in a triangle with adjacent sides a and b.
double law_of_cosines(double a, double b, double gamma);

/// Point at hyperbolic distance r from O in direction theta.
DiskPoint polar_point(double r, double theta);

}  // namespace hypchrom
