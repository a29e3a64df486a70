#include "hypchrom/hypgeo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hypchrom/errors.hpp"

namespace hypchrom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double one_minus_norm(double re, double im) {
  return std::fma(-re, re, std::fma(-im, im, 1.0));
}

}  // namespace

DiskPoint::DiskPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im) || !(one_minus_norm(re, im) > 0.0)) {
    throw DomainError("disk point (" + std::to_string(re) + ", " + std::to_string(im) +
                      ") is not strictly inside the unit disk");
  }
}

double DiskPoint::conformal_gap() const { return one_minus_norm(re_, im_); }

BoundaryPoint::BoundaryPoint(double angle) {
  if (!std::isfinite(angle)) throw DomainError("boundary angle must be finite");
  angle_ = std::fmod(angle, kTwoPi);
  if (angle_ < 0.0) angle_ += kTwoPi;
  if (angle_ >= kTwoPi) angle_ = 0.0;
}

MobiusMap::MobiusMap(Complex a, Complex b) : a_(a), b_(b) {
  const double det = determinant();
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw DomainError("matrix entries do not define an element of SU(1,1)");
  }
  const double scale = 1.0 / std::sqrt(det);
  a_ *= scale;
  b_ *= scale;
}

MobiusMap MobiusMap::translation(double d) {
  if (!(d >= 0.0)) throw DomainError("translation distance must be non-negative");
  return {Complex{std::cosh(0.5 * d), 0.0}, Complex{std::sinh(0.5 * d), 0.0}};
}

MobiusMap MobiusMap::rotation(double theta) {
  if (!std::isfinite(theta)) throw DomainError("rotation angle must be finite");
  return {std::polar(1.0, 0.5 * theta), Complex{}};
}

DiskPoint MobiusMap::apply(const DiskPoint& p) const {
  const Complex z = p.z();
  return DiskPoint{(a_ * z + b_) / (std::conj(b_) * z + std::conj(a_))};
}

BoundaryPoint MobiusMap::apply(const BoundaryPoint& b) const {
  if (is_rotation()) return BoundaryPoint{b.angle() + 2.0 * std::arg(a_)};
  const Complex z = b.z();
  return BoundaryPoint{std::arg((a_ * z + b_) / (std::conj(b_) * z + std::conj(a_)))};
}

MobiusMap MobiusMap::inverse() const { return {std::conj(a_), -b_}; }

MobiusMap operator*(const MobiusMap& lhs, const MobiusMap& rhs) {
  // [[a1, b1], [b1*, a1*]] [[a2, b2], [b2*, a2*]]
  const Complex a = lhs.a_ * rhs.a_ + lhs.b_ * std::conj(rhs.b_);
  const Complex b = lhs.a_ * rhs.b_ + lhs.b_ * std::conj(rhs.a_);
  return {a, b};
}

double dist(const DiskPoint& p, const DiskPoint& q) {
  // sinh(dist/2) = |p - q| / sqrt((1 - |p|^2)(1 - |q|^2))
  const double chord = std::abs(p.z() - q.z());
  if (chord == 0.0) return 0.0;
  const double denom = std::sqrt(p.conformal_gap()) * std::sqrt(q.conformal_gap());
  return 2.0 * std::asinh(chord / denom);
}

double horocycle_bracket(const DiskPoint& p, const BoundaryPoint& b) {
  // Logarithm of the Poisson kernel (1 - |p|^2) / |p - b|^2.
  return std::log(p.conformal_gap()) - std::log(std::norm(p.z() - b.z()));
}

CircleGeometry circle_geometry(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("circle radius must be positive");
  return {d, std::tanh(0.5 * d), kTwoPi * std::sinh(d), kTwoPi * (std::cosh(d) - 1.0)};
}

double law_of_cosines(double a, double b, double gamma) {
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("triangle sides must be finite and non-negative");
  }
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi)) {
    throw DomainError("triangle angle must lie in [0, pi]");
  }
  // Half-angle form of cosh c = cosh a cosh b - sinh a sinh b cos(gamma):
  // sinh^2(c/2) = sinh^2((a-b)/2) + sinh a sinh b sin^2(gamma/2).
  const double diff = std::sinh(0.5 * (a - b));
  const double cross = std::sqrt(std::sinh(a)) * std::sqrt(std::sinh(b)) * std::sin(0.5 * gamma);
  return 2.0 * std::asinh(std::hypot(diff, cross));
}

DiskPoint polar_point(double r, double theta) {
  if (!(r >= 0.0)) throw DomainError("polar radius must be non-negative");
  return DiskPoint{std::polar(std::tanh(0.5 * r), theta)};
}

}  // namespace hypchrom
