#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "hypchrom/errors.hpp"
#include "hypchrom/hypgeo.hpp"
#include "oracles.hpp"

using namespace hypchrom;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

MobiusMap random_map(std::mt19937_64& rng, double max_shift = 2.0) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> shift(0.0, max_shift);
  return rotation(angle(rng)) * translate_to(shift(rng)) * rotation(angle(rng));
}

DiskPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> radius(0.0, 2.5);
  return polar_point(radius(rng), angle(rng));
}

}  // namespace

TEST_CASE("disk points must lie strictly inside the unit disk") {
  CHECK_NOTHROW(DiskPoint(0.3, 0.1));
  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(DiskPoint(0.8, 0.6), DomainError);
  CHECK_THROWS_AS(DiskPoint(std::nan(""), 0.0), DomainError);
}

TEST_CASE("boundary angles are canonical") {
  CHECK(BoundaryPoint(2.0 * kPi).angle() == 0.0);
  CHECK(BoundaryPoint(-0.5).angle() == Approx(2.0 * kPi - 0.5).epsilon(1e-15));
  CHECK(BoundaryPoint(7.0).angle() == Approx(7.0 - 2.0 * kPi).epsilon(1e-15));
}

TEST_CASE("dist") {
  const DiskPoint o = DiskPoint::origin();
  CHECK(dist(o, o) == 0.0);
  CHECK(dist(o, DiskPoint(0.5, 0.0)) == Approx(std::log(3.0)).epsilon(1e-15));
  // Integrating the metric along the radius gives the same length.
  CHECK(dist(o, DiskPoint(0.5, 0.0)) == Approx(oracle::radial_metric_length(0.5)).epsilon(1e-12));
  CHECK(dist(o, DiskPoint(std::tanh(1.0), 0.0)) == Approx(2.0).epsilon(1e-15));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const DiskPoint p = random_point(rng);
    const DiskPoint q = random_point(rng);
    CHECK(dist(p, q) == Approx(dist(q, p)).epsilon(1e-14));
    CHECK(dist(p, q) >= 0.0);
    // Cross-ratio form ln((1 + delta)/(1 - delta)).
    const double delta = std::abs(p.z() - q.z()) / std::abs(1.0 - std::conj(p.z()) * q.z());
    CHECK(dist(p, q) == Approx(std::log((1.0 + delta) / (1.0 - delta))).epsilon(1e-9));
  }
}

TEST_CASE("mobius maps") {
  const DiskPoint p(0.3, 0.1);
  CHECK(MobiusMap::identity().apply(p) == p);

  const DiskPoint moved = translate_to(2.0).apply(DiskPoint::origin());
  CHECK(moved.re() == Approx(0.761594155955765).epsilon(1e-14));
  CHECK(moved.im() == 0.0);
  CHECK(dist(DiskPoint::origin(), moved) == Approx(2.0).epsilon(1e-14));

  const MobiusMap t0 = translate_to(0.0);
  CHECK(t0.a() == Complex(1.0, 0.0));
  CHECK(t0.b() == Complex(0.0, 0.0));

  const MobiusMap t5 = translate_to(5.0);
  CHECK(t5.determinant() == Approx(1.0).epsilon(1e-12));

  const DiskPoint r = rotation(0.7).apply(p);
  CHECK(std::abs(r.z() - std::polar(1.0, 0.7) * p.z()) < 1e-15);

  CHECK_THROWS_AS(translate_to(-1.0), DomainError);
  CHECK_THROWS_AS(MobiusMap(Complex(0.5, 0.0), Complex(1.0, 0.0)), DomainError);
}

TEST_CASE("group laws") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const MobiusMap a = random_map(rng);
    const MobiusMap b = random_map(rng);
    const MobiusMap c = random_map(rng);
    const DiskPoint p = random_point(rng);

    CHECK(std::abs((a * a.inverse()).apply(p).z() - p.z()) < 1e-12);
    const DiskPoint left = ((a * b) * c).apply(p);
    const DiskPoint right = (a * (b * c)).apply(p);
    CHECK(std::abs(left.z() - right.z()) < 1e-12);
    CHECK(std::abs((a * b).apply(p).z() - a.apply(b.apply(p)).z()) < 1e-12);
  }

  // Long products stay on SU(1,1).
  MobiusMap m;
  for (int i = 0; i < 10000; ++i) m = m * random_map(rng, 0.1);
  CHECK(m.determinant() == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("isometry invariance of dist") {
  std::mt19937_64 rng(1234);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const MobiusMap m = random_map(rng);
    const DiskPoint p = random_point(rng);
    const DiskPoint q = random_point(rng);
    worst = std::max(worst, std::abs(dist(m.apply(p), m.apply(q)) - dist(p, q)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("horocycle bracket") {
  const DiskPoint o = DiskPoint::origin();
  for (const double angle : {0.0, 1.0, 2.5, 5.0}) {
    CHECK(horocycle_bracket(o, BoundaryPoint(angle)) == Approx(0.0).epsilon(1e-15));
  }
  CHECK(horocycle_bracket(DiskPoint(0.5, 0.0), BoundaryPoint(0.0)) ==
        Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(horocycle_bracket(DiskPoint(-0.5, 0.0), BoundaryPoint(0.0)) ==
        Approx(-std::log(3.0)).epsilon(1e-14));

  SUBCASE("signed radial distance along the direction of b") {
    // The horocycle through r b tangent at b crosses the diameter at r b, so
    // the bracket is the signed distance from O to that point.
    for (const double angle : {0.0, 0.9, 3.0}) {
      const BoundaryPoint b(angle);
      for (const double r : {-0.9, -0.3, 0.2, 0.7, 0.95}) {
        const DiskPoint p(std::polar(r, angle));
        const double signed_distance = std::copysign(dist(o, p), r);
        CHECK(horocycle_bracket(p, b) == Approx(signed_distance).epsilon(1e-12));
      }
    }
  }

  SUBCASE("cocycle identity") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const MobiusMap h = random_map(rng);
      const MobiusMap g = random_map(rng);
      const BoundaryPoint b(angle(rng));
      const double lhs = horocycle_bracket((h * g).apply(o), b);
      const double rhs =
          horocycle_bracket(g.apply(o), h.inverse().apply(b)) + horocycle_bracket(h.apply(o), b);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("boundary action of rotations is exact on the angle") {
  const BoundaryPoint b(1.0);
  CHECK(rotation(0.5).apply(b).angle() == Approx(1.5).epsilon(1e-15));
  const BoundaryPoint moved = translate_to(1.0).apply(BoundaryPoint(0.0));
  CHECK(moved.angle() == Approx(0.0).epsilon(1e-15));  // the axis endpoint is fixed
}

TEST_CASE("circle geometry") {
  const CircleGeometry c1 = circle_geometry(1.0);
  CHECK(c1.area == Approx(2.0 * kPi * (std::cosh(1.0) - 1.0)).epsilon(1e-15));
  CHECK(c1.area == Approx(3.412276).epsilon(1e-6));
  CHECK(c1.circumference == Approx(7.384007).epsilon(1e-6));
  CHECK(circle_geometry(2.0).euclidean_radius == Approx(0.761594).epsilon(1e-6));
  CHECK_THROWS_AS(circle_geometry(0.0), DomainError);
  CHECK_THROWS_AS(circle_geometry(-1.0), DomainError);
}

TEST_CASE("law of cosines") {
  CHECK(law_of_cosines(1.0, 1.0, 0.0) == 0.0);
  CHECK(law_of_cosines(1.0, 1.0, kPi) == Approx(2.0).epsilon(1e-15));
  const double d = 1.0;
  const double gamma = std::acos(std::cosh(d) / (std::cosh(d) + 1.0));
  CHECK(law_of_cosines(d, d, gamma) == Approx(d).epsilon(1e-12));

  // Agrees with the textbook acosh form where that is well conditioned.
  for (const double g : {0.3, 1.0, 2.0, 3.0}) {
    const double direct = std::acosh(std::cosh(1.5) * std::cosh(0.7) -
                                     std::sinh(1.5) * std::sinh(0.7) * std::cos(g));
    CHECK(law_of_cosines(1.5, 0.7, g) == Approx(direct).epsilon(1e-12));
  }

  SUBCASE("Euclidean limit for small triangles") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> side(1e-5, 1e-3);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    for (int i = 0; i < 200; ++i) {
      const double a = side(rng);
      const double b = side(rng);
      const double g = angle(rng);
      const double c = law_of_cosines(a, b, g);
      const double euclid = std::sqrt(a * a + b * b - 2.0 * a * b * std::cos(g));
      CHECK(std::abs(c - euclid) / euclid <= a * a + b * b);
      CHECK(c <= a + b + 1e-15);
      CHECK(c >= std::abs(a - b) - 1e-15);
    }
  }

  CHECK_THROWS_AS(law_of_cosines(-1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(law_of_cosines(1.0, 1.0, 4.0), DomainError);
}

TEST_CASE("polar points") {
  CHECK(polar_point(0.0, 1.2) == DiskPoint::origin());
  CHECK(polar_point(2.0, 0.0).re() == Approx(std::tanh(1.0)).epsilon(1e-15));
  CHECK(std::abs(polar_point(2.0, 0.0).z() - translate_to(2.0).apply(DiskPoint::origin()).z()) <
        1e-15);
  CHECK(std::abs(dist(DiskPoint::origin(), polar_point(7.0, 1.3)) - 7.0) < 1e-12);
  CHECK_THROWS_AS(polar_point(-0.1, 0.0), DomainError);
  // tanh(r/2) rounds to 1 this far out.
  CHECK_THROWS_AS(polar_point(80.0, 0.0), DomainError);
}
