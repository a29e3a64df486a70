#include "hypchrom/spindle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypchrom/errors.hpp"
#include "hypchrom/report.hpp"

namespace hypchrom {

SmallGraph::SmallGraph(std::size_t vertex_count,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : vertex_count_(vertex_count) {
  if (vertex_count == 0) throw DomainError("graph needs at least one vertex");
  if (vertex_count > kMaxVertices) {
    throw SizeError("exhaustive colouring supports at most 16 vertices, got " +
                    std::to_string(vertex_count));
  }
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self loops are not allowed");
    adjacency_.insert(std::minmax(u, v));
  }
}

bool SmallGraph::adjacent(std::size_t u, std::size_t v) const {
  return adjacency_.contains(std::minmax(u, v));
}

double equilateral_angle(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("side length must be positive");
  // cos(alpha) = cosh d / (cosh d + 1), i.e. sin(alpha/2) = 1 / (2 cosh(d/2)).
  return 2.0 * std::asin(0.5 / std::cosh(0.5 * d));
}

SmallGraph spindle_graph() {
  return SmallGraph(kSpindleVertexCount, {kSpindleEdges.begin(), kSpindleEdges.end()});
}

SpindleEmbedding build_spindle(double d) {
  if (!(d > 0.0 && d <= 700.0)) throw DomainError("spindle edge length must lie in (0, 700]");
  SpindleEmbedding s;
  s.d = d;
  const double alpha = equilateral_angle(d);
  s.diagonal = law_of_cosines(d, d, 2.0 * alpha);

  // Triangle (P, t1, t2) with sides L, L, d: sin(theta/2) = sinh(d/2) / sinh(L).
  const double half_sine = std::sinh(0.5 * d) / std::sinh(s.diagonal);
  if (!(half_sine <= 1.0 + 1e-12)) {
    throw NumericError("spindle rotation angle is infeasible at d = " + format_number(d));
  }
  s.rotation_angle = 2.0 * std::asin(std::min(1.0, half_sine));

  const double axis1 = -0.5 * s.rotation_angle;
  const double axis2 = 0.5 * s.rotation_angle;
  try {
    s.points[kHinge] = DiskPoint::origin();
    s.points[kU1] = polar_point(d, axis1 - 0.5 * alpha);
    s.points[kU2] = polar_point(d, axis1 + 0.5 * alpha);
    s.points[kT1] = polar_point(s.diagonal, axis1);
    s.points[kW1] = polar_point(d, axis2 - 0.5 * alpha);
    s.points[kW2] = polar_point(d, axis2 + 0.5 * alpha);
    s.points[kT2] = polar_point(s.diagonal, axis2);
  } catch (const DomainError&) {
    throw NumericError("spindle vertices at distance " + format_number(s.diagonal) +
                       " from the origin are not representable in the disk at d = " +
                       format_number(d));
  }

  for (auto [i, j] : s.edges) {
    const double deviation = std::abs(dist(s.points[i], s.points[j]) - d);
    s.max_deviation = std::max(s.max_deviation, std::isnan(deviation) ? INFINITY : deviation);
  }
  if (!(s.max_deviation < kSpindleTolerance)) {
    throw NumericError("spindle edges deviate by " + format_number(s.max_deviation) +
                       " from d = " + format_number(d) + ", beyond double-precision reach");
  }
  return s;
}

namespace {

bool colour_from(const SmallGraph& g, std::size_t k, std::vector<std::size_t>& colour,
                 std::size_t vertex, std::size_t used) {
  if (vertex == g.vertex_count()) return true;
  const std::size_t limit = std::min(k, used + 1);
  for (std::size_t c = 0; c < limit; ++c) {
    bool ok = true;
    for (std::size_t u = 0; u < vertex && ok; ++u) {
      if (colour[u] == c && g.adjacent(u, vertex)) ok = false;
    }
    if (!ok) continue;
    colour[vertex] = c;
    if (colour_from(g, k, colour, vertex + 1, std::max(used, c + 1))) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_colouring(const SmallGraph& g, std::size_t k) {
  if (k == 0) return std::nullopt;
  std::vector<std::size_t> colour(g.vertex_count(), 0);
  if (colour_from(g, k, colour, 0, 0)) return colour;
  return std::nullopt;
}

std::size_t chromatic_number(const SmallGraph& g) {
  for (std::size_t k = 1;; ++k) {
    if (find_colouring(g, k)) return k;
  }
}

}  // namespace hypchrom
