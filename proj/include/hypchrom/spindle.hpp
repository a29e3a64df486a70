#pragma once

// Moser spindle with edge length d in the hyperbolic plane: two rhombi, each
// made of two equilateral triangles, hinged at P and rotated apart until their
// far tips t1, t2 are at distance d as well.

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hypchrom/hypgeo.hpp"

namespace hypchrom {

/// Vertex indices of the spindle.
enum SpindleVertex : std::size_t { kHinge = 0, kU1, kU2, kT1, kW1, kW2, kT2, kSpindleVertexCount };

inline constexpr std::array<std::pair<std::size_t, std::size_t>, 11> kSpindleEdges{{
    {kHinge, kU1}, {kHinge, kU2}, {kU1, kU2}, {kU1, kT1}, {kU2, kT1},
    {kHinge, kW1}, {kHinge, kW2}, {kW1, kW2}, {kW1, kT2}, {kW2, kT2},
    {kT1, kT2},
}};

/// Largest accepted |dist(edge) - d|.
inline constexpr double kSpindleTolerance = 1e-9;

struct SpindleEmbedding {
  double d = 0.0;
  std::array<DiskPoint, kSpindleVertexCount> points{};
  std::array<std::pair<std::size_t, std::size_t>, 11> edges = kSpindleEdges;
  double max_deviation = 0.0;
  double diagonal = 0.0;        ///< L = dist(P, t1) = dist(P, t2)
  double rotation_angle = 0.0;  ///< angle between the two rhombus axes at P
};

/// Simple undirected graph on at most 16 vertices.
class SmallGraph {
 public:
  static constexpr std::size_t kMaxVertices = 16;

  /// Throws DomainError for zero vertices, self loops or out-of-range
  /// endpoints, SizeError above kMaxVertices.
  SmallGraph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return vertex_count_; }
  /// Unordered edges stored as (min, max).
  const std::set<std::pair<std::size_t, std::size_t>>& adjacency() const { return adjacency_; }
  bool adjacent(std::size_t u, std::size_t v) const;

 private:
  std::size_t vertex_count_;
  std::set<std::pair<std::size_t, std::size_t>> adjacency_;
};

/// Interior angle of the equilateral triangle with side d.
double equilateral_angle(double d);

/// Builds the spindle with the hinge at O and the rhombus axes at angles
/// -theta/2 and +theta/2, then re-measures all 11 edges. Throws NumericError if
/// the edges cannot be certified to kSpindleTolerance in double precision
/// (the tips lie at distance ~d + ln 4 from O; disk coordinates lose the
/// needed accuracy from about d = 15 on).
SpindleEmbedding build_spindle(double d);

/// The abstract spindle graph.
SmallGraph spindle_graph();

/// Smallest k admitting a proper k-colouring, by exhaustive backtracking in
/// which vertex i may only use colours up to (largest colour so far) + 1.
std::size_t chromatic_number(const SmallGraph& g);

/// A proper colouring with k colours, if one exists.
std::optional<std::vector<std::size_t>> find_colouring(const SmallGraph& g, std::size_t k);

}  // namespace hypchrom
