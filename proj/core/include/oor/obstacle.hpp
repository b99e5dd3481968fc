#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "oor/drawing.hpp"

namespace oor {

class ObstacleError : public std::runtime_error {
 public:
  explicit ObstacleError(const std::string& what) : std::runtime_error(what) {}
};

/// Visibility graph of the points: pq is an edge iff the open segment pq
/// misses the closed obstacle region. An obstacle without vertices blocks
/// nothing. Throws InputError if a point lies in the closed obstacle.
Graph visibility_graph(const std::vector<RationalPoint>& points, const SimplePolygon& obstacle);

/// Single counterclockwise obstacle surrounding the drawing whose visibility
/// graph is exactly the drawn graph, with no three of the drawing points and
/// obstacle corners collinear. Throws InputError if the drawing is not a plane
/// drawing in general position with every non-edge meeting the outer face,
/// and ObstacleError if no candidate passes verification.
SimplePolygon build_obstacle(const Drawing& d);

/// Candidate obstacle for one clearance value and perturbation variant, before
/// any verification.
SimplePolygon obstacle_candidate(const DrawingAnalysis& a, const Rational& clearance, int variant = 0);

}  // namespace oor
