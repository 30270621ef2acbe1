#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "obst/geom.hpp"
#include "obst/graphs.hpp"
#include "obst/parallel.hpp"

namespace obst {

/// Vertex placement plus convex obstacles. A representation of G is valid
/// when a pair is an edge iff its segment avoids every obstacle, and no
/// obstacle contains a placed vertex.
struct ObstacleRepresentation {
    std::vector<Point> placement;
    std::vector<ConvexObstacle> obstacles;
    std::vector<std::string> tags;  // one provenance tag per obstacle
};

struct VerifyReport {
    bool pass = false;         // zero misclassified pairs, no vertex inside an obstacle
    bool strict_pass = false;  // pass and no edge segment through a third vertex
    std::vector<std::pair<int, int>> misclassified_as_edges;      // unblocked, but non-edges of G
    std::vector<std::pair<int, int>> misclassified_as_nonedges;   // blocked, but edges of G
    std::vector<std::pair<int, int>> vertex_in_obstacle;          // (vertex, obstacle)
    std::vector<std::tuple<int, int, int>> degenerate_edges;      // edge (u,v) through vertex w
};

/// Independent check of a claimed representation against a target graph.
/// Consults only geom primitives and the raw representation.
VerifyReport verify(const Graph& g, const ObstacleRepresentation& rep, Exec exec = Exec::Parallel);

/// For every non-edge of g, the number of obstacles its segment hits.
/// Keys are (u,v) with u < v.
std::vector<std::pair<std::pair<int, int>, int>> blocking_multiplicity(
    const Graph& g, const ObstacleRepresentation& rep);

}  // namespace obst
