#pragma once

#include <optional>
#include <vector>

#include "obst/drawing.hpp"
#include "obst/graphs.hpp"
#include "obst/verify.hpp"

namespace obst {

/// Representation of the complement of a bipartite graph H with sides given
/// by side[v] in {0,1}: vertices on a certified dilated drawing, one convex
/// obstacle per level that carries an edge of H. At most |V|-1 obstacles.
ObstacleRepresentation represent_cobipartite(const Graph& h, const std::vector<int>& side);

/// Representation of a bipartite graph itself: columns bowed into convex
/// arcs, skinny hull obstacles O_P/O_Q blocking the within-column pairs, and
/// level obstacles with the two corner levels merged. At most |V|-1.
ObstacleRepresentation represent_bipartite(const Graph& h, const std::vector<int>& side);

/// Split graphs: like represent_bipartite but only the independent side gets
/// an arc and a skinny obstacle. At most |V|-1.
ObstacleRepresentation represent_split(const Graph& g, const std::vector<int>& clique_side,
                                       const std::vector<int>& indep_side);

/// General graphs by recursive halving of a certified K_{n,n} drawing; at
/// most n ceil(log n) - n + 1 obstacles. The optional assignment maps vertex
/// v to row assignment[v] (a permutation of 0..n-1); vertices map to rows in
/// index order when absent.
ObstacleRepresentation represent_general(const Graph& g,
                                         const std::vector<int>* assignment = nullptr);

/// Subcoloring-driven construction: classes laid out as intervals, recursion
/// splits by classes, within-class non-edges blocked on the class column.
/// At most (n-1)(ceil(log k)+1) obstacles for a k-color subcoloring.
ObstacleRepresentation represent_subcolored(const Graph& g, const Subcoloring& c);

/// Perturbs the vertices off any collinear triples and re-seats the
/// obstacles so the same pairs stay blocked; identity when the input is
/// already in general position.
ObstacleRepresentation ensure_general_position(const Graph& g, const ObstacleRepresentation& rep);

int ceil_log2(int n);                    // smallest t with 2^t >= n
long long h_recursion(int n);            // h(n) = h(ceil n/2) + h(floor n/2) + n - 1, h(1) = 0
long long general_obstacle_bound(int n); // n ceil(log n) - n + 1

}  // namespace obst
