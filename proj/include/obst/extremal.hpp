#pragma once

#include <memory>
#include <vector>

#include "obst/drawing.hpp"
#include "obst/graphs.hpp"
#include "obst/verify.hpp"

namespace obst {

/// A uniform (i,k)-crossing of the regular drawing: gcd(i,k)=1, located on
/// the vertical line x = (i/k) w, together with the maximal concurrent edge
/// family through it (decreasing slope order).
struct UniformCrossing {
    int i, k;
    Point loc;
    std::vector<EdgeId> family;
};

/// All uniform (i,k)-crossings of the regular K_{n,n} (d1=h1=1) over coprime
/// pairs i < k <= K. Asserts, exactly: at most kn crossings per pair, at
/// least n^2-2in edges containing one, and no location shared across pairs.
std::vector<UniformCrossing> uniform_crossings(int n, const Scalar& w, int K);

/// Exact totient summatory function.
long long totient_sum(int m);

struct EOfHResult {
    int n = 0, h = 0;
    std::vector<int> faces;        // distinct selected faces of the K_P arrangement
    long long incident_edges = 0;  // |union of their incident edge sets|
    long long lower_bound = 0;     // ceil((2hn - h^2 - 1)/4)
};

/// Middle level-cap faces of a perturbed completed bipartite drawing; the
/// measured count is asserted against the lower bound.
EOfHResult e_of_h(int n, int h);

/// The base graph whose non-edges are exactly the pairs incident to the h
/// selected faces, and a representation of any supergraph with <= h convex
/// obstacles placed inside those faces.
Graph thm4_base_graph(int n, int h);
ObstacleRepresentation thm4_supergraph_rep(int n, int h, const Graph& gprime);
const std::vector<Point>& thm4_points(int n);

struct PairFamilyStats {
    int i = 0, k = 0;
    int crossings = 0;
    int faces = 0;
    long long complexity = 0;
    long long lower = 0;  // n^2 - 2kn
};

struct FaceFamilyReport {
    int n = 0;
    long long M = 0;
    int K = 0;
    int face_count = 0;
    std::vector<int> faces;  // face ids in the certified drawing's arrangement
    bool faces_distinct = false;
    long long complexity = 0;
    long long exact_lower = 0;     // sum over coprime pairs of n^2 - 2kn
    double asymptotic_ref = 0.0;   // 3 n^2 K^2 / pi^2 - n K^3, display only
    double ratio = 0.0;            // complexity / asymptotic_ref
    std::vector<PairFamilyStats> per_pair;
    int top_faces = 0;             // the min(M, |F|) most complex faces...
    long long top_complexity = 0;  // ...and their total complexity
};

/// Uniform-crossing face family in the certified dilated K_{n,n} with
/// K = round((M/n)^(1/3)). Exact inequalities are asserted; the asymptotic
/// reference is reported, never asserted.
FaceFamilyReport thm5_construction(int n, long long M);

/// Places matched vertex pairs antipodally on distinct rational directions so
/// their segments share the origin, blocked by one point obstacle; the
/// represented graph is K_n minus the matching {i, f(i)}. f maps 0-based
/// i in [0, floor(n/2)) to targets in [ceil(n/2), n).
ObstacleRepresentation single_obstacle_family(int n, const std::vector<int>& f);

}  // namespace obst
