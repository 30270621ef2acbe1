#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obst/arrangement.hpp"
#include "obst/caps.hpp"
#include "obst/geom.hpp"

namespace obst {

/// Edge p_i q_j of a bipartite drawing; indices are 1-based.
struct EdgeId {
    int i, j;
    friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

/// Two point columns on vertical lines x=0 and x=w, y strictly increasing,
/// p_1=(0,0) and q_1=(w,0).
struct BipartiteDrawing {
    int m = 0, n = 0;
    Scalar w;
    std::vector<Point> P, Q;
    std::optional<Scalar> epsilon;

    const Point& p(int i) const { return P.at(i - 1); }
    const Point& q(int j) const { return Q.at(j - 1); }
    Scalar d(int i) const { return P.at(i).y - P.at(i - 1).y; }  // d_i, 1<=i<=m-1
    Scalar h(int j) const { return Q.at(j).y - Q.at(j - 1).y; }
    Segment edge(EdgeId e) const { return {p(e.i), q(e.j)}; }
    std::vector<Segment> all_edges() const;

    void validate() const;  // column/step invariants, incl. dilation when epsilon set
};

BipartiteDrawing regular_drawing(int m, int n, const Scalar& w, const Scalar& d1, const Scalar& h1);

/// Linear-ramp dilation schedule: d_i = d1 (1 + eps (i-1)/(m-1)).
BipartiteDrawing dilated_drawing(int m, int n, const Scalar& w, const Scalar& d1, const Scalar& h1,
                                 const Scalar& eps);

/// Edges p_i q_j with i+j=k+1, ordered by strictly decreasing slope.
std::vector<EdgeId> level_edges(const BipartiteDrawing& D, int k);

bool is_uniformly_crossing(const BipartiteDrawing& D, std::span<const EdgeId> tuple);

/// The regular drawing with the same m, n, w, d_1, h_1.
BipartiteDrawing regularize(const BipartiteDrawing& D);

/// Common intersection point of the tuple's edges in regularize(D).
Point meeting_point(const BipartiteDrawing& D, std::span<const EdgeId> tuple);

/// delta^2 where delta is half the minimum distance between two distinct
/// intersection points of a regular drawing. Exact; throws if the drawing has
/// fewer than two distinct intersection points.
Scalar min_intersection_gap_sq(const BipartiteDrawing& D);

struct DilationCertificate {
    Scalar eps;
    Scalar delta_sq;
    std::vector<std::string> checks;
};

/// A maximal concurrent edge family of the regularization: all edges through
/// one intersection point, ordered by decreasing slope.
struct ConcurrentFamily {
    Point meeting;
    std::vector<EdgeId> edges;
};

std::vector<ConcurrentFamily> concurrent_families(const BipartiteDrawing& regular);

struct CertifiedDrawing {
    BipartiteDrawing drawing;
    DilationCertificate cert;
    std::shared_ptr<const Arrangement> arr;  // arrangement of the dilated edges
};

/// Halving search from eps=1/2: the returned drawing satisfies, exactly,
/// (a) every pairwise edge intersection lies within delta of its regularized
/// counterpart (squared-distance check), and (b) the edges through each
/// intersection point of the regularization form a cap that is good in the
/// full arrangement. delta is half the minimum regular intersection gap,
/// further capped by delta_override when given. Results are cached per
/// parameter tuple, so repeated callers share the certificate.
CertifiedDrawing certify_epsilon(int m, int n, const Scalar& w, const Scalar& d1, const Scalar& h1,
                                 std::optional<Scalar> delta_override = {},
                                 Exec exec = Exec::Parallel);

/// Single certification attempt at a fixed eps against a fixed delta^2;
/// nullopt when a check fails.
std::optional<CertifiedDrawing> try_epsilon(int m, int n, const Scalar& w, const Scalar& d1,
                                            const Scalar& h1, const Scalar& delta_sq,
                                            const Scalar& eps, Exec exec = Exec::Parallel);

/// The delta^2 certify_epsilon would use: min intersection gap of the
/// regularization (or a positive fallback), capped by the override.
Scalar effective_delta_sq(int m, int n, const Scalar& w, const Scalar& d1, const Scalar& h1,
                          std::optional<Scalar> delta_override = {});

/// The level-cap of level k; single-edge levels yield a one-edge cap that is
/// good by definition. Throws if the certified structure is violated.
Cap level_cap(const BipartiteDrawing& D, int k, const Arrangement& A);

}  // namespace obst
