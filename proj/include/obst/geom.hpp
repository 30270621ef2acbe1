#pragma once

#include <span>
#include <vector>

#include "obst/rational.hpp"

namespace obst {

struct Point {
    Scalar x, y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// Lexicographic order; used for canonical vertex ordering everywhere.
inline bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

struct Segment {
    Point a, b;
};

inline Point midpoint(const Point& p, const Point& q) {
    return {(p.x + q.x) / Scalar(2), (p.y + q.y) / Scalar(2)};
}

inline Scalar dist_sq(const Point& p, const Point& q) {
    Scalar dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

/// Sign of the signed area of triangle pqr: +1 counterclockwise, 0 collinear.
int orient(const Point& p, const Point& q, const Point& r);

/// Closed point-on-segment test (collinear and within the bounding box).
bool on_segment(const Point& p, const Segment& s);

enum class HitKind { Empty, Point, Overlap };

struct SegIntersection {
    HitKind kind = HitKind::Empty;
    Point p;        // valid when kind == Point
    Segment seg;    // valid when kind == Overlap, endpoints in lex order
};

/// Exact intersection of two closed segments, classified.
SegIntersection seg_intersection(const Segment& s1, const Segment& s2);

/// Convex obstacle. rank 0: one vertex (a point), rank 1: two (a segment),
/// rank 2: >= 3 vertices in counterclockwise strictly convex position.
struct ConvexObstacle {
    std::vector<Point> vertices;
    int rank = 0;
};

/// Convex hull with degeneracy collapse: coincident points give rank 0,
/// collinear input gives rank 1 (the two extremes), otherwise a strictly
/// convex ccw polygon starting at the lexicographic minimum.
ConvexObstacle convex_hull(std::span<const Point> pts);

/// Closed containment, all degeneracy ranks.
bool point_in_convex(const ConvexObstacle& o, const Point& p);

/// True iff the closed segment meets the closed obstacle. Touching at a
/// single boundary point counts: obstacles block by closed-set semantics.
bool seg_hits_obstacle(const Segment& s, const ConvexObstacle& o);

}  // namespace obst
