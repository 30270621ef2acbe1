#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <random>
#include <vector>

#include "obst/arrangement.hpp"
#include "obst/geom.hpp"

namespace oracle {

using namespace obst;

// Brute-force hit test: segment against every obstacle boundary edge plus
// containment of either endpoint.
inline bool seg_hits_obstacle_brute(const Segment& s, const ConvexObstacle& o) {
    if (o.rank == 0) return on_segment(o.vertices[0], s);
    size_t n = o.vertices.size();
    size_t sides = o.rank == 1 ? 1 : n;
    for (size_t i = 0; i < sides; ++i) {
        Segment side{o.vertices[i], o.vertices[(i + 1) % n]};
        if (seg_intersection(s, side).kind != HitKind::Empty) return true;
    }
    // endpoint strictly inside (boundary touches were caught above)
    if (o.rank == 2) {
        for (const Point* p : {&s.a, &s.b}) {
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i)
                if (orient(o.vertices[i], o.vertices[(i + 1) % n], *p) <= 0) inside = false;
            if (inside) return true;
        }
    }
    return false;
}

// Ray-parity point location against a face's stored boundary cycles; an
// algorithm independent of the half-edge traversal that produced them.
inline bool point_in_face_by_parity(const Arrangement& A, int f, const Point& p) {
    long crossings = 0;
    for (int h0 : A.face[f].cycles) {
        int h = h0;
        do {
            const Point& a = A.vertex[A.he_tail(h)];
            const Point& b = A.vertex[A.he_head(h)];
            // upward ray from p, half-open rule in y
            const Point *lo = &a, *hi = &b;
            if (hi->y < lo->y) std::swap(lo, hi);
            if (!(lo->y == hi->y)) {
                if (lo->y <= p.y && p.y < hi->y) {
                    Scalar x_at = lo->x + (p.y - lo->y) * (hi->x - lo->x) / (hi->y - lo->y);
                    if (p.x < x_at) ++crossings;
                }
            }
            h = A.he_next[h];
        } while (h != h0);
    }
    // each subdivision edge of the boundary is walked once per incident side;
    // edges with the face on both sides contribute twice and cancel mod 2
    return crossings % 2 == 1;
}

// Certified interior point of a bounded face: bisector nudge from a convex
// corner of the outer cycle, shrunk until the parity test accepts it.
inline Point interior_point_of_face(const Arrangement& A, int f) {
    int h0 = A.face[f].cycles.at(0);
    int h = h0;
    do {
        int hn = A.he_next[h];
        const Point& a = A.vertex[A.he_tail(h)];
        const Point& b = A.vertex[A.he_head(h)];
        const Point& c = A.vertex[A.he_head(hn)];
        if (orient(a, b, c) > 0) {
            // strictly convex corner at b: step along the angle bisector
            Scalar t(1, 4);
            for (int it = 0; it < 200; ++it, t /= Scalar(2)) {
                Point q{b.x + t * ((a.x - b.x) + (c.x - b.x)), b.y + t * ((a.y - b.y) + (c.y - b.y))};
                bool on_any = false;
                for (const auto& s : A.source)
                    if (on_segment(q, s)) {
                        on_any = true;
                        break;
                    }
                if (!on_any && point_in_face_by_parity(A, f, q)) return q;
            }
        }
        h = hn;
    } while (h != h0);
    throw std::runtime_error("interior_point_of_face: no certified point found");
}

inline Scalar rand_scalar(std::mt19937& rng, int num_range, int den_range) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Scalar(num(rng), den(rng));
}

inline Point rand_point(std::mt19937& rng, int num_range, int den_range) {
    return {rand_scalar(rng, num_range, den_range), rand_scalar(rng, num_range, den_range)};
}

}  // namespace oracle
