#include "obst/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace obst {

int orient(const Point& p, const Point& q, const Point& r) {
    Scalar det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return det.sign();
}

bool on_segment(const Point& p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0) return false;
    return min(s.a.x, s.b.x) <= p.x && p.x <= max(s.a.x, s.b.x) &&
           min(s.a.y, s.b.y) <= p.y && p.y <= max(s.a.y, s.b.y);
}

namespace {

// Overlap of two collinear segments, as an interval along the common line.
SegIntersection collinear_overlap(const Segment& s1, const Segment& s2) {
    // Order endpoints lexicographically along the line.
    Point a1 = s1.a, b1 = s1.b, a2 = s2.a, b2 = s2.b;
    if (lex_less(b1, a1)) std::swap(a1, b1);
    if (lex_less(b2, a2)) std::swap(a2, b2);
    const Point& lo = lex_less(a1, a2) ? a2 : a1;
    const Point& hi = lex_less(b1, b2) ? b1 : b2;
    SegIntersection r;
    if (lex_less(hi, lo)) return r;  // disjoint
    if (lo == hi) {
        r.kind = HitKind::Point;
        r.p = lo;
    } else {
        r.kind = HitKind::Overlap;
        r.seg = {lo, hi};
    }
    return r;
}

}  // namespace

SegIntersection seg_intersection(const Segment& s1, const Segment& s2) {
    SegIntersection r;
    // Bounding box reject.
    if (max(s1.a.x, s1.b.x) < min(s2.a.x, s2.b.x) || max(s2.a.x, s2.b.x) < min(s1.a.x, s1.b.x) ||
        max(s1.a.y, s1.b.y) < min(s2.a.y, s2.b.y) || max(s2.a.y, s2.b.y) < min(s1.a.y, s1.b.y))
        return r;

    int d1 = orient(s2.a, s2.b, s1.a);
    int d2 = orient(s2.a, s2.b, s1.b);
    int d3 = orient(s1.a, s1.b, s2.a);
    int d4 = orient(s1.a, s1.b, s2.b);

    if (d1 == 0 && d2 == 0) return collinear_overlap(s1, s2);

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        // Proper crossing: s1.a + t (s1.b - s1.a), t = d3' / (d3' - d4') with
        // signed areas against s2; using the orient determinants directly.
        Scalar num = (s2.b.x - s2.a.x) * (s1.a.y - s2.a.y) - (s2.b.y - s2.a.y) * (s1.a.x - s2.a.x);
        Scalar den = (s2.b.y - s2.a.y) * (s1.b.x - s1.a.x) - (s2.b.x - s2.a.x) * (s1.b.y - s1.a.y);
        Scalar t = num / den;
        r.kind = HitKind::Point;
        r.p = {s1.a.x + t * (s1.b.x - s1.a.x), s1.a.y + t * (s1.b.y - s1.a.y)};
        return r;
    }

    // Endpoint touches.
    if (d1 == 0 && on_segment(s1.a, s2)) { r.kind = HitKind::Point; r.p = s1.a; return r; }
    if (d2 == 0 && on_segment(s1.b, s2)) { r.kind = HitKind::Point; r.p = s1.b; return r; }
    if (d3 == 0 && on_segment(s2.a, s1)) { r.kind = HitKind::Point; r.p = s2.a; return r; }
    if (d4 == 0 && on_segment(s2.b, s1)) { r.kind = HitKind::Point; r.p = s2.b; return r; }
    return r;
}

ConvexObstacle convex_hull(std::span<const Point> pts) {
    if (pts.empty()) throw std::invalid_argument("convex_hull: empty input");
    std::vector<Point> p(pts.begin(), pts.end());
    std::sort(p.begin(), p.end(), lex_less);
    p.erase(std::unique(p.begin(), p.end()), p.end());

    ConvexObstacle o;
    if (p.size() == 1) {
        o.vertices = {p[0]};
        o.rank = 0;
        return o;
    }
    bool all_collinear = true;
    for (size_t i = 2; i < p.size() && all_collinear; ++i)
        if (orient(p[0], p.back(), p[i - 1]) != 0) all_collinear = false;
    if (all_collinear) {
        o.vertices = {p.front(), p.back()};  // extremes in lex order
        o.rank = 1;
        return o;
    }

    // Monotone chain, strict turns only: collinear interior points are dropped
    // so rank-2 hulls are strictly convex.
    auto build = [&](std::vector<Point>& chain, auto begin, auto end) {
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 && orient(chain[chain.size() - 2], chain.back(), *it) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
    };
    std::vector<Point> lower, upper;
    build(lower, p.begin(), p.end());
    build(upper, p.rbegin(), p.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    o.vertices = std::move(lower);
    o.rank = 2;
    return o;
}

bool point_in_convex(const ConvexObstacle& o, const Point& p) {
    switch (o.rank) {
        case 0: return o.vertices[0] == p;
        case 1: return on_segment(p, {o.vertices[0], o.vertices[1]});
        default: break;
    }
    size_t n = o.vertices.size();
    for (size_t i = 0; i < n; ++i)
        if (orient(o.vertices[i], o.vertices[(i + 1) % n], p) < 0) return false;
    return true;
}

bool seg_hits_obstacle(const Segment& s, const ConvexObstacle& o) {
    switch (o.rank) {
        case 0: return on_segment(o.vertices[0], s);
        case 1: return seg_intersection(s, {o.vertices[0], o.vertices[1]}).kind != HitKind::Empty;
        default: break;
    }
    if (point_in_convex(o, s.a) || point_in_convex(o, s.b)) return true;
    size_t n = o.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        Segment side{o.vertices[i], o.vertices[(i + 1) % n]};
        if (seg_intersection(s, side).kind != HitKind::Empty) return true;
    }
    return false;
}

}  // namespace obst
