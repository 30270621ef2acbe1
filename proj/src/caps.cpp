#include "obst/caps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace obst {

namespace {

// y-value of segment s at abscissa x; s must not be vertical and x must lie
// in its projection.
Scalar eval_at(const Segment& s, const Scalar& x) {
    return s.a.y + (x - s.a.x) * (s.b.y - s.a.y) / (s.b.x - s.a.x);
}

bool covers(const Segment& s, const Scalar& x) {
    return min(s.a.x, s.b.x) <= x && x <= max(s.a.x, s.b.x);
}

}  // namespace

std::vector<EnvelopeComponent> lower_envelope(std::span<const Segment> segments) {
    for (const auto& s : segments)
        if (s.a.x == s.b.x) throw std::invalid_argument("lower_envelope: vertical segment");

    // Breakpoints: projection endpoints plus crossing abscissae. Between two
    // consecutive breakpoints the minimizing segment cannot change.
    std::vector<Scalar> xs;
    const int n = static_cast<int>(segments.size());
    for (const auto& s : segments) {
        xs.push_back(s.a.x);
        xs.push_back(s.b.x);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SegIntersection r = seg_intersection(segments[i], segments[j]);
            if (r.kind == HitKind::Point) xs.push_back(r.p.x);
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<EnvelopeComponent> comps;
    bool open = false;
    Point last_pt;
    for (size_t k = 0; k + 1 < xs.size(); ++k) {
        const Scalar& xl = xs[k];
        const Scalar& xr = xs[k + 1];
        Scalar xm = (xl + xr) / Scalar(2);
        int win = -1;
        Scalar best;
        for (int i = 0; i < n; ++i) {
            if (!covers(segments[i], xm)) continue;
            Scalar y = eval_at(segments[i], xm);
            if (win < 0 || y < best) {
                win = i;
                best = y;
            }
        }
        if (win < 0) {
            open = false;  // gap in the union of projections
            continue;
        }
        Point pl{xl, eval_at(segments[win], xl)};
        Point pr{xr, eval_at(segments[win], xr)};
        if (!open || !(last_pt == pl)) {
            comps.emplace_back();
            comps.back().pts.push_back(pl);
            open = true;
        }
        // merge collinear continuation of the same source
        auto& c = comps.back();
        if (!c.piece_src.empty() && c.piece_src.back() == win) {
            c.pts.back() = pr;
        } else {
            c.pts.push_back(pr);
            c.piece_src.push_back(win);
        }
        last_pt = pr;
    }
    return comps;
}

std::string to_string(CapFail f) {
    switch (f) {
        case CapFail::TooShort: return "tuple shorter than 2";
        case CapFail::Vertical: return "vertical segment";
        case CapFail::NoIntersection: return "consecutive edges do not meet in a point";
        case CapFail::XOrder: return "cap vertices not x-increasing";
        case CapFail::SlopeOrder: return "slopes not strictly decreasing";
        case CapFail::Disconnected: return "vertices span several envelope components";
    }
    return "?";
}

CapResult form_cap(std::span<const Segment> ordered) {
    CapResult res;
    if (ordered.size() < 2) {
        res.fail = CapFail::TooShort;
        return res;
    }
    for (const auto& s : ordered)
        if (s.a.x == s.b.x) {
            res.fail = CapFail::Vertical;
            return res;
        }
    const int l = static_cast<int>(ordered.size());

    // condition order: consecutive intersections, x-monotone vertices,
    // strictly decreasing slopes, one envelope component
    std::vector<Point> verts;
    for (int i = 0; i + 1 < l; ++i) {
        SegIntersection r = seg_intersection(ordered[i], ordered[i + 1]);
        if (r.kind != HitKind::Point) {
            res.fail = CapFail::NoIntersection;
            return res;
        }
        verts.push_back(r.p);
    }
    for (int i = 0; i + 1 < static_cast<int>(verts.size()); ++i)
        if (!(verts[i].x < verts[i + 1].x)) {
            res.fail = CapFail::XOrder;
            return res;
        }
    for (int i = 0; i + 1 < l; ++i) {
        Scalar dx1 = ordered[i].b.x - ordered[i].a.x, dy1 = ordered[i].b.y - ordered[i].a.y;
        Scalar dx2 = ordered[i + 1].b.x - ordered[i + 1].a.x, dy2 = ordered[i + 1].b.y - ordered[i + 1].a.y;
        if (dx1.sign() < 0) { dx1 = -dx1; dy1 = -dy1; }
        if (dx2.sign() < 0) { dx2 = -dx2; dy2 = -dy2; }
        // exact slope comparison dy1/dx1 > dy2/dx2
        if (!((dy1 * dx2 - dy2 * dx1).sign() > 0)) {
            res.fail = CapFail::SlopeOrder;
            return res;
        }
    }

    std::vector<Segment> segs(ordered.begin(), ordered.end());
    auto comps = lower_envelope(segs);
    int home = -1;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        bool all = true;
        for (const auto& r : verts) {
            bool onc = false;
            for (size_t k = 0; k + 1 < comps[c].pts.size() && !onc; ++k)
                onc = on_segment(r, {comps[c].pts[k], comps[c].pts[k + 1]});
            if (!onc) {
                all = false;
                break;
            }
        }
        if (all) {
            home = c;
            break;
        }
    }
    if (home < 0) {
        res.fail = CapFail::Disconnected;
        return res;
    }

    Cap cap;
    cap.edges = std::move(segs);
    cap.vertices = std::move(verts);
    cap.polyline = comps[home];
    cap.pieces.assign(l, Segment{});
    std::vector<char> seen(l, 0);
    const auto& c = cap.polyline;
    for (size_t k = 0; k < c.piece_src.size(); ++k) {
        int s = c.piece_src[k];
        if (!seen[s]) {
            cap.pieces[s] = {c.pts[k], c.pts[k + 1]};
            seen[s] = 1;
        } else {
            cap.pieces[s].b = c.pts[k + 1];
        }
    }
    res.cap = std::move(cap);
    return res;
}

std::optional<int> good_face(const Cap& cap, const Arrangement& A) {
    std::vector<int> src;
    for (const auto& e : cap.edges) {
        auto id = A.source_index(e);
        if (!id) throw std::invalid_argument("is_good: cap edge is not a source segment of A");
        src.push_back(*id);
    }
    if (src.size() == 1) {
        for (int f : A.faces_of(src[0]))
            if (A.face[f].bounded) return f;
        return std::nullopt;
    }
    // bounded face incident to every cap edge
    std::vector<int> common = A.faces_of(src[0]);
    for (size_t i = 1; i < src.size() && !common.empty(); ++i) {
        const auto& fs = A.faces_of(src[i]);
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), fs.begin(), fs.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    for (int f : common)
        if (A.face[f].bounded) return f;
    return std::nullopt;
}

bool is_good(const Cap& cap, const Arrangement& A) {
    if (cap.edges.size() == 1) return true;
    return good_face(cap, A).has_value();
}

}  // namespace obst
