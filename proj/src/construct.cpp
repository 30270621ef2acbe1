#include "obst/construct.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "detail.hpp"

namespace obst {

namespace detail {

Point interior_point_on_source(const Arrangement& A, int src) {
    int e = A.edges_of(src).at(0);
    return midpoint(A.vertex[A.edge[e].v0], A.vertex[A.edge[e].v1]);
}

Point touch_point_on_face(const Arrangement& A, int f, int src) {
    auto runs = A.pieces_of(f, src);
    if (runs.empty()) throw std::logic_error("touch_point_on_face: segment not on face boundary");
    Point mid = midpoint(runs[0].a, runs[0].b);
    if (A.vertex_index(mid) >= 0) mid = A.piece_interior_point(f, src);
    return mid;
}

std::optional<int> common_bounded_face(const Arrangement& A, std::span<const int> srcs) {
    if (srcs.empty()) return std::nullopt;
    std::vector<int> common = A.faces_of(srcs[0]);
    for (size_t i = 1; i < srcs.size() && !common.empty(); ++i) {
        std::vector<int> next;
        const auto& fs = A.faces_of(srcs[i]);
        std::set_intersection(common.begin(), common.end(), fs.begin(), fs.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    for (int f : common)
        if (A.face[f].bounded) return f;
    return std::nullopt;
}

std::optional<int> cap_good_face(const Cap& cap, const Arrangement& A, std::span<const int> srcs) {
    auto contains_all = [&](int f) {
        if (!A.face[f].bounded) return false;
        const auto& inc = A.face[f].incident;
        for (int s : srcs)
            if (!std::binary_search(inc.begin(), inc.end(), s)) return false;
        return true;
    };
    // The face just below a cap vertex carries the cap on its boundary: probe
    // the subdivision edge ending (or starting) at the vertex and take the
    // face on its lower side.
    for (size_t j = 0; j < cap.vertices.size(); ++j) {
        const Point& r = cap.vertices[j];
        int vid = A.vertex_index(r);
        if (vid < 0) continue;
        for (size_t which : {j, j + 1}) {
            if (which >= srcs.size()) continue;
            int src = srcs[which];
            const auto& cuts = A.cuts_of(src);
            auto it = std::lower_bound(cuts.begin(), cuts.end(), r, [&](int u, const Point& q) {
                return lex_less(A.vertex[u], q);
            });
            if (it == cuts.end() || !(A.vertex[*it] == r)) continue;
            size_t pos = static_cast<size_t>(it - cuts.begin());
            // subedge left of r on the steeper edge, right of r on the flatter
            size_t eidx;
            if (which == j) {
                if (pos == 0) continue;
                eidx = pos - 1;
            } else {
                eidx = pos;
            }
            const auto& es = A.edges_of(src);
            if (eidx >= es.size()) continue;
            int e = es[eidx];
            const Point& p0 = A.vertex[A.edge[e].v0];
            const Point& p1 = A.vertex[A.edge[e].v1];
            if (p0.x == p1.x) continue;
            int f = A.he_face[2 * e + 1];  // right-to-left half-edge: face below
            if (contains_all(f)) return f;
        }
    }
    // fallbacks: piece-midpoint probe, then plain incidence intersection
    static const Scalar params[] = {Scalar(1, 2), Scalar(1, 4), Scalar(3, 4)};
    for (size_t i = 0; i < cap.pieces.size(); ++i) {
        const Segment& piece = cap.pieces[i];
        if (piece.a == piece.b) continue;
        for (const Scalar& t : params) {
            Point p{piece.a.x + t * (piece.b.x - piece.a.x), piece.a.y + t * (piece.b.y - piece.a.y)};
            try {
                int f = A.face_right_below(srcs[i], p);
                if (contains_all(f)) return f;
            } catch (const std::invalid_argument&) {
                continue;  // landed on a vertex or a vertical subedge
            }
            break;
        }
    }
    return common_bounded_face(A, srcs);
}

Point dodge_point_on(const Segment& s, std::span<const Segment> avoid) {
    // dyadic parameters: 1/2, 1/4, 3/4, 1/8, 3/8, ...
    for (int level = 1; level <= 24; ++level) {
        for (long odd = 1; odd < (1L << level); odd += 2) {
            Scalar t(odd, 1L << level);
            Point p{s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)};
            bool bad = false;
            for (const auto& a : avoid)
                if (on_segment(p, a)) {
                    bad = true;
                    break;
                }
            if (!bad) return p;
        }
    }
    throw std::runtime_error("dodge_point_on: no free point found");
}

}  // namespace detail

int ceil_log2(int n) {
    if (n < 1) throw std::invalid_argument("ceil_log2: n must be positive");
    int t = 0;
    while ((1 << t) < n) ++t;
    return t;
}

long long h_recursion(int n) {
    if (n <= 1) return 0;
    return h_recursion((n + 1) / 2) + h_recursion(n / 2) + n - 1;
}

long long general_obstacle_bound(int n) {
    return static_cast<long long>(n) * ceil_log2(n) - n + 1;
}

namespace {

using detail::cap_good_face;
using detail::common_bounded_face;
using detail::dodge_point_on;
using detail::interior_point_on_source;
using detail::touch_point_on_face;

ConvexObstacle hull_of(const std::vector<Point>& pts) { return convex_hull(pts); }

// ---------------------------------------------------------------------------
// Arc layout for one color class: rows 0..s-1 at ((r)(s-1-r), r), a strictly
// convex chain, cliques as consecutive row intervals. A single obstacle (hull
// of the gap-chord midpoints plus the extreme-chord midpoint) meets every
// inter-clique chord and no intra-clique chord: the generators are strictly
// off every intra-clique line (a gap chord never interleaves an intra-clique
// pair), and for an inter-clique pair the hull has generators on both sides
// of its line while hull ∩ line stays inside the chord.
// ---------------------------------------------------------------------------

std::vector<Point> arc_points(int s) {
    std::vector<Point> pts;
    for (int r = 0; r < s; ++r) pts.push_back({Scalar(r) * Scalar(s - 1 - r), Scalar(r)});
    return pts;
}

// clique_of_row: nondecreasing over rows. Returns zero or one obstacle.
std::vector<ConvexObstacle> arc_class_obstacle(const std::vector<Point>& pts,
                                               const std::vector<int>& clique_of_row) {
    const int s = static_cast<int>(pts.size());
    std::vector<Point> gen;
    for (int r = 0; r + 1 < s; ++r)
        if (clique_of_row[r] != clique_of_row[r + 1]) gen.push_back(midpoint(pts[r], pts[r + 1]));
    if (gen.empty()) return {};
    gen.push_back(midpoint(pts[0], pts[s - 1]));
    return {hull_of(gen)};
}

// Representation of a disjoint union of cliques laid out on one arc;
// row_of_vertex gives the arc row of each vertex, cliques must occupy
// consecutive rows.
ObstacleRepresentation cluster_arc_rep(const Graph& g, const std::vector<int>& row_of_vertex,
                                       const std::vector<int>& clique_of_row, const char* tag) {
    auto pts = arc_points(g.n());
    ObstacleRepresentation rep;
    rep.placement.resize(g.n());
    for (int v = 0; v < g.n(); ++v) rep.placement[v] = pts[row_of_vertex[v]];
    for (auto& o : arc_class_obstacle(pts, clique_of_row)) {
        rep.obstacles.push_back(std::move(o));
        rep.tags.push_back(tag);
    }
    return rep;
}

// Empty graphs (every pair blocked) as the all-singleton-cliques arc.
ObstacleRepresentation empty_graph_rep(int n) {
    Graph g(n);
    std::vector<int> rows(n), cliques(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cliques.begin(), cliques.end(), 0);
    return cluster_arc_rep(g, rows, cliques, "arc-all");
}

// ---------------------------------------------------------------------------
// Bipartite-family constructors: per-level obstacles on a certified drawing
// ---------------------------------------------------------------------------

struct SidesView {
    std::vector<int> a, b;  // vertex ids per side, ascending
    int pos_a(int v) const { return static_cast<int>(std::lower_bound(a.begin(), a.end(), v) - a.begin()); }
    int pos_b(int v) const { return static_cast<int>(std::lower_bound(b.begin(), b.end(), v) - b.begin()); }
};

SidesView split_sides(const Graph& g, const std::vector<int>& side, bool edges_must_cross) {
    if (static_cast<int>(side.size()) != g.n())
        throw std::invalid_argument("bipartition size differs from vertex count");
    SidesView sv;
    for (int v = 0; v < g.n(); ++v) {
        if (side[v] == 0)
            sv.a.push_back(v);
        else if (side[v] == 1)
            sv.b.push_back(v);
        else
            throw std::invalid_argument("bipartition entries must be 0 or 1");
    }
    if (edges_must_cross)
        for (auto [u, v] : g.edges())
            if (side[u] == side[v])
                throw std::invalid_argument("graph has an edge inside one side of the bipartition");
    return sv;
}

// source index of edge p_i q_j in an m x n drawing arrangement (all_edges order)
int cross_src(int i, int j, int n) { return (i - 1) * n + (j - 1); }

ObstacleRepresentation assemble_cobipartite(const Graph& h, const SidesView& sv,
                                            const BipartiteDrawing& D, const Arrangement& A) {
    const int m = static_cast<int>(sv.a.size()), n = static_cast<int>(sv.b.size());
    ObstacleRepresentation rep;
    rep.placement.resize(h.n());
    for (int v : sv.a) rep.placement[v] = D.p(sv.pos_a(v) + 1);
    for (int v : sv.b) rep.placement[v] = D.q(sv.pos_b(v) + 1);

    for (int k = 1; k <= m + n - 1; ++k) {
        auto ids = level_edges(D, k);
        std::vector<EdgeId> blocked;
        for (const auto& e : ids)
            if (h.has_edge(sv.a[e.i - 1], sv.b[e.j - 1])) blocked.push_back(e);
        if (blocked.empty()) continue;
        std::ostringstream tag;
        tag << "level k=" << k;
        if (ids.size() == 1) {
            rep.obstacles.push_back({{interior_point_on_source(A, cross_src(ids[0].i, ids[0].j, n))}, 0});
            rep.tags.push_back(tag.str());
            continue;
        }
        Cap cap = level_cap(D, k, A);
        std::vector<int> srcs;
        for (const auto& e : ids) srcs.push_back(cross_src(e.i, e.j, n));
        auto f = cap_good_face(cap, A, srcs);
        if (!f) throw std::logic_error("cobipartite: level-cap face missing");
        std::vector<Point> gen;
        for (const auto& e : blocked) gen.push_back(touch_point_on_face(A, *f, cross_src(e.i, e.j, n)));
        rep.obstacles.push_back(hull_of(gen));
        rep.tags.push_back(tag.str());
    }
    return rep;
}

ObstacleRepresentation do_represent_cobipartite(const Graph& h, const std::vector<int>& side) {
    SidesView sv = split_sides(h, side, true);
    const int m = static_cast<int>(sv.a.size()), n = static_cast<int>(sv.b.size());
    if (m == 0 || n == 0) {
        // complement of an edgeless graph is complete: nothing to block
        ObstacleRepresentation rep;
        auto pts = arc_points(h.n());
        rep.placement = pts;
        return rep;
    }
    CertifiedDrawing cd = certify_epsilon(m, n, Scalar(1), Scalar(1), Scalar(1));
    return assemble_cobipartite(h, sv, cd.drawing, *cd.arr);
}

// Columns bowed toward each other with sagitta xi, for the skinny obstacles.
struct ArcedDrawing {
    int m, n;
    std::vector<Point> P, Q;
    Segment edge(EdgeId e) const { return {P[e.i - 1], Q[e.j - 1]}; }
    std::vector<Segment> all_edges() const {
        std::vector<Segment> out;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) out.push_back(edge({i, j}));
        return out;
    }
};

ArcedDrawing arc_columns(const BipartiteDrawing& D, const Scalar& xi, bool arc_p, bool arc_q) {
    ArcedDrawing out;
    out.m = D.m;
    out.n = D.n;
    for (int i = 1; i <= D.m; ++i) {
        Scalar b = arc_p ? xi * Scalar(i - 1) * Scalar(D.m - i) : Scalar(0);
        out.P.push_back({b, D.p(i).y});
    }
    for (int j = 1; j <= D.n; ++j) {
        Scalar b = arc_q ? xi * Scalar(j - 1) * Scalar(D.n - j) : Scalar(0);
        out.Q.push_back({D.w - b, D.q(j).y});
    }
    return out;
}

// hull of consecutive-pair midpoints plus the extreme-chord midpoint
ConvexObstacle skinny_obstacle(const std::vector<Point>& col) {
    std::vector<Point> gen;
    for (size_t i = 0; i + 1 < col.size(); ++i) gen.push_back(midpoint(col[i], col[i + 1]));
    gen.push_back(midpoint(col.front(), col.back()));
    return hull_of(gen);
}

struct BipartiteFamilyOptions {
    bool arc_p, arc_q;  // which sides get an arc and a skinny obstacle
};

// One xi attempt; throws on structural failure (caller halves xi).
ObstacleRepresentation assemble_bipartite_family(const Graph& g, const SidesView& sv, const BipartiteDrawing& D,
                                     const Scalar& xi, const BipartiteFamilyOptions& opt) {
    const int m = static_cast<int>(sv.a.size()), n = static_cast<int>(sv.b.size());
    ArcedDrawing AD = arc_columns(D, xi, opt.arc_p && m >= 3, opt.arc_q && n >= 3);
    Arrangement A = build(AD.all_edges());

    ObstacleRepresentation rep;
    rep.placement.resize(g.n());
    for (int v : sv.a) rep.placement[v] = AD.P[sv.pos_a(v)];
    for (int v : sv.b) rep.placement[v] = AD.Q[sv.pos_b(v)];

    auto blocked_in = [&](int k) {
        std::vector<EdgeId> out;
        for (const auto& e : level_edges(D, k))
            if (!g.has_edge(sv.a[e.i - 1], sv.b[e.j - 1])) out.push_back(e);
        return out;
    };
    auto corner_obstacle = [&](const std::vector<EdgeId>& triple, const std::vector<int>& levels,
                               const char* tag) {
        std::vector<EdgeId> blocked;
        for (int k : levels)
            for (const auto& e : blocked_in(k)) blocked.push_back(e);
        if (blocked.empty()) return;
        std::vector<int> srcs;
        for (const auto& e : triple) srcs.push_back(cross_src(e.i, e.j, n));
        auto f = common_bounded_face(A, srcs);
        if (!f) throw std::logic_error("bipartite family: corner face missing");
        std::vector<Point> gen;
        for (const auto& e : blocked) gen.push_back(touch_point_on_face(A, *f, cross_src(e.i, e.j, n)));
        rep.obstacles.push_back(hull_of(gen));
        rep.tags.push_back(tag);
    };

    const bool corners = m >= 2 && n >= 2;
    if (corners) {
        corner_obstacle({{1, 1}, {1, 2}, {2, 1}}, {1, 2}, "corner-bottom");
        std::vector<int> top_levels;
        for (int k : {m + n - 2, m + n - 1})
            if (k > 2) top_levels.push_back(k);
        corner_obstacle({{m, n}, {m, n - 1}, {m - 1, n}}, top_levels, "corner-top");
    }

    int klo = corners ? 3 : 1;
    int khi = corners ? m + n - 3 : m + n - 1;
    for (int k = klo; k <= khi; ++k) {
        auto blocked = blocked_in(k);
        if (blocked.empty()) continue;
        auto ids = level_edges(D, k);
        std::ostringstream tag;
        tag << "level k=" << k;
        if (ids.size() == 1) {
            rep.obstacles.push_back({{interior_point_on_source(A, cross_src(ids[0].i, ids[0].j, n))}, 0});
            rep.tags.push_back(tag.str());
            continue;
        }
        std::vector<Segment> segs;
        std::vector<int> srcs;
        for (const auto& e : ids) {
            segs.push_back(AD.edge(e));
            srcs.push_back(cross_src(e.i, e.j, n));
        }
        CapResult cr = form_cap(segs);
        if (!cr) throw std::logic_error("bipartite family: level is not a cap under this arc");
        auto f = cap_good_face(*cr.cap, A, srcs);
        if (!f) throw std::logic_error("bipartite family: level-cap face missing");
        std::vector<Point> gen;
        for (const auto& e : blocked) gen.push_back(touch_point_on_face(A, *f, cross_src(e.i, e.j, n)));
        rep.obstacles.push_back(hull_of(gen));
        rep.tags.push_back(tag.str());
    }

    if (opt.arc_p && m >= 2) {
        rep.obstacles.push_back(skinny_obstacle(AD.P));
        rep.tags.push_back("O_P");
    }
    if (opt.arc_q && n >= 2) {
        rep.obstacles.push_back(skinny_obstacle(AD.Q));
        rep.tags.push_back("O_Q");
    }
    return rep;
}

ObstacleRepresentation bipartite_family_search(const Graph& g, const SidesView& sv, const BipartiteFamilyOptions& opt,
                                   int budget) {
    const int m = static_cast<int>(sv.a.size()), n = static_cast<int>(sv.b.size());
    CertifiedDrawing cd = certify_epsilon(std::max(m, 1), std::max(n, 1), Scalar(1), Scalar(1), Scalar(1));
    Scalar xi(1, 8);
    for (int it = 0; it < 64; ++it, xi /= Scalar(2)) {
        ObstacleRepresentation rep;
        try {
            rep = assemble_bipartite_family(g, sv, cd.drawing, xi, opt);
        } catch (const std::logic_error&) {  // covers invalid_argument
            continue;
        }
        if (static_cast<int>(rep.obstacles.size()) > budget) continue;
        if (verify(g, rep).pass) return rep;
    }
    throw std::runtime_error("bipartite family: no sagitta passed verification");
}

// Bespoke layouts for the 2+2 bipartite case, where the generic count can
// reach 4 > |V|-1.
ObstacleRepresentation bipartite_2x2(const Graph& g, const SidesView& sv) {
    // cluster graph (H is a matching): arc layout, cliques = components
    std::vector<std::pair<int, int>> es = g.edges();
    bool cluster = true;
    for (size_t i = 0; i < es.size() && cluster; ++i)
        for (size_t j = i + 1; j < es.size() && cluster; ++j)
            if (es[i].first == es[j].first || es[i].second == es[j].second ||
                es[i].first == es[j].second || es[i].second == es[j].first)
                cluster = false;
    if (cluster) {
        // order vertices so matched pairs are consecutive
        std::vector<int> order;
        std::vector<char> used(g.n(), 0);
        for (auto [u, v] : es) {
            order.push_back(u);
            order.push_back(v);
            used[u] = used[v] = 1;
        }
        for (int v = 0; v < g.n(); ++v)
            if (!used[v]) order.push_back(v);
        std::vector<int> row_of(g.n()), clique_of_row(g.n());
        std::vector<char> matched(g.n(), 0);
        for (auto [u, v] : es) matched[u] = matched[v] = 1;
        int clique = 0;
        for (int r = 0; r < g.n(); ++r) {
            row_of[order[r]] = r;
            clique_of_row[r] = clique;
            bool pair_start = matched[order[r]] && r + 1 < g.n() && g.has_edge(order[r], order[r + 1]);
            if (!pair_start) ++clique;
        }
        auto rep = cluster_arc_rep(g, row_of, clique_of_row, "arc-cluster");
        if (verify(g, rep).pass) return rep;
    }

    // two edges sharing a center: far-vertex shield + one point obstacle
    if (es.size() == 2) {
        int center = -1;
        for (int v = 0; v < 4; ++v)
            if (g.degree(v) == 2) center = v;
        if (center >= 0) {
            int a = -1, b = -1, iso = -1;
            for (int v = 0; v < 4; ++v) {
                if (v == center) continue;
                if (g.has_edge(center, v))
                    (a < 0 ? a : b) = v;
                else
                    iso = v;
            }
            ObstacleRepresentation rep;
            rep.placement.resize(4);
            rep.placement[center] = {Scalar(0), Scalar(0)};
            rep.placement[a] = {Scalar(-4), Scalar(7)};
            rep.placement[b] = {Scalar(4), Scalar(7)};
            rep.placement[iso] = {Scalar(40), Scalar(1)};
            rep.obstacles.push_back({{{Scalar(20), Scalar(-50)}, {Scalar(20), Scalar(50)}}, 1});
            rep.tags.push_back("shield");
            Segment ab{rep.placement[a], rep.placement[b]};
            std::vector<Segment> avoid;
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v)
                    if (!(u == std::min(a, b) && v == std::max(a, b)))
                        avoid.push_back({rep.placement[u], rep.placement[v]});
            rep.obstacles.push_back({{dodge_point_on(ab, avoid)}, 0});
            rep.tags.push_back("point");
            if (verify(g, rep).pass) return rep;
        }
    }

    // few non-edges: one exact-dodged point obstacle per non-edge
    {
        auto pts = arc_points(4);
        ObstacleRepresentation rep;
        rep.placement = pts;
        std::vector<std::pair<int, int>> nonedges;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                if (!g.has_edge(u, v)) nonedges.emplace_back(u, v);
        for (auto [u, v] : nonedges) {
            std::vector<Segment> avoid;
            for (int x = 0; x < 4; ++x)
                for (int y = x + 1; y < 4; ++y)
                    if (!(x == u && y == v)) avoid.push_back({pts[x], pts[y]});
            rep.obstacles.push_back({{dodge_point_on({pts[u], pts[v]}, avoid)}, 0});
            rep.tags.push_back("point");
        }
        if (static_cast<int>(rep.obstacles.size()) <= 3 && verify(g, rep).pass) return rep;
    }
    throw std::runtime_error("bipartite 2x2: no bespoke layout verified");
}

}  // namespace

ObstacleRepresentation represent_cobipartite(const Graph& h, const std::vector<int>& side) {
    return do_represent_cobipartite(h, side);
}

ObstacleRepresentation represent_bipartite(const Graph& h, const std::vector<int>& side) {
    SidesView sv = split_sides(h, side, true);
    if (h.edge_count() == 0) return empty_graph_rep(h.n());
    const int m = static_cast<int>(sv.a.size()), n = static_cast<int>(sv.b.size());
    if (m == 2 && n == 2) return bipartite_2x2(h, sv);
    return bipartite_family_search(h, sv, {true, true}, h.n() - 1);
}

ObstacleRepresentation represent_split(const Graph& g, const std::vector<int>& clique_side,
                                       const std::vector<int>& indep_side) {
    std::vector<int> side(g.n(), -1);
    for (int v : clique_side) side.at(v) = 0;
    for (int v : indep_side) side.at(v) = 1;
    for (int v = 0; v < g.n(); ++v)
        if (side[v] < 0) throw std::invalid_argument("split: partition does not cover all vertices");
    for (size_t i = 0; i < clique_side.size(); ++i)
        for (size_t j = i + 1; j < clique_side.size(); ++j)
            if (!g.has_edge(clique_side[i], clique_side[j]))
                throw std::invalid_argument("split: declared clique side is not a clique");
    for (size_t i = 0; i < indep_side.size(); ++i)
        for (size_t j = i + 1; j < indep_side.size(); ++j)
            if (g.has_edge(indep_side[i], indep_side[j]))
                throw std::invalid_argument("split: declared independent side is not independent");

    if (g.edge_count() == 0) return empty_graph_rep(g.n());
    if (indep_side.empty()) {
        // complete graph: nothing to block
        ObstacleRepresentation rep;
        rep.placement = arc_points(g.n());
        return rep;
    }
    // within-clique edges stay on the straight P line; level obstacles see
    // only the cross pairs, the verifier sees all of g
    SidesView sv = split_sides(g, side, false);
    return bipartite_family_search(g, sv, {false, true}, g.n() - 1);
}

// ---------------------------------------------------------------------------
// Recursive halving scaffold shared by the general and subcoloring
// constructions. Units are the indivisible row blocks: single rows for the
// general construction, whole color classes for the subcoloring one. All
// "sufficiently small" shifts are found by verified halving against exact
// predicates; the expensive drawing work is graph-independent so it can be
// cached and reused across target graphs.
// ---------------------------------------------------------------------------

namespace {

struct ScaffoldFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapPlan {
    std::vector<std::pair<int, int>> row_pairs;  // (lower row, higher row), slope order
    std::vector<Point> touch;                    // one touch point per edge, filled at the end
    std::string tag;
};

struct Scaffold {
    int n_rows = 0;
    std::vector<Point> row_pos;
    std::vector<CapPlan> caps;
    std::vector<std::pair<int, int>> drawn;  // creation order
    std::shared_ptr<Arrangement> arr;        // final arrangement of the drawn segments
    std::vector<Scalar> unit_x;              // final column of each unit
};

// alpha: minimum face clearance below the level lines of the certified
// drawing, capped at delta and halved for strict headroom.
Scalar compute_alpha(const BipartiteDrawing& D, const Arrangement& A, const Scalar& delta_sq) {
    const int n = D.n;
    Scalar alpha;
    bool has = false;
    for (int k = 2; k <= 2 * n - 2; ++k) {
        auto ids = level_edges(D, k);
        if (ids.size() < 2) continue;
        Scalar ell = (k % 2 == 1) ? D.p((k + 1) / 2).y
                                  : (D.p(k / 2).y + D.p(k / 2 + 1).y) / Scalar(2);
        Cap cap = level_cap(D, k, A);
        std::vector<int> srcs;
        for (const auto& e : ids) srcs.push_back(cross_src(e.i, e.j, n));
        auto f = cap_good_face(cap, A, srcs);
        if (!f) throw ScaffoldFail("alpha: level face missing");
        for (const auto& e : ids) {
            if (!(e.j > e.i)) continue;  // positive-slope edges only
            auto runs = A.pieces_of(*f, cross_src(e.i, e.j, n));
            if (runs.empty()) throw ScaffoldFail("alpha: level edge not on its face");
            Scalar lowest = min(runs[0].a.y, runs[0].b.y);
            for (const auto& r : runs) lowest = min(lowest, min(r.a.y, r.b.y));
            Scalar clearance = ell - lowest;
            if (!(clearance > Scalar(0))) throw ScaffoldFail("alpha: no clearance below level line");
            if (!has || clearance < alpha) {
                alpha = clearance;
                has = true;
            }
        }
    }
    if (!has) alpha = Scalar(1, 4);
    Scalar dr(1);
    while (!(dr * dr <= delta_sq)) dr /= Scalar(2);  // largest 2^-t with square <= delta^2
    return min(alpha, dr) / Scalar(2);
}

struct Engine {
    const BipartiteDrawing& D;
    Scalar alpha;
    int shrink;  // extra conservatism per retry attempt
    Exec exec;

    struct Part {
        int ulo, uhi;  // unit interval
        Scalar x;
    };
    struct Strip {
        Scalar lo, hi;
        int j;
    };
    struct DEdge {
        int rl, rh;  // rows, rl < rh (left column is always the lower block)
        int gamma;   // step that drew it
    };

    std::vector<std::vector<int>> units;
    std::vector<Scalar> rowX;
    std::vector<Scalar> rowY;
    std::vector<Part> parts;
    std::vector<Strip> strips;
    std::vector<DEdge> drawn;
    std::vector<CapPlan> caps;

    std::vector<int> part_rows(const Part& p) const {
        std::vector<int> rows;
        for (int u = p.ulo; u < p.uhi; ++u) rows.insert(rows.end(), units[u].begin(), units[u].end());
        return rows;
    }

    void add_subdrawing_caps(const std::vector<int>& lo_rows, const std::vector<int>& hi_rows, int j,
                             int k, std::vector<CapPlan>& out) const {
        const int a = static_cast<int>(lo_rows.size()), b = static_cast<int>(hi_rows.size());
        for (int t = 1; t <= a + b - 1; ++t) {
            CapPlan plan;
            for (int i = std::max(1, t + 1 - b); i <= std::min(a, t); ++i)
                plan.row_pairs.emplace_back(lo_rows[i - 1], hi_rows[t - i]);
            std::ostringstream tag;
            tag << "level k=" << t << " sub=" << j << "," << k;
            plan.tag = tag.str();
            out.push_back(std::move(plan));
        }
    }

    Segment seg_of(const DEdge& e, const std::vector<Scalar>& X) const {
        return {{X[e.rl], rowY[e.rl]}, {X[e.rh], rowY[e.rh]}};
    }

    // all caps must form and have a common bounded face in the arrangement of
    // the current edge set
    bool caps_good(const std::vector<DEdge>& edges, const std::vector<CapPlan>& plans,
                   const std::vector<Scalar>& X) const {
        std::vector<Segment> segs;
        segs.reserve(edges.size());
        std::map<std::pair<int, int>, int> src_of;
        for (const auto& e : edges) {
            src_of[{e.rl, e.rh}] = static_cast<int>(segs.size());
            segs.push_back(seg_of(e, X));
        }
        Arrangement A;
        try {
            A = build(segs, {false, exec});
        } catch (const std::invalid_argument&) {
            return false;
        }
        for (const auto& plan : plans) {
            if (plan.row_pairs.size() < 2) continue;
            std::vector<Segment> cs;
            std::vector<int> srcs;
            for (auto [rl, rh] : plan.row_pairs) {
                cs.push_back(segs[src_of.at({rl, rh})]);
                srcs.push_back(src_of.at({rl, rh}));
            }
            CapResult cr = form_cap(cs);
            if (!cr) return false;
            if (!cap_good_face(*cr.cap, A, srcs)) return false;
        }
        return true;
    }

    // band condition: the portion of an older edge inside any newer strip
    // stays within the open alpha-band of one of its endpoint rows
    bool bands_ok(const std::vector<Strip>& all_strips, const std::vector<Scalar>& X) const {
        for (const auto& e : drawn) {
            Scalar xa = X[e.rl], ya = rowY[e.rl];
            Scalar xb = X[e.rh], yb = rowY[e.rh];
            if (xa == xb) return false;
            const Scalar& xlo = xa < xb ? xa : xb;
            const Scalar& xhi = xa < xb ? xb : xa;
            for (const auto& s : all_strips) {
                if (s.j <= e.gamma) continue;
                Scalar lo = max(s.lo, xlo), hi = min(s.hi, xhi);
                if (hi < lo) continue;
                auto y_at = [&](const Scalar& x) { return ya + (x - xa) * (yb - ya) / (xb - xa); };
                Scalar y1 = y_at(lo), y2 = y_at(hi);
                Scalar ymin = min(y1, y2), ymax = max(y1, y2);
                bool in_a = (ya - alpha < ymin) && (ymax < ya + alpha);
                bool in_b = (yb - alpha < ymin) && (ymax < yb + alpha);
                if (!in_a && !in_b) return false;
            }
        }
        return true;
    }

    void first_step() {
        const int U = static_cast<int>(units.size());
        int usplit = (U + 1) / 2;
        parts.push_back({0, usplit, Scalar(0)});
        parts.push_back({usplit, U, Scalar(1)});
        for (const auto& p : parts)
            for (int r : part_rows(p))
                rowX[r] = p.x;
        strips.push_back({Scalar(0), Scalar(1), 1});
        auto lo_rows = part_rows(parts[0]);
        auto hi_rows = part_rows(parts[1]);
        for (int ra : lo_rows)
            for (int rb : hi_rows) drawn.push_back({ra, rb, 1});
        add_subdrawing_caps(lo_rows, hi_rows, 1, 1, caps);
        if (!caps_good(drawn, caps, rowX)) throw ScaffoldFail("step 1: caps not good");
    }

    void split_steps() {
        Scalar prev_eps = min(alpha, Scalar(1, 4));
        for (int j = 2;; ++j) {
            bool any = false;
            for (const auto& p : parts)
                if (p.uhi - p.ulo >= 2) any = true;
            if (!any) break;
            if (j > 64) throw ScaffoldFail("too many split steps");

            Scalar ratio(1, 16 << (2 * std::min(shrink, 8)));
            Scalar eps = prev_eps * ratio;
            bool committed = false;
            for (int tries = 0; tries < 80; ++tries, eps /= Scalar(2)) {
                // simulate the shift
                std::vector<Part> new_parts;
                std::vector<Strip> new_strips;
                struct Sub {
                    std::vector<int> lo_rows, hi_rows;
                    int k;
                };
                std::vector<Sub> subs;
                for (int k = 1; k <= static_cast<int>(parts.size()); ++k) {
                    const Part& p = parts[k - 1];
                    int u = p.uhi - p.ulo;
                    if (u == 1) {
                        new_parts.push_back(p);
                        continue;
                    }
                    int mid = p.ulo + (u + 1) / 2;
                    Part bottom{p.ulo, mid, p.x}, top{mid, p.uhi, p.x};
                    if (k % 2 == 1)
                        top.x += eps;  // odd part: top half moves right
                    else
                        bottom.x -= eps;  // even part: bottom half moves left
                    new_strips.push_back({min(bottom.x, top.x), max(bottom.x, top.x), j});
                    Part b2 = bottom, t2 = top;
                    new_parts.push_back(b2);
                    new_parts.push_back(t2);
                    subs.push_back({part_rows(bottom), part_rows(top), k});
                }
                // columns stay distinct and ordered; strips stay laminar and
                // contain exactly their two defining columns
                bool ok = true;
                for (size_t i = 0; i + 1 < new_parts.size() && ok; ++i)
                    if (!(new_parts[i].x < new_parts[i + 1].x)) ok = false;
                for (const auto& v : new_strips) {
                    if (!ok) break;
                    for (const auto& s : strips) {
                        bool inside = s.lo <= v.lo && v.hi <= s.hi;
                        bool outside = v.hi < s.lo || s.hi < v.lo;
                        if (!inside && !outside) ok = false;
                    }
                    int within = 0;
                    for (const auto& p : new_parts)
                        if (v.lo <= p.x && p.x <= v.hi) ++within;
                    if (within != 2) ok = false;
                }
                if (!ok) continue;

                std::vector<Scalar> X = rowX;
                for (const auto& p : new_parts)
                    for (int r : part_rows(p)) X[r] = p.x;

                std::vector<Strip> all_strips = strips;
                all_strips.insert(all_strips.end(), new_strips.begin(), new_strips.end());
                if (!bands_ok(all_strips, X)) continue;

                std::vector<DEdge> new_drawn = drawn;
                std::vector<CapPlan> new_caps = caps;
                for (const auto& sub : subs) {
                    for (int ra : sub.lo_rows)
                        for (int rb : sub.hi_rows) new_drawn.push_back({ra, rb, j});
                    add_subdrawing_caps(sub.lo_rows, sub.hi_rows, j, sub.k, new_caps);
                }
                if (!caps_good(new_drawn, new_caps, X)) continue;

                parts = std::move(new_parts);
                strips = std::move(all_strips);
                drawn = std::move(new_drawn);
                caps = std::move(new_caps);
                rowX = std::move(X);
                prev_eps = eps;
                committed = true;
                break;
            }
            if (!committed) throw ScaffoldFail("no shift passed at a split step");
        }
    }
};

Point dyadic_point_avoiding(const Arrangement& A, const Segment& run,
                            std::span<const Segment> avoid) {
    for (int level = 1; level <= 24; ++level)
        for (long odd = 1; odd < (1L << level); odd += 2) {
            Scalar t(odd, 1L << level);
            Point p{run.a.x + t * (run.b.x - run.a.x), run.a.y + t * (run.b.y - run.a.y)};
            if (A.vertex_index(p) >= 0) continue;
            bool bad = false;
            for (const auto& s : avoid)
                if (on_segment(p, s)) {
                    bad = true;
                    break;
                }
            if (!bad) return p;
        }
    throw ScaffoldFail("no interior touch point clear of the avoid set");
}

Scaffold run_scaffold(const CertifiedDrawing& cd, std::vector<std::vector<int>> units, bool perturb,
                      int shrink, Exec exec) {
    const int n = cd.drawing.n;
    Scalar alpha = compute_alpha(cd.drawing, *cd.arr, cd.cert.delta_sq);

    Engine eng{cd.drawing, alpha, shrink, exec, {}, {}, {}, {}, {}, {}, {}};
    eng.units = std::move(units);
    eng.rowX.assign(n, Scalar(0));
    eng.rowY.resize(n);
    for (int r = 0; r < n; ++r) eng.rowY[r] = cd.drawing.p(r + 1).y;
    eng.first_step();
    eng.split_steps();

    Scaffold sc;
    sc.n_rows = n;
    sc.caps = std::move(eng.caps);

    auto positions = [&](const Scalar& xi) {
        std::vector<Point> pos(n);
        for (int r = 0; r < n; ++r)
            pos[r] = {eng.rowX[r] + xi * Scalar(r + 1), eng.rowY[r] + xi * Scalar(r + 1) * Scalar(r + 1)};
        return pos;
    };
    auto collinear_free = [&](const std::vector<Point>& pts) {
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b)
                for (size_t c = b + 1; c < pts.size(); ++c)
                    if (orient(pts[a], pts[b], pts[c]) == 0) return false;
        return true;
    };

    auto try_final = [&](const std::vector<Point>& pos) -> std::shared_ptr<Arrangement> {
        std::vector<Segment> segs;
        segs.reserve(eng.drawn.size());
        for (const auto& e : eng.drawn) segs.push_back({pos[e.rl], pos[e.rh]});
        std::shared_ptr<Arrangement> arr;
        try {
            arr = std::make_shared<Arrangement>(build(segs, {false, exec}));
        } catch (const std::invalid_argument&) {
            return nullptr;
        }
        std::map<std::pair<int, int>, int> src_of;
        for (size_t i = 0; i < eng.drawn.size(); ++i)
            src_of[{eng.drawn[i].rl, eng.drawn[i].rh}] = static_cast<int>(i);
        for (const auto& plan : sc.caps) {
            if (plan.row_pairs.size() < 2) continue;
            std::vector<Segment> cs;
            std::vector<int> srcs;
            for (auto [rl, rh] : plan.row_pairs) {
                srcs.push_back(src_of.at({rl, rh}));
                cs.push_back(segs[srcs.back()]);
            }
            CapResult cr = form_cap(cs);
            if (!cr) return nullptr;
            if (!cap_good_face(*cr.cap, *arr, srcs)) return nullptr;
        }
        return arr;
    };

    std::vector<Point> pos;
    std::shared_ptr<Arrangement> arr;
    if (perturb) {
        bool done = false;
        Scalar xi(0);
        for (int it = 0; it <= 96 && !done; ++it) {
            auto cand = positions(xi);
            if (collinear_free(cand)) {
                if (auto a = try_final(cand)) {
                    pos = std::move(cand);
                    arr = std::move(a);
                    done = true;
                    break;
                }
            }
            if (it == 0)
                xi = alpha / Scalar(4 * (n + 1) * (n + 1));
            else
                xi /= Scalar(2);
        }
        if (!done) throw ScaffoldFail("general-position pass failed");
    } else {
        pos = positions(Scalar(0));
        arr = try_final(pos);
        if (!arr) throw ScaffoldFail("final cap check failed");
    }
    sc.row_pos = std::move(pos);
    sc.arr = std::move(arr);
    for (const auto& e : eng.drawn) sc.drawn.emplace_back(e.rl, e.rh);

    // avoid set: the undrawn within-unit segments (one vertical span per
    // multi-row unit); touch points and the worst-case hulls must miss them
    std::vector<Segment> avoid;
    for (size_t u = 0; u < eng.units.size(); ++u) {
        if (eng.units[u].size() < 2) continue;
        int rlo = eng.units[u].front(), rhi = eng.units[u].back();
        avoid.push_back({sc.row_pos[rlo], sc.row_pos[rhi]});
    }
    for (size_t u = 0; u < eng.units.size(); ++u) sc.unit_x.push_back(eng.parts[u].x);

    std::map<std::pair<int, int>, int> src_of;
    for (size_t i = 0; i < sc.drawn.size(); ++i) src_of[sc.drawn[i]] = static_cast<int>(i);
    for (auto& plan : sc.caps) {
        std::vector<int> srcs;
        for (auto [rl, rh] : plan.row_pairs) srcs.push_back(src_of.at({rl, rh}));
        if (plan.row_pairs.size() == 1) {
            int e0 = sc.arr->edges_of(srcs[0]).at(0);
            Segment first_piece{sc.arr->vertex[sc.arr->edge[e0].v0], sc.arr->vertex[sc.arr->edge[e0].v1]};
            plan.touch.push_back(dyadic_point_avoiding(*sc.arr, first_piece, avoid));
            continue;
        }
        std::vector<Segment> cs;
        for (int s : srcs) cs.push_back(sc.arr->source[s]);
        CapResult cr = form_cap(cs);
        if (!cr) throw ScaffoldFail("final cap vanished");
        auto f = cap_good_face(*cr.cap, *sc.arr, srcs);
        if (!f) throw ScaffoldFail("final cap face vanished");
        for (int s : srcs) {
            auto runs = sc.arr->pieces_of(*f, s);
            if (runs.empty()) throw ScaffoldFail("cap edge lost its boundary run");
            plan.touch.push_back(dyadic_point_avoiding(*sc.arr, runs[0], avoid));
        }
        // the hull of any subset of touch points must miss the undrawn
        // within-unit segments; checking the full hull covers all subsets
        if (!avoid.empty()) {
            ConvexObstacle worst = convex_hull(plan.touch);
            for (const auto& s : avoid)
                if (seg_hits_obstacle(s, worst)) throw ScaffoldFail("cap obstacle reaches a unit column");
        }
    }
    return sc;
}

// Scaffold with retries: shrink the certificate eps and the per-step start
// ratio until every exact predicate goes through.
Scaffold build_hierarchical(int n, std::vector<std::vector<int>> units, bool perturb, Exec exec) {
    CertifiedDrawing cd =
        certify_epsilon(n, n, Scalar(1), Scalar(1), Scalar(1), Scalar(1, 9), exec);

    for (int attempt = 0; attempt < 6; ++attempt) {
        std::optional<CertifiedDrawing> use;
        if (attempt == 0) {
            use = cd;
        } else {
            Scalar eps = cd.cert.eps;
            for (int t = 0; t < attempt; ++t) eps /= Scalar(4);
            use = try_epsilon(n, n, Scalar(1), Scalar(1), Scalar(1), cd.cert.delta_sq, eps, exec);
            if (!use) continue;
        }
        try {
            return run_scaffold(*use, units, perturb, attempt, exec);
        } catch (const ScaffoldFail&) {
            continue;
        }
    }
    throw std::runtime_error("hierarchical scaffold: all attempts failed");
}

const Scaffold& general_scaffold(int n, Exec exec) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<Scaffold>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    std::vector<std::vector<int>> units;
    for (int r = 0; r < n; ++r) units.push_back({r});
    auto sc = std::make_shared<Scaffold>(build_hierarchical(n, units, true, exec));
    cache.emplace(n, sc);
    return *sc;
}

}  // namespace

ObstacleRepresentation represent_general(const Graph& g, const std::vector<int>* assignment) {
    const int n = g.n();
    ObstacleRepresentation rep;
    if (n == 0) return rep;
    std::vector<int> row_of(n);
    if (assignment) {
        if (static_cast<int>(assignment->size()) != n)
            throw std::invalid_argument("represent_general: assignment size mismatch");
        std::vector<char> seen(n, 0);
        for (int r : *assignment) {
            if (r < 0 || r >= n || seen[r]) throw std::invalid_argument("represent_general: assignment not a bijection");
            seen[r] = 1;
        }
        row_of = *assignment;
    } else {
        std::iota(row_of.begin(), row_of.end(), 0);
    }
    if (n == 1) {
        rep.placement = {{Scalar(0), Scalar(0)}};
        return rep;
    }
    const Scaffold& sc = general_scaffold(n, Exec::Parallel);
    std::vector<int> vertex_at(n);
    for (int v = 0; v < n; ++v) vertex_at[row_of[v]] = v;
    rep.placement.resize(n);
    for (int v = 0; v < n; ++v) rep.placement[v] = sc.row_pos[row_of[v]];
    for (const auto& plan : sc.caps) {
        std::vector<Point> gen;
        for (size_t i = 0; i < plan.row_pairs.size(); ++i) {
            auto [rl, rh] = plan.row_pairs[i];
            if (!g.has_edge(vertex_at[rl], vertex_at[rh])) gen.push_back(plan.touch[i]);
        }
        if (gen.empty()) continue;
        rep.obstacles.push_back(hull_of(gen));
        rep.tags.push_back(plan.tag);
    }
    if (static_cast<long long>(rep.obstacles.size()) > general_obstacle_bound(n))
        throw std::logic_error("represent_general: obstacle count exceeds the bound");
    return rep;
}

ObstacleRepresentation represent_subcolored(const Graph& g, const Subcoloring& c) {
    if (!c.valid_for(g)) throw std::invalid_argument("represent_subcolored: invalid subcoloring");
    const int n = g.n();
    ObstacleRepresentation rep;
    if (n == 0) return rep;

    // rows ordered by (color, clique, vertex): classes and their cliques form
    // intervals
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (c.color[a] != c.color[b]) return c.color[a] < c.color[b];
        return c.clique[a] < c.clique[b];
    });
    std::vector<int> row_of(n);
    for (int r = 0; r < n; ++r) row_of[order[r]] = r;
    const int k = c.num_colors();

    if (k == 1) {
        // one class on a strictly convex arc with a single hull obstacle
        std::vector<int> clique_of_row(n);
        int id = -1, last = -1;
        for (int r = 0; r < n; ++r) {
            if (r == 0 || c.clique[order[r]] != last) ++id;
            last = c.clique[order[r]];
            clique_of_row[r] = id;
        }
        return cluster_arc_rep(g, row_of, clique_of_row, "class-arc");
    }
    if (n == 1) {
        rep.placement = {{Scalar(0), Scalar(0)}};
        return rep;
    }

    std::vector<std::vector<int>> units(k);
    for (int r = 0; r < n; ++r) units[c.color[order[r]]].push_back(r);
    Scaffold sc = build_hierarchical(n, units, false, Exec::Parallel);

    rep.placement.resize(n);
    for (int v = 0; v < n; ++v) rep.placement[v] = sc.row_pos[row_of[v]];
    auto vertex_at = order;  // order[r] is the vertex on row r

    for (const auto& plan : sc.caps) {
        std::vector<Point> gen;
        for (size_t i = 0; i < plan.row_pairs.size(); ++i) {
            auto [rl, rh] = plan.row_pairs[i];
            if (!g.has_edge(vertex_at[rl], vertex_at[rh])) gen.push_back(plan.touch[i]);
        }
        if (gen.empty()) continue;
        rep.obstacles.push_back(hull_of(gen));
        rep.tags.push_back(plan.tag);
    }
    long long cross_obstacles = static_cast<long long>(rep.obstacles.size());
    if (cross_obstacles > static_cast<long long>(n - 1) * ceil_log2(k))
        throw std::logic_error("represent_subcolored: cross phase exceeds its bound");

    // one point obstacle per consecutive same-class different-clique pair,
    // placed on the class column clear of every edge of g
    std::vector<Segment> g_edges;
    for (auto [u, v] : g.edges()) g_edges.push_back({rep.placement[u], rep.placement[v]});
    for (int r = 0; r + 1 < n; ++r) {
        int u = vertex_at[r], v = vertex_at[r + 1];
        if (c.color[u] != c.color[v] || c.clique[u] == c.clique[v]) continue;
        Segment uv{rep.placement[u], rep.placement[v]};
        rep.obstacles.push_back({{dodge_point_on(uv, g_edges)}, 0});
        rep.tags.push_back("O_{u,v}");
    }
    if (static_cast<long long>(rep.obstacles.size()) >
        static_cast<long long>(n - 1) * (ceil_log2(k) + 1))
        throw std::logic_error("represent_subcolored: obstacle count exceeds the bound");
    return rep;
}

ObstacleRepresentation ensure_general_position(const Graph& g, const ObstacleRepresentation& rep) {
    const int n = g.n();
    if (static_cast<int>(rep.placement.size()) != n)
        throw std::invalid_argument("ensure_general_position: placement size mismatch");
    auto collinear_free = [](const std::vector<Point>& pts) {
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b)
                for (size_t c = b + 1; c < pts.size(); ++c)
                    if (orient(pts[a], pts[b], pts[c]) == 0) return false;
        return true;
    };
    if (collinear_free(rep.placement)) return rep;

    // record, per obstacle, the parameter of one touch point on every blocked
    // pair; the perturbed obstacle is the hull of the transported points
    struct Gen {
        int u, v;
        Scalar t;
    };
    std::vector<std::vector<Gen>> gens(rep.obstacles.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            Segment s{rep.placement[u], rep.placement[v]};
            Scalar dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
            Scalar len2 = dx * dx + dy * dy;
            auto param = [&](const Point& p) {
                return ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
            };
            for (size_t o = 0; o < rep.obstacles.size(); ++o) {
                const ConvexObstacle& ob = rep.obstacles[o];
                if (!seg_hits_obstacle(s, ob)) continue;
                Scalar tmid;
                if (ob.rank == 0) {
                    tmid = param(ob.vertices[0]);
                } else if (ob.rank == 1) {
                    SegIntersection r = seg_intersection(s, {ob.vertices[0], ob.vertices[1]});
                    tmid = r.kind == HitKind::Overlap
                               ? (param(r.seg.a) + param(r.seg.b)) / Scalar(2)
                               : param(r.p);
                } else {
                    // clip [0,1] against the polygon half-planes
                    Scalar lo(0), hi(1);
                    bool empty = false;
                    size_t m = ob.vertices.size();
                    for (size_t i = 0; i < m && !empty; ++i) {
                        const Point& a = ob.vertices[i];
                        const Point& b = ob.vertices[(i + 1) % m];
                        Scalar ex = b.x - a.x, ey = b.y - a.y;
                        Scalar f0 = ex * (s.a.y - a.y) - ey * (s.a.x - a.x);
                        Scalar f1 = ex * (s.b.y - a.y) - ey * (s.b.x - a.x);
                        Scalar den = f1 - f0;  // signed value is f0 + t*den, need <= 0... on left: >= 0
                        // inside means cross(b-a, p-a) >= 0
                        if (den.sign() == 0) {
                            if (f0.sign() < 0) empty = true;
                        } else {
                            Scalar tc = -f0 / den;
                            if (den.sign() > 0)
                                lo = max(lo, tc);
                            else
                                hi = min(hi, tc);
                        }
                    }
                    if (empty || hi < lo) continue;  // grazing contact handled by the hit test
                    tmid = (lo + hi) / Scalar(2);
                }
                gens[o].push_back({u, v, tmid});
            }
        }

    Scalar xi(1, 1024);
    for (int it = 0; it < 200; ++it, xi /= Scalar(2)) {
        std::vector<Point> pts(n);
        for (int v = 0; v < n; ++v)
            pts[v] = {rep.placement[v].x + xi * Scalar(v + 1),
                      rep.placement[v].y + xi * Scalar(v + 1) * Scalar(v + 1)};
        if (!collinear_free(pts)) continue;
        ObstacleRepresentation out;
        out.placement = pts;
        for (size_t o = 0; o < rep.obstacles.size(); ++o) {
            if (gens[o].empty()) continue;  // obstacle blocked nothing
            std::vector<Point> moved;
            for (const auto& gn : gens[o]) {
                const Point& a = pts[gn.u];
                const Point& b = pts[gn.v];
                moved.push_back({a.x + gn.t * (b.x - a.x), a.y + gn.t * (b.y - a.y)});
            }
            out.obstacles.push_back(hull_of(moved));
            out.tags.push_back(o < rep.tags.size() ? rep.tags[o] : "");
        }
        if (verify(g, out).pass) return out;
    }
    throw std::runtime_error("ensure_general_position: no perturbation verified");
}

}  // namespace obst
