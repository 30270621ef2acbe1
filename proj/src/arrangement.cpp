#include "obst/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace obst {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Segment normalized(const Segment& s) {
    return lex_less(s.b, s.a) ? Segment{s.b, s.a} : s;
}

bool seg_lex_less(const Segment& a, const Segment& b) {
    if (a.a != b.a) return lex_less(a.a, b.a);
    return lex_less(a.b, b.b);
}

// Angular order of directions around a vertex, counterclockwise from +x.
struct Dir {
    int h;
    Scalar dx, dy;
};

bool dir_less(const Dir& a, const Dir& b) {
    auto half = [](const Dir& d) { return (d.dy.sign() > 0 || (d.dy.sign() == 0 && d.dx.sign() > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return (a.dx * b.dy - a.dy * b.dx).sign() > 0;
}

}  // namespace

Arrangement build(std::vector<Segment> segments, const ArrangementOptions& opt) {
    const int n = static_cast<int>(segments.size());
    for (const auto& s : segments)
        if (s.a == s.b) throw std::invalid_argument("build: degenerate segment");
    {
        std::vector<Segment> norm(n);
        for (int i = 0; i < n; ++i) norm[i] = normalized(segments[i]);
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int i, int j) { return seg_lex_less(norm[i], norm[j]); });
        for (int k = 0; k + 1 < n; ++k) {
            const Segment &u = norm[idx[k]], &v = norm[idx[k + 1]];
            if (u.a == v.a && u.b == v.b) throw std::invalid_argument("build: duplicate segment");
        }
    }

    // Pairwise intersection phase. results[i] holds (j, point) for j > i so
    // the parallel and serial schedules produce identical data.
    std::vector<std::vector<std::pair<int, Point>>> found(n);
    std::vector<std::vector<int>> overlaps(n);
    parallel_for(opt.exec, static_cast<size_t>(n), [&](size_t i) {
        for (int j = static_cast<int>(i) + 1; j < n; ++j) {
            SegIntersection r = seg_intersection(segments[i], segments[j]);
            if (r.kind == HitKind::Point)
                found[i].emplace_back(j, r.p);
            else if (r.kind == HitKind::Overlap)
                overlaps[i].push_back(j);
        }
    });

    UnionFind carriers(n);
    for (int i = 0; i < n; ++i) {
        if (!overlaps[i].empty() && !opt.allow_collinear_overlap)
            throw std::invalid_argument("build: overlapping collinear segments");
        for (int j : overlaps[i]) carriers.unite(i, j);
    }

    // Cut points per segment: own endpoints plus every intersection on it.
    std::vector<std::vector<Point>> cuts(n);
    for (int i = 0; i < n; ++i) {
        cuts[i].push_back(segments[i].a);
        cuts[i].push_back(segments[i].b);
    }
    for (int i = 0; i < n; ++i)
        for (auto& [j, p] : found[i]) {
            cuts[i].push_back(p);
            cuts[j].push_back(p);
        }

    Arrangement A;
    A.source = std::move(segments);

    // Global vertex table, lexicographically sorted and deduplicated.
    {
        std::vector<Point> all;
        for (auto& c : cuts) all.insert(all.end(), c.begin(), c.end());
        std::sort(all.begin(), all.end(), lex_less);
        all.erase(std::unique(all.begin(), all.end()), all.end());
        A.vertex = std::move(all);
    }
    auto vid = [&](const Point& p) {
        auto it = std::lower_bound(A.vertex.begin(), A.vertex.end(), p, lex_less);
        assert(it != A.vertex.end() && *it == p);
        return static_cast<int>(it - A.vertex.begin());
    };

    // Group segments into carriers (one per segment unless overlaps merged).
    std::vector<std::vector<int>> carrier_members(n);
    for (int i = 0; i < n; ++i) carrier_members[carriers.find(i)].push_back(i);

    A.src_cuts_.assign(n, {});
    A.src_edges_.assign(n, {});
    for (int root = 0; root < n; ++root) {
        const auto& members = carrier_members[root];
        if (members.empty()) continue;
        std::vector<int> ids;
        for (int m : members)
            for (const auto& p : cuts[m]) ids.push_back(vid(p));
        std::sort(ids.begin(), ids.end(), [&](int u, int v) { return lex_less(A.vertex[u], A.vertex[v]); });
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

        for (size_t k = 0; k + 1 < ids.size(); ++k) {
            Arrangement::SubEdge e;
            e.v0 = ids[k];
            e.v1 = ids[k + 1];
            for (int m : members)
                if (on_segment(A.vertex[e.v0], A.source[m]) && on_segment(A.vertex[e.v1], A.source[m]))
                    e.sources.push_back(m);
            if (e.sources.empty()) continue;  // gap between non-overlapping collinear members
            int eid = static_cast<int>(A.edge.size());
            for (int m : e.sources) A.src_edges_[m].push_back(eid);
            A.edge.push_back(std::move(e));
        }
        for (int m : members) {
            for (int u : ids)
                if (on_segment(A.vertex[u], A.source[m])) A.src_cuts_[m].push_back(u);
        }
    }

    // Half-edge topology: counterclockwise order around every vertex, then
    // next(h) = the clockwise successor of twin(h), giving face-on-the-left
    // orbits.
    const int E = A.n_edges();
    std::vector<std::vector<int>> out(A.vertex.size());
    for (int e = 0; e < E; ++e) {
        out[A.edge[e].v0].push_back(2 * e);
        out[A.edge[e].v1].push_back(2 * e + 1);
    }
    std::vector<int> pos(2 * E, -1);
    for (auto& o : out) {
        std::vector<Dir> dirs;
        dirs.reserve(o.size());
        for (int h : o) {
            const Point& t = A.vertex[A.he_tail(h)];
            const Point& hd = A.vertex[A.he_head(h)];
            dirs.push_back({h, hd.x - t.x, hd.y - t.y});
        }
        std::sort(dirs.begin(), dirs.end(), dir_less);
        for (size_t k = 0; k + 1 < dirs.size(); ++k)
            if (!dir_less(dirs[k], dirs[k + 1]))
                throw std::logic_error("build: coincident directions at a vertex");
        for (size_t k = 0; k < dirs.size(); ++k) {
            o[k] = dirs[k].h;
            pos[dirs[k].h] = static_cast<int>(k);
        }
    }
    A.he_next.assign(2 * E, -1);
    for (int h = 0; h < 2 * E; ++h) {
        int v = A.he_head(h);
        const auto& o = out[v];
        int k = pos[Arrangement::he_twin(h)];
        A.he_next[h] = o[(k + static_cast<int>(o.size()) - 1) % o.size()];
    }

    // Boundary cycles and their doubled signed areas.
    std::vector<int> cycle_of(2 * E, -1);
    std::vector<int> cycle_rep;
    std::vector<Scalar> cycle_area2;
    for (int h0 = 0; h0 < 2 * E; ++h0) {
        if (cycle_of[h0] >= 0) continue;
        int c = static_cast<int>(cycle_rep.size());
        Scalar area2(0);
        int h = h0;
        do {
            cycle_of[h] = c;
            const Point& t = A.vertex[A.he_tail(h)];
            const Point& d = A.vertex[A.he_head(h)];
            area2 += t.x * d.y - d.x * t.y;
            h = A.he_next[h];
        } while (h != h0);
        cycle_rep.push_back(h0);
        cycle_area2.push_back(area2);
    }
    const int C = static_cast<int>(cycle_rep.size());

    // Positive cycles bound a face from inside; the rest are assigned to the
    // face that contains them via a leftward ray shoot from their leftmost
    // vertex (half-open straddle rule so through-vertex hits count once).
    std::vector<int> cycle_face(C, -1);
    A.face.clear();
    for (int c = 0; c < C; ++c)
        if (cycle_area2[c].sign() > 0) {
            Arrangement::Face f;
            f.bounded = true;
            f.cycles.push_back(cycle_rep[c]);
            cycle_face[c] = static_cast<int>(A.face.size());
            A.face.push_back(std::move(f));
        }
    A.unbounded_face = static_cast<int>(A.face.size());
    {
        Arrangement::Face f;
        f.bounded = false;
        A.face.push_back(std::move(f));
    }

    std::vector<int> leftmost(C, -1);
    for (int c = 0; c < C; ++c) {
        if (cycle_area2[c].sign() > 0) continue;
        int best = -1, h = cycle_rep[c];
        do {
            int v = A.he_tail(h);
            if (best < 0 || lex_less(A.vertex[v], A.vertex[best])) best = v;
            h = A.he_next[h];
        } while (h != cycle_rep[c]);
        leftmost[c] = best;
    }
    std::vector<int> order;
    for (int c = 0; c < C; ++c)
        if (cycle_area2[c].sign() <= 0) order.push_back(c);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return lex_less(A.vertex[leftmost[a]], A.vertex[leftmost[b]]);
    });

    for (int c : order) {
        const Point& vp = A.vertex[leftmost[c]];
        int best_edge = -1;
        Scalar best_x;
        Scalar best_dxdy_num, best_dxdy_den;  // slope dx/dy of the chosen wall
        for (int e = 0; e < E; ++e) {
            const Point& p = A.vertex[A.edge[e].v0];
            const Point& q = A.vertex[A.edge[e].v1];
            const Point *lo = &p, *hi = &q;
            if (hi->y < lo->y) std::swap(lo, hi);
            if (lo->y == hi->y) continue;                       // horizontal never straddles
            if (!(lo->y <= vp.y && vp.y < hi->y)) continue;     // half-open in y
            Scalar x_at = lo->x + (vp.y - lo->y) * (hi->x - lo->x) / (hi->y - lo->y);
            if (!(x_at < vp.x)) continue;
            Scalar dposn = hi->y - lo->y, dxn = hi->x - lo->x;  // upward direction
            if (best_edge < 0 || best_x < x_at ||
                (best_x == x_at && (dxn * best_dxdy_den - best_dxdy_num * dposn).sign() > 0)) {
                best_edge = e;
                best_x = x_at;
                best_dxdy_num = dxn;
                best_dxdy_den = dposn;
            }
        }
        int container;
        if (best_edge < 0) {
            container = A.unbounded_face;
        } else {
            // downward half-edge of the wall keeps the query point on its left
            const Point& p0 = A.vertex[A.edge[best_edge].v0];
            const Point& p1 = A.vertex[A.edge[best_edge].v1];
            int h = (p1.y < p0.y) ? 2 * best_edge : 2 * best_edge + 1;
            int cc = cycle_of[h];
            container = cycle_face[cc];
            assert(container >= 0 && "containers resolve in leftmost-x order");
        }
        cycle_face[c] = container;
        A.face[container].cycles.push_back(cycle_rep[c]);
    }

    A.he_face.assign(2 * E, -1);
    for (int h = 0; h < 2 * E; ++h) A.he_face[h] = cycle_face[cycle_of[h]];

    // Incidence tables.
    for (int f = 0; f < A.n_faces(); ++f) {
        auto& inc = A.face[f].incident;
        for (int h0 : A.face[f].cycles) {
            int h = h0;
            do {
                for (int s : A.edge[h >> 1].sources) inc.push_back(s);
                h = A.he_next[h];
            } while (h != h0);
        }
        std::sort(inc.begin(), inc.end());
        inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    }
    A.src_faces_.assign(n, {});
    for (int e = 0; e < E; ++e)
        for (int s : A.edge[e].sources) {
            A.src_faces_[s].push_back(A.he_face[2 * e]);
            A.src_faces_[s].push_back(A.he_face[2 * e + 1]);
        }
    for (auto& fs : A.src_faces_) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    }

    UnionFind comp(static_cast<int>(A.vertex.size()));
    for (const auto& e : A.edge) comp.unite(e.v0, e.v1);
    std::vector<char> seen(A.vertex.size(), 0);
    A.components = 0;
    for (int v = 0; v < A.n_vertices(); ++v) {
        int r = comp.find(v);
        if (!seen[r]) {
            seen[r] = 1;
            ++A.components;
        }
    }
    return A;
}

int Arrangement::face_complexity(int f) const {
    return static_cast<int>(face.at(f).incident.size());
}

int Arrangement::faceset_complexity(std::span<const int> faces) const {
    std::vector<int> ids(faces.begin(), faces.end());
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("faceset_complexity: duplicated face id");
    long long total = 0;
    for (int f : ids) total += face_complexity(f);
    return static_cast<int>(total);
}

int Arrangement::vertex_index(const Point& p) const {
    auto it = std::lower_bound(vertex.begin(), vertex.end(), p, lex_less);
    if (it == vertex.end() || !(*it == p)) return -1;
    return static_cast<int>(it - vertex.begin());
}

int Arrangement::locate_subedge(int src, const Point& p) const {
    if (!on_segment(p, source.at(src)))
        throw std::invalid_argument("face query: point not on segment");
    const auto& cs = src_cuts_[src];
    // cuts are in lex order along the carrier; find the cell containing p
    auto it = std::lower_bound(cs.begin(), cs.end(), p,
                               [&](int u, const Point& q) { return lex_less(vertex[u], q); });
    if (it != cs.end() && vertex[*it] == p)
        throw std::invalid_argument("face query: point is a subdivision vertex");
    if (it == cs.begin() || it == cs.end())
        throw std::invalid_argument("face query: point outside segment cells");
    size_t k = static_cast<size_t>(it - cs.begin()) - 1;
    // src_edges_ is aligned with consecutive src_cuts_ pairs
    return src_edges_[src][k];
}

int Arrangement::face_right_below(int src, const Point& p) const {
    int e = locate_subedge(src, p);
    const Point& p0 = vertex[edge[e].v0];
    const Point& p1 = vertex[edge[e].v1];
    if (p0.x == p1.x) throw std::invalid_argument("face_right_below: vertical segment");
    // v0 is lex-smaller, so v1 has the larger x; the half-edge v1->v0 runs
    // right to left and keeps the region below on its left.
    return he_face[2 * e + 1];
}

int Arrangement::face_left_above(int src, const Point& p) const {
    int e = locate_subedge(src, p);
    const Point& p0 = vertex[edge[e].v0];
    const Point& p1 = vertex[edge[e].v1];
    if (p0.x == p1.x) throw std::invalid_argument("face_left_above: vertical segment");
    return he_face[2 * e];
}

std::vector<Segment> Arrangement::pieces_of(int f, int src) const {
    std::vector<int> es;
    for (int e : src_edges_[src])
        if (he_face[2 * e] == f || he_face[2 * e + 1] == f) es.push_back(e);
    std::vector<Segment> runs;
    for (size_t k = 0; k < es.size();) {
        size_t j = k;
        while (j + 1 < es.size() && edge[es[j]].v1 == edge[es[j + 1]].v0) ++j;
        runs.push_back({vertex[edge[es[k]].v0], vertex[edge[es[j]].v1]});
        k = j + 1;
    }
    return runs;
}

Point Arrangement::piece_interior_point(int f, int src) const {
    for (int e : src_edges_[src]) {
        if (he_face[2 * e] != f && he_face[2 * e + 1] != f) continue;
        return midpoint(vertex[edge[e].v0], vertex[edge[e].v1]);
    }
    throw std::invalid_argument("piece_interior_point: segment not on face boundary");
}

std::optional<int> Arrangement::source_index(const Segment& s) const {
    Segment q = normalized(s);
    for (int i = 0; i < static_cast<int>(source.size()); ++i) {
        Segment t = normalized(source[i]);
        if (t.a == q.a && t.b == q.b) return i;
    }
    return std::nullopt;
}

bool Arrangement::euler_check() const {
    long long V = n_vertices(), E = n_edges(), F = n_faces();
    return V - E + F == 1 + components;
}

bool Arrangement::bounded_faces_convex() const {
    for (int f = 0; f < n_faces(); ++f) {
        if (!face[f].bounded) continue;
        if (face[f].cycles.size() != 1) return false;
        int h0 = face[f].cycles[0];
        int h = h0;
        do {
            int hn = he_next[h];
            const Point& a = vertex[he_tail(h)];
            const Point& b = vertex[he_head(h)];
            const Point& c = vertex[he_head(hn)];
            if (orient(a, b, c) < 0) return false;
            h = hn;
        } while (h != h0);
    }
    return true;
}

ArrangementStats stats(const Arrangement& a) {
    ArrangementStats s{};
    s.segments = static_cast<int>(a.source.size());
    s.vertices = a.n_vertices();
    s.edges = a.n_edges();
    s.faces = a.n_faces();
    s.bounded_faces = a.n_bounded_faces();
    s.max_face_complexity = 0;
    s.total_complexity = 0;
    for (int f = 0; f < a.n_faces(); ++f) {
        int c = a.face_complexity(f);
        s.max_face_complexity = std::max(s.max_face_complexity, c);
        s.total_complexity += c;
    }
    return s;
}

}  // namespace obst
