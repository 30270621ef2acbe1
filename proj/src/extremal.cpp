#include "obst/extremal.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "detail.hpp"

namespace obst {

namespace {

using detail::cap_good_face;
using detail::touch_point_on_face;

int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

int cross_src(int i, int j, int n) { return (i - 1) * n + (j - 1); }

}  // namespace

long long totient_sum(int m) {
    if (m < 1) throw std::invalid_argument("totient_sum: m must be >= 1");
    std::vector<int> phi(m + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (int p = 2; p <= m; ++p)
        if (phi[p] == p)  // p prime
            for (int q = p; q <= m; q += p) phi[q] -= phi[q] / p;
    long long total = 0;
    for (int j = 1; j <= m; ++j) total += phi[j];
    return total;
}

std::vector<UniformCrossing> uniform_crossings(int n, const Scalar& w, int K) {
    if (K < 2 || 2 * K > n) throw std::invalid_argument("uniform_crossings: K out of [2, n/2]");
    BipartiteDrawing R = regular_drawing(n, n, w, Scalar(1), Scalar(1));

    struct PointLess {
        bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
    };
    std::map<Point, std::pair<int, int>, PointLess> owner;  // location -> (i,k)
    std::vector<UniformCrossing> out;

    for (int k = 2; k <= K; ++k)
        for (int i = 1; i < k; ++i) {
            if (gcd_int(i, k) != 1) continue;
            std::map<Point, std::vector<EdgeId>, PointLess> fam;
            for (int a = 1; a + i <= n; ++a)
                for (int b = k - i + 1; b <= n; ++b) {
                    EdgeId e1{a, b}, e2{a + i, b - (k - i)};
                    SegIntersection r = seg_intersection(R.edge(e1), R.edge(e2));
                    if (r.kind != HitKind::Point)
                        throw std::logic_error("uniform_crossings: generating pair does not cross");
                    auto& f = fam[r.p];
                    f.push_back(e1);
                    f.push_back(e2);
                }
            // per-pair exact bounds
            if (static_cast<long long>(fam.size()) > static_cast<long long>(k) * n)
                throw std::logic_error("uniform_crossings: more than kn crossings");
            std::set<std::pair<int, int>> edges_with_crossing;
            for (auto& [loc, edges] : fam) {
                std::sort(edges.begin(), edges.end(),
                          [](const EdgeId& a, const EdgeId& b) { return a.i < b.i; });
                edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
                for (const auto& e : edges) edges_with_crossing.insert({e.i, e.j});
                // the location also must be on the line x = (i/k) w
                if (!(loc.x * Scalar(k) == Scalar(i) * w))
                    throw std::logic_error("uniform_crossings: crossing off its vertical line");
                auto it = owner.find(loc);
                if (it != owner.end() && it->second != std::make_pair(i, k))
                    throw std::logic_error("uniform_crossings: location shared across (i,k) pairs");
                owner.emplace(loc, std::make_pair(i, k));
                out.push_back({i, k, loc, edges});
            }
            long long need = static_cast<long long>(n) * n - 2LL * i * n;
            if (static_cast<long long>(edges_with_crossing.size()) < need)
                throw std::logic_error("uniform_crossings: too few edges with a crossing");
        }
    return out;
}

// ---------------------------------------------------------------------------
// Middle-cap face machinery: perturbed completed bipartite drawings, cached per n.
// ---------------------------------------------------------------------------

namespace {

struct EhContext {
    int n = 0, m = 0;  // m = ceil(n/2) points on the left
    std::vector<Point> pts;                        // p_1..p_m then q_1..q_{n-m}
    std::vector<std::pair<int, int>> pair_of_src;  // source id -> vertex pair
    std::shared_ptr<Arrangement> arr;              // complete K_P arrangement
    std::vector<int> level_face;                   // 1-based level -> face id
    int src_of(int u, int v) const {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        auto it = std::lower_bound(pair_of_src.begin(), pair_of_src.end(), key);
        if (it == pair_of_src.end() || *it != key) throw std::logic_error("src_of: missing pair");
        return static_cast<int>(it - pair_of_src.begin());
    }
};

EhContext make_eh_context(int n) {
    if (n < 3) throw std::invalid_argument("e_of_h: n must be >= 3");
    const int m = (n + 1) / 2, q = n / 2;
    CertifiedDrawing cd = certify_epsilon(m, q, Scalar(1), Scalar(1), Scalar(1));
    const BipartiteDrawing& D = cd.drawing;

    EhContext ctx;
    ctx.n = n;
    ctx.m = m;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ctx.pair_of_src.emplace_back(u, v);

    auto base = [&](int v) { return v < m ? D.p(v + 1) : D.q(v - m + 1); };

    Scalar xi(1, 64);
    for (int it = 0; it < 96; ++it, xi /= Scalar(2)) {
        std::vector<Point> pts(n);
        for (int v = 0; v < n; ++v)
            pts[v] = {base(v).x + xi * Scalar(v + 1), base(v).y + xi * Scalar(v + 1) * Scalar(v + 1)};
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a + 1; b < n && ok; ++b)
                for (int c = b + 1; c < n && ok; ++c)
                    if (orient(pts[a], pts[b], pts[c]) == 0) ok = false;
        if (!ok) continue;

        std::vector<Segment> segs;
        for (auto [u, v] : ctx.pair_of_src) segs.push_back({pts[u], pts[v]});
        std::shared_ptr<Arrangement> arr;
        try {
            arr = std::make_shared<Arrangement>(build(segs));
        } catch (const std::invalid_argument&) {
            continue;
        }

        // every level of the bipartite part must still form a good cap in K_P
        std::vector<int> level_face(n, -1);  // levels 1..n-1
        for (int k = 1; k <= n - 1 && ok; ++k) {
            auto ids = level_edges(D, k);
            std::vector<int> srcs;
            for (const auto& e : ids) srcs.push_back(ctx.src_of(e.i - 1, m + e.j - 1));
            if (ids.size() == 1) {
                // any bounded face incident to the single edge
                int picked = -1;
                Point mid = detail::interior_point_on_source(*arr, srcs[0]);
                for (int f : {arr->face_right_below(srcs[0], mid), arr->face_left_above(srcs[0], mid)})
                    if (picked < 0 && arr->face[f].bounded) picked = f;
                if (picked < 0)
                    for (int f : arr->faces_of(srcs[0]))
                        if (picked < 0 && arr->face[f].bounded) picked = f;
                if (picked < 0) {
                    ok = false;
                    break;
                }
                level_face[k] = picked;
                continue;
            }
            std::vector<Segment> cs;
            for (int s : srcs) cs.push_back(segs[s]);
            CapResult cr = form_cap(cs);
            if (!cr) {
                ok = false;
                break;
            }
            auto f = cap_good_face(*cr.cap, *arr, srcs);
            if (!f) {
                ok = false;
                break;
            }
            level_face[k] = *f;
        }
        if (!ok) continue;

        ctx.pts = std::move(pts);
        ctx.arr = std::move(arr);
        ctx.level_face = std::move(level_face);
        return ctx;
    }
    throw std::runtime_error("e_of_h: no perturbation preserved the level caps");
}

const EhContext& eh_context(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<EhContext>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
    auto ctx = std::make_shared<EhContext>(make_eh_context(n));
    cache.emplace(n, ctx);
    return *ctx;
}

std::vector<int> selected_faces(const EhContext& ctx, int h) {
    const int n = ctx.n;
    std::vector<int> faces;
    for (int i = 1; i <= h; ++i) {
        int level = n / 2 - (h + 1) / 2 + i;
        if (level < 1 || level > n - 1) throw std::invalid_argument("e_of_h: level out of range");
        faces.push_back(ctx.level_face[level]);
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

}  // namespace

EOfHResult e_of_h(int n, int h) {
    if (h <= 0 || h >= n) throw std::invalid_argument("e_of_h: need 0 < h < n");
    const EhContext& ctx = eh_context(n);
    EOfHResult res;
    res.n = n;
    res.h = h;
    res.faces = selected_faces(ctx, h);
    std::set<int> incident;
    for (int f : res.faces)
        for (int s : ctx.arr->face[f].incident) incident.insert(s);
    res.incident_edges = static_cast<long long>(incident.size());
    long long a = 2LL * h * n - static_cast<long long>(h) * h - 1;
    res.lower_bound = (a + 3) / 4;
    if (res.incident_edges < res.lower_bound)
        throw std::logic_error("e_of_h: measured incident count below the bound");
    return res;
}

const std::vector<Point>& thm4_points(int n) { return eh_context(n).pts; }

Graph thm4_base_graph(int n, int h) {
    const EhContext& ctx = eh_context(n);
    auto faces = selected_faces(ctx, h);
    std::set<int> incident;
    for (int f : faces)
        for (int s : ctx.arr->face[f].incident) incident.insert(s);
    Graph g(n);
    for (size_t s = 0; s < ctx.pair_of_src.size(); ++s)
        if (!incident.count(static_cast<int>(s)))
            g.add_edge(ctx.pair_of_src[s].first, ctx.pair_of_src[s].second);
    return g;
}

ObstacleRepresentation thm4_supergraph_rep(int n, int h, const Graph& gprime) {
    const EhContext& ctx = eh_context(n);
    auto faces = selected_faces(ctx, h);
    ObstacleRepresentation rep;
    rep.placement = ctx.pts;
    for (int f : faces) {
        std::vector<Point> gen;
        for (int s : ctx.arr->face[f].incident) {
            auto [u, v] = ctx.pair_of_src[s];
            if (!gprime.has_edge(u, v)) gen.push_back(touch_point_on_face(*ctx.arr, f, s));
        }
        if (gen.empty()) continue;
        rep.obstacles.push_back(convex_hull(gen));
        std::ostringstream tag;
        tag << "face " << f;
        rep.tags.push_back(tag.str());
    }
    if (static_cast<int>(rep.obstacles.size()) > h)
        throw std::logic_error("thm4_supergraph_rep: more than h obstacles");
    return rep;
}

FaceFamilyReport thm5_construction(int n, long long M) {
    if (M < 1) throw std::invalid_argument("thm5: M must be >= 1");
    // K = nearest integer to (M/n)^(1/3), exact integer arithmetic
    int K = 2;
    {
        long long best = -1;
        for (int cand = 1; cand <= n; ++cand) {
            long long diff = cand * 1LL * cand * cand * n - M;
            if (diff < 0) diff = -diff;
            if (best < 0 || diff < best) {
                best = diff;
                K = cand;
            }
        }
    }
    if (K < 2 || 2 * K > n) throw std::invalid_argument("thm5: K lands outside [2, n/2]");

    CertifiedDrawing cd = certify_epsilon(n, n, Scalar(1), Scalar(1), Scalar(1));
    const BipartiteDrawing& D = cd.drawing;
    const Arrangement& A = *cd.arr;

    auto crossings = uniform_crossings(n, Scalar(1), K);

    FaceFamilyReport rep;
    rep.n = n;
    rep.M = M;
    rep.K = K;

    std::map<std::pair<int, int>, PairFamilyStats> per_pair;
    std::map<std::pair<int, int>, std::vector<int>> per_pair_faces;
    std::vector<int> all_faces;
    std::set<int> seen;
    bool distinct = true;
    for (const auto& c : crossings) {
        std::vector<Segment> cs;
        std::vector<int> srcs;
        for (const auto& e : c.family) {
            cs.push_back(D.edge(e));
            srcs.push_back(cross_src(e.i, e.j, n));
        }
        CapResult cr = form_cap(cs);
        if (!cr) throw std::logic_error("thm5: uniform crossing family is not a cap");
        auto f = cap_good_face(*cr.cap, A, srcs);
        if (!f) throw std::logic_error("thm5: crossing cap has no good face");
        if (!seen.insert(*f).second) distinct = false;
        all_faces.push_back(*f);
        auto& st = per_pair[{c.i, c.k}];
        st.i = c.i;
        st.k = c.k;
        st.crossings += 1;
        per_pair_faces[{c.i, c.k}].push_back(*f);
    }
    if (!distinct) throw std::logic_error("thm5: selected faces are not pairwise distinct");

    rep.faces_distinct = true;
    rep.face_count = static_cast<int>(all_faces.size());
    rep.complexity = A.faceset_complexity(all_faces);
    rep.faces = all_faces;

    for (auto& [ik, st] : per_pair) {
        st.faces = static_cast<int>(per_pair_faces[ik].size());
        st.complexity = A.faceset_complexity(per_pair_faces[ik]);
        st.lower = static_cast<long long>(n) * n - 2LL * ik.second * n;
        if (st.complexity < st.lower)
            throw std::logic_error("thm5: family complexity below its exact lower bound");
        if (st.faces > ik.second * n) throw std::logic_error("thm5: family has more than kn faces");
        rep.per_pair.push_back(st);
        rep.exact_lower += st.lower;
    }
    if (2LL * rep.face_count >= static_cast<long long>(n) * K * K * K)
        throw std::logic_error("thm5: face family not below nK^3/2");

    const double pi = 3.14159265358979323846;
    rep.asymptotic_ref = 3.0 * n * static_cast<double>(n) * K * K / (pi * pi) -
                         static_cast<double>(n) * K * K * K;
    rep.ratio = rep.asymptotic_ref > 0 ? static_cast<double>(rep.complexity) / rep.asymptotic_ref : 0.0;

    // the M <= Cn regime keeps only the most complex faces
    std::vector<long long> cx;
    for (int f : all_faces) cx.push_back(A.face_complexity(f));
    std::sort(cx.rbegin(), cx.rend());
    rep.top_faces = static_cast<int>(std::min<long long>(M, cx.size()));
    for (int i = 0; i < rep.top_faces; ++i) rep.top_complexity += cx[i];
    return rep;
}

ObstacleRepresentation single_obstacle_family(int n, const std::vector<int>& f) {
    if (n < 2) throw std::invalid_argument("single_obstacle_family: n must be >= 2");
    const int half = n / 2, hi0 = (n + 1) / 2;
    if (static_cast<int>(f.size()) != half)
        throw std::invalid_argument("single_obstacle_family: bijection size mismatch");
    {
        std::vector<char> seen(n, 0);
        for (int t : f) {
            if (t < hi0 || t >= n || seen[t])
                throw std::invalid_argument("single_obstacle_family: not a bijection onto the top half");
            seen[t] = 1;
        }
    }
    const Point origin{Scalar(0), Scalar(0)};
    for (int salt = 0; salt < 64; ++salt) {
        std::vector<Point> pts(n);
        for (int i = 0; i < half; ++i) {
            long t = static_cast<long>(salt) * half + i + 1;
            Scalar dx = Scalar(1) - Scalar(t) * Scalar(t), dy = Scalar(2) * Scalar(t);
            Scalar r(static_cast<long>(i) + 2, 1);
            Scalar rr(static_cast<long>(i) + 3, 2);
            pts[i] = {r * dx, r * dy};
            pts[f[i]] = {-rr * dx, -rr * dy};
        }
        if (n % 2 == 1) pts[half] = {Scalar(3 + salt), Scalar(2, 7)};

        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v) {
                if (pts[u] == pts[v]) ok = false;
                bool matched = (u < half && f[u] == v);
                if (ok && !matched && on_segment(origin, {pts[u], pts[v]})) ok = false;
                if (ok && matched && !on_segment(origin, {pts[u], pts[v]})) ok = false;
            }
        if (!ok) continue;

        ObstacleRepresentation rep;
        rep.placement = std::move(pts);
        rep.obstacles.push_back({{origin}, 0});
        rep.tags.push_back("origin");
        return rep;
    }
    throw std::runtime_error("single_obstacle_family: direction sampling failed");
}

}  // namespace obst
