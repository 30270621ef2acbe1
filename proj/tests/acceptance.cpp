// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every bound and tolerance is pinned in code; all geometric
// checks are exact.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "obst/construct.hpp"
#include "obst/extremal.hpp"
#include "obst/verify.hpp"
#include "oracles.hpp"

using namespace obst;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    Clock::time_point t0 = Clock::now();
    bool ok = true;
    std::string detail;

    explicit Criterion(const char* n) : name(n) {}
    void fail(const std::string& why) {
        ok = false;
        if (detail.empty()) detail = why;
    }
    void finish() {
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name, secs,
                    detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

Graph random_bipartite(std::mt19937& rng, int m, int n, std::vector<int>& side) {
    Graph g(m + n);
    side.assign(m + n, 0);
    for (int v = m; v < m + n; ++v) side[v] = 1;
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + n; ++v)
            if (rng() % 2) g.add_edge(u, v);
    return g;
}

bool zero_misclassified(const VerifyReport& r) {
    return r.misclassified_as_edges.empty() && r.misclassified_as_nonedges.empty();
}

// ---------------------------------------------------------------------------

void criterion1() {
    Criterion c("criterion 1: bipartite/split/cobipartite constructors (200 bipartite m+n<=24, 100 split n<=16)");
    std::mt19937 rng(1001);
    for (int it = 0; it < 200 && c.ok; ++it) {
        int m = 1 + static_cast<int>(rng() % 12);
        int n = 1 + static_cast<int>(rng() % std::min<unsigned>(12, 24 - m));
        std::vector<int> side;
        Graph h = random_bipartite(rng, m, n, side);

        ObstacleRepresentation rb = represent_bipartite(h, side);
        if (static_cast<int>(rb.obstacles.size()) > h.n() - 1 && h.n() >= 2)
            c.fail("bipartite obstacle count exceeds |V|-1");
        VerifyReport vb = verify(h, rb);
        if (!vb.pass || !zero_misclassified(vb)) c.fail("bipartite representation failed verify");

        ObstacleRepresentation rc = represent_cobipartite(h, side);
        if (static_cast<int>(rc.obstacles.size()) > h.n() - 1)
            c.fail("cobipartite obstacle count exceeds |V|-1");
        VerifyReport vc = verify(h.complement(), rc);
        if (!vc.pass || !zero_misclassified(vc)) c.fail("cobipartite representation failed verify");
    }
    for (int it = 0; it < 100 && c.ok; ++it) {
        int a = 1 + static_cast<int>(rng() % 8);
        int b = 1 + static_cast<int>(rng() % std::min<unsigned>(8, 16 - a));
        Graph g(a + b);
        std::vector<int> clique, indep;
        for (int v = 0; v < a; ++v) clique.push_back(v);
        for (int v = a; v < a + b; ++v) indep.push_back(v);
        for (int u = 0; u < a; ++u)
            for (int v = u + 1; v < a; ++v) g.add_edge(u, v);
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b; ++v)
                if (rng() % 2) g.add_edge(u, v);
        ObstacleRepresentation rs = represent_split(g, clique, indep);
        if (static_cast<int>(rs.obstacles.size()) > g.n() - 1 && g.n() >= 2)
            c.fail("split obstacle count exceeds |V|-1");
        VerifyReport vs = verify(g, rs);
        if (!vs.pass || !zero_misclassified(vs)) c.fail("split representation failed verify");
    }
    c.finish();
}

void criterion2() {
    Criterion c("criterion 2: general-graph constructor (100 graphs per n in {4,8,12,16,24,32})");
    if (general_obstacle_bound(8) != 17 || general_obstacle_bound(16) != 49 ||
        general_obstacle_bound(32) != 129)
        c.fail("bound formula instantiation mismatch");
    std::mt19937 rng(2002);
    for (int n : {4, 8, 12, 16, 24, 32}) {
        for (int it = 0; it < 100 && c.ok; ++it) {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 2) g.add_edge(u, v);
            ObstacleRepresentation rep = represent_general(g);
            if (static_cast<long long>(rep.obstacles.size()) > general_obstacle_bound(n))
                c.fail("obstacle count exceeds n ceil(log n) - n + 1 at n=" + std::to_string(n));
            VerifyReport r = verify(g, rep);
            if (!r.pass || !zero_misclassified(r))
                c.fail("general representation failed verify at n=" + std::to_string(n));
        }
    }
    c.finish();
}

void criterion3() {
    Criterion c("criterion 3: subcoloring constructor (t cliques of size t, t<=5, monochromatic)");
    for (int t = 1; t <= 5 && c.ok; ++t) {
        int n = t * t;
        Graph g(n);
        Subcoloring col;
        col.color.assign(n, 0);
        col.clique.resize(n);
        for (int a = 0; a < t; ++a)
            for (int i = 0; i < t; ++i) {
                col.clique[a * t + i] = a;
                for (int j = i + 1; j < t; ++j) g.add_edge(a * t + i, a * t + j);
            }
        ObstacleRepresentation rep = represent_subcolored(g, col);
        if (n >= 2 && static_cast<int>(rep.obstacles.size()) > n - 1)
            c.fail("obstacle count exceeds n-1 at t=" + std::to_string(t));
        VerifyReport r = verify(g, rep);
        if (!r.pass || !zero_misclassified(r)) c.fail("verify failed at t=" + std::to_string(t));
        for (const auto& [pair, count] : blocking_multiplicity(g, rep))
            if (count != 1) c.fail("blocking multiplicity != 1 at t=" + std::to_string(t));
    }
    c.finish();
}

void criterion4() {
    Criterion c("criterion 4: certified cap properties (all m,n <= 10, exact)");
    for (int m = 1; m <= 10 && c.ok; ++m)
        for (int n = 1; n <= 10 && c.ok; ++n) {
            CertifiedDrawing cd;
            try {
                cd = certify_epsilon(m, n, Scalar(1), Scalar(1), Scalar(1));
            } catch (const std::exception& e) {
                c.fail(std::string("certify_epsilon failed: ") + e.what());
                break;
            }
            BipartiteDrawing reg = regularize(cd.drawing);
            for (const auto& fam : concurrent_families(reg)) {
                std::vector<Segment> segs;
                for (const auto& e : fam.edges) segs.push_back(cd.drawing.edge(e));
                CapResult r = form_cap(segs);
                if (!r) {
                    c.fail("family does not form a cap");
                    break;
                }
                for (size_t j = 0; j + 1 < r.cap->vertices.size(); ++j)
                    if (!(r.cap->vertices[j].x < r.cap->vertices[j + 1].x))
                        c.fail("cap vertices not strictly x-increasing");
                for (const auto& v : r.cap->vertices)
                    if (!(dist_sq(v, fam.meeting) < cd.cert.delta_sq))
                        c.fail("cap vertex outside the certified delta ball");
                if (!is_good(*r.cap, *cd.arr)) {
                    c.fail("family cap is not good");
                    break;
                }
            }
        }
    c.finish();
}

void criterion5() {
    Criterion c("criterion 5: middle-cap face families (n in 6..20, all 0<h<n; supergraph demos)");
    for (int n = 6; n <= 20 && c.ok; ++n)
        for (int h = 1; h < n && c.ok; ++h) {
            EOfHResult r;
            try {
                r = e_of_h(n, h);
            } catch (const std::exception& e) {
                c.fail(std::string("e_of_h failed: ") + e.what());
                break;
            }
            long long bound = (2LL * h * n - static_cast<long long>(h) * h - 1 + 3) / 4;
            if (r.lower_bound != bound) c.fail("stored bound mismatch");
            if (r.incident_edges < bound)
                c.fail("incident count below ceil((2hn-h^2-1)/4) at n=" + std::to_string(n) +
                       " h=" + std::to_string(h));
            if (n == 10 && h == 4 && r.incident_edges < 16) c.fail("(10,4) must give >= 16");
        }
    std::mt19937 rng(5005);
    for (auto [n, h] : std::vector<std::pair<int, int>>{{10, 2}, {12, 3}}) {
        Graph base = thm4_base_graph(n, h);
        for (int it = 0; it < 20 && c.ok; ++it) {
            Graph gp = base;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!gp.has_edge(u, v) && rng() % 2) gp.add_edge(u, v);
            ObstacleRepresentation rep = thm4_supergraph_rep(n, h, gp);
            if (static_cast<int>(rep.obstacles.size()) > h) c.fail("more than h obstacles");
            VerifyReport r = verify(gp, rep);
            if (!r.pass || !zero_misclassified(r)) c.fail("supergraph representation failed verify");
        }
    }
    c.finish();
}

void criterion6() {
    Criterion c("criterion 6: uniform-crossing face families (K=2 at n in {16,24,32}; K=3 at n=32)");
    for (int n : {16, 24, 32}) {
        if (!c.ok) break;
        FaceFamilyReport r;
        try {
            r = thm5_construction(n, 8LL * n);  // K = 2
        } catch (const std::exception& e) {
            c.fail(std::string("thm5 failed: ") + e.what());
            break;
        }
        if (r.K != 2) c.fail("K != 2 for M = 8n");
        if (r.face_count > 2 * n) c.fail("more than 2n faces");
        if (!r.faces_distinct) c.fail("faces not pairwise distinct");
        long long lower = static_cast<long long>(n) * n - 4LL * n;
        if (n == 16 && lower != 192) c.fail("lower bound instantiation mismatch");
        if (r.complexity < lower) c.fail("measured complexity below n^2-4n");
        std::printf("    thm5 n=%d K=2: complexity=%lld ref=%.1f ratio=%.3f\n", n, r.complexity,
                    r.asymptotic_ref, r.ratio);
    }
    if (c.ok) {
        try {
            FaceFamilyReport r = thm5_construction(32, 27LL * 32);  // K = 3
            if (r.K != 3) c.fail("K != 3 for M = 27n");
            for (const auto& st : r.per_pair) {
                if (st.faces > st.k * 32) c.fail("per-pair face count above kn");
                if (st.complexity < st.lower) c.fail("per-pair complexity below n^2-2kn");
            }
            if (2LL * r.face_count >= 32LL * r.K * r.K * r.K) c.fail("|F| not below nK^3/2");
            std::printf("    thm5 n=32 K=3: complexity=%lld ref=%.1f ratio=%.3f\n", r.complexity,
                        r.asymptotic_ref, r.ratio);
        } catch (const std::exception& e) {
            c.fail(std::string("thm5 K=3 failed: ") + e.what());
        }
    }
    c.finish();
}

void criterion7() {
    Criterion c("criterion 7: oracle equivalence (faces, hit test, Euler)");
    std::mt19937 rng(7007);
    int sets = 0;
    while (sets < 50 && c.ok) {
        std::vector<Segment> segs;
        while (static_cast<int>(segs.size()) < 12) {
            Segment s{oracle::rand_point(rng, 12, 2), oracle::rand_point(rng, 12, 2)};
            if (s.a == s.b) continue;
            bool ok = true;
            for (const auto& t : segs)
                if (seg_intersection(s, t).kind == HitKind::Overlap ||
                    ((s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a)))
                    ok = false;
            if (ok) segs.push_back(s);
        }
        Arrangement a = build(segs);
        ++sets;
        if (!a.euler_check()) c.fail("Euler check failed");
        // each bounded face holds a certified interior point unique to it
        for (int f = 0; f < a.n_faces() && c.ok; ++f) {
            if (!a.face[f].bounded) continue;
            Point p = oracle::interior_point_of_face(a, f);
            for (int g = 0; g < a.n_faces(); ++g) {
                if (g == f || !a.face[g].bounded) continue;
                if (oracle::point_in_face_by_parity(a, g, p))
                    c.fail("face interior point claimed by two faces");
            }
        }
        // random points land in at most one bounded face
        for (int s = 0; s < 20 && c.ok; ++s) {
            Point p = oracle::rand_point(rng, 13, 3);
            bool on_any = false;
            for (const auto& seg : a.source)
                if (on_segment(p, seg)) on_any = true;
            if (on_any) continue;
            int owners = 0;
            for (int f = 0; f < a.n_faces(); ++f)
                if (a.face[f].bounded && oracle::point_in_face_by_parity(a, f, p)) ++owners;
            if (owners > 1) c.fail("sample point claimed by two faces");
        }
    }
    for (int it = 0; it < 10000 && c.ok; ++it) {
        Segment s{oracle::rand_point(rng, 8, 2), oracle::rand_point(rng, 8, 2)};
        if (s.a == s.b) continue;
        std::vector<Point> pts;
        int k = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < k; ++i) pts.push_back(oracle::rand_point(rng, 8, 2));
        ConvexObstacle o = convex_hull(pts);
        if (seg_hits_obstacle(s, o) != oracle::seg_hits_obstacle_brute(s, o))
            c.fail("hit test disagrees with the brute-force oracle");
    }
    c.finish();
}

void criterion8() {
    Criterion c("criterion 8: g(1,n) family (n in {4,6,8}, 10 bijections each)");
    std::mt19937 rng(8008);
    for (int n : {4, 6, 8}) {
        for (int it = 0; it < 10 && c.ok; ++it) {
            std::vector<int> f;
            for (int i = 0; i < n / 2; ++i) f.push_back((n + 1) / 2 + i);
            std::shuffle(f.begin(), f.end(), rng);
            ObstacleRepresentation rep = single_obstacle_family(n, f);
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!(u < n / 2 && f[u] == v)) g.add_edge(u, v);
            VerifyReport r = verify(g, rep);
            if (!r.pass || !zero_misclassified(r)) c.fail("g(1,n) representation failed verify");
            // blocked set is exactly the matching
            for (int u = 0; u < n && c.ok; ++u)
                for (int v = u + 1; v < n; ++v) {
                    bool blocked = false;
                    for (const auto& o : rep.obstacles)
                        if (seg_hits_obstacle({rep.placement[u], rep.placement[v]}, o)) blocked = true;
                    bool matched = u < n / 2 && f[u] == v;
                    if (blocked != matched) c.fail("blocked set differs from the matching");
                }
        }
    }
    c.finish();
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
