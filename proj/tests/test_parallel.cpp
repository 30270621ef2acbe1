#include <doctest.h>

#include <random>

#include "obst/arrangement.hpp"
#include "obst/drawing.hpp"
#include "obst/verify.hpp"
#include "oracles.hpp"

using namespace obst;

// The OpenMP kernels must reproduce the serial reference bit for bit: the
// parallel schedule only fills preassigned slots.

namespace {

std::vector<Segment> random_segments(std::mt19937& rng, int count) {
    std::vector<Segment> segs;
    while (static_cast<int>(segs.size()) < count) {
        Segment s{oracle::rand_point(rng, 12, 2), oracle::rand_point(rng, 12, 2)};
        if (s.a == s.b) continue;
        bool ok = true;
        for (const auto& t : segs)
            if (seg_intersection(s, t).kind == HitKind::Overlap ||
                ((s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a)))
                ok = false;
        if (ok) segs.push_back(s);
    }
    return segs;
}

}  // namespace

TEST_CASE("arrangement build: serial reference equals parallel kernel") {
    std::mt19937 rng(97);
    for (int it = 0; it < 10; ++it) {
        auto segs = random_segments(rng, 10);
        Arrangement s = build(segs, {false, Exec::Serial});
        Arrangement p = build(segs, {false, Exec::Parallel});
        REQUIRE(s.n_vertices() == p.n_vertices());
        REQUIRE(s.n_edges() == p.n_edges());
        REQUIRE(s.n_faces() == p.n_faces());
        CHECK(s.vertex == p.vertex);
        for (int f = 0; f < s.n_faces(); ++f) {
            CHECK(s.face[f].bounded == p.face[f].bounded);
            CHECK(s.face[f].incident == p.face[f].incident);
        }
        CHECK(s.he_next == p.he_next);
        CHECK(s.he_face == p.he_face);
    }
}

TEST_CASE("verify: serial reference equals parallel kernel") {
    std::mt19937 rng(101);
    Graph g(8);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if (rng() % 2) g.add_edge(u, v);
    ObstacleRepresentation rep;
    for (int v = 0; v < 8; ++v) rep.placement.push_back(oracle::rand_point(rng, 40, 7));
    for (int o = 0; o < 5; ++o) {
        std::vector<Point> pts;
        for (int i = 0; i < 3; ++i) pts.push_back(oracle::rand_point(rng, 40, 7));
        rep.obstacles.push_back(convex_hull(pts));
        rep.tags.push_back("o");
    }
    VerifyReport s = verify(g, rep, Exec::Serial);
    VerifyReport p = verify(g, rep, Exec::Parallel);
    CHECK(s.pass == p.pass);
    CHECK(s.strict_pass == p.strict_pass);
    CHECK(s.misclassified_as_edges == p.misclassified_as_edges);
    CHECK(s.misclassified_as_nonedges == p.misclassified_as_nonedges);
    CHECK(s.vertex_in_obstacle == p.vertex_in_obstacle);
}

TEST_CASE("certify_epsilon: serial and parallel agree on the certificate") {
    auto s = try_epsilon(4, 4, Scalar(1), Scalar(1), Scalar(1),
                         effective_delta_sq(4, 4, Scalar(1), Scalar(1), Scalar(1)), Scalar(1, 16),
                         Exec::Serial);
    auto p = try_epsilon(4, 4, Scalar(1), Scalar(1), Scalar(1),
                         effective_delta_sq(4, 4, Scalar(1), Scalar(1), Scalar(1)), Scalar(1, 16),
                         Exec::Parallel);
    REQUIRE(s.has_value() == p.has_value());
    if (s) {
        CHECK(s->cert.eps == p->cert.eps);
        CHECK(s->cert.delta_sq == p->cert.delta_sq);
        CHECK(s->drawing.P == p->drawing.P);
        CHECK(s->arr->n_faces() == p->arr->n_faces());
    }
}
