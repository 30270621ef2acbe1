#include <doctest.h>

#include <algorithm>

#include "obst/caps.hpp"
#include "obst/drawing.hpp"

using namespace obst;

namespace {

Point P(long x, long y) { return {Scalar(x), Scalar(y)}; }

// tangents to a downward parabola: slopes strictly decreasing, consecutive
// crossings at increasing x
Segment tangent_at(long a, const Scalar& xlo, const Scalar& xhi) {
    auto y = [&](const Scalar& x) { return Scalar(-2 * a) * x + Scalar(a * a); };
    return {{xlo, y(xlo)}, {xhi, y(xhi)}};
}

std::vector<Segment> cap_chain(int count) {
    std::vector<Segment> segs;
    for (int a = 0; a < count; ++a)
        segs.push_back(tangent_at(a, Scalar(a) - Scalar(3, 5), Scalar(a) + Scalar(3, 5)));
    return segs;
}

}  // namespace

TEST_CASE("lower_envelope: single segment and V crossing") {
    std::vector<Segment> one{{P(0, 0), P(2, 1)}};
    auto comps = lower_envelope(one);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].pts.front() == P(0, 0));
    CHECK(comps[0].pts.back() == P(2, 1));

    std::vector<Segment> vee{{P(0, 2), P(2, 0)}, {P(0, 0), P(2, 2)}};
    comps = lower_envelope(vee);
    REQUIRE(comps.size() == 1);
    REQUIRE(comps[0].pts.size() == 3);
    CHECK(comps[0].pts[1] == P(1, 1));

    CHECK_THROWS_AS(lower_envelope(std::vector<Segment>{{P(0, 0), P(0, 1)}}),
                    std::invalid_argument);
}

TEST_CASE("lower_envelope: six cap edges with a disconnected envelope") {
    // the first tangent keeps a long right tail; after the last cap edge ends
    // the envelope jumps back up to it, so the envelope has two components
    // while the cap is a single one
    auto segs = cap_chain(6);
    segs[0].b = {Scalar(10), Scalar(0)};  // tangent at a=0 is horizontal
    auto comps = lower_envelope(segs);
    REQUIRE(comps.size() == 2);

    CapResult r = form_cap(segs);
    REQUIRE(r);
    CHECK(r.cap->vertices.size() == 5);
    for (size_t j = 0; j + 1 < r.cap->vertices.size(); ++j)
        CHECK(r.cap->vertices[j].x < r.cap->vertices[j + 1].x);
    // crossing of consecutive tangents at a and a+1 happens at x = a + 1/2
    CHECK(r.cap->vertices[0] == Point{Scalar(1, 2), Scalar(0)});
}

TEST_CASE("form_cap failures") {
    CHECK(form_cap(std::vector<Segment>{{P(0, 0), P(1, 1)}}).fail == CapFail::TooShort);

    // parallel edges never meet
    CapResult r = form_cap(std::vector<Segment>{{P(0, 1), P(2, 1)}, {P(0, 0), P(2, 0)}});
    CHECK(!r);
    CHECK(r.fail == CapFail::NoIntersection);

    // increasing slopes
    r = form_cap(std::vector<Segment>{{P(0, 1), P(2, 1)}, {P(0, 0), P(2, 2)}});
    CHECK(!r);
    CHECK(r.fail == CapFail::SlopeOrder);

    // vertical member
    r = form_cap(std::vector<Segment>{{P(0, 0), P(0, 2)}, {P(0, 0), P(2, 2)}});
    CHECK(!r);
    CHECK(r.fail == CapFail::Vertical);
}

TEST_CASE("form_cap: prefix closure") {
    for (int l = 3; l <= 6; ++l) {
        auto segs = cap_chain(l);
        CapResult full = form_cap(segs);
        REQUIRE(full);
        segs.pop_back();
        CapResult prefix = form_cap(segs);
        REQUIRE(prefix);
        CHECK(prefix.cap->vertices.size() == full.cap->vertices.size() - 1);
    }
}

TEST_CASE("is_good: bare crossing has no bounded face") {
    std::vector<Segment> segs{{P(0, 0), P(4, 4)}, {P(0, 4), P(4, 0)}};
    Arrangement a = build(segs);
    CapResult r = form_cap(segs);
    REQUIRE(r);
    CHECK(!is_good(*r.cap, a));
}

TEST_CASE("is_good: floor closes the face, a transversal through the apex cuts it") {
    std::vector<Segment> capsegs{{P(0, 0), P(4, 4)}, {P(0, 4), P(4, 0)}};
    std::vector<Segment> with_floor = capsegs;
    with_floor.push_back({P(0, 1), P(4, 1)});
    Arrangement a = build(with_floor);
    CapResult r = form_cap(capsegs);
    REQUIRE(r);
    CHECK(is_good(*r.cap, a));
    CHECK(good_face(*r.cap, a).has_value());

    // vertical transversal through the crossing separates the two edges
    with_floor.push_back({P(2, 0), P(2, 4)});
    Arrangement b = build(with_floor);
    CHECK(!is_good(*r.cap, b));

    // cap edges must be sources of the arrangement
    std::vector<Segment> foreign{{P(0, 0), P(1, 7)}, {P(0, 7), P(1, 0)}};
    CapResult f = form_cap(foreign);
    REQUIRE(f);
    CHECK_THROWS_AS(is_good(*f.cap, b), std::invalid_argument);
}

TEST_CASE("level_cap: certified levels are good, single-edge levels vacuously") {
    CertifiedDrawing cd = certify_epsilon(4, 4, Scalar(1), Scalar(1), Scalar(1));
    for (int k = 1; k <= 7; ++k) {
        Cap c = level_cap(cd.drawing, k, *cd.arr);
        CHECK(c.edges.size() == level_edges(cd.drawing, k).size());
        if (c.edges.size() >= 2) {
            CHECK(is_good(c, *cd.arr));
            // the shared face sees at least all cap edges
            auto f = good_face(c, *cd.arr);
            REQUIRE(f.has_value());
            CHECK(cd.arr->face_complexity(*f) >= static_cast<int>(c.edges.size()));
        }
    }
}

TEST_CASE("face below a cap piece is a shared bounded face of all cap edges") {
    CertifiedDrawing cd = certify_epsilon(2, 2, Scalar(1), Scalar(1), Scalar(1));
    Cap c = level_cap(cd.drawing, 2, *cd.arr);
    REQUIRE(is_good(c, *cd.arr));
    int below = -1;
    for (size_t i = 0; i < c.pieces.size(); ++i) {
        int src = *cd.arr->source_index(c.edges[i]);
        Point mid = midpoint(c.pieces[i].a, c.pieces[i].b);
        int f = cd.arr->face_right_below(src, mid);
        if (below < 0) below = f;
        CHECK(f == below);  // one face under the whole polyline
    }
    REQUIRE(below >= 0);
    CHECK(cd.arr->face[below].bounded);
    for (const auto& e : c.edges) {
        int src = *cd.arr->source_index(e);
        const auto& inc = cd.arr->face[below].incident;
        CHECK(std::binary_search(inc.begin(), inc.end(), src));
    }
}

TEST_CASE("uniformly crossing tuples of a dilated drawing form caps") {
    CertifiedDrawing cd = certify_epsilon(5, 5, Scalar(1), Scalar(1), Scalar(1));
    const BipartiteDrawing& D = cd.drawing;
    // the Fig. 4(a)-style triple (p_2 q_5, p_3 q_3, p_4 q_1)
    std::vector<EdgeId> triple{{2, 5}, {3, 3}, {4, 1}};
    REQUIRE(is_uniformly_crossing(D, triple));
    std::vector<Segment> segs;
    for (const auto& e : triple) segs.push_back(D.edge(e));
    CapResult r = form_cap(segs);
    REQUIRE(r);
    CHECK(is_good(*r.cap, *cd.arr));
}
