#include <doctest.h>

#include <random>

#include "obst/construct.hpp"
#include "obst/json_io.hpp"
#include "obst/svg.hpp"
#include "oracles.hpp"

using namespace obst;
using nlohmann::json;

TEST_CASE("graph json round-trip") {
    Graph g(5);
    g.add_edge(0, 4);
    g.add_edge(1, 2);
    json j = graph_to_json(g);
    CHECK(j["n"] == 5);
    Graph back = graph_from_json(j);
    CHECK(back == g);
}

TEST_CASE("drawing json round-trip keeps exact rationals") {
    BipartiteDrawing d = dilated_drawing(4, 3, Scalar(3, 2), Scalar(1, 7), Scalar(2, 5), Scalar(1, 13));
    json j = drawing_to_json(d);
    CHECK(j["w"] == "3/2");
    BipartiteDrawing back = drawing_from_json(j);
    CHECK(back.P == d.P);
    CHECK(back.Q == d.Q);
    CHECK(back.epsilon == d.epsilon);
}

TEST_CASE("representation json round-trip is lossless (property)") {
    std::mt19937 rng(83);
    for (int it = 0; it < 40; ++it) {
        ObstacleRepresentation rep;
        std::uniform_int_distribution<int> nd(1, 6);
        int n = nd(rng);
        for (int v = 0; v < n; ++v) rep.placement.push_back(oracle::rand_point(rng, 1000, 997));
        int k = nd(rng) - 1;
        for (int o = 0; o < k; ++o) {
            std::vector<Point> pts;
            int c = nd(rng);
            for (int i = 0; i < c; ++i) pts.push_back(oracle::rand_point(rng, 1000, 997));
            rep.obstacles.push_back(convex_hull(pts));
            rep.tags.push_back("t" + std::to_string(o));
        }
        json j = rep_to_json(rep);
        ObstacleRepresentation back = rep_from_json(j);
        CHECK(rep_to_json(back).dump() == j.dump());
        CHECK(back.placement == rep.placement);
        for (size_t o = 0; o < rep.obstacles.size(); ++o) {
            CHECK(back.obstacles[o].rank == rep.obstacles[o].rank);
            CHECK(back.obstacles[o].vertices == rep.obstacles[o].vertices);
        }
    }
}

TEST_CASE("constructed representation round-trips and verifies identically") {
    std::mt19937 rng(89);
    Graph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (rng() % 2) g.add_edge(u, v);
    ObstacleRepresentation rep = represent_general(g);
    ObstacleRepresentation back = rep_from_json(rep_to_json(rep));
    CHECK(verify(g, back).pass);
    CHECK(rep_to_json(back).dump() == rep_to_json(rep).dump());
}

TEST_CASE("obstacle kinds map to degeneracy ranks") {
    json j = {{"placement", json::array({json::array({"0/1", "0/1"})})},
              {"obstacles", json::array({{{"kind", "point"},
                                          {"vertices", json::array({json::array({"1/2", "1/2"})})}}})},
              {"tags", json::array({"p"})}};
    ObstacleRepresentation rep = rep_from_json(j);
    CHECK(rep.obstacles[0].rank == 0);
    CHECK(rep_to_json(rep)["obstacles"][0]["kind"] == "point");
    j["obstacles"][0]["kind"] = "segment";
    CHECK_THROWS_AS(rep_from_json(j), std::invalid_argument);  // too few vertices
}

TEST_CASE("svg export is deterministic and mentions every obstacle") {
    Graph g(4);  // empty graph: singleton cliques, one polygon hull obstacle
    Subcoloring c;
    c.color.assign(4, 0);
    c.clique = {0, 1, 2, 3};
    ObstacleRepresentation rep = represent_subcolored(g, c);
    REQUIRE(rep.obstacles.size() == 1);
    std::string a = rep_to_svg(rep, Scalar(1, 8));
    std::string b = rep_to_svg(rep, Scalar(1, 8));
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("polygon") != std::string::npos);  // the class hull obstacle
}
