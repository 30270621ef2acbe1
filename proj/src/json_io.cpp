#include "obst/json_io.hpp"

#include <stdexcept>

namespace obst {

using nlohmann::json;

json point_to_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point: expected [x, y]");
    return {Scalar::parse(j[0].get<std::string>()), Scalar::parse(j[1].get<std::string>())};
}

json graph_to_json(const Graph& g) {
    json e = json::array();
    for (auto [u, v] : g.edges()) e.push_back(json::array({u, v}));
    return json{{"n", g.n()}, {"edges", e}};
}

Graph graph_from_json(const json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

json drawing_to_json(const BipartiteDrawing& d) {
    json P = json::array(), Q = json::array();
    for (const auto& p : d.P) P.push_back(point_to_json(p));
    for (const auto& q : d.Q) Q.push_back(point_to_json(q));
    json out{{"m", d.m}, {"n", d.n}, {"w", d.w.str()}, {"P", P}, {"Q", Q}};
    if (d.epsilon) out["epsilon"] = d.epsilon->str();
    return out;
}

BipartiteDrawing drawing_from_json(const json& j) {
    BipartiteDrawing d;
    d.m = j.at("m").get<int>();
    d.n = j.at("n").get<int>();
    d.w = Scalar::parse(j.at("w").get<std::string>());
    for (const auto& p : j.at("P")) d.P.push_back(point_from_json(p));
    for (const auto& q : j.at("Q")) d.Q.push_back(point_from_json(q));
    if (j.contains("epsilon")) d.epsilon = Scalar::parse(j["epsilon"].get<std::string>());
    d.validate();
    return d;
}

namespace {

const char* kind_name(int rank) {
    switch (rank) {
        case 0: return "point";
        case 1: return "segment";
        default: return "polygon";
    }
}

int kind_rank(const std::string& k) {
    if (k == "point") return 0;
    if (k == "segment") return 1;
    if (k == "polygon") return 2;
    throw std::invalid_argument("obstacle kind: " + k);
}

}  // namespace

json rep_to_json(const ObstacleRepresentation& r) {
    json placement = json::array();
    for (const auto& p : r.placement) placement.push_back(point_to_json(p));
    json obstacles = json::array();
    for (const auto& o : r.obstacles) {
        json vs = json::array();
        for (const auto& v : o.vertices) vs.push_back(point_to_json(v));
        obstacles.push_back(json{{"kind", kind_name(o.rank)}, {"vertices", vs}});
    }
    return json{{"placement", placement}, {"obstacles", obstacles}, {"tags", r.tags}};
}

ObstacleRepresentation rep_from_json(const json& j) {
    ObstacleRepresentation r;
    for (const auto& p : j.at("placement")) r.placement.push_back(point_from_json(p));
    for (const auto& o : j.at("obstacles")) {
        ConvexObstacle c;
        c.rank = kind_rank(o.at("kind").get<std::string>());
        for (const auto& v : o.at("vertices")) c.vertices.push_back(point_from_json(v));
        int want = c.rank == 0 ? 1 : c.rank == 1 ? 2 : 3;
        if (static_cast<int>(c.vertices.size()) < want)
            throw std::invalid_argument("obstacle: too few vertices for its kind");
        r.obstacles.push_back(std::move(c));
    }
    if (j.contains("tags")) r.tags = j["tags"].get<std::vector<std::string>>();
    if (r.tags.size() != r.obstacles.size()) r.tags.resize(r.obstacles.size());
    return r;
}

json report_to_json(const VerifyReport& r) {
    auto pairs = [](const std::vector<std::pair<int, int>>& v) {
        json a = json::array();
        for (auto [x, y] : v) a.push_back(json::array({x, y}));
        return a;
    };
    json deg = json::array();
    for (auto [u, v, w] : r.degenerate_edges) deg.push_back(json::array({u, v, w}));
    return json{{"pass", r.pass},
                {"strictPass", r.strict_pass},
                {"misclassifiedAsEdges", pairs(r.misclassified_as_edges)},
                {"misclassifiedAsNonedges", pairs(r.misclassified_as_nonedges)},
                {"vertexInObstacle", pairs(r.vertex_in_obstacle)},
                {"degenerateEdges", deg}};
}

json stats_to_json(const ArrangementStats& s) {
    return json{{"segments", s.segments},
                {"vertices", s.vertices},
                {"edges", s.edges},
                {"faces", s.faces},
                {"boundedFaces", s.bounded_faces},
                {"maxFaceComplexity", s.max_face_complexity},
                {"totalComplexity", s.total_complexity}};
}

}  // namespace obst
