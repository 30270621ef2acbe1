#include "obst/verify.hpp"

#include <stdexcept>

namespace obst {

VerifyReport verify(const Graph& g, const ObstacleRepresentation& rep, Exec exec) {
    const int n = g.n();
    if (static_cast<int>(rep.placement.size()) != n)
        throw std::invalid_argument("verify: placement size differs from vertex count");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rep.placement[u] == rep.placement[v])
                throw std::invalid_argument("verify: placement not injective");
    for (const auto& o : rep.obstacles)
        if (o.vertices.empty()) throw std::invalid_argument("verify: obstacle without vertices");

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    // obstacle bounding boxes screen most pair/obstacle tests cheaply
    struct Box {
        Scalar xlo, xhi, ylo, yhi;
    };
    std::vector<Box> box;
    box.reserve(rep.obstacles.size());
    for (const auto& o : rep.obstacles) {
        Box b{o.vertices[0].x, o.vertices[0].x, o.vertices[0].y, o.vertices[0].y};
        for (const auto& p : o.vertices) {
            b.xlo = min(b.xlo, p.x);
            b.xhi = max(b.xhi, p.x);
            b.ylo = min(b.ylo, p.y);
            b.yhi = max(b.yhi, p.y);
        }
        box.push_back(std::move(b));
    }

    std::vector<char> blocked(pairs.size(), 0);
    parallel_for(exec, pairs.size(), [&](size_t k) {
        Segment s{rep.placement[pairs[k].first], rep.placement[pairs[k].second]};
        for (size_t o = 0; o < rep.obstacles.size(); ++o) {
            const Box& b = box[o];
            if (max(s.a.x, s.b.x) < b.xlo || b.xhi < min(s.a.x, s.b.x) ||
                max(s.a.y, s.b.y) < b.ylo || b.yhi < min(s.a.y, s.b.y))
                continue;
            if (seg_hits_obstacle(s, rep.obstacles[o])) {
                blocked[k] = 1;
                break;
            }
        }
    });

    VerifyReport r;
    for (size_t k = 0; k < pairs.size(); ++k) {
        auto [u, v] = pairs[k];
        bool edge = g.has_edge(u, v);
        if (edge && blocked[k]) r.misclassified_as_nonedges.emplace_back(u, v);
        if (!edge && !blocked[k]) r.misclassified_as_edges.emplace_back(u, v);
    }
    for (int v = 0; v < n; ++v)
        for (size_t o = 0; o < rep.obstacles.size(); ++o)
            if (point_in_convex(rep.obstacles[o], rep.placement[v]))
                r.vertex_in_obstacle.emplace_back(v, static_cast<int>(o));

    // degenerate drawing warning: an edge of g running through a third vertex
    for (auto [u, v] : g.edges()) {
        Segment s{rep.placement[u], rep.placement[v]};
        for (int w = 0; w < n; ++w)
            if (w != u && w != v && on_segment(rep.placement[w], s))
                r.degenerate_edges.emplace_back(u, v, w);
    }

    r.pass = r.misclassified_as_edges.empty() && r.misclassified_as_nonedges.empty() &&
             r.vertex_in_obstacle.empty();
    r.strict_pass = r.pass && r.degenerate_edges.empty();
    return r;
}

std::vector<std::pair<std::pair<int, int>, int>> blocking_multiplicity(
    const Graph& g, const ObstacleRepresentation& rep) {
    std::vector<std::pair<std::pair<int, int>, int>> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            Segment s{rep.placement[u], rep.placement[v]};
            int c = 0;
            for (const auto& o : rep.obstacles)
                if (seg_hits_obstacle(s, o)) ++c;
            out.push_back({{u, v}, c});
        }
    return out;
}

}  // namespace obst
