#include "obst/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace obst {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    adj_[u][v] = adj_[v][u] = true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adj_[u][v]) out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && adj_[v][u]) ++d;
    return d;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[u][v]) g.add_edge(u, v);
    return g;
}

int Subcoloring::num_colors() const {
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    return k;
}

bool Subcoloring::valid_for(const Graph& g) const {
    if (static_cast<int>(color.size()) != g.n() || clique.size() != color.size()) return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (color[u] != color[v]) continue;
            bool same_clique = clique[u] == clique[v];
            if (same_clique && !g.has_edge(u, v)) return false;
            if (!same_clique && g.has_edge(u, v)) return false;
        }
    return true;
}

std::vector<int> greedy_coloring(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        std::vector<bool> used(g.n() + 1, false);
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v) && color[u] >= 0) used[color[u]] = true;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
    }
    return color;
}

Subcoloring greedy_subcoloring(const Graph& g) {
    if (g.n() == 0) return {};
    auto ci = greedy_coloring(g);                // classes are independent sets
    auto cc = greedy_coloring(g.complement());   // classes are cliques of g
    int ki = *std::max_element(ci.begin(), ci.end()) + 1;
    int kc = *std::max_element(cc.begin(), cc.end()) + 1;

    Subcoloring s;
    s.color.resize(g.n());
    s.clique.resize(g.n());
    if (kc <= ki) {
        // each color class is one clique
        s.color = cc;
        std::fill(s.clique.begin(), s.clique.end(), 0);
    } else {
        // each color class is an independent set: every vertex its own clique
        s.color = ci;
        std::vector<int> next(ki, 0);
        for (int v = 0; v < g.n(); ++v) s.clique[v] = next[s.color[v]]++;
    }
    return s;
}

bool bipartition(const Graph& g, std::vector<int>& side) {
    side.assign(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < g.n(); ++v) {
                if (!g.has_edge(u, v)) continue;
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool split_partition(const Graph& g, std::vector<int>& clique_side, std::vector<int>& indep_side) {
    // Degree-ordered sweep: a graph is split iff taking the top-degree prefix
    // as the clique works for some prefix size.
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = g.n(); k >= 0; --k) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b)
                if (!g.has_edge(order[a], order[b])) ok = false;
        for (int a = k; a < g.n() && ok; ++a)
            for (int b = a + 1; b < g.n() && ok; ++b)
                if (g.has_edge(order[a], order[b])) ok = false;
        if (ok) {
            clique_side.assign(order.begin(), order.begin() + k);
            indep_side.assign(order.begin() + k, order.end());
            std::sort(clique_side.begin(), clique_side.end());
            std::sort(indep_side.begin(), indep_side.end());
            return true;
        }
    }
    return false;
}

}  // namespace obst
