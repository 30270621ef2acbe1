#pragma once

#include <utility>
#include <vector>

namespace obst {

/// Simple undirected graph on vertices 0..n-1; no loops, no duplicates.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, std::vector<bool>(n, false)) {}

    int n() const { return n_; }
    bool has_edge(int u, int v) const { return u != v && adj_[u][v]; }
    void add_edge(int u, int v);
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
    int edge_count() const;
    int degree(int v) const;
    Graph complement() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<bool>> adj_;
};

/// Subcoloring: color classes each inducing a disjoint union of cliques;
/// clique[v] identifies v's clique within its color class.
struct Subcoloring {
    std::vector<int> color;   // values 0..k-1
    std::vector<int> clique;  // clique index within the color class

    int num_colors() const;
    bool valid_for(const Graph& g) const;
};

/// Deterministic subcoloring: the better of a greedy proper coloring of G
/// (classes are independent sets) and of its complement (classes are cliques).
Subcoloring greedy_subcoloring(const Graph& g);

/// Greedy proper coloring by vertex order; used by greedy_subcoloring and as
/// an upper bound for chi.
std::vector<int> greedy_coloring(const Graph& g);

/// Split partition (clique side, independent side) if g is a split graph.
bool split_partition(const Graph& g, std::vector<int>& clique_side, std::vector<int>& indep_side);

/// Two-coloring of a connected-or-not bipartite graph; false if odd cycle.
bool bipartition(const Graph& g, std::vector<int>& side);

}  // namespace obst
