#pragma once

#include <string>
#include <utility>
#include <vector>

namespace magnikit {

// Unordered edge, endpoints normalized u <= v; u == v is a self-loop.
struct Edge {
    int u = 0, v = 0;
    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
    bool is_loop() const { return u == v; }
    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u < b.u || (a.u == b.u && a.v < b.v);
    }
};

// Finite connected undirected multigraph with loops. Vertices are labelled
// 0..n-1; the edge list keeps multiplicity and insertion order, so a
// parallel copy is addressed by (endpoints, occurrence index). The hop
// metric of the simple underlying graph is computed at construction and
// shared by all magnitude machinery; loops and parallel edges only matter
// for the genus and the contraction calculus.
class Graph {
public:
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    // constructors for the standard families
    static Graph cycle(int m);                              // m >= 3
    static Graph rose(int loops);                           // one vertex, `loops` loops
    static Graph dumbbell(int m1, int m2, int m3);          // loops, m2+1 bridges, loops
    static Graph complete(int n);                           // K_n
    static Graph box_product(const Graph& a, const Graph& b);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    long long genus() const { return static_cast<long long>(edges_.size()) - n_ + 1; }

    int dist(int u, int v) const { return dist_[u][v]; }
    const std::vector<std::vector<int>>& dist_matrix() const { return dist_; }
    int diameter() const { return diameter_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // distinct non-loop edges of the simple underlying graph, sorted
    std::vector<Edge> simple_edges() const;
    // copy with loops and parallel duplicates removed
    Graph simplified() const;

    int find_edge(const Edge& e, int occurrence) const;  // -1 when absent

    Graph contract_edge(int edge_index) const;
    Graph contract(const Edge& e, int occurrence = 0) const;
    // vertex map of contract_edge: larger endpoint folds into the smaller,
    // labels above shift down
    std::vector<int> contraction_vertex_map(int edge_index) const;

    Graph delete_edge(int edge_index) const;
    Graph delete_edge(const Edge& e, int occurrence = 0) const;

    // replace edge i by a path with counts[i] inserted vertices; a count of
    // zero contracts the edge instead
    Graph subdivide(const std::vector<Edge>& edges_to_split,
                    const std::vector<int>& counts) const;

    std::vector<std::vector<Edge>> spanning_trees() const;

    std::string to_text() const;
    static Graph from_text(const std::string& text);
    std::string to_json() const;
    static Graph from_json(const std::string& text);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Graph() = default;
    void finalize();  // validates, computes metric

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;   // simple adjacency, sorted
    std::vector<std::vector<int>> dist_;  // hop metric
    int diameter_ = 0;
};

// All isomorphisms a -> b as vertex bijections (multiplicity- and
// loop-aware). Brute force with degree-class pruning.
std::vector<std::vector<int>> enumerate_isomorphisms(const Graph& a, const Graph& b);
bool is_isomorphic(const Graph& a, const Graph& b);

// Connected simple graphs on exactly n vertices, one per isomorphism
// class, deterministic order. Cached per n.
const std::vector<Graph>& all_connected_graphs(int n);
// Trees on exactly n vertices up to isomorphism.
std::vector<Graph> all_trees(int n);

}  // namespace magnikit
