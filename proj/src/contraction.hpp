#pragma once

#include <vector>

#include "graph.hpp"

namespace magnikit {

// Vertex map source -> target realized by contracting a set of edges whose
// components (the fibers) are trees. Validated on construction.
struct ContractionMorphism {
    Graph source;
    Graph target;
    std::vector<int> vertex_map;  // size source.n()
    std::vector<int> contracted;  // edge indices into source.edges(), sorted

    static ContractionMorphism make(Graph source, Graph target, std::vector<int> vertex_map,
                                    std::vector<int> contracted);
    static ContractionMorphism identity(const Graph& g);
    // the single-edge contraction with the canonical relabelling
    static ContractionMorphism single_edge(const Graph& g, int edge_index);

    bool is_identity_map() const;
};

// psi after phi: phi contracts A onto B, psi contracts B onto C.
ContractionMorphism compose(const ContractionMorphism& psi, const ContractionMorphism& phi);

// Quotient of g by an acyclic set of non-loop edges. Fiber classes are
// labelled by the rank of their smallest member. Returns the quotient and
// the vertex map.
std::pair<Graph, std::vector<int>> quotient_by_edges(const Graph& g,
                                                     const std::vector<int>& edge_indices);

// Every (edge subset, isomorphism) pair contracting `big` onto `small`.
// Empty when the genera differ. Guarded by an enumeration cap on |V(big)|.
std::vector<ContractionMorphism> enumerate_contractions_onto(const Graph& big,
                                                             const Graph& small,
                                                             int vertex_cap = 10);

}  // namespace magnikit
