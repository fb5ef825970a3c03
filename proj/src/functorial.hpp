#pragma once

#include <gmpxx.h>

#include <vector>

#include "class_reps.hpp"
#include "contraction.hpp"
#include "graph.hpp"
#include "magnitude.hpp"

namespace magnikit {

// Chain map MC_{k,l}(source) -> MC_{k,l}(target): a tuple maps to its image
// tuple when the image keeps length l, to zero otherwise.
SparseIntMatrix induced_chain_map(const ContractionMorphism& phi, int k, int l);
SparseIntMatrix induced_chain_map(const ContractionMorphism& phi, MagnitudeWorkspace& source,
                                  MagnitudeWorkspace& target, int k, int l);

// Class-level matrix MH_{k,l}(source) -> MH_{k,l}(target) over a field.
// The contravariant map on cohomology is its transpose.
template <class F>
DenseMat<F> induced_on_homology(const ContractionMorphism& phi, int k, int l, const F& field);

// Integer coefficients expressing the indicator of `vertex` over the
// generating functions {iota} u {f_e : e in tree}: iota is 1 on every
// vertex, f_e is 1 on the component of tree - e away from the root.
struct VertexDecomposition {
    int root = 0;
    int vertex = 0;
    mpz_class iota_coeff;
    std::vector<Edge> tree;             // as given
    std::vector<mpz_class> f_coeffs;    // parallel to tree
    // evaluate the combination at vertex w of g
    mpz_class evaluate(const Graph& g, int w) const;
};
VertexDecomposition vertex_generator_decomposition(const Graph& g, const std::vector<Edge>& tree,
                                                   int root, int vertex);

}  // namespace magnikit
