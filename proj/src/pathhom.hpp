#pragma once

#include <vector>

#include "class_reps.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "magnitude.hpp"

namespace magnikit {

// ---- the delta' bridge ----------------------------------------------------

// Derived complex of magnitude homology groups along a fixed offset k - l:
// groups MH_{l+offset, l} for l = 0..l_max with the maps induced by delta'.
// Induced maps send cycle classes to cycle classes and consecutive maps
// compose to zero; both are checked.
template <class F>
struct DerivedComplex {
    int offset = 0;
    std::vector<int> dims;               // dims[l] = dim MH_{l+offset, l}
    std::vector<DenseMat<F>> maps;       // maps[l]: group l -> group l-1 (maps[0] empty)
};

template <class F>
DerivedComplex<F> build_derived_complex(const Graph& g, int offset, int l_max, const F& field);

// Matrix of the map MH_{k,l} -> MH_{k-1,l-1} induced by delta'.
template <class F>
DenseMat<F> induced_delta_prime_on_mh(const Graph& g, int k, int l, const F& field);

// Dimension of the homology of MH_{k+1,k+1} -> MH_{k,k} -> MH_{k-1,k-1}.
// With `reduced`, degree 0 is taken against the augmentation of MH_{0,0}.
template <class F>
long long path_homology_via_mh(const Graph& g, int k, const F& field, bool reduced = true);

// ---- direct construction (the independent oracle) --------------------------

// Path homology of the double orientation of g: allowed paths follow arcs,
// Omega is the subspace whose boundary stays allowed.
template <class F>
long long path_homology_direct(const Graph& g, int k, const F& field, bool reduced = true,
                               int k_cap = 8);

// Integer version: free rank and torsion of H_k(Omega; Z).
HomologySummary path_homology_direct_z(const Graph& g, int k, bool reduced = true,
                                       int k_cap = 8);

// ---- comparison harness -----------------------------------------------------

struct PhComparisonRow {
    int k = 0;
    long long via_mh = 0;
    long long direct = 0;
    bool agree = false;
};

struct PhComparison {
    int degree_shift = 0;          // calibrated once on K2
    bool shift_found = true;       // false => reported as a finding
    std::vector<PhComparisonRow> rows;
    bool all_agree() const {
        if (!shift_found) return false;
        for (auto& r : rows)
            if (!r.agree) return false;
        return true;
    }
};

template <class F>
PhComparison compare_path_homology(const Graph& g, int k_max, const F& field);

}  // namespace magnikit
