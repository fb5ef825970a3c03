#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <vector>

#include "graph.hpp"
#include "homology.hpp"
#include "sparse_matrix.hpp"

namespace magnikit {

// Ordered free basis of MC_{k,l}: all (k+1)-tuples of vertices with
// consecutive entries distinct and total length exactly l, in
// lexicographic order.
struct MagnitudeBasis {
    int k = 0, l = 0;
    std::vector<int32_t> flat;  // count * (k+1) entries

    int count() const { return k + 1 == 0 ? 0 : static_cast<int>(flat.size()) / (k + 1); }
    std::span<const int32_t> tuple(int i) const {
        return std::span<const int32_t>(flat).subspan(static_cast<size_t>(i) * (k + 1), k + 1);
    }
    // index of a tuple, -1 if absent
    int index_of(std::span<const int32_t> t) const;
};

MagnitudeBasis mc_basis(const Graph& g, int k, int l);

// delta: MC_{k,l} -> MC_{k-1,l}, interior faces that preserve total length
SparseIntMatrix boundary_delta(const Graph& g, int k, int l);
// delta': MC_{k,l} -> MC_{k-1,l-1}, all faces that drop total length by
// exactly one (endpoint faces included; an endpoint face drops the length
// by one exactly when the outermost step has length one)
SparseIntMatrix boundary_delta_prime(const Graph& g, int k, int l);

HomologySummary magnitude_homology(const Graph& g, int k, int l, const Coeff& coeff);
HomologySummary magnitude_cohomology(const Graph& g, int k, int l, const Coeff& coeff);

// Caches bases, boundary matrices and field ranks for one graph.
class MagnitudeWorkspace {
public:
    explicit MagnitudeWorkspace(const Graph& g) : g_(g) {}

    const Graph& graph() const { return g_; }
    const MagnitudeBasis& basis(int k, int l);
    const SparseIntMatrix& delta(int k, int l);
    SparseIntMatrix delta_prime(int k, int l);

    long long rank_delta(int k, int l, const Coeff& coeff);  // field coefficients
    HomologySummary homology(int k, int l, const Coeff& coeff);
    HomologySummary cohomology(int k, int l, const Coeff& coeff);
    long long free_rank(int k, int l, const Coeff& field);  // rank shortcut over a field

private:
    Graph g_;
    std::map<std::pair<int, int>, MagnitudeBasis> bases_;
    std::map<std::pair<int, int>, SparseIntMatrix> deltas_;
    std::map<std::tuple<int, int, CoeffTag, long long>, long long> ranks_;
};

// Coefficients c_0..c_L of the magnitude power series, by truncated
// inversion of the similarity matrix q^{d(i,j)}. Integer-valued; stored as
// exact rationals.
struct SeriesCoefficients {
    std::vector<mpq_class> coeffs;
};
SeriesCoefficients magnitude_series(const Graph& g, int max_degree);

struct EulerReport {
    int l = 0;
    mpz_class homology_side;  // sum of (-1)^k rank MH_{k,l}(G; Q)
    mpq_class series_side;    // c_l
    bool equal = false;
};
EulerReport euler_check(const Graph& g, int l);
EulerReport euler_check(MagnitudeWorkspace& ws, const SeriesCoefficients& series, int l);

}  // namespace magnikit
