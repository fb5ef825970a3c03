#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "sparse_matrix.hpp"

namespace magnikit {

// Dense integer matrix used for SNF transforms and small exact solves.
using DenseZ = std::vector<std::vector<mpz_class>>;

struct SmithForm {
    // full diagonal d_1 | d_2 | ... | d_r, positive, including 1s
    std::vector<mpz_class> invariant_factors;
    long long rank = 0;

    // optional unimodular transforms with u * a * v = diag(invariant_factors)
    bool has_transforms = false;
    DenseZ u, v;

    std::vector<mpz_class> torsion_factors() const {
        std::vector<mpz_class> t;
        for (auto& d : invariant_factors)
            if (d > 1) t.push_back(d);
        return t;
    }
};

// Exact Smith normal form over Z. Deterministic: pivot choice prefers
// magnitude-1 entries with minimal Markowitz cost, ties broken by lowest
// (row, column). 64-bit arithmetic with automatic promotion to arbitrary
// precision when entries overflow.
SmithForm smith_normal_form(const SparseIntMatrix& a);

// Textbook dense variant that also returns unimodular u, v.
SmithForm smith_with_transforms(const SparseIntMatrix& a);

// Basis of the integer (saturated) kernel of a, as columns of a dense
// matrix; empty columns list when the kernel is trivial.
DenseZ integer_kernel_basis(const SparseIntMatrix& a);

// Solves k * y = x over Q for a full-column-rank integer matrix k, one
// column of y per column of x. Fails if any column of x lies outside the
// column span. Results are exact rationals given as numerator matrix plus
// per-column denominators.
struct SpanSolution {
    DenseZ numerators;                    // k.cols x x.cols
    std::vector<mpz_class> denominators;  // per column of x
};
SpanSolution solve_in_span(const DenseZ& k, const DenseZ& x);

std::string dense_to_string(const DenseZ& m);

}  // namespace magnikit
