#pragma once

#include <gmpxx.h>

#include <vector>

#include "fields.hpp"
#include "sparse_matrix.hpp"

namespace magnikit {

// Free rank plus invariant factors (> 1) for one group; torsion is empty
// over a field.
struct HomologySummary {
    long long free_rank = 0;
    std::vector<mpz_class> torsion;
    Coeff coeff;

    friend bool operator==(const HomologySummary& a, const HomologySummary& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion && a.coeff == b.coeff;
    }
};

// Homology of C_{k+1} --d_in--> C_k --d_out--> C_{k-1} at the middle term.
// Requires d_out * d_in = 0 (NotAComplex otherwise).
//
// Over Z the torsion subgroup of ker(d_out)/im(d_in) equals the torsion of
// Z^{c_k}/im(d_in): the quotient of the latter by the former embeds in the
// free module im(d_out), so the extension splits. The invariant factors of
// d_in therefore carry the torsion directly.
HomologySummary homology_of_pair(const SparseIntMatrix& d_in, const SparseIntMatrix& d_out,
                                 const Coeff& coeff);

}  // namespace magnikit
