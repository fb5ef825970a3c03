#include "homology.hpp"

#include "column_reduction.hpp"
#include "errors.hpp"
#include "smith.hpp"

namespace magnikit {

HomologySummary homology_of_pair(const SparseIntMatrix& d_in, const SparseIntMatrix& d_out,
                                 const Coeff& coeff) {
    if (d_out.cols() != d_in.rows())
        fail(Err::bad_parameter, "homology_of_pair: dimensions do not compose");
    if (!d_out.multiply(d_in).is_zero())
        fail(Err::not_a_complex, "homology_of_pair: d_out * d_in != 0");

    long long dim_k = d_out.cols();
    HomologySummary out;
    out.coeff = coeff;
    switch (coeff.tag) {
        case CoeffTag::Q:
            out.free_rank = dim_k - rank_over_q(d_out) - rank_over_q(d_in);
            break;
        case CoeffTag::Fp:
            out.free_rank = dim_k - rank_over_fp(d_out, coeff.p) - rank_over_fp(d_in, coeff.p);
            break;
        case CoeffTag::Z: {
            SmithForm s = smith_normal_form(d_in);
            out.free_rank = dim_k - rank_over_q(d_out) - s.rank;
            out.torsion = s.torsion_factors();
            break;
        }
    }
    return out;
}

}  // namespace magnikit
