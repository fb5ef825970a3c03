#include "magnitude.hpp"

#include <algorithm>

#include "column_reduction.hpp"
#include "errors.hpp"

namespace magnikit {

int MagnitudeBasis::index_of(std::span<const int32_t> t) const {
    int width = k + 1;
    int lo = 0, hi = count();
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        auto cand = tuple(mid);
        int cmp = 0;
        for (int i = 0; i < width; ++i) {
            if (cand[i] != t[i]) {
                cmp = cand[i] < t[i] ? -1 : 1;
                break;
            }
        }
        if (cmp == 0) return mid;
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return -1;
}

MagnitudeBasis mc_basis(const Graph& g, int k, int l) {
    if (k < 0 || l < 0) fail(Err::bad_parameter, "negative bigrading");
    MagnitudeBasis basis;
    basis.k = k;
    basis.l = l;
    if (l < k) return basis;  // every step has length >= 1
    if (k == 0) {
        if (l == 0)
            for (int v = 0; v < g.n(); ++v) basis.flat.push_back(v);
        return basis;
    }
    int diam = g.diameter();
    std::vector<int32_t> cur(k + 1);
    // depth-first extension in vertex order yields lexicographic tuples
    auto rec = [&](auto&& self, int pos, int len) -> void {
        if (pos == k + 1) {
            if (len == l) basis.flat.insert(basis.flat.end(), cur.begin(), cur.end());
            return;
        }
        int steps_left = k - pos;  // steps after placing cur[pos]
        for (int v = 0; v < g.n(); ++v) {
            int nlen = len;
            if (pos > 0) {
                if (v == cur[pos - 1]) continue;
                nlen += g.dist(cur[pos - 1], v);
            }
            if (nlen + steps_left > l) continue;
            if (nlen + static_cast<long long>(steps_left) * diam < l) continue;
            cur[pos] = v;
            self(self, pos + 1, nlen);
        }
    };
    rec(rec, 0, 0);
    return basis;
}

namespace {

SparseIntMatrix faces_matrix(const Graph& g, const MagnitudeBasis& domain,
                             const MagnitudeBasis& codomain, bool length_preserving) {
    int k = domain.k;
    SparseIntMatrix m(codomain.count(), domain.count());
    std::vector<int32_t> face(k);
    int target = length_preserving ? domain.l : domain.l - 1;
    int lo = length_preserving ? 1 : 0;
    int hi = length_preserving ? k - 1 : k;
    for (int j = 0; j < domain.count(); ++j) {
        auto t = domain.tuple(j);
        std::vector<SparseIntMatrix::Entry> col;
        for (int i = lo; i <= hi; ++i) {
            int newlen;
            if (i == 0) {
                newlen = domain.l - g.dist(t[0], t[1]);
            } else if (i == k) {
                newlen = domain.l - g.dist(t[k - 1], t[k]);
            } else {
                newlen = domain.l - g.dist(t[i - 1], t[i]) - g.dist(t[i], t[i + 1]) +
                         g.dist(t[i - 1], t[i + 1]);
            }
            if (newlen != target) continue;
            int w = 0;
            for (int p = 0; p <= k; ++p)
                if (p != i) face[w++] = t[p];
            int row = codomain.index_of(face);
            if (row < 0) fail(Err::internal, "face missing from codomain basis");
            col.push_back({row, (i % 2 == 0) ? 1LL : -1LL});
        }
        std::sort(col.begin(), col.end());
        m.set_col(j, std::move(col));
    }
    return m;
}

}  // namespace

SparseIntMatrix boundary_delta(const Graph& g, int k, int l) {
    if (k < 1) fail(Err::bad_parameter, "boundary_delta needs k >= 1");
    return faces_matrix(g, mc_basis(g, k, l), mc_basis(g, k - 1, l), true);
}

SparseIntMatrix boundary_delta_prime(const Graph& g, int k, int l) {
    if (k < 1 || l < 1) fail(Err::bad_parameter, "boundary_delta_prime needs k, l >= 1");
    return faces_matrix(g, mc_basis(g, k, l), mc_basis(g, k - 1, l - 1), false);
}

const MagnitudeBasis& MagnitudeWorkspace::basis(int k, int l) {
    auto key = std::make_pair(k, l);
    auto it = bases_.find(key);
    if (it == bases_.end()) it = bases_.emplace(key, mc_basis(g_, k, l)).first;
    return it->second;
}

const SparseIntMatrix& MagnitudeWorkspace::delta(int k, int l) {
    auto key = std::make_pair(k, l);
    auto it = deltas_.find(key);
    if (it == deltas_.end()) {
        SparseIntMatrix m;
        if (k == 0) {
            m = SparseIntMatrix(0, basis(0, l).count());
        } else {
            m = faces_matrix(g_, basis(k, l), basis(k - 1, l), true);
        }
        it = deltas_.emplace(key, std::move(m)).first;
    }
    return it->second;
}

SparseIntMatrix MagnitudeWorkspace::delta_prime(int k, int l) {
    return faces_matrix(g_, basis(k, l), basis(k - 1, l - 1), false);
}

long long MagnitudeWorkspace::rank_delta(int k, int l, const Coeff& coeff) {
    if (!coeff.is_field()) fail(Err::bad_parameter, "rank needs field coefficients");
    auto key = std::make_tuple(k, l, coeff.tag, coeff.p);
    auto it = ranks_.find(key);
    if (it == ranks_.end()) it = ranks_.emplace(key, rank(delta(k, l), coeff)).first;
    return it->second;
}

HomologySummary MagnitudeWorkspace::homology(int k, int l, const Coeff& coeff) {
    if (coeff.is_field()) {
        HomologySummary out;
        out.coeff = coeff;
        out.free_rank = basis(k, l).count() - rank_delta(k, l, coeff) -
                        rank_delta(k + 1, l, coeff);
        return out;
    }
    return homology_of_pair(delta(k + 1, l), delta(k, l), coeff);
}

HomologySummary MagnitudeWorkspace::cohomology(int k, int l, const Coeff& coeff) {
    return homology_of_pair(delta(k, l).transpose(), delta(k + 1, l).transpose(), coeff);
}

long long MagnitudeWorkspace::free_rank(int k, int l, const Coeff& field) {
    return homology(k, l, field).free_rank;
}

HomologySummary magnitude_homology(const Graph& g, int k, int l, const Coeff& coeff) {
    MagnitudeWorkspace ws(g);
    if (coeff.is_field()) return ws.homology(k, l, coeff);
    return homology_of_pair(ws.delta(k + 1, l), ws.delta(k, l), coeff);
}

HomologySummary magnitude_cohomology(const Graph& g, int k, int l, const Coeff& coeff) {
    MagnitudeWorkspace ws(g);
    return ws.cohomology(k, l, coeff);
}

SeriesCoefficients magnitude_series(const Graph& g, int max_degree) {
    if (max_degree < 0) fail(Err::bad_parameter, "negative series degree");
    int n = g.n();
    int L = max_degree;
    // M[d] = adjacency-of-distance-d matrices, d = 1..L
    auto zero = [&] { return std::vector<mpz_class>(static_cast<size_t>(n) * n, 0); };
    std::vector<std::vector<mpz_class>> minus_m(L + 1, zero());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int d = g.dist(u, v);
            if (d >= 1 && d <= L) minus_m[d][u * n + v] = -1;
        }
    // power = (-M)^j truncated; total accumulates sum of entries per degree
    std::vector<std::vector<mpz_class>> power(L + 1, zero());
    for (int u = 0; u < n; ++u) power[0][u * n + u] = 1;
    std::vector<mpz_class> total(L + 1, 0);
    auto accumulate = [&](const std::vector<std::vector<mpz_class>>& p) {
        for (int d = 0; d <= L; ++d)
            for (auto& x : p[d]) total[d] += x;
    };
    accumulate(power);
    for (int j = 1; j <= L; ++j) {
        std::vector<std::vector<mpz_class>> next(L + 1, zero());
        for (int da = 0; da <= L; ++da)
            for (int db = 1; da + db <= L; ++db) {
                auto& a = power[da];
                auto& b = minus_m[db];
                auto& c = next[da + db];
                for (int u = 0; u < n; ++u)
                    for (int w = 0; w < n; ++w) {
                        if (a[u * n + w] == 0) continue;
                        for (int v = 0; v < n; ++v)
                            if (b[w * n + v] != 0) c[u * n + v] += a[u * n + w] * b[w * n + v];
                    }
            }
        power = std::move(next);
        accumulate(power);
    }
    SeriesCoefficients out;
    for (int d = 0; d <= L; ++d) out.coeffs.push_back(mpq_class(total[d]));
    return out;
}

EulerReport euler_check(MagnitudeWorkspace& ws, const SeriesCoefficients& series, int l) {
    EulerReport rep;
    rep.l = l;
    mpz_class sum = 0;
    for (int k = 0; k <= l; ++k) {
        long long r = ws.free_rank(k, l, Coeff::rationals());
        sum += (k % 2 == 0) ? r : -r;
    }
    rep.homology_side = sum;
    rep.series_side = series.coeffs.at(l);
    rep.equal = (mpq_class(rep.homology_side) == rep.series_side);
    return rep;
}

EulerReport euler_check(const Graph& g, int l) {
    MagnitudeWorkspace ws(g);
    SeriesCoefficients series = magnitude_series(g, l);
    return euler_check(ws, series, l);
}

}  // namespace magnikit
