#include "smith.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "checked_int.hpp"
#include "errors.hpp"

namespace magnikit {

namespace {

template <class T>
T t_abs(const T& x) {
    return x < T(0) ? -x : x;
}

mpz_class to_mpz(const mpz_class& x) { return x; }
mpz_class to_mpz(CheckedI64 x) { return mpz_class(static_cast<long>(x.v)); }

// Sparse row-major elimination workspace.
template <class T>
class SnfCore {
public:
    explicit SnfCore(const SparseIntMatrix& a)
        : rows_(a.rows()), cols_(a.cols()), row_(a.rows()), colrows_(a.cols()),
          row_active_(a.rows(), true), col_active_(a.cols(), true) {
        for (int j = 0; j < a.cols(); ++j)
            for (auto& [r, v] : a.col(j)) {
                row_[r][j] = T(v);
                colrows_[j].insert(r);
            }
    }

    std::vector<mpz_class> run() {
        std::vector<mpz_class> diag;
        while (true) {
            auto [pr, pc] = find_pivot();
            if (pr < 0) break;
            isolate(pr, pc);
            T p = row_[pr].at(pc);
            diag.push_back(to_mpz(t_abs(p)));
            retire(pr, pc);
        }
        return diag;
    }

private:
    // Best entry by (non-unit?, markowitz cost, row, col).
    std::pair<int, int> find_pivot() const {
        long long best_cost = -1;
        bool best_unit = false;
        mpz_class best_abs;
        int br = -1, bc = -1;
        for (int r = 0; r < rows_; ++r) {
            if (!row_active_[r] || row_[r].empty()) continue;
            for (auto& [c, v] : row_[r]) {
                bool unit = (t_abs(v) == T(1));
                long long cost = (static_cast<long long>(row_[r].size()) - 1) *
                                 (static_cast<long long>(colrows_[c].size()) - 1);
                bool better;
                if (br < 0) {
                    better = true;
                } else if (unit != best_unit) {
                    better = unit;
                } else if (unit) {
                    better = cost < best_cost ||
                             (cost == best_cost && (r < br || (r == br && c < bc)));
                } else {
                    mpz_class av = to_mpz(t_abs(v));
                    better = av < best_abs ||
                             (av == best_abs && (r < br || (r == br && c < bc)));
                }
                if (better) {
                    br = r;
                    bc = c;
                    best_unit = unit;
                    best_cost = cost;
                    best_abs = to_mpz(t_abs(v));
                }
            }
        }
        return {br, bc};
    }

    void row_axpy(int dst, int src, const T& q) {  // row_dst -= q * row_src
        for (auto& [c, v] : row_[src]) {
            auto it = row_[dst].find(c);
            if (it == row_[dst].end()) {
                T nv = T(0) - q * v;
                if (nv != T(0)) {
                    row_[dst][c] = nv;
                    colrows_[c].insert(dst);
                }
            } else {
                it->second -= q * v;
                if (it->second == T(0)) {
                    row_[dst].erase(it);
                    colrows_[c].erase(dst);
                }
            }
        }
    }

    void col_axpy(int dst, int src, const T& q) {  // col_dst -= q * col_src
        std::vector<int> rs(colrows_[src].begin(), colrows_[src].end());
        for (int r : rs) {
            T v = row_[r].at(src);  // copy: the insert below may rehash
            auto it = row_[r].find(dst);
            if (it == row_[r].end()) {
                T nv = T(0) - q * v;
                if (nv != T(0)) {
                    row_[r][dst] = nv;
                    colrows_[dst].insert(r);
                }
            } else {
                it->second -= q * v;
                if (it->second == T(0)) {
                    row_[r].erase(it);
                    colrows_[dst].erase(r);
                }
            }
        }
    }

    // Clear the pivot column; the pivot may migrate to a row with a smaller
    // remainder. Returns the current pivot row.
    int clear_col(int pr, int pc) {
        while (true) {
            T p = row_[pr].at(pc);
            std::vector<int> others;
            for (int r : colrows_[pc])
                if (r != pr) others.push_back(r);
            if (others.empty()) return pr;
            std::sort(others.begin(), others.end());
            for (int r : others) {
                T q = row_[r].at(pc) / p;
                if (q != T(0)) row_axpy(r, pr, q);
            }
            if (colrows_[pc].size() == 1) return pr;
            // remainders are smaller than |p|; move pivot to the least one
            int nr = -1;
            mpz_class na;
            for (int r : colrows_[pc]) {
                mpz_class a = to_mpz(t_abs(row_[r].at(pc)));
                if (nr < 0 || a < na || (a == na && r < nr)) {
                    nr = r;
                    na = a;
                }
            }
            pr = nr;
        }
    }

    int clear_row(int pr, int pc) {
        while (true) {
            T p = row_[pr].at(pc);
            std::vector<int> others;
            for (auto& [c, v] : row_[pr])
                if (c != pc) others.push_back(c);
            if (others.empty()) return pc;
            std::sort(others.begin(), others.end());
            for (int c : others) {
                T q = row_[pr].at(c) / p;
                if (q != T(0)) col_axpy(c, pc, q);
            }
            if (row_[pr].size() == 1) return pc;
            int nc = -1;
            mpz_class na;
            for (auto& [c, v] : row_[pr]) {
                mpz_class a = to_mpz(t_abs(v));
                if (nc < 0 || a < na || (a == na && c < nc)) {
                    nc = c;
                    na = a;
                }
            }
            pc = nc;
        }
    }

    void isolate(int& pr, int& pc) {
        while (true) {
            pr = clear_col(pr, pc);
            if (row_[pr].size() == 1) {
                if (colrows_[pc].size() == 1) return;
                continue;
            }
            pc = clear_row(pr, pc);
            if (colrows_[pc].size() == 1 && row_[pr].size() == 1) return;
        }
    }

    void retire(int pr, int pc) {
        row_[pr].clear();
        colrows_[pc].clear();
        row_active_[pr] = false;
        col_active_[pc] = false;
    }

    int rows_, cols_;
    std::vector<std::unordered_map<int, T>> row_;
    std::vector<std::unordered_set<int>> colrows_;
    std::vector<char> row_active_, col_active_;
};

// Pairwise gcd/lcm closure turning any equivalent diagonal into the
// divisibility chain.
std::vector<mpz_class> chain_normalize(std::vector<mpz_class> d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                mpz_class g = gcd(d[i], d[j]);
                mpz_class l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
                changed = true;
            }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

SmithForm smith_normal_form(const SparseIntMatrix& a) {
    std::vector<mpz_class> diag;
    try {
        SnfCore<CheckedI64> core(a);
        diag = core.run();
    } catch (const IntOverflow&) {
        SnfCore<mpz_class> core(a);
        diag = core.run();
    }
    SmithForm out;
    out.invariant_factors = chain_normalize(std::move(diag));
    out.rank = static_cast<long long>(out.invariant_factors.size());
    return out;
}

namespace {

struct DenseSnf {
    DenseZ a, u, v;
    int rows, cols;

    explicit DenseSnf(const SparseIntMatrix& m) : rows(m.rows()), cols(m.cols()) {
        a.assign(rows, std::vector<mpz_class>(cols, 0));
        for (int j = 0; j < cols; ++j)
            for (auto& [r, val] : m.col(j)) a[r][j] = val;
        u.assign(rows, std::vector<mpz_class>(rows, 0));
        v.assign(cols, std::vector<mpz_class>(cols, 0));
        for (int i = 0; i < rows; ++i) u[i][i] = 1;
        for (int j = 0; j < cols; ++j) v[j][j] = 1;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    void row_axpy(int dst, int src, const mpz_class& q) {
        for (int j = 0; j < cols; ++j) a[dst][j] -= q * a[src][j];
        for (int j = 0; j < rows; ++j) u[dst][j] -= q * u[src][j];
    }
    void col_axpy(int dst, int src, const mpz_class& q) {
        for (int i = 0; i < rows; ++i) a[i][dst] -= q * a[i][src];
        for (int i = 0; i < cols; ++i) v[i][dst] -= q * v[i][src];
    }
    void negate_row(int i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    }

    int run() {
        int t = 0;
        int nmin = std::min(rows, cols);
        while (t < nmin) {
            // least nonzero |entry| in the trailing submatrix
            int pr = -1, pc = -1;
            mpz_class best;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    mpz_class ab = abs(a[i][j]);
                    if (pr < 0 || ab < best) {
                        pr = i;
                        pc = j;
                        best = ab;
                    }
                }
            if (pr < 0) break;
            swap_rows(t, pr);
            swap_cols(t, pc);
            bool clean = false;
            while (!clean) {
                clean = true;
                for (int i = t + 1; i < rows; ++i) {
                    if (a[i][t] == 0) continue;
                    mpz_class q = a[i][t] / a[t][t];
                    if (q != 0) row_axpy(i, t, q);
                    if (a[i][t] != 0) {
                        swap_rows(t, i);  // smaller remainder becomes pivot
                        clean = false;
                    }
                }
                for (int j = t + 1; j < cols; ++j) {
                    if (a[t][j] == 0) continue;
                    mpz_class q = a[t][j] / a[t][t];
                    if (q != 0) col_axpy(j, t, q);
                    if (a[t][j] != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
                if (clean) {
                    // pivot must divide the rest of the submatrix
                    for (int i = t + 1; i < rows && clean; ++i)
                        for (int j = t + 1; j < cols && clean; ++j)
                            if (a[i][j] % a[t][t] != 0) {
                                row_axpy(t, i, mpz_class(-1));
                                clean = false;
                            }
                }
            }
            if (a[t][t] < 0) negate_row(t);
            ++t;
        }
        return t;
    }
};

}  // namespace

SmithForm smith_with_transforms(const SparseIntMatrix& m) {
    DenseSnf d(m);
    int r = d.run();
    SmithForm out;
    for (int i = 0; i < r; ++i) out.invariant_factors.push_back(d.a[i][i]);
    out.rank = r;
    out.has_transforms = true;
    out.u = std::move(d.u);
    out.v = std::move(d.v);
    return out;
}

DenseZ integer_kernel_basis(const SparseIntMatrix& a) {
    SmithForm s = smith_with_transforms(a);
    int c = a.cols();
    int r = static_cast<int>(s.rank);
    DenseZ kernel(c, std::vector<mpz_class>(c - r, 0));
    for (int i = 0; i < c; ++i)
        for (int j = r; j < c; ++j) kernel[i][j - r] = s.v[i][j];
    return kernel;
}

SpanSolution solve_in_span(const DenseZ& k, const DenseZ& x) {
    size_t rows = k.size();
    if (rows == 0) fail(Err::bad_parameter, "empty span matrix");
    size_t u = k[0].size();
    size_t nx = x.empty() ? 0 : x[0].size();
    if (x.size() != rows) fail(Err::bad_parameter, "dimension mismatch in solve_in_span");

    // fraction-free Gaussian elimination on [k | x]
    std::vector<std::vector<mpq_class>> w(rows, std::vector<mpq_class>(u + nx));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < u; ++j) w[i][j] = mpq_class(k[i][j]);
        for (size_t j = 0; j < nx; ++j) w[i][u + j] = mpq_class(x[i][j]);
    }
    std::vector<int> pivot_row(u, -1);
    size_t lead = 0;
    for (size_t col = 0; col < u && lead < rows; ++col) {
        size_t sel = lead;
        while (sel < rows && sgn(w[sel][col]) == 0) ++sel;
        if (sel == rows) continue;
        std::swap(w[sel], w[lead]);
        mpq_class inv = 1 / w[lead][col];
        for (auto& e : w[lead]) e *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == lead || sgn(w[i][col]) == 0) continue;
            mpq_class c = w[i][col];
            for (size_t j = col; j < u + nx; ++j) w[i][j] -= c * w[lead][j];
        }
        pivot_row[col] = static_cast<int>(lead);
        ++lead;
    }
    // rows beyond the pivots must have zero right-hand side
    for (size_t i = lead; i < rows; ++i)
        for (size_t j = 0; j < nx; ++j)
            if (sgn(w[i][u + j]) != 0)
                fail(Err::bad_parameter, "vector outside column span");
    for (size_t col = 0; col < u; ++col)
        if (pivot_row[col] < 0) fail(Err::bad_parameter, "span matrix not full column rank");

    SpanSolution sol;
    sol.numerators.assign(u, std::vector<mpz_class>(nx, 0));
    sol.denominators.assign(nx, 1);
    for (size_t j = 0; j < nx; ++j) {
        mpz_class den = 1;
        for (size_t col = 0; col < u; ++col)
            den = lcm(den, w[pivot_row[col]][u + j].get_den());
        sol.denominators[j] = den;
        for (size_t col = 0; col < u; ++col) {
            mpq_class val = w[pivot_row[col]][u + j] * mpq_class(den);
            sol.numerators[col][j] = val.get_num();  // denominator is 1 now
        }
    }
    return sol;
}

std::string dense_to_string(const DenseZ& m) {
    std::ostringstream os;
    for (auto& row : m) {
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

}  // namespace magnikit
