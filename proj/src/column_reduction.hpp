#pragma once

#include <gmpxx.h>

#include <numeric>
#include <unordered_map>
#include <vector>

#include "checked_int.hpp"
#include "fields.hpp"
#include "sparse_matrix.hpp"

namespace magnikit {

template <class E>
using SparseVec = std::vector<std::pair<int32_t, E>>;  // sorted by row, no zeros

// y += c * x, sorted merge
template <class F>
SparseVec<typename F::Elem> axpy(const F& f, const SparseVec<typename F::Elem>& y,
                                 const typename F::Elem& c,
                                 const SparseVec<typename F::Elem>& x) {
    SparseVec<typename F::Elem> out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            auto v = f.mul(c, x[j].second);
            if (!f.is_zero(v)) out.push_back({x[j].first, v});
            ++j;
        } else {
            auto v = f.add(y[i].second, f.mul(c, x[j].second));
            if (!f.is_zero(v)) out.push_back({y[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

// Echelon set of columns over a field, keyed by largest-row pivot.
// Pivot columns are normalized so the pivot coefficient is 1.
template <class F>
class FieldReducer {
public:
    explicit FieldReducer(const F& f) : f_(f) {}

    // Reduces v against the stored pivots until its largest row is not a
    // pivot row (or v is empty).
    SparseVec<typename F::Elem> reduce(SparseVec<typename F::Elem> v) const {
        while (!v.empty()) {
            auto it = pivot_of_row_.find(v.back().first);
            if (it == pivot_of_row_.end()) break;
            v = axpy(f_, v, f_.neg(v.back().second), pivots_[it->second]);
        }
        return v;
    }

    // Fully reduces v (all rows, not just the trailing one).
    SparseVec<typename F::Elem> reduce_full(SparseVec<typename F::Elem> v) const {
        SparseVec<typename F::Elem> done;
        while (!v.empty()) {
            auto it = pivot_of_row_.find(v.back().first);
            if (it == pivot_of_row_.end()) {
                done.push_back(v.back());
                v.pop_back();
            } else {
                v = axpy(f_, v, f_.neg(v.back().second), pivots_[it->second]);
            }
        }
        std::reverse(done.begin(), done.end());
        return done;
    }

    // Returns true if the column increased the rank.
    bool add_column(SparseVec<typename F::Elem> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        auto piv = v.back();
        if (piv.second != f_.one()) v = axpy(f_, {}, f_.div(f_.one(), piv.second), v);
        pivot_of_row_[piv.first] = static_cast<int>(pivots_.size());
        pivots_.push_back(std::move(v));
        return true;
    }

    bool has_pivot(int32_t row) const { return pivot_of_row_.count(row) > 0; }
    const SparseVec<typename F::Elem>& pivot_for(int32_t row) const {
        return pivots_[pivot_of_row_.at(row)];
    }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    F f_;
    std::unordered_map<int32_t, int> pivot_of_row_;
    std::vector<SparseVec<typename F::Elem>> pivots_;
};

// Augmented variant tracking combinations of the added columns; columns
// that reduce to zero yield kernel vectors.
template <class F>
class FieldKernelReducer {
public:
    explicit FieldKernelReducer(const F& f) : f_(f) {}

    void add_column(SparseVec<typename F::Elem> v, int idx) {
        SparseVec<typename F::Elem> comb{{idx, f_.one()}};
        while (!v.empty()) {
            auto it = pivot_of_row_.find(v.back().first);
            if (it == pivot_of_row_.end()) break;
            auto c = f_.neg(v.back().second);
            v = axpy(f_, v, c, pivots_[it->second].first);
            comb = axpy(f_, comb, c, pivots_[it->second].second);
        }
        if (v.empty()) {
            kernel_.push_back(std::move(comb));
            return;
        }
        auto piv = v.back().second;
        if (!(piv == f_.one())) {
            auto inv = f_.div(f_.one(), piv);
            for (auto& [r, x] : v) x = f_.mul(inv, x);
            for (auto& [r, x] : comb) x = f_.mul(inv, x);
        }
        pivot_of_row_[v.back().first] = static_cast<int>(pivots_.size());
        pivots_.push_back({std::move(v), std::move(comb)});
    }

    const std::vector<SparseVec<typename F::Elem>>& kernel() const { return kernel_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    F f_;
    std::unordered_map<int32_t, int> pivot_of_row_;
    std::vector<std::pair<SparseVec<typename F::Elem>, SparseVec<typename F::Elem>>> pivots_;
    std::vector<SparseVec<typename F::Elem>> kernel_;
};

template <class F>
SparseVec<typename F::Elem> col_to_field(const F& f,
                                         const std::vector<SparseIntMatrix::Entry>& col) {
    SparseVec<typename F::Elem> v;
    for (auto& [r, x] : col) {
        auto e = f.from_int(x);
        if (!f.is_zero(e)) v.push_back({r, e});
    }
    return v;
}

// Kernel of an integer matrix over the field F, vectors in column-index
// coordinates.
template <class F>
std::vector<SparseVec<typename F::Elem>> field_kernel(const F& f, const SparseIntMatrix& a) {
    FieldKernelReducer<F> red(f);
    for (int j = 0; j < a.cols(); ++j) red.add_column(col_to_field(f, a.col(j)), j);
    return red.kernel();
}

// image of a sparse vector under an integer matrix, over F
template <class F>
SparseVec<typename F::Elem> apply_matrix(const F& f, const SparseIntMatrix& a,
                                         const SparseVec<typename F::Elem>& v) {
    std::map<int32_t, typename F::Elem> acc;
    for (auto& [j, c] : v)
        for (auto& [r, x] : a.col(j)) {
            auto it = acc.find(r);
            auto term = f.mul(c, f.from_int(x));
            if (it == acc.end())
                acc.emplace(r, term);
            else
                it->second = f.add(it->second, term);
        }
    SparseVec<typename F::Elem> out;
    for (auto& [r, e] : acc)
        if (!f.is_zero(e)) out.push_back({r, e});
    return out;
}

namespace detail {

inline mpz_class int_gcd(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }
inline CheckedI64 int_gcd(CheckedI64 a, CheckedI64 b) {
    long long x = std::abs(a.v), y = std::abs(b.v);
    while (y) {
        long long t = x % y;
        x = y;
        y = t;
    }
    return x;
}
inline bool int_neg(const mpz_class& a) { return sgn(a) < 0; }
inline bool int_neg(CheckedI64 a) { return a.v < 0; }

// divide vector by gcd of entries, make trailing coefficient positive
template <class T>
void primitivize(SparseVec<T>& v) {
    if (v.empty()) return;
    T g = 0;
    for (auto& [r, x] : v) {
        g = int_gcd(g, x);
        if (g == T(1)) break;
    }
    if (int_neg(v.back().second)) g = -g;
    if (g != T(1))
        for (auto& [r, x] : v) x = x / g;
}

// y*a + x*b with integer coefficients, dropping zeros
template <class T>
SparseVec<T> int_combine(const SparseVec<T>& y, T a, const SparseVec<T>& x, T b) {
    SparseVec<T> out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back({y[i].first, y[i].second * a});
            ++i;
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.push_back({x[j].first, x[j].second * b});
            ++j;
        } else {
            T v = y[i].second * a + x[j].second * b;
            if (v != T(0)) out.push_back({y[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

// Rank over Q of an integer matrix by fraction-free column reduction.
// Pivot columns are kept primitive so entries stay small.
template <class T>
class IntReducer {
public:
    // returns true if the column increased the rank
    bool add_column(SparseVec<T> v) {
        reduce_low(v);
        if (v.empty()) return false;
        primitivize(v);
        pivot_of_row_[v.back().first] = static_cast<int>(pivots_.size());
        pivots_.push_back(std::move(v));
        return true;
    }

    void reduce_low(SparseVec<T>& v) const {
        while (!v.empty()) {
            auto it = pivot_of_row_.find(v.back().first);
            if (it == pivot_of_row_.end()) break;
            const auto& p = pivots_[it->second];
            T a = p.back().second;  // > 0
            T b = v.back().second;
            T g = int_gcd(a, b);
            v = int_combine(v, a / g, p, -(b / g));
            primitivize(v);
        }
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::unordered_map<int32_t, int> pivot_of_row_;
    std::vector<SparseVec<T>> pivots_;
};

// Kernel over Q of an integer matrix; kernel vectors come out as primitive
// integer vectors. Augmented variant of IntReducer: each working column
// carries the combination of original columns producing it.
template <class T>
class IntKernelReducer {
public:
    // idx: original column index of v
    void add_column(SparseVec<T> v, int idx) {
        SparseVec<T> comb{{idx, T(1)}};
        while (!v.empty()) {
            auto it = pivot_of_row_.find(v.back().first);
            if (it == pivot_of_row_.end()) break;
            const auto& [p, pc] = pivots_[it->second];
            T a = p.back().second;
            T b = v.back().second;
            T g = int_gcd(a, b);
            T ca = a / g, cb = -(b / g);
            v = int_combine(v, ca, p, cb);
            comb = int_combine(comb, ca, pc, cb);
            normalize_pair(v, comb);
        }
        if (v.empty()) {
            kernel_.push_back(std::move(comb));
        } else {
            normalize_pair(v, comb);
            pivot_of_row_[v.back().first] = static_cast<int>(pivots_.size());
            pivots_.push_back({std::move(v), std::move(comb)});
        }
    }

    const std::vector<SparseVec<T>>& kernel() const { return kernel_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    static void normalize_pair(SparseVec<T>& v, SparseVec<T>& comb) {
        T g = 0;
        for (auto& [r, x] : v) g = int_gcd(g, x);
        for (auto& [r, x] : comb) {
            if (g == T(1)) break;
            g = int_gcd(g, x);
        }
        if (g == T(0)) return;
        bool flip = v.empty() ? int_neg(comb.back().second) : int_neg(v.back().second);
        if (flip) g = -g;
        if (g != T(1)) {
            for (auto& [r, x] : v) x = x / g;
            for (auto& [r, x] : comb) x = x / g;
        }
    }

    std::unordered_map<int32_t, int> pivot_of_row_;
    std::vector<std::pair<SparseVec<T>, SparseVec<T>>> pivots_;
    std::vector<SparseVec<T>> kernel_;
};

template <class T>
SparseVec<T> to_vec(const std::vector<SparseIntMatrix::Entry>& col) {
    SparseVec<T> v;
    v.reserve(col.size());
    for (auto& [r, x] : col) v.push_back({r, T(x)});
    return v;
}

template <class T>
long long int_rank(const SparseIntMatrix& a) {
    IntReducer<T> red;
    for (int j = 0; j < a.cols(); ++j) red.add_column(to_vec<T>(a.col(j)));
    return red.rank();
}

template <class T>
std::vector<SparseVec<mpz_class>> int_kernel(const SparseIntMatrix& a) {
    IntKernelReducer<T> red;
    for (int j = 0; j < a.cols(); ++j) red.add_column(to_vec<T>(a.col(j)), j);
    std::vector<SparseVec<mpz_class>> out;
    for (auto& k : red.kernel()) {
        SparseVec<mpz_class> v;
        v.reserve(k.size());
        for (auto& [r, x] : k) {
            if constexpr (std::is_same_v<T, mpz_class>)
                v.push_back({r, x});
            else
                v.push_back({r, mpz_class(x.v)});
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

// Exact rank over Q of an integer matrix (64-bit fast path, arbitrary
// precision retry on overflow).
inline long long rank_over_q(const SparseIntMatrix& a) {
    try {
        return detail::int_rank<CheckedI64>(a);
    } catch (const IntOverflow&) {
        return detail::int_rank<mpz_class>(a);
    }
}

inline long long rank_over_fp(const SparseIntMatrix& a, long long p) {
    PrimeField f(p);
    FieldReducer<PrimeField> red(f);
    for (int j = 0; j < a.cols(); ++j) {
        SparseVec<long long> v;
        for (auto& [r, x] : a.col(j)) {
            auto e = f.from_int(x);
            if (e) v.push_back({r, e});
        }
        red.add_column(std::move(v));
    }
    return red.rank();
}

// Rank over the given coefficient field (Q or Fp).
inline long long rank(const SparseIntMatrix& a, const Coeff& coeff) {
    switch (coeff.tag) {
        case CoeffTag::Q: return rank_over_q(a);
        case CoeffTag::Fp: return rank_over_fp(a, coeff.p);
        default: fail(Err::bad_parameter, "rank requires field coefficients");
    }
}

// Basis of the Q-kernel of an integer matrix as primitive integer vectors
// over the column index space.
inline std::vector<SparseVec<mpz_class>> kernel_over_q(const SparseIntMatrix& a) {
    try {
        return detail::int_kernel<CheckedI64>(a);
    } catch (const IntOverflow&) {
        return detail::int_kernel<mpz_class>(a);
    }
}

}  // namespace magnikit
