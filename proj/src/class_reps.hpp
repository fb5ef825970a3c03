#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "column_reduction.hpp"
#include "sparse_matrix.hpp"

namespace magnikit {

// Dense matrix over a field, row-major; used for induced maps between
// homology groups (these are small).
template <class F>
struct DenseMat {
    int rows = 0, cols = 0;
    std::vector<typename F::Elem> data;

    DenseMat() = default;
    DenseMat(const F& f, int r, int c) : rows(r), cols(c), data(r * c, f.zero()) {}
    typename F::Elem& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const typename F::Elem& at(int r, int c) const {
        return data[static_cast<size_t>(r) * cols + c];
    }
    DenseMat multiply(const F& f, const DenseMat& b) const {
        DenseMat out(f, rows, b.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                if (f.is_zero(at(i, k))) continue;
                for (int j = 0; j < b.cols; ++j)
                    out.at(i, j) = f.add(out.at(i, j), f.mul(at(i, k), b.at(k, j)));
            }
        return out;
    }
    DenseMat<F> transpose(const F& f) const {
        DenseMat<F> out(f, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
        return out;
    }
    bool is_zero(const F& f) const {
        for (auto& e : data)
            if (!f.is_zero(e)) return false;
        return true;
    }
    long long rank(const F& f) const {
        FieldReducer<F> red(f);
        for (int j = 0; j < cols; ++j) {
            SparseVec<typename F::Elem> v;
            for (int i = 0; i < rows; ++i)
                if (!f.is_zero(at(i, j))) v.push_back({i, at(i, j)});
            red.add_column(std::move(v));
        }
        return red.rank();
    }
    friend bool operator==(const DenseMat& a, const DenseMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
};

// Cycle-representative basis of ker(d_out)/im(d_in) over a field: an
// echelonized image basis plus echelonized representatives with pivot rows
// disjoint from the image pivots. Coordinates of a cycle in this basis are
// read off by interleaved reduction.
template <class F>
class ClassBasis {
public:
    ClassBasis(const F& f, const SparseIntMatrix& d_out, const SparseIntMatrix& d_in)
        : f_(f), image_(f) {
        for (int j = 0; j < d_in.cols(); ++j) image_.add_column(col_to_field(f_, d_in.col(j)));
        for (auto& kv : field_kernel(f_, d_out)) {
            auto v = reduce_against_all(kv);
            if (v.empty()) continue;
            auto piv = v.back();
            if (!(piv.second == f_.one())) {
                auto inv = f_.div(f_.one(), piv.second);
                for (auto& [r, x] : v) x = f_.mul(inv, x);
            }
            rep_of_row_[v.back().first] = static_cast<int>(reps_.size());
            reps_.push_back(std::move(v));
        }
    }

    int dim() const { return static_cast<int>(reps_.size()); }
    const SparseVec<typename F::Elem>& rep(int i) const { return reps_[i]; }

    // coordinates of a chain-level cycle; nullopt when v is not a cycle of
    // this bigrading (not in ker(d_out) + im span)
    std::optional<std::vector<typename F::Elem>> express(
        SparseVec<typename F::Elem> v) const {
        std::vector<typename F::Elem> coords(reps_.size(), f_.zero());
        while (!v.empty()) {
            int32_t row = v.back().first;
            if (image_.has_pivot(row)) {
                v = axpy(f_, v, f_.neg(v.back().second), image_.pivot_for(row));
            } else if (auto it = rep_of_row_.find(row); it != rep_of_row_.end()) {
                coords[it->second] = v.back().second;
                v = axpy(f_, v, f_.neg(v.back().second), reps_[it->second]);
            } else {
                return std::nullopt;
            }
        }
        return coords;
    }

private:
    SparseVec<typename F::Elem> reduce_against_all(SparseVec<typename F::Elem> v) const {
        while (!v.empty()) {
            int32_t row = v.back().first;
            if (image_.has_pivot(row)) {
                v = axpy(f_, v, f_.neg(v.back().second), image_.pivot_for(row));
            } else if (auto it = rep_of_row_.find(row); it != rep_of_row_.end()) {
                v = axpy(f_, v, f_.neg(v.back().second), reps_[it->second]);
            } else {
                break;  // fresh pivot row
            }
        }
        return v;
    }

    F f_;
    FieldReducer<F> image_;
    std::vector<SparseVec<typename F::Elem>> reps_;
    std::unordered_map<int32_t, int> rep_of_row_;
};

}  // namespace magnikit
