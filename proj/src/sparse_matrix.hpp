#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace magnikit {

// Sparse integer matrix, column-major, rows sorted within each column.
// Entries of the boundary and chain-map matrices are always small (+-1);
// elimination kernels promote to wider arithmetic internally.
class SparseIntMatrix {
public:
    using Entry = std::pair<int32_t, long long>;  // (row, value)

    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {}

    static SparseIntMatrix identity(int n) {
        SparseIntMatrix m(n, n);
        for (int j = 0; j < n; ++j) m.data_[j].push_back({j, 1});
        return m;
    }

    static SparseIntMatrix from_triplets(int rows, int cols,
                                         const std::vector<std::tuple<int, int, long long>>& ts) {
        SparseIntMatrix m(rows, cols);
        for (auto& [r, c, v] : ts) {
            if (r < 0 || r >= rows || c < 0 || c >= cols)
                fail(Err::bad_parameter, "triplet out of range");
            if (v != 0) m.data_[c].push_back({r, v});
        }
        for (auto& col : m.data_) {
            std::sort(col.begin(), col.end());
            for (size_t i = 1; i < col.size(); ++i)
                if (col[i].first == col[i - 1].first)
                    fail(Err::bad_parameter, "duplicate triplet position");
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& col(int j) const { return data_[j]; }
    std::vector<Entry>& col_mut(int j) { return data_[j]; }

    void set_col(int j, std::vector<Entry> entries) { data_[j] = std::move(entries); }

    size_t nnz() const {
        size_t s = 0;
        for (auto& c : data_) s += c.size();
        return s;
    }

    bool is_zero() const { return nnz() == 0; }

    SparseIntMatrix transpose() const {
        SparseIntMatrix t(cols_, rows_);
        for (int j = 0; j < cols_; ++j)
            for (auto& [r, v] : data_[j]) t.data_[r].push_back({j, v});
        // columns were scanned in increasing j, so each row list is sorted
        return t;
    }

    // this * b, exact; overflow cannot occur at the entry magnitudes used here
    // but is guarded anyway.
    SparseIntMatrix multiply(const SparseIntMatrix& b) const {
        if (cols_ != b.rows_) fail(Err::bad_parameter, "dimension mismatch in multiply");
        SparseIntMatrix out(rows_, b.cols_);
        for (int j = 0; j < b.cols_; ++j) {
            std::map<int32_t, __int128> acc;
            for (auto& [i, bv] : b.data_[j])
                for (auto& [r, av] : data_[i]) acc[r] += static_cast<__int128>(av) * bv;
            auto& col = out.data_[j];
            for (auto& [r, v] : acc) {
                if (v == 0) continue;
                if (v > INT64_MAX || v < INT64_MIN)
                    fail(Err::internal, "entry overflow in sparse product");
                col.push_back({r, static_cast<long long>(v)});
            }
        }
        return out;
    }

    friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    // Debug dump: "rows cols nnz" header then one "row col value" line per
    // entry, row-major order, exact decimal integers.
    std::string dump() const {
        std::vector<std::tuple<int, int, long long>> ts;
        for (int j = 0; j < cols_; ++j)
            for (auto& [r, v] : data_[j]) ts.push_back({r, j, v});
        std::sort(ts.begin(), ts.end());
        std::ostringstream os;
        os << rows_ << ' ' << cols_ << ' ' << ts.size() << '\n';
        for (auto& [r, c, v] : ts) os << r << ' ' << c << ' ' << v << '\n';
        return os.str();
    }

    static SparseIntMatrix parse(const std::string& text) {
        std::istringstream is(text);
        long long rows, cols, nnz;
        if (!(is >> rows >> cols >> nnz)) fail(Err::parse, "bad matrix header");
        std::vector<std::tuple<int, int, long long>> ts;
        for (long long i = 0; i < nnz; ++i) {
            long long r, c, v;
            if (!(is >> r >> c >> v)) fail(Err::parse, "truncated matrix dump");
            ts.push_back({static_cast<int>(r), static_cast<int>(c), v});
        }
        return from_triplets(static_cast<int>(rows), static_cast<int>(cols), ts);
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<Entry>> data_;
};

}  // namespace magnikit
