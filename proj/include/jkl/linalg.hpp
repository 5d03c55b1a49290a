// Sparse exact linear algebra over the rationals: the one elimination engine
// used for ranks, kernels, quotient normal forms and span membership.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "jkl/rational.hpp"

namespace jkl {

// Sorted-by-index sparse vector with nonzero entries only.
using SparseVec = std::vector<std::pair<int32_t, Rational>>;

inline void sv_normalize(SparseVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    out.reserve(v.size());
    for (auto& [i, c] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += c;
        else
            out.emplace_back(i, c);
    }
    std::erase_if(out, [](const auto& e) { return is_zero(e.second); });
    v = std::move(out);
}

// dst += c * src   (both sorted; result sorted, zero-free)
inline void sv_axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
    if (is_zero(c) || src.empty()) return;
    SparseVec out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, c * src[j].second);
            ++j;
        } else {
            Rational s = dst[i].second + c * src[j].second;
            if (!is_zero(s)) out.emplace_back(dst[i].first, std::move(s));
            ++i, ++j;
        }
    }
    dst = std::move(out);
}

inline void sv_scale(SparseVec& v, const Rational& c) {
    if (is_zero(c)) {
        v.clear();
        return;
    }
    for (auto& [i, x] : v) x *= c;
}

inline SparseVec sv_sub(const SparseVec& a, const SparseVec& b) {
    SparseVec out = a;
    sv_axpy(out, Rational(-1), b);
    return out;
}

inline Rational sv_get(const SparseVec& v, int32_t idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, int32_t k) {
        return e.first < k;
    });
    return (it != v.end() && it->first == idx) ? it->second : Rational(0);
}

// Reduced row echelon form over Q, leftmost (smallest index) pivots, pivot
// coefficient 1, rows mutually reduced. Deterministic for a given insertion
// order. Optionally tracks a companion ("augmented") vector per row, which is
// how kernels and membership certificates fall out of the same engine.
class RowReducer {
public:
    struct Row {
        int32_t pivot;
        SparseVec vec;  // vec[pivot] == 1
        SparseVec tag;  // companion, same row operations applied
    };

    // Reduces v (and its companion) against the stored rows, in place.
    void reduce(SparseVec& v, SparseVec* tag = nullptr) const {
        size_t k = 0;
        while (k < v.size()) {
            auto it = by_pivot_.find(v[k].first);
            if (it == by_pivot_.end()) {
                ++k;
                continue;
            }
            Rational c = -v[k].second;
            const Row& r = rows_[it->second];
            sv_axpy(v, c, r.vec);
            if (tag) sv_axpy(*tag, c, r.tag);
        }
    }

    // Inserts v into the row space; returns true when v was independent.
    bool insert(SparseVec v, SparseVec tag = {}) {
        reduce(v, &tag);
        if (v.empty()) return false;
        Rational inv = 1 / v.front().second;
        sv_scale(v, inv);
        sv_scale(tag, inv);
        int32_t p = v.front().first;
        // back-substitute into existing rows so the basis stays fully reduced
        for (auto& r : rows_) {
            Rational c = sv_get(r.vec, p);
            if (!is_zero(c)) {
                sv_axpy(r.vec, -c, v);
                sv_axpy(r.tag, -c, tag);
            }
        }
        by_pivot_[p] = rows_.size();
        rows_.push_back(Row{p, std::move(v), std::move(tag)});
        return true;
    }

    bool contains(SparseVec v) const {
        reduce(v);
        return v.empty();
    }

    size_t rank() const { return rows_.size(); }

    // Rows sorted by pivot (canonical RREF basis of the row space).
    std::vector<Row> sorted_rows() const {
        std::vector<Row> out = rows_;
        std::sort(out.begin(), out.end(),
                  [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
        return out;
    }

    const std::vector<Row>& rows() const { return rows_; }

private:
    std::vector<Row> rows_;
    std::map<int32_t, size_t> by_pivot_;
};

inline size_t rank_of(const std::vector<SparseVec>& vecs) {
    RowReducer rr;
    for (const auto& v : vecs) rr.insert(v);
    return rr.rank();
}

// Null space of the matrix whose j-th column is cols[j]. Each returned vector
// x (indices 0..ncols-1) satisfies sum_j x_j * cols[j] = 0. The basis is
// itself in RREF, so the result is canonical.
inline std::vector<SparseVec> kernel_of_columns(const std::vector<SparseVec>& cols) {
    RowReducer rr;
    std::vector<SparseVec> kernel;
    for (int32_t j = 0; j < static_cast<int32_t>(cols.size()); ++j) {
        SparseVec v = cols[j];
        SparseVec tag{{j, Rational(1)}};
        rr.reduce(v, &tag);
        if (v.empty())
            kernel.push_back(std::move(tag));
        else
            rr.insert(std::move(v), std::move(tag));
    }
    RowReducer canon;
    for (auto& k : kernel) canon.insert(std::move(k));
    std::vector<SparseVec> out;
    for (auto& r : canon.sorted_rows()) out.push_back(std::move(r.vec));
    return out;
}

// Dense exact inverse of a small matrix (used for the dual of a GL action).
inline std::vector<std::vector<Rational>> invert_matrix(
    std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw error("matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = 1 / a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= d;
            inv[col][j] *= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            Rational c = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= c * a[col][j];
                inv[r][j] -= c * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace jkl
