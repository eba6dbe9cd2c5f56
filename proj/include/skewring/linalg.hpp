#pragma once

// Dense row-major matrices over a Field.

#include <cstdint>
#include <utility>
#include <vector>

#include "skewring/error.hpp"
#include "skewring/gf.hpp"

namespace skewring {

using Vec = std::vector<FieldElem>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Vec(cols, Field::zero())) {}
    explicit Matrix(std::vector<Vec> rows, std::size_t cols = 0) : cols_(cols), rows_(std::move(rows))
    {
        if (!rows_.empty()) cols_ = rows_.front().size();
        for (const auto& r : rows_)
            if (r.size() != cols_) throw error(errc::length_mismatch, "ragged matrix");
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const Vec& row(std::size_t i) const { return rows_[i]; }
    [[nodiscard]] Vec& row(std::size_t i) { return rows_[i]; }
    [[nodiscard]] const std::vector<Vec>& data() const noexcept { return rows_; }
    [[nodiscard]] FieldElem operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    FieldElem& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

    void push_row(Vec r)
    {
        if (rows_.empty() && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw error(errc::length_mismatch, "row length differs from matrix width");
        rows_.push_back(std::move(r));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<Vec> rows_;
};

/// In-place reduced row echelon form; zero rows are dropped. Returns pivot columns.
inline std::vector<std::size_t> rref(const Field& k, Matrix& m)
{
    std::vector<Vec> rows = m.data();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t nc = m.cols();
    for (std::size_t c = 0; c < nc && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].v == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const auto inv = k.inv(rows[r][c]);
        for (auto& x : rows[r]) x = k.mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].v == 0) continue;
            const auto f = rows[i][c];
            for (std::size_t j = c; j < nc; ++j) rows[i][j] = k.sub(rows[i][j], k.mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    m = Matrix(std::move(rows), nc);
    return pivots;
}

inline std::size_t rank(const Field& k, Matrix m) { return rref(k, m).size(); }

/// Basis of {x : m x^T = 0}, one vector per free column.
inline std::vector<Vec> nullspace(const Field& k, Matrix m)
{
    const auto pivots = rref(k, m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_piv(nc, false);
    for (auto p : pivots) is_piv[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_piv[f]) continue;
        Vec v(nc, Field::zero());
        v[f] = Field::one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(m(i, f));
        out.push_back(std::move(v));
    }
    return out;
}

/// Reduces v against an RREF matrix with the given pivots; returns the remainder.
inline Vec reduce(const Field& k, const Matrix& rref_m, const std::vector<std::size_t>& pivots, Vec v)
{
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const auto f = v[pivots[i]];
        if (f.v == 0) continue;
        const auto& r = rref_m.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = k.sub(v[j], k.mul(f, r[j]));
    }
    return v;
}

inline bool is_zero(const Vec& v)
{
    for (auto x : v)
        if (x.v) return false;
    return true;
}

inline FieldElem dot(const Field& k, const Vec& a, const Vec& b)
{
    FieldElem s = Field::zero();
    for (std::size_t i = 0; i < a.size(); ++i) s = k.add(s, k.mul(a[i], b[i]));
    return s;
}

}  // namespace skewring
