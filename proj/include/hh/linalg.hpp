#pragma once

// Dense exact linear algebra. Elimination is fraction-free: a row is updated
// as p*row - a*pivot_row and then scaled to a primitive vector, so over Q the
// entries stay small integers until the final pivot normalisation.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hh/field.hpp"

namespace hh {

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, FieldTraits<K>::from_int(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<K> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const K> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<K> column(std::size_t c) const {
        std::vector<K> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    bool is_zero() const {
        for (const auto& a : data_)
            if (!FieldTraits<K>::is_zero(a)) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<K>>& columns) {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (FieldTraits<K>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!FieldTraits<K>::is_zero(b(k, j))) out(i, j) += aik * b(k, j);
            }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

template <class K>
struct RowEchelon {
    Matrix<K> reduced;                // reduced row echelon form, pivots equal to 1
    std::vector<std::size_t> pivots;  // pivot column of row r, for r < rank
    std::size_t rank() const noexcept { return pivots.size(); }
};

template <class K>
RowEchelon<K> row_reduce(Matrix<K> m) {
    using T = FieldTraits<K>;
    RowEchelon<K> out;
    std::size_t r = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && T::is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        T::make_primitive(m.row(r));

        support.clear();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!T::is_zero(m(r, j))) support.push_back(j);

        const K pivot = m(r, c);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || T::is_zero(m(i, c))) continue;
            const K factor = m(i, c);
            auto row = m.row(i);
            if (!(pivot == T::from_int(1))) {
                for (auto& a : row)
                    if (!T::is_zero(a)) a *= pivot;
            }
            for (std::size_t j : support) row[j] -= factor * m(r, j);
            T::make_primitive(row);
        }
        out.pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = 0; i < out.pivots.size(); ++i) {
        const K inv = T::from_int(1) / m(i, out.pivots[i]);
        for (auto& a : m.row(i))
            if (!T::is_zero(a)) a *= inv;
    }
    out.reduced = std::move(m);
    return out;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    return row_reduce(m).rank();
}

/// Basis of {v : m v = 0}, one vector per free column, in column order.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
    using T = FieldTraits<K>;
    const auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(m.cols(), T::from_int(0));
        v[f] = T::from_int(1);
        for (std::size_t i = 0; i < ech.rank(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
        T::make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with m x = b (free variables set to zero), or nullopt.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, std::span<const K> b) {
    using T = FieldTraits<K>;
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Matrix<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto ech = row_reduce(std::move(aug));
    std::vector<K> x(m.cols(), T::from_int(0));
    for (std::size_t i = 0; i < ech.rank(); ++i) {
        const std::size_t p = ech.pivots[i];
        if (p == m.cols()) return std::nullopt;
        x[p] = ech.reduced(i, m.cols());
    }
    return x;
}

/// For m of full column rank: `inverse` with inverse * m = I, and `annihilator`
/// whose rows span the left null space, so b is in the column space of m iff
/// annihilator * b = 0, and then x = inverse * b.
template <class K>
struct LeftInverse {
    Matrix<K> inverse;
    Matrix<K> annihilator;
};

template <class K>
LeftInverse<K> left_inverse(const Matrix<K>& m) {
    const std::size_t n = m.rows(), k = m.cols();
    Matrix<K> aug(n, k + n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < k; ++c) aug(r, c) = m(r, c);
        aug(r, k + r) = FieldTraits<K>::from_int(1);
    }
    const auto ech = row_reduce(std::move(aug));
    if (ech.rank() < k || (k > 0 && ech.pivots[k - 1] != k - 1))
        throw std::invalid_argument("left_inverse needs full column rank");
    LeftInverse<K> out{Matrix<K>(k, n), Matrix<K>(n - k, n)};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r < k) out.inverse(r, c) = ech.reduced(r, k + c);
            else out.annihilator(r - k, c) = ech.reduced(r, k + c);
        }
    return out;
}

template <class K>
std::vector<K> apply(const Matrix<K>& m, std::span<const K> v) {
    using T = FieldTraits<K>;
    std::vector<K> out(m.rows(), T::from_int(0));
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (T::is_zero(v[c])) continue;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!T::is_zero(m(r, c))) out[r] += m(r, c) * v[c];
    }
    return out;
}

template <class K>
bool is_zero_vector(std::span<const K> v) {
    for (const auto& a : v)
        if (!FieldTraits<K>::is_zero(a)) return false;
    return true;
}

}  // namespace hh
