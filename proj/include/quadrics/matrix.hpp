#pragma once

// Dense exact matrices over Q(i): row reduction, kernels, inverses.

#include "scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace quadrics {

using Vec = std::vector<Scalar>;

inline bool is_zero(std::span<const Scalar> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec unit_vector(std::size_t n, std::size_t k) {
    Vec v(n);
    v[k] = Scalar(1);
    return v;
}

inline void axpy(Vec& y, const Scalar& a, std::span<const Scalar> x) {
    if (a.is_zero()) return;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) y[k] += a * x[k];
}

inline Vec scaled(const Scalar& a, std::span<const Scalar> x) {
    Vec out(x.begin(), x.end());
    for (auto& e : out) e *= a;
    return out;
}

inline Vec operator+(Vec a, const Vec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}
inline Vec operator-(Vec a, const Vec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

inline Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    Scalar s;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
    return s;
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

    std::vector<Vec> row_list() const {
        std::vector<Vec> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Vec apply(std::span<const Scalar> v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
        Vec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& x = a(r, k);
                if (x.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    void drop_rows_from(std::size_t r) {
        rows_ = r;
        data_.resize(rows_ * cols_);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct EchelonForm {
    Matrix matrix;                     // reduced row-echelon form, zero rows removed
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row-echelon form with zero rows dropped.
inline EchelonForm echelon(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        Scalar inv = m(r, c).inverse();
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!m(r, k).is_zero()) m(r, k) *= inv;
        for (std::size_t q = 0; q < m.rows(); ++q) {
            if (q == r || m(q, c).is_zero()) continue;
            Scalar f = m(q, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(r, k).is_zero()) m(q, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    m.drop_rows_from(r);
    return {std::move(m), std::move(pivots)};
}

/// Reduced row-echelon form, keeping the original shape (zero rows at the bottom).
inline Matrix rref(const Matrix& m) {
    EchelonForm e = echelon(m);
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < e.matrix.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = e.matrix(r, c);
    return out;
}

inline std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

/// Basis of {v : m v = 0}, one vector per free column.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
    EchelonForm e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.matrix(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Inverse of a square matrix, or nullopt if singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Matrix(0, 0);
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar(1);
    }
    EchelonForm e = echelon(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.matrix(r, n + c);
    return inv;
}

}  // namespace quadrics
