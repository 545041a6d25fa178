#pragma once

// Subspaces of Q(i)^n held by their canonical (reduced row-echelon) basis.
// Two subspaces are equal iff their canonical bases are equal.

#include "matrix.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace quadrics {

class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient) {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        EchelonForm e = echelon(Matrix::from_rows(vectors, ambient));
        s.basis_ = std::move(e.matrix);
        s.pivots_ = std::move(e.pivots);
        return s;
    }
    static Subspace full(std::size_t ambient) { return from_echelon({Matrix::identity(ambient), iota(ambient)}); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec basis_vector(std::size_t k) const { return basis_.row_vec(k); }
    std::vector<Vec> basis_vectors() const { return basis_.row_list(); }

    /// Canonical representative of v modulo this subspace (zero in every pivot column).
    Vec reduce(Vec v) const {
        check(v.size());
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            Scalar f = v[pivots_[r]];
            if (f.is_zero()) continue;
            axpy(v, -f, basis_.row(r));
        }
        return v;
    }

    bool contains(const Vec& v) const { return quadrics::is_zero(reduce(v)); }
    bool contains(const Subspace& other) const {
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(other.basis_vector(r))) return false;
        return true;
    }

    /// Coordinates of v with respect to the canonical basis, if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const {
        check(v.size());
        Vec c(dim());
        for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
        Vec rest = v;
        for (std::size_t r = 0; r < dim(); ++r) axpy(rest, -c[r], basis_.row(r));
        if (!quadrics::is_zero(rest)) return std::nullopt;
        return c;
    }

    Vec combine(const Vec& coords) const {
        Vec v(ambient_);
        for (std::size_t r = 0; r < dim(); ++r) axpy(v, coords[r], basis_.row(r));
        return v;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    static std::vector<std::size_t> iota(std::size_t n) {
        std::vector<std::size_t> v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = k;
        return v;
    }
    static Subspace from_echelon(EchelonForm e) {
        Subspace s(e.matrix.cols());
        s.basis_ = std::move(e.matrix);
        s.pivots_ = std::move(e.pivots);
        return s;
    }
    void check(std::size_t n) const {
        if (n != ambient_) throw std::invalid_argument("vector does not live in the ambient space");
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace kernel(const Matrix& m) { return Subspace::span(kernel_basis(m), m.cols()); }

inline Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    auto rows = u.basis_vectors();
    for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
    return Subspace::span(rows, u.ambient_dim());
}

/// {a : <a, r> = 0 for all r in s} under the coordinate pairing sum_k a_k r_k.
/// On V(x)V with the index (i, j) -> i*dim V + j this is <a(x)b, v(x)w> = a(v) b(w).
inline Subspace annihilator(const Subspace& s) {
    if (s.is_zero()) return Subspace::full(s.ambient_dim());
    return kernel(s.basis());
}

inline Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    return annihilator(sum(annihilator(u), annihilator(v)));
}

}  // namespace quadrics
