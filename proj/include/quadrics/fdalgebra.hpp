#pragma once

// Finite-dimensional Z2-graded algebras given by structure constants, plus the
// constructions the structure theory needs: subalgebras, quotients, degree
// parts, twisted tensor products, centers and minimal polynomials.

#include "poly.hpp"
#include "subspace.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadrics {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) s.emplace_back(k, v[k]);
    return s;
}

class FDAlgebra {
public:
    FDAlgebra() = default;

    /// products(i, j) returns e_i * e_j as a dense coordinate vector.
    FDAlgebra(std::vector<std::string> labels, const std::function<Vec(std::size_t, std::size_t)>& products, Vec unit,
              std::vector<int> grading)
        : dim_(labels.size()), labels_(std::move(labels)), unit_(std::move(unit)), grading_(std::move(grading)) {
        if (unit_.size() != dim_ || grading_.size() != dim_) throw std::invalid_argument("FDAlgebra: size mismatch");
        for (auto& g : grading_) g &= 1;
        table_.resize(dim_ * dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Vec p = products(i, j);
                if (p.size() != dim_) throw std::invalid_argument("FDAlgebra: product has wrong length");
                table_[i * dim_ + j] = to_sparse(p);
            }
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t label_index(const std::string& label) const {
        for (std::size_t k = 0; k < dim_; ++k)
            if (labels_[k] == label) return k;
        throw std::out_of_range("no basis element labelled '" + label + "'");
    }
    const Vec& unit() const { return unit_; }
    const std::vector<int>& grading() const { return grading_; }
    int degree_of(std::size_t k) const { return grading_[k]; }
    const SparseVec& product_terms(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

    Vec basis_product(std::size_t i, std::size_t j) const {
        Vec v(dim_);
        for (const auto& [k, c] : product_terms(i, j)) v[k] = c;
        return v;
    }
    Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        for (const auto& [kk, c] : product_terms(i, j))
            if (kk == k) return c;
        return Scalar(0);
    }

    Vec mul(const Vec& x, const Vec& y) const {
        Vec out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                Scalar f = x[i] * y[j];
                for (const auto& [k, c] : product_terms(i, j)) out[k] += f * c;
            }
        }
        return out;
    }

    Vec basis_vector(std::size_t k) const { return unit_vector(dim_, k); }
    Vec zero() const { return Vec(dim_); }

    /// Matrix of y -> x*y (column j = x*e_j).
    Matrix left_multiplication(const Vec& x) const {
        Matrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec col = mul(x, basis_vector(j));
            for (std::size_t r = 0; r < dim_; ++r) m(r, j) = col[r];
        }
        return m;
    }

    bool is_associative() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Vec ij = basis_product(i, j);
                for (std::size_t k = 0; k < dim_; ++k) {
                    Vec left = mul(ij, basis_vector(k));
                    Vec right = mul(basis_vector(i), basis_product(j, k));
                    if (left != right) return false;
                }
            }
        return true;
    }

    bool has_unit() const {
        for (std::size_t k = 0; k < dim_; ++k) {
            Vec e = basis_vector(k);
            if (mul(unit_, e) != e || mul(e, unit_) != e) return false;
        }
        return true;
    }

    bool respects_grading() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (const auto& [k, c] : product_terms(i, j))
                    if (grading_[k] != ((grading_[i] + grading_[j]) & 1)) return false;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!unit_[k].is_zero() && grading_[k] != 0) return false;
        return true;
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                if (product_terms(i, j) != product_terms(j, i)) return false;
        return true;
    }

    bool is_graded() const {
        for (int g : grading_)
            if (g != 0) return true;
        return false;
    }

    /// Homogeneous of the given degree (zero counts as homogeneous of every degree).
    bool is_homogeneous(const Vec& v, int degree) const {
        for (std::size_t k = 0; k < dim_; ++k)
            if (!v[k].is_zero() && grading_[k] != degree) return false;
        return true;
    }
    std::optional<int> degree_of(const Vec& v) const {
        std::optional<int> d;
        for (std::size_t k = 0; k < dim_; ++k) {
            if (v[k].is_zero()) continue;
            if (d && *d != grading_[k]) return std::nullopt;
            d = grading_[k];
        }
        return d ? d : std::optional<int>(0);
    }

    Vec homogeneous_component(const Vec& v, int degree) const {
        Vec out(dim_);
        for (std::size_t k = 0; k < dim_; ++k)
            if (grading_[k] == degree) out[k] = v[k];
        return out;
    }

    std::vector<std::size_t> basis_of_degree(int degree) const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < dim_; ++k)
            if (grading_[k] == degree) out.push_back(k);
        return out;
    }

    friend bool operator==(const FDAlgebra& a, const FDAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_ && a.unit_ == b.unit_ && a.grading_ == b.grading_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> table_;
    Vec unit_;
    std::vector<int> grading_;
};

/// Same table with the grading erased.
inline FDAlgebra ungraded(const FDAlgebra& a) {
    return FDAlgebra(
        a.labels(), [&](std::size_t i, std::size_t j) { return a.basis_product(i, j); }, a.unit(),
        std::vector<int>(a.dim(), 0));
}

inline Vec power(const FDAlgebra& a, const Vec& x, std::size_t n, const Vec& unit) {
    Vec acc = unit;
    for (std::size_t k = 0; k < n; ++k) acc = a.mul(acc, x);
    return acc;
}

/// p(x) computed with the given unit (the unit of a corner or block algebra).
inline Vec evaluate(const FDAlgebra& a, const Poly& p, const Vec& x, const Vec& unit) {
    Vec acc(a.dim());
    for (long k = p.degree(); k >= 0; --k) {
        acc = a.mul(acc, x);
        axpy(acc, p.coeff(static_cast<std::size_t>(k)), unit);
    }
    return acc;
}
inline Vec evaluate(const FDAlgebra& a, const Poly& p, const Vec& x) { return evaluate(a, p, x, a.unit()); }

/// Monic minimal polynomial of x from the Krylov sequence unit, x, x^2, ...
inline Poly minimal_polynomial(const FDAlgebra& a, const Vec& x, const Vec& unit) {
    std::vector<Vec> powers{unit};
    Subspace span = Subspace::span(powers, a.dim());
    if (is_zero(unit)) return Poly::constant(1);
    while (true) {
        Vec next = a.mul(powers.back(), x);
        // solve next = sum c_k powers[k]
        std::vector<Vec> cols = powers;
        Matrix m(a.dim(), cols.size() + 1);
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < a.dim(); ++r) m(r, c) = cols[c][r];
        for (std::size_t r = 0; r < a.dim(); ++r) m(r, cols.size()) = next[r];
        auto ker = kernel_basis(m);
        for (const auto& v : ker) {
            const Scalar& lead = v.back();
            if (lead.is_zero()) continue;
            Vec coeffs(cols.size() + 1);
            Scalar inv = lead.inverse();
            for (std::size_t c = 0; c <= cols.size(); ++c) coeffs[c] = v[c] * inv;
            return Poly(std::move(coeffs));
        }
        powers.push_back(std::move(next));
        if (powers.size() > a.dim() + 1) throw std::logic_error("minimal_polynomial: Krylov sequence did not close");
    }
}
inline Poly minimal_polynomial(const FDAlgebra& a, const Vec& x) { return minimal_polynomial(a, x, a.unit()); }

/// A subalgebra together with its embedding: basis element k is the k-th canonical row of `span`.
struct SubalgebraView {
    FDAlgebra algebra;
    Subspace span;

    Vec embed(const Vec& coords) const { return span.combine(coords); }
    Vec restrict(const Vec& v) const {
        auto c = span.coordinates(v);
        if (!c) throw std::invalid_argument("vector does not lie in the subalgebra");
        return *c;
    }
};

/// Subalgebra spanned by `span` with the given unit (which may differ from the parent's unit).
inline SubalgebraView subalgebra(const FDAlgebra& a, const Subspace& span, const Vec& unit) {
    const std::size_t d = span.dim();
    std::vector<Vec> rows = span.basis_vectors();
    std::vector<std::string> labels;
    std::vector<int> grading;
    bool homogeneous = true;
    for (const auto& r : rows) {
        auto deg = a.degree_of(r);
        if (!deg) homogeneous = false;
        grading.push_back(deg.value_or(0));
        std::string label;
        std::size_t nz = 0;
        for (std::size_t k = 0; k < r.size(); ++k)
            if (!r[k].is_zero()) {
                ++nz;
                label = a.labels()[k];
            }
        labels.push_back(nz == 1 && r[span.pivots()[labels.size()]].is_one() ? label : "b" + std::to_string(labels.size()));
    }
    if (!homogeneous) grading.assign(d, 0);
    auto unit_coords = span.coordinates(unit);
    if (!unit_coords) throw std::invalid_argument("subalgebra unit outside the span");
    FDAlgebra sub(
        labels,
        [&](std::size_t i, std::size_t j) {
            auto c = span.coordinates(a.mul(rows[i], rows[j]));
            if (!c) throw std::invalid_argument("span is not closed under multiplication");
            return *c;
        },
        *unit_coords, grading);
    return {std::move(sub), span};
}

/// Degree-d part of a graded algebra (d = 0 gives a subalgebra).
inline SubalgebraView degree_part(const FDAlgebra& a, int degree) {
    std::vector<Vec> rows;
    for (auto k : a.basis_of_degree(degree)) rows.push_back(a.basis_vector(k));
    return subalgebra(a, Subspace::span(rows, a.dim()), a.unit());
}

/// a / ideal; quotient basis = images of the standard basis vectors outside the ideal's pivot columns.
struct QuotientView {
    FDAlgebra algebra;
    Subspace ideal;
    std::vector<std::size_t> free_columns;

    Vec project(const Vec& v) const {
        Vec r = ideal.reduce(v);
        Vec out(free_columns.size());
        for (std::size_t k = 0; k < free_columns.size(); ++k) out[k] = r[free_columns[k]];
        return out;
    }
    Vec lift(const Vec& coords) const {
        Vec v(ideal.ambient_dim());
        for (std::size_t k = 0; k < free_columns.size(); ++k) v[free_columns[k]] = coords[k];
        return v;
    }
};

inline QuotientView quotient(const FDAlgebra& a, const Subspace& ideal) {
    std::vector<bool> pivot(a.dim(), false);
    for (auto p : ideal.pivots()) pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (!pivot[k]) free.push_back(k);
    QuotientView q{FDAlgebra{}, ideal, free};
    std::vector<std::string> labels;
    std::vector<int> grading;
    for (auto k : free) {
        labels.push_back(a.labels()[k]);
        grading.push_back(a.degree_of(k));
    }
    q.algebra = FDAlgebra(
        labels, [&](std::size_t i, std::size_t j) { return q.project(a.basis_product(free[i], free[j])); },
        q.project(a.unit()), grading);
    return q;
}

/// Twisted tensor product: (x (x) y)(x' (x) y') = (-1)^{|y||x'|} xx' (x) yy'.
/// Basis element (i, j) sits at index i * dim(b) + j.
inline FDAlgebra twisted_tensor(const FDAlgebra& a, const FDAlgebra& b) {
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<std::string> labels;
    std::vector<int> grading;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            labels.push_back(a.labels()[i] + "|" + b.labels()[j]);
            grading.push_back((a.degree_of(i) + b.degree_of(j)) & 1);
        }
    Vec unit(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) unit[i * db + j] = a.unit()[i] * b.unit()[j];
    return FDAlgebra(
        labels,
        [&](std::size_t p, std::size_t q) {
            const std::size_t i = p / db, j = p % db, k = q / db, l = q % db;
            Vec out(da * db);
            const bool negative = (b.degree_of(j) & a.degree_of(k)) != 0;
            for (const auto& [s, cs] : a.product_terms(i, k))
                for (const auto& [t, ct] : b.product_terms(j, l)) {
                    Scalar c = cs * ct;
                    out[s * db + t] += negative ? -c : c;
                }
            return out;
        },
        unit, grading);
}

/// The base field, concentrated in degree 0.
inline FDAlgebra base_field() {
    return FDAlgebra({"1"}, [](std::size_t, std::size_t) { return Vec{Scalar(1)}; }, Vec{Scalar(1)}, {0});
}

/// The group algebra of the order-2 group, sigma in degree 1.
inline FDAlgebra group_algebra_z2() {
    return FDAlgebra(
        {"1", "s"}, [](std::size_t i, std::size_t j) { return unit_vector(2, (i + j) % 2); }, Vec{Scalar(1), Scalar(0)},
        {0, 1});
}

/// Direct product a x b (block-diagonal table).
inline FDAlgebra direct_product(const FDAlgebra& a, const FDAlgebra& b) {
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<std::string> labels;
    std::vector<int> grading;
    for (std::size_t i = 0; i < da; ++i) {
        labels.push_back(a.labels()[i] + "@1");
        grading.push_back(a.degree_of(i));
    }
    for (std::size_t j = 0; j < db; ++j) {
        labels.push_back(b.labels()[j] + "@2");
        grading.push_back(b.degree_of(j));
    }
    Vec unit(da + db);
    for (std::size_t i = 0; i < da; ++i) unit[i] = a.unit()[i];
    for (std::size_t j = 0; j < db; ++j) unit[da + j] = b.unit()[j];
    return FDAlgebra(
        labels,
        [&](std::size_t p, std::size_t q) {
            Vec out(da + db);
            if (p < da && q < da)
                for (const auto& [k, c] : a.product_terms(p, q)) out[k] = c;
            else if (p >= da && q >= da)
                for (const auto& [k, c] : b.product_terms(p - da, q - da)) out[da + k] = c;
            return out;
        },
        unit, grading);
}

/// Center {z : z e_j = e_j z for all j}.
inline Subspace center(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    Matrix m(d * d, d);  // row (j, k), column i: c[i][j][k] - c[j][i][k]
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& [k, c] : a.product_terms(i, j)) m(j * d + k, i) += c;
            for (const auto& [k, c] : a.product_terms(j, i)) m(j * d + k, i) -= c;
        }
    return kernel(m);
}

/// Span of all products x*y with x in u, y in v.
inline Subspace product_space(const FDAlgebra& a, const Subspace& u, const Subspace& v) {
    std::vector<Vec> rows;
    auto ub = u.basis_vectors();
    auto vb = v.basis_vectors();
    for (const auto& x : ub)
        for (const auto& y : vb) rows.push_back(a.mul(x, y));
    return Subspace::span(rows, a.dim());
}

struct IsomorphismCheck {
    bool bijective = false;
    bool multiplicative = false;
    bool unital = false;
    bool graded = false;
    bool ok() const { return bijective && multiplicative && unital; }
};

/// Checks that e_i -> images[i] is an algebra isomorphism src -> dst.
inline IsomorphismCheck check_isomorphism(const FDAlgebra& src, const FDAlgebra& dst, const std::vector<Vec>& images) {
    IsomorphismCheck out;
    if (images.size() != src.dim() || src.dim() != dst.dim()) return out;
    auto apply = [&](const Vec& v) {
        Vec r(dst.dim());
        for (std::size_t k = 0; k < v.size(); ++k) axpy(r, v[k], images[k]);
        return r;
    };
    out.bijective = rank(Matrix::from_rows(images, dst.dim())) == src.dim();
    out.unital = apply(src.unit()) == dst.unit();
    out.multiplicative = true;
    for (std::size_t i = 0; i < src.dim() && out.multiplicative; ++i)
        for (std::size_t j = 0; j < src.dim(); ++j)
            if (apply(src.basis_product(i, j)) != dst.mul(images[i], images[j])) {
                out.multiplicative = false;
                break;
            }
    out.graded = true;
    for (std::size_t k = 0; k < src.dim(); ++k)
        if (!dst.is_homogeneous(images[k], src.degree_of(k))) out.graded = false;
    return out;
}

}  // namespace quadrics
