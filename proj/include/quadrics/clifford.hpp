#pragma once

// Clifford maps theta: R_E -> k and the deformations C_E(theta) = T(X)/(r - theta(r)).

#include "config.hpp"
#include "gradedalg.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadrics {

/// theta given by its values on the canonical basis of the relation space of `source`.
struct CliffordMap {
    QuadraticPresentation source;
    Vec values;
    bool validated = false;

    Scalar operator()(const Vec& r) const {
        auto c = source.relation_space().coordinates(r);
        if (!c) throw std::invalid_argument("CliffordMap: argument is not in the relation space");
        return dot(*c, values);
    }
};

namespace detail {

// X(x)R n R(x)X inside X^(x)3, index a*n^2 + b*n + c.
inline Subspace clifford_overlap_space(const QuadraticPresentation& e) {
    const std::size_t n = e.num_gens(), n2 = n * n;
    std::vector<Vec> left, right;
    for (const auto& r : e.relation_space().basis_vectors())
        for (std::size_t x = 0; x < n; ++x) {
            Vec l(n2 * n), rr(n2 * n);
            for (std::size_t k = 0; k < n2; ++k) {
                l[x * n2 + k] = r[k];
                rr[k * n + x] = r[k];
            }
            left.push_back(std::move(l));
            right.push_back(std::move(rr));
        }
    return intersect(Subspace::span(left, n2 * n), Subspace::span(right, n2 * n));
}

inline Vec slice_last(const Vec& w, std::size_t n, std::size_t c) {
    Vec out(n * n);
    for (std::size_t k = 0; k < n * n; ++k) out[k] = w[k * n + c];
    return out;
}

inline Vec slice_first(const Vec& w, std::size_t n, std::size_t a) {
    Vec out(n * n);
    for (std::size_t k = 0; k < n * n; ++k) out[k] = w[a * n * n + k];
    return out;
}

}  // namespace detail

/// (theta (x) 1 - 1 (x) theta) vanishes on X(x)R n R(x)X.
inline bool is_clifford_map(const QuadraticPresentation& e, const Vec& values) {
    if (values.size() != e.relation_space().dim()) throw std::invalid_argument("is_clifford_map: wrong number of values");
    const CliffordMap theta{e, values, false};
    const std::size_t n = e.num_gens();
    for (const auto& w : detail::clifford_overlap_space(e).basis_vectors())
        for (std::size_t c = 0; c < n; ++c)
            if (theta(detail::slice_last(w, n, c)) != theta(detail::slice_first(w, n, c))) return false;
    return true;
}

inline bool is_clifford_map(const CliffordMap& theta) { return is_clifford_map(theta.source, theta.values); }

/// All Clifford maps on E, as a subspace of k^{dim R_E}.
inline Subspace clifford_map_space(const QuadraticPresentation& e) {
    const std::size_t n = e.num_gens(), d = e.relation_space().dim();
    std::vector<Vec> rows;
    for (const auto& w : detail::clifford_overlap_space(e).basis_vectors())
        for (std::size_t c = 0; c < n; ++c)
            rows.push_back(*e.relation_space().coordinates(detail::slice_last(w, n, c)) -
                           *e.relation_space().coordinates(detail::slice_first(w, n, c)));
    return kernel(Matrix::from_rows(rows, d));
}

/// theta_f on A^!: alpha -> alpha(r0) for a lift r0 of the central element f.
inline CliffordMap theta_from_central(const QuadraticPresentation& a, const CentralElement& f) {
    const std::size_t n = a.num_gens();
    if (f.lift.size() != n * n) throw std::invalid_argument("theta_from_central: lift does not live in V(x)V");
    if (!is_central_upto(complete(a, 3), f)) throw std::invalid_argument("theta_from_central: f is not central");
    CliffordMap theta{quadratic_dual(a), {}, false};
    auto values_for = [&](const Vec& lift) {
        Vec v;
        for (const auto& alpha : theta.source.relation_space().basis_vectors()) v.push_back(dot(alpha, lift));
        return v;
    };
    theta.values = values_for(f.lift);
    if (!a.relation_space().is_zero() && values_for(f.lift + a.relation_space().basis_vector(0)) != theta.values)
        throw std::logic_error("theta_from_central: value depends on the lift");
    theta.validated = is_clifford_map(theta);
    return theta;
}

struct FrobeniusResult {
    bool found = false;
    Vec functional;  // lambda with (x, y) -> lambda(xy) nondegenerate
};

inline bool frobenius_pairing_nondegenerate(const FDAlgebra& a, const Vec& lambda) {
    const std::size_t d = a.dim();
    Matrix pairing(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : a.product_terms(i, j)) pairing(i, j) += c * lambda[k];
    return rank(pairing) == d;
}

/// Basis duals first, then `attempts` random functionals with coefficients in {-3..3} + {-3..3}i.
/// A negative answer means "unknown", never "not Frobenius".
inline FrobeniusResult frobenius_search(const FDAlgebra& a, std::size_t attempts = 20, std::uint64_t seed = 1) {
    FrobeniusResult out;
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (frobenius_pairing_nondegenerate(a, a.basis_vector(k))) {
            out.found = true;
            out.functional = a.basis_vector(k);
            return out;
        }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (std::size_t t = 0; t < attempts; ++t) {
        Vec lambda(a.dim());
        for (auto& c : lambda) c = Scalar(mpq_class(coef(rng)), mpq_class(coef(rng)));
        if (frobenius_pairing_nondegenerate(a, lambda)) {
            out.found = true;
            out.functional = lambda;
            return out;
        }
    }
    return out;
}

struct CliffordChecks {
    bool dimension_invariance = false;
    bool strongly_graded = false;
    bool frobenius_found = false;
};

struct CliffordAlgebraResult {
    FDAlgebra algebra;
    CliffordMap theta;
    QuadraticPresentation presentation;  // relations r - theta(r)
    std::size_t source_dim = 0;
    CliffordChecks checks;
    Vec frobenius_functional;
};

/// Presentation of C_E(theta): canonical basis r_k of R_E with constants -theta(r_k).
inline QuadraticPresentation clifford_presentation(const CliffordMap& theta) {
    std::vector<Relation> rels;
    const auto basis = theta.source.relation_space().basis_vectors();
    for (std::size_t k = 0; k < basis.size(); ++k) rels.push_back({basis[k], -theta.values[k]});
    return QuadraticPresentation::inhomogeneous(theta.source.gens(), rels);
}

inline CliffordAlgebraResult clifford_deformation(const CliffordMap& theta, const AnalysisConfig& cfg = {}) {
    if (!is_clifford_map(theta)) throw std::invalid_argument("clifford_deformation: theta is not a Clifford map");
    CliffordAlgebraResult out;
    out.theta = theta;
    out.theta.validated = true;
    out.presentation = clifford_presentation(theta);
    const std::size_t d_max = cfg.truncation ? cfg.truncation : default_truncation(theta.source.num_gens());
    out.source_dim = multiplication_table(complete(theta.source, d_max)).dim();
    out.algebra = multiplication_table(complete(out.presentation, d_max));
    out.checks.dimension_invariance = out.algebra.dim() == out.source_dim;
    out.checks.strongly_graded = strongly_graded(out.algebra);
    FrobeniusResult fr = frobenius_search(out.algebra, cfg.frobenius_attempts, cfg.seed);
    out.checks.frobenius_found = fr.found;
    out.frobenius_functional = fr.functional;
    return out;
}

}  // namespace quadrics
