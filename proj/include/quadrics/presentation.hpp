#pragma once

// Quadratic and inhomogeneous-quadratic presentations T(V)/(R), their quadratic
// duals, tensor products and twisted tensor products.

#include "freealg.hpp"
#include "subspace.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadrics {

/// Homogeneous part (a vector in V(x)V, index i*n+j for x_i x_j) plus a constant.
struct Relation {
    Vec quad;
    Scalar constant;
    friend bool operator==(const Relation&, const Relation&) = default;
};

class QuadraticPresentation {
public:
    QuadraticPresentation() = default;

    static QuadraticPresentation homogeneous(std::vector<std::string> gens, const std::vector<Vec>& relations) {
        std::vector<Relation> rels;
        for (const auto& r : relations) rels.push_back({r, Scalar(0)});
        return QuadraticPresentation(std::move(gens), std::move(rels), false);
    }
    static QuadraticPresentation inhomogeneous(std::vector<std::string> gens, std::vector<Relation> relations) {
        return QuadraticPresentation(std::move(gens), std::move(relations), true);
    }

    std::size_t num_gens() const { return gens_.size(); }
    const std::vector<std::string>& gens() const { return gens_; }
    const std::vector<Relation>& relations() const { return relations_; }
    /// Canonical (rref) span of the homogeneous parts.
    const Subspace& relation_space() const { return space_; }
    bool is_homogeneous() const { return !inhomogeneous_; }
    bool has_constants() const {
        return std::any_of(relations_.begin(), relations_.end(), [](const Relation& r) { return !r.constant.is_zero(); });
    }

    std::size_t index_of(const std::string& name) const {
        auto it = std::find(gens_.begin(), gens_.end(), name);
        if (it == gens_.end()) throw std::invalid_argument("unknown generator '" + name + "'");
        return static_cast<std::size_t>(it - gens_.begin());
    }

    std::vector<FreePoly> relation_polys() const {
        std::vector<FreePoly> out;
        for (const auto& r : relations_) out.push_back(to_free_poly(r.quad, num_gens(), r.constant));
        return out;
    }

    std::string relation_string(std::size_t k) const { return relation_polys()[k].to_string(gens_); }

    /// Same relation span and same constants on it (canonical comparison).
    friend bool same_canonical_form(const QuadraticPresentation& a, const QuadraticPresentation& b) {
        if (a.num_gens() != b.num_gens() || !(a.space_ == b.space_)) return false;
        return a.canonical_constants() == b.canonical_constants();
    }

    /// Constant attached to each canonical basis vector of the relation space.
    Vec canonical_constants() const {
        // constants are linear in the homogeneous part: solve c(basis_k) from the user list
        const std::size_t d = space_.dim();
        Vec out(d);
        if (!has_constants()) return out;
        Matrix coords(relations_.size(), d);
        for (std::size_t r = 0; r < relations_.size(); ++r) {
            Vec c = *space_.coordinates(relations_[r].quad);
            for (std::size_t k = 0; k < d; ++k) coords(r, k) = c[k];
        }
        // relations are independent, so coords is square and invertible
        auto inv = inverse(coords);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t r = 0; r < relations_.size(); ++r) out[k] += (*inv)(k, r) * relations_[r].constant;
        return out;
    }

    static FreePoly to_free_poly(const Vec& quad, std::size_t n, const Scalar& constant = Scalar(0)) {
        FreePoly p = FreePoly::constant(constant);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                p.add(make_word({static_cast<int>(i), static_cast<int>(j)}), quad[i * n + j]);
        return p;
    }

private:
    QuadraticPresentation(std::vector<std::string> gens, std::vector<Relation> relations, bool inhomogeneous)
        : gens_(std::move(gens)), relations_(std::move(relations)), inhomogeneous_(inhomogeneous) {
        const std::size_t n = gens_.size();
        std::set<std::string> seen(gens_.begin(), gens_.end());
        if (seen.size() != n) throw std::invalid_argument("duplicate generator names");
        if (n > 100) throw std::invalid_argument("too many generators");
        std::vector<Vec> quads;
        for (const auto& r : relations_) {
            if (r.quad.size() != n * n) throw std::invalid_argument("relation does not live in V(x)V");
            if (!inhomogeneous_ && !r.constant.is_zero()) throw std::invalid_argument("homogeneous relation with a constant");
            quads.push_back(r.quad);
        }
        space_ = Subspace::span(quads, n * n);
        if (space_.dim() != relations_.size()) throw std::invalid_argument("relations are linearly dependent");
    }

    std::vector<std::string> gens_;
    std::vector<Relation> relations_;
    Subspace space_;
    bool inhomogeneous_ = false;
};

/// A degree-2 element f of A given by a lift r0 in V(x)V.
struct CentralElement {
    std::string name = "f";
    Vec lift;
};

inline Vec tensor_basis(std::size_t n, std::size_t i, std::size_t j) { return unit_vector(n * n, i * n + j); }

/// Name of the dual generator: X for a lowercase single letter x, otherwise name*.
inline std::vector<std::string> dual_names(const std::vector<std::string>& gens) {
    std::vector<std::string> out;
    std::set<std::string> taken(gens.begin(), gens.end());
    for (const auto& g : gens) {
        std::string d = g;
        if (g.size() == 1 && std::islower(static_cast<unsigned char>(g[0])))
            d = std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(g[0]))));
        else
            d = g + "*";
        if (taken.count(d)) d = g + "*";
        while (taken.count(d)) d += "*";
        taken.insert(d);
        out.push_back(d);
    }
    return out;
}

inline QuadraticPresentation quadratic_dual(const QuadraticPresentation& p) {
    if (!p.is_homogeneous()) throw std::invalid_argument("quadratic_dual: presentation is inhomogeneous");
    return QuadraticPresentation::homogeneous(dual_names(p.gens()), annihilator(p.relation_space()).basis_vectors());
}

namespace detail {

// Generators of a followed by b, colliding names suffixed @L / @R.
inline std::vector<std::string> joined_names(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::vector<std::string> out;
    for (const auto& g : a) out.push_back(sb.count(g) ? g + "@L" : g);
    for (const auto& g : b) out.push_back(sa.count(g) ? g + "@R" : g);
    return out;
}

// Embeds a vector of W(x)W into (W+U)(x)(W+U) with W placed at offset.
inline Vec embed_square(const Vec& v, std::size_t n, std::size_t offset, std::size_t total) {
    Vec out(total * total);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[(offset + i) * total + offset + j] = v[i * n + j];
    return out;
}

}  // namespace detail

/// A (x) B: relations R_A + [V, U] + R_B.
inline QuadraticPresentation tensor_presentation(const QuadraticPresentation& a, const QuadraticPresentation& b) {
    if (!a.is_homogeneous() || !b.is_homogeneous())
        throw std::invalid_argument("tensor_presentation: inputs must be homogeneous");
    const std::size_t n = a.num_gens(), m = b.num_gens(), t = n + m;
    std::vector<Vec> rels;
    for (const auto& r : a.relations()) rels.push_back(detail::embed_square(r.quad, n, 0, t));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec c(t * t);
            c[i * t + n + j] = Scalar(1);
            c[(n + j) * t + i] = Scalar(-1);
            rels.push_back(std::move(c));
        }
    for (const auto& r : b.relations()) rels.push_back(detail::embed_square(r.quad, m, n, t));
    return QuadraticPresentation::homogeneous(detail::joined_names(a.gens(), b.gens()), rels);
}

/// E (x)^ F for presentations with every generator odd: relations of E, of F, and xy + yx.
inline QuadraticPresentation twisted_tensor(const QuadraticPresentation& e, const QuadraticPresentation& f) {
    const std::size_t n = e.num_gens(), m = f.num_gens(), t = n + m;
    std::vector<Relation> rels;
    for (const auto& r : e.relations()) rels.push_back({detail::embed_square(r.quad, n, 0, t), r.constant});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec c(t * t);
            c[i * t + n + j] = Scalar(1);
            c[(n + j) * t + i] = Scalar(1);
            rels.push_back({std::move(c), Scalar(0)});
        }
    for (const auto& r : f.relations()) rels.push_back({detail::embed_square(r.quad, m, n, t), r.constant});
    auto names = detail::joined_names(e.gens(), f.gens());
    if (e.is_homogeneous() && f.is_homogeneous()) {
        std::vector<Vec> quads;
        for (auto& r : rels) quads.push_back(std::move(r.quad));
        return QuadraticPresentation::homogeneous(std::move(names), quads);
    }
    return QuadraticPresentation::inhomogeneous(std::move(names), std::move(rels));
}

/// Rewrites a tensor v in V(x)V in new coordinates: x_i = sum_k q(i, k) y_k.
inline Vec substitute_quadratic(const Vec& v, const Matrix& q) {
    const std::size_t n = q.rows();
    Vec out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& c = v[i * n + j];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (q(i, k).is_zero()) continue;
                Scalar ck = c * q(i, k);
                for (std::size_t l = 0; l < n; ++l)
                    if (!q(j, l).is_zero()) out[k * n + l] += ck * q(j, l);
            }
        }
    return out;
}

/// The algebra on generators y = P x isomorphic to p (relations transported by x = P^-1 y).
inline QuadraticPresentation change_basis(const QuadraticPresentation& p, const Matrix& basis_change) {
    auto q = inverse(basis_change);
    if (!q) throw std::invalid_argument("change_basis: matrix is singular");
    std::vector<Vec> rels;
    for (const auto& r : p.relations()) rels.push_back(substitute_quadratic(r.quad, *q));
    if (!p.is_homogeneous()) throw std::invalid_argument("change_basis: presentation is inhomogeneous");
    return QuadraticPresentation::homogeneous(p.gens(), rels);
}

}  // namespace quadrics
