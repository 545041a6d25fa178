#pragma once

// Structure theory of finite-dimensional Z2-graded algebras: radical, blocks,
// graded blocks and their division types, G-elements, the copy decomposition
// of commutative strongly graded algebras, and the singularity verdict.

#include "config.hpp"
#include "fdalgebra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadrics {

class GradedNotSemisimple : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// ---------------------------------------------------------------- radical

/// I^k as a subspace (I^1 = I).
inline Subspace ideal_power(const FDAlgebra& a, const Subspace& ideal, std::size_t k) {
    Subspace p = ideal;
    for (std::size_t j = 1; j < k && !p.is_zero(); ++j) p = product_space(a, p, ideal);
    return p;
}

/// Smallest k with I^k = 0, or nullopt when I is not nilpotent.
inline std::optional<std::size_t> nilpotency_index(const FDAlgebra& a, const Subspace& ideal) {
    Subspace p = ideal;
    for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
        if (p.is_zero()) return k;
        Subspace next = product_space(a, p, ideal);
        if (next == p) return std::nullopt;
        p = std::move(next);
    }
    return std::nullopt;
}

/// Jacobson radical: x with tr(L_{xy}) = 0 for every y.
inline Subspace radical(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    Vec traces(d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m) traces[k] += a.structure_constant(k, m, m);
    Matrix form(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : a.product_terms(i, j)) form(i, j) += c * traces[k];
    Subspace j = kernel(form);
    if (j.is_zero()) return j;
    const Subspace all = Subspace::full(d);
    if (!j.contains(product_space(a, all, j)) || !j.contains(product_space(a, j, all)))
        throw std::logic_error("radical: trace-form kernel is not an ideal");
    if (!nilpotency_index(a, j)) throw std::logic_error("radical: trace-form kernel is not nilpotent");
    if (a.is_graded())
        for (const auto& v : j.basis_vectors())
            if (!j.contains(a.homogeneous_component(v, 0)))
                throw std::logic_error("radical: radical of a graded algebra is not homogeneous");
    return j;
}

/// dim J^k / J^{k+1} for k = 1, 2, ... until J^k = 0.
inline std::vector<std::size_t> radical_layers(const FDAlgebra& a, const Subspace& j) {
    std::vector<std::size_t> layers;
    Subspace p = j;
    while (!p.is_zero()) {
        Subspace next = product_space(a, p, j);
        layers.push_back(p.dim() - next.dim());
        p = std::move(next);
    }
    return layers;
}

// ---------------------------------------------------------------- searches

namespace detail {

/// Feeds candidate elements of span(basis) to fn until it returns true: the basis
/// vectors, pairs b_i + c b_j with c in {1,-1,i,-i}, then random combinations of height <= h.
inline bool for_each_candidate(const std::vector<Vec>& basis, const AnalysisConfig& cfg, std::mt19937_64& rng,
                               const std::function<bool(const Vec&)>& fn) {
    for (const auto& b : basis)
        if (fn(b)) return true;
    const Scalar units[] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            for (const auto& c : units) {
                Vec v = basis[i];
                axpy(v, c, basis[j]);
                if (fn(v)) return true;
            }
    if (basis.empty()) return false;
    std::uniform_int_distribution<long> coef(-cfg.search_height, cfg.search_height);
    for (std::size_t t = 0; t < cfg.search_attempts; ++t) {
        Vec v(basis[0].size());
        for (const auto& b : basis) axpy(v, Scalar(mpq_class(coef(rng)), mpq_class(coef(rng))), b);
        if (!is_zero(v) && fn(v)) return true;
    }
    return false;
}

/// Polynomials h_j with h_j(y) the CRT idempotents for the coprime factors of p,
/// or nullopt when factor_small finds fewer than two coprime factors.
inline std::optional<std::vector<Poly>> crt_idempotent_polys(const Poly& p) {
    Factorization f = factor_small(p);
    std::vector<Poly> parts;
    for (const auto& [q, m] : f.factors) {
        Poly power = Poly::constant(1);
        for (int k = 0; k < m; ++k) power = power * q;
        parts.push_back(power);
    }
    if (f.remainder.degree() > 0) parts.push_back(f.remainder);
    if (parts.size() < 2) return std::nullopt;
    std::vector<Poly> out;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        Poly rest = Poly::constant(1);
        for (std::size_t k = 0; k < parts.size(); ++k)
            if (k != j) rest = rest * parts[k];
        Bezout b = extended_gcd(rest, parts[j]);
        if (b.g.degree() != 0) throw std::logic_error("crt: factors are not coprime");
        out.push_back(divmod(b.s * rest, p).remainder);
    }
    return out;
}

inline std::vector<Vec> standard_basis(const FDAlgebra& a) {
    std::vector<Vec> out;
    for (std::size_t k = 0; k < a.dim(); ++k) out.push_back(a.basis_vector(k));
    return out;
}

inline Subspace left_ideal_span(const FDAlgebra& a, const Vec& e, const std::vector<Vec>& vectors) {
    std::vector<Vec> rows;
    for (const auto& v : vectors) rows.push_back(a.mul(e, v));
    return Subspace::span(rows, a.dim());
}

inline Subspace corner_span(const FDAlgebra& a, const Vec& e) {
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < a.dim(); ++k) rows.push_back(a.mul(a.mul(e, a.basis_vector(k)), e));
    return Subspace::span(rows, a.dim());
}

}  // namespace detail

/// One summand of a split commutative semisimple subalgebra.
struct CentralPiece {
    Vec idempotent;
    bool primitive = true;  // e*Z is one-dimensional
    Poly field_poly;        // when not primitive: minimal polynomial of a generator (zero if unknown)
};

/// Splits the unit of the commutative semisimple subalgebra spanned by z_basis into
/// primitive idempotents, using CRT idempotents of factored minimal polynomials.
inline std::vector<CentralPiece> split_commutative(const FDAlgebra& a, const std::vector<Vec>& z_basis, const Vec& unit,
                                                   const AnalysisConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::deque<Vec> work{unit};
    std::vector<CentralPiece> done;
    while (!work.empty()) {
        Vec e = work.front();
        work.pop_front();
        Subspace ze = detail::left_ideal_span(a, e, z_basis);
        if (ze.dim() <= 1) {
            done.push_back({e, true, {}});
            continue;
        }
        std::optional<std::vector<Vec>> split;
        Poly field;
        detail::for_each_candidate(ze.basis_vectors(), cfg, rng, [&](const Vec& y) {
            Poly p = minimal_polynomial(a, y, e);
            if (auto hs = detail::crt_idempotent_polys(p)) {
                split.emplace();
                for (const auto& h : *hs) split->push_back(evaluate(a, h, y, e));
                return true;
            }
            if (static_cast<std::size_t>(p.degree()) == ze.dim()) {
                field = p;
                return p.degree() == 2;  // root-free quadratic: certified field
            }
            return false;
        });
        if (split)
            for (auto& piece : *split) work.push_back(std::move(piece));
        else
            done.push_back({e, false, field});
    }
    return done;
}

inline Vec newton_idempotent(const FDAlgebra& a, Vec x) {
    for (int iter = 0; iter < 64; ++iter) {
        Vec x2 = a.mul(x, x);
        if (x2 == x) return x;
        Vec x3 = a.mul(x2, x);
        x = scaled(Scalar(3), x2) - scaled(Scalar(2), x3);
    }
    throw std::logic_error("idempotent lifting did not terminate");
}

// ---------------------------------------------------------------- blocks

enum class BlockKind { MatrixOverBase, FieldExtension, CentralSimpleUndetermined, LocalCommutative, NonSemisimple };

inline std::string kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::MatrixOverBase: return "matrix-over-base";
        case BlockKind::FieldExtension: return "field-extension";
        case BlockKind::CentralSimpleUndetermined: return "central-simple-undetermined";
        case BlockKind::LocalCommutative: return "local-commutative";
        case BlockKind::NonSemisimple: return "non-semisimple";
    }
    return "?";
}

struct Block {
    std::size_t dim = 0;
    Vec idempotent;
    BlockKind kind = BlockKind::MatrixOverBase;
    std::size_t matrix_size = 0;              // MatrixOverBase
    Poly center_poly;                         // FieldExtension (zero when unknown)
    std::vector<std::size_t> radical_layers;  // LocalCommutative, NonSemisimple
    std::size_t simple_count = 1;             // simple modules of the block

    bool central_simple() const {
        return kind == BlockKind::MatrixOverBase || kind == BlockKind::CentralSimpleUndetermined;
    }
};

struct BlockReport {
    std::vector<Block> blocks;
    std::size_t radical_dim = 0;

    std::size_t count() const { return blocks.size(); }
    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        for (const auto& b : blocks) out.push_back(b.dim);
        return out;
    }
    std::size_t simple_count() const {
        std::size_t s = 0;
        for (const auto& b : blocks) s += b.simple_count;
        return s;
    }
    bool has_nonsplit() const {
        return std::any_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.kind == BlockKind::FieldExtension; });
    }
};

/// n when a central simple algebra is certified to be M_n over the base field: repeatedly
/// finds a nontrivial idempotent and descends into its corner until the corner is the field.
inline std::optional<std::size_t> certify_matrix_algebra(const FDAlgebra& b, const AnalysisConfig& cfg) {
    const std::size_t d = b.dim();
    std::size_t n = 1;
    while (n * n < d) ++n;
    if (n * n != d) return std::nullopt;
    std::mt19937_64 rng(cfg.seed);
    FDAlgebra current = b;
    while (current.dim() > 1) {
        std::optional<Vec> idem;
        std::vector<Vec> basis;
        for (std::size_t k = 0; k < current.dim(); ++k) basis.push_back(current.basis_vector(k));
        detail::for_each_candidate(basis, cfg, rng, [&](const Vec& y) {
            auto hs = detail::crt_idempotent_polys(minimal_polynomial(current, y));
            if (!hs) return false;
            idem = evaluate(current, hs->front(), y, current.unit());
            return true;
        });
        if (!idem) return std::nullopt;
        Vec other = current.unit() - *idem;
        Subspace c1 = detail::corner_span(current, *idem), c2 = detail::corner_span(current, other);
        const bool first = c1.dim() <= c2.dim();
        current = subalgebra(current, first ? c1 : c2, first ? *idem : other).algebra;
    }
    return n;
}

namespace detail {

inline Block describe_block(const FDAlgebra& algebra, const std::vector<CentralPiece>& pieces, const Vec& idem,
                            const AnalysisConfig& cfg) {
    Block blk;
    blk.dim = algebra.dim();
    blk.idempotent = idem;
    blk.simple_count = pieces.size();
    Subspace j = radical(algebra);
    if (!j.is_zero()) {
        blk.radical_layers = radical_layers(algebra, j);
        const bool local = algebra.dim() - j.dim() == 1;
        blk.kind = local && algebra.is_commutative() ? BlockKind::LocalCommutative : BlockKind::NonSemisimple;
        return blk;
    }
    const CentralPiece& piece = pieces.front();
    if (!piece.primitive) {
        blk.kind = BlockKind::FieldExtension;
        blk.center_poly = piece.field_poly;
        return blk;
    }
    if (auto n = certify_matrix_algebra(algebra, cfg)) {
        blk.kind = BlockKind::MatrixOverBase;
        blk.matrix_size = *n;
    } else {
        blk.kind = BlockKind::CentralSimpleUndetermined;
    }
    return blk;
}

}  // namespace detail

/// Ungraded block decomposition: split the center of a/J, lift the idempotents along J
/// (Newton iteration in successive corners), and group the lifts into connected blocks.
inline BlockReport block_decompose(const FDAlgebra& input, const AnalysisConfig& cfg = {}) {
    const FDAlgebra a = ungraded(input);
    BlockReport report;
    const Subspace j = radical(a);
    report.radical_dim = j.dim();
    QuotientView q = quotient(a, j);
    const auto pieces = split_commutative(q.algebra, center(q.algebra).basis_vectors(), q.algebra.unit(), cfg);

    std::vector<Vec> lifted;
    Vec rest = a.unit();
    for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
        Vec x = a.mul(a.mul(rest, q.lift(pieces[k].idempotent)), rest);
        Vec e = newton_idempotent(a, x);
        if (q.project(e) != pieces[k].idempotent) throw std::logic_error("lifted idempotent has the wrong image");
        lifted.push_back(e);
        rest = rest - e;
    }
    lifted.push_back(rest);

    // connected components of the relation e_i a e_k != 0
    const std::size_t m = lifted.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            if (s == t || root(s) == root(t)) continue;
            for (std::size_t b = 0; b < a.dim(); ++b)
                if (!is_zero(a.mul(a.mul(lifted[s], a.basis_vector(b)), lifted[t]))) {
                    parent[root(s)] = root(t);
                    break;
                }
        }
    std::vector<std::size_t> roots;
    for (std::size_t s = 0; s < m; ++s)
        if (std::find(roots.begin(), roots.end(), root(s)) == roots.end()) roots.push_back(root(s));

    std::size_t total = 0;
    for (auto r : roots) {
        Vec e(a.dim());
        std::vector<CentralPiece> members;
        for (std::size_t s = 0; s < m; ++s)
            if (root(s) == r) {
                e = e + lifted[s];
                members.push_back(pieces[s]);
            }
        for (std::size_t b = 0; b < a.dim(); ++b)
            if (a.mul(e, a.basis_vector(b)) != a.mul(a.basis_vector(b), e))
                throw std::logic_error("block idempotent is not central");
        SubalgebraView view = subalgebra(a, detail::left_ideal_span(a, e, detail::standard_basis(a)), e);
        report.blocks.push_back(detail::describe_block(view.algebra, members, e, cfg));
        total += view.algebra.dim();
    }
    if (total != a.dim()) throw std::logic_error("block dimensions do not add up");
    return report;
}

// ---------------------------------------------------------------- graded structure

/// E1 E1 = E0.
inline bool strongly_graded(const FDAlgebra& a) {
    std::vector<Vec> odd, even;
    for (auto k : a.basis_of_degree(1)) odd.push_back(a.basis_vector(k));
    for (auto k : a.basis_of_degree(0)) even.push_back(a.basis_vector(k));
    Subspace o = Subspace::span(odd, a.dim());
    return product_space(a, o, o) == Subspace::span(even, a.dim());
}

enum class GradedType { Type0, Type1, UndeterminedNonSplit };

inline std::string graded_type_name(GradedType t) {
    switch (t) {
        case GradedType::Type0: return "type-0";
        case GradedType::Type1: return "type-1";
        case GradedType::UndeterminedNonSplit: return "undetermined-nonsplit";
    }
    return "?";
}

struct GradedTypeResult {
    GradedType type = GradedType::UndeterminedNonSplit;
    BlockReport degree0;  // blocks of the degree-0 part
};

/// Division type of a graded simple algebra from the blocks of its degree-0 part:
/// one central simple block -> matrices over the group algebra (type 1), two -> matrices
/// over the graded base field (type 0). A trivially graded algebra is type 0.
inline GradedTypeResult graded_simple_type(const FDAlgebra& s, const AnalysisConfig& cfg = {}) {
    GradedTypeResult out;
    if (s.basis_of_degree(1).empty()) {
        out.degree0 = block_decompose(s, cfg);
        if (out.degree0.count() != 1 || out.degree0.radical_dim != 0)
            throw std::invalid_argument("graded_simple_type: input is not graded simple");
        out.type = out.degree0.has_nonsplit() ? GradedType::UndeterminedNonSplit : GradedType::Type0;
        return out;
    }
    out.degree0 = block_decompose(degree_part(s, 0).algebra, cfg);
    if (out.degree0.radical_dim != 0) throw std::invalid_argument("graded_simple_type: degree-0 part is not semisimple");
    if (out.degree0.has_nonsplit()) {
        out.type = GradedType::UndeterminedNonSplit;
        return out;
    }
    const bool all_simple = std::all_of(out.degree0.blocks.begin(), out.degree0.blocks.end(),
                                        [](const Block& b) { return b.central_simple(); });
    if (all_simple && out.degree0.count() == 1)
        out.type = GradedType::Type1;
    else if (all_simple && out.degree0.count() == 2)
        out.type = GradedType::Type0;
    else
        throw std::invalid_argument("graded_simple_type: input is not graded simple");
    return out;
}

struct GradedBlock {
    Vec idempotent;
    SubalgebraView view;  // graded block algebra with unit = idempotent
    GradedTypeResult type;
};

struct GradedBlockReport {
    std::vector<GradedBlock> blocks;
    bool center_split = true;  // false when Z(a)_0 has a summand that did not split
};

/// Graded blocks from the primitive idempotents of Z(a) n a_0. Requires J(a) = 0.
inline GradedBlockReport graded_block_decompose(const FDAlgebra& a, const AnalysisConfig& cfg = {}) {
    if (!radical(a).is_zero()) throw GradedNotSemisimple("graded_block_decompose: graded radical is nonzero");
    std::vector<Vec> even;
    for (auto k : a.basis_of_degree(0)) even.push_back(a.basis_vector(k));
    Subspace z0 = intersect(center(a), Subspace::span(even, a.dim()));
    GradedBlockReport out;
    for (const auto& piece : split_commutative(a, z0.basis_vectors(), a.unit(), cfg)) {
        GradedBlock gb;
        gb.idempotent = piece.idempotent;
        gb.view = subalgebra(a, detail::left_ideal_span(a, piece.idempotent, detail::standard_basis(a)), piece.idempotent);
        if (piece.primitive) {
            gb.type = graded_simple_type(gb.view.algebra, cfg);
        } else {
            out.center_split = false;
            gb.type.type = GradedType::UndeterminedNonSplit;
        }
        out.blocks.push_back(std::move(gb));
    }
    return out;
}

// ---------------------------------------------------------------- Xi

struct XiIsomorphism {
    FDAlgebra source;  // degree-0 part of E (x)^ kG
    FDAlgebra target;  // E with the grading forgotten
    std::vector<Vec> images;
    IsomorphismCheck check;
};

/// (E (x)^ kG)_0 -> E: a (x) s -> i*a for odd a, a (x) 1 -> a for even a.
inline XiIsomorphism xi_isomorphism(const FDAlgebra& e) {
    FDAlgebra t = twisted_tensor(e, group_algebra_z2());
    SubalgebraView d = degree_part(t, 0);
    XiIsomorphism out;
    out.source = d.algebra;
    out.target = ungraded(e);
    for (std::size_t r = 0; r < d.span.dim(); ++r) {
        const std::size_t idx = d.span.pivots()[r];
        const std::size_t k = idx / 2;
        out.images.push_back(idx % 2 == 0 ? e.basis_vector(k) : scaled(Scalar::i(), e.basis_vector(k)));
    }
    out.check = check_isomorphism(out.source, out.target, out.images);
    if (!out.check.ok()) throw std::logic_error("xi_isomorphism: verification failed");
    return out;
}

// ---------------------------------------------------------------- G-elements

struct GElement {
    Vec value;
    std::size_t iterations = 0;
};

/// Lifts x with x^2 - 1 in a nilpotent ideal I to u with u^2 = 1 via x <- x(1 - r/2), r = x^2 - 1.
inline GElement lift_g_element(const FDAlgebra& a, const Subspace& ideal, Vec x) {
    auto deg = a.degree_of(x);
    if (is_zero(x) || !deg || *deg != 1) throw std::invalid_argument("lift_g_element: x is not homogeneous of degree 1");
    if (!nilpotency_index(a, ideal)) throw std::invalid_argument("lift_g_element: ideal is not nilpotent");
    Vec r = a.mul(x, x) - a.unit();
    if (!ideal.contains(r)) throw std::invalid_argument("lift_g_element: x^2 - 1 is not in the ideal");
    GElement out;
    const Scalar half = Scalar(mpq_class(1, 2));
    while (!is_zero(r)) {
        x = x - scaled(half, a.mul(x, r));
        r = a.mul(x, x) - a.unit();
        if (++out.iterations > 64) throw std::logic_error("lift_g_element: iteration did not terminate");
    }
    out.value = std::move(x);
    return out;
}

/// Finds a degree-1 u with u^2 = 1: one per graded block of E/J (w^2 = c * 1 rescaled by sqrt c),
/// then lifted along J.
inline GElement find_g_element(const FDAlgebra& a, const AnalysisConfig& cfg = {}) {
    const Subspace j = radical(a);
    QuotientView q = quotient(a, j);
    GradedBlockReport gb = graded_block_decompose(q.algebra, cfg);
    std::mt19937_64 rng(cfg.seed);
    Vec u(q.algebra.dim());
    for (const auto& blk : gb.blocks) {
        const FDAlgebra& b = blk.view.algebra;
        std::vector<Vec> odd;
        for (auto k : b.basis_of_degree(1)) odd.push_back(b.basis_vector(k));
        std::size_t unit_pos = 0;
        while (b.unit()[unit_pos].is_zero()) ++unit_pos;
        std::optional<Vec> found;
        detail::for_each_candidate(odd, cfg, rng, [&](const Vec& w) {
            Vec w2 = b.mul(w, w);
            Scalar c = w2[unit_pos] / b.unit()[unit_pos];
            if (c.is_zero() || w2 != scaled(c, b.unit())) return false;
            auto root = sqrt_exact(c);
            if (!root) return false;
            found = scaled(root->inverse(), w);
            return true;
        });
        if (!found) throw std::domain_error("find_g_element: no G-element in a graded block of the semisimple quotient");
        u = u + blk.view.embed(*found);
    }
    return lift_g_element(a, j, q.lift(u));
}

// ---------------------------------------------------------------- copies

struct CopyDecomposition {
    GElement g;
    Vec e_plus, e_minus;
    SubalgebraView plus, minus, degree0;
    bool idempotents_ok = false;
    IsomorphismCheck iso_plus, iso_minus;
    bool ok() const { return idempotents_ok && iso_plus.ok() && iso_minus.ok(); }
};

/// A commutative strongly graded algebra splits as A0 x A0 via e = (1 +- g)/2.
inline CopyDecomposition copy_decomposition(const FDAlgebra& a, const AnalysisConfig& cfg = {}) {
    if (!a.is_commutative()) throw std::invalid_argument("copy_decomposition: algebra is not commutative");
    if (!strongly_graded(a)) throw std::invalid_argument("copy_decomposition: algebra is not strongly graded");
    CopyDecomposition out;
    out.g = find_g_element(a, cfg);
    const Scalar half = Scalar(mpq_class(1, 2));
    out.e_plus = scaled(half, a.unit() + out.g.value);
    out.e_minus = scaled(half, a.unit() - out.g.value);
    out.idempotents_ok = a.mul(out.e_plus, out.e_plus) == out.e_plus && a.mul(out.e_minus, out.e_minus) == out.e_minus &&
                         is_zero(a.mul(out.e_plus, out.e_minus)) && out.e_plus + out.e_minus == a.unit();
    out.plus = subalgebra(a, detail::left_ideal_span(a, out.e_plus, detail::standard_basis(a)), out.e_plus);
    out.minus = subalgebra(a, detail::left_ideal_span(a, out.e_minus, detail::standard_basis(a)), out.e_minus);
    out.degree0 = degree_part(a, 0);
    std::vector<Vec> ip, im;
    for (const auto& b : out.degree0.span.basis_vectors()) {
        ip.push_back(out.plus.restrict(a.mul(b, out.e_plus)));
        im.push_back(out.minus.restrict(a.mul(b, out.e_minus)));
    }
    const FDAlgebra a0 = ungraded(out.degree0.algebra);
    out.iso_plus = check_isomorphism(a0, ungraded(out.plus.algebra), ip);
    out.iso_minus = check_isomorphism(a0, ungraded(out.minus.algebra), im);
    return out;
}

// ---------------------------------------------------------------- classification

enum class Verdict { SimpleType0, SimpleType1, GradedSemisimpleNotSimple, NotGradedSemisimple, UndeterminedNonSplit };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SimpleType0: return "simple-0-type";
        case Verdict::SimpleType1: return "simple-1-type";
        case Verdict::GradedSemisimpleNotSimple: return "graded-semisimple-not-simple";
        case Verdict::NotGradedSemisimple: return "not-graded-semisimple";
        case Verdict::UndeterminedNonSplit: return "undetermined-nonsplit";
    }
    return "?";
}

struct GradedBlockSummary {
    std::size_t dim = 0;
    GradedType type = GradedType::UndeterminedNonSplit;
    BlockReport degree0;
};

struct ClassificationReport {
    Verdict verdict = Verdict::UndeterminedNonSplit;
    std::size_t dim = 0;
    std::size_t radical_dim = 0;
    bool strongly_graded = false;
    std::vector<GradedBlockSummary> graded_blocks;  // empty unless graded semisimple
    BlockReport degree0;                            // blocks of the degree-0 part
    std::size_t degree0_simple_count = 0;           // simple modules of the degree-0 part
};

inline ClassificationReport classify(const FDAlgebra& c, const AnalysisConfig& cfg = {}) {
    ClassificationReport r;
    r.dim = c.dim();
    r.radical_dim = radical(c).dim();
    r.strongly_graded = strongly_graded(c);
    r.degree0 = block_decompose(degree_part(c, 0).algebra, cfg);
    r.degree0_simple_count = r.degree0.simple_count();
    if (r.radical_dim > 0) {
        r.verdict = Verdict::NotGradedSemisimple;
        return r;
    }
    GradedBlockReport gb = graded_block_decompose(c, cfg);
    for (const auto& b : gb.blocks) r.graded_blocks.push_back({b.view.algebra.dim(), b.type.type, b.type.degree0});
    const bool undetermined = !gb.center_split || std::any_of(r.graded_blocks.begin(), r.graded_blocks.end(), [](const auto& b) {
                                  return b.type == GradedType::UndeterminedNonSplit;
                              });
    if (r.graded_blocks.size() == 1 && !undetermined)
        r.verdict = r.graded_blocks[0].type == GradedType::Type0 ? Verdict::SimpleType0 : Verdict::SimpleType1;
    else if (undetermined && r.graded_blocks.size() == 1)
        r.verdict = Verdict::UndeterminedNonSplit;
    else if (!gb.center_split)
        r.verdict = Verdict::UndeterminedNonSplit;
    else
        r.verdict = Verdict::GradedSemisimpleNotSimple;
    return r;
}

/// Number of blocks of the degree-0 part (simple objects of the stable category up to shift).
inline std::size_t mcm_simple_count(const ClassificationReport& r) {
    if (r.verdict == Verdict::NotGradedSemisimple)
        throw std::domain_error("mcm_simple_count: Clifford deformation is not graded semisimple");
    return r.degree0.count();
}

/// Multiset over graded blocks of (division type, degree-0 matrix sizes) with the sizes
/// divided by their common gcd, plus the mcm count.
struct MoritaInvariant {
    std::vector<std::pair<std::string, std::vector<std::size_t>>> blocks;
    std::size_t mcm_count = 0;
    friend bool operator==(const MoritaInvariant&, const MoritaInvariant&) = default;
    std::vector<std::string> types() const {
        std::vector<std::string> out;
        for (const auto& b : blocks) out.push_back(b.first);
        return out;
    }
};

inline MoritaInvariant graded_morita_invariant(const ClassificationReport& r) {
    MoritaInvariant inv;
    std::size_t g = 0;
    for (const auto& gb : r.graded_blocks) {
        std::string type = gb.type == GradedType::Type0 ? "base" : gb.type == GradedType::Type1 ? "group" : "nonsplit";
        std::vector<std::size_t> sizes;
        for (const auto& b : gb.degree0.blocks) {
            const std::size_t s = b.kind == BlockKind::MatrixOverBase ? b.matrix_size : b.dim;
            sizes.push_back(s);
            g = std::gcd(g, s);
        }
        inv.blocks.emplace_back(type, sizes);
    }
    for (auto& [type, sizes] : inv.blocks) {
        for (auto& s : sizes) s /= std::max<std::size_t>(g, 1);
        std::sort(sizes.begin(), sizes.end());
    }
    std::sort(inv.blocks.begin(), inv.blocks.end());
    inv.mcm_count = mcm_simple_count(r);
    return inv;
}

}  // namespace quadrics
