#pragma once

// Quadric hypersurfaces A/(f): the end-to-end analysis through C_{A^!}(theta_f), tensor
// quadrics and their Clifford algebras, double branch covers, and the conic family.

#include "clifford.hpp"
#include "config.hpp"
#include "dsl.hpp"
#include "gradedalg.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadrics {

class NotCentral : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotRegular : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A failure inside analyze(), tagged with the pipeline stage.
class AnalysisError : public std::runtime_error {
public:
    AnalysisError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

using Witness = std::vector<std::pair<LinearForm, LinearForm>>;

struct QuadricInput {
    QuadraticPresentation algebra;
    CentralElement f;
    std::string label;
    Witness witness;
    std::size_t regularity_degree = 0;  // Hilbert-series certificate checked up to this degree
};

/// Checks centrality (always) and regularity up to cfg.regularity_degree.
inline QuadricInput make_quadric(QuadraticPresentation algebra, CentralElement f, std::string label,
                                 const AnalysisConfig& cfg = {}, Witness witness = {}) {
    if (!algebra.is_homogeneous()) throw std::invalid_argument("make_quadric: algebra must be homogeneous quadratic");
    if (f.lift.size() != algebra.num_gens() * algebra.num_gens())
        throw std::invalid_argument("make_quadric: central element does not live in V(x)V");
    if (!is_central_upto(complete(algebra, 3), f)) throw NotCentral("f = " + QuadraticPresentation::to_free_poly(f.lift, algebra.num_gens()).to_string(algebra.gens()) + " is not central");
    if (algebra.relation_space().contains(f.lift)) throw NotRegular("f is zero in A");
    if (cfg.regularity_degree > 0 && !is_regular_upto(algebra, f, cfg.regularity_degree))
        throw NotRegular("f is not regular up to degree " + std::to_string(cfg.regularity_degree));
    for (const auto& [u, v] : witness)
        if (u.coeffs.size() != algebra.num_gens() || v.coeffs.size() != algebra.num_gens())
            throw std::invalid_argument("make_quadric: witness has the wrong number of coordinates");
    return {std::move(algebra), std::move(f), std::move(label), std::move(witness), cfg.regularity_degree};
}

inline QuadricInput quadric_from_source(const SourceModel& m, std::string label, const AnalysisConfig& cfg = {}) {
    if (!m.central) throw std::invalid_argument("input has no central element");
    if (m.z2_graded) throw std::invalid_argument("quadric input must not declare 'grading z2'");
    return make_quadric(m.presentation(), *m.central, std::move(label), cfg, m.witness);
}

namespace detail {

inline CentralElement central_from_string(const QuadraticPresentation& a, const std::string& expr) {
    const FreePoly p = parse_polynomial(expr, a.gens());
    const std::size_t n = a.num_gens();
    Vec lift(n * n);
    for (const auto& [w, c] : p.terms()) {
        if (w.size() != 2) throw std::invalid_argument("central element must be quadratic");
        lift[static_cast<unsigned char>(w[0]) * n + static_cast<unsigned char>(w[1])] = c;
    }
    return {"f", lift};
}

inline QuadraticPresentation presentation_from_strings(const std::vector<std::string>& gens,
                                                       const std::vector<std::string>& rels) {
    std::string src = "gens";
    for (const auto& g : gens) src += " " + g;
    src += ";";
    for (const auto& r : rels) src += " rel " + r + ";";
    return parse_source(src).presentation();
}

// k[x_1..x_n] (commuting generators)
inline QuadraticPresentation polynomial_ring(const std::vector<std::string>& gens, const Scalar& q = Scalar(1)) {
    const std::size_t n = gens.size();
    std::vector<Vec> rels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec r(n * n);
            r[i * n + j] = Scalar(1);
            r[j * n + i] = -q;
            rels.push_back(std::move(r));
        }
    return QuadraticPresentation::homogeneous(gens, rels);
}

inline Vec sum_of_squares(std::size_t n, const std::vector<Scalar>& coeffs) {
    Vec lift(n * n);
    for (std::size_t i = 0; i < n; ++i) lift[i * n + i] = coeffs[i];
    return lift;
}

inline std::string fresh_name(const std::vector<std::string>& taken, std::set<std::string>& also) {
    for (int k = 0; k < 100; ++k) {
        for (std::string base : {"w", "t", "s", "r"}) {
            std::string name = k == 0 ? base : base + std::to_string(k);
            if (std::find(taken.begin(), taken.end(), name) == taken.end() && !also.count(name)) {
                also.insert(name);
                return name;
            }
        }
    }
    throw std::logic_error("no fresh generator name");
}

}  // namespace detail

// ---------------------------------------------------------------- corpus

namespace corpus {

/// k[x,y], f = x^2 + y^2.
inline QuadricInput plane_sum_of_squares(const AnalysisConfig& cfg = {}) {
    auto a = detail::polynomial_ring({"x", "y"});
    return make_quadric(a, {"f", detail::sum_of_squares(2, {1, 1})}, "k[x,y]/(x^2+y^2)", cfg);
}

/// k_{-1}[x,y], f = x^2 + y^2.
inline QuadricInput skew_plane_sum_of_squares(const AnalysisConfig& cfg = {}) {
    auto a = detail::polynomial_ring({"x", "y"}, Scalar(-1));
    return make_quadric(a, {"f", detail::sum_of_squares(2, {1, 1})}, "k_{-1}[x,y]/(x^2+y^2)", cfg);
}

/// k[x], f = x^2 (or any generator name).
inline QuadricInput line_square(const std::string& name = "x", const AnalysisConfig& cfg = {}) {
    auto a = QuadraticPresentation::homogeneous({name}, {});
    return make_quadric(a, {"f", Vec{Scalar(1)}}, "k[" + name + "]/(" + name + "^2)", cfg);
}

/// Commutative conics k[x,y,z]/(x^2), /(x^2+y^2), /(x^2+y^2+z^2) for rows 1..3.
inline QuadricInput commutative_conic_row(int row, const AnalysisConfig& cfg = {}) {
    if (row < 1 || row > 3) throw std::invalid_argument("commutative_conic_row: row must be 1, 2 or 3");
    std::vector<Scalar> c{Scalar(1), Scalar(row >= 2 ? 1 : 0), Scalar(row >= 3 ? 1 : 0)};
    static const char* labels[] = {"k[x,y,z]/(x^2)", "k[x,y,z]/(x^2+y^2)", "k[x,y,z]/(x^2+y^2+z^2)"};
    return make_quadric(detail::polynomial_ring({"x", "y", "z"}), {"f", detail::sum_of_squares(3, c)}, labels[row - 1], cfg);
}

/// Five generators with mixed commuting/anticommuting pairs, f = sum of squares.
inline QuadricInput five_generators(const AnalysisConfig& cfg = {}) {
    auto a = detail::presentation_from_strings(
        {"x1", "x2", "x3", "x4", "x5"},
        {"x1*x2 - x2*x1", "x1*x3 + x3*x1", "x1*x4 + x4*x1", "x1*x5 + x5*x1", "x2*x3 - x3*x2", "x2*x4 + x4*x2",
         "x2*x5 + x5*x2", "x3*x4 - x4*x3", "x3*x5 + x5*x3", "x4*x5 + x5*x4"});
    return make_quadric(a, {"f", detail::sum_of_squares(5, {1, 1, 1, 1, 1})}, "five-generator quadric", cfg);
}

}  // namespace corpus

// ---------------------------------------------------------------- conics

enum class ConicFamily { Skew, Commutative };

/// Skew: S^(alpha,beta,gamma) = k<x,y,z>/(yz+zy+alpha x^2, zx+xz+beta y^2, xy+yx+gamma z^2).
/// Commutative: k[x,y,z] (alpha = beta = gamma = 0 required). f = a x^2 + b y^2 + c z^2.
struct ConicParams {
    ConicFamily family = ConicFamily::Skew;
    Scalar alpha, beta, gamma;
    Scalar a, b, c;

    std::string label() const {
        auto s = [](const Scalar& v) { return v.to_string(); };
        const std::string f = "(" + s(a) + ")x^2+(" + s(b) + ")y^2+(" + s(c) + ")z^2";
        if (family == ConicFamily::Commutative) return "k[x,y,z]/(" + f + ")";
        return "S^(" + s(alpha) + "," + s(beta) + "," + s(gamma) + ")/(" + f + ")";
    }
};

inline std::string family_name(ConicFamily f) { return f == ConicFamily::Skew ? "skew" : "commutative"; }

inline QuadraticPresentation conic_algebra(const ConicParams& p) {
    if (p.family == ConicFamily::Commutative) {
        if (!p.alpha.is_zero() || !p.beta.is_zero() || !p.gamma.is_zero())
            throw std::invalid_argument("conic: the commutative family has alpha = beta = gamma = 0");
        return detail::polynomial_ring({"x", "y", "z"});
    }
    const std::size_t n = 3;
    auto e = [](std::size_t i, std::size_t j) { return i * 3 + j; };
    std::vector<Vec> rels(3, Vec(n * n));
    // x = 0, y = 1, z = 2
    rels[0][e(1, 2)] = rels[0][e(2, 1)] = Scalar(1);
    rels[0][e(0, 0)] = p.alpha;
    rels[1][e(2, 0)] = rels[1][e(0, 2)] = Scalar(1);
    rels[1][e(1, 1)] = p.beta;
    rels[2][e(0, 1)] = rels[2][e(1, 0)] = Scalar(1);
    rels[2][e(2, 2)] = p.gamma;
    return QuadraticPresentation::homogeneous({"x", "y", "z"}, rels);
}

/// Throws NotCentral / NotRegular for parameter points outside the family's hypothesis.
inline QuadricInput conic(const ConicParams& p, const AnalysisConfig& cfg = {}, Witness witness = {}) {
    if (p.a.is_zero() && p.b.is_zero() && p.c.is_zero()) throw std::invalid_argument("conic: (a,b,c) must be nonzero");
    return make_quadric(conic_algebra(p), {"f", detail::sum_of_squares(3, {p.a, p.b, p.c})}, p.label(), cfg,
                        std::move(witness));
}

namespace corpus {

/// S^(1,1,0) with f = 3x^2 + 3y^2 + 4z^2 and the witness f = (-x - y + 2z)^2.
inline QuadricInput worked_conic(const AnalysisConfig& cfg = {}) {
    ConicParams p{ConicFamily::Skew, Scalar(1), Scalar(1), Scalar(0), Scalar(3), Scalar(3), Scalar(4)};
    LinearForm l{Vec{Scalar(-1), Scalar(-1), Scalar(2)}};
    return conic(p, cfg, {{l, l}});
}

}  // namespace corpus

// ---------------------------------------------------------------- analysis

struct AnalysisReport {
    std::string label;
    QuadraticPresentation algebra;
    CentralElement f;
    QuadraticPresentation dual;
    Vec theta;                   // on the canonical basis of the dual relation space
    FDAlgebra clifford;          // C_{A^!}(theta_f)
    std::size_t clifford_dim = 0, even_dim = 0, odd_dim = 0;
    std::size_t dual_dim = 0;    // dim A^!
    bool dim_is_power_of_two = false;  // dim C = 2^n
    CliffordChecks checks;
    ClassificationReport classification;
    std::optional<std::size_t> mcm_count;  // absent unless graded semisimple
    BlockReport ungraded;                  // blocks of C with the grading forgotten
    std::size_t ungraded_block_count = 0;
    std::size_t regularity_degree = 0;
};

inline AnalysisReport analyze(const QuadricInput& q, const AnalysisConfig& cfg = {}) {
    AnalysisReport r;
    r.label = q.label;
    r.algebra = q.algebra;
    r.f = q.f;
    r.regularity_degree = q.regularity_degree;
    auto stage = [](const char* name, auto&& fn) {
        try {
            return fn();
        } catch (const AnalysisError&) {
            throw;
        } catch (const std::exception& e) {
            throw AnalysisError(name, e.what());
        }
    };
    CliffordMap theta = stage("theta", [&] { return theta_from_central(q.algebra, q.f); });
    r.dual = theta.source;
    r.theta = theta.values;
    CliffordAlgebraResult c = stage("deformation", [&] { return clifford_deformation(theta, cfg); });
    r.clifford = c.algebra;
    r.checks = c.checks;
    r.dual_dim = c.source_dim;
    r.clifford_dim = c.algebra.dim();
    r.even_dim = c.algebra.basis_of_degree(0).size();
    r.odd_dim = c.algebra.basis_of_degree(1).size();
    r.dim_is_power_of_two = r.clifford_dim == (std::size_t{1} << q.algebra.num_gens());
    r.classification = stage("classify", [&] { return classify(c.algebra, cfg); });
    if (r.classification.verdict != Verdict::NotGradedSemisimple) r.mcm_count = mcm_simple_count(r.classification);
    r.ungraded = stage("blocks", [&] { return block_decompose(c.algebra, cfg); });
    r.ungraded_block_count = r.ungraded.count();
    return r;
}

// ---------------------------------------------------------------- tensor quadrics

/// (A (x) B, f + g).
inline QuadricInput tensor_quadric(const QuadricInput& p, const QuadricInput& q, const AnalysisConfig& cfg = {}) {
    QuadraticPresentation t = tensor_presentation(p.algebra, q.algebra);
    const std::size_t n = p.algebra.num_gens(), m = q.algebra.num_gens(), total = n + m;
    Vec lift = detail::embed_square(p.f.lift, n, 0, total) + detail::embed_square(q.f.lift, m, n, total);
    try {
        return make_quadric(std::move(t), {"h", lift}, "(" + p.label + ") (x) (" + q.label + ")", cfg);
    } catch (const NotCentral& e) {
        throw std::logic_error(std::string("tensor_quadric: f + g not central: ") + e.what());
    }
}

struct TensorCheck {
    bool ok = false;
    bool presentations_equal = false;  // C-presentation of the tensor = twisted tensor of the C-presentations
    std::size_t lhs_dim = 0, rhs_dim = 0;
    IsomorphismCheck iso;
    std::string detail;
};

/// C_{(A(x)B)^!}(theta_h) against C_{A^!}(theta_f) (x)^ C_{B^!}(theta_g), matched on generators.
inline TensorCheck verify_tensor_decomposition(const QuadricInput& p, const QuadricInput& q, const AnalysisConfig& cfg = {}) {
    TensorCheck out;
    const QuadricInput t = tensor_quadric(p, q, cfg);
    const CliffordMap tp = theta_from_central(t.algebra, t.f), tf = theta_from_central(p.algebra, p.f),
                      tg = theta_from_central(q.algebra, q.f);
    out.presentations_equal =
        same_canonical_form(clifford_presentation(tp), twisted_tensor(clifford_presentation(tf), clifford_presentation(tg)));
    const std::size_t d_max = [&](std::size_t n) { return cfg.truncation ? cfg.truncation : default_truncation(n); }(t.algebra.num_gens());
    const RewriteSystem lhs_rs = complete(clifford_presentation(tp), d_max);
    const FDAlgebra lhs = multiplication_table(lhs_rs);
    const FDAlgebra cf = clifford_deformation(tf, cfg).algebra, cg = clifford_deformation(tg, cfg).algebra;
    const FDAlgebra rhs = twisted_tensor(cf, cg);
    out.lhs_dim = lhs.dim();
    out.rhs_dim = rhs.dim();
    if (out.lhs_dim != out.rhs_dim) {
        out.detail = "dimension mismatch: " + std::to_string(out.lhs_dim) + " vs " + std::to_string(out.rhs_dim);
        return out;
    }
    // generator k of the left side is X_k (x) 1 for k < n and 1 (x) Y_{k-n} otherwise
    const std::size_t n = p.algebra.num_gens();
    std::vector<Vec> gen_images;
    for (std::size_t k = 0; k < t.algebra.num_gens(); ++k) {
        Vec left = k < n ? cf.basis_vector(cf.label_index(tf.source.gens()[k])) : cf.unit();
        Vec right = k < n ? cg.unit() : cg.basis_vector(cg.label_index(tg.source.gens()[k - n]));
        Vec img(rhs.dim());
        for (std::size_t i = 0; i < cf.dim(); ++i)
            for (std::size_t j = 0; j < cg.dim(); ++j) img[i * cg.dim() + j] = left[i] * right[j];
        gen_images.push_back(std::move(img));
    }
    std::vector<Vec> images;
    for (const auto& level : normal_words(lhs_rs, lhs_rs.truncation_degree()))
        for (const auto& w : level) {
            Vec v = rhs.unit();
            for (char g : w) v = rhs.mul(v, gen_images[static_cast<unsigned char>(g)]);
            images.push_back(std::move(v));
        }
    out.iso = check_isomorphism(lhs, rhs, images);
    out.ok = out.iso.ok() && out.iso.graded && out.presentations_equal;
    if (!out.ok) out.detail = out.iso.ok() ? "presentations differ" : "generator matching is not an isomorphism";
    return out;
}

/// (A/(f))^# = A[w]/(f + w^2) with a fresh variable.
inline QuadricInput double_cover(const QuadricInput& q, const AnalysisConfig& cfg = {}) {
    std::set<std::string> used;
    QuadricInput line = corpus::line_square(detail::fresh_name(q.algebra.gens(), used), cfg);
    QuadricInput out = tensor_quadric(q, line, cfg);
    out.label = "(" + q.label + ")#";
    return out;
}

/// (A/(f))^## = A[u,v]/(f + u^2 + v^2).
inline QuadricInput double_double_cover(const QuadricInput& q, const AnalysisConfig& cfg = {}) {
    std::set<std::string> used;
    const std::string u = detail::fresh_name(q.algebra.gens(), used), v = detail::fresh_name(q.algebra.gens(), used);
    auto plane = make_quadric(detail::polynomial_ring({u, v}), {"g", detail::sum_of_squares(2, {1, 1})}, "plane", cfg);
    QuadricInput out = tensor_quadric(q, plane, cfg);
    out.label = "(" + q.label + ")##";
    return out;
}

struct KnorrerCheck {
    AnalysisReport original, covered;
    std::optional<MoritaInvariant> invariant_original, invariant_covered;
    bool applicable = false;  // both sides graded semisimple
    bool invariant_equal = false;
    bool mcm_equal = false;
    bool ok() const { return applicable && invariant_equal && mcm_equal; }
};

inline KnorrerCheck knorrer_check(const QuadricInput& q, const AnalysisConfig& cfg = {}) {
    KnorrerCheck k;
    k.original = analyze(q, cfg);
    k.covered = analyze(double_double_cover(q, cfg), cfg);
    k.applicable = k.original.mcm_count.has_value() && k.covered.mcm_count.has_value();
    if (!k.applicable) return k;
    k.invariant_original = graded_morita_invariant(k.original.classification);
    k.invariant_covered = graded_morita_invariant(k.covered.classification);
    k.invariant_equal = *k.invariant_original == *k.invariant_covered;
    k.mcm_equal = k.original.mcm_count == k.covered.mcm_count;
    return k;
}

struct CoverCheck {
    AnalysisReport report;
    bool commutative = false;   // C commutative (the hypothesis for the copy decomposition)
    bool copy_ok = false;
    std::vector<std::size_t> factor_dims;
    std::vector<std::size_t> c_block_dims;   // blocks of C, listed factor by factor
    std::vector<std::size_t> c0_block_dims;  // blocks of C_0
    bool count_ok = false;                   // #blocks(C) = 2 #blocks(C_0)
    bool ok() const { return commutative && copy_ok && count_ok; }
};

/// C^natural = C_0 x C_0 for a conic whose Clifford algebra is commutative.
inline CoverCheck conic_cover_check(const QuadricInput& q, const AnalysisConfig& cfg = {}) {
    CoverCheck out;
    out.report = analyze(q, cfg);
    const FDAlgebra& c = out.report.clifford;
    out.commutative = c.is_commutative();
    if (!out.commutative) return out;
    CopyDecomposition copy = copy_decomposition(c, cfg);
    out.copy_ok = copy.ok();
    out.factor_dims = {copy.plus.algebra.dim(), copy.minus.algebra.dim()};
    for (const SubalgebraView* f : {&copy.plus, &copy.minus})
        for (auto d : block_decompose(f->algebra, cfg).dims()) out.c_block_dims.push_back(d);
    out.c0_block_dims = out.report.classification.degree0.dims();
    out.count_ok = out.report.ungraded_block_count == 2 * out.c0_block_dims.size() &&
                   out.c_block_dims.size() == out.report.ungraded_block_count;
    return out;
}

inline CoverCheck conic_cover_check(const ConicParams& p, const AnalysisConfig& cfg = {}) {
    return conic_cover_check(conic(p, cfg), cfg);
}

/// f - sum u_i v_i reduces to 0 in A; certifies rank f <= number of pairs.
inline bool verify_rank_witness(const QuadricInput& q, const Witness& witness) {
    const std::size_t n = q.algebra.num_gens();
    auto linear = [n](const LinearForm& l) {
        FreePoly p;
        for (std::size_t k = 0; k < n; ++k) p.add(make_word({static_cast<int>(k)}), l.coeffs[k]);
        return p;
    };
    FreePoly diff = QuadraticPresentation::to_free_poly(q.f.lift, n);
    for (const auto& [u, v] : witness) diff = diff - linear(u) * linear(v);
    return normal_form(complete(q.algebra, 3), diff).is_zero();
}

/// The same quadric in new coordinates y = P x.
inline QuadricInput change_coordinates(const QuadricInput& q, const Matrix& basis_change, const AnalysisConfig& cfg = {}) {
    auto inv = inverse(basis_change);
    if (!inv) throw std::invalid_argument("change_coordinates: matrix is singular");
    return make_quadric(change_basis(q.algebra, basis_change), {q.f.name, substitute_quadratic(q.f.lift, *inv)},
                        q.label + " [coordinates changed]", cfg);
}

}  // namespace quadrics
