#include "quadrics/dsl.hpp"
#include "quadrics/rewrite.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace quadrics;

namespace {

QuadraticPresentation P(const std::string& src) { return parse_source(src).presentation(); }

FreePoly W(std::initializer_list<int> g, long c = 1) { return FreePoly::word(make_word(g), Scalar(c)); }

// Oracle: dim of the degree-n part of T(V)/(R) by linear algebra on all words of length n.
// The degree-n part of the ideal is spanned by a*r*b with |a| + |b| = n - 2.
std::vector<std::size_t> brute_force_dims(std::size_t gens, const std::vector<FreePoly>& rels, std::size_t top) {
    auto words_of = [gens](std::size_t n) {
        std::vector<Word> words{Word{}};
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Word> next;
            for (const auto& w : words)
                for (std::size_t g = 0; g < gens; ++g) next.push_back(w + static_cast<char>(g));
            words = next;
        }
        return words;
    };
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= top; ++n) {
        const auto words = words_of(n);
        std::map<Word, std::size_t> index;
        for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = k;
        std::vector<Vec> span;
        for (const auto& r : rels)
            for (std::size_t left = 0; left + 2 <= n; ++left)
                for (const auto& pre : words_of(left))
                    for (const auto& suf : words_of(n - 2 - left)) {
                        Vec v(words.size());
                        for (const auto& [w, c] : r.terms()) v[index.at(pre + w + suf)] += c;
                        span.push_back(v);
                    }
        dims.push_back(words.size() - Subspace::span(span, words.size()).dim());
    }
    return dims;
}

}  // namespace

TEST(Complete, PolynomialRing) {
    auto rs = complete(P("gens x y; rel x*y - y*x;"));
    auto rules = rs.rules();
    ASSERT_EQ(rules.size(), 1u);
    EXPECT_EQ(rules[0].lead, make_word({1, 0}));
    EXPECT_EQ(rules[0].tail, W({0, 1}));
    EXPECT_TRUE(rs.exact_all_degrees());
    EXPECT_EQ(normal_form(rs, W({1, 0})), W({0, 1}));
}

TEST(Complete, CliffordOfExampleOne) {
    auto c = parse_source("gens u v; grading z2; rel u^2 - 1; rel v^2 - 1; rel v*u + u*v;").presentation();
    auto rs = complete(c);
    EXPECT_EQ(rs.rules().size(), 3u);
    auto words = normal_words(rs, 4);
    std::vector<Word> flat;
    for (const auto& l : words)
        for (const auto& w : l) flat.push_back(w);
    EXPECT_EQ(flat, (std::vector<Word>{Word{}, make_word({0}), make_word({1}), make_word({0, 1})}));
    EXPECT_EQ(normal_form(rs, W({0, 0})), FreePoly::constant(Scalar(1)));
    auto h = hilbert(rs);
    EXPECT_TRUE(h.stabilized);
    EXPECT_EQ(h.total(), 4u);
}

TEST(Complete, ExteriorTypeAgainstBruteForce) {
    auto e = P("gens u v; rel u^2; rel v^2; rel v*u + u*v;");
    auto rs = complete(e);
    auto h = hilbert(rs);
    EXPECT_EQ(h.dims, (std::vector<std::size_t>{1, 2, 1, 0}));
    EXPECT_EQ(brute_force_dims(2, e.relation_polys(), 3), (std::vector<std::size_t>{1, 2, 1, 0}));
}

TEST(Complete, RejectsLowTruncation) { EXPECT_THROW(complete(P("gens x; rel x^2;"), 2), std::invalid_argument); }

TEST(Hilbert, PolynomialRingAndDual) {
    auto a = P("gens x y z; rel x*y - y*x; rel x*z - z*x; rel y*z - z*y;");
    auto h = hilbert(complete(a));
    ASSERT_GE(h.dims.size(), 5u);
    for (std::size_t n = 0; n < h.dims.size(); ++n) EXPECT_EQ(h.dims[n], (n + 1) * (n + 2) / 2);
    EXPECT_FALSE(h.stabilized);
    auto hd = hilbert(complete(quadratic_dual(a)));
    EXPECT_EQ(hd.dims, (std::vector<std::size_t>{1, 3, 3, 1, 0}));
    EXPECT_TRUE(hd.stabilized);
}

TEST(Hilbert, MatchesBruteForceOnRandomRelations) {
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2;
        const auto rows = static_cast<std::size_t>(testutil::small_int(1, 3));
        Subspace r = Subspace::span(testutil::random_matrix(rows, n * n, 2, 0.6).row_list(), n * n);
        auto p = QuadraticPresentation::homogeneous({"a", "b"}, r.basis_vectors());
        auto rs = complete(p, 5);
        auto h = hilbert(rs);
        auto oracle = brute_force_dims(n, p.relation_polys(), 5);
        for (std::size_t k = 0; k < oracle.size(); ++k) EXPECT_EQ(k < h.dims.size() ? h.dims[k] : 0u, oracle[k]);
    }
}

TEST(NormalForm, WitnessOfWorkedConic) {
    auto m = parse_source("gens x y z; rel y*z + z*y + x^2; rel z*x + x*z + y^2; rel x*y + y*x;"
                          "central f = 3*x^2 + 3*y^2 + 4*z^2;");
    auto rs = complete(m.presentation());
    FreePoly l = W({0}, -1) + W({1}, -1) + W({2}, 2);
    FreePoly f = QuadraticPresentation::to_free_poly(m.central->lift, 3);
    EXPECT_TRUE(normal_form(rs, l * l - f).is_zero());
    EXPECT_FALSE(normal_form(rs, l * l).is_zero());
}

TEST(NormalForm, DegreeBeyondTruncation) {
    auto rs = complete(P("gens x y; rel x*y - y^2;"), 4);
    ASSERT_FALSE(rs.exact_all_degrees());
    EXPECT_THROW(normal_form(rs, W({0, 0, 0, 0, 0})), std::out_of_range);
    EXPECT_NO_THROW(normal_form(rs, W({0, 0, 0, 0})));
}

TEST(Centrality, Examples) {
    auto comm = parse_source("gens x y; rel x*y - y*x; central f = 2*x*y + y^2;");
    EXPECT_TRUE(is_central_upto(complete(comm.presentation()), *comm.central));
    auto conic = parse_source("gens x y z; rel y*z + z*y + x^2; rel z*x + x*z + y^2; rel x*y + y*x;"
                              "central f = 3*x^2 + 3*y^2 + 4*z^2;");
    EXPECT_TRUE(is_central_upto(complete(conic.presentation()), *conic.central));
    auto free = QuadraticPresentation::homogeneous({"x", "y"}, {});
    EXPECT_FALSE(is_central_upto(complete(free), CentralElement{"f", unit_vector(4, 0)}));
}

TEST(Regularity, Examples) {
    auto a = parse_source("gens x y; rel x*y - y*x; central f = x^2 + y^2;");
    EXPECT_TRUE(is_regular_upto(a.presentation(), *a.central, 6));
    auto b = parse_source("gens x y; rel x*y - y*x; rel x*y; central f = x^2;");
    EXPECT_FALSE(is_regular_upto(b.presentation(), *b.central, 6));
    EXPECT_FALSE(is_regular_upto(a.presentation(), CentralElement{"f", Vec(4)}, 6));
    // quotient dims of Q(i)[x,y]/(x^2+y^2): 1,2,2,2,...
    auto rels = a.presentation().relation_polys();
    rels.push_back(QuadraticPresentation::to_free_poly(a.central->lift, 2));
    auto rs = RewriteSystem::complete({"x", "y"}, {}, rels, 6, false);
    EXPECT_EQ(hilbert(rs).dims, (std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2}));
}

TEST(MultiplicationTable, Examples) {
    auto c = complete(parse_source("gens u v; grading z2; rel u^2 - 1; rel v^2 - 1; rel v*u + u*v;").presentation());
    FDAlgebra a = multiplication_table(c);
    ASSERT_EQ(a.dim(), 4u);
    const std::size_t uv = a.label_index("u*v");
    EXPECT_EQ(a.basis_product(uv, uv), scaled(Scalar(-1), a.unit()));
    EXPECT_EQ(a.grading(), (std::vector<int>{0, 1, 1, 0}));

    auto kg = complete(QuadraticPresentation::inhomogeneous({"s"}, {{Vec{Scalar(1)}, Scalar(-1)}}));
    FDAlgebra g = multiplication_table(kg);
    ASSERT_EQ(g.dim(), 2u);
    EXPECT_EQ(g.basis_product(1, 1), g.unit());

    FDAlgebra ext = multiplication_table(complete(quadratic_dual(P("gens x y; rel x*y - y*x;"))));
    ASSERT_EQ(ext.dim(), 4u);
    const std::size_t x = ext.label_index("X"), y = ext.label_index("Y"), xy = ext.label_index("X*Y");
    EXPECT_TRUE(is_zero(ext.basis_product(x, x)));
    EXPECT_EQ(ext.basis_product(y, x), scaled(Scalar(-1), ext.basis_vector(xy)));

    EXPECT_THROW(multiplication_table(complete(P("gens x y; rel x*y - y*x;"))), std::domain_error);
}

TEST(Properties, NormalFormSoundness) {
    auto m = parse_source("gens x y z; rel y*z + z*y + x^2; rel z*x + x*z + y^2; rel x*y + y*x;");
    auto rs = complete(m.presentation());
    auto random_element = [](std::size_t degree) {
        FreePoly p;
        for (int t = 0; t < 3; ++t) {
            Word w;
            for (std::size_t k = 0; k < degree; ++k) w.push_back(static_cast<char>(testutil::small_int(0, 2)));
            p.add(w, testutil::small_scalar(2));
        }
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        FreePoly a = random_element(static_cast<std::size_t>(testutil::small_int(1, 4)));
        FreePoly b = random_element(static_cast<std::size_t>(testutil::small_int(1, 4)));
        EXPECT_EQ(normal_form(rs, a * b), normal_form(rs, normal_form(rs, a) * normal_form(rs, b)));
    }
}
