#include "quadrics/dsl.hpp"
#include "quadrics/presentation.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace quadrics;

namespace {

QuadraticPresentation P(const std::string& src) { return parse_source(src).presentation(); }

Vec tensor2(std::size_t n, std::initializer_list<std::tuple<int, int, int>> terms) {
    Vec v(n * n);
    for (auto [i, j, c] : terms) v[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] += Scalar(c);
    return v;
}

QuadraticPresentation random_presentation(std::size_t n) {
    const auto rows = static_cast<std::size_t>(testutil::small_int(0, static_cast<long>(n * n)));
    Subspace r = Subspace::span(testutil::random_matrix(rows, n * n, 2, 0.4).row_list(), n * n);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("g" + std::to_string(k));
    return QuadraticPresentation::homogeneous(names, r.basis_vectors());
}

}  // namespace

TEST(QuadraticDual, PolynomialRingGivesExteriorType) {
    auto d = quadratic_dual(P("gens x y; rel x*y - y*x;"));
    EXPECT_EQ(d.gens(), (std::vector<std::string>{"X", "Y"}));
    Subspace expected = Subspace::span({tensor2(2, {{0, 0, 1}}), tensor2(2, {{1, 1, 1}}), tensor2(2, {{0, 1, 1}, {1, 0, 1}})}, 4);
    EXPECT_EQ(d.relation_space(), expected);
    EXPECT_TRUE(d.is_homogeneous());
}

TEST(QuadraticDual, FreeAlgebraAndInvolution) {
    auto free = QuadraticPresentation::homogeneous({"x", "y"}, {});
    EXPECT_EQ(quadratic_dual(free).relation_space(), Subspace::full(4));
    auto a = P("gens x y z; rel y*z + z*y + x^2; rel z*x + x*z + y^2; rel x*y + y*x;");
    EXPECT_EQ(quadratic_dual(quadratic_dual(a)).relation_space(), a.relation_space());
    auto c = QuadraticPresentation::inhomogeneous({"u"}, {{Vec{Scalar(1)}, Scalar(-1)}});
    EXPECT_THROW(quadratic_dual(c), std::invalid_argument);
}

TEST(TensorPresentation, Examples) {
    auto t = tensor_presentation(QuadraticPresentation::homogeneous({"x"}, {}), QuadraticPresentation::homogeneous({"y"}, {}));
    EXPECT_EQ(t.relation_space(), P("gens x y; rel x*y - y*x;").relation_space());
    EXPECT_EQ(t.relations().size(), 1u);

    auto s = P("gens x y z; rel y*z + z*y + x^2; rel z*x + x*z + y^2; rel x*y + y*x;");
    auto w = QuadraticPresentation::homogeneous({"w"}, {});
    auto sw = tensor_presentation(s, w);
    EXPECT_EQ(sw.relations().size(), 3u + 3u * 1u + 0u);
    EXPECT_EQ(sw.num_gens(), 4u);

    auto clash = tensor_presentation(QuadraticPresentation::homogeneous({"x"}, {}), QuadraticPresentation::homogeneous({"x"}, {}));
    EXPECT_EQ(clash.gens(), (std::vector<std::string>{"x@L", "x@R"}));
}

TEST(TwistedTensor, GroupAlgebras) {
    auto kg = QuadraticPresentation::inhomogeneous({"s"}, {{Vec{Scalar(1)}, Scalar(-1)}});
    auto kk = twisted_tensor(kg, kg);
    EXPECT_EQ(kk.gens(), (std::vector<std::string>{"s@L", "s@R"}));
    auto expected = QuadraticPresentation::inhomogeneous(
        {"s@L", "s@R"}, {{tensor2(2, {{0, 0, 1}}), Scalar(-1)}, {tensor2(2, {{1, 1, 1}}), Scalar(-1)},
                         {tensor2(2, {{0, 1, 1}, {1, 0, 1}}), Scalar(0)}});
    EXPECT_TRUE(same_canonical_form(kk, expected));

    auto trivial = QuadraticPresentation::inhomogeneous({}, {});
    EXPECT_TRUE(same_canonical_form(twisted_tensor(kg, trivial), kg));
}

TEST(Properties, DualOfTensorIsTwistedTensorOfDuals) {
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_presentation(static_cast<std::size_t>(testutil::small_int(1, 2)));
        auto b = random_presentation(static_cast<std::size_t>(testutil::small_int(1, 2)));
        auto lhs = quadratic_dual(tensor_presentation(a, b));
        auto rhs = twisted_tensor(quadratic_dual(a), quadratic_dual(b));
        EXPECT_EQ(lhs.relation_space(), rhs.relation_space());
    }
}

TEST(Properties, TensorAssociativeUpToRenaming) {
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_presentation(1), b = random_presentation(2), c = random_presentation(1);
        auto left = tensor_presentation(tensor_presentation(a, b), c);
        auto right = tensor_presentation(a, tensor_presentation(b, c));
        EXPECT_EQ(left.relation_space(), right.relation_space());
    }
}

TEST(ChangeBasis, IdentityAndInverse) {
    auto a = P("gens x y z; rel y*z + z*y + x^2; rel z*x + x*z + y^2; rel x*y + y*x;");
    EXPECT_EQ(change_basis(a, Matrix::identity(3)).relation_space(), a.relation_space());
    for (int trial = 0; trial < 20; ++trial) {
        Matrix g = testutil::random_invertible(3);
        auto there = change_basis(a, g);
        EXPECT_EQ(change_basis(there, *inverse(g)).relation_space(), a.relation_space());
    }
}

TEST(Dsl, ParsesExamples) {
    auto m = parse_source("gens x y; rel x*y - y*x; central f = x^2 + y^2;");
    ASSERT_TRUE(m.central);
    EXPECT_EQ(m.central->lift, tensor2(2, {{0, 0, 1}, {1, 1, 1}}));
    EXPECT_EQ(m.relations.size(), 1u);
    auto s2 = parse_source("gens x y; rel x*y + y*x; central f = x^2 + y^2;");
    EXPECT_EQ(s2.relations[0].quad, tensor2(2, {{0, 1, 1}, {1, 0, 1}}));
    auto conic = parse_source("gens x y z;\nrel y*z + z*y + 1*x^2;\nrel z*x + x*z + y^2;\nrel x*y + y*x;\n"
                              "central f = 3*x^2 + 3*y^2 + 4*z^2;\nwitness (-x - y + 2*z, -x - y + 2*z);\n");
    ASSERT_EQ(conic.witness.size(), 1u);
    EXPECT_EQ(conic.witness[0].first.coeffs, (Vec{Scalar(-1), Scalar(-1), Scalar(2)}));
    auto g = parse_source("gens x y; rel (2+3i)*x*y - 1/2i*y*x + (1/2-3/4 i)*x^2;");
    EXPECT_EQ(g.relations[0].quad[1], Scalar::parse("2+3i"));
    EXPECT_EQ(g.relations[0].quad[2], Scalar::parse("-1/2i"));
    EXPECT_EQ(g.relations[0].quad[0], Scalar::parse("1/2-3/4 i"));
    auto c = parse_source("gens u v; grading z2; rel u^2 - 1; rel u*v + v*u;");
    EXPECT_EQ(c.relations[0].constant, Scalar(-1));
}

TEST(Dsl, Errors) {
    try {
        parse_source("gens x y z; rel x*y*z;");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("relation degree 3 at line 1"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_source("gens x; rel x*q;"), ParseError);
    EXPECT_THROW(parse_source("gens x y;\ncentral f = x;"), ParseError);
    EXPECT_THROW(parse_source("gens x y;\nrel x*y + ;"), ParseError);
    EXPECT_THROW(parse_source("gens x y; rel x^2 - 1;"), ParseError);
    EXPECT_THROW(parse_source("gens x y; rel x*y; rel 2*x*y;"), ParseError);
    try {
        parse_source("gens x y;\n\n  rel x $ y;");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 9u);
    }
}

TEST(Dsl, PrettyPrintRoundTrip) {
    const std::vector<std::string> inputs{
        "gens x y; rel x*y - y*x; central f = x^2 + y^2;",
        "gens x y z; rel y*z+z*y+1*x^2; rel z*x + x*z + y^2; rel x*y+y*x; central f = 3*x^2+3*y^2+4*z^2; "
        "witness (-x-y+2*z, -x-y+2*z);",
        "gens a b; rel (2+3i)*a*b - 1/2i*b*a + (1/2-3/4 i)*a^2; central g = i*a^2 - (1-i)*b^2;",
        "gens u v; grading z2; rel u^2 - 1; rel v^2 + (1/2)*u*v - 3; rel u*v + v*u;",
    };
    for (const auto& src : inputs) {
        const std::string once = print_source(parse_source(src));
        const std::string twice = print_source(parse_source(once));
        EXPECT_EQ(once, twice);
        auto a = parse_source(src), b = parse_source(once);
        EXPECT_EQ(a.relations, b.relations);
        ASSERT_EQ(a.central.has_value(), b.central.has_value());
        if (a.central) EXPECT_EQ(a.central->lift, b.central->lift);
    }
}
