#include "quadrics/dsl.hpp"
#include "quadrics/gradedalg.hpp"
#include "quadrics/rewrite.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace quadrics;

namespace {

FDAlgebra table(std::vector<std::string> gens, std::vector<int> parity, const std::vector<std::string>& rels,
                std::size_t d_max = 8) {
    std::vector<FreePoly> polys;
    for (const auto& r : rels) polys.push_back(parse_polynomial(r, gens));
    return multiplication_table(RewriteSystem::complete(std::move(gens), std::move(parity), polys, d_max, false));
}

// M_n(k) on matrix units e_ij (index i*n+j); odd[i] puts row/column i in the odd part.
FDAlgebra matrix_algebra(std::size_t n, const std::vector<int>& odd = {}) {
    std::vector<std::string> labels;
    std::vector<int> grading;
    Vec unit(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        unit[i * n + i] = Scalar(1);
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("e" + std::to_string(i) + std::to_string(j));
            grading.push_back(odd.empty() ? 0 : (odd[i] + odd[j]) & 1);
        }
    }
    return FDAlgebra(
        labels,
        [n](std::size_t a, std::size_t b) {
            Vec v(n * n);
            if (a % n == b / n) v[(a / n) * n + b % n] = Scalar(1);
            return v;
        },
        unit, grading);
}

// Same algebra in the basis b_i = sum_k p(i, k) e_k.
FDAlgebra transport(const FDAlgebra& a, const Matrix& p) {
    const Matrix q = *inverse(p);
    auto to_new = [&](const Vec& v) {
        Vec out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t k = 0; k < a.dim(); ++k) out[i] += v[k] * q(k, i);
        return out;
    };
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < a.dim(); ++k) labels.push_back("b" + std::to_string(k));
    return FDAlgebra(
        labels, [&](std::size_t i, std::size_t j) { return to_new(a.mul(p.row_vec(i), p.row_vec(j))); },
        to_new(a.unit()), std::vector<int>(a.dim(), 0));
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

FDAlgebra kg() { return group_algebra_z2(); }
FDAlgebra clifford_plane() { return table({"u", "v"}, {1, 1}, {"u*u - 1", "v*v - 1", "u*v + v*u"}); }

}  // namespace

TEST(Radical, SemisimpleAndLocal) {
    EXPECT_TRUE(radical(kg()).is_zero());
    EXPECT_TRUE(radical(matrix_algebra(2)).is_zero());

    FDAlgebra cube = table({"u"}, {0}, {"u^3"});
    ASSERT_EQ(cube.dim(), 3u);
    Subspace j = radical(cube);
    EXPECT_EQ(j.dim(), 2u);
    EXPECT_EQ(radical_layers(cube, j), (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(nilpotency_index(cube, j), std::optional<std::size_t>(3));

    FDAlgebra ext = table({"u"}, {1}, {"u*u"});
    EXPECT_EQ(radical(ext).dim(), 1u);
}

TEST(Radical, UpperTriangularMatrices) {
    FDAlgebra m = matrix_algebra(2);
    Subspace upper = Subspace::span({m.basis_vector(0), m.basis_vector(1), m.basis_vector(3)}, 4);
    FDAlgebra t = subalgebra(m, upper, m.unit()).algebra;
    Subspace j = radical(t);
    EXPECT_EQ(j.dim(), 1u);
    BlockReport r = block_decompose(t);
    ASSERT_EQ(r.count(), 1u);
    EXPECT_EQ(r.blocks[0].kind, BlockKind::NonSemisimple);
    EXPECT_EQ(r.blocks[0].simple_count, 2u);
}

TEST(Blocks, SplitQuadratic) {
    BlockReport r = block_decompose(table({"z"}, {0}, {"z*z - 4"}));
    EXPECT_EQ(r.dims(), (std::vector<std::size_t>{1, 1}));
    for (const auto& b : r.blocks) EXPECT_EQ(b.kind, BlockKind::MatrixOverBase);

    // t^2 + 1 splits over Q(i); t^2 - 2 does not
    EXPECT_EQ(block_decompose(table({"t"}, {0}, {"t*t + 1"})).count(), 2u);
    BlockReport f = block_decompose(table({"t"}, {0}, {"t*t - 2"}));
    ASSERT_EQ(f.count(), 1u);
    EXPECT_EQ(f.blocks[0].kind, BlockKind::FieldExtension);
    EXPECT_EQ(f.blocks[0].center_poly, (Poly{Scalar(-2), Scalar(0), Scalar(1)}));
}

TEST(Blocks, ConicQuotientAlgebra) {
    // A' = k[x,y]/(2y - x^2 + 3, 2x - y^2 + 3): y has minimal polynomial (t+1)^3 (t-3)
    FDAlgebra ap = table({"x", "y"}, {0, 0}, {"y*x - x*y", "2*y - x*x + 3", "2*x - y*y + 3"});
    BlockReport r = block_decompose(ap);
    EXPECT_EQ(sorted(r.dims()), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(r.radical_dim, 2u);
    for (const auto& b : r.blocks) {
        if (b.dim == 3) {
            EXPECT_EQ(b.kind, BlockKind::LocalCommutative);
            EXPECT_EQ(b.radical_layers, (std::vector<std::size_t>{1, 1}));
        } else {
            EXPECT_EQ(b.kind, BlockKind::MatrixOverBase);
        }
    }
}

TEST(Blocks, MatrixAlgebrasAreCertified) {
    for (std::size_t n : {1u, 2u, 3u}) {
        BlockReport r = block_decompose(matrix_algebra(n));
        ASSERT_EQ(r.count(), 1u);
        EXPECT_EQ(r.blocks[0].kind, BlockKind::MatrixOverBase);
        EXPECT_EQ(r.blocks[0].matrix_size, n);
    }
    // quaternions (-1,-1) split over Q(i)
    FDAlgebra h = table({"a", "b"}, {0, 0}, {"a*a + 1", "b*b + 1", "a*b + b*a"});
    BlockReport r = block_decompose(h);
    ASSERT_EQ(r.count(), 1u);
    EXPECT_EQ(r.blocks[0].kind, BlockKind::MatrixOverBase);
    EXPECT_EQ(r.blocks[0].matrix_size, 2u);
}

TEST(Blocks, CliffordPlaneDegreeZero) {
    FDAlgebra c = clifford_plane();
    ASSERT_EQ(c.dim(), 4u);
    BlockReport r = block_decompose(degree_part(c, 0).algebra);
    EXPECT_EQ(r.dims(), (std::vector<std::size_t>{1, 1}));
}

TEST(Graded, TypesOfSimpleAlgebras) {
    EXPECT_EQ(graded_simple_type(kg()).type, GradedType::Type1);
    EXPECT_EQ(graded_simple_type(base_field()).type, GradedType::Type0);
    EXPECT_EQ(graded_simple_type(clifford_plane()).type, GradedType::Type0);
    EXPECT_EQ(graded_simple_type(matrix_algebra(2, {0, 1})).type, GradedType::Type0);
    EXPECT_EQ(graded_simple_type(twisted_tensor(matrix_algebra(2), kg())).type, GradedType::Type1);
    // kG (x)^ kG is Morita equivalent to the base field
    EXPECT_EQ(graded_simple_type(twisted_tensor(kg(), kg())).type, GradedType::Type0);
}

TEST(Graded, BlockDecomposition) {
    GradedBlockReport r = graded_block_decompose(direct_product(kg(), kg()));
    EXPECT_EQ(r.blocks.size(), 2u);
    EXPECT_TRUE(r.center_split);

    FDAlgebra c2 = table({"u", "v"}, {1, 1}, {"u*u - 1", "v*v - 1", "u*v - v*u"});
    GradedBlockReport r2 = graded_block_decompose(c2);
    EXPECT_EQ(r2.blocks.size(), 2u);
    EXPECT_EQ(block_decompose(c2).count(), 4u);

    EXPECT_THROW(graded_block_decompose(table({"u"}, {1}, {"u*u"})), GradedNotSemisimple);
}

TEST(Graded, StronglyGraded) {
    EXPECT_TRUE(strongly_graded(kg()));
    EXPECT_TRUE(strongly_graded(clifford_plane()));
    EXPECT_FALSE(strongly_graded(table({"u"}, {1}, {"u*u"})));
    EXPECT_FALSE(strongly_graded(base_field()));
}

TEST(Xi, DegreeZeroOfTwistWithGroupAlgebra) {
    for (const FDAlgebra& e : {kg(), clifford_plane(), table({"u"}, {1}, {"u*u"}), matrix_algebra(2, {0, 1})}) {
        XiIsomorphism xi = xi_isomorphism(e);
        EXPECT_TRUE(xi.check.ok());
        EXPECT_EQ(xi.source.dim(), e.dim());
    }
}

TEST(GElement, SquareZeroAndCubeZeroIdeals) {
    for (const char* nil : {"n*n", "n^3"}) {
        FDAlgebra e = table({"y", "n"}, {1, 0}, {"y*n - n*y", nil, "y*y - 1 - n"});
        GElement g = find_g_element(e);
        EXPECT_EQ(e.mul(g.value, g.value), e.unit());
        EXPECT_EQ(e.degree_of(g.value), std::optional<int>(1));
        EXPECT_GE(g.iterations, 1u);

        Vec y = e.basis_vector(e.label_index("y"));
        Subspace j = radical(e);
        GElement lifted = lift_g_element(e, j, y);
        EXPECT_EQ(e.mul(lifted.value, lifted.value), e.unit());
    }
    // for I^2 = 0 one step gives y(1 - n/2)
    FDAlgebra e = table({"y", "n"}, {1, 0}, {"y*n - n*y", "n*n", "y*y - 1 - n"});
    Vec y = e.basis_vector(e.label_index("y"));
    Vec yn = e.mul(y, e.basis_vector(e.label_index("n")));
    GElement g = lift_g_element(e, radical(e), y);
    EXPECT_EQ(g.iterations, 1u);
    EXPECT_EQ(g.value, y - scaled(Scalar::rational(1, 2), yn));
}

TEST(GElement, RejectsBadInput) {
    FDAlgebra e = table({"y", "n"}, {1, 0}, {"y*n - n*y", "n*n", "y*y - 1 - n"});
    Subspace j = radical(e);
    EXPECT_THROW(lift_g_element(e, j, e.unit()), std::invalid_argument);
    EXPECT_THROW(lift_g_element(e, j, scaled(Scalar(2), e.basis_vector(e.label_index("y")))), std::invalid_argument);
    EXPECT_THROW(lift_g_element(e, Subspace::full(e.dim()), e.basis_vector(e.label_index("y"))), std::invalid_argument);
}

TEST(Copies, CommutativeStronglyGraded) {
    for (const FDAlgebra& a : {kg(), direct_product(kg(), kg()),
                               table({"y", "n"}, {1, 0}, {"y*n - n*y", "n*n", "y*y - 1 - n"}),
                               table({"u", "v"}, {1, 1}, {"u*u - 1", "v*v - 1", "u*v - v*u"})}) {
        CopyDecomposition c = copy_decomposition(a);
        EXPECT_TRUE(c.ok());
        EXPECT_EQ(c.plus.algebra.dim() * 2, a.dim());
    }
    EXPECT_THROW(copy_decomposition(clifford_plane()), std::invalid_argument);
    EXPECT_THROW(copy_decomposition(table({"u"}, {1}, {"u*u"})), std::invalid_argument);
}

TEST(Classify, Verdicts) {
    ClassificationReport r = classify(clifford_plane());
    EXPECT_EQ(r.verdict, Verdict::SimpleType0);
    EXPECT_EQ(mcm_simple_count(r), 2u);

    r = classify(kg());
    EXPECT_EQ(r.verdict, Verdict::SimpleType1);
    EXPECT_EQ(mcm_simple_count(r), 1u);

    r = classify(table({"u", "v"}, {1, 1}, {"u*u - 1", "v*v - 1", "u*v - v*u"}));
    EXPECT_EQ(r.verdict, Verdict::GradedSemisimpleNotSimple);
    EXPECT_EQ(mcm_simple_count(r), 2u);

    r = classify(table({"u"}, {1}, {"u*u"}));
    EXPECT_EQ(r.verdict, Verdict::NotGradedSemisimple);
    EXPECT_THROW(mcm_simple_count(r), std::domain_error);

    r = classify(table({"t"}, {0}, {"t*t - 2"}));
    EXPECT_EQ(r.verdict, Verdict::UndeterminedNonSplit);
}

TEST(Classify, MoritaInvariantIgnoresMatrixSize) {
    auto inv = [](const FDAlgebra& a) { return graded_morita_invariant(classify(a)); };
    EXPECT_EQ(inv(kg()), inv(twisted_tensor(matrix_algebra(2), kg())));
    EXPECT_EQ(inv(clifford_plane()), inv(matrix_algebra(2, {0, 1})));
    EXPECT_FALSE(inv(kg()) == inv(clifford_plane()));
}

TEST(Properties, BlocksInvariantUnderBasisChange) {
    const std::vector<FDAlgebra> pieces{base_field(), kg(), matrix_algebra(2), table({"u"}, {0}, {"u*u"}),
                                        table({"t"}, {0}, {"t*t - 2"})};
    // block dimensions of each piece: kG is k x k once the grading is forgotten
    const std::vector<std::vector<std::size_t>> piece_blocks{{1}, {1, 1}, {4}, {2}, {2}};
    for (int trial = 0; trial < 200; ++trial) {
        const auto count = static_cast<std::size_t>(testutil::small_int(1, 3));
        auto pick = static_cast<std::size_t>(testutil::small_int(0, 4));
        FDAlgebra a = pieces[pick];
        std::vector<std::size_t> expected = piece_blocks[pick];
        for (std::size_t k = 1; k < count; ++k) {
            pick = static_cast<std::size_t>(testutil::small_int(0, 4));
            if (a.dim() + pieces[pick].dim() > 9) continue;
            a = direct_product(a, pieces[pick]);
            expected.insert(expected.end(), piece_blocks[pick].begin(), piece_blocks[pick].end());
        }
        FDAlgebra b = transport(ungraded(a), testutil::random_invertible(a.dim(), 2));
        ASSERT_TRUE(b.is_associative());
        BlockReport ra = block_decompose(a), rb = block_decompose(b);
        EXPECT_EQ(sorted(ra.dims()), sorted(expected)) << "trial " << trial;
        EXPECT_EQ(sorted(rb.dims()), sorted(expected)) << "trial " << trial;
        EXPECT_EQ(ra.radical_dim, rb.radical_dim);
        std::size_t total = 0;
        for (auto d : rb.dims()) total += d;
        EXPECT_EQ(total, a.dim());
    }
}
