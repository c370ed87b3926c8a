#include "support.hpp"

using namespace tpres;
using namespace tpres::testing;

TEST(Toeplitz, DenseFromCoords) {
    const auto t = ToeplitzMatrix::from_coords(Q, 2, 2, ints(Q, {1, 2, 3}));
    EXPECT_EQ(t.dense(), mat(Q, {{2, 3}, {1, 2}}));
    const auto x = ToeplitzMatrix::from_coords(Q, 3, 3, ints(Q, {1, 2, 4, 8, 16}));
    EXPECT_EQ(x.dense(), mat(Q, {{4, 8, 16}, {2, 4, 8}, {1, 2, 4}}));
}

TEST(Toeplitz, CoordsRoundTrip) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; ++k) {
        const auto m = 2 + rng() % 3, n = m + rng() % 3;
        const auto a = random_toeplitz(Q, m, n, rng);
        EXPECT_EQ(ToeplitzMatrix::from_dense(a.dense()), a);
        const auto dense = a.dense();
        for (std::size_t i = 1; i < m; ++i)
            for (std::size_t j = 1; j < n; ++j) EXPECT_EQ(dense(i, j), dense(i - 1, j - 1));
    }
}

TEST(Toeplitz, Errors) {
    try {
        ToeplitzMatrix::from_coords(Q, 2, 2, ints(Q, {1, 2}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::length_mismatch);
    }
    try {
        ToeplitzMatrix::from_dense(mat(Q, {{1, 2}, {3, 4}}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_toeplitz);
    }
}

TEST(Toeplitz, CoordinateMapIsLinear) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 30; ++k) {
        const auto a = random_toeplitz(Q, 3, 4, rng), b = random_toeplitz(Q, 3, 4, rng);
        const auto c = random_rational(rng);
        const auto sum = ToeplitzMatrix::from_dense(a.dense() + b.dense().scale(c));
        for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(sum.coords()[i], a.coords()[i] + c * b.coords()[i]);
    }
}

TEST(Elimination, Examples) {
    EXPECT_EQ(exact_det(mat(Q, {{1, 2}, {3, 4}})), q(-2));
    EXPECT_EQ(exact_rank(mat(Q, {{1, 2}, {3, 4}})), 2u);
    EXPECT_EQ(exact_rank(ToeplitzMatrix::from_coords(Q, 3, 3, ints(Q, {1, 0, 0, 0, 1})).dense()), 2u);
    EXPECT_EQ(exact_rank(DenseMatrix(Q, 3, 4)), 0u);
    EXPECT_THROW(exact_det(DenseMatrix(Q, 2, 3)), error);
}

TEST(Elimination, RankOneGenerators) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        const auto xi = random_rational(rng);
        EXPECT_EQ(exact_rank(rank_one_generator(Q, ProjectiveParameter::finite(xi), 3, 4).dense()), 1u);
    }
    EXPECT_EQ(exact_rank(rank_one_generator(Q, ProjectiveParameter::infinity(), 3, 3).dense()), 1u);
}

class EliminationProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(EliminationProperty, AgreesWithCofactorAndNaiveRank) {
    const auto d = FieldDescriptor::parse(GetParam());
    std::mt19937_64 rng(4);
    for (int k = 0; k < 200; ++k) {
        const auto n = 1 + rng() % 4;
        DenseMatrix a(d, n, n);
        // sparse-ish entries so singular matrices show up
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = rng() % 3 == 0 ? Scalar::zero(d) : random_scalar(d, rng, 2);
        EXPECT_EQ(exact_det(a), cofactor_det(a));
        EXPECT_EQ(exact_rank(a), naive_rank(a));
        EXPECT_EQ(exact_rank(a), exact_rank(a.transpose()));
        if (!exact_det(a).is_zero()) {
            EXPECT_EQ(a * exact_inverse(a), DenseMatrix::identity(d, n));
        } else {
            EXPECT_THROW(exact_inverse(a), error);
        }
    }
}

TEST_P(EliminationProperty, RankInvariantUnderFlipAndScaling) {
    const auto d = FieldDescriptor::parse(GetParam());
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        const auto a = random_toeplitz(d, 3, 3, rng).dense();
        const auto r = random_nonzero_scalar(d, rng);
        EXPECT_EQ(exact_rank(flip(d, 3) * a), exact_rank(a));
        EXPECT_EQ(exact_rank(diag_powers(r, 3) * a * diag_powers(r, 3)), exact_rank(a));
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, EliminationProperty, ::testing::Values("q", "qi", "gf:5", "gf:13"));

TEST(Hankel, Conjugation) {
    const auto i3 = ToeplitzMatrix::from_coords(Q, 3, 3, ints(Q, {0, 0, 1, 0, 0}));
    EXPECT_EQ(hankel_conjugate(i3).dense(), flip(Q, 3));
    EXPECT_EQ(toeplitz_conjugate(hankel_conjugate(i3)), i3);

    std::mt19937_64 rng(6);
    for (int k = 0; k < 30; ++k) {
        const auto a = random_toeplitz(Q, 3, 3, rng);
        const auto h = hankel_conjugate(a);
        EXPECT_EQ(h.dense(), flip(Q, 3) * a.dense());
        EXPECT_TRUE(is_hankel(h.dense()));
        EXPECT_EQ(exact_rank(h.dense()), exact_rank(a.dense()));
    }
}

TEST(Hankel, RankOnePattern) {
    const auto xi = q(3);
    const auto h = hankel_conjugate(rank_one_generator(Q, ProjectiveParameter::finite(xi), 3, 3));
    const std::vector<Scalar> v{q(1), q(3), q(9)};
    EXPECT_EQ(h.dense(), outer(Q, v, v));
    EXPECT_THROW(hankel_conjugate(ToeplitzMatrix::from_coords(Q, 2, 3, ints(Q, {1, 2, 3, 4}))), error);
}

TEST(Dense, Shapes) {
    EXPECT_THROW(DenseMatrix::from_rows(Q, {ints(Q, {1, 2}), ints(Q, {1})}), error);
    EXPECT_THROW(mat(Q, {{1, 2}}) * mat(Q, {{1, 2}}), error);
    EXPECT_EQ(mat(Q, {{1, 2}, {3, 4}}).transpose(), mat(Q, {{1, 3}, {2, 4}}));
    const auto v = ints(Q, {1, 1});
    EXPECT_EQ(mat(Q, {{1, 2}, {3, 4}}).apply(v), ints(Q, {3, 7}));
}
