#include "support.hpp"

using namespace tpres;
using namespace tpres::testing;

namespace {

/// Pointwise test via the rank of the image Toeplitz matrix.
bool brute_force_preserver(const DenseMatrix& l, std::size_t m, std::size_t n) {
    const auto& d = l.field();
    for (const auto& p : projective_points(d)) {
        const auto image = l.apply(moment_entries(d, p, l.cols()));
        if (naive_rank(ToeplitzMatrix::from_coords(d, m, n, image).dense()) != 1) return false;
    }
    return true;
}

std::string report_text(const OracleReport& r) { return to_json(r).dump(); }

}  // namespace

TEST(ProjectivePoints, Counts) {
    EXPECT_EQ(projective_points(GF5).size(), 6u);
    EXPECT_EQ(projective_points(GF13).size(), 14u);
    EXPECT_TRUE(projective_points(GF5).back().is_infinite());
    try {
        projective_points(Q);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::infinite_field);
    }
}

TEST(DirectCheck, Examples) {
    EXPECT_TRUE(direct_preserver_check(DenseMatrix::identity(GF5, 3)).preserver);
    const auto a = direct_preserver_check(mat(GF5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    EXPECT_FALSE(a.preserver);
    EXPECT_TRUE(a.witness->is_infinite());
    EXPECT_TRUE(a.complete);
    const auto h0 = moment_entries(GF5, ProjectiveParameter::finite(s(GF5, 0)), 3);
    const auto b = direct_preserver_check(outer(GF5, h0, ints(GF5, {1, 0, 1})));
    EXPECT_FALSE(b.preserver);
    EXPECT_EQ(*b.witness, ProjectiveParameter::finite(s(GF5, 2)));
    const auto c = direct_preserver_check(DenseMatrix::identity(Q, 3), 50, 1);
    EXPECT_TRUE(c.preserver);
    EXPECT_FALSE(c.complete);
}

TEST(DirectCheck, MatchesRankBruteForce) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 300; ++k) {
        DenseMatrix l(GF5, 3, 3);
        if (k % 2 == 0) l = coordinate_form(random_spec(GF5, rng), 3);
        l(rng() % 3, rng() % 3) = random_scalar(GF5, rng);
        EXPECT_EQ(direct_preserver_check(l).preserver, brute_force_preserver(l, 2, 2));
    }
}

TEST(Census, Examples) {
    const auto a = rank_one_census(GF5, 2, 2, 1'000'000);
    EXPECT_EQ(a.count, 24u);
    EXPECT_EQ(a.parametric_count, 24u);
    EXPECT_TRUE(a.sets_equal);
    EXPECT_EQ(rank_one_census(FieldDescriptor::prime(2), 2, 2, 1'000'000).count, 3u);
    const auto b = rank_one_census(FieldDescriptor::prime(3), 3, 3, 1'000'000);
    EXPECT_TRUE(b.sets_equal);
    EXPECT_EQ(b.count, 8u);
    EXPECT_TRUE(rank_one_census(GF5, 2, 3, 1'000'000).sets_equal);
}

TEST(Census, ErrorsAndThreads) {
    try {
        rank_one_census(GF13, 5, 5, 1000);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::budget_exceeded);
    }
    EXPECT_THROW(rank_one_census(Q, 2, 2, 1000), error);
    const auto one = rank_one_census(FieldDescriptor::prime(7), 2, 3, 1'000'000, 1);
    const auto four = rank_one_census(FieldDescriptor::prime(7), 2, 3, 1'000'000, 4);
    EXPECT_EQ(one.members, four.members);
    EXPECT_EQ(one.count, 48u);
}

TEST(Compare, FamiliesOverGF13) {
    OracleOptions opt;
    const auto r = compare_classifier_oracle(GF13, 3, opt);
    EXPECT_EQ(r.regime, Regime::Proven);
    EXPECT_TRUE(r.disagreements.empty());
    EXPECT_EQ(r.unexpected_not_preserver, 0u);
    // (p-1)^2 p per Vandermonde form, (p-1)^2 p (p-1) W specs
    EXPECT_EQ(r.verdicts.at("v"), 12u * 12u * 13u);
    EXPECT_EQ(r.verdicts.at("vf"), 12u * 12u * 13u);
    EXPECT_EQ(r.verdicts.at("w"), 12u * 12u * 13u * 12u);
    EXPECT_GT(r.verdicts.at("rank-one-functional"), 0u);
    EXPECT_EQ(r.agreements, r.tested);
}

TEST(Compare, RandomIsReproducibleAndThreadIndependent) {
    OracleOptions opt;
    opt.mode = OracleMode::Random;
    opt.samples = 5000;
    opt.seed = 9;
    const auto a = compare_classifier_oracle(GF13, 3, opt);
    opt.threads = 4;
    const auto b = compare_classifier_oracle(GF13, 3, opt);
    EXPECT_EQ(report_text(a), report_text(b));
    EXPECT_TRUE(a.disagreements.empty());
    EXPECT_EQ(a.tested, 5000u);
    opt.seed = 10;
    EXPECT_NE(report_text(a), report_text(compare_classifier_oracle(GF13, 3, opt)));
}

TEST(Compare, SmallFieldIsFlagged) {
    OracleOptions opt;
    const auto r = compare_classifier_oracle(GF5, 3, opt);
    EXPECT_EQ(r.regime, Regime::SmallField);
    EXPECT_EQ(to_json(r)["regime"], "small-field");
}

TEST(Compare, ExhaustiveTinyField) {
    OracleOptions opt;
    opt.mode = OracleMode::Exhaustive;
    opt.threads = 2;
    const auto r = compare_classifier_oracle(FieldDescriptor::prime(2), 3, opt);
    EXPECT_EQ(r.tested, 512u);
    opt.budget = 100;
    EXPECT_THROW(compare_classifier_oracle(FieldDescriptor::prime(2), 3, opt), error);
}

TEST(Compare, Errors) {
    OracleOptions opt;
    EXPECT_THROW(compare_classifier_oracle(Q, 3, opt), error);
    EXPECT_THROW(compare_classifier_oracle(GF13, 2, opt), error);
    opt.mode = OracleMode::Random;
    opt.samples = 10;
    opt.budget = 5;
    try {
        compare_classifier_oracle(GF13, 3, opt);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::budget_exceeded);
    }
    EXPECT_EQ(parse_mode("exhaustive"), OracleMode::Exhaustive);
    EXPECT_THROW(parse_mode("all"), error);
}

TEST(ParallelChunks, OrderIsStable) {
    auto square = [](std::size_t c) { return c * c; };
    const auto a = parallel_chunks(100, 1, square);
    const auto b = parallel_chunks(100, 8, square);
    EXPECT_EQ(a, b);
    EXPECT_EQ(b[7], 49u);
    EXPECT_TRUE(parallel_chunks(0, 4, square).empty());
}

TEST(RankSampling, FunctionalMapsLoseRank) {
    const auto h = moment_entries(GF13, ProjectiveParameter::finite(s(GF13, 1)), 5);
    // (x^2 + 2)^2: x^2 + 2 has no root mod 13
    const auto l = outer(GF13, h, ints(GF13, {4, 0, 4, 0, 1}));
    ASSERT_TRUE(classify(l).is_rank_one_functional());
    EXPECT_GT(sample_rank_preservation(l, 3, 3, 200, 1).mismatches, 0u);
}
