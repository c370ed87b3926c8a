#include "support.hpp"

using namespace tpres;
using namespace tpres::testing;

TEST(Field, ParsesTags) {
    EXPECT_EQ(FieldDescriptor::parse("q"), Q);
    EXPECT_EQ(FieldDescriptor::parse("qi"), QI);
    EXPECT_EQ(FieldDescriptor::parse("gf:13").characteristic(), 13u);
    EXPECT_EQ(FieldDescriptor::parse("gf:13").tag(), "gf:13");
    EXPECT_TRUE(GF5.is_finite());
    EXPECT_FALSE(Q.is_finite());
    EXPECT_TRUE(Q.is_real_closed_compatible());
    EXPECT_FALSE(QI.is_real_closed_compatible());
}

TEST(Field, RejectsBadTags) {
    for (const char* t : {"", "r", "gf:", "gf:12", "gf:1", "gf:x", "gf:4294967311"})
        EXPECT_THROW(FieldDescriptor::parse(t), error) << t;
}

TEST(Scalar, RationalSum) { EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6)); }

TEST(Scalar, InverseModThirteen) { EXPECT_EQ(s(GF13, 2).inv(), s(GF13, 7)); }

TEST(Scalar, PowerOfDifference) { EXPECT_EQ(q(2).pow(3), q(8)); }

TEST(Scalar, NegativePowers) {
    EXPECT_EQ(q(2).pow(-2), q(1, 4));
    EXPECT_EQ(s(GF13, 2).pow(-1), s(GF13, 7));
    EXPECT_EQ(q(5).pow(0), q(1));
}

TEST(Scalar, DivisionByZero) {
    try {
        (void)(q(1) / q(0));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::division_by_zero);
    }
    EXPECT_THROW(s(GF13, 0).inv(), error);
    EXPECT_THROW(Scalar::zero(QI).inv(), error);
}

TEST(Scalar, FieldMismatch) {
    try {
        (void)(q(1) + s(GF13, 1));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::field_mismatch);
    }
    EXPECT_THROW((void)(q(1) == s(GF5, 1)), error);
}

TEST(Scalar, GaussianArithmetic) {
    const auto i = Scalar::gaussian(0, 1);
    EXPECT_EQ(i * i, s(QI, -1));
    const auto z = tok("3+4i", QI);
    EXPECT_EQ(z * z.inv(), Scalar::one(QI));
    EXPECT_EQ(format_scalar(z.inv()), "3/25-4/25i");
}

TEST(Parse, Examples) {
    EXPECT_EQ(parse_scalar("-3/4", Q), q(-3, 4));
    EXPECT_EQ(parse_scalar("2+5i", QI), Scalar::gaussian(2, 5));
    EXPECT_EQ(parse_scalar("11", GF13).residue(), 11u);
    EXPECT_EQ(parse_scalar("-i", QI), Scalar::gaussian(0, -1));
    EXPECT_EQ(parse_scalar("1/2-3/4i", QI), Scalar::gaussian(mpq_class(1, 2), mpq_class(-3, 4)));
    EXPECT_EQ(parse_scalar("6/4", Q), q(3, 2));
}

TEST(Parse, Errors) {
    auto code = [](const char* t, const FieldDescriptor& d) {
        try {
            parse_scalar(t, d);
        } catch (const error& e) {
            return e.code();
        }
        return errc::invalid_argument;
    };
    EXPECT_EQ(code("1/0", Q), errc::parse_error);
    EXPECT_EQ(code("", Q), errc::parse_error);
    EXPECT_EQ(code("abc", Q), errc::parse_error);
    EXPECT_EQ(code("1.5", Q), errc::parse_error);
    EXPECT_EQ(code("2+i", Q), errc::parse_error);
    EXPECT_EQ(code("13", GF13), errc::not_a_residue);
    EXPECT_EQ(code("-1", GF13), errc::not_a_residue);
}

TEST(Format, CanonicalTokensRoundTrip) {
    for (const char* t : {"0", "-3/4", "17", "123456789012345678901234567890"})
        EXPECT_EQ(format_scalar(parse_scalar(t, Q)), t);
    for (const char* t : {"0", "2+5i", "-1/2-i", "i", "3", "-7/3i"})
        EXPECT_EQ(format_scalar(parse_scalar(t, QI)), t);
    for (const char* t : {"0", "1", "12"}) EXPECT_EQ(format_scalar(parse_scalar(t, GF13)), t);
}

class FieldProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(FieldProperty, AxiomsOnRandomTriples) {
    const auto d = FieldDescriptor::parse(GetParam());
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        const auto a = random_scalar(d, rng), b = random_scalar(d, rng), c = random_scalar(d, rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a - a, Scalar::zero(d));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inv(), Scalar::one(d));
        }
        EXPECT_EQ(parse_scalar(format_scalar(a), d), a);
    }
}

INSTANTIATE_TEST_SUITE_P(AllFields, FieldProperty, ::testing::Values("q", "qi", "gf:5", "gf:13", "gf:4294967291"));

TEST(Scalar, FermatLittleTheorem) {
    for (std::uint64_t p : {5u, 13u, 101u, 4294967291u}) {
        const auto d = FieldDescriptor::prime(p);
        std::mt19937_64 rng(p);
        for (int k = 0; k < 50; ++k) {
            const auto a = random_nonzero_scalar(d, rng);
            EXPECT_TRUE(a.pow(static_cast<long long>(p - 1)).is_one());
        }
    }
}

TEST(Scalar, RationalImageInPrimeField) {
    EXPECT_EQ(Scalar::from_rational(GF13, mpq_class(1, 2)), s(GF13, 7));
    EXPECT_EQ(Scalar::from_int(GF13, -1), s(GF13, 12));
    EXPECT_THROW(Scalar::from_rational(GF13, mpq_class(1, 13)), error);
}

TEST(Scalar, NonCanonicalFractionsNormalize) {
    EXPECT_EQ(Scalar::from_rational(Q, mpq_class(0, 2)), q(0));
    EXPECT_TRUE(Scalar::from_rational(Q, mpq_class(0, 2)).is_zero());
    EXPECT_EQ(format_scalar(Scalar::from_rational(Q, mpq_class(9, 24))), "3/8");
    EXPECT_EQ(Scalar::gaussian(mpq_class(2, 4), mpq_class(3, 6)), parse_scalar("1/2+1/2i", QI));
}
