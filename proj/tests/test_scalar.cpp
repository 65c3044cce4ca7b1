#include <gtest/gtest.h>

#include "cacti/rng.hpp"
#include "cacti/scalar.hpp"

using namespace cacti;

TEST(Scalar, RationalArithmetic) {
    Field Q = Field::rationals();
    Scalar a = parse_scalar("1/3", Q), b = parse_scalar("1/6", Q);
    EXPECT_EQ((a + b).str(), "1/2");
    EXPECT_EQ((-Scalar::zero(Q)).str(), "0");
    EXPECT_EQ((a - a).str(), "0");
    EXPECT_EQ((a * b).str(), "1/18");
    EXPECT_EQ((a / b).str(), "2");
}

TEST(Scalar, PrimeFieldArithmetic) {
    Field F7 = Field::prime(7);
    EXPECT_EQ(Scalar::of_int(F7, 3).inv().str(), "5");
    EXPECT_EQ(parse_scalar("9", F7).str(), "2");
    EXPECT_THROW(parse_scalar("1/7", F7), DivisionByZero);
    EXPECT_EQ(parse_scalar("-1", F7).str(), "6");
    EXPECT_EQ(parse_scalar("3/5", F7).str(), "2"); // 3 * 5^{-1} = 3 * 3 = 2
}

TEST(Scalar, Errors) {
    Field Q = Field::rationals();
    Field F7 = Field::prime(7);
    EXPECT_THROW(Scalar::one(Q) / Scalar::zero(Q), DivisionByZero);
    EXPECT_THROW(Scalar::zero(F7).inv(), DivisionByZero);
    EXPECT_THROW(Scalar::one(Q) + Scalar::one(F7), MixedFields);
    EXPECT_THROW(parse_scalar("2/3x", Q), ParseError);
    EXPECT_THROW(parse_scalar("", Q), ParseError);
    EXPECT_THROW(parse_scalar("1/0", Q), DivisionByZero);
    EXPECT_THROW(Field::prime(6), UnsupportedParams);
}

TEST(Scalar, ParsePrintRoundTrip) {
    Field Q = Field::rationals();
    SplitMix64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        long n = rng.range(-40, 40);
        long d = rng.range(1, 23);
        Scalar s = Scalar::of_mpq(Q, mpq_class(n, d));
        EXPECT_EQ(parse_scalar(s.str(), Q), s);
    }
    Field F11 = Field::prime(11);
    for (int i = 0; i < 50; ++i) {
        Scalar s = Scalar::of_int(F11, rng.range(-30, 30));
        EXPECT_EQ(parse_scalar(s.str(), F11), s);
    }
}

TEST(Scalar, FieldAxiomsOnSamples) {
    for (Field f : {Field::rationals(), Field::prime(7), Field::prime(5)}) {
        SplitMix64 rng(99);
        for (int i = 0; i < 100; ++i) {
            Scalar a = Scalar::of_int(f, rng.range(-9, 9));
            Scalar b = Scalar::of_int(f, rng.range(-9, 9));
            Scalar c = Scalar::of_int(f, rng.range(-9, 9));
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a + (-a), Scalar::zero(f));
            if (!a.is_zero()) EXPECT_EQ(a * a.inv(), Scalar::one(f));
        }
    }
}
