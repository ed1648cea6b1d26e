#include "osprep/field.hpp"

#include <gtest/gtest.h>

#include <random>

using osprep::FieldScalar;
using osprep::Rational;

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return {num(rng), den(rng)};
}

FieldScalar random_scalar(std::mt19937& rng) { return {random_rational(rng), random_rational(rng)}; }

}  // namespace

TEST(Rational, ReducesAndParses) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(3, -6).str(), "-1/2");
    EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FloorAndFactorial) {
    EXPECT_EQ(Rational(-3, 2).floor(), Rational(-2));
    EXPECT_EQ(Rational(7, 2).floor(), Rational(3));
    EXPECT_EQ(osprep::factorial(5), Rational(120));
    EXPECT_EQ(osprep::factorial(0), Rational(1));
}

TEST(FieldScalar, ZetaSquared) {
    auto z = FieldScalar::zeta();
    EXPECT_EQ(z * z, FieldScalar(Rational(-1, 2)));
}

TEST(FieldScalar, ConjOfZeta) {
    EXPECT_EQ(FieldScalar::zeta().conj(), -FieldScalar::zeta());
}

TEST(FieldScalar, OnePlusZetaTimesOneMinusZeta) {
    auto z = FieldScalar::zeta();
    // 1 - z^2 = 1 + 1/2
    EXPECT_EQ((FieldScalar(1) + z) * (FieldScalar(1) - z), FieldScalar(Rational(3, 2)));
}

TEST(FieldScalar, DivisionByZeroThrows) {
    EXPECT_THROW(FieldScalar(1) / FieldScalar(0), std::domain_error);
}

TEST(FieldScalar, FieldAxiomsOnRandomElements) {
    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
        auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), FieldScalar(1));
            EXPECT_EQ((b / a) * a, b);
        }
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
        EXPECT_EQ(a.conj().conj(), a);
        EXPECT_EQ(a * a.conj(), FieldScalar(a.norm()));
    }
}

TEST(FieldScalar, StringRoundTrip) {
    std::mt19937 rng(5);
    for (int it = 0; it < 100; ++it) {
        auto a = random_scalar(rng);
        EXPECT_EQ(FieldScalar::parse(a.str()), a) << a.str();
    }
    EXPECT_EQ(FieldScalar::parse("1/2 + -3/4*z"), FieldScalar(Rational(1, 2), Rational(-3, 4)));
    EXPECT_EQ(FieldScalar::parse("2*z"), FieldScalar(Rational(0), Rational(2)));
    EXPECT_EQ(FieldScalar::parse("-1/3-2*z"), FieldScalar(Rational(-1, 3), Rational(-2)));
}
