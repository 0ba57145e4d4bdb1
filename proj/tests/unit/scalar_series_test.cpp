#include <gtest/gtest.h>

#include "smfree/scalar.hpp"
#include "smfree/series.hpp"
#include "support.hpp"

using namespace smfree;

namespace {

TruncatedSeries rat(std::vector<long> c)
{
    std::vector<Scalar> s;
    for (long x : c) s.push_back(Scalar::rational(x));
    return TruncatedSeries(std::move(s));
}

}  // namespace

TEST(Scalar, ParsesRationalsAndDecimals)
{
    EXPECT_EQ(Scalar::parse("3/6", Mode::rational).to_string(), "1/2");
    EXPECT_EQ(Scalar::parse("-0.25", Mode::rational).to_string(), "-1/4");
    EXPECT_EQ(Scalar::parse("7", Mode::rational).to_string(), "7");
    EXPECT_EQ(Scalar::parse("0.1", Mode::floating).to_string(), "0.1");
    EXPECT_THROW(Scalar::parse("1/0", Mode::rational), std::exception);
    EXPECT_THROW(Scalar::parse("abc", Mode::rational), std::exception);
}

TEST(Scalar, ModesDoNotMix)
{
    EXPECT_THROW(Scalar::rational(1) + Scalar::floating(1.0), ModeMismatch);
    EXPECT_THROW(Scalar::rational(1) / Scalar::rational(0), std::domain_error);
    EXPECT_EQ(pow(Scalar::rational(2, 3), 3), Scalar::rational(8, 27));
}

TEST(Series, ProductKeepsCommonOrder)
{
    const auto p = rat({1, 1}) * rat({1, -1, 0});
    EXPECT_EQ(p.order(), 1u);
    EXPECT_EQ(p, rat({1, 0}));
    EXPECT_EQ(rat({1, 1, 0}) * rat({1, -1, 0}), rat({1, 0, -1}));
}

TEST(Series, ComposeMatchesExpansion)
{
    const auto f = rat({0, 0, 1, 0, 0});
    const auto g = rat({0, 1, 1, 0, 0});
    EXPECT_EQ(compose(f, g), rat({0, 0, 1, 2, 1}));
    EXPECT_THROW(compose(f, rat({1, 1})), std::domain_error);
}

TEST(Series, ReciprocalAndReversion)
{
    const auto f = rat({1, -1, 0, 0, 0});
    EXPECT_EQ(reciprocal(f), rat({1, 1, 1, 1, 1}));
    // z/(1+z) reverses to z/(1-z)
    const auto g = rat({0, 1, -1, 1, -1, 1});
    EXPECT_EQ(reversion(g), rat({0, 1, 1, 1, 1, 1}));
    EXPECT_EQ(compose(g, reversion(g)), TruncatedSeries::identity(5, Mode::rational));
}

TEST(Series, InverseOfCMatchesCompositionSum)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<oracle::Q> r(5);
        for (auto& q : r) q = oracle::random_rational(rng);
        const auto rs = TruncatedSeries(testing_support::to_scalars(r));
        const auto b = mult_inverse_c(rs, 5);
        EXPECT_EQ(testing_support::to_poly(b), oracle::composition_inverse(r, 5));
        EXPECT_EQ(regular_part_from_inverse(b), rs.truncated(4));
    }
    // R = r constant: b = 1, -r, r^2, ...
    const auto b = mult_inverse_c(rat({3, 0, 0}), 3);
    EXPECT_EQ(b, rat({1, -3, 9, -27}));
}

TEST(Series, CumulantsFromMoments)
{
    // semicircle moments give R(z) = z
    EXPECT_EQ(r_from_moments(rat({1, 0, 1, 0, 2, 0, 5})), rat({0, 1, 0, 0, 0, 0}));
    // point mass at 2
    EXPECT_EQ(r_from_moments(rat({1, 2, 4, 8, 16})), rat({2, 0, 0, 0}));
}
