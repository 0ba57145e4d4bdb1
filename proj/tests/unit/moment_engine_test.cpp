#include <gtest/gtest.h>

#include "smfree/moment_engine.hpp"
#include "support.hpp"
#include "worked_examples.hpp"

using namespace smfree;
using testing_support::to_poly;
using testing_support::to_scalars;

TEST(MomentsFromCumulants, SemicirclePointMassAndZero)
{
    EXPECT_EQ(to_poly(moments_from_cumulants(to_scalars({0, 1}), 8, Mode::rational)),
              (oracle::Poly{1, 0, 1, 0, 2, 0, 5, 0, 14}));
    EXPECT_EQ(to_poly(moments_from_cumulants(to_scalars({3}), 4, Mode::rational)), (oracle::Poly{1, 3, 9, 27, 81}));
    EXPECT_EQ(to_poly(moments_from_cumulants({}, 3, Mode::rational)), (oracle::Poly{1, 0, 0, 0}));
}

TEST(MomentsFromCumulants, MatchesBruteForce)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<oracle::Q> r(5);
        for (auto& q : r) q = oracle::random_rational(rng);
        EXPECT_EQ(to_poly(moments_from_cumulants(to_scalars(r), 7, Mode::rational)), oracle::moments_bruteforce(r, 7));
    }
}

TEST(SmfMoments, DynamicProgrammingMatchesEnumeration)
{
    std::mt19937_64 rng(3);
    for (const auto& shape : testing_support::named_shapes()) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto d = testing_support::random_array(rng, shape);
            EXPECT_EQ(to_poly(smf_moments(d, 6)), to_poly(smf_moments_enumerated(d, 6))) << shape.name();
        }
    }
}

TEST(SmfMoments, SingleCellDegenerates)
{
    DistributionArray d(Shape::custom({{1, 1}}), Mode::rational);
    d.set({1, 1}, to_scalars({1, 2, -1}));
    EXPECT_EQ(to_poly(smf_moments(d, 7)), oracle::moments_bruteforce({1, 2, -1}, 7));
}

TEST(SmfMoments, SquareRowIdenticalIsFree)
{
    const std::vector<oracle::Q> r1{1, 2, 0, -1};
    const std::vector<oracle::Q> r2{-2, 1, 3};
    const auto d = DistributionArray::row_identical(Shape::square(), to_scalars(r1), to_scalars(r2));
    EXPECT_EQ(to_poly(smf_moments(d, 8)), oracle::free_moments(r1, r2, 8));
}

TEST(SmfMoments, LowOrdersByHand)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        std::array<std::array<oracle::Q, 3>, 4> r;
        DistributionArray d(Shape::square(), Mode::rational);
        for (auto c : kAllCells) {
            for (auto& q : r[c.index()]) q = oracle::random_rational(rng);
            d.set(c, to_scalars({r[c.index()].begin(), r[c.index()].end()}));
        }
        const auto m = to_poly(smf_moments(d, 3));
        const auto expected = worked::low_moments(r);
        for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(m[n], expected[n - 1]) << "M(" << n << ")";
    }
}

TEST(ColouringSums, PairPartitions)
{
    std::mt19937_64 rng(17);
    for (const auto& c : worked::displayed_polynomials()) {
        if (c.known_deviation) continue;
        for (int trial = 0; trial < 5; ++trial) {
            const auto [got, want] = worked::evaluate(c, rng);
            EXPECT_EQ(got, want) << c.name;
        }
    }
}

TEST(ColouringSums, ZetaUnderInheritance)
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 5; ++trial) {
        const worked::Variances v{oracle::random_rational(rng), oracle::random_rational(rng),
                                  oracle::random_rational(rng), oracle::random_rational(rng)};
        const oracle::Q a = v.r11 + v.r21;
        const oracle::Q b = v.r22 + v.r12;
        const oracle::Q x = v.r12 + v.r21;
        const oracle::Q expected = v.r11 * v.r11 * a * a + v.r11 * v.r21 * x * x + v.r22 * v.r22 * b * b +
                                   v.r22 * v.r12 * x * x;
        EXPECT_EQ(worked::colouring_sum(worked::zeta(), worked::variance_array(Shape::square(), v)), expected);
    }
}

TEST(ColouringSums, LowerTriangularChiIsTheGeneralFormRestricted)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 5; ++trial) {
        const oracle::Q r1 = oracle::random_rational(rng);
        const oracle::Q r2 = oracle::random_rational(rng);
        const worked::Variances v{r1, 0, r2, r2};
        const oracle::Q expected = r1 * (r1 + r2) * (r1 + r2) + r2 * r2 * r2;
        EXPECT_EQ(worked::colouring_sum(worked::chi(), worked::variance_array(Shape::lower_triangular(), v)), expected);
    }
}

TEST(ColouringSums, MonochromaticColouring)
{
    DistributionArray d(Shape::square(), Mode::rational);
    d.set({1, 1}, to_scalars({2, 3}));
    d.set({2, 2}, to_scalars({5, 7}));
    const NCPartition p(3, {{1, 3}, {2}});
    const auto one = label_and_admit(p, {1, 1}, d.shape());
    ASSERT_TRUE(one);
    EXPECT_EQ(partition_contribution(*one, d), Scalar::rational(3 * 2));
    const auto two = label_and_admit(p, {2, 2}, d.shape());
    ASSERT_TRUE(two);
    EXPECT_EQ(partition_contribution(*two, d), Scalar::rational(7 * 5));
}
