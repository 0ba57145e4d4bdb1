#include <gtest/gtest.h>

#include "smfree/analytic.hpp"
#include "smfree/moment_engine.hpp"
#include "support.hpp"

using namespace smfree;
using testing_support::to_poly;
using testing_support::to_scalars;

namespace {

const std::vector<oracle::Q> kR1{1, 2, 0, -1};
const std::vector<oracle::Q> kR2{-2, 1, 3};

NamedLaw law(const std::vector<oracle::Q>& r) { return NamedLaw::custom(to_scalars(r)); }

}  // namespace

TEST(NamedLaw, Transforms)
{
    EXPECT_EQ(to_poly(NamedLaw::semicircle(Scalar::rational(2)).r_transform(3)), (oracle::Poly{0, 2, 0, 0}));
    EXPECT_EQ(to_poly(NamedLaw::point_mass(Scalar::rational(-1)).r_transform(2)), (oracle::Poly{-1, 0, 0}));
    EXPECT_EQ(to_poly(moments_from_r(NamedLaw::semicircle(Scalar::rational(1)).r_transform(6), 6)), (oracle::Poly{1, 0, 1, 0, 2, 0, 5}));
}

TEST(Subordination, SemicircleSum)
{
    const auto r = binary_convolution(NamedLaw::semicircle(Scalar::rational(1)),
                                      NamedLaw::semicircle(Scalar::rational(1)), ConvolutionKind::free, 6);
    EXPECT_EQ(to_poly(r.moments), (oracle::Poly{1, 0, 2, 0, 8, 0, 40}));
    EXPECT_TRUE(r.closed_form_holds);
}

TEST(Subordination, KindsMatchOracles)
{
    const std::size_t n = 8;
    const auto a = law(kR1);
    const auto b = law(kR2);
    const std::vector<std::pair<ConvolutionKind, oracle::Poly>> cases{
        {ConvolutionKind::free, oracle::free_moments(kR1, kR2, n)},
        {ConvolutionKind::monotone, oracle::monotone_moments(kR1, kR2, n)},
        {ConvolutionKind::boolean, oracle::boolean_moments(kR1, kR2, n)},
        {ConvolutionKind::s_free, oracle::s_free_moments(kR1, kR2, n)},
        {ConvolutionKind::orthogonal, oracle::orthogonal_moments(kR1, kR2, n)},
    };
    for (const auto& [kind, expected] : cases) {
        const auto r = binary_convolution(a, b, kind, n);
        EXPECT_EQ(to_poly(r.moments), expected) << to_string(kind);
        EXPECT_TRUE(r.closed_form_holds) << to_string(kind);
        EXPECT_EQ(to_poly(smf_moments(r.array, n)), expected) << to_string(kind);
    }
}

TEST(Subordination, MonotoneIsNotCommutative)
{
    const auto ab = binary_convolution(law(kR1), law(kR2), ConvolutionKind::monotone, 5).moments;
    const auto ba = binary_convolution(law(kR2), law(kR1), ConvolutionKind::monotone, 5).moments;
    EXPECT_NE(to_poly(ab), to_poly(ba));
}

TEST(Subordination, RandomArraysAgreeWithPartitions)
{
    std::mt19937_64 rng(43);
    for (const auto& shape : testing_support::named_shapes()) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto d = testing_support::random_array(rng, shape);
            const auto fam = solve_subordination(d, 8);
            EXPECT_LE(fam.rounds, 10u);
            EXPECT_EQ(to_poly(master_cauchy(d, 8)), to_poly(smf_moments(d, 8))) << shape.name();
        }
    }
}

TEST(Subordination, FloatingModeAgreesApproximately)
{
    DistributionArray q(Shape::square(), Mode::rational);
    DistributionArray f(Shape::square(), Mode::floating);
    std::mt19937_64 rng(47);
    for (auto c : kAllCells) {
        std::vector<Scalar> rq;
        std::vector<Scalar> rf;
        for (int n = 0; n < 4; ++n) {
            const auto x = oracle::random_rational(rng);
            rq.push_back(Scalar::rational(x));
            rf.push_back(Scalar::floating(x.get_d()));
        }
        q.set(c, rq);
        f.set(c, rf);
    }
    const auto exact = master_cauchy(q, 7);
    const auto approx = master_cauchy(f, 7);
    for (std::size_t n = 0; n <= 7; ++n) {
        EXPECT_TRUE(approx_equal(approx[n], exact[n].converted(Mode::floating), 1e-9)) << n;
    }
}

TEST(ConvolutionKinds, NamesAndShapes)
{
    EXPECT_EQ(parse_convolution_kind("s-free"), ConvolutionKind::s_free);
    EXPECT_EQ(parse_convolution_kind("orthogonal"), ConvolutionKind::orthogonal);
    EXPECT_THROW(parse_convolution_kind("classical"), std::invalid_argument);
    EXPECT_EQ(shape_for(ConvolutionKind::boolean), Shape::diagonal());
    EXPECT_EQ(shape_for(ConvolutionKind::monotone), Shape::lower_triangular());
}
