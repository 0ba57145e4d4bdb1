#include <gtest/gtest.h>

#include "smfree/fock.hpp"
#include "smfree/moment_engine.hpp"
#include "support.hpp"

using namespace smfree;
using testing_support::to_poly;
using testing_support::to_scalars;

namespace {

DistributionArray sample_array()
{
    DistributionArray d(Shape::square(), Mode::rational);
    d.set({1, 1}, to_scalars({1, 2, -1}));
    d.set({1, 2}, to_scalars({-2, 1}));
    d.set({2, 1}, to_scalars({3, 0, 1}));
    d.set({2, 2}, to_scalars({0, 1, 2, 1}));
    return d;
}

}  // namespace

TEST(FockWords, Validity)
{
    EXPECT_TRUE(valid_word({}));
    EXPECT_TRUE(valid_word({{1, 1}, {1, 1}}));
    EXPECT_TRUE(valid_word({{2, 1}, {1, 1}}));
    EXPECT_TRUE(valid_word({{1, 2}, {2, 1}, {1, 1}}));
    EXPECT_FALSE(valid_word({{1, 2}}));
    EXPECT_FALSE(valid_word({{1, 2}, {1, 1}}));
    EXPECT_FALSE(valid_word({{1, 1}, {2, 2}}));
    EXPECT_EQ(to_string(FockWord{}), "Omega");
    EXPECT_EQ(to_string(FockWord{{2, 1}, {1, 1}}), "(2,1)(1,1)");
}

TEST(FockModel, BasisGrowsByDoubling)
{
    const auto model = FockModel::build(sample_array(), 5);
    EXPECT_EQ(model.dimension(), 63u);
    for (std::size_t id = 0; id < model.dimension(); ++id) EXPECT_TRUE(valid_word(model.word(id)));
}

TEST(FockModel, CreationOnVacuum)
{
    const auto model = FockModel::build(sample_array(), 3);
    EXPECT_TRUE(model.creation({1, 2}).apply(model.vacuum()).empty());
    const auto v = model.creation({2, 2}).apply(model.vacuum());
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(model.word(v.begin()->first), (FockWord{{2, 2}}));
    EXPECT_EQ(v.begin()->second, Scalar::rational(1));
    // (1,2) cannot be prepended to (1,1)
    EXPECT_TRUE(model.creation({1, 2}).apply(model.basis_vector({{1, 1}})).empty());
}

TEST(FockModel, StateMoments)
{
    const auto model = FockModel::build(sample_array(), 4);
    const auto mode = Mode::rational;
    for (auto c : kAllCells) {
        const Scalar delta = Scalar::rational(c.diagonal() ? 1 : 0);
        const std::vector<Factor> unit{Factor::u(UnitElement::unit(c, mode))};
        EXPECT_EQ(model.state_moment(State::phi, unit), delta) << c.to_string();
        EXPECT_EQ(model.state_moment(State::phi1, unit), Scalar::rational(c.col == 1 ? 1 : 0)) << c.to_string();
        EXPECT_EQ(model.state_moment(State::phi2, unit), Scalar::rational(c.col == 2 ? 1 : 0)) << c.to_string();
    }
    const std::vector<Factor> a{Factor::A()};
    EXPECT_EQ(model.state_moment(State::phi, a), Scalar::rational(1 + 0));
    const std::vector<Factor> off{Factor::a({1, 2})};
    EXPECT_EQ(model.state_moment(State::phi, off), Scalar::rational(0));
    std::vector<Factor> too_long(5, Factor::A());
    EXPECT_THROW((void)model.state_moment(State::phi, too_long), DepthExceeded);
}

TEST(FockModel, MomentsMatchPartitionEngine)
{
    const auto d = sample_array();
    const auto model = FockModel::build(d, 7);
    EXPECT_EQ(to_poly(fock_moments(model, 7)), to_poly(smf_moments(d, 7)));
    EXPECT_THROW((void)fock_moments(model, 8), DepthExceeded);
}

TEST(FockModel, AlphaDoesNotChangeMoments)
{
    const auto d = sample_array();
    const std::array<Scalar, 4> alphas{Scalar::rational(2), Scalar::rational(1, 3), Scalar::rational(5),
                                       Scalar::rational(3, 2)};
    const auto scaled = FockModel::build(d, 6, alphas);
    EXPECT_EQ(to_poly(fock_moments(scaled, 6)), to_poly(smf_moments(d, 6)));
    EXPECT_TRUE(axiom_check(scaled, 20).ok());
}

TEST(FockModel, SingleCellTransforms)
{
    const auto d = sample_array();
    const auto model = FockModel::build(d, 7);
    for (auto c : kAllCells) {
        EXPECT_EQ(single_cell_r(model, c, 6), d.r_transform(c, 5)) << c.to_string();
    }

    DistributionArray semi(Shape::diagonal(), Mode::rational);
    semi.set({1, 1}, to_scalars({0, 1}));
    semi.set({2, 2}, to_scalars({4}));
    const auto m2 = FockModel::build(semi, 5);
    EXPECT_EQ(to_poly(single_cell_r(m2, {1, 1}, 5)), (oracle::Poly{0, 1, 0, 0, 0}));
    EXPECT_EQ(to_poly(single_cell_r(m2, {2, 2}, 5)), (oracle::Poly{4, 0, 0, 0, 0}));
}

TEST(FockModel, ZeroArrayHasZeroTransform)
{
    DistributionArray d(Shape::square(), Mode::rational);
    const auto model = FockModel::build(d, 5);
    for (auto c : kAllCells) EXPECT_EQ(to_poly(single_cell_r(model, c, 4)), (oracle::Poly{0, 0, 0, 0}));
}

TEST(FockModel, Axioms)
{
    for (const auto& shape : testing_support::named_shapes()) {
        std::mt19937_64 rng(23);
        const auto model = FockModel::build(testing_support::random_array(rng, shape), 6);
        const auto report = axiom_check(model, 50);
        EXPECT_GT(report.checks, 100u);
        for (const auto& v : report.violations) ADD_FAILURE() << shape.name() << ": " << v;
    }
}

TEST(FockModel, CentredProductOfDiagonalCells)
{
    const auto d = sample_array();
    const auto model = FockModel::build(d, 4);
    const auto mode = Mode::rational;
    const Scalar phi11 = d.cumulant({1, 1}, 1);
    const Scalar phi22 = d.cumulant({2, 2}, 1);
    // (a11 - phi(a11) 1_11)(a22 - phi(a22) 1_22), expanded
    const Scalar value = model.state_moment(State::phi, std::vector<Factor>{Factor::a({1, 1}), Factor::a({2, 2})}) -
                         phi22 * model.state_moment(State::phi, std::vector<Factor>{
                                                                    Factor::a({1, 1}),
                                                                    Factor::u(UnitElement::unit({2, 2}, mode))}) -
                         phi11 * model.state_moment(State::phi, std::vector<Factor>{
                                                                    Factor::u(UnitElement::unit({1, 1}, mode)),
                                                                    Factor::a({2, 2})}) +
                         phi11 * phi22 *
                             model.state_moment(State::phi,
                                                std::vector<Factor>{Factor::u(UnitElement::unit({1, 1}, mode)),
                                                                    Factor::u(UnitElement::unit({2, 2}, mode))});
    EXPECT_EQ(value, Scalar::rational(0));
}

TEST(UnitAlgebra, Correspondences)
{
    const auto mode = Mode::rational;
    const auto q = [&](int i, int j) { return UnitElement::q({i, j}, mode); };
    EXPECT_EQ(UnitElement::unit({1, 1}, mode), q(1, 1) + q(2, 1));
    EXPECT_EQ(UnitElement::unit({2, 2}, mode), q(1, 1) + q(1, 2));
    EXPECT_EQ(UnitElement::unit({1, 2}, mode), q(1, 2) + q(2, 2));
    EXPECT_EQ(UnitElement::unit({2, 1}, mode), q(2, 1) + q(2, 2));
    EXPECT_EQ(UnitElement::identity(mode), q(1, 1) + q(1, 2) + q(2, 1) + q(2, 2));
    EXPECT_TRUE(UnitElement::unit({1, 2}, mode).is_projection());
    EXPECT_FALSE((UnitElement::unit({1, 2}, mode) * Scalar::rational(2)).is_projection());

    const auto model = FockModel::build(sample_array(), 4);
    std::vector<std::size_t> all(model.dimension());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    for (auto c : kAllCells) {
        EXPECT_TRUE(model.unit_operator(UnitElement::unit(c, mode)).equals_on(model.direct_unit(c), all, mode))
            << c.to_string();
    }
}
