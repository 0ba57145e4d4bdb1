#include <gtest/gtest.h>

#include "smfree/nc_partitions.hpp"
#include "support.hpp"

using namespace smfree;

TEST(NCPartitions, CountsAreCatalan)
{
    for (std::size_t m = 1; m <= 10; ++m) {
        EXPECT_EQ(oracle::Q(static_cast<long>(enumerate_nc(m).size())), oracle::catalan(m)) << "m=" << m;
    }
    for (std::size_t m = 1; m <= 7; ++m) EXPECT_EQ(enumerate_nc(m).size(), oracle::count_noncrossing(m));
    EXPECT_EQ(enumerate_nc(3).size(), 5u);
    EXPECT_EQ(enumerate_nc(4).size(), 14u);
}

TEST(NCPartitions, RejectsCrossingAndBadInput)
{
    EXPECT_THROW(NCPartition(4, {{1, 3}, {2, 4}}), std::invalid_argument);
    EXPECT_THROW(NCPartition(3, {{1, 2}}), std::invalid_argument);
    EXPECT_THROW(NCPartition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    EXPECT_THROW(enumerate_nc(0), std::out_of_range);
}

TEST(NCPartitions, CanonicalNesting)
{
    const NCPartition zeta(8, {{5, 6}, {2, 7}, {8, 1}, {3, 4}});
    EXPECT_EQ(zeta.blocks(), (std::vector<std::vector<int>>{{1, 8}, {2, 7}, {3, 4}, {5, 6}}));
    EXPECT_FALSE(zeta.nearest_outer(0).has_value());
    EXPECT_EQ(zeta.nearest_outer(1), 0u);
    EXPECT_EQ(zeta.nearest_outer(2), 1u);
    EXPECT_EQ(zeta.nearest_outer(3), 1u);
}

TEST(Labelling, InheritsOrTakesOuterColour)
{
    const NCPartition zeta(8, {{1, 8}, {2, 7}, {3, 4}, {5, 6}});
    auto mixed = label_and_admit(zeta, {1, 2, 1, 1}, Shape::square());
    ASSERT_TRUE(mixed);
    EXPECT_EQ(mixed->labels, (std::vector<Cell>{{1, 1}, {2, 1}, {1, 2}, {1, 2}}));

    auto mono = label_and_admit(zeta, {1, 1, 1, 1}, Shape::diagonal());
    ASSERT_TRUE(mono);
    for (auto c : mono->labels) EXPECT_EQ(c, (Cell{1, 1}));

    // Inner blocks sharing the colour of a differently coloured parent inherit
    // its label; the colouring is admitted (see the ledger on labelling).
    auto inherit = label_and_admit(zeta, {1, 2, 2, 2}, Shape::square());
    ASSERT_TRUE(inherit);
    EXPECT_EQ(inherit->labels, (std::vector<Cell>{{1, 1}, {2, 1}, {2, 1}, {2, 1}}));

    EXPECT_FALSE(label_and_admit(zeta, {1, 2, 1, 1}, Shape::lower_triangular()));
}

TEST(Labelling, AdmissibleCounts)
{
    EXPECT_EQ(enumerate_admissible(1, Shape::square()).size(), 2u);
    EXPECT_EQ(enumerate_admissible(2, Shape::square()).size(), 6u);
    // nested blocks of different colours need an off-diagonal label
    EXPECT_EQ(enumerate_admissible(2, Shape::diagonal()).size(), 6u);
    for (const auto& p : enumerate_admissible(3, Shape::diagonal())) {
        for (auto c : p.labels) EXPECT_TRUE(c.diagonal());
    }
    EXPECT_LT(enumerate_admissible(3, Shape::diagonal()).size(), enumerate_admissible(3, Shape::square()).size());
}
