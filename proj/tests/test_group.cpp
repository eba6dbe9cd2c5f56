#include <gtest/gtest.h>

#include "skewring/group.hpp"

using namespace skewring;

namespace {

void expect_group_axioms(const Group& g)
{
    const auto n = g.order();
    for (std::uint32_t a = 0; a < n; ++a) {
        EXPECT_EQ(g.mul(0, a), a);
        EXPECT_EQ(g.mul(a, 0), a);
        EXPECT_EQ(g.mul(a, g.inv(a)), 0u);
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c))) << g.family();
    }
}

}  // namespace

TEST(Group, DihedralShapes)
{
    for (std::uint32_t order : {4u, 6u, 8u, 10u, 20u})
        for (bool il : {false, true}) {
            const auto g = Group::dihedral(order, il);
            expect_group_axioms(g);
            EXPECT_FALSE(order > 4 && g.is_abelian());
            // n reflections, plus the rotation of order 2 when n is even
            const auto half = order / 2;
            EXPECT_EQ(g.involution_count(), half + (half % 2 == 0 ? 1 : 0)) << order;
        }
}

TEST(Group, D6Relations)
{
    const auto g = Group::dihedral(6);
    const auto x = static_cast<std::uint32_t>(g.find("x"));
    const auto y = static_cast<std::uint32_t>(g.find("y"));
    EXPECT_EQ(g.pow(x, 3), 0u);
    EXPECT_EQ(g.pow(y, 2), 0u);
    EXPECT_EQ(g.mul(g.mul(g.inv(y), x), y), g.inv(x));
}

TEST(Group, CyclicAndTrivial)
{
    EXPECT_EQ(Group::cyclic(1).order(), 1u);
    const auto c5 = Group::cyclic(5);
    expect_group_axioms(c5);
    EXPECT_TRUE(c5.is_abelian());
    EXPECT_TRUE(c5.is_canonical_cyclic());
}

TEST(Group, SemidirectAbelianOnlyForTrivialAction)
{
    EXPECT_TRUE(Group::semidirect(7, 3, 1).is_abelian());
    for (std::uint32_t r : {2u, 4u}) {
        const auto g = Group::semidirect(7, 3, r);
        EXPECT_EQ(g.order(), 21u);
        EXPECT_FALSE(g.is_abelian());
        expect_group_axioms(g);
    }
    try {
        Group::semidirect(7, 3, 3);
        FAIL() << "3^3 is not 1 mod 7";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::invalid_action);
    }
}

TEST(Group, Alt4)
{
    const auto g = Group::alt4();
    EXPECT_EQ(g.order(), 12u);
    expect_group_axioms(g);
    EXPECT_EQ(g.involution_count(), 3u);
    std::size_t order3 = 0;
    for (std::uint32_t a = 0; a < 12; ++a) order3 += g.element_order(a) == 3;
    EXPECT_EQ(order3, 8u);
}

TEST(Group, ProductOrder)
{
    const auto g = Group::product(Group::cyclic(2), Group::cyclic(3));
    EXPECT_EQ(g.order(), 6u);
    expect_group_axioms(g);
    EXPECT_TRUE(g.is_abelian());
}

TEST(Group, CheckRejectsPerturbedTable)
{
    auto t = Group::cyclic(3).table();
    EXPECT_TRUE(Group::check(t).ok());
    std::swap(t[1][1], t[1][2]);
    EXPECT_FALSE(Group::check(t).ok());
    try {
        Group::explicit_table(t, {});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_a_group);
    }
}

TEST(Group, ExplicitTableRoundTrip)
{
    const auto d = Group::dihedral(8);
    const auto e = Group::explicit_table(d.table(), d.labels());
    EXPECT_EQ(e.flat_table(), d.flat_table());
}
