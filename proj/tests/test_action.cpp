#include <gtest/gtest.h>

#include "properties.hpp"
#include "skewring/action.hpp"
#include "skewring/catalog.hpp"

using namespace skewring;

namespace {

void expect_ok(const props::Outcome& o)
{
    EXPECT_TRUE(o.ok()) << o.name << ": " << o.cases << " cases, " << o.failures.size() << " failures"
                        << (o.failures.empty() ? "" : ", first: " + o.failures.front());
}

}  // namespace

TEST(Theta, InvolutionsFrobeniusOnD6)
{
    const auto k = catalog::f4();
    const auto g = Group::dihedral(6);
    const auto th = Theta::involutions_frobenius(g, k);
    EXPECT_TRUE(th.validate(g).ok());
    EXPECT_EQ(th.kernel().size(), 3u);
    const auto y = static_cast<std::uint32_t>(g.find("y"));
    EXPECT_EQ(th.apply(k, y, k.t()), k.mul(k.t(), k.t()));
}

TEST(Theta, NonHomomorphismRejected)
{
    const auto k = catalog::f4();
    const auto g = Group::cyclic(3);
    try {
        Theta::from_table(g, k, {0, 1, 0});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::invalid_theta);
    }
}

TEST(Cocycle, TrivialIsValid)
{
    const auto k = catalog::f9();
    const auto g = Group::dihedral(20, true);
    for (auto h : {catalog::D20Kernel::cyclic, catalog::D20Kernel::a2_ab}) {
        const auto ctx = catalog::d20f9_context(h);
        EXPECT_TRUE(validate_cocycle(Cocycle::trivial(20), ctx->theta(), g, k).ok());
    }
}

TEST(Cocycle, D20TableValidatesUnderEveryIndexTwoKernel)
{
    const auto k = catalog::f9();
    const auto a = catalog::d20f9_alpha();
    for (auto h : {catalog::D20Kernel::cyclic, catalog::D20Kernel::a2_b, catalog::D20Kernel::a2_ab}) {
        const auto ctx = catalog::d20f9_context(h);
        EXPECT_TRUE(validate_cocycle(a, ctx->theta(), ctx->group(), k).ok()) << catalog::to_string(h);
        EXPECT_EQ(ctx->theta().kernel().size(), 10u);
    }
    EXPECT_TRUE(a.is_involutive(k));
    EXPECT_FALSE(a.is_trivial());
    EXPECT_TRUE(a.inverse(k) == a);
    EXPECT_TRUE(a.inverse_symmetric(Group::dihedral(20, true)));
}

TEST(Cocycle, PerturbedD20TableFails)
{
    const auto k = catalog::f9();
    const auto g = Group::dihedral(20, true);
    auto tab = catalog::d20f9_alpha().table();
    const auto ia = static_cast<std::uint32_t>(g.find("a"));
    auto& x = tab[std::size_t(ia) * 20 + ia];
    x = x == Field::one() ? k.from_int(2) : Field::one();
    const Cocycle bad(20, tab);
    const auto rep = validate_cocycle(bad, catalog::d20f9_context()->theta(), g, k);
    EXPECT_FALSE(rep.ok());
}

TEST(Cocycle, UnstabilizedValuesRejected)
{
    // alpha_t on C2 over F4 with Theta(g) = Frobenius: t is not fixed.
    const auto k = catalog::f4();
    const auto g = Group::cyclic(2);
    const auto th = Theta::from_table(g, k, {0, 1});
    const auto a = Cocycle::constacyclic(g, k.t());
    EXPECT_FALSE(validate_cocycle(a, th, g, k).ok());
    EXPECT_TRUE(validate_cocycle(a, Theta::trivial(2, 2), g, k).ok());
}

TEST(Cocycle, ConstacyclicFamily)
{
    const auto k = catalog::f4();
    const auto g = Group::cyclic(3);
    EXPECT_TRUE(Cocycle::constacyclic(g, Field::one()).is_trivial());
    const auto w = k.t();
    EXPECT_TRUE(Cocycle::constacyclic(g, w).power(k, 2) == Cocycle::constacyclic(g, k.mul(w, w)));
    try {
        Cocycle::constacyclic(g, Field::zero());
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::zero_lambda);
    }
}

TEST(Coboundary, KnownVerdicts)
{
    const auto f3 = Field::prime(3);
    const auto c2 = Group::cyclic(2);
    const auto triv = coboundary_test(Cocycle::trivial(2), c2, f3);
    ASSERT_TRUE(triv.has_value());
    for (auto x : *triv) EXPECT_EQ(x, Field::one());
    EXPECT_FALSE(coboundary_test(Cocycle::constacyclic(c2, f3.from_int(2)), c2, f3).has_value());
    EXPECT_FALSE(coboundary_test(catalog::d20f9_alpha(), Group::dihedral(20, true), catalog::f9()).has_value());
}

TEST(Coboundary, MatchesExhaustiveSearchOnSmallGroups)
{
    const std::vector<Group> groups{Group::cyclic(1), Group::cyclic(2), Group::cyclic(3), Group::cyclic(4),
                                    Group::product(Group::cyclic(2), Group::cyclic(2))};
    const std::vector<Field> fields{Field::prime(2), Field::prime(3), catalog::f4()};
    for (const auto& g : groups)
        for (const auto& k : fields) expect_ok(props::coboundary_exhaustive(g, k));
}
