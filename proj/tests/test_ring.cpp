#include <gtest/gtest.h>

#include <numeric>

#include "properties.hpp"
#include "skewring/catalog.hpp"
#include "skewring/ring.hpp"

using namespace skewring;

namespace {

void expect_ok(const props::Outcome& o)
{
    EXPECT_TRUE(o.ok()) << o.name << ": " << o.cases << " cases, " << o.failures.size() << " failures"
                        << (o.failures.empty() ? "" : ", first: " + o.failures.front());
}

std::vector<std::pair<std::string, RingCtxPtr>> all_contexts()
{
    auto v = props::catalog_contexts();
    for (auto& x : props::extra_contexts()) v.push_back(x);
    return v;
}

std::uint32_t idx(const RingCtxPtr& ctx, const char* label) { return static_cast<std::uint32_t>(ctx->group().find(label)); }

}  // namespace

TEST(Ring, IdentityIsNeutral)
{
    for (const auto& [name, ctx] : all_contexts()) {
        props::Rng rng(7);
        const auto a = props::random_elem(ctx, rng);
        const auto one = RingElem::one(ctx);
        EXPECT_TRUE(one * a == a) << name;
        EXPECT_TRUE(a * one == a) << name;
    }
}

TEST(Ring, HexacodeProducts)
{
    const auto ctx = catalog::hexacode_context();
    const auto& k = ctx->field();
    const auto e = parse_elem(ctx, catalog::text::hexacode_e);
    EXPECT_TRUE(e * e == e);

    const auto w = k.t();
    const auto lhs = RingElem::basis(ctx, idx(ctx, "y")) * RingElem::basis(ctx, idx(ctx, "x"), w);
    EXPECT_TRUE(lhs == RingElem::basis(ctx, idx(ctx, "x2y"), k.mul(w, w)));
}

TEST(Ring, AdjointExamples)
{
    const auto hex = catalog::hexacode_context();
    EXPECT_EQ(adjoint(RingElem::one(hex)).coeffs(), RingElem::one(hex).coeffs());
    const auto e = parse_elem(hex, catalog::text::hexacode_e);
    EXPECT_EQ(adjoint(power_q(e, 2)).coeffs(), (e + RingElem::one(hex)).coeffs());

    const auto f9 = catalog::d6f9_context();
    const auto e9 = parse_elem(f9, catalog::text::d6f9_e);
    EXPECT_EQ(adjoint(e9).coeffs(), e9.coeffs());
    EXPECT_TRUE(e9 * e9 == e9);
}

TEST(Ring, PowerQ)
{
    const auto ctx = catalog::hexacode_context();
    const auto& k = ctx->field();
    const auto one = RingElem::one(ctx);
    EXPECT_TRUE(power_q(one, 4) == one);
    EXPECT_TRUE(power_q(k.t() * one, 2) == k.mul(k.t(), k.t()) * one);
    props::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto a = props::random_elem(ctx, rng);
        EXPECT_TRUE(power_q(power_q(a, 2), 2) == a);
    }
}

TEST(Ring, BasisInverse)
{
    for (const auto& [name, ctx] : all_contexts())
        for (std::uint32_t g = 0; g < ctx->n(); ++g) {
            const auto b = RingElem::basis(ctx, g);
            EXPECT_TRUE(b * basis_inverse(ctx, g) == RingElem::one(ctx)) << name << " " << g;
            EXPECT_TRUE(basis_inverse(ctx, g) * b == RingElem::one(ctx)) << name << " " << g;
        }
    EXPECT_TRUE(basis_inverse(catalog::hexacode_context(), 0) == RingElem::one(catalog::hexacode_context()));

    const auto k = catalog::f9();
    const auto c4 = Group::cyclic(4);
    const auto lambda = k.t();
    const auto ctx = RingCtx::make(k, c4, Theta::trivial(4, 2), Cocycle::constacyclic(c4, lambda));
    EXPECT_TRUE(basis_inverse(ctx, 1) == RingElem::basis(ctx, 3, k.inv(lambda)));
}

TEST(Ring, MixedContextsRejected)
{
    const auto a = RingElem::one(catalog::hexacode_context());
    const auto b = RingElem::one(catalog::d6f9_context());
    try {
        (void)(a * b);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::context_mismatch);
    }
}

TEST(Ring, RenderParseRoundTrip)
{
    for (const auto& [name, ctx] : all_contexts()) {
        props::Rng rng(11);
        for (int i = 0; i < 10; ++i) {
            const auto a = props::random_elem(ctx, rng);
            EXPECT_TRUE(parse_elem(ctx, render(a)) == a) << name << ": " << render(a);
            EXPECT_TRUE(parse_elem_csv(ctx, render_csv(a)) == a) << name;
        }
    }
}

TEST(Ring, Associativity)
{
    for (const auto& [name, ctx] : all_contexts()) expect_ok(props::associativity(ctx, 200, 1));
}

TEST(Ring, AdjointLaws)
{
    for (const auto& [name, ctx] : all_contexts()) expect_ok(props::adjoint_laws(ctx, 200, 2));
}

TEST(Ring, BasisProductsAreSemilinear)
{
    for (const auto& [name, ctx] : all_contexts()) expect_ok(props::basis_semilinearity(ctx, 100, 3));
}

TEST(RingIso, IdentityMap)
{
    const auto ctx = catalog::hexacode_context();
    std::vector<std::uint32_t> id(ctx->n());
    std::iota(id.begin(), id.end(), 0);
    const RingIso iso(ctx, ctx, id, std::vector<FieldElem>(ctx->n(), Field::one()));
    props::Rng rng(5);
    const auto a = props::random_elem(ctx, rng);
    EXPECT_TRUE(iso(a) == a);
}

TEST(RingIso, BadKappaRejected)
{
    const auto ctx = catalog::hexacode_context();
    std::vector<std::uint32_t> id(ctx->n());
    std::iota(id.begin(), id.end(), 0);
    std::vector<FieldElem> kappa(ctx->n(), Field::one());
    kappa[1] = ctx->field().t();
    try {
        RingIso(ctx, ctx, id, kappa);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::condition_b_violated);
    }
}

TEST(Constacyclic, DirectCases)
{
    const auto k = catalog::f8();
    const auto g = Group::cyclic(5);
    const auto triv = constacyclic_reduce(RingCtx::make(k, g, Theta::trivial(5, 3), Cocycle::trivial(5)));
    EXPECT_EQ(triv.lambda, Field::one());
    for (auto x : triv.kappa) EXPECT_EQ(x, Field::one());

    const auto mu = k.exp(3);
    const auto red = constacyclic_reduce(RingCtx::make(k, g, Theta::trivial(5, 3), Cocycle::constacyclic(g, mu)));
    EXPECT_EQ(red.lambda, mu);
    for (auto x : red.kappa) EXPECT_EQ(x, Field::one());
}

TEST(Constacyclic, NonCyclicRejected)
{
    try {
        constacyclic_reduce(catalog::hexacode_context());
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_cyclic);
    }
}

TEST(Constacyclic, CoboundaryTwistsRoundTrip)
{
    for (const auto& k : {catalog::f4(), catalog::f8(), catalog::f9()})
        for (std::uint32_t n = 2; n <= 8; ++n) expect_ok(props::constacyclic_roundtrip(k, n, 100 + n));
}
