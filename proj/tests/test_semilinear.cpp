#include <gtest/gtest.h>

#include <algorithm>

#include "properties.hpp"
#include "skewring/catalog.hpp"
#include "skewring/io.hpp"
#include "skewring/semilinear.hpp"

using namespace skewring;

namespace {

SemilinearMap random_map(const Field& k, std::size_t n, props::Rng& rng)
{
    SemilinearMap u = SemilinearMap::identity(n);
    std::shuffle(u.perm.begin(), u.perm.end(), rng);
    for (auto& d : u.diag) d = props::random_scalar(k, rng, true);
    u.gamma = static_cast<std::uint32_t>(rng() % k.m());
    return u;
}

Vec random_vec(const Field& k, std::size_t n, props::Rng& rng)
{
    Vec v(n);
    for (auto& x : v) x = props::random_scalar(k, rng);
    return v;
}

}  // namespace

TEST(Semilinear, ApplyComposeInverse)
{
    const auto k = catalog::f27();
    props::Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        const auto u = random_map(k, 7, rng);
        const auto v = random_map(k, 7, rng);
        const auto x = random_vec(k, 7, rng);
        ASSERT_EQ(semilinear_apply(k, compose(k, u, v), x), semilinear_apply(k, u, semilinear_apply(k, v, x)));
        ASSERT_EQ(semilinear_apply(k, inverse(k, u), semilinear_apply(k, u, x)), x);
        ASSERT_EQ(detail::hamming(semilinear_apply(k, u, x)), detail::hamming(x));
    }
}

TEST(Semilinear, IdentityAndErrors)
{
    const auto k = catalog::f4();
    props::Rng rng(43);
    const auto x = random_vec(k, 5, rng);
    EXPECT_EQ(semilinear_apply(k, SemilinearMap::identity(5), x), x);
    try {
        (void)semilinear_apply(k, SemilinearMap::identity(4), x);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::length_mismatch);
    }
}

TEST(Semilinear, XiGroupsStabilizeIdeals)
{
    for (const auto& [name, ctx] : props::catalog_contexts()) {
        if (ctx->n() > 6) continue;
        props::Rng rng(47);
        const auto gg = xi_embed(*ctx);
        for (int i = 0; i < 5; ++i)
            EXPECT_TRUE(stabilizer_check(gg, ideal_span({props::sparse_elem(ctx, rng, 2)}))) << name;
    }
}

TEST(Semilinear, RandomMonomialMapsRarelyStabilizeTheHexacode)
{
    const auto ctx = catalog::hexacode_context();
    const auto c = ideal_span({parse_elem(ctx, catalog::text::hexacode_e)});
    props::Rng rng(53);
    int hits = 0;
    for (int t = 0; t < 50; ++t) {
        const auto gg = GammaGroup::closure(ctx->field(), {random_map(ctx->field(), 6, rng)});
        hits += stabilizer_check(gg, c);
    }
    EXPECT_LT(hits, 10);
    const auto trivial = GammaGroup::closure(ctx->field(), {SemilinearMap::identity(6)});
    EXPECT_TRUE(stabilizer_check(trivial, c));
}

TEST(Recognize, RepetitionCodeUnderSwap)
{
    const auto k = Field::prime(2);
    SemilinearMap swap = SemilinearMap::identity(2);
    swap.perm = {1, 0};
    const auto gg = GammaGroup::closure(k, {swap});
    const auto c = Code::from_rows(k, 2, {{Field::one(), Field::one()}});
    const auto r = recognize(c, gg);
    EXPECT_EQ(r.group.order(), 2u);
    EXPECT_TRUE(r.theta.is_trivial());
    EXPECT_TRUE(r.alpha.is_trivial());
}

TEST(Recognize, NotStabilized)
{
    const auto k = Field::prime(2);
    SemilinearMap swap = SemilinearMap::identity(2);
    swap.perm = {1, 0};
    const auto gg = GammaGroup::closure(k, {swap});
    const auto c = Code::from_rows(k, 2, {{Field::one(), Field::zero()}});
    try {
        (void)recognize(c, gg);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_stabilized);
    }
}

TEST(Recognize, RoundTripOnCatalogContexts)
{
    for (const auto& [name, ctx] : props::catalog_contexts()) {
        const auto o = props::recognize_roundtrip(ctx, 59);
        EXPECT_TRUE(o.ok()) << name << (o.failures.empty() ? "" : ": " + o.failures.front());
    }
}

TEST(Recognize, SampleFiles)
{
    const auto code = parse_genmat(read_file(SKEWRING_SAMPLES_DIR "/hexacode.genmat"));
    const auto gg = parse_gamma_group(read_file(SKEWRING_SAMPLES_DIR "/hexacode_xi.txt"));
    const auto c = Code::from_rows(code.field, code.n, code.rows);
    const auto r = recognize(c, gg);
    const auto ref = catalog::hexacode_context();
    EXPECT_EQ(r.theta.exps(), ref->theta().exps());
    EXPECT_TRUE(r.alpha.is_trivial());
    EXPECT_EQ(r.ideal.k(), 3u);
}
