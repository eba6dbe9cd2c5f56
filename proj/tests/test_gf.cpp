#include <gtest/gtest.h>

#include <vector>

#include "skewring/gf.hpp"

using namespace skewring;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic f, all mod p.
std::vector<std::uint32_t> naive_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                     const std::vector<std::uint32_t>& f, std::uint32_t p)
{
    const std::size_t m = f.size() - 1;
    std::vector<std::uint64_t> prod(2 * m, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    for (std::size_t d = prod.size(); d-- > m;) {
        const auto c = prod[d];
        if (!c) continue;
        for (std::size_t i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * f[i]) % p;
    }
    std::vector<std::uint32_t> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

std::vector<Field> small_fields()
{
    return {Field::prime(2),           Field::prime(5),           Field::make(2, 2, {1, 1, 1}),
            Field::make(2, 3, {1, 1, 0, 1}), Field::make(3, 2, {2, 2, 1}), Field::make(3, 3, {1, 2, 0, 1}),
            Field::make(2, 4, {1, 1, 0, 0, 1})};
}

}  // namespace

TEST(Gf, ProductsMatchSchoolbookReduction)
{
    for (const auto& k : small_fields()) {
        for (std::uint32_t a = 0; a < k.q(); ++a)
            for (std::uint32_t b = 0; b < k.q(); ++b) {
                const auto expect = naive_mul(k.coeffs(FieldElem{a}), k.coeffs(FieldElem{b}), k.poly(), k.p());
                ASSERT_EQ(k.coeffs(k.mul(FieldElem{a}, FieldElem{b})), expect) << k.describe() << " " << a << "*" << b;
            }
    }
}

TEST(Gf, FieldAxiomsExhaustive)
{
    for (const auto& k : small_fields()) {
        for (std::uint32_t a = 0; a < k.q(); ++a) {
            const FieldElem x{a};
            EXPECT_EQ(k.add(x, k.neg(x)), Field::zero());
            if (a) {
                EXPECT_EQ(k.mul(x, k.inv(x)), Field::one());
            }
            EXPECT_EQ(k.pow(x, k.q()), x);
            for (std::uint32_t b = 0; b < k.q(); ++b)
                for (std::uint32_t c = 0; c < k.q(); c += 1 + k.q() / 5) {
                    const FieldElem y{b}, z{c};
                    ASSERT_EQ(k.mul(x, k.add(y, z)), k.add(k.mul(x, y), k.mul(x, z)));
                }
        }
    }
}

TEST(Gf, FrobeniusIsAFieldAutomorphism)
{
    for (const auto& k : small_fields())
        for (std::int64_t e = 0; e < k.m(); ++e)
            for (std::uint32_t a = 0; a < k.q(); ++a)
                for (std::uint32_t b = 0; b < k.q(); ++b) {
                    const FieldElem x{a}, y{b};
                    ASSERT_EQ(k.frobenius(k.add(x, y), e), k.add(k.frobenius(x, e), k.frobenius(y, e)));
                    ASSERT_EQ(k.frobenius(k.mul(x, y), e), k.mul(k.frobenius(x, e), k.frobenius(y, e)));
                }
}

TEST(Gf, KnownValues)
{
    const auto f9 = Field::make(3, 2, {2, 2, 1});
    EXPECT_EQ(f9.pow(f9.t(), 4), f9.from_int(2));
    EXPECT_TRUE(f9.primitive());

    const auto f8 = Field::make(2, 3, {1, 1, 0, 1});
    EXPECT_EQ(f8.frobenius(f8.t(), 2), f8.add(f8.mul(f8.t(), f8.t()), f8.t()));

    const auto f4 = Field::make(2, 2, {1, 1, 1});
    const auto w = f4.t();
    EXPECT_EQ(f4.mul(w, f4.mul(w, w)), Field::one());
    EXPECT_EQ(f4.add(f4.add(Field::one(), w), f4.mul(w, w)), Field::zero());
}

TEST(Gf, LogExpRoundTrip)
{
    for (const auto& k : small_fields()) {
        const auto g = k.generator();
        EXPECT_EQ(k.order(g), k.q() - 1);
        for (std::uint32_t a = 1; a < k.q(); ++a) EXPECT_EQ(k.exp(k.log(FieldElem{a})), FieldElem{a});
    }
}

TEST(Gf, RenderParseRoundTrip)
{
    for (const auto& k : small_fields())
        for (std::uint32_t a = 0; a < k.q(); ++a) {
            EXPECT_EQ(k.parse(k.render(FieldElem{a})), FieldElem{a});
            EXPECT_EQ(k.parse(k.render_coeffs(FieldElem{a})), FieldElem{a});
        }
}

TEST(Gf, ConstructionErrors)
{
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const error& e) {
            return e.code();
        }
        return errc::io_error;
    };
    EXPECT_EQ(code_of([] { Field::prime(6); }), errc::not_prime);
    EXPECT_EQ(code_of([] { Field::make(2, 2, {1, 0, 1}); }), errc::not_irreducible);
    EXPECT_EQ(code_of([] { Field::make(3, 2, {2, 2, 0, 1}); }), errc::degree_mismatch);
    EXPECT_EQ(code_of([] { Field::make(2, 21, std::vector<std::uint32_t>(22, 1)); }), errc::field_too_large);
    const auto f4 = Field::make(2, 2, {1, 1, 1});
    EXPECT_EQ(code_of([&] { (void)f4.inv(Field::zero()); }), errc::division_by_zero);
    EXPECT_EQ(code_of([&] { (void)f4.parse("t^^"); }), errc::parse_error);
}
