#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "skewring/catalog.hpp"
#include "skewring/io.hpp"

using namespace skewring;

namespace {

std::string error_text(const std::string& toml)
{
    try {
        (void)load_context(toml);
    } catch (const error& e) {
        return std::string(to_string(e.code())) + ": " + e.what();
    }
    return "no error";
}

}  // namespace

TEST(Toml, ScalarsArraysAndComments)
{
    const auto doc = parse_toml("a = 1 # one\nb = \"x\\ty\"\n[t]\nc = [1, [2, 3],\n  4]\nd = true\ne = -2_0\n");
    EXPECT_EQ(doc.find("")->find("a")->i, 1);
    EXPECT_EQ(doc.find("")->find("b")->s, "x\ty");
    const auto* c = doc.find("t")->find("c");
    ASSERT_EQ(c->arr.size(), 3u);
    EXPECT_EQ(c->arr[1].arr[1].i, 3);
    EXPECT_TRUE(doc.find("t")->find("d")->b);
    EXPECT_EQ(doc.find("t")->find("e")->i, -20);
}

TEST(Toml, InlineTables)
{
    const auto doc = parse_toml("field = { p = 3, m = 2, poly = [2, 2, 1] }\ngroup = { family = \"dihedral\", n = 20 }\n");
    EXPECT_EQ(doc.find("field")->find("m")->i, 2);
    EXPECT_EQ(doc.find("group")->find("family")->s, "dihedral");
}

TEST(Toml, ErrorsCarryLines)
{
    for (const char* bad : {"a = 1\na = 2\n", "a = \"open\n", "a = [1, 2\n", "a = 1 2\n", "[t]\nx = { y = 1 }\n"}) {
        try {
            (void)parse_toml(bad);
            FAIL() << bad;
        } catch (const error& e) {
            EXPECT_EQ(e.code(), errc::parse_error);
            EXPECT_NE(std::string(e.what()).find("line "), std::string::npos) << e.what();
        }
    }
}

TEST(Context, InlineFormMatchesSectionForm)
{
    const auto a = load_context("field = { p = 2, m = 2, poly = [1, 1, 1] }\n"
                                "group = { family = \"dihedral\", n = 6 }\n"
                                "theta = { kind = \"involutions\" }\n");
    EXPECT_TRUE(a->same_as(*catalog::hexacode_context()));
}

TEST(Context, ExplicitGroupTableFile)
{
    const auto dir = std::filesystem::temp_directory_path() / "skewring_io_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "c3.txt") << "0 1 2\n1 2 0\n2 0 1\n";
        std::ofstream(dir / "bad.txt") << "0 1 2\n1 1 0\n2 0 1\n";
    }
    const auto ctx = load_context("field = { p = 2 }\ngroup = { family = \"explicit\", table = \"c3.txt\" }\n", dir);
    EXPECT_EQ(ctx->n(), 3u);
    EXPECT_TRUE(ctx->group().is_abelian());
    try {
        (void)load_context("field = { p = 2 }\ngroup = { family = \"explicit\", table = \"bad.txt\" }\n", dir);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_a_group);
    }
    try {
        (void)load_context("field = { p = 2 }\ngroup = { family = \"explicit\", table = \"missing.txt\" }\n", dir);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::io_error);
    }
    std::filesystem::remove_all(dir);
}

TEST(Context, LocatedErrors)
{
    EXPECT_NE(error_text("[group]\nfamily = \"cyclic\"\norder = 3\n").find("[field]: missing block"), std::string::npos);
    EXPECT_NE(error_text("[field]\np = 2\n[group]\nfamily = \"cube\"\norder = 3\n").find("line 3 [group]"), std::string::npos);
    EXPECT_NE(error_text("[field]\np = 4\n[group]\nfamily = \"cyclic\"\norder = 3\n").find("NotPrime"), std::string::npos);
    EXPECT_NE(error_text("[field]\np = 2\nm = 2\npoly = [1, 0, 1]\n[group]\nfamily = \"cyclic\"\norder = 3\n")
                  .find("NotIrreducible"),
              std::string::npos);
    EXPECT_NE(error_text("[field]\np = 2\n[group]\nfamily = \"cyclic\"\norder = \"three\"\n").find("must be an integer"),
              std::string::npos);
    EXPECT_NE(error_text("[field]\np = 2\nm = 2\npoly = [1, 1, 1]\n[group]\nfamily = \"cyclic\"\norder = 2\n"
                         "[theta]\nkind = \"table\"\nexps = [0, 1]\n[cocycle]\nkind = \"constacyclic\"\nlambda = \"t\"\n")
                  .find("InvalidCocycle"),
              std::string::npos);
}

TEST(Context, CocycleTableRoundTrip)
{
    const auto k = catalog::f9();
    const auto a = catalog::d20f9_alpha();
    EXPECT_TRUE(parse_cocycle_table(k, render_cocycle_table(k, a), 20) == a);
    try {
        (void)parse_cocycle_table(k, "1 1\n1\n", 2);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::parse_error);
    }
}

TEST(Genmat, RoundTrip)
{
    const auto ctx = catalog::d6f9_context();
    const auto c = ideal_span({parse_elem(ctx, catalog::text::d6f9_e)});
    const auto g = parse_genmat(render_genmat(c));
    EXPECT_EQ(g.n, 6u);
    EXPECT_TRUE(Code::from_rows(g.field, g.n, g.rows) == c);
    EXPECT_TRUE(load_code(ctx, render_genmat(c)) == c);
}

TEST(Genmat, EmptyFileRejected)
{
    try {
        (void)parse_genmat("");
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::parse_error);
    }
    try {
        (void)load_code(catalog::hexacode_context(), "\n# nothing\n");
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::zero_code);
    }
}

TEST(GammaFile, RoundTrip)
{
    const auto gg = xi_embed(*catalog::hexacode_context());
    const auto back = parse_gamma_group(render_gamma_group(gg));
    EXPECT_EQ(back.size(), gg.size());
}
