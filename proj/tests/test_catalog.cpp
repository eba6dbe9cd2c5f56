#include <gtest/gtest.h>

#include <json.hpp>

#include "skewring/catalog.hpp"
#include "skewring/io.hpp"

using namespace skewring;

namespace {

nlohmann::json golden(const char* file) { return nlohmann::json::parse(read_file(std::string(SKEWRING_DATA_DIR) + "/" + file)); }

}  // namespace

TEST(Catalog, EveryExampleVerifies)
{
    for (const auto& name : catalog::names()) {
        const auto rep = catalog::verify(name);
        for (const auto& item : rep.items)
            EXPECT_TRUE(item.pass || item.informational) << name << ": " << item.name << " expected " << item.expected << " got " << item.got;
        EXPECT_TRUE(rep.ok()) << name;
    }
}

TEST(Catalog, UnknownExample)
{
    try {
        (void)catalog::build("nope");
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::parse_error);
    }
}

TEST(Catalog, C7VariantMatchesGoldenFile)
{
    std::vector<catalog::VariantOutcome> log;
    const auto v = catalog::resolve_c7c3f8(&log);
    const auto g = golden("c7c3f8_variant.json");
    EXPECT_EQ(v.r, g.at("r").get<std::uint32_t>());
    EXPECT_EQ(v.frob_exp, g.at("frobenius_exp").get<std::uint32_t>());
    const auto& outs = g.at("outcomes");
    ASSERT_EQ(log.size(), outs.size());
    for (std::size_t i = 0; i < log.size(); ++i) {
        EXPECT_EQ(log[i].variant.r, outs[i].at("r").get<std::uint32_t>());
        EXPECT_EQ(log[i].variant.frob_exp, outs[i].at("frobenius_exp").get<std::uint32_t>());
        EXPECT_EQ(log[i].k, outs[i].at("k").get<std::size_t>());
        EXPECT_EQ(log[i].d.has_value(), outs[i].contains("d"));
        if (log[i].d) {
            EXPECT_EQ(*log[i].d, outs[i].at("d").get<std::uint32_t>());
        }
    }
}

TEST(Catalog, D20KernelMatchesGoldenFile)
{
    std::vector<catalog::KernelOutcome> log;
    const auto h = catalog::resolve_d20f9(&log);
    const auto g = golden("d20f9_kernel.json");
    EXPECT_EQ(catalog::to_string(h), g.at("kernel").get<std::string>());
    const auto& outs = g.at("outcomes");
    ASSERT_EQ(log.size(), outs.size());
    for (std::size_t i = 0; i < log.size(); ++i) {
        EXPECT_EQ(catalog::to_string(log[i].kernel), outs[i].at("kernel").get<std::string>());
        EXPECT_EQ(log[i].k, outs[i].at("k").get<std::size_t>());
        EXPECT_EQ(log[i].d.has_value(), outs[i].contains("d"));
        if (log[i].d) {
            EXPECT_EQ(*log[i].d, outs[i].at("d").get<std::uint32_t>());
        }
    }
}

TEST(Catalog, DataFilesMatchBuiltContexts)
{
    const std::string dir = SKEWRING_DATA_DIR;
    const std::vector<std::pair<std::string, std::string>> pairs{
        {"hexacode", "hexacode"}, {"d6f9", "d6f9"}, {"c7c3f8", "c7c3f8"}, {"d20f9", "d20f9"}};
    for (const auto& [example, file] : pairs) {
        const auto ex = catalog::build(example);
        const auto ctx = load_context_file(dir + "/" + file + ".toml");
        EXPECT_TRUE(ctx->same_as(*ex.ctx)) << example;
        EXPECT_EQ(ctx->fingerprint(), ex.ctx->fingerprint()) << example;
    }
    const auto hex = catalog::hexacode_context();
    EXPECT_TRUE(load_code(hex, read_file(dir + "/hexacode_e.txt")) == ideal_span({*catalog::build("hexacode").generator}));
    const auto d20 = load_context_file(dir + "/d20f9.toml");
    EXPECT_EQ(load_code(d20, read_file(dir + "/d20f9_c.txt")).k(), 16u);
    const auto d20a = load_context_file(dir + "/d20f9_kernel_a.toml");
    EXPECT_EQ(load_code(d20a, read_file(dir + "/d20f9_c.txt")).k(), 20u);
}

TEST(Catalog, PrintedMatricesAgreeWithStoredFiles)
{
    const std::string dir = SKEWRING_DATA_DIR;
    const auto c7 = parse_genmat(read_file(dir + "/c7c3f8_printed.genmat"));
    EXPECT_TRUE(Code::from_rows(c7.field, c7.n, c7.rows) == *catalog::build("c7c3f8").printed_matrix);
    const auto a4 = parse_genmat(read_file(dir + "/a4f27_printed.genmat"));
    EXPECT_TRUE(Code::from_rows(a4.field, a4.n, a4.rows) == *catalog::build("a4f27").standalone);
}

TEST(Catalog, ExamplesSatisfyTheBound)
{
    for (const auto& name : catalog::names()) {
        const auto ex = catalog::build(name);
        const auto c = ex.standalone ? *ex.standalone : ideal_span({*ex.generator});
        EXPECT_TRUE(bound_check(c, min_distance(c).d).holds) << name;
    }
}
