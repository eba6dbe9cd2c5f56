// skewring command-line front end.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewring/catalog.hpp"
#include "skewring/code.hpp"
#include "skewring/io.hpp"
#include "skewring/search.hpp"
#include "skewring/semilinear.hpp"

namespace sr = skewring;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct CodeArgs {
    std::string ctx;
    std::string gen;
    std::string form = "euclidean";
    std::string method = "auto";
};

sr::Form parse_form(const std::string& s)
{
    if (s == "euclidean") return sr::Form::euclidean;
    if (s == "hermitian") return sr::Form::hermitian;
    throw sr::error(sr::errc::parse_error, "--form must be euclidean or hermitian, got '" + s + "'");
}

sr::DistanceMethod parse_method(const std::string& s)
{
    if (s == "auto") return sr::DistanceMethod::automatic;
    if (s == "exhaustive") return sr::DistanceMethod::exhaustive;
    if (s == "bz") return sr::DistanceMethod::bz;
    throw sr::error(sr::errc::parse_error, "--method must be auto, exhaustive or bz, got '" + s + "'");
}

sr::Code load_gen(const sr::RingCtxPtr& ctx, const std::string& path)
{
    return sr::load_code(ctx, sr::read_file(path));
}

void print_ctx(const sr::RingCtx& c)
{
    std::cout << "field    " << c.field().describe() << "\n"
              << "group    " << c.group().family() << " order " << c.n() << "\n"
              << "theta    ";
    for (auto e : c.theta().exps()) std::cout << e;
    std::cout << "\n"
              << "alpha    " << (c.alpha() == sr::Cocycle::trivial(c.n()) ? "trivial" : "nontrivial")
              << (c.alpha_involutive() ? ", involutive" : "") << "\n"
              << "coboundary " << (sr::coboundary_test(c.alpha(), c.group(), c.field()) ? "yes" : "no") << "\n"
              << "fingerprint " << sr::detail::hex64(c.fingerprint()) << "\n";
}

int run_code(const std::string& sub, const CodeArgs& a)
{
    const auto ctx = sr::load_context_file(a.ctx);
    const auto c = load_gen(ctx, a.gen);
    const auto method = parse_method(a.method);
    if (sub == "span") {
        std::cout << sr::render_genmat(c);
    } else if (sub == "dist") {
        const auto d = sr::min_distance(c, method);
        std::cout << sr::params(c, d.d) << (d.exact ? "" : " (lower bound)") << "\n";
    } else if (sub == "wenum") {
        std::cout << sr::catalog::detail::render_enumerator(sr::weight_enumerator(c)) << "\n";
    } else if (sub == "dual") {
        const auto form = parse_form(a.form);
        const auto dc = sr::dual(c, form);
        std::cout << "# " << sr::params(dc, sr::min_distance(dc, method).d)
                  << (sr::is_lcd(c, form) ? " lcd" : "") << (sr::is_self_dual(c, form) ? " self-dual" : "") << "\n"
                  << sr::render_genmat(dc);
    }
    return exit_ok;
}

int run_idem(const std::string& sub, const CodeArgs& a)
{
    const auto ctx = sr::load_context_file(a.ctx);
    if (sub == "check") {
        const auto gens = sr::parse_elements(ctx, sr::read_file(a.gen));
        if (gens.size() != 1) throw sr::error(sr::errc::parse_error, "idem check needs exactly one element");
        const auto& e = gens.front();
        if (!(e * e == e)) {
            std::cout << "not idempotent\n";
            return exit_fail;
        }
        const auto f = sr::idempotent_certify(e);
        const auto names = f.names();
        for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? " " : "") << names[i];
        std::cout << "\n";
        return exit_ok;
    }
    const auto c = load_gen(ctx, a.gen);
    const auto e = sr::maschke_idempotent(c);
    std::cout << sr::render(e) << "\n";
    return (e * e == e && sr::ideal_span({e}) == c) ? exit_ok : exit_fail;
}

int run_recognize(const std::string& code_path, const std::string& group_path)
{
    const auto gm = sr::parse_genmat(sr::read_file(code_path));
    const auto c = sr::Code::from_rows(gm.field, gm.n, gm.rows);
    const auto gg = sr::parse_gamma_group(sr::read_file(group_path));
    const auto closure = sr::GammaGroup::closure(gg.field(), gg.generators());
    const auto r = sr::recognize(c, closure);
    std::cout << "group order " << r.group.order() << "\n";
    std::cout << "table\n";
    for (std::uint32_t i = 0; i < r.group.order(); ++i) {
        for (std::uint32_t j = 0; j < r.group.order(); ++j) std::cout << (j ? " " : "") << r.group.mul(i, j);
        std::cout << "\n";
    }
    std::cout << "theta ";
    for (auto e : r.theta.exps()) std::cout << e;
    std::cout << "\nalpha\n" << sr::render_cocycle_table(c.field(), r.alpha);
    std::cout << "left ideal k=" << r.ideal.k() << "\n";
    return exit_ok;
}

nlohmann::ordered_json report_json(const sr::catalog::ExampleReport& r)
{
    nlohmann::ordered_json j;
    j["example"] = r.example;
    j["pass"] = r.ok();
    j["seconds"] = r.seconds;
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& i : r.items)
        j["items"].push_back({{"name", i.name},
                              {"expected", i.expected},
                              {"got", i.got},
                              {"pass", i.pass},
                              {"informational", i.informational}});
    return j;
}

int run_verify(const std::vector<std::string>& names, bool json)
{
    bool all_ok = true;
    for (const auto& n : names) {
        const auto r = sr::catalog::verify(n);
        all_ok = all_ok && r.ok();
        if (json) {
            std::cout << report_json(r).dump() << "\n";
            continue;
        }
        std::printf("%-9s %s  (%.3fs)\n", n.c_str(), r.ok() ? "PASS" : "FAIL", r.seconds);
        for (const auto& i : r.items)
            std::printf("  %-4s %s: expected %s, got %s\n", i.informational ? "info" : (i.pass ? "ok" : "FAIL"),
                        i.name.c_str(), i.expected.c_str(), i.got.c_str());
    }
    return all_ok ? exit_ok : exit_fail;
}

int run_search(const std::string& ctx_path, sr::SearchOptions opt, const std::string& out)
{
    const auto ctx = sr::load_context_file(ctx_path);
    const auto recs = sr::search_random(ctx, opt);
    std::ofstream os(out, std::ios::binary | std::ios::app);
    if (!os) throw sr::error(sr::errc::io_error, "cannot open '" + out + "' for writing");
    for (const auto& r : recs) os << sr::to_json_line(r) << "\n";
    if (!os) throw sr::error(sr::errc::io_error, "write to '" + out + "' failed");
    std::size_t bad = 0;
    for (const auto& r : recs) bad += r.bound_holds ? 0 : 1;
    std::cerr << recs.size() << " records written to " << out << "\n";
    return bad ? exit_fail : exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Twisted skew group rings and their left-ideal codes"};
    app.require_subcommand(1);

    auto* ctx_cmd = app.add_subcommand("ctx", "Context files");
    ctx_cmd->require_subcommand(1);
    std::string ctx_file;
    auto* ctx_check = ctx_cmd->add_subcommand("check", "Parse and validate a context file");
    ctx_check->add_option("file", ctx_file, "context TOML")->required();

    CodeArgs ca;
    auto* code_cmd = app.add_subcommand("code", "Left-ideal codes");
    code_cmd->require_subcommand(1);
    for (const char* sub : {"span", "dist", "wenum", "dual"}) {
        auto* s = code_cmd->add_subcommand(sub);
        s->add_option("--ctx", ca.ctx, "context TOML")->required();
        s->add_option("--gen", ca.gen, "generator file")->required();
        s->add_option("--method", ca.method, "auto | exhaustive | bz");
        if (std::string(sub) == "dual") s->add_option("--form", ca.form, "euclidean | hermitian");
    }

    auto* idem_cmd = app.add_subcommand("idem", "Idempotent generators");
    idem_cmd->require_subcommand(1);
    for (const char* sub : {"check", "extract"}) {
        auto* s = idem_cmd->add_subcommand(sub);
        s->add_option("--ctx", ca.ctx, "context TOML")->required();
        s->add_option("--gen", ca.gen, "element or generator file")->required();
    }

    std::string rec_code, rec_group;
    auto* rec_cmd = app.add_subcommand("recognize", "Recover (G, Theta, alpha) from a code and a stabilizing group");
    rec_cmd->add_option("--code", rec_code, "genmat file")->required();
    rec_cmd->add_option("--group", rec_group, "semilinear generator file")->required();

    auto* ver_cmd = app.add_subcommand("verify", "Check the worked examples");
    ver_cmd->require_subcommand(1);
    std::string ex_name;
    bool json = false;
    auto* ver_ex = ver_cmd->add_subcommand("example", "One example");
    ver_ex->add_option("name", ex_name, "example name")->required()->check(CLI::IsMember(sr::catalog::names()));
    ver_ex->add_flag("--json", json, "one JSON object per example");
    auto* ver_all = ver_cmd->add_subcommand("all", "All examples");
    ver_all->add_flag("--json", json, "one JSON object per example");

    sr::SearchOptions so;
    std::string search_ctx, search_out;
    std::int64_t cap_ms = 10'000;
    bool now_stamp = false;
    auto* search_cmd = app.add_subcommand("search", "Seeded random search over principal left ideals");
    search_cmd->add_option("--ctx", search_ctx, "context TOML")->required();
    search_cmd->add_option("--budget", so.budget, "number of candidates")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--seed", so.seed, "PRNG seed")->required();
    search_cmd->add_option("--out", search_out, "JSONL output (appended)")->required();
    search_cmd->add_option("--density", so.density, "probability that a coefficient is nonzero")
        ->check(CLI::Range(0.0, 1.0));
    search_cmd->add_option("--cap-ms", cap_ms, "per-candidate distance time cap")->check(CLI::PositiveNumber);
    search_cmd->add_option("--threads", so.threads, "worker count (default SKEWRING_THREADS or all cores)");
    search_cmd->add_option("--timestamp", so.timestamp, "timestamp stamped on records");
    search_cmd->add_flag("--now", now_stamp, "stamp records with the current UTC time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (ctx_check->parsed()) {
            print_ctx(*sr::load_context_file(ctx_file));
            return exit_ok;
        }
        for (auto* s : code_cmd->get_subcommands())
            if (s->parsed()) return run_code(s->get_name(), ca);
        for (auto* s : idem_cmd->get_subcommands())
            if (s->parsed()) return run_idem(s->get_name(), ca);
        if (rec_cmd->parsed()) return run_recognize(rec_code, rec_group);
        if (ver_ex->parsed()) return run_verify({ex_name}, json);
        if (ver_all->parsed()) return run_verify(sr::catalog::names(), json);
        if (search_cmd->parsed()) {
            so.cap = std::chrono::milliseconds(cap_ms);
            if (now_stamp) {
                const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
                char buf[32];
                std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
                so.timestamp = buf;
            }
            return run_search(search_ctx, so, search_out);
        }
    } catch (const sr::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == sr::errc::verification_failed ? exit_fail : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
