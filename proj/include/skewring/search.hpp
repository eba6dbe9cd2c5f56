#pragma once

// Seeded random search over principal left ideals with JSONL persistence.
//
// Candidate i draws from its own stream: seed_i = splitmix64(seed + i * golden), which
// then seeds a std::mt19937_64. Bounded draws use rejection on raw engine output, so
// the stream does not depend on the standard library's distribution implementations.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skewring/code.hpp"
#include "skewring/error.hpp"
#include "skewring/ring.hpp"

namespace skewring {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t draw_below(std::mt19937_64& eng, std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = eng();
    while (x >= limit);
    return x % bound;
}

inline std::string hex64(std::uint64_t v)
{
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
    return s;
}

}  // namespace detail

struct SearchOptions {
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    double density = 0.5;                              // chance that a coordinate is nonzero
    std::chrono::milliseconds cap{10'000};             // per-candidate distance time cap
    unsigned threads = 0;                              // 0: SKEWRING_THREADS, else hardware
    std::string timestamp = "1970-01-01T00:00:00Z";    // stamped on every record
};

struct SearchRecord {
    std::string timestamp;
    std::string fingerprint;
    std::uint64_t seed = 0;
    std::uint64_t candidate = 0;
    std::string generator;
    std::size_t n = 0, k = 0;
    std::uint32_t d = 0;
    bool d_lower_bound = false;
    std::vector<std::string> flags;
    std::int64_t slack = 0;
    bool bound_holds = true;
    std::uint64_t genmat_hash = 0;
};

/// One JSON object, keys in a fixed order.
inline std::string to_json_line(const SearchRecord& r)
{
    nlohmann::ordered_json j;
    j["timestamp"] = r.timestamp;
    j["fingerprint"] = r.fingerprint;
    j["seed"] = r.seed;
    j["candidate"] = r.candidate;
    j["generator"] = r.generator;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["d_lower_bound"] = r.d_lower_bound;
    j["flags"] = r.flags;
    j["slack"] = r.slack;
    j["bound_holds"] = r.bound_holds;
    j["genmat_hash"] = detail::hex64(r.genmat_hash);
    return j.dump();
}

inline SearchRecord record_from_json(const std::string& line)
{
    const auto j = nlohmann::json::parse(line);
    SearchRecord r;
    r.timestamp = j.at("timestamp").get<std::string>();
    r.fingerprint = j.at("fingerprint").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.candidate = j.at("candidate").get<std::uint64_t>();
    r.generator = j.at("generator").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.d = j.at("d").get<std::uint32_t>();
    r.d_lower_bound = j.at("d_lower_bound").get<bool>();
    r.flags = j.at("flags").get<std::vector<std::string>>();
    r.slack = j.at("slack").get<std::int64_t>();
    r.bound_holds = j.at("bound_holds").get<bool>();
    r.genmat_hash = std::stoull(j.at("genmat_hash").get<std::string>(), nullptr, 16);
    return r;
}

/// Worker count: explicit request, else SKEWRING_THREADS, else hardware concurrency.
inline unsigned worker_count(unsigned requested)
{
    if (requested) return requested;
    if (const char* env = std::getenv("SKEWRING_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// The random generator of candidate i.
inline RingElem search_candidate(const RingCtxPtr& ctx, std::uint64_t seed, std::uint64_t i, double density)
{
    std::mt19937_64 eng(detail::splitmix64(seed + i * 0x9e3779b97f4a7c15ull));
    const auto& k = ctx->field();
    const std::uint64_t q = k.q();
    const std::uint64_t threshold = density >= 1.0 ? ~std::uint64_t{0}
                                                   : static_cast<std::uint64_t>(density * 18446744073709551616.0);
    Vec v(ctx->n(), Field::zero());
    bool any = false;
    for (auto& x : v) {
        if (eng() >= threshold) continue;
        x = FieldElem{static_cast<std::uint32_t>(1 + detail::draw_below(eng, q - 1))};
        any = true;
    }
    if (!any) v[detail::draw_below(eng, v.size())] = FieldElem{static_cast<std::uint32_t>(1 + detail::draw_below(eng, q - 1))};
    return RingElem(ctx, std::move(v));
}

inline std::vector<std::string> code_flags(const Code& c)
{
    std::vector<std::string> f;
    if (is_lcd(c, Form::euclidean)) f.push_back("lcd_euclidean");
    if (is_self_dual(c, Form::euclidean)) f.push_back("self_dual_euclidean");
    if (c.field().m() % 2 == 0) {
        if (is_lcd(c, Form::hermitian)) f.push_back("lcd_hermitian");
        if (is_self_dual(c, Form::hermitian)) f.push_back("self_dual_hermitian");
    }
    return f;
}

inline SearchRecord evaluate_candidate(const RingCtxPtr& ctx, const SearchOptions& opt, std::uint64_t i)
{
    const auto g = search_candidate(ctx, opt.seed, i, opt.density);
    const auto c = ideal_span({g});
    SearchRecord r;
    r.timestamp = opt.timestamp;
    r.fingerprint = detail::hex64(ctx->fingerprint());
    r.seed = opt.seed;
    r.candidate = i;
    r.generator = render(g);
    r.n = c.n();
    r.k = c.k();
    r.genmat_hash = c.genmat_hash();
    const auto dist = min_distance(c, DistanceMethod::automatic, std::chrono::steady_clock::now() + opt.cap);
    r.d = dist.d;
    r.d_lower_bound = !dist.exact;
    r.flags = code_flags(c);
    const auto b = bound_check(c, r.d);
    r.slack = b.slack;
    r.bound_holds = b.holds;
    return r;
}

/// Evaluates candidates 0..budget-1 in a worker pool, then keeps the first record of each
/// (k, genmat hash) in candidate order. Throws parse_error when budget is 0.
inline std::vector<SearchRecord> search_random(const RingCtxPtr& ctx, const SearchOptions& opt)
{
    if (opt.budget == 0) throw error(errc::parse_error, "budget must be at least 1");
    if (!(opt.density > 0.0 && opt.density <= 1.0)) throw error(errc::parse_error, "density must lie in (0, 1]");
    std::vector<std::optional<SearchRecord>> slots(opt.budget);
    std::atomic<std::uint64_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    auto work = [&] {
        for (std::uint64_t i = next++; i < opt.budget; i = next++) {
            try {
                slots[i] = evaluate_candidate(ctx, opt, i);
            } catch (...) {
                std::lock_guard lk(err_mu);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    const unsigned nw = std::min<std::uint64_t>(worker_count(opt.threads), opt.budget);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < nw; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    std::vector<SearchRecord> out;
    std::map<std::pair<std::size_t, std::uint64_t>, bool> seen;
    for (auto& s : slots)
        if (seen.emplace(std::make_pair(s->k, s->genmat_hash), true).second) out.push_back(std::move(*s));
    return out;
}

}  // namespace skewring
