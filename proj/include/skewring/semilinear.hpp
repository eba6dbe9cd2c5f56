#pragma once

// Semilinear Hamming isometries (gamma, A) with A = diag * perm, acting by
//   (gamma, A) . x = gamma(A x),   (A x)_{perm(i)} = diag_{perm(i)} x_i,
// where gamma is the Frobenius power x -> x^(p^gamma) applied entrywise.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "skewring/action.hpp"
#include "skewring/code.hpp"
#include "skewring/error.hpp"
#include "skewring/gf.hpp"
#include "skewring/group.hpp"
#include "skewring/ring.hpp"

namespace skewring {

struct SemilinearMap {
    std::uint32_t gamma = 0;
    std::vector<std::uint32_t> perm;
    Vec diag;

    [[nodiscard]] std::size_t n() const noexcept { return perm.size(); }

    static SemilinearMap identity(std::size_t n)
    {
        SemilinearMap u;
        u.perm.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) u.perm[i] = i;
        u.diag.assign(n, Field::one());
        return u;
    }

    [[nodiscard]] bool perm_is_identity() const
    {
        for (std::uint32_t i = 0; i < perm.size(); ++i)
            if (perm[i] != i) return false;
        return true;
    }

    /// Flattened key: gamma, perm, diag values.
    [[nodiscard]] std::vector<std::uint32_t> key() const
    {
        std::vector<std::uint32_t> k{gamma};
        k.insert(k.end(), perm.begin(), perm.end());
        for (auto x : diag) k.push_back(x.v);
        return k;
    }

    friend bool operator==(const SemilinearMap& a, const SemilinearMap& b)
    {
        return a.gamma == b.gamma && a.perm == b.perm && a.diag == b.diag;
    }
};

/// Throws invalid_action unless perm is a permutation and diag is nonzero of the same length.
inline void validate_map(const Field& k, const SemilinearMap& u)
{
    if (u.diag.size() != u.perm.size()) throw error(errc::length_mismatch, "diag and perm lengths differ");
    std::vector<bool> seen(u.n(), false);
    for (auto p : u.perm) {
        if (p >= u.n() || seen[p]) throw error(errc::invalid_action, "perm is not a permutation");
        seen[p] = true;
    }
    for (auto d : u.diag)
        if (d.v == 0 || !k.contains(d)) throw error(errc::invalid_action, "diag entries must be nonzero field elements");
    if (u.gamma >= k.m()) throw error(errc::invalid_action, "gamma must lie in 0..m-1");
}

inline Vec semilinear_apply(const Field& k, const SemilinearMap& u, const Vec& x)
{
    if (x.size() != u.n()) throw error(errc::length_mismatch, "vector length differs from map length");
    Vec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto j = u.perm[i];
        y[j] = k.frobenius(k.mul(u.diag[j], x[i]), u.gamma);
    }
    return y;
}

inline Code semilinear_apply(const SemilinearMap& u, const Code& c)
{
    std::vector<Vec> rows;
    for (const auto& r : c.genmat().data()) rows.push_back(semilinear_apply(c.field(), u, r));
    return Code::from_rows(c.field(), c.n(), std::move(rows));
}

/// u o v, i.e. apply v first: (gamma_u gamma_v, gamma_v^-1(A_u) A_v).
inline SemilinearMap compose(const Field& k, const SemilinearMap& u, const SemilinearMap& v)
{
    if (u.n() != v.n()) throw error(errc::length_mismatch, "maps of different lengths");
    SemilinearMap w;
    w.gamma = (u.gamma + v.gamma) % k.m();
    w.perm.resize(u.n());
    w.diag.resize(u.n());
    for (std::size_t i = 0; i < u.n(); ++i) {
        const auto vi = v.perm[i];
        const auto ui = u.perm[vi];
        w.perm[i] = ui;
        w.diag[ui] = k.mul(k.frobenius(u.diag[ui], -static_cast<std::int64_t>(v.gamma)), v.diag[vi]);
    }
    return w;
}

inline SemilinearMap inverse(const Field& k, const SemilinearMap& u)
{
    SemilinearMap w;
    w.gamma = (k.m() - u.gamma) % k.m();
    w.perm.resize(u.n());
    w.diag.resize(u.n());
    for (std::uint32_t i = 0; i < u.n(); ++i) {
        const auto j = u.perm[i];
        w.perm[j] = i;
        w.diag[i] = k.inv(k.frobenius(u.diag[j], u.gamma));
    }
    return w;
}

/// An explicit finite subgroup of semilinear maps together with its generators.
class GammaGroup {
public:
    static constexpr std::size_t size_cap = 1'000'000;

    /// Breadth-first closure of the generators. Throws size_cap past 10^6 elements.
    static GammaGroup closure(const Field& k, std::vector<SemilinearMap> gens)
    {
        if (gens.empty()) throw error(errc::parse_error, "no generators");
        const std::size_t n = gens.front().n();
        for (const auto& g : gens) {
            if (g.n() != n) throw error(errc::length_mismatch, "generators of different lengths");
            validate_map(k, g);
        }
        GammaGroup out(k);
        out.gens_ = gens;
        std::set<std::vector<std::uint32_t>> seen;
        auto id = SemilinearMap::identity(n);
        seen.insert(id.key());
        out.elems_.push_back(id);
        for (std::size_t head = 0; head < out.elems_.size(); ++head) {
            for (const auto& g : gens) {
                auto w = compose(k, g, out.elems_[head]);
                if (seen.insert(w.key()).second) {
                    out.elems_.push_back(std::move(w));
                    if (out.elems_.size() > size_cap) throw error(errc::size_cap, "group exceeds 10^6 elements");
                }
            }
        }
        return out;
    }

    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] const std::vector<SemilinearMap>& elements() const noexcept { return elems_; }
    [[nodiscard]] const std::vector<SemilinearMap>& generators() const noexcept { return gens_; }
    [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
    [[nodiscard]] std::size_t n() const noexcept { return elems_.empty() ? 0 : elems_.front().n(); }

private:
    explicit GammaGroup(Field k) : field_(std::move(k)) {}

    Field field_;
    std::vector<SemilinearMap> gens_;
    std::vector<SemilinearMap> elems_;
};

/// The map xi(lambda, g): eta h-bar -> lambda Theta(g)(eta) alpha(g,h) (gh)-bar.
inline SemilinearMap xi(const RingCtx& ctx, FieldElem lambda, std::uint32_t g)
{
    const auto& k = ctx.field();
    SemilinearMap u;
    u.gamma = ctx.theta()[g] % k.m();
    u.perm.resize(ctx.n());
    u.diag.resize(ctx.n());
    for (std::uint32_t h = 0; h < ctx.n(); ++h) {
        const auto gh = ctx.group().mul(g, h);
        u.perm[h] = gh;
        u.diag[gh] = k.frobenius(k.mul(lambda, ctx.alpha()(g, h)), -static_cast<std::int64_t>(u.gamma));
    }
    return u;
}

/// Image of G(Theta, alpha) = K* x G in semilinear maps, of order (q-1)|G|.
inline GammaGroup xi_embed(const RingCtx& ctx)
{
    const auto& k = ctx.field();
    if (static_cast<std::uint64_t>(k.q() - 1) * ctx.n() > GammaGroup::size_cap)
        throw error(errc::size_cap, "(q-1)|G| exceeds 10^6");
    std::vector<SemilinearMap> gens{xi(ctx, k.generator(), 0)};
    for (std::uint32_t g = 1; g < ctx.n(); ++g) gens.push_back(xi(ctx, Field::one(), g));
    return GammaGroup::closure(k, std::move(gens));
}

/// True iff every generator maps C into (hence onto) C.
inline bool stabilizer_check(const GammaGroup& gg, const Code& c)
{
    if (gg.n() != c.n()) throw error(errc::length_mismatch, "group and code lengths differ");
    for (const auto& u : gg.generators())
        for (const auto& r : c.genmat().data())
            if (!c.contains(semilinear_apply(c.field(), u, r))) return false;
    return true;
}

struct Recognition {
    Group group;
    Theta theta;
    Cocycle alpha;
    RingCtxPtr ctx;
    std::vector<std::uint32_t> psi;  // coordinate i -> group element psi[i]
    Code ideal;
};

/// Rebuilds K[G, Theta, alpha] from a code and a stabilizing group satisfying
/// (a) identity-permutation elements are scalar, (b) the permutation parts act regularly,
/// (c) the permutation part determines gamma. Coordinate 0 is the anchor: element i is
/// the permutation sending 0 to i, and g~_i is the unique map with g~_i e_0 = e_i.
inline Recognition recognize(const Code& c, const GammaGroup& gg)
{
    const Field& k = c.field();
    if (!(k == gg.field())) throw error(errc::context_mismatch, "code and group over different fields");
    const std::uint32_t n = static_cast<std::uint32_t>(c.n());
    if (gg.n() != n) throw error(errc::length_mismatch, "group and code lengths differ");
    if (!stabilizer_check(gg, c)) throw error(errc::not_stabilized, "the group does not stabilize the code");

    for (const auto& u : gg.elements()) {
        if (!u.perm_is_identity() || u.gamma != 0) continue;
        for (auto d : u.diag)
            if (d != u.diag.front())
                throw error(errc::condition_a_violated, "a diagonal element of the group is not scalar");
    }

    std::map<std::vector<std::uint32_t>, std::uint32_t> gamma_of;
    for (const auto& u : gg.elements()) {
        auto [it, fresh] = gamma_of.emplace(u.perm, u.gamma);
        (void)fresh;
    }
    std::vector<const std::vector<std::uint32_t>*> by_anchor(n, nullptr);
    for (const auto& [perm, g] : gamma_of) {
        (void)g;
        auto& slot = by_anchor[perm[0]];
        if (slot) throw error(errc::condition_b_violated, "two permutations send coordinate 0 to the same place");
        slot = &perm;
    }
    if (gamma_of.size() != n || std::find(by_anchor.begin(), by_anchor.end(), nullptr) != by_anchor.end())
        throw error(errc::condition_b_violated, "permutation parts do not act regularly");

    for (const auto& u : gg.elements())
        if (gamma_of.at(u.perm) != u.gamma)
            throw error(errc::condition_c_violated, "equal permutations carry different field automorphisms");

    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) table[i][j] = (*by_anchor[i])[j];
    std::vector<std::string> labels(n);
    for (std::uint32_t i = 0; i < n; ++i) labels[i] = i == 0 ? "1" : "g" + std::to_string(i);
    Group group = Group::explicit_table(table, labels);

    std::vector<const SemilinearMap*> tilde(n, nullptr);
    for (const auto& u : gg.elements()) {
        const auto i = u.perm[0];
        if (u.perm != *by_anchor[i] || u.diag[i] != Field::one()) continue;
        if (tilde[i]) throw error(errc::condition_a_violated, "lift g~ with g~ e_0 = e_g is not unique");
        tilde[i] = &u;
    }
    for (std::uint32_t i = 0; i < n; ++i)
        if (!tilde[i]) throw error(errc::condition_a_violated, "no lift g~ with g~ e_0 = e_g for " + labels[i]);

    std::vector<std::uint32_t> exps(n);
    for (std::uint32_t i = 0; i < n; ++i) exps[i] = tilde[i]->gamma;
    Theta theta = Theta::from_table(group, k, exps);
    std::vector<FieldElem> atab(std::size_t(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            atab[std::size_t(i) * n + j] = k.frobenius(tilde[i]->diag[table[i][j]], tilde[i]->gamma);
    Cocycle alpha(n, std::move(atab));
    auto ctx = RingCtx::make(k, group, theta, alpha);
    std::vector<std::uint32_t> psi(n);
    for (std::uint32_t i = 0; i < n; ++i) psi[i] = i;
    auto ideal = Code::ideal_from_rows(ctx, c.genmat().data());
    return {std::move(group), std::move(theta), std::move(alpha), std::move(ctx), std::move(psi), std::move(ideal)};
}

// ---------------------------------------------------------------------------
// Text form: "gamma=<k> perm=<one-line or cycles> diag=<n comma-separated elements>"

inline std::string render(const Field& k, const SemilinearMap& u)
{
    std::string s = "gamma=" + std::to_string(u.gamma) + " perm=";
    for (std::size_t i = 0; i < u.n(); ++i) s += (i ? "," : "") + std::to_string(u.perm[i]);
    s += " diag=";
    for (std::size_t i = 0; i < u.n(); ++i) s += (i ? "," : "") + k.render(u.diag[i]);
    return s;
}

namespace detail {

inline std::uint32_t parse_index(const std::string& s)
{
    const auto t = trim(s);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw error(errc::parse_error, "expected a coordinate index, got '" + t + "'");
    return static_cast<std::uint32_t>(std::stoul(t));
}

/// One-line "2,0,1" or cycles "(0,1,2)(3,4)" (space or comma separated); n fixes the length.
inline std::vector<std::uint32_t> parse_perm(const std::string& text, std::size_t n)
{
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    const auto t = trim(text);
    if (!t.empty() && t.front() == '(') {
        std::size_t pos = 0;
        while (pos < t.size()) {
            if (t[pos] != '(') throw error(errc::parse_error, "malformed cycle notation '" + t + "'");
            const auto close = t.find(')', pos);
            if (close == std::string::npos) throw error(errc::parse_error, "unclosed cycle in '" + t + "'");
            std::string body = t.substr(pos + 1, close - pos - 1);
            std::replace(body.begin(), body.end(), ' ', ',');
            std::vector<std::uint32_t> cyc;
            for (const auto& part : split_top(body, ','))
                if (!trim(part).empty()) cyc.push_back(parse_index(part));
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (cyc[i] >= n) throw error(errc::parse_error, "cycle entry out of range");
                perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
            }
            pos = close + 1;
        }
    } else {
        const auto parts = split_top(t, ',');
        if (parts.size() != n) throw error(errc::parse_error, "perm needs " + std::to_string(n) + " entries");
        for (std::size_t i = 0; i < n; ++i) perm[i] = parse_index(parts[i]);
    }
    return perm;
}

}  // namespace detail

/// Parses the text form; n is the code length.
inline SemilinearMap parse_map(const Field& k, std::string_view line, std::size_t n)
{
    SemilinearMap u;
    std::string perm_text, diag_text;
    bool have_gamma = false;
    std::istringstream is{std::string(line)};
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) throw error(errc::parse_error, "expected key=value, got '" + tok + "'");
        const auto key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "gamma") {
            u.gamma = detail::parse_index(val);
            have_gamma = true;
        } else if (key == "perm") {
            perm_text = val;
        } else if (key == "diag") {
            diag_text = val;
        } else {
            throw error(errc::parse_error, "unknown key '" + key + "'");
        }
    }
    if (!have_gamma || perm_text.empty() || diag_text.empty())
        throw error(errc::parse_error, "a map needs gamma=, perm= and diag=");
    u.perm = detail::parse_perm(perm_text, n);
    for (const auto& part : detail::split_top(diag_text, ',')) u.diag.push_back(k.parse(detail::trim(part)));
    validate_map(k, u);
    return u;
}

}  // namespace skewring
