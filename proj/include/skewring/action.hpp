#pragma once

// Homomorphisms G -> Aut(K) and normalized 2-cocycles G x G -> K*.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "skewring/error.hpp"
#include "skewring/gf.hpp"
#include "skewring/group.hpp"

namespace skewring {

/// Theta(g) is the automorphism x -> x^(p^exps[g]) of K.
class Theta {
public:
    Theta() = default;

    static Theta trivial(std::uint32_t n, std::uint32_t m) { return Theta(std::vector<std::uint32_t>(n, 0), m); }

    /// Throws invalid_theta unless the table is a homomorphism G -> Z/m.
    static Theta from_table(const Group& g, const Field& k, std::vector<std::uint32_t> exps)
    {
        for (auto& e : exps) e %= k.m();
        Theta th(std::move(exps), k.m());
        const auto rep = th.validate(g);
        if (!rep.ok()) throw error(errc::invalid_theta, rep.failures.front());
        return th;
    }

    /// Frobenius^exp on every involution and trivial on everything else. Only a
    /// homomorphism for groups where that assignment is one (e.g. dihedral groups
    /// with odd rotation order over fields with m = 2).
    static Theta involutions_frobenius(const Group& g, const Field& k, std::uint32_t exp = 1)
    {
        std::vector<std::uint32_t> e(g.order(), 0);
        for (std::uint32_t i = 1; i < g.order(); ++i)
            if (g.mul(i, i) == 0) e[i] = exp;
        return from_table(g, k, std::move(e));
    }

    /// Kernel generated by kernel_gens; image_gen maps to Frobenius^exp and the quotient
    /// G/ker must be cyclic, generated by the coset of image_gen.
    static Theta kernel_power(const Group& g, const Field& k, const std::vector<std::uint32_t>& kernel_gens,
                              std::uint32_t image_gen, std::uint32_t exp)
    {
        const auto ker = g.generated_subgroup(kernel_gens);
        std::vector<bool> in_ker(g.order(), false);
        for (auto h : ker) in_ker[h] = true;
        std::vector<std::int64_t> power(g.order(), -1);
        // walk cosets image_gen^j * ker
        std::uint32_t rep = 0;
        for (std::uint32_t j = 0; j <= g.order(); ++j) {
            if (j > 0 && in_ker[rep]) break;
            for (auto h : ker) {
                const auto x = g.mul(rep, h);
                if (power[x] < 0) power[x] = j;
            }
            rep = g.mul(rep, image_gen);
        }
        std::vector<std::uint32_t> e(g.order());
        for (std::uint32_t i = 0; i < g.order(); ++i) {
            if (power[i] < 0)
                throw error(errc::invalid_theta, "quotient by the kernel is not generated by " + g.label(image_gen));
            e[i] = static_cast<std::uint32_t>((std::uint64_t(power[i]) * exp) % k.m());
        }
        return from_table(g, k, std::move(e));
    }

    [[nodiscard]] std::uint32_t operator[](std::uint32_t g) const noexcept { return exps_[g]; }
    [[nodiscard]] const std::vector<std::uint32_t>& exps() const noexcept { return exps_; }
    [[nodiscard]] std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(exps_.size()); }
    [[nodiscard]] std::uint32_t degree() const noexcept { return m_; }
    [[nodiscard]] bool is_trivial() const noexcept
    {
        return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
    }

    /// Theta(g)(x)
    [[nodiscard]] FieldElem apply(const Field& k, std::uint32_t g, FieldElem x) const noexcept
    {
        return k.frobenius(x, exps_[g]);
    }

    [[nodiscard]] std::vector<std::uint32_t> kernel() const
    {
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] == 0) out.push_back(i);
        return out;
    }

    [[nodiscard]] Report validate(const Group& g) const
    {
        Report rep;
        if (exps_.size() != g.order()) {
            rep.fail("theta table has " + std::to_string(exps_.size()) + " entries, group order is " +
                     std::to_string(g.order()));
            return rep;
        }
        if (exps_[0] != 0) rep.fail("theta(1) is not the identity");
        for (std::uint32_t i = 0; i < g.order() && rep.failures.size() < 8; ++i)
            for (std::uint32_t j = 0; j < g.order() && rep.failures.size() < 8; ++j)
                if (exps_[g.mul(i, j)] != (exps_[i] + exps_[j]) % m_)
                    rep.fail("theta is not a homomorphism at (" + g.label(i) + "," + g.label(j) + ")");
        return rep;
    }

    friend bool operator==(const Theta&, const Theta&) = default;

private:
    Theta(std::vector<std::uint32_t> exps, std::uint32_t m) : exps_(std::move(exps)), m_(m == 0 ? 1 : m) {}

    std::vector<std::uint32_t> exps_;
    std::uint32_t m_ = 1;
};

/// An n x n table alpha(g_i, g_j) of field elements in the group's enumeration order.
class Cocycle {
public:
    Cocycle() = default;
    Cocycle(std::uint32_t n, std::vector<FieldElem> table) : n_(n), tab_(std::move(table))
    {
        if (tab_.size() != std::size_t(n) * n) throw error(errc::invalid_cocycle, "cocycle table must be n x n");
    }

    static Cocycle trivial(std::uint32_t n) { return Cocycle(n, std::vector<FieldElem>(std::size_t(n) * n, Field::one())); }

    /// alpha_lambda(g^i, g^j) = 1 if i + j < n and lambda otherwise, on cyclic(n).
    static Cocycle constacyclic(const Group& g, FieldElem lambda)
    {
        if (lambda.v == 0) throw error(errc::zero_lambda, "lambda must be nonzero");
        if (!g.is_canonical_cyclic()) throw error(errc::not_cyclic, "constacyclic cocycles need cyclic(n)");
        const std::uint32_t n = g.order();
        std::vector<FieldElem> t(std::size_t(n) * n);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) t[std::size_t(i) * n + j] = i + j < n ? Field::one() : lambda;
        return Cocycle(n, std::move(t));
    }

    [[nodiscard]] std::uint32_t order() const noexcept { return n_; }
    [[nodiscard]] FieldElem operator()(std::uint32_t g, std::uint32_t h) const noexcept
    {
        return tab_[std::size_t(g) * n_ + h];
    }
    [[nodiscard]] const std::vector<FieldElem>& table() const noexcept { return tab_; }

    [[nodiscard]] bool is_trivial() const noexcept
    {
        return std::all_of(tab_.begin(), tab_.end(), [](auto x) { return x == Field::one(); });
    }

    /// alpha = alpha^-1, i.e. every value is +-1.
    [[nodiscard]] bool is_involutive(const Field& k) const noexcept
    {
        return std::all_of(tab_.begin(), tab_.end(), [&](auto x) { return x.v != 0 && k.mul(x, x) == Field::one(); });
    }

    /// alpha^sqrt(q) = alpha; false for non-square fields.
    [[nodiscard]] bool is_hermitian_fixed(const Field& k) const
    {
        if (!k.is_square()) return false;
        return std::all_of(tab_.begin(), tab_.end(), [&](auto x) { return k.frobenius(x, k.m() / 2) == x; });
    }

    /// alpha(g, g^-1) = alpha(g^-1, g) for all g.
    [[nodiscard]] bool inverse_symmetric(const Group& g) const noexcept
    {
        for (std::uint32_t i = 0; i < n_; ++i)
            if ((*this)(i, g.inv(i)) != (*this)(g.inv(i), i)) return false;
        return true;
    }

    [[nodiscard]] Cocycle inverse(const Field& k) const
    {
        std::vector<FieldElem> t(tab_.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = k.inv(tab_[i]);
        return Cocycle(n_, std::move(t));
    }

    [[nodiscard]] Cocycle power(const Field& k, std::int64_t e) const
    {
        std::vector<FieldElem> t(tab_.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = k.pow(tab_[i], e);
        return Cocycle(n_, std::move(t));
    }

    friend bool operator==(const Cocycle&, const Cocycle&) = default;

private:
    std::uint32_t n_ = 0;
    std::vector<FieldElem> tab_;
};

/// Checks normalization, the cocycle identity and stabilization by Theta(G). The
/// identity is checked on all triples up to order 24 and on 10^6 sampled triples above.
inline Report validate_cocycle(const Cocycle& a, const Theta& th, const Group& g, const Field& k)
{
    Report rep;
    const std::uint32_t n = g.order();
    if (a.order() != n) {
        rep.fail("cocycle table order does not match group order");
        return rep;
    }
    if (th.size() != n) {
        rep.fail("theta table size does not match group order");
        return rep;
    }
    constexpr std::size_t cap = 16;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (a(i, j).v == 0 || !k.contains(a(i, j))) {
                rep.fail("alpha(" + g.label(i) + "," + g.label(j) + ") is not a nonzero field element");
                return rep;
            }
    for (std::uint32_t i = 0; i < n && rep.failures.size() < cap; ++i)
        if (a(i, 0) != Field::one() || a(0, i) != Field::one())
            rep.fail("not normalized at " + g.label(i));
    auto check = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
        const auto lhs = k.mul(a(x, g.mul(y, z)), a(y, z));
        const auto rhs = k.mul(a(g.mul(x, y), z), a(x, y));
        if (lhs != rhs)
            rep.fail("cocycle identity fails at (" + g.label(x) + "," + g.label(y) + "," + g.label(z) + ")");
    };
    if (n <= 24) {
        for (std::uint32_t x = 0; x < n && rep.failures.size() < cap; ++x)
            for (std::uint32_t y = 0; y < n && rep.failures.size() < cap; ++y)
                for (std::uint32_t z = 0; z < n && rep.failures.size() < cap; ++z) check(x, y, z);
    } else {
        std::mt19937_64 rng(0xc0c7c1e);
        std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
        for (int s = 0; s < 1000000 && rep.failures.size() < cap; ++s) check(pick(rng), pick(rng), pick(rng));
    }
    std::set<std::uint32_t> image(th.exps().begin(), th.exps().end());
    for (auto e : image) {
        if (e == 0) continue;
        for (std::uint32_t i = 0; i < n && rep.failures.size() < cap; ++i)
            for (std::uint32_t j = 0; j < n && rep.failures.size() < cap; ++j)
                if (k.frobenius(a(i, j), e) != a(i, j))
                    rep.fail("alpha(" + g.label(i) + "," + g.label(j) + ") is not fixed by theta");
    }
    return rep;
}

/// kappa(g) theta(g)(kappa(h)) kappa(gh)^-1 alpha(g,h): the cocycle carried to the source
/// side of the basis rescaling g -> kappa(g) g.
inline Cocycle coboundary_twist(const Cocycle& a, const std::vector<FieldElem>& kappa, const Theta& th, const Group& g,
                                const Field& k)
{
    const std::uint32_t n = g.order();
    std::vector<FieldElem> t(std::size_t(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            t[std::size_t(i) * n + j] =
                k.mul(k.mul(k.mul(kappa[i], th.apply(k, i, kappa[j])), k.inv(kappa[g.mul(i, j)])), a(i, j));
    return Cocycle(n, std::move(t));
}

namespace detail {

inline std::int64_t mod_norm(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t inv_mod_general(std::int64_t a, std::int64_t m)
{
    std::int64_t g = m, x = 0, x1 = 1, r = mod_norm(a, m);
    while (r) {
        const std::int64_t qd = g / r;
        std::tie(g, r) = std::make_pair(r, g - qd * r);
        std::tie(x, x1) = std::make_pair(x1, x - qd * x1);
    }
    return mod_norm(x, m);
}

/// Solves A x = b over Z/(p^e) by elimination with minimal-valuation pivots.
inline std::optional<std::vector<std::int64_t>> solve_prime_power(std::vector<std::vector<std::int64_t>> a,
                                                                   std::vector<std::int64_t> b, std::int64_t p, int e)
{
    std::int64_t mod = 1;
    for (int i = 0; i < e; ++i) mod *= p;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (auto& r : a)
        for (auto& v : r) v = mod_norm(v, mod);
    for (auto& v : b) v = mod_norm(v, mod);
    auto val = [&](std::int64_t v) {
        if (v == 0) return e;
        int k = 0;
        while (v % p == 0) {
            v /= p;
            ++k;
        }
        return k;
    };
    std::vector<std::size_t> colperm(cols);
    std::iota(colperm.begin(), colperm.end(), 0);
    std::vector<int> pivval;
    std::size_t rank = 0;
    for (; rank < std::min(rows, cols); ++rank) {
        int best = e;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = rank; i < rows && best > 0; ++i)
            for (std::size_t j = rank; j < cols; ++j) {
                const int v = val(a[i][j]);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (best == 0) break;
                }
            }
        if (best == e) break;
        std::swap(a[rank], a[bi]);
        std::swap(b[rank], b[bi]);
        if (bj != rank) {
            for (auto& r : a) std::swap(r[rank], r[bj]);
            std::swap(colperm[rank], colperm[bj]);
        }
        std::int64_t pv = 1;
        for (int i = 0; i < best; ++i) pv *= p;
        const std::int64_t unit_inv = inv_mod_general(a[rank][rank] / pv, mod);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][rank] == 0) continue;
            const std::int64_t f = mod_norm((a[i][rank] / pv) % mod * unit_inv, mod);
            for (std::size_t j = rank; j < cols; ++j) a[i][j] = mod_norm(a[i][j] - f * a[rank][j] % mod, mod);
            b[i] = mod_norm(b[i] - f * b[rank] % mod, mod);
        }
        pivval.push_back(best);
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<std::int64_t> y(cols, 0);
    for (std::size_t s = rank; s-- > 0;) {
        std::int64_t rhs = b[s];
        for (std::size_t j = s + 1; j < cols; ++j) rhs = mod_norm(rhs - a[s][j] * y[j] % mod, mod);
        std::int64_t pv = 1;
        for (int i = 0; i < pivval[s]; ++i) pv *= p;
        if (rhs % pv != 0) return std::nullopt;
        const std::int64_t sub = mod / pv;
        const std::int64_t u = (a[s][s] / pv) % sub;
        y[s] = mod_norm((rhs / pv) % sub * inv_mod_general(u, sub), sub);
    }
    std::vector<std::int64_t> x(cols);
    for (std::size_t j = 0; j < cols; ++j) x[colperm[j]] = y[j];
    return x;
}

/// Solves A x = b over Z/N for composite N by solving modulo each prime power and
/// recombining with the Chinese remainder theorem.
inline std::optional<std::vector<std::int64_t>> solve_mod(const std::vector<std::vector<std::int64_t>>& a,
                                                          const std::vector<std::int64_t>& b, std::int64_t n)
{
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<std::int64_t> x(cols, 0);
    if (n == 1) return x;
    std::int64_t acc_mod = 1;
    for (auto pf : prime_factors(static_cast<std::uint64_t>(n))) {
        const auto p = static_cast<std::int64_t>(pf);
        int e = 0;
        std::int64_t pe = 1, rest = n;
        while (rest % p == 0) {
            rest /= p;
            pe *= p;
            ++e;
        }
        auto part = solve_prime_power(a, b, p, e);
        if (!part) return std::nullopt;
        // combine x (mod acc_mod) with part (mod pe)
        const std::int64_t inv = inv_mod_general(acc_mod % pe, pe);
        for (std::size_t j = 0; j < cols; ++j) {
            const std::int64_t t = mod_norm(((*part)[j] - x[j]) % pe * inv, pe);
            x[j] = x[j] + acc_mod * t;
        }
        acc_mod *= pe;
    }
    for (auto& v : x) v = mod_norm(v, n);
    return x;
}

}  // namespace detail

/// Returns kappa with kappa(1) = 1 and alpha(g,h) = kappa(g)^-1 kappa(h)^-1 kappa(gh), or
/// nullopt when alpha is not a coboundary. Works on discrete logarithms, i.e. a linear
/// system over Z/(q-1) in the unknowns log kappa(g).
inline std::optional<std::vector<FieldElem>> coboundary_test(const Cocycle& a, const Group& g, const Field& k)
{
    const std::uint32_t n = g.order();
    const std::int64_t order = k.q() - 1;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> rhs;
    for (std::uint32_t i = 1; i < n; ++i)
        for (std::uint32_t j = 1; j < n; ++j) {
            std::vector<std::int64_t> r(n - 1, 0);
            // log alpha(g,h) = -x_g - x_h + x_gh
            r[i - 1] -= 1;
            r[j - 1] -= 1;
            if (const auto ij = g.mul(i, j); ij != 0) r[ij - 1] += 1;
            rows.push_back(std::move(r));
            rhs.push_back(k.log(a(i, j)));
        }
    for (std::uint32_t i = 0; i < n; ++i)
        if (a(i, 0) != Field::one() || a(0, i) != Field::one()) return std::nullopt;
    std::vector<FieldElem> kappa(n, Field::one());
    if (n > 1) {
        const auto sol = detail::solve_mod(rows, rhs, order);
        if (!sol) return std::nullopt;
        for (std::uint32_t i = 1; i < n; ++i) kappa[i] = k.exp((*sol)[i - 1]);
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (a(i, j) != k.mul(k.mul(k.inv(kappa[i]), k.inv(kappa[j])), kappa[g.mul(i, j)]))
                throw error(errc::verification_failed, "coboundary solution does not reproduce alpha");
    return kappa;
}

}  // namespace skewring
