#pragma once

// Exact arithmetic in GF(p^m) = GF(p)[t]/(f(t)).
//
// Elements are stored packed: the coefficient of t^i is the i-th base-p digit of
// FieldElem::v. Multiplication goes through exp/log tables taken with respect to a
// fixed generator of the multiplicative group (t itself whenever f is primitive).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "skewring/error.hpp"

namespace skewring {

struct FieldElem {
    std::uint32_t v = 0;

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

using poly_t = std::vector<std::uint32_t>;

inline void poly_trim(poly_t& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    // p is prime, a != 0
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

/// Remainder of a modulo b over GF(p); b nonzero.
inline poly_t poly_mod(poly_t a, const poly_t& b, std::uint32_t p)
{
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t f = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = f * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        poly_trim(a);
    }
    return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const poly_t& f, std::uint32_t p)
{
    const std::size_t m = f.size() - 1;
    if (m <= 1) return true;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            poly_t g(d + 1, 0);
            g[d] = 1;
            std::uint64_t x = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// A finite field GF(p^m) with an explicit defining polynomial. Cheap to copy; the
/// arithmetic tables are shared and immutable.
class Field {
public:
    static constexpr std::uint64_t max_order = std::uint64_t(1) << 20;

    /// Builds GF(p^m) from a monic degree-m polynomial given constant term first.
    /// Throws not_prime, degree_mismatch, not_irreducible or field_too_large.
    static Field make(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly)
    {
        if (!detail::is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
        if (m == 0) throw error(errc::degree_mismatch, "extension degree must be positive");
        if (poly.size() != m + 1)
            throw error(errc::degree_mismatch, "polynomial must have " + std::to_string(m + 1) + " coefficients");
        for (auto& c : poly) c %= p;
        if (poly.back() != 1) throw error(errc::degree_mismatch, "polynomial must be monic of degree m");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > max_order) throw error(errc::field_too_large, "p^m exceeds 2^20");
        }
        if (!detail::is_irreducible(poly, p)) throw error(errc::not_irreducible, "defining polynomial is reducible");
        return Field(build(p, m, std::move(poly), static_cast<std::uint32_t>(q)));
    }

    /// GF(p) with defining polynomial x.
    static Field prime(std::uint32_t p) { return make(p, 1, {0, 1}); }

    [[nodiscard]] std::uint32_t p() const noexcept { return t_->p; }
    [[nodiscard]] std::uint32_t m() const noexcept { return t_->m; }
    [[nodiscard]] std::uint32_t q() const noexcept { return t_->q; }
    [[nodiscard]] const std::vector<std::uint32_t>& poly() const noexcept { return t_->poly; }
    /// Whether the residue t of x generates the multiplicative group.
    [[nodiscard]] bool primitive() const noexcept { return t_->primitive; }
    [[nodiscard]] bool is_prime_field() const noexcept { return t_->m == 1; }
    /// True when |K| is a square, i.e. a Hermitian form exists.
    [[nodiscard]] bool is_square() const noexcept { return t_->m % 2 == 0; }
    /// sqrt(|K|) for square fields.
    [[nodiscard]] std::uint32_t sqrt_order() const
    {
        if (!is_square()) throw error(errc::not_square_field, "|K| is not a square");
        std::uint32_t r = 1;
        for (std::uint32_t i = 0; i < t_->m / 2; ++i) r *= t_->p;
        return r;
    }

    [[nodiscard]] Field prime_subfield() const { return prime(t_->p); }

    [[nodiscard]] static constexpr FieldElem zero() noexcept { return {0}; }
    [[nodiscard]] static constexpr FieldElem one() noexcept { return {1}; }
    /// The residue class of x.
    [[nodiscard]] FieldElem t() const noexcept
    {
        if (t_->m >= 2) return {t_->p};
        return {(t_->p - t_->poly[0]) % t_->p};
    }
    /// The generator used for discrete logarithms (equals t() when primitive()).
    [[nodiscard]] FieldElem generator() const noexcept { return {t_->gen}; }

    [[nodiscard]] FieldElem from_int(std::int64_t n) const noexcept
    {
        const auto p = static_cast<std::int64_t>(t_->p);
        return {static_cast<std::uint32_t>(((n % p) + p) % p)};
    }

    [[nodiscard]] FieldElem from_coeffs(std::span<const std::uint32_t> c) const
    {
        if (c.size() > t_->m) throw error(errc::degree_mismatch, "too many coefficients for field element");
        std::uint32_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * t_->p + (c[i] % t_->p);
        return {v};
    }

    [[nodiscard]] std::vector<std::uint32_t> coeffs(FieldElem a) const
    {
        std::vector<std::uint32_t> out(t_->m);
        std::uint32_t v = a.v;
        for (auto& c : out) {
            c = v % t_->p;
            v /= t_->p;
        }
        return out;
    }

    [[nodiscard]] bool contains(FieldElem a) const noexcept { return a.v < t_->q; }

    [[nodiscard]] FieldElem add(FieldElem a, FieldElem b) const noexcept
    {
        if (t_->p == 2) return {a.v ^ b.v};
        if (!t_->add.empty()) return {t_->add[std::size_t(a.v) * t_->q + b.v]};
        return {slow_add(a.v, b.v)};
    }
    [[nodiscard]] FieldElem neg(FieldElem a) const noexcept { return {t_->neg[a.v]}; }
    [[nodiscard]] FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

    [[nodiscard]] FieldElem mul(FieldElem a, FieldElem b) const noexcept
    {
        if (a.v == 0 || b.v == 0) return {0};
        return {t_->exp[t_->log[a.v] + t_->log[b.v]]};
    }

    [[nodiscard]] FieldElem inv(FieldElem a) const
    {
        if (a.v == 0) throw error(errc::division_by_zero, "inverse of zero");
        const std::uint32_t l = t_->log[a.v];
        return {t_->exp[l == 0 ? 0 : t_->q - 1 - l]};
    }

    [[nodiscard]] FieldElem div(FieldElem a, FieldElem b) const
    {
        if (b.v == 0) throw error(errc::division_by_zero, "division by zero");
        return mul(a, inv(b));
    }

    [[nodiscard]] FieldElem pow(FieldElem a, std::int64_t e) const
    {
        if (a.v == 0) {
            if (e > 0) return {0};
            if (e == 0) return {1};
            throw error(errc::division_by_zero, "negative power of zero");
        }
        const auto order = static_cast<std::int64_t>(t_->q - 1);
        const std::int64_t l = static_cast<std::int64_t>(t_->log[a.v]);
        const std::int64_t r = ((l * (e % order)) % order + order) % order;
        return {t_->exp[static_cast<std::size_t>(r)]};
    }

    /// a^(p^k); k is taken modulo m.
    [[nodiscard]] FieldElem frobenius(FieldElem a, std::int64_t k) const noexcept
    {
        if (a.v == 0) return a;
        const auto m = static_cast<std::int64_t>(t_->m);
        const std::uint32_t kk = static_cast<std::uint32_t>(((k % m) + m) % m);
        if (kk == 0) return a;
        return {t_->exp[std::size_t(t_->log[a.v]) * t_->pow_p_mod[kk] % (t_->q - 1)]};
    }

    /// Discrete logarithm with respect to generator(); a must be nonzero.
    [[nodiscard]] std::uint32_t log(FieldElem a) const
    {
        if (a.v == 0) throw error(errc::division_by_zero, "logarithm of zero");
        return t_->log[a.v];
    }
    [[nodiscard]] FieldElem exp(std::int64_t k) const noexcept
    {
        const auto order = static_cast<std::int64_t>(t_->q - 1);
        return {t_->exp[static_cast<std::size_t>(((k % order) + order) % order)]};
    }

    /// Multiplicative order of a nonzero element.
    [[nodiscard]] std::uint32_t order(FieldElem a) const
    {
        const std::uint32_t n = t_->q - 1;
        return n / std::gcd(n, log(a));
    }

    /// Canonical text: "0", "1", "t^k" (t primitive), the integer for prime fields,
    /// otherwise "[c0,c1,...]".
    [[nodiscard]] std::string render(FieldElem a) const
    {
        if (a.v == 0) return "0";
        if (a.v == 1) return "1";
        if (t_->m == 1) return std::to_string(a.v);
        if (t_->primitive) return "t^" + std::to_string(t_->log[a.v]);
        return render_coeffs(a);
    }

    [[nodiscard]] std::string render_coeffs(FieldElem a) const
    {
        std::string s = "[";
        const auto c = coeffs(a);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i]);
        }
        return s + "]";
    }

    /// Accepts "0", integers (prime subfield), "t", "t^k", with "w"/"tau" as aliases
    /// of "t", an optional leading '-', and "[c0,c1,...]".
    [[nodiscard]] FieldElem parse(std::string_view text) const
    {
        std::string s;
        for (char ch : text)
            if (ch != ' ' && ch != '\t') s += ch;
        if (s.empty()) throw error(errc::parse_error, "empty field element");
        bool negate = false;
        if (s[0] == '-') {
            negate = true;
            s.erase(0, 1);
        }
        FieldElem r = parse_unsigned(s);
        return negate ? neg(r) : r;
    }

    [[nodiscard]] std::string describe() const
    {
        std::ostringstream os;
        os << "GF(" << t_->p;
        if (t_->m > 1) os << "^" << t_->m;
        os << ") poly=[";
        for (std::size_t i = 0; i < t_->poly.size(); ++i) os << (i ? "," : "") << t_->poly[i];
        os << "]";
        return os.str();
    }

    friend bool operator==(const Field& a, const Field& b) noexcept
    {
        return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->poly == b.t_->poly);
    }

private:
    struct tables {
        std::uint32_t p = 0, m = 0, q = 0;
        std::vector<std::uint32_t> poly;
        bool primitive = false;
        std::uint32_t gen = 1;
        std::vector<std::uint32_t> exp;  // length 2(q-1), so exp[log a + log b] needs no reduction
        std::vector<std::uint32_t> log;
        std::vector<std::uint32_t> add;  // q*q table for small odd-characteristic fields
        std::vector<std::uint32_t> neg;
        std::vector<std::uint32_t> pow_p_mod;  // p^k mod (q-1)
    };

    explicit Field(std::shared_ptr<const tables> t) : t_(std::move(t)) {}

    std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        std::uint32_t r = 0, scale = 1;
        for (std::uint32_t i = 0; i < t_->m; ++i) {
            r += ((a % t_->p + b % t_->p) % t_->p) * scale;
            a /= t_->p;
            b /= t_->p;
            scale *= t_->p;
        }
        return r;
    }

    static std::uint32_t pack(const detail::poly_t& c, std::uint32_t p, std::uint32_t m)
    {
        std::uint32_t v = 0;
        for (std::size_t i = m; i-- > 0;) v = v * p + (i < c.size() ? c[i] : 0);
        return v;
    }

    static detail::poly_t unpack(std::uint32_t v, std::uint32_t p, std::uint32_t m)
    {
        detail::poly_t c(m);
        for (auto& x : c) {
            x = v % p;
            v /= p;
        }
        return c;
    }

    static std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, const tables& t)
    {
        const auto ca = unpack(a, t.p, t.m), cb = unpack(b, t.p, t.m);
        detail::poly_t prod(2 * t.m, 0);
        for (std::uint32_t i = 0; i < t.m; ++i)
            for (std::uint32_t j = 0; j < t.m; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % t.p);
        return pack(detail::poly_mod(prod, t.poly, t.p), t.p, t.m);
    }

    static std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e, const tables& t)
    {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a, t);
            a = slow_mul(a, a, t);
            e >>= 1;
        }
        return r;
    }

    static std::shared_ptr<const tables> build(std::uint32_t p, std::uint32_t m, detail::poly_t poly, std::uint32_t q)
    {
        auto t = std::make_shared<tables>();
        t->p = p;
        t->m = m;
        t->q = q;
        t->poly = std::move(poly);
        const std::uint32_t order = q - 1;

        // Try t = x first: walking its powers needs only a shift and a reduction.
        const std::uint32_t t_res = m >= 2 ? p : (p - t->poly[0]) % p;
        std::vector<std::uint32_t> seq;
        seq.reserve(order);
        if (t_res != 0) {
            std::uint32_t cur = 1;
            do {
                seq.push_back(cur);
                cur = slow_mul(cur, t_res, *t);
            } while (cur != 1 && seq.size() <= order);
        }
        if (seq.size() == order) {
            t->primitive = true;
            t->gen = t_res;
        } else {
            const auto factors = detail::prime_factors(order);
            std::uint32_t g = 0;
            for (std::uint32_t cand = 1; cand < q; ++cand) {
                bool ok = true;
                for (auto f : factors)
                    if (slow_pow(cand, order / f, *t) == 1) {
                        ok = false;
                        break;
                    }
                if (ok && (order == 1 || cand != 1)) {
                    g = cand;
                    break;
                }
            }
            if (order == 1) g = 1;
            t->gen = g;
            seq.clear();
            std::uint32_t cur = 1;
            for (std::uint32_t i = 0; i < order; ++i) {
                seq.push_back(cur);
                cur = slow_mul(cur, g, *t);
            }
        }
        t->exp.resize(2 * std::size_t(order));
        t->log.assign(q, 0);
        for (std::uint32_t i = 0; i < order; ++i) {
            t->exp[i] = t->exp[i + order] = seq[i];
            t->log[seq[i]] = i;
        }

        t->neg.resize(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            auto c = unpack(a, p, m);
            for (auto& x : c) x = (p - x) % p;
            t->neg[a] = pack(c, p, m);
        }
        if (p != 2 && q <= 1024) {
            t->add.resize(std::size_t(q) * q);
            for (std::uint32_t a = 0; a < q; ++a)
                for (std::uint32_t b = 0; b < q; ++b) {
                    auto ca = unpack(a, p, m);
                    const auto cb = unpack(b, p, m);
                    for (std::uint32_t i = 0; i < m; ++i) ca[i] = (ca[i] + cb[i]) % p;
                    t->add[std::size_t(a) * q + b] = pack(ca, p, m);
                }
        }
        t->pow_p_mod.resize(m);
        std::uint64_t pk = 1;
        for (std::uint32_t k = 0; k < m; ++k) {
            t->pow_p_mod[k] = static_cast<std::uint32_t>(order == 0 ? 0 : pk % order);
            pk = pk * p % (order == 0 ? 1 : order);
        }
        return t;
    }

    FieldElem parse_unsigned(const std::string& s) const
    {
        if (s.front() == '[') {
            if (s.back() != ']') throw error(errc::parse_error, "unterminated coefficient list: " + s);
            std::vector<std::uint32_t> c;
            std::string body = s.substr(1, s.size() - 2);
            std::stringstream ss(body);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (tok.empty()) throw error(errc::parse_error, "empty coefficient in " + s);
                try {
                    std::size_t used = 0;
                    long long v = std::stoll(tok, &used);
                    if (used != tok.size()) throw std::invalid_argument(tok);
                    c.push_back(from_int(v).v);
                } catch (const std::logic_error&) {
                    throw error(errc::parse_error, "bad coefficient '" + tok + "'");
                }
            }
            return from_coeffs(c);
        }
        if (std::isdigit(static_cast<unsigned char>(s.front()))) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                return from_int(v);
            } catch (const std::logic_error&) {
                throw error(errc::parse_error, "bad field element '" + s + "'");
            }
        }
        std::string name = s, expo;
        if (auto pos = s.find('^'); pos != std::string::npos) {
            name = s.substr(0, pos);
            expo = s.substr(pos + 1);
        }
        if (name != "t" && name != "w" && name != "tau")
            throw error(errc::parse_error, "unknown field element '" + s + "'");
        long long e = 1;
        if (!expo.empty()) {
            try {
                std::size_t used = 0;
                e = std::stoll(expo, &used);
                if (used != expo.size()) throw std::invalid_argument(expo);
            } catch (const std::logic_error&) {
                throw error(errc::parse_error, "bad exponent in '" + s + "'");
            }
        } else if (s.find('^') != std::string::npos) {
            throw error(errc::parse_error, "missing exponent in '" + s + "'");
        }
        return pow(t(), e);
    }

    std::shared_ptr<const tables> t_;
};

}  // namespace skewring
