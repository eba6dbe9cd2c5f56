#pragma once

// Finite groups as Cayley tables with a fixed element enumeration.
//
// The enumeration of each family is part of the public contract: it fixes the
// coordinate order of every generator matrix built over the group.
//
//   cyclic(n)            1, g, g2, ..., g(n-1)
//   dihedral(2n)         1, x, ..., x(n-1), y, xy, ..., x(n-1)y          (blocked)
//   dihedral(2n), inter. 1, b, a, ab, a2, a2b, ..., a(n-1)b               (interleaved)
//   semidirect(m,k,r)    b^j a^i in lexicographic (j,i) order, b a b^-1 = a^r
//   alt4                 (), (12)(34), (132), (143), (234), (124), (134), (142),
//                        (123), (13)(24), (14)(23), (243)
//   product(A,B)         (a,b) with the index of a major

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "skewring/error.hpp"

namespace skewring {

using GroupReport = Report;

namespace detail {

inline std::string power_label(const std::string& gen, std::uint32_t e)
{
    if (e == 0) return "";
    if (e == 1) return gen;
    return gen + std::to_string(e);
}

}  // namespace detail

class Group {
public:
    static constexpr std::uint32_t max_explicit_order = 256;

    Group() = default;

    static Group cyclic(std::uint32_t n)
    {
        if (n == 0) throw error(errc::not_a_group, "order must be positive");
        std::vector<std::uint32_t> t(std::size_t(n) * n);
        std::vector<std::string> labels(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            labels[i] = i == 0 ? "1" : detail::power_label("g", i);
            for (std::uint32_t j = 0; j < n; ++j) t[std::size_t(i) * n + j] = (i + j) % n;
        }
        return Group(n, std::move(t), std::move(labels), "cyclic(" + std::to_string(n) + ")");
    }

    /// Dihedral group of the given order (2n) with x^n = y^2 = 1, y x y^-1 = x^-1.
    /// Blocked order uses labels x, y; interleaved order uses a, b as in a^i b^j.
    static Group dihedral(std::uint32_t order, bool interleaved = false)
    {
        if (order < 2 || order % 2) throw error(errc::not_a_group, "dihedral order must be even and >= 2");
        const std::uint32_t n = order / 2;
        auto index = [&](std::uint32_t i, std::uint32_t j) { return interleaved ? 2 * i + j : j * n + i; };
        std::vector<std::uint32_t> t(std::size_t(order) * order);
        std::vector<std::string> labels(order);
        const std::string r = interleaved ? "a" : "x", s = interleaved ? "b" : "y";
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < 2; ++j) {
                std::string l = detail::power_label(r, i) + (j ? s : "");
                labels[index(i, j)] = l.empty() ? "1" : l;
            }
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < 2; ++j)
                for (std::uint32_t k = 0; k < n; ++k)
                    for (std::uint32_t l = 0; l < 2; ++l) {
                        // x^i y^j x^k y^l = x^(i + (-1)^j k) y^(j+l)
                        const std::uint32_t e = j ? (i + n - k) % n : (i + k) % n;
                        t[std::size_t(index(i, j)) * order + index(k, l)] = index(e, (j + l) % 2);
                    }
        return Group(order, std::move(t), std::move(labels),
                     "dihedral(" + std::to_string(order) + (interleaved ? ",interleaved)" : ")"));
    }

    /// C_m x| C_k with generators a (order m), b (order k) and b a b^-1 = a^r.
    static Group semidirect(std::uint32_t m, std::uint32_t k, std::uint32_t r)
    {
        if (m == 0 || k == 0) throw error(errc::invalid_action, "factor orders must be positive");
        r %= m;
        if (std::gcd(r, m) != 1 && m > 1) throw error(errc::invalid_action, "gcd(r, m) must be 1");
        std::uint64_t rk = 1;
        for (std::uint32_t i = 0; i < k; ++i) rk = rk * r % m;
        if (m > 1 && rk != 1) throw error(errc::invalid_action, "r^k must be 1 modulo m");
        // b^-1 a b = a^s with s = r^-1 mod m
        std::uint32_t s = 1 % std::max<std::uint32_t>(m, 1);
        for (std::uint32_t c = 1; c < m; ++c)
            if (std::uint64_t(c) * r % m == 1) s = c;
        std::vector<std::uint32_t> spow(k);
        spow[0] = 1 % m;
        for (std::uint32_t l = 1; l < k; ++l) spow[l] = static_cast<std::uint32_t>(std::uint64_t(spow[l - 1]) * s % m);
        const std::uint32_t n = m * k;
        std::vector<std::uint32_t> t(std::size_t(n) * n);
        std::vector<std::string> labels(n);
        for (std::uint32_t j = 0; j < k; ++j)
            for (std::uint32_t i = 0; i < m; ++i) {
                std::string l = detail::power_label("b", j) + detail::power_label("a", i);
                labels[j * m + i] = l.empty() ? "1" : l;
            }
        for (std::uint32_t j = 0; j < k; ++j)
            for (std::uint32_t i = 0; i < m; ++i)
                for (std::uint32_t l = 0; l < k; ++l)
                    for (std::uint32_t c = 0; c < m; ++c) {
                        // b^j a^i b^l a^c = b^(j+l) a^(i s^l + c)
                        const std::uint32_t e = static_cast<std::uint32_t>((std::uint64_t(i) * spow[l] + c) % m);
                        t[std::size_t(j * m + i) * n + (l * m + c)] = ((j + l) % k) * m + e;
                    }
        return Group(n, std::move(t), std::move(labels),
                     "semidirect(" + std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(r) + ")");
    }

    /// Alternating group on {1,2,3,4}. Products compose left to right: i^(st) = (i^s)^t.
    static Group alt4()
    {
        using perm = std::array<std::uint32_t, 4>;
        // images of 1..4 (0-based) for the enumeration documented above
        static const std::array<std::pair<const char*, perm>, 12> elems{{
            {"()", {0, 1, 2, 3}},
            {"(12)(34)", {1, 0, 3, 2}},
            {"(132)", {2, 0, 1, 3}},
            {"(143)", {3, 1, 0, 2}},
            {"(234)", {0, 2, 3, 1}},
            {"(124)", {1, 3, 2, 0}},
            {"(134)", {2, 1, 3, 0}},
            {"(142)", {3, 0, 2, 1}},
            {"(123)", {1, 2, 0, 3}},
            {"(13)(24)", {2, 3, 0, 1}},
            {"(14)(23)", {3, 2, 1, 0}},
            {"(243)", {0, 3, 1, 2}},
        }};
        std::map<perm, std::uint32_t> idx;
        std::vector<std::string> labels;
        for (std::uint32_t i = 0; i < 12; ++i) {
            idx[elems[i].second] = i;
            labels.emplace_back(elems[i].first);
        }
        std::vector<std::uint32_t> t(144);
        for (std::uint32_t i = 0; i < 12; ++i)
            for (std::uint32_t j = 0; j < 12; ++j) {
                perm c{};
                for (std::uint32_t x = 0; x < 4; ++x) c[x] = elems[j].second[elems[i].second[x]];
                t[i * 12 + j] = idx.at(c);
            }
        return Group(12, std::move(t), std::move(labels), "alt4");
    }

    static Group product(const Group& a, const Group& b)
    {
        const std::uint32_t n = a.order() * b.order();
        std::vector<std::uint32_t> t(std::size_t(n) * n);
        std::vector<std::string> labels(n);
        for (std::uint32_t i = 0; i < a.order(); ++i)
            for (std::uint32_t j = 0; j < b.order(); ++j) {
                labels[i * b.order() + j] = "(" + a.label(i) + "," + b.label(j) + ")";
                for (std::uint32_t k = 0; k < a.order(); ++k)
                    for (std::uint32_t l = 0; l < b.order(); ++l)
                        t[std::size_t(i * b.order() + j) * n + (k * b.order() + l)] =
                            a.mul(i, k) * b.order() + b.mul(j, l);
            }
        return Group(n, std::move(t), std::move(labels), "product(" + a.family() + "," + b.family() + ")");
    }

    /// A group given by its Cayley table (0-based indices, index 0 the identity).
    static Group explicit_table(const std::vector<std::vector<std::uint32_t>>& table,
                                std::vector<std::string> labels = {})
    {
        const auto report = check(table);
        if (!report.ok()) throw error(errc::not_a_group, report.failures.front());
        const auto n = static_cast<std::uint32_t>(table.size());
        if (n > max_explicit_order) throw error(errc::not_a_group, "explicit tables are capped at order 256");
        std::vector<std::uint32_t> t;
        t.reserve(std::size_t(n) * n);
        for (const auto& row : table) t.insert(t.end(), row.begin(), row.end());
        if (labels.empty()) {
            for (std::uint32_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "e" + std::to_string(i));
        } else if (labels.size() != n) {
            throw error(errc::not_a_group, "label count does not match order");
        }
        return Group(n, std::move(t), std::move(labels), "explicit");
    }

    /// Validates identity, Latin-square, inverse and associativity axioms. Associativity
    /// is exhaustive up to order 64 and sampled (10^5 triples, fixed seed) above.
    static GroupReport check(const std::vector<std::vector<std::uint32_t>>& table)
    {
        GroupReport rep;
        const std::size_t n = table.size();
        if (n == 0) {
            rep.failures.emplace_back("empty table");
            return rep;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (table[i].size() != n) {
                rep.failures.push_back("row " + std::to_string(i) + " has wrong length");
                return rep;
            }
            for (auto v : table[i])
                if (v >= n) {
                    rep.failures.push_back("entry out of range in row " + std::to_string(i));
                    return rep;
                }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (table[0][i] != i || table[i][0] != i) {
                rep.failures.push_back("index 0 is not an identity at " + std::to_string(i));
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<bool> row(n), col(n);
            for (std::size_t j = 0; j < n; ++j) {
                row[table[i][j]] = true;
                col[table[j][i]] = true;
            }
            if (std::find(row.begin(), row.end(), false) != row.end())
                rep.failures.push_back("row " + std::to_string(i) + " is not a permutation (Latin square)");
            if (std::find(col.begin(), col.end(), false) != col.end())
                rep.failures.push_back("column " + std::to_string(i) + " is not a permutation (Latin square)");
        }
        for (std::size_t i = 0; i < n; ++i) {
            bool found = false;
            for (std::size_t j = 0; j < n && !found; ++j) found = table[i][j] == 0 && table[j][i] == 0;
            if (!found) rep.failures.push_back("element " + std::to_string(i) + " has no two-sided inverse");
        }
        auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
            return table[table[a][b]][c] == table[a][table[b][c]];
        };
        if (n <= 64) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c)
                        if (!assoc(a, b, c)) {
                            rep.failures.push_back("associativity fails at (" + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c) + ")");
                            return rep;
                        }
        } else {
            std::mt19937_64 rng(0x5eed);
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            for (int s = 0; s < 100000; ++s) {
                const auto a = pick(rng), b = pick(rng), c = pick(rng);
                if (!assoc(a, b, c)) {
                    rep.failures.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                           "," + std::to_string(c) + ")");
                    return rep;
                }
            }
        }
        return rep;
    }

    [[nodiscard]] std::uint32_t order() const noexcept { return n_; }
    [[nodiscard]] static constexpr std::uint32_t identity() noexcept { return 0; }
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return table_[std::size_t(a) * n_ + b];
    }
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const noexcept { return inv_[a]; }
    [[nodiscard]] const std::string& label(std::uint32_t a) const { return labels_.at(a); }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] const std::string& family() const noexcept { return family_; }
    [[nodiscard]] const std::vector<std::uint32_t>& flat_table() const noexcept { return table_; }

    [[nodiscard]] std::vector<std::vector<std::uint32_t>> table() const
    {
        std::vector<std::vector<std::uint32_t>> t(n_, std::vector<std::uint32_t>(n_));
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j) t[i][j] = mul(i, j);
        return t;
    }

    /// Index of the element with the given label, or -1.
    [[nodiscard]] std::int64_t find(const std::string& label) const
    {
        for (std::uint32_t i = 0; i < n_; ++i)
            if (labels_[i] == label) return i;
        return -1;
    }

    [[nodiscard]] std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept
    {
        std::uint32_t r = 0;
        for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }

    [[nodiscard]] std::uint32_t element_order(std::uint32_t a) const noexcept
    {
        std::uint32_t k = 1, x = a;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

    [[nodiscard]] bool is_abelian() const noexcept
    {
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < i; ++j)
                if (mul(i, j) != mul(j, i)) return false;
        return true;
    }

    [[nodiscard]] std::uint32_t involution_count() const noexcept
    {
        std::uint32_t c = 0;
        for (std::uint32_t i = 1; i < n_; ++i) c += mul(i, i) == 0;
        return c;
    }

    /// Whether the table equals cyclic(n) under its canonical enumeration.
    [[nodiscard]] bool is_canonical_cyclic() const noexcept
    {
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j)
                if (mul(i, j) != (i + j) % n_) return false;
        return true;
    }

    /// Subgroup generated by the given elements, as a sorted index list.
    [[nodiscard]] std::vector<std::uint32_t> generated_subgroup(const std::vector<std::uint32_t>& gens) const
    {
        std::vector<bool> in(n_, false);
        std::vector<std::uint32_t> members{0};
        in[0] = true;
        for (std::size_t pos = 0; pos < members.size(); ++pos)
            for (auto g : gens) {
                const auto x = mul(members[pos], g);
                if (!in[x]) {
                    in[x] = true;
                    members.push_back(x);
                }
            }
        std::sort(members.begin(), members.end());
        return members;
    }

    /// Largest power of p dividing |G|.
    [[nodiscard]] std::uint32_t p_part(std::uint32_t p) const noexcept
    {
        std::uint32_t r = 1, n = n_;
        while (p > 1 && n % p == 0) {
            r *= p;
            n /= p;
        }
        return r;
    }

    friend bool operator==(const Group& a, const Group& b) noexcept { return a.table_ == b.table_; }

private:
    Group(std::uint32_t n, std::vector<std::uint32_t> table, std::vector<std::string> labels, std::string family)
        : n_(n), table_(std::move(table)), inv_(n), labels_(std::move(labels)), family_(std::move(family))
    {
        for (std::uint32_t i = 0; i < n_; ++i)
            for (std::uint32_t j = 0; j < n_; ++j)
                if (mul(i, j) == 0) {
                    inv_[i] = j;
                    break;
                }
    }

    std::uint32_t n_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::string> labels_;
    std::string family_;
};

}  // namespace skewring
