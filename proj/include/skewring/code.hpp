#pragma once

// Linear codes, optionally attached to a ring context as left ideals.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewring/error.hpp"
#include "skewring/gf.hpp"
#include "skewring/linalg.hpp"
#include "skewring/ring.hpp"

namespace skewring {

namespace detail {

/// Coefficient vector of g-bar * v.
inline Vec left_basis_mul(const RingCtx& ctx, std::uint32_t g, const Vec& v)
{
    const auto& k = ctx.field();
    Vec out(v.size(), Field::zero());
    for (std::uint32_t h = 0; h < v.size(); ++h) {
        if (v[h].v == 0) continue;
        out[ctx.group().mul(g, h)] = k.mul(ctx.act(g, v[h]), ctx.alpha()(g, h));
    }
    return out;
}

}  // namespace detail

/// A k x n code with canonical RREF generator matrix. With a context attached the row
/// space is checked to be a left ideal at construction.
class Code {
public:
    /// Standalone code from arbitrary rows (rank may be deficient; zero rows are dropped).
    static Code from_rows(const Field& k, std::size_t n, std::vector<Vec> rows)
    {
        return Code(k, n, std::move(rows), nullptr);
    }

    /// Left ideal of ctx spanned as a K-space by rows. Throws not_left_ideal.
    static Code ideal_from_rows(RingCtxPtr ctx, std::vector<Vec> rows)
    {
        Code c(ctx->field(), ctx->n(), std::move(rows), ctx);
        if (auto bad = c.ideal_violation()) throw error(errc::not_left_ideal, *bad);
        return c;
    }

    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t k() const noexcept { return gen_.rows(); }
    [[nodiscard]] const Matrix& genmat() const noexcept { return gen_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    [[nodiscard]] const RingCtxPtr& ctx() const noexcept { return ctx_; }
    [[nodiscard]] bool has_ctx() const noexcept { return static_cast<bool>(ctx_); }

    [[nodiscard]] bool contains(const Vec& v) const
    {
        if (v.size() != n_) throw error(errc::length_mismatch, "vector length differs from code length");
        return is_zero(reduce(field_, gen_, pivots_, v));
    }

    /// First failing (row, g) of the left-ideal closure test, if any.
    [[nodiscard]] std::optional<std::string> ideal_violation() const
    {
        if (!ctx_) return std::nullopt;
        for (std::size_t i = 0; i < k(); ++i)
            for (std::uint32_t g = 0; g < ctx_->n(); ++g)
                if (!contains(detail::left_basis_mul(*ctx_, g, gen_.row(i))))
                    return "row " + std::to_string(i) + " times " + ctx_->group().label(g) + " leaves the code";
        return std::nullopt;
    }

    /// 64-bit FNV-1a of the rendered genmat; equal codes hash equally.
    [[nodiscard]] std::uint64_t genmat_hash() const
    {
        std::string s = std::to_string(n_) + ":" + std::to_string(k()) + ":";
        for (const auto& r : gen_.data()) {
            for (auto x : r) s += std::to_string(x.v) + ",";
            s += ";";
        }
        return detail::fnv1a(s);
    }

    friend bool operator==(const Code& a, const Code& b)
    {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.gen_ == b.gen_;
    }

private:
    Code(const Field& k, std::size_t n, std::vector<Vec> rows, RingCtxPtr ctx)
        : field_(k), n_(n), ctx_(std::move(ctx))
    {
        for (const auto& r : rows)
            if (r.size() != n) throw error(errc::length_mismatch, "generator row has wrong length");
        gen_ = Matrix(std::move(rows), n);
        pivots_ = rref(field_, gen_);
    }

    Field field_;
    std::size_t n_;
    Matrix gen_;
    std::vector<std::size_t> pivots_;
    RingCtxPtr ctx_;
};

/// Rc for all generators c: the K-span of every g-bar * c.
inline Code ideal_span(const std::vector<RingElem>& gens)
{
    if (gens.empty()) throw error(errc::zero_code, "no generators supplied");
    const auto& ctx = gens.front().ctx();
    std::vector<Vec> rows;
    for (const auto& c : gens) {
        if (!c.context().same_as(*ctx)) throw error(errc::context_mismatch, "generators belong to different rings");
        for (std::uint32_t g = 0; g < ctx->n(); ++g) rows.push_back(detail::left_basis_mul(*ctx, g, c.coeffs()));
    }
    return Code::ideal_from_rows(ctx, std::move(rows));
}

inline Code full_space(const RingCtxPtr& ctx) { return ideal_span({RingElem::one(ctx)}); }

// ---------------------------------------------------------------------------
// Minimum distance

enum class DistanceMethod { automatic, exhaustive, bz };

struct Distance {
    std::uint32_t d = 0;
    Vec witness;
    bool exact = true;  // false when a deadline stopped the search; d is then a lower bound
    DistanceMethod method = DistanceMethod::exhaustive;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

namespace detail {

inline std::uint32_t hamming(const Vec& v)
{
    std::uint32_t w = 0;
    for (auto x : v) w += x.v != 0;
    return w;
}

inline void axpy(const Field& k, Vec& y, FieldElem a, const Vec& x)
{
    if (a.v == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i].v) y[i] = k.add(y[i], k.mul(a, x[i]));
}

inline bool expired(const Deadline& dl) { return dl && std::chrono::steady_clock::now() > *dl; }

/// Calls visit(word) once per projective codeword (first nonzero message coordinate 1).
/// Stops early when visit returns false or the deadline passes; returns false in that case.
template <class Visit>
bool for_each_projective(const Field& k, const Matrix& g, const Deadline& dl, Visit&& visit)
{
    const std::size_t rows = g.rows();
    const std::uint32_t q = k.q();
    std::vector<FieldElem> step(q);
    for (std::uint32_t v = 0; v + 1 < q; ++v) step[v] = k.sub(FieldElem{v + 1}, FieldElem{v});
    step[q - 1] = k.sub(Field::zero(), FieldElem{q - 1});
    std::uint64_t tick = 0;
    for (std::size_t lead = 0; lead < rows; ++lead) {
        Vec word = g.row(lead);
        std::vector<std::uint32_t> digit(rows, 0);
        while (true) {
            if (!visit(word)) return false;
            if ((++tick & 0xfff) == 0 && expired(dl)) return false;
            bool done = true;
            for (std::size_t j = rows; j > lead + 1;) {
                --j;
                axpy(k, word, step[digit[j]], g.row(j));
                if (++digit[j] < q) {
                    done = false;
                    break;
                }
                digit[j] = 0;
            }
            if (done) break;
        }
    }
    return true;
}

}  // namespace detail

inline Distance min_distance_exhaustive(const Code& c, const Deadline& dl = std::nullopt)
{
    if (c.k() == 0) throw error(errc::zero_code, "the zero code has no minimum distance");
    Distance best;
    best.d = static_cast<std::uint32_t>(c.n()) + 1;
    best.method = DistanceMethod::exhaustive;
    const bool done = detail::for_each_projective(c.field(), c.genmat(), dl, [&](const Vec& w) {
        const auto wt = detail::hamming(w);
        if (wt < best.d) {
            best.d = wt;
            best.witness = w;
        }
        return best.d > 1;
    });
    if (!done && best.d > 1) {
        // Deadline: the only sound lower bound without further structure is 1.
        best.exact = false;
        best.d = 1;
    }
    return best;
}

/// Brouwer-Zimmermann: disjoint information sets found greedily; after all messages of
/// weight <= w have been tried on every generator matrix, any unseen codeword has weight
/// at least sum_j max(0, w + 1 - (k - r_j)), r_j being the rank on block j.
inline Distance min_distance_bz(const Code& c, const Deadline& dl = std::nullopt)
{
    if (c.k() == 0) throw error(errc::zero_code, "the zero code has no minimum distance");
    const Field& k = c.field();
    const std::size_t n = c.n();
    const std::size_t kk = c.k();

    struct Block {
        Matrix g;
        std::size_t rank;
    };
    std::vector<Block> blocks;
    std::vector<bool> used(n, false);
    while (true) {
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j]) order.push_back(j);
        const std::size_t navail = order.size();
        if (navail == 0) break;
        for (std::size_t j = 0; j < n; ++j)
            if (used[j]) order.push_back(j);
        Matrix m(kk, n);
        for (std::size_t i = 0; i < kk; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = c.genmat()(i, order[j]);
        const auto piv = rref(k, m);
        std::size_t r = 0;
        while (r < piv.size() && piv[r] < navail) ++r;
        if (r == 0) break;
        Matrix back(kk, n);
        for (std::size_t i = 0; i < kk; ++i)
            for (std::size_t j = 0; j < n; ++j) back(i, order[j]) = m(i, j);
        for (std::size_t i = 0; i < r; ++i) used[order[piv[i]]] = true;
        blocks.push_back({std::move(back), r});
    }

    Distance best;
    best.method = DistanceMethod::bz;
    best.d = static_cast<std::uint32_t>(n) + 1;
    std::vector<FieldElem> step(k.q() - 1);
    for (std::uint32_t t = 0; t + 1 < k.q(); ++t)
        step[t] = k.sub(k.exp(static_cast<std::int64_t>(t) + 1), k.exp(t));
    std::uint64_t tick = 0;
    std::uint32_t lower = 1;

    for (std::size_t w = 1; w <= kk; ++w) {
        for (const auto& b : blocks) {
            std::vector<std::size_t> comb(w);
            for (std::size_t i = 0; i < w; ++i) comb[i] = i;
            while (true) {
                Vec word(n, Field::zero());
                for (auto r : comb)
                    for (std::size_t j = 0; j < n; ++j) word[j] = k.add(word[j], b.g(r, j));
                std::vector<std::uint32_t> e(w, 0);
                while (true) {
                    const auto wt = detail::hamming(word);
                    if (wt < best.d) {
                        best.d = wt;
                        best.witness = word;
                    }
                    if ((++tick & 0xfff) == 0 && detail::expired(dl)) {
                        best.exact = false;
                        best.d = lower;
                        return best;
                    }
                    std::size_t i = w;
                    bool carried_out = true;
                    while (i > 1) {
                        --i;
                        detail::axpy(k, word, step[e[i]], b.g.row(comb[i]));
                        if (++e[i] < k.q() - 1) {
                            carried_out = false;
                            break;
                        }
                        e[i] = 0;
                    }
                    if (carried_out) break;
                }
                std::size_t i = w;
                while (i > 0 && comb[i - 1] == kk - w + i - 1) --i;
                if (i == 0) break;
                ++comb[i - 1];
                for (std::size_t j = i; j < w; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
        std::uint32_t lb = 0;
        for (const auto& b : blocks) {
            const std::int64_t part = static_cast<std::int64_t>(w) + 1 - static_cast<std::int64_t>(kk - b.rank);
            if (part > 0) lb += static_cast<std::uint32_t>(part);
        }
        lower = std::max(lower, lb);
        if (best.d <= lower) return best;
    }
    return best;  // every message has been enumerated
}

inline bool exhaustive_feasible(const Code& c, double limit = 4194304.0)
{
    return std::pow(static_cast<double>(c.field().q()), static_cast<double>(c.k())) <= limit;
}

/// Exact minimum distance and a witness word.
inline Distance min_distance(const Code& c, DistanceMethod m = DistanceMethod::automatic, const Deadline& dl = std::nullopt)
{
    if (m == DistanceMethod::automatic) m = exhaustive_feasible(c) ? DistanceMethod::exhaustive : DistanceMethod::bz;
    return m == DistanceMethod::exhaustive ? min_distance_exhaustive(c, dl) : min_distance_bz(c, dl);
}

inline std::string params(const Code& c, std::uint32_t d)
{
    return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "," + std::to_string(d) + "]_" +
           std::to_string(c.field().q());
}

inline bool is_mds(std::size_t n, std::size_t k, std::uint32_t d) { return d + k == n + 1; }

/// counts[i] = number of codewords of weight i.
using WeightEnumerator = std::vector<std::uint64_t>;

inline WeightEnumerator weight_enumerator(const Code& c)
{
    if (!exhaustive_feasible(c, 16777216.0)) throw error(errc::too_large, "q^k exceeds 2^24");
    WeightEnumerator counts(c.n() + 1, 0);
    counts[0] = 1;
    detail::for_each_projective(c.field(), c.genmat(), std::nullopt, [&](const Vec& w) {
        counts[detail::hamming(w)] += c.field().q() - 1;
        return true;
    });
    return counts;
}

struct BoundCheck {
    bool holds;
    std::int64_t slack;
};

/// |G| <= d(C) dim C.
inline BoundCheck bound_check(const Code& c, std::uint32_t d)
{
    const auto slack = static_cast<std::int64_t>(d) * static_cast<std::int64_t>(c.k()) - static_cast<std::int64_t>(c.n());
    return {slack >= 0, slack};
}

// ---------------------------------------------------------------------------
// Duality

enum class Form { euclidean, hermitian };

/// Entrywise x -> x^qq with qq a power of p.
inline Code frobenius_image(const Code& c, std::int64_t frob_exp)
{
    std::vector<Vec> rows = c.genmat().data();
    for (auto& r : rows)
        for (auto& x : r) x = c.field().frobenius(x, frob_exp);
    if (c.has_ctx()) return Code::ideal_from_rows(c.ctx(), std::move(rows));
    return Code::from_rows(c.field(), c.n(), std::move(rows));
}

namespace detail {

inline std::int64_t half_degree(const Field& k)
{
    if (!k.is_square()) throw error(errc::not_square_field, "Hermitian form needs |K| to be a square");
    return k.m() / 2;
}

inline RingCtxPtr dual_context(const Code& c)
{
    return c.has_ctx() ? c.ctx()->inverse_context() : nullptr;
}

inline Code make_dual_code(const Code& c, std::vector<Vec> rows, bool as_ideal = true)
{
    if (auto target = dual_context(c); target && as_ideal) return Code::ideal_from_rows(target, std::move(rows));
    return Code::from_rows(c.field(), c.n(), std::move(rows));
}

}  // namespace detail

/// Right annihilator {a : c a = 0 for all c in C} as a GF(p)-subspace of R = GF(p)^(n m).
struct AnnihilatorSpace {
    Field prime_field;
    std::size_t n = 0, m = 0;
    std::vector<Vec> basis;  // each of length n*m, coordinate h*m + j holds the t^j digit of a_h
    [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

inline AnnihilatorSpace ann_right(const Code& c)
{
    if (!c.has_ctx()) throw error(errc::context_mismatch, "annihilators need a ring context");
    const RingCtx& ctx = *c.ctx();
    const Field& k = ctx.field();
    const std::size_t n = ctx.n(), m = k.m();
    const Field fp = k.prime_subfield();
    // Column (h, j): image of t^j h-bar under a -> row * a, expanded over GF(p).
    Matrix sys(c.k() * n * m, n * m);
    for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<std::uint32_t> digits(m, 0);
            digits[j] = 1;
            const FieldElem tj = k.from_coeffs(digits);
            for (std::size_t i = 0; i < c.k(); ++i) {
                const Vec& r = c.genmat().row(i);
                for (std::uint32_t g = 0; g < n; ++g) {
                    if (r[g].v == 0) continue;
                    const auto val = k.mul(k.mul(r[g], ctx.act(g, tj)), ctx.alpha()(g, static_cast<std::uint32_t>(h)));
                    const auto gh = ctx.group().mul(g, static_cast<std::uint32_t>(h));
                    const auto dg = k.coeffs(val);
                    for (std::size_t l = 0; l < m; ++l) {
                        auto& cell = sys((i * n + gh) * m + l, h * m + j);
                        cell = fp.add(cell, FieldElem{dg[l]});
                    }
                }
            }
        }
    }
    AnnihilatorSpace out{fp, n, m, nullspace(fp, std::move(sys))};
    if (out.dim() != m * (n - c.k()))
        throw error(errc::verification_failed, "annihilator has prime-field dimension " + std::to_string(out.dim()) +
                                                   ", expected " + std::to_string(m * (n - c.k())));
    return out;
}

inline RingElem annihilator_element(const RingCtxPtr& ctx, const AnnihilatorSpace& a, const Vec& v)
{
    std::vector<FieldElem> coeffs(a.n);
    std::vector<std::uint32_t> digits(a.m);
    for (std::size_t h = 0; h < a.n; ++h) {
        for (std::size_t j = 0; j < a.m; ++j) digits[j] = v[h * a.m + j].v;
        coeffs[h] = ctx->field().from_coeffs(digits);
    }
    return RingElem(ctx, std::move(coeffs));
}

/// Dual through the annihilator: adjoint image of Ann_r(C) (Euclidean) or of Ann_r(C^(q0))
/// (Hermitian, needs alpha^q0 = alpha).
inline Code dual_via_annihilator(const Code& c, Form form = Form::euclidean)
{
    if (!c.has_ctx()) throw error(errc::context_mismatch, "annihilator route needs a ring context");
    const Code* src = &c;
    std::optional<Code> twisted;
    if (form == Form::hermitian) {
        const auto e = detail::half_degree(c.field());
        if (!c.ctx()->alpha().is_hermitian_fixed(c.field()))
            throw error(errc::hermitian_cocycle_condition, "alpha^q0 differs from alpha");
        twisted = frobenius_image(c, e);
        src = &*twisted;
    }
    const auto ann = ann_right(*src);
    std::vector<Vec> rows;
    for (const auto& v : ann.basis) rows.push_back(adjoint(annihilator_element(c.ctx(), ann, v)).coeffs());
    auto out = detail::make_dual_code(c, std::move(rows));
    if (out.k() != c.n() - c.k())
        throw error(errc::verification_failed, "adjoint image of the annihilator has the wrong dimension");
    return out;
}

/// C-perp under <a,b> = sum a_g b_g or the Hermitian <a,b>_h = sum a_g b_g^q0.
/// With a context and cross_check set, the annihilator route must agree.
inline Code dual(const Code& c, Form form = Form::euclidean, bool cross_check = true)
{
    const Field& k = c.field();
    std::vector<Vec> rows = nullspace(k, c.genmat());
    if (form == Form::hermitian) {
        const auto e = detail::half_degree(k);
        for (auto& r : rows)
            for (auto& x : r) x = k.frobenius(x, e);
    }
    const bool ideal = form == Form::euclidean || (c.has_ctx() && c.ctx()->alpha().is_hermitian_fixed(k));
    auto out = detail::make_dual_code(c, std::move(rows), ideal);
    if (cross_check && c.has_ctx() && (form == Form::euclidean || c.ctx()->alpha().is_hermitian_fixed(k))) {
        if (!(dual_via_annihilator(c, form) == out))
            throw error(errc::verification_failed, "annihilator dual disagrees with the nullspace dual");
    }
    return out;
}

/// C + C-perp = K^n (equivalently C meets its Euclidean dual trivially).
inline bool is_lcd(const Code& c, Form form = Form::euclidean)
{
    const auto d = dual(c, form, false);
    Matrix stacked(c.genmat().data(), c.n());
    for (const auto& r : d.genmat().data()) stacked.push_row(r);
    return rank(c.field(), std::move(stacked)) == c.n();
}

inline bool is_self_dual(const Code& c, Form form = Form::euclidean)
{
    return 2 * c.k() == c.n() && dual(c, form, false).genmat() == c.genmat();
}

// ---------------------------------------------------------------------------
// Idempotents

struct IdempotentFlags {
    bool idempotent = false;
    bool self_adjoint = false;
    bool lcd_euclidean = false;
    bool sd_euclidean = false;
    bool lcd_hermitian = false;
    bool sd_hermitian = false;
    bool hermitian_checked = false;

    [[nodiscard]] std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        if (idempotent) out.emplace_back("idempotent");
        if (self_adjoint) out.emplace_back("self_adjoint");
        if (lcd_euclidean) out.emplace_back("lcd_euclidean");
        if (sd_euclidean) out.emplace_back("sd_euclidean");
        if (lcd_hermitian) out.emplace_back("lcd_hermitian");
        if (sd_hermitian) out.emplace_back("sd_hermitian");
        return out;
    }
};

namespace detail {

/// e^2 = e = f gives LCD; e f = 0 and 1 - f = (1 - f) e gives self-dual. f is the
/// adjoint (Euclidean) or the adjoint of e^(q0) (Hermitian), read in the ring of e.
inline void certify_pair(const RingElem& e, const RingElem& f, bool idem, bool& lcd, bool& sd)
{
    const auto one = RingElem::one(e.ctx());
    lcd = idem && e == f;
    sd = idem && (e * f).is_zero() && (one - f) == (one - f) * e;
}

}  // namespace detail

/// Flags from the algebraic conditions, each raised flag cross-checked against the code
/// definitions; a disagreement throws verification_failed. Hermitian flags are computed
/// when |K| is a square and alpha^q0 = alpha.
inline IdempotentFlags idempotent_certify(const RingElem& e)
{
    const RingCtx& ctx = e.context();
    if (!ctx.alpha_involutive()) throw error(errc::cocycle_not_involutive, "adjoint conditions need alpha = alpha^-1");
    const Field& k = ctx.field();
    IdempotentFlags f;
    f.idempotent = (e * e) == e;
    const auto ehat = RingElem(e.ctx(), adjoint(e).coeffs());
    f.self_adjoint = e == ehat;
    detail::certify_pair(e, ehat, f.idempotent, f.lcd_euclidean, f.sd_euclidean);
    if (k.is_square() && ctx.alpha().is_hermitian_fixed(k)) {
        f.hermitian_checked = true;
        const auto h = RingElem(e.ctx(), adjoint(power_q(e, k.sqrt_order())).coeffs());
        detail::certify_pair(e, h, f.idempotent, f.lcd_hermitian, f.sd_hermitian);
    }
    if (f.lcd_euclidean || f.sd_euclidean || f.lcd_hermitian || f.sd_hermitian) {
        const auto c = ideal_span({e});
        auto require = [](bool ok, const char* what) {
            if (!ok) throw error(errc::verification_failed, std::string("algebraic flag disagrees with the code: ") + what);
        };
        if (f.lcd_euclidean) require(is_lcd(c, Form::euclidean), "lcd_euclidean");
        if (f.sd_euclidean) require(is_self_dual(c, Form::euclidean), "sd_euclidean");
        if (f.lcd_hermitian) require(is_lcd(c, Form::hermitian), "lcd_hermitian");
        if (f.sd_hermitian) require(is_self_dual(c, Form::hermitian), "sd_hermitian");
    }
    return f;
}

/// Averaged projector applied to 1-bar: e = |G|^-1 sum_g alpha(g,g^-1)^-1 g-bar rho(g^-1-bar),
/// rho being the projection onto C along the non-pivot coordinates. Verifies e^2 = e and Re = C.
inline RingElem maschke_idempotent(const Code& c)
{
    if (!c.has_ctx()) throw error(errc::context_mismatch, "idempotent extraction needs a ring context");
    const auto& ctxp = c.ctx();
    const RingCtx& ctx = *ctxp;
    const Field& k = ctx.field();
    const std::uint32_t n = ctx.n();
    if (n % k.p() == 0) throw error(errc::characteristic_divides_order, "char K divides |G|");
    auto rho = [&](const RingElem& v) {
        Vec out(n, Field::zero());
        for (std::size_t i = 0; i < c.k(); ++i) detail::axpy(k, out, v[static_cast<std::uint32_t>(c.pivots()[i])], c.genmat().row(i));
        return RingElem(ctxp, std::move(out));
    };
    RingElem sum(ctxp);
    for (std::uint32_t g = 0; g < n; ++g) {
        const auto gi = ctx.group().inv(g);
        const auto left = RingElem::basis(ctxp, g, k.inv(ctx.alpha()(g, gi)));
        sum = sum + left * rho(RingElem::basis(ctxp, gi));
    }
    const auto e = k.inv(k.from_int(n)) * sum;
    if (!(e * e == e)) throw error(errc::verification_failed, "extracted element is not idempotent");
    if (!(ideal_span({e}) == c)) throw error(errc::verification_failed, "extracted idempotent does not generate the code");
    return e;
}

/// |G|_p divides dim Re.
inline bool dickson_check(const RingElem& e)
{
    if (!(e * e == e)) throw error(errc::not_idempotent, "element is not idempotent");
    const auto dim = ideal_span({e}).k();
    return dim % e.context().group().p_part(e.context().field().p()) == 0;
}

}  // namespace skewring
