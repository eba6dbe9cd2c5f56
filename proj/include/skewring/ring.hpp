#pragma once

// The twisted skew group ring R = K[G, Theta, alpha].
//
// As a left K-space R has basis {g-bar : g in G}; multiplication is
//   (a_g g-bar)(b_h h-bar) = a_g Theta(g)(b_h) alpha(g,h) (gh)-bar.

#include <cstdint>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "skewring/action.hpp"
#include "skewring/error.hpp"
#include "skewring/gf.hpp"
#include "skewring/group.hpp"

namespace skewring {

class RingCtx;
using RingCtxPtr = std::shared_ptr<const RingCtx>;

namespace detail {

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull)
{
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace detail

/// An immutable (K, G, Theta, alpha) tuple. Construction validates Theta as a
/// homomorphism and alpha as a normalized, Theta-stabilized 2-cocycle.
class RingCtx : public std::enable_shared_from_this<RingCtx> {
    struct token {};

public:
    RingCtx(token, Field k, Group g, Theta th, Cocycle a)
        : field_(std::move(k)), group_(std::move(g)), theta_(std::move(th)), alpha_(std::move(a))
    {
    }

    /// Throws invalid_theta or invalid_cocycle (with the first failure) on bad input.
    static RingCtxPtr make(Field k, Group g, Theta th, Cocycle a)
    {
        if (th.degree() != k.m() && !(th.is_trivial()))
            throw error(errc::invalid_theta, "theta was built for a different extension degree");
        if (auto rep = th.validate(g); !rep.ok()) throw error(errc::invalid_theta, rep.failures.front());
        if (auto rep = validate_cocycle(a, th, g, k); !rep.ok()) throw error(errc::invalid_cocycle, rep.failures.front());
        auto ctx = std::make_shared<RingCtx>(token{}, std::move(k), std::move(g), std::move(th), std::move(a));
        ctx->fingerprint_ = detail::fnv1a(ctx->canonical());
        ctx->involutive_ = ctx->alpha_.is_involutive(ctx->field_);
        return ctx;
    }

    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] const Group& group() const noexcept { return group_; }
    [[nodiscard]] const Theta& theta() const noexcept { return theta_; }
    [[nodiscard]] const Cocycle& alpha() const noexcept { return alpha_; }
    [[nodiscard]] std::uint32_t n() const noexcept { return group_.order(); }
    [[nodiscard]] bool alpha_involutive() const noexcept { return involutive_; }
    [[nodiscard]] std::uint64_t fingerprint() const noexcept { return fingerprint_; }

    /// Theta(g)(x)
    [[nodiscard]] FieldElem act(std::uint32_t g, FieldElem x) const noexcept { return theta_.apply(field_, g, x); }

    /// K[G, Theta, alpha^-1]; the same object when alpha = alpha^-1.
    [[nodiscard]] RingCtxPtr inverse_context() const
    {
        if (involutive_) return shared_from_this();
        std::call_once(inverse_once_, [&] { inverse_ = make(field_, group_, theta_, alpha_.inverse(field_)); });
        return inverse_;
    }

    /// Sorted-key text form used for fingerprints: field, group table, theta, alpha.
    [[nodiscard]] std::string canonical() const
    {
        std::ostringstream os;
        os << "alpha=";
        for (std::uint32_t i = 0; i < n(); ++i)
            for (std::uint32_t j = 0; j < n(); ++j) os << field_.render(alpha_(i, j)) << (j + 1 < n() ? "," : ";");
        os << "\nfield=" << field_.describe() << "\ngroup=";
        for (auto v : group_.flat_table()) os << v << ',';
        os << "\ntheta=";
        for (auto e : theta_.exps()) os << e << ',';
        return os.str();
    }

    [[nodiscard]] bool same_as(const RingCtx& o) const noexcept
    {
        return this == &o || (fingerprint_ == o.fingerprint_ && field_ == o.field_ && group_ == o.group_ &&
                              theta_.exps() == o.theta_.exps() && alpha_ == o.alpha_);
    }

private:
    Field field_;
    Group group_;
    Theta theta_;
    Cocycle alpha_;
    std::uint64_t fingerprint_ = 0;
    bool involutive_ = false;
    mutable std::once_flag inverse_once_;
    mutable RingCtxPtr inverse_;
};

/// An element sum a_g g-bar of a fixed context, stored densely in enumeration order.
class RingElem {
public:
    explicit RingElem(RingCtxPtr ctx) : ctx_(std::move(ctx)), c_(ctx_->n(), Field::zero()) {}
    RingElem(RingCtxPtr ctx, std::vector<FieldElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs))
    {
        if (c_.size() != ctx_->n()) throw error(errc::length_mismatch, "coefficient vector length differs from |G|");
    }

    static RingElem basis(RingCtxPtr ctx, std::uint32_t g, FieldElem coeff = Field::one())
    {
        RingElem r(std::move(ctx));
        r.c_.at(g) = coeff;
        return r;
    }
    static RingElem one(RingCtxPtr ctx) { return basis(std::move(ctx), 0); }

    [[nodiscard]] const RingCtxPtr& ctx() const noexcept { return ctx_; }
    [[nodiscard]] const RingCtx& context() const noexcept { return *ctx_; }
    [[nodiscard]] const std::vector<FieldElem>& coeffs() const noexcept { return c_; }
    [[nodiscard]] FieldElem operator[](std::uint32_t g) const noexcept { return c_[g]; }
    [[nodiscard]] std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(c_.size()); }

    [[nodiscard]] std::uint32_t weight() const noexcept
    {
        return static_cast<std::uint32_t>(std::count_if(c_.begin(), c_.end(), [](auto x) { return x.v != 0; }));
    }
    [[nodiscard]] std::vector<std::uint32_t> support() const
    {
        std::vector<std::uint32_t> s;
        for (std::uint32_t i = 0; i < c_.size(); ++i)
            if (c_[i].v) s.push_back(i);
        return s;
    }
    [[nodiscard]] bool is_zero() const noexcept { return weight() == 0; }

    friend RingElem operator+(const RingElem& a, const RingElem& b)
    {
        check_same(a, b);
        const auto& k = a.ctx_->field();
        RingElem r(a.ctx_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = k.add(a.c_[i], b.c_[i]);
        return r;
    }
    friend RingElem operator-(const RingElem& a, const RingElem& b)
    {
        check_same(a, b);
        const auto& k = a.ctx_->field();
        RingElem r(a.ctx_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = k.sub(a.c_[i], b.c_[i]);
        return r;
    }
    friend RingElem operator-(const RingElem& a)
    {
        RingElem r(a.ctx_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.ctx_->field().neg(a.c_[i]);
        return r;
    }

    /// Product in R; throws context_mismatch for elements of different rings.
    friend RingElem operator*(const RingElem& a, const RingElem& b)
    {
        check_same(a, b);
        const RingCtx& ctx = *a.ctx_;
        const auto& k = ctx.field();
        const auto& g = ctx.group();
        const auto& al = ctx.alpha();
        RingElem r(a.ctx_);
        const std::uint32_t n = ctx.n();
        std::vector<std::uint32_t> bsupp = b.support();
        for (std::uint32_t i = 0; i < n; ++i) {
            if (a.c_[i].v == 0) continue;
            for (auto j : bsupp) {
                const auto term = k.mul(k.mul(a.c_[i], ctx.act(i, b.c_[j])), al(i, j));
                auto& dst = r.c_[g.mul(i, j)];
                dst = k.add(dst, term);
            }
        }
        return r;
    }

    /// Left scalar multiple k a = (k 1-bar) a.
    friend RingElem operator*(FieldElem s, const RingElem& a)
    {
        RingElem r(a.ctx_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.ctx_->field().mul(s, a.c_[i]);
        return r;
    }

    friend bool operator==(const RingElem& a, const RingElem& b)
    {
        return a.ctx_->same_as(*b.ctx_) && a.c_ == b.c_;
    }

private:
    static void check_same(const RingElem& a, const RingElem& b)
    {
        if (!a.ctx_->same_as(*b.ctx_)) throw error(errc::context_mismatch, "elements belong to different rings");
    }

    RingCtxPtr ctx_;
    std::vector<FieldElem> c_;
};

/// a-hat = sum Theta(g^-1)(a_g) alpha(g,g^-1) (g^-1)-bar, an element of K[G,Theta,alpha^-1].
inline RingElem adjoint(const RingElem& a)
{
    const RingCtx& ctx = a.context();
    const auto& k = ctx.field();
    const auto& g = ctx.group();
    auto target = ctx.inverse_context();
    std::vector<FieldElem> c(ctx.n(), Field::zero());
    for (std::uint32_t i = 0; i < ctx.n(); ++i) {
        if (a[i].v == 0) continue;
        const auto gi = g.inv(i);
        c[gi] = k.mul(ctx.act(gi, a[i]), ctx.alpha()(i, gi));
    }
    return RingElem(std::move(target), std::move(c));
}

/// Coefficientwise power a^(qq); qq must be a power of the characteristic.
inline RingElem power_q(const RingElem& a, std::uint64_t qq)
{
    const auto& k = a.context().field();
    std::int64_t e = 0;
    std::uint64_t x = qq;
    while (x > 1 && x % k.p() == 0) {
        x /= k.p();
        ++e;
    }
    if (x != 1 || qq == 0) throw error(errc::parse_error, "exponent must be a power of the characteristic");
    std::vector<FieldElem> c(a.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) c[i] = k.frobenius(a[i], e);
    return RingElem(a.ctx(), std::move(c));
}

/// The two-sided inverse of g-bar: alpha(g,g^-1)^-1 (g^-1)-bar.
inline RingElem basis_inverse(const RingCtxPtr& ctx, std::uint32_t g)
{
    const auto gi = ctx->group().inv(g);
    return RingElem::basis(ctx, gi, ctx->field().inv(ctx->alpha()(g, gi)));
}

/// A checked map a_g g-bar -> a_g kappa(g) delta(g)-bar between two rings over the same
/// field. Construction verifies that delta is an automorphism with Theta = Theta' delta
/// (condition a) and that alpha(g,h) = kappa(g) Theta'(delta g)(kappa(h)) kappa(gh)^-1
/// alpha'(delta g, delta h) (condition b); those make the map a weight-preserving ring
/// isomorphism.
class RingIso {
public:
    RingIso(RingCtxPtr source, RingCtxPtr target, std::vector<std::uint32_t> delta, std::vector<FieldElem> kappa)
        : src_(std::move(source)), dst_(std::move(target)), delta_(std::move(delta)), kappa_(std::move(kappa))
    {
        const auto& k = src_->field();
        if (!(k == dst_->field())) throw error(errc::context_mismatch, "rings over different fields");
        const auto& g = src_->group();
        const auto& h = dst_->group();
        const std::uint32_t n = g.order();
        if (h.order() != n || delta_.size() != n || kappa_.size() != n)
            throw error(errc::condition_a_violated, "delta must be a bijection between groups of equal order");
        std::vector<bool> seen(n, false);
        for (auto d : delta_) {
            if (d >= n || seen[d]) throw error(errc::condition_a_violated, "delta is not a bijection");
            seen[d] = true;
        }
        for (std::uint32_t x = 0; x < n; ++x) {
            if (src_->theta()[x] != dst_->theta()[delta_[x]])
                throw error(errc::condition_a_violated, "Theta differs from Theta' o delta at " + g.label(x));
            for (std::uint32_t y = 0; y < n; ++y)
                if (delta_[g.mul(x, y)] != h.mul(delta_[x], delta_[y]))
                    throw error(errc::condition_a_violated, "delta is not a homomorphism");
        }
        if (kappa_[0] != Field::one()) throw error(errc::condition_b_violated, "kappa(1) must be 1");
        for (std::uint32_t x = 0; x < n; ++x) {
            if (kappa_[x].v == 0) throw error(errc::condition_b_violated, "kappa takes the value 0");
            for (std::uint32_t y = 0; y < n; ++y) {
                const auto rhs = k.mul(k.mul(k.mul(kappa_[x], dst_->act(delta_[x], kappa_[y])), k.inv(kappa_[g.mul(x, y)])),
                                       dst_->alpha()(delta_[x], delta_[y]));
                if (rhs != src_->alpha()(x, y))
                    throw error(errc::condition_b_violated,
                                "cocycle relation fails at (" + g.label(x) + "," + g.label(y) + ")");
            }
        }
    }

    [[nodiscard]] RingElem operator()(const RingElem& a) const
    {
        if (!a.context().same_as(*src_)) throw error(errc::context_mismatch, "element is not in the source ring");
        const auto& k = src_->field();
        std::vector<FieldElem> c(a.size(), Field::zero());
        for (std::uint32_t i = 0; i < a.size(); ++i) c[delta_[i]] = k.mul(a[i], kappa_[i]);
        return RingElem(dst_, std::move(c));
    }

    [[nodiscard]] const RingCtxPtr& source() const noexcept { return src_; }
    [[nodiscard]] const RingCtxPtr& target() const noexcept { return dst_; }

private:
    RingCtxPtr src_, dst_;
    std::vector<std::uint32_t> delta_;
    std::vector<FieldElem> kappa_;
};

struct ConstacyclicReduction {
    FieldElem lambda;
    std::vector<FieldElem> kappa;
    RingCtxPtr target;  // K[C_n, Theta, alpha_lambda]
};

/// For R = K[C_n, Theta, alpha]: lambda = prod_i alpha(g^i, g) and kappa with
/// R ~ K[C_n, Theta, alpha_lambda] via g-bar -> kappa(g) g-bar. kappa is built by
/// kappa(g^(i+1)) = kappa(g^i) alpha_lambda(g^i, g) alpha(g^i, g)^-1 and then checked
/// exhaustively through RingIso.
inline ConstacyclicReduction constacyclic_reduce(const RingCtxPtr& ctx)
{
    const auto& g = ctx->group();
    const auto& k = ctx->field();
    if (!g.is_canonical_cyclic()) throw error(errc::not_cyclic, "group is not cyclic(n) in canonical order");
    const std::uint32_t n = g.order();
    FieldElem lambda = Field::one();
    for (std::uint32_t i = 0; i < n; ++i) lambda = k.mul(lambda, ctx->alpha()(i, 1 % n));
    if (n == 1) lambda = Field::one();
    auto target = RingCtx::make(k, g, ctx->theta(), Cocycle::constacyclic(g, lambda));
    std::vector<FieldElem> kappa(n, Field::one());
    for (std::uint32_t i = 1; i < n; ++i) {
        const auto prev = i - 1;
        kappa[i] = k.mul(k.mul(kappa[prev], target->alpha()(prev, 1)), k.inv(ctx->alpha()(prev, 1)));
    }
    try {
        RingIso iso(ctx, target, [&] {
            std::vector<std::uint32_t> id(n);
            std::iota(id.begin(), id.end(), 0);
            return id;
        }(), kappa);
    } catch (const error& e) {
        throw error(errc::verification_failed, std::string("constacyclic reduction check failed: ") + e.what());
    }
    return {lambda, std::move(kappa), std::move(target)};
}

/// "coeff*label + coeff*label ..." with labels from the group enumeration; "0" for zero.
inline std::string render(const RingElem& a)
{
    const auto& k = a.context().field();
    const auto& g = a.context().group();
    std::string out;
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0) continue;
        if (!out.empty()) out += " + ";
        out += k.render(a[i]) + "*" + g.label(i);
    }
    return out.empty() ? "0" : out;
}

/// Positional form: n field elements separated by commas.
inline std::string render_csv(const RingElem& a)
{
    std::string out;
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += a.context().field().render(a[i]);
    }
    return out;
}

namespace detail {

inline std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

/// Splits on sep at bracket depth zero.
inline std::vector<std::string> split_top(std::string_view s, char sep)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

/// Parses the sum form written by render(). A term may also be a bare label (coefficient 1)
/// or a bare coefficient (multiple of 1-bar); repeated labels accumulate.
inline RingElem parse_elem(const RingCtxPtr& ctx, std::string_view text)
{
    const auto& k = ctx->field();
    const auto& g = ctx->group();
    RingElem r(ctx);
    std::vector<FieldElem> c(ctx->n(), Field::zero());
    const std::string body = detail::trim(text);
    if (body.empty()) throw error(errc::parse_error, "empty ring element");
    if (body == "0") return r;
    for (const auto& raw : detail::split_top(body, '+')) {
        const std::string term = detail::trim(raw);
        if (term.empty()) throw error(errc::parse_error, "empty term in '" + std::string(text) + "'");
        FieldElem coeff = Field::one();
        std::int64_t idx = -1;
        if (auto parts = detail::split_top(term, '*'); parts.size() == 2) {
            coeff = k.parse(detail::trim(parts[0]));
            idx = g.find(detail::trim(parts[1]));
            if (idx < 0) throw error(errc::parse_error, "unknown group element '" + detail::trim(parts[1]) + "'");
        } else if (parts.size() == 1) {
            idx = g.find(term);
            if (idx < 0) {
                coeff = k.parse(term);
                idx = 0;
            }
        } else {
            throw error(errc::parse_error, "malformed term '" + term + "'");
        }
        c[static_cast<std::size_t>(idx)] = k.add(c[static_cast<std::size_t>(idx)], coeff);
    }
    return RingElem(ctx, std::move(c));
}

inline RingElem parse_elem_csv(const RingCtxPtr& ctx, std::string_view text)
{
    const auto parts = detail::split_top(detail::trim(text), ',');
    if (parts.size() != ctx->n())
        throw error(errc::parse_error, "expected " + std::to_string(ctx->n()) + " comma-separated entries");
    std::vector<FieldElem> c;
    for (const auto& p : parts) c.push_back(ctx->field().parse(detail::trim(p)));
    return RingElem(ctx, std::move(c));
}

}  // namespace skewring
