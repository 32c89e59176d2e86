#include "exdiv/cohomology.hpp"

#include <stdexcept>
#include <string>

namespace exdiv {

namespace {

void require_same(const BundleContext& a, const BundleContext& b, const char* op) {
    if (!(a == b)) throw ContextMismatch(std::string(op) + ": classes live on different bundles");
}

}  // namespace

const char* to_string(Convention c) noexcept { return c == Convention::Quotient ? "quotient" : "sub"; }

BundleContext::BundleContext(int rank, std::int64_t degree, Convention conv, SurfaceGenus g)
    : n(rank), d(degree), convention(conv), genus(g) {
    if (rank < 1) throw std::invalid_argument("bundle rank must be >= 1");
}

RingElement RingElement::one(const BundleContext& ctx) { return monomial(ctx, {0, 0}); }
RingElement RingElement::hyperplane(const BundleContext& ctx) { return monomial(ctx, {1, 0}); }
RingElement RingElement::fiber(const BundleContext& ctx) { return monomial(ctx, {0, 1}); }

RingElement RingElement::from_class(const DivisorClass& u) {
    RingElement r(u.ctx);
    r.accumulate(1, 0, u.x);
    r.accumulate(0, 1, u.y);
    return r;
}

RingElement RingElement::monomial(const BundleContext& ctx, Monomial mono, const Rational& coeff) {
    if (mono.h_power < 0 || mono.f_power < 0) throw std::invalid_argument("negative exponent");
    RingElement r(ctx);
    r.accumulate(mono.h_power, mono.f_power, coeff);
    return r;
}

Rational RingElement::coefficient(Monomial mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::accumulate(int h_power, int f_power, const Rational& coeff) {
    if (coeff == 0) return;
    if (f_power >= 2) return;
    Rational c = coeff;
    const int n = ctx_.n;
    while (h_power >= n) {
        // h^n F = 0, and h^(n+k) = e h^(n-1+k) F which dies for k >= 1.
        if (f_power == 1) return;
        h_power -= 1;
        f_power = 1;
        c *= Rational(static_cast<long>(ctx_.top_degree()));
        if (c == 0) return;
    }
    auto [it, inserted] = terms_.try_emplace(Monomial{h_power, f_power}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& other) {
    require_same(ctx_, other.ctx_, "ring addition");
    for (const auto& [mono, c] : other.terms_) accumulate(mono.h_power, mono.f_power, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    require_same(ctx_, other.ctx_, "ring subtraction");
    for (const auto& [mono, c] : other.terms_) accumulate(mono.h_power, mono.f_power, -c);
    return *this;
}

RingElement& RingElement::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) c *= scalar;
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same(a.ctx_, b.ctx_, "ring multiplication");
    RingElement out(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.accumulate(ma.h_power + mb.h_power, ma.f_power + mb.f_power, ca * cb);
    return out;
}

RingElement ring_multiply(const RingElement& p, const RingElement& q) { return p * q; }

RingElement ring_power(const RingElement& p, int k) {
    if (k < 0) throw std::invalid_argument("negative ring power");
    RingElement out = RingElement::one(p.ctx());
    for (int i = 0; i < k; ++i) out = out * p;
    return out;
}

Rational integrate(const RingElement& p) { return p.coefficient(Monomial{p.ctx().n - 1, 1}); }

Rational top_power(const DivisorClass& u) {
    const auto& ctx = u.ctx;
    const Rational e(static_cast<long>(ctx.top_degree()));
    return pow(u.x, static_cast<unsigned>(ctx.n - 1)) * (e * u.x + Rational(ctx.n) * u.y);
}

Rational pair(const DivisorClass& u, const CurveClass& z) {
    require_same(u.ctx, z.ctx, "pairing");
    return Rational(static_cast<long>(z.a)) * u.x + Rational(static_cast<long>(z.m)) * u.y;
}

CurveClass line_class(const BundleContext& ctx) { return {1, 0, ctx}; }
CurveClass eta_class(const BundleContext& ctx) { return {0, 1, ctx}; }

bool in_forward_cone(const DivisorClass& u) {
    const Rational e(static_cast<long>(u.ctx.top_degree()));
    return u.x > 0 && e * u.x + Rational(u.ctx.n) * u.y > 0;
}

RatioValue ratio(const DivisorClass& u) {
    if (u.x == 0) throw std::domain_error("ratio undefined when <u, l> = 0");
    const Rational e(static_cast<long>(u.ctx.top_degree()));
    Rational value = e + Rational(u.ctx.n) * u.y / u.x;
    return {value, in_forward_cone(u)};
}

Rational forward_ratio(const DivisorClass& u) {
    if (!in_forward_cone(u)) throw std::domain_error("class is outside the forward cone");
    return ratio(u).value;
}

std::int64_t topological_type(const BundleContext& ctx) { return residue(ctx.top_degree(), ctx.n); }

BundleContext convert_convention(const BundleContext& ctx) {
    BundleContext out = ctx;
    out.convention = ctx.convention == Convention::Quotient ? Convention::Sub : Convention::Quotient;
    out.d = -ctx.d;
    return out;
}

DivisorClass convert_convention(const DivisorClass& u) { return {u.x, u.y, convert_convention(u.ctx)}; }

DivisorClass twist_class(const DivisorClass& u, std::int64_t t) {
    if (u.ctx.convention != Convention::Quotient)
        throw std::invalid_argument("twist_class expects the quotient convention; convert first");
    BundleContext ctx = u.ctx;
    ctx.d = checked_add(ctx.d, checked_mul(ctx.n, t));
    const Rational shift(static_cast<long>(t));
    return {u.x, u.y - shift * u.x, ctx};
}

CurveClass section_class(const BundleContext& ctx, std::int64_t quotient_line_degree) {
    return {quotient_line_degree, 1, ctx};
}

}  // namespace exdiv
