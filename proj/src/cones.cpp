#include "exdiv/cones.hpp"

#include <algorithm>
#include <numeric>

namespace exdiv {

namespace {

Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }

const BundleSpec* as_bundle(const KahlerTarget& t) { return std::get_if<BundleSpec>(&t); }

}  // namespace

const char* to_string(Exactness e) noexcept { return e == Exactness::Exact ? "Exact" : "SufficientOnly"; }

std::int64_t target_rank(const KahlerTarget& t) {
    if (const auto* b = as_bundle(t)) return b->rank();
    return std::get<SemistablePlusLine>(t).rank + 1;
}

std::int64_t target_degree(const KahlerTarget& t) {
    if (const auto* b = as_bundle(t)) return b->degree();
    const auto& s = std::get<SemistablePlusLine>(t);
    return checked_add(s.degree, s.line_degree);
}

SurfaceGenus target_genus(const KahlerTarget& t) {
    if (const auto* b = as_bundle(t)) return b->base();
    return std::get<SemistablePlusLine>(t).genus;
}

BundleContext kahler_context(const KahlerTarget& t) {
    return BundleContext(static_cast<int>(target_rank(t)), target_degree(t), Convention::Quotient, target_genus(t));
}

ConeDescription curve_cone(const BundleSpec& b) {
    const BundleContext ctx(static_cast<int>(b.rank()), b.degree(), Convention::Quotient, b.base());
    if (!b.is_decomposable() && !b.base().is_sphere())
        return {{line_class(ctx)}, Exactness::Exact, true};
    const BundleSpec split = split_form(b);
    const auto a1 = split.degrees().front();
    ConeDescription out{{line_class(ctx), section_class(ctx, a1)}, Exactness::Exact, is_semistable(split)};
    return out;
}

Membership kahler_membership(const DivisorClass& u, const KahlerTarget& target) {
    if (u.ctx.convention != Convention::Quotient)
        throw ContextMismatch("Kähler membership expects a quotient-convention class");
    if (!(u.ctx == kahler_context(target)))
        throw ContextMismatch("class context does not match the bundle (rank, degree, genus)");

    if (const auto* b = as_bundle(target)) {
        if (!b->is_decomposable() && !b->base().is_sphere()) return {in_forward_cone(u), Exactness::Exact};
        const auto a1 = split_form(*b).degrees().front();
        return {u.x > 0 && from_int(a1) * u.x + u.y > 0, Exactness::Exact};
    }

    const auto& s = std::get<SemistablePlusLine>(target);
    // mu(L) >= mu(V)  <=>  line_degree * rank >= degree
    if (checked_mul(s.line_degree, s.rank) < s.degree)
        throw std::invalid_argument("V + L half-plane needs mu(L) >= mu(V)");
    // m-sections have <xi, Z> >= m mu(V); positivity on those is y/x > -mu(V).
    const Rational mu = make_rational(s.degree, s.rank);
    return {u.x > 0 && mu * u.x + u.y > 0, Exactness::SufficientOnly};
}

Rational kahler_cone_ratio(const BundleSpec& b) {
    if (!b.is_decomposable() && !b.base().is_sphere()) return 0;
    const auto split = split_form(b);
    const auto& degs = split.degrees();
    std::int64_t sum = 0;
    for (auto a : degs) sum = checked_add(sum, a - degs.front());
    return from_int(sum);
}

Rational min_symplectic_ratio(const BundleContext& ctx) {
    if (!ctx.genus.is_sphere()) return 0;
    return from_int(topological_type(ctx));
}

std::int64_t multisection_degree_bound(const BundleSpec& b, int m) {
    if (m < 1) throw std::invalid_argument("multisection degree must be >= 1");
    return checked_mul(m, b.degrees().front());
}

BundleSpec matching_bundle(std::int64_t alpha, int n, SurfaceGenus g) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    if (alpha < 0 && !g.is_sphere()) return BundleSpec::semistable(n, alpha, g);
    // alpha = q n + t with 0 <= t < n: O(q)^(n-t) + O(q+1)^t. For alpha >= 0, q = p - 1.
    const auto [q, t] = euclid_div(alpha, n);
    std::vector<std::int64_t> degs(static_cast<std::size_t>(n), q);
    std::fill(degs.end() - t, degs.end(), q + 1);
    return BundleSpec::decomposable(std::move(degs), g);
}

RestrictedRatioResult restricted_ratio(std::int64_t alpha, int n, SurfaceGenus g) {
    Rational value = g.is_sphere() ? from_int(std::max(residue(alpha, n), alpha)) : from_int(std::max<std::int64_t>(0, alpha));
    return {std::move(value), matching_bundle(alpha, n, g), true, true};
}

KahlerTarget extend_by_trivial(const BundleSpec& v) {
    if (v.is_decomposable()) {
        auto degs = v.degrees();
        degs.push_back(0);
        return BundleSpec::decomposable(std::move(degs), v.base());
    }
    if (v.base().is_sphere()) return extend_by_trivial(split_form(v));
    return SemistablePlusLine{v.rank(), v.degree(), 0, v.base()};
}

DivisorClass kahler_class_for_ratio(std::int64_t alpha, int n, SurfaceGenus g, const Rational& rho0) {
    const auto bound = restricted_ratio(alpha, n, g);
    if (rho0 <= bound.value)
        throw NoSuchClass("no Kähler class restricts to ratio " + to_string(rho0) +
                          "; the restricted ratio infimum is " + to_string(bound.value));
    const auto target = extend_by_trivial(bound.achieving_bundle);
    const Rational den(rho0.get_den());
    // alpha + n y / x = rho0
    DivisorClass u{Rational(n) * den, (rho0 - from_int(alpha)) * den, kahler_context(target)};
    return u;
}

DivisorClass restrict_to_subbundle(const DivisorClass& u_on_total, const BundleSpec& v) {
    BundleContext ctx(static_cast<int>(v.rank()), v.degree(), Convention::Quotient, v.base());
    if (u_on_total.ctx.n != ctx.n + 1 || u_on_total.ctx.d != ctx.d)
        throw ContextMismatch("class does not live on P(V + O)");
    return {u_on_total.x, u_on_total.y, ctx};
}

}  // namespace exdiv
