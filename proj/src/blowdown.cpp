#include "exdiv/blowdown.hpp"

#include <algorithm>

namespace exdiv {

namespace {

constexpr const char* kDimensionSixNote =
    "dimension 6: a weak matching triple is a matching triple";
constexpr const char* kDeformationNote =
    "open: whether the integral deformation step can be dropped is not decided";

Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }

BundleContext divisor_context(SurfaceGenus g, int n, std::int64_t alpha) {
    return BundleContext(n, -alpha, Convention::Sub, g);
}

}  // namespace

const char* to_string(Ruling r) noexcept { return r == Ruling::First ? "first" : "second"; }

ExceptionalDivisorData ExceptionalDivisorData::point(int n) {
    if (n < 1) throw DivisorDataError("fiber rank must be >= 1");
    ExceptionalDivisorData d;
    d.base_ = PointBase{};
    d.n_ = n;
    return d;
}

ExceptionalDivisorData ExceptionalDivisorData::surface(SurfaceGenus g, int n, std::int64_t alpha,
                                                       std::optional<std::pair<Rational, Rational>> omega,
                                                       std::optional<RuledAreas> areas) {
    if (n < 1) throw DivisorDataError("fiber rank must be >= 1");
    ExceptionalDivisorData d;
    d.base_ = SurfaceBase{g};
    d.n_ = n;
    d.alpha_ = alpha;
    const auto ctx = divisor_context(g, n, alpha);

    if (d.is_double_ruling_case()) {
        if (!areas) throw DivisorDataError("S2 x S2 with alpha = 2 needs the areas of both rulings");
        if (areas->first <= 0 || areas->second <= 0) throw DivisorDataError("ruling areas must be positive");
        const Rational expected = 2 * areas->second / areas->first;
        if (omega) {
            DivisorClass given{omega->first, omega->second, ctx};
            if (!in_forward_cone(given)) throw DivisorDataError("restricted class is outside the forward cone");
            if (ratio(given).value != expected)
                throw DivisorDataError("restricted class ratio " + to_string(ratio(given).value) +
                                       " disagrees with ruling areas (expected " + to_string(expected) + ")");
            d.omega_ = given;
        } else {
            // alpha + 2 Y / X = 2 y / x with (X, Y) = (x, y - x)
            d.omega_ = DivisorClass{areas->first, areas->second - areas->first, ctx};
        }
        d.areas_ = areas;
        return d;
    }

    if (areas) throw DivisorDataError("ruling areas apply only to S2 x S2 with alpha = 2");
    if (!omega) throw DivisorDataError("restricted symplectic class is required");
    DivisorClass u{omega->first, omega->second, ctx};
    if (!in_forward_cone(u)) throw DivisorDataError("restricted class is outside the forward cone");
    d.omega_ = std::move(u);
    return d;
}

SurfaceGenus ExceptionalDivisorData::genus() const {
    if (const auto* s = std::get_if<SurfaceBase>(&base_)) return s->genus;
    throw std::logic_error("divisor over a point has no base genus");
}

const DivisorClass& ExceptionalDivisorData::omega_class() const {
    if (!omega_) throw std::logic_error("divisor over a point has no fibred class");
    return *omega_;
}

bool ExceptionalDivisorData::is_double_ruling_case() const noexcept {
    const auto* s = std::get_if<SurfaceBase>(&base_);
    return s != nullptr && s->genus.is_sphere() && n_ == 2 && alpha_ == 2;
}

ExceptionalDivisorData ExceptionalDivisorData::swap_rulings() const {
    if (!areas_) throw std::logic_error("only S2 x S2 data has two rulings");
    return surface(genus(), n_, alpha_, std::nullopt, RuledAreas{areas_->second, areas_->first});
}

std::int64_t alpha_from_blowup_normal(std::int64_t deg_normal_sigma) { return -deg_normal_sigma; }
std::int64_t blowdown_normal_degree(std::int64_t alpha) { return -alpha; }

Rational admissibility_bound(SurfaceGenus g, int n, std::int64_t alpha) {
    if (!g.is_sphere()) return from_int(alpha);
    return from_int(std::max(alpha, residue(alpha, n)));
}

Rational divisor_ratio(const ExceptionalDivisorData& d) { return forward_ratio(d.omega_class()); }

bool is_admissible(const ExceptionalDivisorData& d) {
    if (d.over_point()) throw std::invalid_argument("admissibility is defined for divisors over a surface");
    return divisor_ratio(d) > admissibility_bound(d.genus(), d.n(), d.alpha());
}

MatchingTripleCertificate build_matching_triple(const ExceptionalDivisorData& d) {
    if (!is_admissible(d))
        throw NotAdmissibleError("ratio " + to_string(divisor_ratio(d)) + " does not exceed the bound " +
                                 to_string(admissibility_bound(d.genus(), d.n(), d.alpha())));
    const auto g = d.genus();
    const auto rr = restricted_ratio(d.alpha(), d.n(), g);
    MatchingTripleCertificate c{
        rr.achieving_bundle,
        {"P_s(V + C)", "P_s(V)", "P_s(C)"},
        kahler_class_for_ratio(d.alpha(), d.n(), g, divisor_ratio(d)),
        rr.value,
        rr.s1_invariant,
        true,
        std::nullopt,
        {},
    };
    if (d.n() == 2) c.notes.emplace_back(kDimensionSixNote);
    c.notes.emplace_back(kDeformationNote);
    return c;
}

CertificateCheck validate_certificate(const MatchingTripleCertificate& c, const ExceptionalDivisorData& d) {
    CertificateCheck out;
    if (d.over_point()) {
        out.reasons.emplace_back("divisor over a point carries no certificate");
        return out;
    }
    if (c.bundle.degree() != d.alpha()) out.reasons.emplace_back(reason::kDegreeMismatch);
    if (c.bundle.rank() != d.n()) out.reasons.emplace_back(reason::kRankMismatch);

    const auto target = extend_by_trivial(c.bundle);
    if (!(c.kahler_class.ctx == kahler_context(target))) {
        out.reasons.emplace_back(reason::kContextMismatch);
    } else {
        const auto restricted = restrict_to_subbundle(c.kahler_class, c.bundle);
        if (restricted.x == 0 || ratio(restricted).value != divisor_ratio(d))
            out.reasons.emplace_back(reason::kRatioMismatch);
        if (!kahler_membership(c.kahler_class, target).member) out.reasons.emplace_back(reason::kNotKahler);
    }
    if (!c.s1_invariant) out.reasons.emplace_back(reason::kNoS1);
    out.valid = out.reasons.empty();
    return out;
}

const char* verdict_name(const BlowdownVerdict& v) noexcept {
    switch (v.index()) {
        case 0: return "AlwaysBlowdown";
        case 1: return "BlowdownUpToDeformation";
        case 2: return "NotAdmissible";
        default: return "Undetermined";
    }
}

BlowdownVerdict blowdown_verdict_dim6(const ExceptionalDivisorData& d) {
    if (d.over_point()) return AlwaysBlowdown{};
    if (d.n() != 2) throw std::invalid_argument("six-dimensional verdict needs a P^1-bundle (fiber rank 2)");

    if (d.is_double_ruling_case()) {
        const auto& areas = *d.ruled_areas();
        if (areas.first == areas.second)
            return Undetermined{"ρ = 2 for both rulings; the blow-down criterion needs ρ ≠ 2"};
        // Blow down along the fibers of smaller area; that ruling has ratio > 2.
        const Ruling chosen = areas.first < areas.second ? Ruling::First : Ruling::Second;
        const auto data = chosen == Ruling::First ? d : d.swap_rulings();
        auto cert = build_matching_triple(data);
        cert.chosen_ruling = chosen;
        return BlowdownUpToDeformation{std::move(cert)};
    }

    if (is_admissible(d)) return BlowdownUpToDeformation{build_matching_triple(d)};

    const auto rho = divisor_ratio(d);
    const auto alpha = from_int(d.alpha());
    if (rho <= alpha) return NotAdmissible{"ρ = " + to_string(rho) + " does not exceed α = " + to_string(alpha)};
    return NotAdmissible{"ρ = " + to_string(rho) + " does not exceed t_n(α) = " +
                         to_string(admissibility_bound(d.genus(), d.n(), d.alpha())) +
                         ", below the symplectic minimum over the sphere"};
}

BlowdownVerdict blowdown_verdict(const ExceptionalDivisorData& d) {
    if (d.over_point() || d.n() == 2) return blowdown_verdict_dim6(d);
    if (is_admissible(d)) return BlowdownUpToDeformation{build_matching_triple(d)};
    return NotAdmissible{"ρ = " + to_string(divisor_ratio(d)) + " does not exceed the bound " +
                         to_string(admissibility_bound(d.genus(), d.n(), d.alpha()))};
}

}  // namespace exdiv
