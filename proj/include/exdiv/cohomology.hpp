#pragma once

// Even cohomology of a linear projective bundle over a curve.
//
// The ring is generated by the hyperplane class h (xi in the quotient
// convention, tau in the sub convention) and the fiber class F, subject to
//
//     F^2 = 0,    h^n = e * h^(n-1) F,    integral of h^(n-1) F = 1,
//
// where e = d (quotient) or e = -d (sub). Homology in degree 2 has the basis
// (l, eta) dual to (h, F): <h,l> = 1, <F,l> = 0, <h,eta> = 0, <F,eta> = 1.

#include "exdiv/bundles.hpp"
#include "exdiv/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace exdiv {

enum class Convention { Quotient, Sub };

const char* to_string(Convention c) noexcept;

class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// P^{n-1}-bundle modeled on a rank-n bundle of degree d over a genus-g surface.
struct BundleContext {
    int n = 1;
    std::int64_t d = 0;
    Convention convention = Convention::Quotient;
    SurfaceGenus genus{};

    BundleContext() = default;
    BundleContext(int rank, std::int64_t degree, Convention conv, SurfaceGenus g = SurfaceGenus{});

    /// The e in h^n = e * h^(n-1) F.
    [[nodiscard]] std::int64_t top_degree() const noexcept { return convention == Convention::Quotient ? d : -d; }

    friend bool operator==(const BundleContext&, const BundleContext&) = default;
};

/// u = x h + y F.
struct DivisorClass {
    Rational x;
    Rational y;
    BundleContext ctx;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.x == b.x && a.y == b.y && a.ctx == b.ctx;
    }
};

/// a l + m eta.
struct CurveClass {
    std::int64_t a = 0;
    std::int64_t m = 0;
    BundleContext ctx;

    friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// Monomial h^a F^b with b in {0, 1}.
struct Monomial {
    int h_power = 0;
    int f_power = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// A fully reduced element of the even cohomology ring.
class RingElement {
public:
    explicit RingElement(BundleContext ctx) : ctx_(std::move(ctx)) {}

    static RingElement one(const BundleContext& ctx);
    static RingElement hyperplane(const BundleContext& ctx);
    static RingElement fiber(const BundleContext& ctx);
    static RingElement from_class(const DivisorClass& u);
    static RingElement monomial(const BundleContext& ctx, Monomial mono, const Rational& coeff = 1);

    [[nodiscard]] const BundleContext& ctx() const noexcept { return ctx_; }
    [[nodiscard]] const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    [[nodiscard]] Rational coefficient(Monomial mono) const;
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const Rational& scalar);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

private:
    // Adds coeff * h^a F^b, applying F^2 = 0 then h^n = e h^(n-1) F.
    void accumulate(int h_power, int f_power, const Rational& coeff);

    BundleContext ctx_;
    std::map<Monomial, Rational> terms_;
};

RingElement ring_multiply(const RingElement& p, const RingElement& q);
RingElement ring_power(const RingElement& p, int k);

/// Coefficient of h^(n-1) F in reduced form.
Rational integrate(const RingElement& p);

/// u^n integrated over the bundle, closed form x^(n-1) (e x + n y).
Rational top_power(const DivisorClass& u);

/// <u, z> = a x + m y.
Rational pair(const DivisorClass& u, const CurveClass& z);

CurveClass line_class(const BundleContext& ctx);
CurveClass eta_class(const BundleContext& ctx);

/// x > 0 and e x + n y > 0.
bool in_forward_cone(const DivisorClass& u);

struct RatioValue {
    Rational value;
    bool in_forward_cone = false;
};

/// e + n y / x, flagged when u is outside the forward cone. Throws if x = 0.
RatioValue ratio(const DivisorClass& u);

/// ratio(u), throwing std::domain_error when u is outside the forward cone.
Rational forward_ratio(const DivisorClass& u);

/// t_n of the projectivization: residue of e modulo n.
std::int64_t topological_type(const BundleContext& ctx);

/// P(E) = P_s(E*): same coordinates, convention flipped, d negated.
DivisorClass convert_convention(const DivisorClass& u);
BundleContext convert_convention(const BundleContext& ctx);

/// Expresses u on P(E tensor L), deg L = t. Quotient convention only.
DivisorClass twist_class(const DivisorClass& u, std::int64_t t);

/// Class of the section cut out by a quotient line bundle of the given degree.
CurveClass section_class(const BundleContext& ctx, std::int64_t quotient_line_degree);

}  // namespace exdiv
