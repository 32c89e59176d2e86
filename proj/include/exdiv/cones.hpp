#pragma once

// Curve cones and Kähler cones of projectivized bundles over curves, and the
// restricted Kähler ratios of P(V + O) used to build matching triples.
//
// All classes here are in the quotient convention: u = x xi + y F on P(E)
// where E is the bundle in question, so the context must have rank(E) and
// deg(E).

#include "exdiv/bundles.hpp"
#include "exdiv/cohomology.hpp"
#include "exdiv/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace exdiv {

enum class Exactness { Exact, SufficientOnly };

const char* to_string(Exactness e) noexcept;

struct ConeDescription {
    /// Extremal rays of the curve cone (primitive integral classes).
    std::vector<CurveClass> rays;
    Exactness exactness = Exactness::Exact;
    /// Set when the Kähler cone coincides with the forward cone.
    bool kahler_is_forward_cone = false;
};

/// V + L with V semistable of rank r, degree d and L a line bundle with mu(L) >= mu(V).
struct SemistablePlusLine {
    std::int64_t rank = 1;
    std::int64_t degree = 0;
    std::int64_t line_degree = 0;
    SurfaceGenus genus{};
};

using KahlerTarget = std::variant<BundleSpec, SemistablePlusLine>;

/// The total space bundle E of a Kähler target.
std::int64_t target_rank(const KahlerTarget& t);
std::int64_t target_degree(const KahlerTarget& t);
SurfaceGenus target_genus(const KahlerTarget& t);

/// Quotient-convention context of P(E) for the target.
BundleContext kahler_context(const KahlerTarget& t);

struct Membership {
    bool member = false;
    Exactness exactness = Exactness::Exact;
};

/// Curve cone of P(b). Decomposable: rays {l, a1 l + eta}. SemiStable over
/// genus >= 1: ray {l}, Kähler cone = forward cone. Genus-0 SemiStable is split first.
ConeDescription curve_cone(const BundleSpec& b);

Membership kahler_membership(const DivisorClass& u, const KahlerTarget& target);

/// Infimum of ratios over the Kähler cone (not attained).
Rational kahler_cone_ratio(const BundleSpec& b);

/// Infimum of ratios of symplectic classes on a linear projective bundle of this type.
Rational min_symplectic_ratio(const BundleContext& ctx);

/// Lower bound m * a1 on <xi, [Z]> over m-sections Z of P(b).
std::int64_t multisection_degree_bound(const BundleSpec& b, int m);

struct RestrictedRatioResult {
    Rational value;
    BundleSpec achieving_bundle;
    bool infimum_not_attained = true;
    bool s1_invariant = true;
};

/// Quotient-convention model bundle V with deg V = alpha used for the V + O triple.
BundleSpec matching_bundle(std::int64_t alpha, int n, SurfaceGenus g);

/// Infimum of restricted ratios on P(V) of Kähler classes on P(V + O).
RestrictedRatioResult restricted_ratio(std::int64_t alpha, int n, SurfaceGenus g);

/// The Kähler target P(V + O) for a model bundle V.
KahlerTarget extend_by_trivial(const BundleSpec& v);

class NoSuchClass : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A Kähler class on P(V + O), V = matching_bundle(alpha, n, g), whose
/// restriction to P(V) has ratio exactly rho0. Canonical choice:
/// x = n * den(rho0), y = (rho0 - alpha) * den(rho0).
/// Throws NoSuchClass when rho0 <= restricted_ratio(alpha, n, g).value.
DivisorClass kahler_class_for_ratio(std::int64_t alpha, int n, SurfaceGenus g, const Rational& rho0);

/// Same coordinates, viewed on P(V) inside P(V + O).
DivisorClass restrict_to_subbundle(const DivisorClass& u_on_total, const BundleSpec& v);

}  // namespace exdiv
