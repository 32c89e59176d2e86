#pragma once

// Admissibility, matching-triple certificates and blow-down verdicts for a
// codimension-2 divisor D fibred as a linear P^{n-1}-bundle.
//
// The restricted class [omega|_D] is given in the sub convention on the
// model bundle with d = -alpha, so its ratio is alpha + n y / x.

#include "exdiv/bundles.hpp"
#include "exdiv/cohomology.hpp"
#include "exdiv/cones.hpp"
#include "exdiv/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace exdiv {

struct PointBase {
    friend bool operator==(PointBase, PointBase) = default;
};
struct SurfaceBase {
    SurfaceGenus genus;
    friend bool operator==(SurfaceBase, SurfaceBase) = default;
};
using DivisorBase = std::variant<PointBase, SurfaceBase>;

/// Symplectic areas of the two rulings of S^2 x S^2.
struct RuledAreas {
    Rational first;
    Rational second;
};

enum class Ruling { First, Second };
const char* to_string(Ruling r) noexcept;

class DivisorDataError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input to the blow-down decision. Construct through the factories, which
/// enforce the invariants. The fiber normal degree <c1(N_D), l> = -1 is implied.
class ExceptionalDivisorData {
public:
    /// D = P^{n-1} over a point.
    static ExceptionalDivisorData point(int n = 3);

    /// D a P^{n-1}-bundle over a genus-g surface with [omega|_D] = omega (x, y).
    /// omega must lie in the forward cone. For (g = 0, n = 2, alpha = 2) either
    /// areas must be given; omega, when also given, must have ratio 2 y / x.
    static ExceptionalDivisorData surface(SurfaceGenus g, int n, std::int64_t alpha,
                                          std::optional<std::pair<Rational, Rational>> omega,
                                          std::optional<RuledAreas> areas = std::nullopt);

    [[nodiscard]] const DivisorBase& base() const noexcept { return base_; }
    [[nodiscard]] bool over_point() const noexcept { return std::holds_alternative<PointBase>(base_); }
    [[nodiscard]] SurfaceGenus genus() const;
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] std::int64_t alpha() const noexcept { return alpha_; }
    [[nodiscard]] const DivisorClass& omega_class() const;
    [[nodiscard]] const std::optional<RuledAreas>& ruled_areas() const noexcept { return areas_; }
    [[nodiscard]] bool is_double_ruling_case() const noexcept;
    /// <c1(N_D), l>, fixed by the tautological normal bundle condition.
    [[nodiscard]] static constexpr int fiber_normal_degree() noexcept { return -1; }

    /// The same divisor seen through its second ruling (areas swapped).
    [[nodiscard]] ExceptionalDivisorData swap_rulings() const;

private:
    ExceptionalDivisorData() = default;
    DivisorBase base_{PointBase{}};
    int n_ = 3;
    std::int64_t alpha_ = 0;
    std::optional<DivisorClass> omega_;
    std::optional<RuledAreas> areas_;
};

/// alpha = -deg(N_Sigma) for the exceptional divisor of a blow-up along Sigma.
std::int64_t alpha_from_blowup_normal(std::int64_t deg_normal_sigma);
/// deg(N_Sigma) of the blown-down surface for a given alpha.
std::int64_t blowdown_normal_degree(std::int64_t alpha);

/// Strict lower bound the ratio must exceed: alpha (g > 0), max{alpha, t_n(alpha)} (g = 0).
Rational admissibility_bound(SurfaceGenus g, int n, std::int64_t alpha);

/// Ratio of [omega|_D].
Rational divisor_ratio(const ExceptionalDivisorData& d);

bool is_admissible(const ExceptionalDivisorData& d);

struct TripleDescriptor {
    std::string total_space;   // K = P_s(V + C)
    std::string divisor;       // D' = P_s(V)
    std::string section;       // S = P_s(C)
};

struct MatchingTripleCertificate {
    BundleSpec bundle;               // V, quotient convention, deg V = alpha
    TripleDescriptor triple;
    DivisorClass kahler_class;       // on P(V + O)
    Rational restricted_ratio;       // infimum value for (alpha, n, g)
    bool s1_invariant = true;
    bool weak = true;
    std::optional<Ruling> chosen_ruling;
    std::vector<std::string> notes;
};

class NotAdmissibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Throws NotAdmissibleError unless is_admissible(d).
MatchingTripleCertificate build_matching_triple(const ExceptionalDivisorData& d);

struct CertificateCheck {
    bool valid = false;
    std::vector<std::string> reasons;
};

namespace reason {
inline constexpr const char* kDegreeMismatch = "normal degree mismatch";
inline constexpr const char* kRankMismatch = "rank mismatch";
inline constexpr const char* kRatioMismatch = "restricted ratio mismatch";
inline constexpr const char* kNotKahler = "class not in Kähler cone";
inline constexpr const char* kContextMismatch = "class context mismatch";
inline constexpr const char* kNoS1 = "S1-invariance flag not set";
}  // namespace reason

CertificateCheck validate_certificate(const MatchingTripleCertificate& c, const ExceptionalDivisorData& d);

struct AlwaysBlowdown {};
struct BlowdownUpToDeformation {
    MatchingTripleCertificate certificate;
};
struct NotAdmissible {
    std::string reason;
};
struct Undetermined {
    std::string reason;
};

using BlowdownVerdict = std::variant<AlwaysBlowdown, BlowdownUpToDeformation, NotAdmissible, Undetermined>;

const char* verdict_name(const BlowdownVerdict& v) noexcept;

/// Verdict for a six-dimensional ambient manifold (n = 2, or base = point).
BlowdownVerdict blowdown_verdict_dim6(const ExceptionalDivisorData& d);

/// Any fiber rank: the six-dimensional rules when n = 2, otherwise admissible
/// divisors get a certificate and the rest are NotAdmissible.
BlowdownVerdict blowdown_verdict(const ExceptionalDivisorData& d);

}  // namespace exdiv
