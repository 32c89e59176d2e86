#pragma once

// Brute-force oracles. Nothing here calls the ring reducer or the symmetric
// power routine of the main modules; they are independent routes used to
// check the closed formulas.

#include "exdiv/bundles.hpp"
#include "exdiv/cohomology.hpp"
#include "exdiv/cones.hpp"
#include "exdiv/rational.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace exdiv::oracle {

class GuardExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxEnumRank = 6;
inline constexpr int kMaxEnumPower = 8;
inline constexpr std::uint64_t kDefaultSeed = 20241017;

/// Integral of (x h + y F)^k, by binomial expansion. Reduces the h-power
/// against h^n = e h^(n-1) F before multiplying in F. Requires 0 <= k <= n.
Rational brute_ring_power(const DivisorClass& u, int k);

/// All degrees sum k_i a_i over exponent vectors with sum k_i = m, found by
/// scanning [0, m]^r. Sorted. Guard: r <= 6, m <= 8.
std::vector<std::int64_t> enumerate_sym_quotients(const std::vector<std::int64_t>& degrees, int m);

/// One report line: "CHECK <name> <digest> PASS|FAIL <detail>".
struct CheckLine {
    std::string name;
    std::string digest;
    bool pass = true;
    std::string detail;

    [[nodiscard]] std::string format() const;
    friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

/// FNV-1a 64-bit of the canonical input string, 16 lowercase hex digits.
std::string input_digest(std::string_view canonical_input);

/// Rational grid {(i/den, j/den) : x_min <= i/den <= x_max, y_min <= j/den <= y_max}.
struct GridSpec {
    std::int64_t x_min = 1;
    std::int64_t x_max = 5;
    std::int64_t y_min = -5;
    std::int64_t y_max = 5;
    std::int64_t den = 1;

    [[nodiscard]] std::string canonical() const;
};

using MembershipPredicate = std::function<bool(const DivisorClass&, const BundleSpec&)>;

/// The production predicate, wrapped for sample_cone_check.
bool strict_membership(const DivisorClass& u, const BundleSpec& b);

struct ConeViolation {
    DivisorClass u;
    CurveClass curve;
    Rational pairing;
};

struct ConeReport {
    std::size_t classes_tested = 0;
    std::size_t pairings_checked = 0;
    std::vector<ConeViolation> violations;
    CheckLine line;
};

/// For every grid class accepted by `membership`, checks <u, a l + m eta> > 0
/// over every degree a of the m-th symmetric power (oracle enumeration), m <= max_m.
ConeReport sample_cone_check(const BundleSpec& b, const GridSpec& grid, int max_m = 5,
                             const MembershipPredicate& membership = strict_membership);

}  // namespace exdiv::oracle
