#pragma once

// Verification sweeps over parameter grids. Each sweep is a list of
// independent tasks; Execution::Parallel distributes them with OpenMP,
// Execution::Serial runs the same task bodies in order and is the reference.
// Output is indexed by task, so both paths produce identical reports.

#include "exdiv/oracle.hpp"

#include <cstdint>
#include <vector>

namespace exdiv::sweeps {

enum class Execution { Serial, Parallel };

struct RingSweepParams {
    int max_rank = 6;
    std::int64_t max_abs_degree = 10;
    int samples = 1000;
    std::uint64_t seed = oracle::kDefaultSeed;
    /// Numerators are drawn from [-num_bound, num_bound], denominators from [1, den_bound].
    std::int64_t num_bound = 20;
    std::int64_t den_bound = 12;
};

/// top_power vs brute-force oracle vs ring reducer, per (n, d, convention).
std::vector<oracle::CheckLine> ring_sweep(const RingSweepParams& p, Execution exec = Execution::Parallel);

struct SympowSweepParams {
    int max_rank = 4;
    int max_m = 6;
    std::int64_t max_abs_degree = 5;
};

/// sym_power vs enumeration oracle vs rank/degree formulas, per (rank, m),
/// over every sorted degree list in [-max_abs_degree, max_abs_degree].
std::vector<oracle::CheckLine> sympow_sweep(const SympowSweepParams& p, Execution exec = Execution::Parallel);

struct ConeSweepParams {
    int max_rank = 4;
    std::int64_t max_abs_degree = 5;
    int max_m = 5;
    oracle::GridSpec grid{};
};

/// Per rank: pairing positivity of Kähler classes on multisection bounds,
/// Kähler cone inside forward cone, boundary classes pair to zero with [C1].
std::vector<oracle::CheckLine> cone_sweep(const ConeSweepParams& p, Execution exec = Execution::Parallel);

struct InvarianceSweepParams {
    int samples = 1000;
    std::uint64_t seed = oracle::kDefaultSeed;
};

/// Ratio invariance under scaling, convention conversion and twisting.
std::vector<oracle::CheckLine> invariance_sweep(const InvarianceSweepParams& p, Execution exec = Execution::Parallel);

struct CertificateSweepParams {
    std::int64_t min_alpha = -6;
    std::int64_t max_alpha = 6;
    std::vector<int> ranks{2, 3, 4};
    std::vector<int> genera{0, 1, 2};
    /// Ratios probed: bound + k / steps_per_unit for k = 1 .. steps.
    int steps = 12;
    int steps_per_unit = 4;
};

/// Per (alpha, n, g): matching bundle degree, class construction above the
/// bound and failure at it, membership, restriction ratio, certificate validity.
std::vector<oracle::CheckLine> certificate_sweep(const CertificateSweepParams& p, Execution exec = Execution::Parallel);

/// All lines passed.
bool all_pass(const std::vector<oracle::CheckLine>& lines);

/// Enumerates sorted degree lists of length r with entries in [-bound, bound].
std::vector<std::vector<std::int64_t>> sorted_degree_lists(int r, std::int64_t bound);

}  // namespace exdiv::sweeps
