#pragma once

// Complex vector bundles over a closed oriented surface, tracked by their
// discrete invariants only: rank, degree and (when split) the degrees of the
// line summands.

#include "exdiv/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace exdiv {

/// Genus of the base surface.
class SurfaceGenus {
public:
    constexpr SurfaceGenus() = default;
    explicit SurfaceGenus(int g) : g_(g) {
        if (g < 0) throw std::invalid_argument("surface genus must be non-negative");
    }
    [[nodiscard]] constexpr int value() const noexcept { return g_; }
    [[nodiscard]] constexpr bool is_sphere() const noexcept { return g_ == 0; }
    friend constexpr bool operator==(SurfaceGenus, SurfaceGenus) = default;

private:
    int g_ = 0;
};

/// Direct sum of line bundles. Degrees are kept sorted ascending.
struct Decomposable {
    std::vector<std::int64_t> degrees;
    friend bool operator==(const Decomposable&, const Decomposable&) = default;
};

/// A semistable bundle known only through (rank, degree).
struct SemiStable {
    std::int64_t rank = 1;
    std::int64_t degree = 0;
    friend bool operator==(const SemiStable&, const SemiStable&) = default;
};

/// Thrown when an operation needs the line summands of an opaque semistable bundle.
class OpaqueBundleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BundleSpec {
public:
    using Shape = std::variant<Decomposable, SemiStable>;

    /// Sorts the degrees. Throws on an empty list.
    static BundleSpec decomposable(std::vector<std::int64_t> degrees, SurfaceGenus base = SurfaceGenus{});
    /// Throws if rank < 1, or if genus 0 and rank does not divide degree.
    static BundleSpec semistable(std::int64_t rank, std::int64_t degree, SurfaceGenus base = SurfaceGenus{});

    [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
    [[nodiscard]] SurfaceGenus base() const noexcept { return base_; }
    [[nodiscard]] bool is_decomposable() const noexcept { return std::holds_alternative<Decomposable>(shape_); }

    [[nodiscard]] std::int64_t rank() const;
    [[nodiscard]] std::int64_t degree() const;

    /// Summand degrees; throws OpaqueBundleError for the SemiStable variant.
    [[nodiscard]] const std::vector<std::int64_t>& degrees() const;

    friend bool operator==(const BundleSpec&, const BundleSpec&) = default;

private:
    BundleSpec(Shape shape, SurfaceGenus base) : shape_(std::move(shape)), base_(base) {}
    Shape shape_;
    SurfaceGenus base_;
};

Rational slope(const BundleSpec& b);

BundleSpec dual(const BundleSpec& b);

/// Tensor with a line bundle of degree t.
BundleSpec twist(const BundleSpec& b, std::int64_t t);

/// Degrees of the m-th symmetric power: one entry per degree-m monomial in the summands, sorted.
BundleSpec sym_power(const BundleSpec& b, int m);

struct RankDegree {
    std::int64_t rank;
    std::int64_t degree;
    friend bool operator==(const RankDegree&, const RankDegree&) = default;
};

/// (C(m+r-1, m), C(m+r-1, m-1) * degree), overflow-checked.
RankDegree sym_rank_degree(std::int64_t rank, std::int64_t degree, int m);

/// Split bundles are semistable iff all summands have equal degree.
bool is_semistable(const BundleSpec& b);

struct LineDegreeBounds {
    std::int64_t min_quotient_degree;
    std::int64_t max_sub_degree;
    friend bool operator==(const LineDegreeBounds&, const LineDegreeBounds&) = default;
};

LineDegreeBounds quotient_line_degree_bounds(const BundleSpec& b);

bool semistable_exists(SurfaceGenus g, std::int64_t rank, std::int64_t degree);

/// Over the sphere a semistable bundle is the balanced sum O(d/r)^r; returns that form.
/// Decomposable input is returned unchanged. Throws OpaqueBundleError for genus >= 1 semistable.
BundleSpec split_form(const BundleSpec& b);

}  // namespace exdiv
