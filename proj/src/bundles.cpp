#include "exdiv/bundles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace exdiv {

BundleSpec BundleSpec::decomposable(std::vector<std::int64_t> degrees, SurfaceGenus base) {
    if (degrees.empty()) throw std::invalid_argument("decomposable bundle needs at least one summand");
    std::sort(degrees.begin(), degrees.end());
    return BundleSpec(Decomposable{std::move(degrees)}, base);
}

BundleSpec BundleSpec::semistable(std::int64_t rank, std::int64_t degree, SurfaceGenus base) {
    if (rank < 1) throw std::invalid_argument("semistable bundle rank must be >= 1");
    if (!semistable_exists(base, rank, degree))
        throw std::invalid_argument("no such semistable bundle: rank " + std::to_string(rank) +
                                    " does not divide degree " + std::to_string(degree) + " over genus 0");
    return BundleSpec(SemiStable{rank, degree}, base);
}

std::int64_t BundleSpec::rank() const {
    if (const auto* d = std::get_if<Decomposable>(&shape_)) return static_cast<std::int64_t>(d->degrees.size());
    return std::get<SemiStable>(shape_).rank;
}

std::int64_t BundleSpec::degree() const {
    if (const auto* d = std::get_if<Decomposable>(&shape_)) {
        std::int64_t sum = 0;
        for (auto a : d->degrees) sum = checked_add(sum, a);
        return sum;
    }
    return std::get<SemiStable>(shape_).degree;
}

const std::vector<std::int64_t>& BundleSpec::degrees() const {
    if (const auto* d = std::get_if<Decomposable>(&shape_)) return d->degrees;
    throw OpaqueBundleError("semistable bundle is opaque: its line summands are not known");
}

Rational slope(const BundleSpec& b) { return make_rational(b.degree(), b.rank()); }

BundleSpec dual(const BundleSpec& b) {
    if (b.is_decomposable()) {
        auto degs = b.degrees();
        for (auto& a : degs) a = -a;
        return BundleSpec::decomposable(std::move(degs), b.base());
    }
    return BundleSpec::semistable(b.rank(), -b.degree(), b.base());
}

BundleSpec twist(const BundleSpec& b, std::int64_t t) {
    if (b.is_decomposable()) {
        auto degs = b.degrees();
        for (auto& a : degs) a = checked_add(a, t);
        return BundleSpec::decomposable(std::move(degs), b.base());
    }
    return BundleSpec::semistable(b.rank(), checked_add(b.degree(), checked_mul(b.rank(), t)), b.base());
}

BundleSpec sym_power(const BundleSpec& b, int m) {
    if (m < 1) throw std::invalid_argument("symmetric power exponent must be >= 1");
    const auto& summands = b.degrees();
    // Guard the output size before allocating.
    (void)sym_rank_degree(b.rank(), b.degree(), m);

    // layers[k] = degrees of s^k of the summands processed so far.
    std::vector<std::vector<std::int64_t>> layers(static_cast<std::size_t>(m) + 1);
    layers[0] = {0};
    for (auto a : summands) {
        std::vector<std::vector<std::int64_t>> next(layers.size());
        for (int k = 0; k <= m; ++k) {
            // s^k(W + L) = sum_{j=0..k} s^{k-j}(W) * L^j
            for (int j = 0; j <= k; ++j) {
                const auto shift = checked_mul(a, j);
                for (auto w : layers[static_cast<std::size_t>(k - j)])
                    next[static_cast<std::size_t>(k)].push_back(checked_add(w, shift));
            }
        }
        layers = std::move(next);
    }
    return BundleSpec::decomposable(std::move(layers[static_cast<std::size_t>(m)]), b.base());
}

RankDegree sym_rank_degree(std::int64_t rank, std::int64_t degree, int m) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (m < 1) throw std::invalid_argument("symmetric power exponent must be >= 1");
    const auto top = checked_add(m, rank - 1);
    return {binomial(top, m), checked_mul(binomial(top, m - 1), degree)};
}

bool is_semistable(const BundleSpec& b) {
    if (!b.is_decomposable()) return true;
    const auto& d = b.degrees();
    return d.front() == d.back();
}

LineDegreeBounds quotient_line_degree_bounds(const BundleSpec& b) {
    const auto& d = b.degrees();
    return {d.front(), d.back()};
}

bool semistable_exists(SurfaceGenus g, std::int64_t rank, std::int64_t degree) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (!g.is_sphere()) return true;
    return degree % rank == 0;
}

BundleSpec split_form(const BundleSpec& b) {
    if (b.is_decomposable()) return b;
    if (!b.base().is_sphere())
        throw OpaqueBundleError("semistable bundle over genus >= 1 has no canonical splitting");
    return BundleSpec::decomposable(std::vector<std::int64_t>(static_cast<std::size_t>(b.rank()), b.degree() / b.rank()),
                                    b.base());
}

}  // namespace exdiv
