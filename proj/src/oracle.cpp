#include "exdiv/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace exdiv::oracle {

namespace {

Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }

// Plain Pascal row; kept separate from exdiv::binomial.
std::vector<Rational> pascal_row(int k) {
    std::vector<Rational> row{Rational(1)};
    for (int i = 1; i <= k; ++i) {
        std::vector<Rational> next(static_cast<std::size_t>(i) + 1, Rational(0));
        for (int j = 0; j <= i; ++j) {
            if (j > 0) next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
            if (j < i) next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

Rational brute_ring_power(const DivisorClass& u, int k) {
    const int n = u.ctx.n;
    if (k < 0 || k > n) throw GuardExceeded("brute_ring_power needs 0 <= k <= n");
    const Rational e = from_int(u.ctx.top_degree());
    const auto binom = pascal_row(k);

    // coeffs[b][a] holds the coefficient of h^a F^b, a in [0, n-1].
    std::vector<Rational> plain(static_cast<std::size_t>(n), Rational(0));
    std::vector<Rational> with_fiber(static_cast<std::size_t>(n), Rational(0));

    for (int j = 0; j <= k; ++j) {
        Rational c = binom[static_cast<std::size_t>(j)];
        for (int i = 0; i < k - j; ++i) c *= u.x;
        for (int i = 0; i < j; ++i) c *= u.y;
        if (c == 0) continue;

        // Reduce h^(k-j) on its own first.
        int a = k - j;
        int b = 0;
        if (a == n) {
            a = n - 1;
            b = 1;
            c *= e;
        }
        // Then multiply by F^j.
        b += j;
        if (b >= 2) continue;
        auto& slot = b == 0 ? plain : with_fiber;
        slot[static_cast<std::size_t>(a)] += c;
    }
    return with_fiber[static_cast<std::size_t>(n - 1)];
}

std::vector<std::int64_t> enumerate_sym_quotients(const std::vector<std::int64_t>& degrees, int m) {
    const int r = static_cast<int>(degrees.size());
    if (r < 1) throw std::invalid_argument("need at least one summand");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (r > kMaxEnumRank || m > kMaxEnumPower)
        throw GuardExceeded("enumeration guard: rank <= " + std::to_string(kMaxEnumRank) +
                            ", m <= " + std::to_string(kMaxEnumPower));

    std::vector<std::int64_t> out;
    std::vector<int> k(static_cast<std::size_t>(r), 0);
    while (true) {
        int total = 0;
        for (int v : k) total += v;
        if (total == m) {
            std::int64_t deg = 0;
            for (int i = 0; i < r; ++i) deg += k[static_cast<std::size_t>(i)] * degrees[static_cast<std::size_t>(i)];
            out.push_back(deg);
        }
        // odometer over [0, m]^r
        int pos = 0;
        while (pos < r && k[static_cast<std::size_t>(pos)] == m) {
            k[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == r) break;
        ++k[static_cast<std::size_t>(pos)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string CheckLine::format() const {
    std::string s = "CHECK " + name + " " + digest + (pass ? " PASS" : " FAIL");
    if (!detail.empty()) s += " " + detail;
    return s;
}

std::string input_digest(std::string_view canonical_input) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_input) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string GridSpec::canonical() const {
    std::ostringstream os;
    os << "x=" << x_min << ".." << x_max << ";y=" << y_min << ".." << y_max << ";den=" << den;
    return os.str();
}

bool strict_membership(const DivisorClass& u, const BundleSpec& b) { return kahler_membership(u, b).member; }

ConeReport sample_cone_check(const BundleSpec& b, const GridSpec& grid, int max_m, const MembershipPredicate& membership) {
    if (grid.den < 1) throw std::invalid_argument("grid denominator must be >= 1");
    const BundleContext ctx(static_cast<int>(b.rank()), b.degree(), Convention::Quotient, b.base());
    const auto& degs = b.degrees();

    // Curve classes a l + m eta for every quotient-line degree of s^m.
    std::vector<CurveClass> curves;
    for (int m = 1; m <= max_m; ++m) {
        auto qs = enumerate_sym_quotients(degs, m);
        qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
        for (auto a : qs) curves.push_back(CurveClass{a, m, ctx});
    }

    ConeReport report;
    const Rational den = from_int(grid.den);
    for (std::int64_t i = grid.x_min * grid.den; i <= grid.x_max * grid.den; ++i) {
        for (std::int64_t j = grid.y_min * grid.den; j <= grid.y_max * grid.den; ++j) {
            DivisorClass u{from_int(i) / den, from_int(j) / den, ctx};
            if (!membership(u, b)) continue;
            ++report.classes_tested;
            for (const auto& z : curves) {
                ++report.pairings_checked;
                Rational p = pair(u, z);
                if (p <= 0) report.violations.push_back({u, z, std::move(p)});
            }
        }
    }

    std::ostringstream input;
    input << "cone;degrees=";
    for (std::size_t i = 0; i < degs.size(); ++i) input << (i ? "," : "") << degs[i];
    input << ";genus=" << b.base().value() << ";" << grid.canonical() << ";max_m=" << max_m;

    std::ostringstream detail;
    detail << "classes=" << report.classes_tested << " pairings=" << report.pairings_checked
           << " violations=" << report.violations.size();
    if (!report.violations.empty()) {
        const auto& v = report.violations.front();
        detail << " first=(" << to_string(v.u.x) << "," << to_string(v.u.y) << ")@(" << v.curve.a << "l+" << v.curve.m
               << "eta)";
    }
    report.line = CheckLine{"cone", input_digest(input.str()), report.violations.empty(), detail.str()};
    return report;
}

}  // namespace exdiv::oracle
