#include "exdiv/oracle.hpp"

#include <doctest.h>

using namespace exdiv;
using namespace exdiv::oracle;

namespace {

Rational q(std::int64_t p, std::int64_t r = 1) { return make_rational(p, r); }

}  // namespace

TEST_CASE("brute_ring_power") {
    for (int n = 1; n <= 6; ++n) {
        const BundleContext ctx(n, 5, Convention::Quotient);
        CHECK(brute_ring_power({q(1), q(0), ctx}, n) == 5);
        for (int k = 2; k <= n; ++k) CHECK(brute_ring_power({q(0), q(1), ctx}, k) == 0);
    }
    // (xi + 2F)^2 on rank 2, degree 3: 3 + 4
    CHECK(brute_ring_power({q(1), q(2), BundleContext(2, 3, Convention::Quotient)}, 2) == 7);
    // sub convention flips the sign of d
    CHECK(brute_ring_power({q(1), q(2), BundleContext(2, 2, Convention::Sub)}, 2) == 2);
    CHECK_THROWS_AS(brute_ring_power({q(1), q(0), BundleContext(2, 0, Convention::Quotient)}, 3), GuardExceeded);
}

TEST_CASE("enumerate_sym_quotients") {
    CHECK(enumerate_sym_quotients({0, 2}, 2) == std::vector<std::int64_t>{0, 2, 4});
    CHECK(enumerate_sym_quotients({1, 1}, 2) == std::vector<std::int64_t>{2, 2, 2});
    CHECK(enumerate_sym_quotients({-1, 0, 3}, 1) == std::vector<std::int64_t>{-1, 0, 3});
    CHECK_THROWS_AS(enumerate_sym_quotients({0, 0, 0, 0, 0, 0, 0}, 2), GuardExceeded);
    CHECK_THROWS_AS(enumerate_sym_quotients({0}, 9), GuardExceeded);
    // length C(m + r - 1, m), min m * a1
    for (int r = 1; r <= 4; ++r)
        for (int m = 1; m <= 5; ++m) {
            std::vector<std::int64_t> d;
            for (int i = 0; i < r; ++i) d.push_back(2 * i - 3);
            const auto e = enumerate_sym_quotients(d, m);
            CHECK(static_cast<std::int64_t>(e.size()) == binomial(m + r - 1, m));
            CHECK(e.front() == m * d.front());
        }
}

TEST_CASE("input_digest is FNV-1a") {
    CHECK(input_digest("") == "cbf29ce484222325");
    CHECK(input_digest("a") == "af63dc4c8601ec8c");
    CHECK(input_digest("ring") != input_digest("cone"));
}

TEST_CASE("CheckLine format") {
    CheckLine l{"ring", "0123456789abcdef", true, "samples=3"};
    CHECK(l.format() == "CHECK ring 0123456789abcdef PASS samples=3");
    l.pass = false;
    CHECK(l.format() == "CHECK ring 0123456789abcdef FAIL samples=3");
}

TEST_CASE("sample_cone_check on [0,2] finds no violations") {
    const auto b = BundleSpec::decomposable({0, 2});
    const auto report = sample_cone_check(b, GridSpec{});
    CHECK(report.violations.empty());
    CHECK(report.line.pass);
    // x in 1..5, y in 1..5 are the members (y > 0)
    CHECK(report.classes_tested == 25);
    CHECK(report.line.format().rfind("CHECK cone ", 0) == 0);
}

TEST_CASE("sample_cone_check negative control: non-strict membership hits the boundary") {
    const auto b = BundleSpec::decomposable({0, 2});
    auto closed = [](const DivisorClass& u, const BundleSpec& bb) {
        return u.x > 0 && Rational(static_cast<long>(bb.degrees().front())) * u.x + u.y >= 0;
    };
    const auto report = sample_cone_check(b, GridSpec{}, 5, closed);
    CHECK_FALSE(report.violations.empty());
    CHECK_FALSE(report.line.pass);
    for (const auto& v : report.violations) {
        CHECK(v.u.y == 0);
        CHECK(v.pairing == 0);
    }
}

TEST_CASE("sample_cone_check is deterministic") {
    const auto b = BundleSpec::decomposable({-2, 1, 1});
    const GridSpec grid{1, 3, -4, 4, 2};
    CHECK(sample_cone_check(b, grid).line == sample_cone_check(b, grid).line);
}
