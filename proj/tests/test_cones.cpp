#include "exdiv/cones.hpp"
#include "exdiv/oracle.hpp"
#include "exdiv/sweeps.hpp"

#include <doctest.h>

using namespace exdiv;

namespace {

Rational q(std::int64_t p, std::int64_t r = 1) { return make_rational(p, r); }
BundleSpec dec(std::vector<std::int64_t> d, int g = 0) { return BundleSpec::decomposable(std::move(d), SurfaceGenus(g)); }
BundleContext ctx_of(const BundleSpec& b) {
    return BundleContext(static_cast<int>(b.rank()), b.degree(), Convention::Quotient, b.base());
}

}  // namespace

TEST_CASE("curve_cone of split bundles") {
    const auto b = dec({0, 2});
    const auto c = curve_cone(b);
    REQUIRE(c.rays.size() == 2);
    CHECK(c.rays[0] == line_class(ctx_of(b)));
    CHECK(c.rays[1] == eta_class(ctx_of(b)));
    CHECK(c.exactness == Exactness::Exact);
    CHECK_FALSE(c.kahler_is_forward_cone);

    const auto n = dec({-2, -1});
    CHECK(curve_cone(n).rays[1] == CurveClass{-2, 1, ctx_of(n)});

    const auto bal = dec({3, 3});
    CHECK(curve_cone(bal).rays[1] == CurveClass{3, 1, ctx_of(bal)});
    CHECK(curve_cone(bal).kahler_is_forward_cone);
}

TEST_CASE("curve_cone of semistable bundles") {
    const auto ss = BundleSpec::semistable(2, -3, SurfaceGenus(1));
    const auto c = curve_cone(ss);
    CHECK(c.rays.size() == 1);
    CHECK(c.kahler_is_forward_cone);
    // genus 0: converted to the balanced split form first
    const auto g0 = BundleSpec::semistable(2, 4, SurfaceGenus(0));
    CHECK(curve_cone(g0).rays[1].a == 2);
}

TEST_CASE("kahler_membership examples") {
    const auto b = dec({0, 2});
    CHECK(kahler_membership({q(1), q(1), ctx_of(b)}, b).member);
    CHECK_FALSE(kahler_membership({q(1), q(0), ctx_of(b)}, b).member);

    const auto ss = BundleSpec::semistable(2, -3, SurfaceGenus(1));
    const auto m = kahler_membership({q(1), q(2), ctx_of(ss)}, ss);
    CHECK(m.member);
    CHECK(m.exactness == Exactness::Exact);

    const auto vo = dec({-1, 0, 0});
    CHECK(kahler_membership({q(1), q(3, 2), ctx_of(vo)}, vo).member);

    CHECK_THROWS_AS(kahler_membership({q(1), q(1), ctx_of(dec({0, 1}))}, b), ContextMismatch);
    CHECK_THROWS_AS(kahler_membership({q(1), q(1), convert_convention(ctx_of(b))}, b), ContextMismatch);
}

TEST_CASE("kahler_membership for V + L with V semistable is sufficient-only") {
    const SemistablePlusLine t{2, -3, 0, SurfaceGenus(1)};
    const auto ctx = kahler_context(t);
    CHECK(ctx.n == 3);
    CHECK(ctx.d == -3);
    const auto in = kahler_membership({q(1), q(2), ctx}, t);
    CHECK(in.member);
    CHECK(in.exactness == Exactness::SufficientOnly);
    CHECK_FALSE(kahler_membership({q(2), q(3), ctx}, t).member);  // y/x = 3/2 is the boundary
    CHECK_THROWS(kahler_membership({q(1), q(2), kahler_context(SemistablePlusLine{2, 3, 0, SurfaceGenus(1)})},
                                   SemistablePlusLine{2, 3, 0, SurfaceGenus(1)}));
}

TEST_CASE("genus-0 semistable behaves like its balanced split form") {
    for (int n = 1; n <= 4; ++n)
        for (std::int64_t a = -3; a <= 3; ++a) {
            const auto ss = BundleSpec::semistable(n, n * a, SurfaceGenus(0));
            const auto sp = dec(std::vector<std::int64_t>(static_cast<std::size_t>(n), a));
            CHECK(kahler_cone_ratio(ss) == kahler_cone_ratio(sp));
            for (std::int64_t y = -5; y <= 5; ++y) {
                const DivisorClass u{q(1), q(y), ctx_of(sp)};
                CHECK(kahler_membership(u, ss).member == kahler_membership(u, sp).member);
            }
        }
}

TEST_CASE("kahler_cone_ratio") {
    CHECK(kahler_cone_ratio(dec({0, 2})) == 2);
    CHECK(kahler_cone_ratio(BundleSpec::semistable(2, -3, SurfaceGenus(1))) == 0);
    CHECK(kahler_cone_ratio(dec({4, 4})) == 0);
    CHECK(kahler_cone_ratio(dec({-2, -1})) == 1);
}

TEST_CASE("kahler_cone_ratio is the infimum of ratios over the Kähler cone") {
    // On the boundary ray a1 x + y = 0 the ratio equals the cone ratio; inside it is larger.
    for (const auto& d : std::vector<std::vector<std::int64_t>>{{0, 2}, {-2, -1}, {-1, 0, 3}, {1, 1, 4, 5}}) {
        const auto b = dec(d);
        const auto ctx = ctx_of(b);
        const DivisorClass edge{q(1), q(-d.front()), ctx};
        CHECK(ratio(edge).value == kahler_cone_ratio(b));
        const DivisorClass inside{q(1), q(-d.front()) + q(1, 100), ctx};
        CHECK(kahler_membership(inside, b).member);
        CHECK(ratio(inside).value > kahler_cone_ratio(b));
    }
}

TEST_CASE("min_symplectic_ratio") {
    CHECK(min_symplectic_ratio(BundleContext(2, 5, Convention::Sub, SurfaceGenus(2))) == 0);
    CHECK(min_symplectic_ratio(BundleContext(2, -1, Convention::Sub, SurfaceGenus(0))) == 1);
    CHECK(min_symplectic_ratio(BundleContext(3, 6, Convention::Quotient, SurfaceGenus(0))) == 0);
}

TEST_CASE("multisection_degree_bound") {
    CHECK(multisection_degree_bound(dec({0, 2}), 3) == 0);
    CHECK(multisection_degree_bound(dec({-2, -1}), 2) == -4);
    CHECK(multisection_degree_bound(dec({3, 7}), 1) == 3);
    for (int m = 1; m <= 5; ++m)
        CHECK(multisection_degree_bound(dec({-3, 1, 2}), m) == oracle::enumerate_sym_quotients({-3, 1, 2}, m).front());
}

TEST_CASE("matching_bundle") {
    CHECK(matching_bundle(-3, 2, SurfaceGenus(0)) == dec({-2, -1}));
    CHECK(matching_bundle(-3, 2, SurfaceGenus(1)) == BundleSpec::semistable(2, -3, SurfaceGenus(1)));
    CHECK(matching_bundle(3, 2, SurfaceGenus(0)) == dec({1, 2}));
    CHECK(matching_bundle(3, 2, SurfaceGenus(2)) == dec({1, 2}, 2));
    CHECK(matching_bundle(5, 2, SurfaceGenus(0)) == dec({2, 3}));
    CHECK(matching_bundle(0, 4, SurfaceGenus(0)) == dec({0, 0, 0, 0}));
    for (std::int64_t a = -6; a <= 6; ++a)
        for (int n : {1, 2, 3, 4})
            for (int g : {0, 1, 2}) {
                const auto v = matching_bundle(a, n, SurfaceGenus(g));
                CHECK(v.degree() == a);
                CHECK(v.rank() == n);
            }
}

TEST_CASE("restricted_ratio") {
    const auto r0 = restricted_ratio(-3, 2, SurfaceGenus(0));
    CHECK(r0.value == 1);
    CHECK(r0.achieving_bundle == dec({-2, -1}));
    CHECK(r0.infimum_not_attained);
    CHECK(r0.s1_invariant);
    CHECK(restricted_ratio(-3, 2, SurfaceGenus(1)).value == 0);
    CHECK(restricted_ratio(5, 2, SurfaceGenus(0)).value == 5);
    CHECK(restricted_ratio(5, 2, SurfaceGenus(0)).achieving_bundle == dec({2, 3}));
    for (std::int64_t a = -6; a <= 6; ++a)
        for (int n : {2, 3, 4})
            for (int g : {0, 1, 2}) CHECK(restricted_ratio(a, n, SurfaceGenus(g)).value >= 0);
}

TEST_CASE("kahler_class_for_ratio") {
    const auto u = kahler_class_for_ratio(-1, 2, SurfaceGenus(0), q(2));
    CHECK(u.x == 2);
    CHECK(u.y == 3);
    CHECK(u.ctx == BundleContext(3, -1, Convention::Quotient, SurfaceGenus(0)));
    CHECK(kahler_membership(u, dec({-1, 0, 0})).member);
    const auto v = matching_bundle(-1, 2, SurfaceGenus(0));
    CHECK(ratio(restrict_to_subbundle(u, v)).value == 2);

    const auto w = kahler_class_for_ratio(0, 2, SurfaceGenus(1), q(1));
    CHECK(w.x == 2);
    CHECK(w.y == 1);

    CHECK_THROWS_AS(kahler_class_for_ratio(-1, 2, SurfaceGenus(0), q(1)), NoSuchClass);

    // denominators are cleared
    const auto f = kahler_class_for_ratio(-3, 2, SurfaceGenus(1), q(5, 3));
    CHECK(f.x == 6);
    CHECK(f.y == 14);
    CHECK(kahler_membership(f, extend_by_trivial(matching_bundle(-3, 2, SurfaceGenus(1)))).member);
}

TEST_CASE("Kähler cone sits inside the forward cone and is twist-equivariant") {
    for (int r = 1; r <= 3; ++r)
        for (const auto& d : sweeps::sorted_degree_lists(r, 3)) {
            const auto b = dec(d);
            const auto ctx = ctx_of(b);
            for (std::int64_t xn = 1; xn <= 4; ++xn)
                for (std::int64_t yn = -8; yn <= 8; ++yn) {
                    const DivisorClass u{q(xn, 2), q(yn, 2), ctx};
                    const bool k = kahler_membership(u, b).member;
                    if (k) CHECK(in_forward_cone(u));
                    CHECK(k == kahler_membership(twist_class(u, 2), twist(b, 2)).member);
                }
        }
}
