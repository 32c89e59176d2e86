#include "exdiv/sweeps.hpp"

#include "exdiv/blowdown.hpp"
#include "exdiv/bundles.hpp"
#include "exdiv/cohomology.hpp"
#include "exdiv/cones.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

namespace exdiv::sweeps {

namespace {

using oracle::CheckLine;

Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }

template <typename Body>
std::vector<CheckLine> run_tasks(std::size_t count, const Body& body, Execution exec) {
    std::vector<CheckLine> out(count);
    auto guarded = [&](std::size_t i) {
        try {
            out[i] = body(i);
        } catch (const std::exception& e) {
            out[i] = CheckLine{"task", std::to_string(i), false, std::string("exception: ") + e.what()};
        }
    };
    if (exec == Execution::Parallel) {
        const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) guarded(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i) guarded(i);
    }
    return out;
}

class RationalSampler {
public:
    RationalSampler(std::seed_seq& seq, std::int64_t num_bound, std::int64_t den_bound)
        : rng_(seq), num_(-num_bound, num_bound), den_(1, den_bound), pos_(1, num_bound) {}

    Rational any() { return make_rational(num_(rng_), den_(rng_)); }
    Rational positive() { return make_rational(pos_(rng_), den_(rng_)); }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<std::int64_t> num_;
    std::uniform_int_distribution<std::int64_t> den_;
    std::uniform_int_distribution<std::int64_t> pos_;
};

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string show(const DivisorClass& u) { return "(" + to_string(u.x) + "," + to_string(u.y) + ")"; }

}  // namespace

bool all_pass(const std::vector<CheckLine>& lines) {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

std::vector<std::vector<std::int64_t>> sorted_degree_lists(int r, std::int64_t bound) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t lo) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t a = lo; a <= bound; ++a) {
            cur.push_back(a);
            self(self, a);
            cur.pop_back();
        }
    };
    rec(rec, -bound);
    return out;
}

std::vector<CheckLine> ring_sweep(const RingSweepParams& p, Execution exec) {
    struct Task {
        int n;
        std::int64_t d;
        Convention conv;
    };
    std::vector<Task> tasks;
    for (int n = 1; n <= p.max_rank; ++n)
        for (std::int64_t d = -p.max_abs_degree; d <= p.max_abs_degree; ++d)
            for (auto conv : {Convention::Quotient, Convention::Sub}) tasks.push_back({n, d, conv});

    return run_tasks(
        tasks.size(),
        [&](std::size_t i) {
            const auto& t = tasks[i];
            std::ostringstream input;
            input << "ring;n=" << t.n << ";d=" << t.d << ";conv=" << to_string(t.conv) << ";seed=" << p.seed
                  << ";samples=" << p.samples << ";num=" << p.num_bound << ";den=" << p.den_bound;
            CheckLine line{"ring", oracle::input_digest(input.str()), true, ""};

            const BundleContext ctx(t.n, t.d, t.conv);
            // h^n - e h^(n-1) F must vanish.
            auto relation = ring_power(RingElement::hyperplane(ctx), t.n) -
                            RingElement::monomial(ctx, {t.n - 1, 1}, from_int(ctx.top_degree()));
            if (!relation.is_zero()) {
                line.pass = false;
                line.detail = "grothendieck relation does not reduce to 0";
                return line;
            }

            std::seed_seq seq{p.seed, static_cast<std::uint64_t>(t.n), static_cast<std::uint64_t>(t.d + 1000),
                              static_cast<std::uint64_t>(t.conv == Convention::Sub)};
            RationalSampler sample(seq, p.num_bound, p.den_bound);
            for (int s = 0; s < p.samples; ++s) {
                DivisorClass u{sample.any(), sample.any(), ctx};
                const Rational closed = top_power(u);
                const Rational brute = oracle::brute_ring_power(u, t.n);
                const Rational reduced = integrate(ring_power(RingElement::from_class(u), t.n));
                if (closed != brute || closed != reduced) {
                    line.pass = false;
                    line.detail = "u=" + show(u) + " closed=" + to_string(closed) + " oracle=" + to_string(brute) +
                                  " ring=" + to_string(reduced);
                    return line;
                }
            }
            line.detail = "n=" + std::to_string(t.n) + " d=" + std::to_string(t.d) + " conv=" + to_string(t.conv) +
                          " samples=" + std::to_string(p.samples);
            return line;
        },
        exec);
}

std::vector<CheckLine> sympow_sweep(const SympowSweepParams& p, Execution exec) {
    struct Task {
        int r;
        int m;
    };
    std::vector<Task> tasks;
    for (int r = 1; r <= p.max_rank; ++r)
        for (int m = 1; m <= p.max_m; ++m) tasks.push_back({r, m});

    return run_tasks(
        tasks.size(),
        [&](std::size_t i) {
            const auto [r, m] = tasks[i];
            std::ostringstream input;
            input << "sympow;rank=" << r << ";m=" << m << ";bound=" << p.max_abs_degree;
            CheckLine line{"sympow", oracle::input_digest(input.str()), true, ""};
            auto fail = [&](const std::vector<std::int64_t>& degs, const std::string& what) {
                line.pass = false;
                line.detail = "degrees=" + join(degs) + " " + what;
                return line;
            };

            const auto lists = sorted_degree_lists(r, p.max_abs_degree);
            for (const auto& degs : lists) {
                const auto b = BundleSpec::decomposable(degs);
                const auto oracle_degs = oracle::enumerate_sym_quotients(degs, m);
                const auto sym = sym_power(b, m);
                const auto& mine = sym.degrees();
                if (mine != oracle_degs) return fail(degs, "sym_power differs from enumeration");
                const auto rd = sym_rank_degree(r, b.degree(), m);
                if (static_cast<std::int64_t>(oracle_degs.size()) != rd.rank) return fail(degs, "rank formula");
                std::int64_t sum = 0;
                for (auto a : oracle_degs) sum += a;
                if (sum != rd.degree) return fail(degs, "degree formula");
                if (oracle_degs.front() != m * degs.front()) return fail(degs, "min != m*a1");
                if (oracle_degs.back() != m * degs.back()) return fail(degs, "max != m*a_n");
                if (is_semistable(b) != (degs.front() == degs.back())) return fail(degs, "semistable criterion");
                if (is_semistable(b)) {
                    if (!is_semistable(sym)) return fail(degs, "sym power of semistable not semistable");
                    if (slope(sym) != from_int(m * degs.front())) return fail(degs, "slope(s^m) != m*slope");
                }
            }
            line.detail = "rank=" + std::to_string(r) + " m=" + std::to_string(m) + " bundles=" + std::to_string(lists.size());
            return line;
        },
        exec);
}

std::vector<CheckLine> cone_sweep(const ConeSweepParams& p, Execution exec) {
    // One task per degree list; merged into one line per rank afterwards.
    struct Task {
        int r;
        std::vector<std::int64_t> degs;
    };
    std::vector<Task> tasks;
    for (int r = 1; r <= p.max_rank; ++r)
        for (auto& degs : sorted_degree_lists(r, p.max_abs_degree)) tasks.push_back({r, std::move(degs)});

    auto per_bundle = run_tasks(
        tasks.size(),
        [&](std::size_t i) {
            const auto& t = tasks[i];
            const auto b = BundleSpec::decomposable(t.degs);
            CheckLine line{"cone", join(t.degs), true, ""};
            auto fail = [&](const std::string& what) {
                line.pass = false;
                line.detail = "degrees=" + join(t.degs) + " " + what;
                return line;
            };

            const auto report = oracle::sample_cone_check(b, p.grid, p.max_m);
            if (!report.line.pass) return fail(report.line.detail);

            const BundleContext ctx(t.r, b.degree(), Convention::Quotient);
            const auto a1 = t.degs.front();
            for (int m = 1; m <= p.max_m; ++m) {
                const auto qs = oracle::enumerate_sym_quotients(t.degs, m);
                if (qs.front() != multisection_degree_bound(b, m)) return fail("multisection bound");
            }
            const Rational den = from_int(p.grid.den);
            for (auto xi = p.grid.x_min * p.grid.den; xi <= p.grid.x_max * p.grid.den; ++xi) {
                for (auto yi = p.grid.y_min * p.grid.den; yi <= p.grid.y_max * p.grid.den; ++yi) {
                    DivisorClass u{from_int(xi) / den, from_int(yi) / den, ctx};
                    const bool member = kahler_membership(u, b).member;
                    if (member && !in_forward_cone(u)) return fail("Kähler class outside forward cone " + show(u));
                    for (std::int64_t tw : {-2, 3}) {
                        if (member != kahler_membership(twist_class(u, tw), twist(b, tw)).member)
                            return fail("twist equivariance " + show(u));
                    }
                }
                if (xi <= 0) continue;
                // a1 x + y = 0 is the boundary: not Kähler and orthogonal to C1.
                DivisorClass edge{from_int(xi) / den, -from_int(a1) * from_int(xi) / den, ctx};
                if (kahler_membership(edge, b).member) return fail("boundary class accepted " + show(edge));
                if (pair(edge, section_class(ctx, a1)) != 0) return fail("boundary pairing nonzero " + show(edge));
            }
            line.detail = std::to_string(report.classes_tested) + "," + std::to_string(report.pairings_checked);
            return line;
        },
        exec);

    std::vector<CheckLine> out;
    for (int r = 1; r <= p.max_rank; ++r) {
        std::ostringstream input;
        input << "cone;rank=" << r << ";bound=" << p.max_abs_degree << ";max_m=" << p.max_m << ";" << p.grid.canonical();
        CheckLine line{"cone", oracle::input_digest(input.str()), true, ""};
        std::size_t bundles = 0, classes = 0, pairings = 0;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            if (tasks[i].r != r) continue;
            ++bundles;
            const auto& res = per_bundle[i];
            if (!res.pass) {
                if (line.pass) line.detail = res.detail;
                line.pass = false;
                continue;
            }
            const auto comma = res.detail.find(',');
            classes += std::stoull(res.detail.substr(0, comma));
            pairings += std::stoull(res.detail.substr(comma + 1));
        }
        if (line.pass)
            line.detail = "rank=" + std::to_string(r) + " bundles=" + std::to_string(bundles) +
                          " classes=" + std::to_string(classes) +
                          " pairings=" + std::to_string(pairings) + " violations=0";
        out.push_back(std::move(line));
    }
    return out;
}

std::vector<CheckLine> invariance_sweep(const InvarianceSweepParams& p, Execution exec) {
    constexpr int kMaxRank = 6;
    return run_tasks(
        kMaxRank,
        [&](std::size_t i) {
            const int n = static_cast<int>(i) + 1;
            std::ostringstream input;
            input << "invariance;n=" << n << ";seed=" << p.seed << ";samples=" << p.samples;
            CheckLine line{"invariance", oracle::input_digest(input.str()), true, ""};
            std::seed_seq seq{p.seed, static_cast<std::uint64_t>(n), std::uint64_t{77}};
            RationalSampler sample(seq, 20, 12);
            for (int s = 0; s < p.samples; ++s) {
                const auto d = sample.integer(-10, 10);
                const BundleContext ctx(n, d, Convention::Quotient);
                const DivisorClass u{sample.positive(), sample.any(), ctx};
                const auto rho = ratio(u);
                auto fail = [&](const std::string& what) {
                    line.pass = false;
                    line.detail = what + " d=" + std::to_string(d) + " u=" + show(u);
                    return line;
                };
                if (rho.value != top_power(u) / pow(u.x, static_cast<unsigned>(n))) return fail("ratio != u^n/x^n");
                const Rational lambda = s == 0 ? make_rational(7, 3) : sample.positive();
                if (ratio(DivisorClass{lambda * u.x, lambda * u.y, ctx}).value != rho.value) return fail("scaling");
                const auto flipped = convert_convention(u);
                if (ratio(flipped).value != rho.value || in_forward_cone(flipped) != rho.in_forward_cone)
                    return fail("convention");
                if (!(convert_convention(flipped) == u)) return fail("convention involution");
                const auto t = sample.integer(-5, 5);
                const auto twisted = twist_class(u, t);
                if (ratio(twisted).value != rho.value || in_forward_cone(twisted) != rho.in_forward_cone)
                    return fail("twist t=" + std::to_string(t));
                if (topological_type(twisted.ctx) != topological_type(ctx)) return fail("twist changes type");
            }
            line.detail = "n=" + std::to_string(n) + " samples=" + std::to_string(p.samples);
            return line;
        },
        exec);
}

std::vector<CheckLine> certificate_sweep(const CertificateSweepParams& p, Execution exec) {
    struct Task {
        std::int64_t alpha;
        int n;
        int g;
    };
    std::vector<Task> tasks;
    for (auto alpha = p.min_alpha; alpha <= p.max_alpha; ++alpha)
        for (int n : p.ranks)
            for (int g : p.genera) tasks.push_back({alpha, n, g});

    return run_tasks(
        tasks.size(),
        [&](std::size_t i) {
            const auto [alpha, n, gi] = tasks[i];
            const SurfaceGenus g(gi);
            std::ostringstream input;
            input << "certificate;alpha=" << alpha << ";n=" << n << ";g=" << gi << ";steps=" << p.steps << "/"
                  << p.steps_per_unit;
            CheckLine line{"certificate", oracle::input_digest(input.str()), true, ""};
            auto fail = [&](const std::string& what) {
                line.pass = false;
                line.detail = what;
                return line;
            };

            const auto v = matching_bundle(alpha, n, g);
            if (v.degree() != alpha || v.rank() != n) return fail("matching bundle degree/rank");
            const auto rr = restricted_ratio(alpha, n, g);
            const Rational expected = gi > 0 ? from_int(std::max<std::int64_t>(0, alpha))
                                             : from_int(std::max(alpha, residue(alpha, n)));
            if (rr.value != expected) return fail("restricted ratio formula");
            // Infimum of alpha + n y/x over the half-plane a1 x + y > 0 is alpha - n a1;
            // for V semistable the half-plane is y/x > -mu(V), giving alpha - n mu(V) = 0.
            const Rational direct = v.is_decomposable()
                                        ? from_int(alpha) - Rational(n) * from_int(std::min<std::int64_t>(v.degrees().front(), 0))
                                        : from_int(alpha) - Rational(n) * slope(v);
            if (direct != rr.value) return fail("restricted ratio vs direct cone minimum");

            try {
                (void)kahler_class_for_ratio(alpha, n, g, rr.value);
                return fail("class constructed at the bound");
            } catch (const NoSuchClass&) {
            }

            const auto target = extend_by_trivial(v);
            int certificates = 0;
            for (int k = 1; k <= p.steps; ++k) {
                const Rational rho0 = rr.value + make_rational(k, p.steps_per_unit);
                const auto u = kahler_class_for_ratio(alpha, n, g, rho0);
                if (!kahler_membership(u, target).member) return fail("class not Kähler at rho=" + to_string(rho0));
                if (ratio(restrict_to_subbundle(u, v)).value != rho0)
                    return fail("restriction ratio at rho=" + to_string(rho0));

                const auto data =
                    (gi == 0 && n == 2 && alpha == 2)
                        ? ExceptionalDivisorData::surface(g, n, alpha, std::nullopt, RuledAreas{Rational(1), rho0 / 2})
                        : ExceptionalDivisorData::surface(
                              g, n, alpha, std::pair{Rational(1), (rho0 - from_int(alpha)) / Rational(n)});
                if (divisor_ratio(data) != rho0) return fail("divisor ratio");
                if (!is_admissible(data)) return fail("not admissible at rho=" + to_string(rho0));
                const auto cert = build_matching_triple(data);
                const auto check = validate_certificate(cert, data);
                if (!check.valid) return fail("certificate rejected: " + check.reasons.front());
                ++certificates;
            }
            if (rr.value > 0) {
                const auto at_bound =
                    (gi == 0 && n == 2 && alpha == 2)
                        ? ExceptionalDivisorData::surface(g, n, alpha, std::nullopt, RuledAreas{Rational(1), rr.value / 2})
                        : ExceptionalDivisorData::surface(
                              g, n, alpha, std::pair{Rational(1), (rr.value - from_int(alpha)) / Rational(n)});
                try {
                    (void)build_matching_triple(at_bound);
                    return fail("certificate built at the bound");
                } catch (const NotAdmissibleError&) {
                }
            }
            line.detail = "alpha=" + std::to_string(alpha) + " n=" + std::to_string(n) + " g=" + std::to_string(gi) +
                          " certificates=" + std::to_string(certificates);
            return line;
        },
        exec);
}

}  // namespace exdiv::sweeps
