#include "exdiv/cli.hpp"

#include "exdiv/blowdown.hpp"
#include "exdiv/bundles.hpp"
#include "exdiv/cohomology.hpp"
#include "exdiv/cones.hpp"
#include "exdiv/oracle.hpp"
#include "exdiv/sweeps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace exdiv::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad user input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::int64_t parse_int(const std::string& s, const char* what) {
    const Rational r = parse_rational(s);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        throw UsageError(std::string(what) + ": expected an integer, got '" + s + "'");
    return r.get_num().get_si();
}

std::vector<std::int64_t> parse_int_list(const std::string& s, const char* what) {
    if (s.empty()) throw UsageError(std::string(what) + ": empty list");
    std::vector<std::int64_t> out;
    for (const auto& part : split(s, ',')) out.push_back(parse_int(part, what));
    return out;
}

std::pair<Rational, Rational> parse_pair(const std::string& s, const char* what) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw UsageError(std::string(what) + ": expected X,Y, got '" + s + "'");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

Convention parse_convention(const std::string& s) {
    if (s == "quotient") return Convention::Quotient;
    if (s == "sub") return Convention::Sub;
    throw UsageError("convention must be 'quotient' or 'sub'");
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Json bundle_json(const BundleSpec& b) {
    Json j;
    if (b.is_decomposable()) {
        j["kind"] = "decomposable";
        j["degrees"] = b.degrees();
    } else {
        j["kind"] = "semistable";
        j["rank"] = b.rank();
        j["degree"] = b.degree();
    }
    return j;
}

std::string bundle_text(const BundleSpec& b) {
    const std::string tail = " (rank " + std::to_string(b.rank()) + ", degree " + std::to_string(b.degree()) + ")";
    return (b.is_decomposable() ? join(b.degrees()) : std::string("semistable")) + tail;
}

Json class_json(const Rational& x, const Rational& y) {
    Json j;
    j["x"] = to_string(x);
    j["y"] = to_string(y);
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

/// Bundle given either by --degrees or --semistable R,D.
struct BundleInput {
    std::string degrees;
    std::string semistable;
    int genus = 0;

    void attach(CLI::App* app, bool with_genus = true) {
        app->add_option("--degrees", degrees, "Line summand degrees a1,...,an");
        app->add_option("--semistable", semistable, "Semistable bundle R,D (rank, degree)");
        if (with_genus) app->add_option("--genus", genus, "Genus of the base surface")->check(CLI::NonNegativeNumber);
    }

    BundleSpec get() const {
        const SurfaceGenus g(genus);
        if (!semistable.empty() && !degrees.empty()) throw UsageError("give either --degrees or --semistable, not both");
        if (!semistable.empty()) {
            const auto rd = parse_int_list(semistable, "--semistable");
            if (rd.size() != 2) throw UsageError("--semistable expects R,D");
            if (rd[0] < 1) throw UsageError("rank must be >= 1");
            if (!semistable_exists(g, rd[0], rd[1])) throw UsageError("no such semistable bundle");
            return BundleSpec::semistable(rd[0], rd[1], g);
        }
        if (degrees.empty()) throw UsageError("missing --degrees (empty degree list)");
        return BundleSpec::decomposable(parse_int_list(degrees, "--degrees"), g);
    }
};

// ---- ring -----------------------------------------------------------------

struct RingArgs {
    int rank = 0;
    std::int64_t deg = 0;
    std::string convention = "quotient";
    std::string cls;
    int genus = 0;
};

int cmd_ring(const RingArgs& a, bool json, std::ostream& out) {
    if (a.rank < 1) throw UsageError("--rank must be >= 1");
    // --deg is the quotient-convention degree; the sub-convention context carries its negation
    const auto conv = parse_convention(a.convention);
    const BundleContext ctx(a.rank, conv == Convention::Sub ? -a.deg : a.deg, conv, SurfaceGenus(a.genus));
    const auto [x, y] = parse_pair(a.cls, "--class");
    const DivisorClass u{x, y, ctx};

    const Rational top = top_power(u);
    const Rational pl = pair(u, line_class(ctx));
    const Rational pe = pair(u, eta_class(ctx));
    const bool forward = in_forward_cone(u);
    std::optional<Rational> rho;
    if (u.x != 0) rho = ratio(u).value;
    const auto type = topological_type(ctx);

    if (json) {
        Json j;
        j["command"] = "ring";
        j["rank"] = a.rank;
        j["degree"] = a.deg;
        j["convention"] = to_string(ctx.convention);
        j["context_degree"] = ctx.d;
        j["genus"] = a.genus;
        j["class"] = class_json(x, y);
        j["top_power"] = to_string(top);
        j["pair_l"] = to_string(pl);
        j["pair_eta"] = to_string(pe);
        j["forward_cone"] = forward;
        j["ratio"] = rho ? Json(to_string(*rho)) : Json(nullptr);
        j["ratio_flag"] = forward ? "ok" : "out-of-cone";
        j["topological_type"] = type;
        emit(out, j);
        return kOk;
    }
    out << "u^n = " << to_string(top) << "\n";
    out << "<u,l> = " << to_string(pl) << "\n";
    out << "<u,eta> = " << to_string(pe) << "\n";
    out << "forward cone: " << yes_no(forward) << "\n";
    if (!rho)
        out << "ratio: undefined (out of forward cone)\n";
    else
        out << "ratio: " << to_string(*rho) << (forward ? "" : " (out of forward cone)") << "\n";
    out << "topological type: " << type << "\n";
    return kOk;
}

// ---- bundle ---------------------------------------------------------------

int cmd_bundle(const std::string& sub, const BundleInput& in, int m, std::int64_t t, bool json, std::ostream& out) {
    const auto b = in.get();
    Json j;
    j["command"] = "bundle " + sub;
    j["input"] = bundle_json(b);
    std::string text;

    if (sub == "sympow") {
        if (m < 1) throw UsageError("-m must be >= 1");
        if (b.is_decomposable()) {
            const auto s = sym_power(b, m);
            j["result"] = bundle_json(s);
            j["rank"] = s.rank();
            j["degree"] = s.degree();
            text = bundle_text(s);
        } else {
            const auto rd = sym_rank_degree(b.rank(), b.degree(), m);
            const auto s = BundleSpec::semistable(rd.rank, rd.degree, b.base());
            j["result"] = bundle_json(s);
            j["rank"] = rd.rank;
            j["degree"] = rd.degree;
            text = bundle_text(s);
        }
    } else if (sub == "slope") {
        j["slope"] = to_string(slope(b));
        text = to_string(slope(b));
    } else if (sub == "twist") {
        const auto s = twist(b, t);
        j["result"] = bundle_json(s);
        text = bundle_text(s);
    } else if (sub == "dual") {
        const auto s = dual(b);
        j["result"] = bundle_json(s);
        text = bundle_text(s);
    } else if (sub == "semistable") {
        j["semistable"] = is_semistable(b);
        text = yes_no(is_semistable(b));
    } else if (sub == "bounds") {
        if (!b.is_decomposable()) throw UsageError("bounds needs --degrees (semistable bundles are opaque)");
        const auto q = quotient_line_degree_bounds(b);
        j["min_quotient_degree"] = q.min_quotient_degree;
        j["max_sub_degree"] = q.max_sub_degree;
        text = "min quotient degree " + std::to_string(q.min_quotient_degree) + ", max sub degree " +
               std::to_string(q.max_sub_degree);
    } else {
        throw UsageError("unknown bundle subcommand");
    }
    if (json)
        emit(out, j);
    else
        out << text << "\n";
    return kOk;
}

// ---- cone -----------------------------------------------------------------

int cmd_cone(const BundleInput& in, const std::string& cls, bool json, std::ostream& out) {
    const auto b = in.get();
    const auto cone = curve_cone(b);
    const auto kr = kahler_cone_ratio(b);

    std::optional<Membership> member;
    std::optional<std::pair<Rational, Rational>> xy;
    if (!cls.empty()) {
        xy = parse_pair(cls, "--class");
        const BundleContext ctx(static_cast<int>(b.rank()), b.degree(), Convention::Quotient, b.base());
        member = kahler_membership(DivisorClass{xy->first, xy->second, ctx}, b);
    }

    std::vector<std::string> labels;
    for (const auto& r : cone.rays) labels.push_back(format_curve(r.a, r.m));

    if (json) {
        Json j;
        j["command"] = "cone";
        j["bundle"] = bundle_json(b);
        j["genus"] = in.genus;
        Json rays = Json::array();
        for (std::size_t i = 0; i < cone.rays.size(); ++i) {
            Json r;
            r["a"] = cone.rays[i].a;
            r["m"] = cone.rays[i].m;
            r["label"] = labels[i];
            rays.push_back(r);
        }
        j["rays"] = rays;
        j["kahler_is_forward_cone"] = cone.kahler_is_forward_cone;
        j["kahler_cone_ratio"] = to_string(kr);
        j["exactness"] = to_string(cone.exactness);
        if (member) {
            j["class"] = class_json(xy->first, xy->second);
            j["kahler"] = member->member;
            j["membership_exactness"] = to_string(member->exactness);
        }
        emit(out, j);
        return kOk;
    }
    out << "rays: ";
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << labels[i];
    out << "\n";
    if (cone.kahler_is_forward_cone) out << "Kähler cone = forward cone\n";
    out << "Kähler cone ratio: " << to_string(kr) << "\n";
    out << "exactness: " << to_string(cone.exactness) << "\n";
    if (member)
        out << "class (" << to_string(xy->first) << "," << to_string(xy->second)
            << "): " << (member->member ? "Kähler" : "not Kähler") << "\n";
    return kOk;
}

// ---- blowdown -------------------------------------------------------------

struct BlowdownArgs {
    std::string base = "surface";
    int genus = 0;
    std::optional<std::int64_t> alpha;
    std::string cls;
    int fiber_rank = 2;
    std::string ruled_areas;
    std::string convention = "sub";
};

Json certificate_json(const MatchingTripleCertificate& c) {
    Json j;
    j["bundle"] = bundle_json(c.bundle);
    j["kahler_class"] = class_json(c.kahler_class.x, c.kahler_class.y);
    j["restricted_ratio"] = to_string(c.restricted_ratio);
    j["weak"] = c.weak;
    j["s1_invariant"] = c.s1_invariant;
    j["chosen_ruling"] = c.chosen_ruling ? Json(to_string(*c.chosen_ruling)) : Json(nullptr);
    j["notes"] = c.notes;
    return j;
}

int cmd_blowdown(const BlowdownArgs& a, bool json, std::ostream& out) {
    std::optional<ExceptionalDivisorData> data;
    if (a.base == "point") {
        // Same ambient dimension as a P^{n-1}-bundle over a surface: D = P^n.
        data = ExceptionalDivisorData::point(a.fiber_rank + 1);
    } else if (a.base == "surface") {
        if (!a.alpha) throw UsageError("--alpha is required for a surface base");
        if (a.fiber_rank < 1) throw UsageError("--fiber-rank must be >= 1");
        std::optional<std::pair<Rational, Rational>> omega;
        if (!a.cls.empty()) omega = parse_pair(a.cls, "--class");
        // A quotient-convention class on P(V), deg V = alpha, has the same coordinates.
        (void)parse_convention(a.convention);
        std::optional<RuledAreas> areas;
        if (!a.ruled_areas.empty()) {
            const auto [x, y] = parse_pair(a.ruled_areas, "--ruled-areas");
            areas = RuledAreas{x, y};
        }
        try {
            data = ExceptionalDivisorData::surface(SurfaceGenus(a.genus), a.fiber_rank, *a.alpha, omega, areas);
        } catch (const DivisorDataError& e) {
            throw UsageError(e.what());
        }
    } else {
        throw UsageError("--base must be 'point' or 'surface'");
    }

    const auto verdict = blowdown_verdict(*data);
    const std::string name = verdict_name(verdict);
    std::string reason;
    if (const auto* na = std::get_if<NotAdmissible>(&verdict)) reason = na->reason;
    if (const auto* un = std::get_if<Undetermined>(&verdict)) reason = un->reason;
    const auto* up = std::get_if<BlowdownUpToDeformation>(&verdict);
    const bool positive = std::holds_alternative<AlwaysBlowdown>(verdict) || up != nullptr;

    if (json) {
        Json j;
        j["command"] = "blowdown";
        j["verdict"] = name;
        if (!data->over_point()) {
            j["genus"] = a.genus;
            j["fiber_rank"] = a.fiber_rank;
            j["alpha"] = *a.alpha;
            j["ratio"] = to_string(divisor_ratio(*data));
        }
        if (!reason.empty()) j["reason"] = reason;
        if (up) j["certificate"] = certificate_json(up->certificate);
        emit(out, j);
    } else {
        out << name;
        if (!reason.empty()) out << ": " << reason;
        out << "\n";
        if (up) {
            out << "ρ = " << to_string(divisor_ratio(*data)) << "\n";
            emit(out, certificate_json(up->certificate));
        }
    }
    return positive ? kOk : kNegativeVerdict;
}

// ---- check ----------------------------------------------------------------

struct CheckArgs {
    std::string kind;
    std::uint64_t seed = oracle::kDefaultSeed;
    std::optional<int> max_rank;
    std::optional<int> max_m;
    std::optional<int> samples;
    bool serial = false;
};

int cmd_check(const CheckArgs& a, bool json, std::ostream& out) {
    using namespace sweeps;
    const auto exec = a.serial ? Execution::Serial : Execution::Parallel;
    if (a.max_rank && (*a.max_rank < 1 || *a.max_rank > oracle::kMaxEnumRank))
        throw UsageError("--max-rank must be in [1, " + std::to_string(oracle::kMaxEnumRank) + "]");
    if (a.max_m && (*a.max_m < 1 || *a.max_m > oracle::kMaxEnumPower))
        throw UsageError("--max-m must be in [1, " + std::to_string(oracle::kMaxEnumPower) + "]");
    if (a.samples && *a.samples < 1) throw UsageError("--samples must be >= 1");

    std::vector<oracle::CheckLine> lines;
    auto append = [&](std::vector<oracle::CheckLine> more) {
        lines.insert(lines.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    };
    const bool all = a.kind == "all";
    bool known = all;
    if (all || a.kind == "ring") {
        known = true;
        RingSweepParams p;
        p.seed = a.seed;
        if (a.max_rank) p.max_rank = *a.max_rank;
        if (a.samples) p.samples = *a.samples;
        append(ring_sweep(p, exec));
    }
    if (all || a.kind == "sympow") {
        known = true;
        SympowSweepParams p;
        if (a.max_rank) p.max_rank = *a.max_rank;
        if (a.max_m) p.max_m = *a.max_m;
        append(sympow_sweep(p, exec));
    }
    if (all || a.kind == "cone") {
        known = true;
        ConeSweepParams p;
        if (a.max_rank) p.max_rank = *a.max_rank;
        if (a.max_m) p.max_m = *a.max_m;
        append(cone_sweep(p, exec));
    }
    if (all || a.kind == "invariance") {
        known = true;
        InvarianceSweepParams p;
        p.seed = a.seed;
        if (a.samples) p.samples = *a.samples;
        append(invariance_sweep(p, exec));
    }
    if (all || a.kind == "certificate") {
        known = true;
        append(certificate_sweep(CertificateSweepParams{}, exec));
    }
    if (!known) throw UsageError("check kind must be one of ring, sympow, cone, invariance, certificate, all");

    const bool ok = all_pass(lines);
    if (json) {
        Json j;
        j["command"] = "check";
        j["kind"] = a.kind;
        j["seed"] = a.seed;
        Json arr = Json::array();
        for (const auto& l : lines) {
            Json e;
            e["name"] = l.name;
            e["digest"] = l.digest;
            e["status"] = l.pass ? "PASS" : "FAIL";
            e["detail"] = l.detail;
            arr.push_back(e);
        }
        j["checks"] = arr;
        j["all_pass"] = ok;
        emit(out, j);
    } else {
        for (const auto& l : lines) out << l.format() << "\n";
        out << lines.size() << " checks, " << (ok ? "all PASS" : "FAILURES present") << " (seed " << a.seed << ")\n";
    }
    return ok ? kOk : kNegativeVerdict;
}

}  // namespace

std::string format_curve(long long a, long long m) {
    auto term = [](long long c, const char* sym, bool first) {
        std::string s;
        if (c == 0) return s;
        if (c < 0) s += "-";
        else if (!first) s += "+";
        const long long mag = c < 0 ? -c : c;
        if (mag != 1) s += std::to_string(mag);
        s += sym;
        return s;
    };
    if (a == 0 && m == 0) return "0";
    std::string s = term(a, "l", true);
    s += term(m, "η", s.empty());
    return s;
}

std::vector<std::string> args_from_spec(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("spec file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("command") || !j["command"].is_string())
        throw UsageError("spec file needs a string field \"command\"");
    static const std::set<std::string> kCommands{"ring", "bundle", "cone", "blowdown", "check"};
    if (!kCommands.count(j["command"].get<std::string>()))
        throw UsageError("unknown command '" + j["command"].get<std::string>() + "' in spec file");

    std::vector<std::string> args;
    for (const auto& [key, value] : j.items()) {
        if (key == "json" && value.is_boolean()) {
            if (value.get<bool>()) args.insert(args.begin(), "--json");
        }
    }
    args.push_back(j["command"].get<std::string>());
    if (j.contains("subcommand")) args.push_back(j["subcommand"].get<std::string>());

    for (const auto& [key, value] : j.items()) {
        if (key == "command" || key == "subcommand" || key == "json") continue;
        const std::string flag = (key.size() == 1 ? "-" : "--") + key;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
            continue;
        }
        std::string text;
        if (value.is_string()) {
            text = value.get<std::string>();
        } else if (value.is_number_integer()) {
            text = std::to_string(value.get<long long>());
        } else if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i) {
                const auto& e = value[i];
                text += (i ? "," : "") + (e.is_string() ? e.get<std::string>() : e.dump());
            }
        } else {
            throw UsageError("spec field '" + key + "' must be a string, integer, boolean or array");
        }
        // Positional check kind.
        if (key == "kind") {
            args.push_back(text);
            continue;
        }
        args.push_back(flag);
        args.push_back(text);
    }
    return args;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact blow-down criteria for fibred symplectic divisors", "exdiv"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::string spec_file;
    app.add_flag("--json", json, "Machine-readable JSON output");
    app.add_option("--spec", spec_file, "Read the command and flags from a JSON file");

    RingArgs ring;
    auto* ring_cmd = app.add_subcommand("ring", "Cohomology ring, ratio and forward cone of a class");
    ring_cmd->add_option("--rank", ring.rank, "Rank n of the modeling bundle")->required();
    ring_cmd->add_option("--deg", ring.deg, "Quotient-convention degree of the modeling bundle")->required();
    ring_cmd->add_option("--convention", ring.convention, "quotient | sub");
    ring_cmd->add_option("--class", ring.cls, "Class X,Y = X h + Y F")->required();
    ring_cmd->add_option("--genus", ring.genus, "Genus of the base")->check(CLI::NonNegativeNumber);

    auto* bundle_cmd = app.add_subcommand("bundle", "Slopes, twists, symmetric powers, semistability");
    bundle_cmd->require_subcommand(1);
    BundleInput bundle_in;
    int sym_m = 0;
    std::int64_t twist_t = 0;
    std::string bundle_sub;
    const std::pair<const char*, const char*> bundle_subs[] = {
        {"sympow", "Symmetric power degrees"},
        {"slope", "Slope deg/rank"},
        {"twist", "Twist by O(t)"},
        {"dual", "Dual bundle"},
        {"semistable", "Semistability test"},
        {"bounds", "Minimal quotient and maximal sub line degrees"},
    };
    for (const auto& [name, help] : bundle_subs) {
        auto* s = bundle_cmd->add_subcommand(name, help);
        bundle_in.attach(s);
        if (std::string(name) == "sympow") s->add_option("-m", sym_m, "Symmetric power exponent")->required();
        if (std::string(name) == "twist") s->add_option("-t", twist_t, "Twist degree")->required();
        s->callback([&bundle_sub, name] { bundle_sub = name; });
    }

    BundleInput cone_in;
    std::string cone_class;
    auto* cone_cmd = app.add_subcommand("cone", "Curve cone, Kähler cone ratio and membership");
    cone_in.attach(cone_cmd);
    cone_cmd->add_option("--class", cone_class, "Class X,Y = X xi + Y F (quotient convention)");

    BlowdownArgs bd;
    auto* bd_cmd = app.add_subcommand("blowdown", "Blow-down verdict and matching-triple certificate");
    bd_cmd->add_option("--base", bd.base, "point | surface");
    bd_cmd->add_option("--genus", bd.genus, "Genus of the base surface")->check(CLI::NonNegativeNumber);
    bd_cmd->add_option("--alpha", bd.alpha, "alpha = integral of (-1)^n c1(N_D)^n");
    bd_cmd->add_option("--class", bd.cls, "Restricted class X,Y in the sub convention");
    bd_cmd->add_option("--fiber-rank", bd.fiber_rank, "n, with D a P^{n-1}-bundle (default 2)");
    bd_cmd->add_option("--ruled-areas", bd.ruled_areas, "Areas X,Y of the two rulings (S2 x S2, alpha = 2)");
    bd_cmd->add_option("--convention", bd.convention, "sub | quotient");

    CheckArgs chk;
    auto* chk_cmd = app.add_subcommand("check", "Run oracle sweeps and print CHECK lines");
    chk_cmd->add_option("kind", chk.kind, "ring | sympow | cone | invariance | certificate | all")->required();
    chk_cmd->add_option("--seed", chk.seed, "Random seed");
    chk_cmd->add_option("--max-rank", chk.max_rank, "Largest rank swept");
    chk_cmd->add_option("--max-m", chk.max_m, "Largest symmetric power swept");
    chk_cmd->add_option("--samples", chk.samples, "Random samples per task");
    chk_cmd->add_flag("--serial", chk.serial, "Use the serial reference path");

    // --spec replaces the command line wholesale.
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--spec" || args[i].rfind("--spec=", 0) == 0) {
            const std::string path = args[i] == "--spec" ? (i + 1 < args.size() ? args[i + 1] : "") : args[i].substr(7);
            std::ifstream f(path);
            if (!f) {
                err << "error: cannot read spec file '" << path << "'\n";
                return kUsageError;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            std::vector<std::string> expanded;
            try {
                expanded = args_from_spec(buf.str());
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return kUsageError;
            }
            for (std::size_t k = 0; k < args.size(); ++k)
                if (args[k] == "--json") expanded.insert(expanded.begin(), "--json");
            return run(expanded, out, err);
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (ring_cmd->parsed()) return cmd_ring(ring, json, out);
        if (bundle_cmd->parsed()) return cmd_bundle(bundle_sub, bundle_in, sym_m, twist_t, json, out);
        if (cone_cmd->parsed()) return cmd_cone(cone_in, cone_class, json, out);
        if (bd_cmd->parsed()) return cmd_blowdown(bd, json, out);
        if (chk_cmd->parsed()) return cmd_check(chk, json, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const oracle::GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "error: no command\n";
    return kUsageError;
}

}  // namespace exdiv::cli
