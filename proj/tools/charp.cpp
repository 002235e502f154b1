// charp: exact characteristic-p verdicts for hypersurfaces over prime fields.
// Subcommands cover Frobenius splitting (Fedder test), ordinarity
// (Hasse-Witt), Ulrich/ACM checks for the bundle of locally exact
// differentials, Kunneth products, and persistent family scans.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "charp/criteria.hpp"
#include "charp/families.hpp"
#include "charp/parse.hpp"
#include "charp/report.hpp"
#include "charp/scan.hpp"

namespace {

using namespace charp;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 10;
constexpr int kExitError = 2;
constexpr int kExitUnsupported = 3;

struct InstanceOptions {
    std::string family;
    std::string poly;
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::uint64_t d = 0;
    std::uint32_t lambda = 0;
    bool lambda_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_instance_flags(CLI::App* cmd, InstanceOptions& opt, bool curve_only) {
    cmd->add_option("--family", opt.family, "family: fermat|dwork|legendre|random-plane-curve");
    cmd->add_option("--poly", opt.poly, "defining polynomial, inline text or a file path");
    cmd->add_option("--p", opt.p, "prime characteristic")->required();
    if (!curve_only) cmd->add_option("--n", opt.n, "ambient projective dimension");
    cmd->add_option("--d", opt.d, "degree (fermat / random families)");
    cmd->add_option("--lambda", opt.lambda, "family parameter lambda")
        ->each([&opt](const std::string&) { opt.lambda_set = true; });
    cmd->add_option("--seed", opt.seed, "sampler seed (random family)")
        ->each([&opt](const std::string&) { opt.seed_set = true; });
}

void add_output_flags(CLI::App* cmd, OutputOptions& opt) {
    cmd->add_option("--format", opt.format, "report format: json|csv|md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    cmd->add_option("--out", opt.out_path, "write the report to a file instead of stdout");
}

std::string read_poly_argument(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) return arg;  // inline text
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Builds the hypersurface plus the FamilySpec used in reports.
std::pair<HypersurfaceDatum, FamilySpec> build_instance(const InstanceOptions& opt,
                                                        bool curve_only) {
    FamilySpec spec;
    spec.p = opt.p;
    if (!opt.poly.empty()) {
        if (opt.n == 0 && !curve_only)
            throw std::invalid_argument("--poly needs --n");
        spec.kind = FamilyKind::Custom;
        spec.n = curve_only ? 2 : opt.n;
        spec.poly_text = read_poly_argument(opt.poly);
        HypersurfaceDatum X(spec.n, poly_parse(spec.poly_text, spec.p, spec.n + 1));
        spec.d = X.d();
        return {std::move(X), std::move(spec)};
    }
    if (opt.family.empty())
        throw std::invalid_argument("either --family or --poly is required");
    spec.kind = family_kind_from_name(opt.family);
    spec.n = curve_only ? 2 : opt.n;
    switch (spec.kind) {
        case FamilyKind::Fermat:
            spec.d = opt.d;
            break;
        case FamilyKind::Dwork:
            if (!opt.lambda_set) throw std::invalid_argument("dwork family needs --lambda");
            spec.lambda = opt.lambda;
            spec.d = spec.n + 1;
            break;
        case FamilyKind::LegendreCubic:
            if (!opt.lambda_set) throw std::invalid_argument("legendre family needs --lambda");
            spec.lambda = opt.lambda;
            spec.n = 2;
            spec.d = 3;
            break;
        case FamilyKind::RandomPlaneCurve:
            if (!opt.seed_set) throw std::invalid_argument("random family needs --seed");
            spec.seed = opt.seed;
            spec.n = 2;
            spec.d = opt.d;
            break;
        default:
            throw std::invalid_argument("family has no direct instance");
    }
    if (spec.n < 1) throw std::invalid_argument("--n is required for this family");
    HypersurfaceDatum X = spec.build();
    spec.d = X.d();
    return {std::move(X), std::move(spec)};
}

int emit(const Report& report, const OutputOptions& out, bool positive) {
    std::string text = report.render(report_format_from_name(out.format));
    if (out.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out.out_path);
        f << text;
    }
    return positive ? kExitPositive : kExitNegative;
}

Report make_report(const std::string& command, const FamilySpec& spec,
                   std::vector<Verdict> verdicts, std::optional<long long> window = {}) {
    Report r;
    r.command = command;
    r.family = family_spec_to_json(spec);
    r.p = spec.p;
    r.n = spec.n;
    r.d = spec.d;
    r.verdicts = std::move(verdicts);
    r.window = window;
    return r;
}

long long default_window(const HypersurfaceDatum& X) {
    return std::max<long long>(2 * static_cast<long long>(X.d()), X.p());
}

unsigned default_jobs() {
    if (const char* env = std::getenv("CHARP_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

// one FamilySpec per curve factor, parsed from "kind,key=value,..."
FamilySpec parse_factor(const std::string& text) {
    FamilySpec spec;
    std::stringstream ss(text);
    std::string piece;
    bool first = true;
    while (std::getline(ss, piece, ',')) {
        if (first) {
            spec.kind = family_kind_from_name(piece);
            first = false;
            continue;
        }
        auto eq = piece.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("factor option '" + piece + "' is not key=value");
        std::string key = piece.substr(0, eq), value = piece.substr(eq + 1);
        if (key == "p") spec.p = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "d") spec.d = std::stoull(value);
        else if (key == "lambda") spec.lambda = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "seed") spec.seed = std::stoull(value);
        else throw std::invalid_argument("unknown factor key: " + key);
    }
    if (first) throw std::invalid_argument("empty factor spec");
    spec.n = 2;
    if (spec.d == 0 && spec.kind == FamilyKind::LegendreCubic) spec.d = 3;
    return spec;
}

int run_scan_command(const InstanceOptions& inst, const std::string& lambda_range,
                     std::uint64_t seeds, unsigned jobs, const std::string& out_path,
                     const OutputOptions& out) {
    if (inst.family.empty()) throw std::invalid_argument("scan needs --family");
    FamilyKind kind = family_kind_from_name(inst.family);

    std::vector<FamilySpec> cells;
    std::string command;
    CellEvaluator evaluate;

    auto lambda_values = [&]() {
        std::vector<std::uint32_t> values;
        if (lambda_range == "all") {
            for (std::uint32_t l = 0; l < inst.p; ++l) values.push_back(l);
        } else {
            std::stringstream ss(lambda_range);
            std::string piece;
            while (std::getline(ss, piece, ','))
                values.push_back(static_cast<std::uint32_t>(std::stoul(piece)));
        }
        return values;
    };

    switch (kind) {
        case FamilyKind::Dwork: {
            if (inst.n < 1) throw std::invalid_argument("dwork scan needs --n");
            command = "scan-dwork";
            for (std::uint32_t l : lambda_values()) {
                FamilySpec spec;
                spec.kind = FamilyKind::Dwork;
                spec.p = inst.p;
                spec.n = inst.n;
                spec.d = inst.n + 1;
                spec.lambda = l;
                cells.push_back(spec);
            }
            evaluate = [](const FamilySpec& spec) -> std::vector<Verdict> {
                if (dwork_is_singular(spec.p, spec.n, *spec.lambda)) {
                    Verdict v;
                    v.kind = VerdictKind::Split;
                    v.positive = false;
                    v.value = "singular";
                    v.evidence["lambda"] = *spec.lambda;
                    v.evidence["singular"] = true;
                    return {v};
                }
                HypersurfaceDatum X = spec.build();
                Verdict v = fedder_is_split(X);
                v.evidence["lambda"] = *spec.lambda;
                v.evidence["singular"] = false;
                return {v};
            };
            break;
        }
        case FamilyKind::LegendreCubic: {
            command = "scan-legendre";
            for (std::uint32_t l : lambda_values()) {
                if (l == 0 || l == 1) continue;  // not admissible
                FamilySpec spec;
                spec.kind = FamilyKind::LegendreCubic;
                spec.p = inst.p;
                spec.n = 2;
                spec.d = 3;
                spec.lambda = l;
                cells.push_back(spec);
            }
            evaluate = [](const FamilySpec& spec) -> std::vector<Verdict> {
                HypersurfaceDatum X = spec.build();
                FpMatrix hw = hasse_witt(X);
                std::uint32_t hw_entry = hw.at(0, 0);
                FpScalar deuring = deuring_hasse(spec.p, *spec.lambda);
                std::vector<std::int64_t> h = {0, *spec.lambda, -1 - std::int64_t(*spec.lambda), 1};
                FpMatrix cm = cartier_manin_hyperelliptic(spec.p, h, 1);
                bool ord = hw_entry != 0;
                if (ord != (deuring.value != 0) || ord != (cm.at(0, 0) != 0))
                    throw std::logic_error("legendre oracles disagree at lambda=" +
                                           std::to_string(*spec.lambda));
                Verdict v;
                v.kind = VerdictKind::Ordinary;
                v.positive = ord;
                v.value = ord ? "ordinary" : "supersingular";
                v.evidence["lambda"] = *spec.lambda;
                v.evidence["hasse_witt_entry"] = hw_entry;
                v.evidence["deuring_value"] = deuring.value;
                v.evidence["cartier_manin_entry"] = cm.at(0, 0);
                return {v};
            };
            break;
        }
        case FamilyKind::RandomPlaneCurve: {
            if (inst.d == 0) throw std::invalid_argument("random scan needs --d");
            command = "scan-random-plane-curve";
            for (std::uint64_t s = 0; s < seeds; ++s) {
                FamilySpec spec;
                spec.kind = FamilyKind::RandomPlaneCurve;
                spec.p = inst.p;
                spec.n = 2;
                spec.d = inst.d;
                spec.seed = s;
                cells.push_back(spec);
            }
            evaluate = [](const FamilySpec& spec) -> std::vector<Verdict> {
                auto sample = random_plane_curve(spec.p, spec.d, *spec.seed);
                Verdict v = is_ordinary_curve(sample.X);
                v.evidence["seed"] = *spec.seed;
                v.evidence["draw_seed"] = sample.seed;
                return {v};
            };
            break;
        }
        default:
            throw std::invalid_argument("scan supports dwork, legendre, random-plane-curve");
    }

    ScanOptions options;
    options.out_path = out_path;
    options.jobs = jobs;
    ScanSummary summary = run_scan(cells, command, options, evaluate);

    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["cells_total"] = summary.cells_total;
    j["cells_new"] = summary.cells_new;
    j["cells_skipped"] = summary.cells_skipped;
    j["counts"] = summary.counts;
    j["tool_version"] = kToolVersion;
    std::string text = j.dump(2) + "\n";
    if (out.out_path.empty()) std::cout << text;
    else {
        std::ofstream f(out.out_path);
        f << text;
    }
    return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact characteristic-p hypersurface verdicts"};
    app.require_subcommand(1);

    InstanceOptions inst;
    OutputOptions out;
    long long window = -1;
    long long t_lo = -10, t_hi = 10;
    std::uint64_t rank_multiplier = 1;
    std::vector<std::string> factor_specs;
    std::string lambda_range = "all";
    std::uint64_t seeds = 0;
    unsigned jobs = default_jobs();
    std::string scan_out;

    auto* fedder = app.add_subcommand("fedder", "Fedder Frobenius-splitting test");
    add_instance_flags(fedder, inst, false);
    add_output_flags(fedder, out);

    auto* ordinary = app.add_subcommand("ordinary", "Hasse-Witt ordinarity of a plane curve");
    add_instance_flags(ordinary, inst, true);
    add_output_flags(ordinary, out);

    auto* ulrich = app.add_subcommand("ulrich-curve", "Ulrich property of B1(1) on a plane curve");
    add_instance_flags(ulrich, inst, true);
    add_output_flags(ulrich, out);
    ulrich->add_option("--rank-multiplier", rank_multiplier,
                       "also check B1 (x) O^r (1) for this r");

    auto* acm = app.add_subcommand("acm-b1", "ACM verdict for B1 on a hypersurface of dim >= 2");
    add_instance_flags(acm, inst, false);
    add_output_flags(acm, out);
    acm->add_option("--window", window, "lower window bound M: twists in [-M, d-n-1]");

    auto* equiv = app.add_subcommand("fsplit-equiv",
                                     "three-way splitting equivalence on a Calabi-Yau hypersurface");
    add_instance_flags(equiv, inst, false);
    add_output_flags(equiv, out);

    auto* push = app.add_subcommand("pushforward-acm", "ACM verdict for F_*(O_X)");
    add_instance_flags(push, inst, false);
    add_output_flags(push, out);
    push->add_option("--window", window, "twist window [-M, M]");

    auto* obstruction = app.add_subcommand("obstruction",
                                           "Hilbert-polynomial Ulrich obstruction for twists of B1");
    add_instance_flags(obstruction, inst, false);
    add_output_flags(obstruction, out);
    obstruction->add_option("--t-lo", t_lo, "twist window lower bound");
    obstruction->add_option("--t-hi", t_hi, "twist window upper bound");

    auto* kunneth = app.add_subcommand("kunneth", "Kunneth Ulrich check on a product of curves");
    kunneth->add_option("--factor", factor_specs,
                        "curve factor, e.g. fermat,p=7,d=3 or legendre,p=7,lambda=3")
        ->required();
    add_output_flags(kunneth, out);

    auto* scan = app.add_subcommand("scan", "scan a family and append JSONL records");
    add_instance_flags(scan, inst, false);
    scan->add_option("--lambda-range", lambda_range, "all or comma-separated lambda list");
    scan->add_option("--seeds", seeds, "number of seeds (random family)");
    scan->add_option("--jobs", jobs, "parallel cell evaluations (default $CHARP_JOBS or 1)");
    scan->add_option("--scan-out", scan_out, "JSONL output path")->required();
    add_output_flags(scan, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (fedder->parsed()) {
            auto [X, spec] = build_instance(inst, false);
            Verdict v = fedder_is_split(X);
            return emit(make_report("fedder", spec, {v}), out, v.positive);
        }
        if (ordinary->parsed()) {
            auto [X, spec] = build_instance(inst, true);
            Verdict v = is_ordinary_curve(X);
            return emit(make_report("ordinary", spec, {v}), out, v.positive);
        }
        if (ulrich->parsed()) {
            auto [X, spec] = build_instance(inst, true);
            Verdict v = rank_multiplier == 1 ? ulrich_check_curve(X)
                                             : ulrich_rank_multiplier(X, rank_multiplier);
            return emit(make_report("ulrich-curve", spec, {v}), out, v.positive);
        }
        if (acm->parsed()) {
            auto [X, spec] = build_instance(inst, false);
            long long w = window >= 0 ? window : default_window(X);
            Verdict v = acm_check_b1(X, w);
            return emit(make_report("acm-b1", spec, {v}, w), out, v.positive);
        }
        if (equiv->parsed()) {
            auto [X, spec] = build_instance(inst, false);
            Verdict v = fsplit_equivalence_check(X);
            return emit(make_report("fsplit-equiv", spec, {v}), out, v.positive);
        }
        if (push->parsed()) {
            auto [X, spec] = build_instance(inst, false);
            long long w = window >= 0 ? window : default_window(X);
            Verdict v = pushforward_acm_check(X, w);
            return emit(make_report("pushforward-acm", spec, {v}, w), out, v.positive);
        }
        if (obstruction->parsed()) {
            auto [X, spec] = build_instance(inst, false);
            Verdict v = ulrich_twist_obstruction(X, t_lo, t_hi);
            return emit(make_report("obstruction", spec, {v}), out, v.positive);
        }
        if (kunneth->parsed()) {
            std::vector<FamilySpec> factors;
            for (const auto& text : factor_specs) factors.push_back(parse_factor(text));
            long long m = static_cast<long long>(factors.size());
            std::vector<B1Table> tables;
            json factor_json = json::array();
            for (const auto& fs : factors) {
                HypersurfaceDatum X = fs.build();
                tables.push_back(b1_table_curve(X, 1 - m, m - 1));
                factor_json.push_back(family_spec_to_json(fs));
            }
            Verdict v = kunneth_ulrich_check(tables);
            Report r;
            r.command = "kunneth";
            r.family = json{{"kind", "product"}, {"factors", factor_json}};
            r.p = factors.front().p;
            r.n = 2;
            r.d = factors.front().d;
            r.verdicts = {v};
            return emit(r, out, v.positive);
        }
        if (scan->parsed()) {
            return run_scan_command(inst, lambda_range, seeds, jobs, scan_out, out);
        }
    } catch (const UnsupportedRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
