/**
 * @file main.cpp
 * @brief `dioph` — construct targets, enumerate best approximations,
 *        estimate exponents and run the transference/identity checks.
 *
 * Subcommands
 *   construct <spec> --depth N           quotients, value, convergents;
 *                                        triples / Q_n / growth for fib targets
 *   estimate  <spec> --form F --n K --xmax X --method M
 *   check     [<spec>] --ids a,b         full suite, or named checks; with
 *                                        --scalar name=value runs one check
 *                                        directly on explicit inputs
 *   report    <spec> --xmax X            everything above in one document
 *
 * Exit codes: 0 success, 1 usage/parse error, 2 if any emitted check
 * fails, 3 when nothing holds and at least one check is inconclusive.
 */

#include "numberspec.hpp"
#include "report.hpp"

#include <dio/checks.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dio;
using dio::cli::NumberSpec;
using dio::cli::Report;
using dio::cli::ReportConfig;

struct Options {
    std::string spec_text;
    std::string format;  // per-subcommand default applied in main()
    std::string output;
    long depth = 12;
    std::string form = "linear";
    long n = 0;  // 0 = form default
    long m = 0, d = 0;
    Int xmax = 500;
    std::string method = "pointwise";
    long burn_in = 3;
    long precision_bits = 48;
    long ceiling_bits = 0;
    std::string tolerance;
    std::vector<std::string> ids;
    std::vector<std::string> scalar_args;
    bool wall_clock = false;
};

// The classical (m, d, a) recurrence for sqrt(n): exact integers only.
std::vector<Int> sqrt_quotients(const Int& n, std::size_t count) {
    const Int a0 = sqrt(n);
    std::vector<Int> out{a0};
    Int m = 0, d = 1, a = a0;
    while (out.size() < count) {
        m = d * a - m;
        d = (n - m * m) / d;
        a = (a0 + m) / d;
        out.push_back(a);
    }
    return out;
}

CFExpansion expansion_of(const NumberSpec& spec, std::size_t depth) {
    switch (spec.kind) {
        case NumberSpec::Kind::rational: return cf_of_rational(spec.rat);
        case NumberSpec::Kind::finite_cf: return CFExpansion::finite(spec.cf_a0, spec.cf_terms);
        case NumberSpec::Kind::extremal:
            return xi_ab_cf(ExtremalSpec(spec.fib_a, spec.fib_b));
        case NumberSpec::Kind::periodic: return periodic_expansion(spec.periodic);
        case NumberSpec::Kind::square_root: {
            auto qs = sqrt_quotients(spec.sqrt_n, depth + 1);
            const Int a0 = qs.front();
            qs.erase(qs.begin());
            return CFExpansion::infinite(a0, [qs, n = spec.sqrt_n, depth](std::size_t i) {
                if (i <= qs.size()) return qs[i - 1];
                // extend on demand past the precomputed prefix
                return sqrt_quotients(n, i + 1)[i];
            });
        }
    }
    throw std::logic_error("expansion_of: bad kind");
}

RealEntry entry_of(const NumberSpec& spec) {
    switch (spec.kind) {
        case NumberSpec::Kind::rational: return RealEntry::exact(spec.rat);
        case NumberSpec::Kind::square_root: return RealEntry::sqrt_of(spec.sqrt_n);
        case NumberSpec::Kind::finite_cf:
            return RealEntry::exact(CFExpansion::finite(spec.cf_a0, spec.cf_terms).exact_value());
        case NumberSpec::Kind::extremal:
            return RealEntry::cf_backed(xi_ab_cf(ExtremalSpec(spec.fib_a, spec.fib_b)));
        case NumberSpec::Kind::periodic:
            return RealEntry::cf_backed(periodic_expansion(spec.periodic));
    }
    throw std::logic_error("entry_of: bad kind");
}

RatInterval value_of(const NumberSpec& spec, long bits) {
    switch (spec.kind) {
        case NumberSpec::Kind::rational: return RatInterval(spec.rat);
        case NumberSpec::Kind::square_root: return sqrt_interval(spec.sqrt_n, bits);
        case NumberSpec::Kind::finite_cf:
            return RatInterval(CFExpansion::finite(spec.cf_a0, spec.cf_terms).exact_value());
        case NumberSpec::Kind::extremal:
            return xi_ab_value(ExtremalSpec(spec.fib_a, spec.fib_b));
        case NumberSpec::Kind::periodic:
            return periodic_cf_value(spec.periodic, make_rational(Int(1), pow2(bits)));
    }
    throw std::logic_error("value_of: bad kind");
}

bool is_rational_kind(const NumberSpec& spec) {
    return spec.kind == NumberSpec::Kind::rational || spec.kind == NumberSpec::Kind::finite_cf;
}

void fill_quotients(Report& rep, const NumberSpec& spec, std::size_t depth) {
    const CFExpansion cf = expansion_of(spec, depth);
    const std::size_t have = cf.available(depth);
    rep.quotients.push_back(cf.integer_part());
    for (std::size_t i = 1; i <= have; ++i) rep.quotients.push_back(cf.quotient(i));
    for (const auto& m : convergents(cf, have)) {
        // shift by a0 so p/q approximates the number itself, not its
        // fractional part
        rep.convergents.emplace_back(m.p + cf.integer_part() * m.q, m.q);
    }
}

void run_construct(Report& rep, const NumberSpec& spec, const Options& opt) {
    if (opt.depth < 1) throw CLI::ValidationError("--depth", "must be >= 1");
    const std::size_t depth = static_cast<std::size_t>(opt.depth);
    rep.rational_target = is_rational_kind(spec);
    rep.value = value_of(spec, 96);
    fill_quotients(rep, spec, depth);
    if (spec.kind == NumberSpec::Kind::extremal) {
        const ExtremalSpec es(spec.fib_a, spec.fib_b);
        if (opt.depth >= 2) {
            rep.triples = triple_sequence(es, opt.depth);
            rep.growth = growth_stats(es, opt.depth);
        }
        const SigmaSpec sigma_spec{{}, {spec.fib_a, spec.fib_b}};
        const RatInterval sg = sigma_of(sigma_spec, make_rational(Int(1), pow2(64)));
        const auto t13 = theorem13_exponents(sg);
        rep.notes.push_back("sigma(a,b) ~ " + to_decimal_string(sg.midpoint(), 15) +
                            ": predicted lambda_2 ~ " + t13.lambda2.to_string(15) +
                            ", w_2 ~ " + t13.w2.to_string(15) + ", lambda_hat_2 ~ " +
                            t13.lambda2_hat.to_string(15) + ", w_hat_2 ~ " +
                            t13.w2_hat.to_string(15));
    }
    if (spec.kind == NumberSpec::Kind::rational)
        rep.values.emplace_back("target", spec.rat);
    if (spec.kind == NumberSpec::Kind::finite_cf)
        rep.values.emplace_back("target",
                                CFExpansion::finite(spec.cf_a0, spec.cf_terms).exact_value());
}

void run_estimate(Report& rep, const NumberSpec& spec, const Options& opt) {
    rep.rational_target = is_rational_kind(spec);
    if (rep.rational_target) {
        rep.notes.push_back("target is rational; approximation exponents are not defined "
                            "(every best error is eventually exactly zero)");
        return;
    }
    const OracleConfig ocfg{opt.precision_bits, opt.ceiling_bits};
    const EstimateMethod method =
        opt.method == "slope" ? EstimateMethod::slope : EstimateMethod::pointwise;

    MinimalPointSeq seq;
    std::string label;
    if (opt.form == "triples") {
        if (spec.kind != NumberSpec::Kind::extremal)
            throw CLI::ValidationError("--form", "triples requires a fib:<a>,<b> target");
        const long depth = opt.depth > 2 ? opt.depth : 25;
        seq = triples_as_minimal_points(
            triple_sequence(ExtremalSpec(spec.fib_a, spec.fib_b), depth));
        label = "triples(depth " + std::to_string(depth) + ")";
    } else {
        const RealEntry entry = entry_of(spec);
        long n = opt.n;
        TargetSystem sys = TargetSystem::power_row(entry, 1);
        if (opt.form == "linear") {
            n = 1;
            label = "linear";
        } else if (opt.form == "row") {
            if (n == 0) n = 2;
            sys = TargetSystem::power_row(entry, static_cast<std::size_t>(n));
            label = "row(n=" + std::to_string(n) + ")";
        } else if (opt.form == "column") {
            if (n == 0) n = 2;
            sys = TargetSystem::power_column(entry, static_cast<std::size_t>(n));
            label = "column(n=" + std::to_string(n) + ")";
        } else {
            throw CLI::ValidationError("--form", "expected linear, row, column or triples");
        }
        seq = minimal_points(sys, opt.xmax, ocfg);
    }
    if (seq.rational_target) {
        rep.rational_target = true;
        rep.notes.push_back("the sweep certified an exactly rational form; exponents degenerate");
        rep.sequences.emplace_back(label, seq);
        return;
    }
    rep.estimates.emplace_back(label, estimate_exponents(seq, opt.burn_in, method));
    rep.sequences.emplace_back(label, seq);
}

XReal parse_xreal(const std::string& text) {
    if (text == "inf") return XReal::infinity();
    return XReal(rational_from_string(text));
}

void run_direct_check(Report& rep, const Options& opt) {
    if (opt.ids.size() != 1)
        throw CLI::ValidationError("--ids", "direct mode (--scalar) needs exactly one id");
    CheckInputs in;
    for (const auto& assignment : opt.scalar_args) {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--scalar", "expected name=value, got '" + assignment + "'");
        in.scalars[assignment.substr(0, eq)] = parse_xreal(assignment.substr(eq + 1));
    }
    if (!opt.tolerance.empty()) in.tolerance = rational_from_string(opt.tolerance);
    in.n = opt.n;
    in.m = opt.m;
    in.d = opt.d;
    rep.checks.push_back(run_check(opt.ids.front(), in));
}

void run_check_cmd(Report& rep, const NumberSpec* spec, const Options& opt) {
    for (const auto& id : opt.ids) check_spec(id);  // reject unknown ids as usage errors
    if (!opt.scalar_args.empty()) {
        run_direct_check(rep, opt);
        return;
    }
    if (!spec) throw CLI::ValidationError("spec", "a number spec is required without --scalar");
    SuiteConfig cfg;
    cfg.burn_in = opt.burn_in;
    cfg.oracle = OracleConfig{opt.precision_bits, opt.ceiling_bits};
    if (!opt.tolerance.empty()) {
        const Rational tol = rational_from_string(opt.tolerance);
        cfg.tol_ordinary = tol;
        cfg.tol_uniform = tol;
    }
    SuiteReport suite = run_suite(spec->target(), opt.xmax, cfg);
    rep.rational_target = suite.rational_target;
    rep.notes.insert(rep.notes.end(), suite.notes.begin(), suite.notes.end());
    if (opt.ids.empty()) {
        rep.checks = std::move(suite.results);
        return;
    }
    for (auto& r : suite.results)
        if (std::find(opt.ids.begin(), opt.ids.end(), r.id) != opt.ids.end())
            rep.checks.push_back(std::move(r));
    if (rep.checks.empty())
        rep.notes.push_back("none of the requested checks applies to this target");
}

void run_report_cmd(Report& rep, const NumberSpec& spec, const Options& opt) {
    Options copt = opt;
    copt.depth = spec.kind == NumberSpec::Kind::extremal ? 25 : 12;
    run_construct(rep, spec, copt);
    if (!is_rational_kind(spec)) {
        Options eopt = opt;
        eopt.form = "linear";
        eopt.method = spec.kind == NumberSpec::Kind::extremal ? "pointwise" : "slope";
        run_estimate(rep, spec, eopt);
        if (spec.kind == NumberSpec::Kind::extremal) {
            eopt.form = "row";
            run_estimate(rep, spec, eopt);
            eopt.form = "column";
            run_estimate(rep, spec, eopt);
            eopt.form = "triples";
            run_estimate(rep, spec, eopt);
        }
    }
    Options kopt = opt;
    kopt.ids.clear();
    kopt.scalar_args.clear();
    run_check_cmd(rep, &spec, kopt);
}

std::string render(const Report& rep, const std::string& format) {
    if (format == "json") return rep.render_json();
    if (format == "csv") return rep.render_csv();
    if (format == "text") return rep.render_text();
    throw CLI::ValidationError("--format", "expected json, csv or text");
}

int deliver(Report& rep, const Options& opt, const std::string& default_format,
            std::chrono::steady_clock::time_point t0) {
    if (opt.wall_clock)
        rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    const std::string format = opt.format.empty() ? default_format : opt.format;
    const std::string text = render(rep, format);
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) throw CLI::ValidationError("--output", "cannot open '" + opt.output + "'");
        out << text;
    }
    return dio::cli::exit_code_for(rep.checks);
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format: text, json or csv");
    cmd->add_option("--output", opt.output, "write the report to a file instead of stdout");
    cmd->add_option("--precision-bits", opt.precision_bits,
                    "starting precision for certified comparisons")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--ceiling-bits", opt.ceiling_bits,
                    "precision ceiling (0 = derive from the instance)");
    cmd->add_flag("--wall-clock", opt.wall_clock,
                  "include wall-clock milliseconds (breaks byte-determinism)");
}

}  // namespace

int main(int argc, char** argv) {
    const auto t0 = std::chrono::steady_clock::now();
    CLI::App app{"Diophantine approximation workbench: extremal numbers, certified "
                 "best-approximation search, exponent estimates and transference checks"};
    app.set_version_flag("--version", std::string("dioph ") + dio::cli::kToolVersion);
    app.require_subcommand(1);

    Options opt;

    auto* construct = app.add_subcommand(
        "construct", "emit quotients, value, convergents (and triples, Q_n, growth for fib)");
    construct->add_option("spec", opt.spec_text, "number spec, e.g. fib:1,2")->required();
    construct->add_option("--depth", opt.depth, "quotients / triple index / growth rows");
    add_common(construct, opt);

    auto* estimate =
        app.add_subcommand("estimate", "estimate ordinary and uniform exponents from a sweep");
    estimate->add_option("spec", opt.spec_text, "number spec")->required();
    estimate->add_option("--form", opt.form, "system: linear, row, column or triples");
    estimate->add_option("--n", opt.n, "power-system dimension (row/column forms)");
    estimate->add_option("--xmax", opt.xmax, "sweep bound");
    estimate->add_option("--method", opt.method, "pointwise or slope")
        ->check(CLI::IsMember({"pointwise", "slope"}));
    estimate->add_option("--burn-in", opt.burn_in, "leading records to drop");
    estimate->add_option("--depth", opt.depth, "triple depth for --form triples");
    add_common(estimate, opt);

    auto* check = app.add_subcommand("check", "run registry checks against a target or scalars");
    check->add_option("spec", opt.spec_text, "number spec (omit with --scalar)");
    check->add_option("--ids", opt.ids, "comma-separated registry ids")->delimiter(',');
    check->add_option("--xmax", opt.xmax, "sweep bound for the suite");
    check->add_option("--tolerance", opt.tolerance,
                      "tolerance for estimate-based checks (rational or decimal)");
    check->add_option("--burn-in", opt.burn_in, "leading records to drop in estimates");
    check->add_option("--scalar", opt.scalar_args,
                      "name=value input for a single check (value rational, decimal or inf)");
    check->add_option("--n", opt.n, "dimension parameter for scalar checks");
    check->add_option("--m", opt.m, "dimension parameter for scalar checks");
    check->add_option("--d", opt.d, "algebraic degree for scalar checks");
    add_common(check, opt);

    auto* report = app.add_subcommand("report", "full document: construct + estimates + checks");
    report->add_option("spec", opt.spec_text, "number spec")->required();
    report->add_option("--xmax", opt.xmax, "sweep bound");
    report->add_option("--burn-in", opt.burn_in, "leading records to drop in estimates");
    add_common(report, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        Report rep;
        rep.config = ReportConfig{opt.precision_bits, opt.ceiling_bits, opt.burn_in,
                                  opt.wall_clock};
        rep.input = opt.spec_text;

        NumberSpec spec;
        const bool have_spec = !opt.spec_text.empty();
        if (have_spec) spec = dio::cli::parse_number_spec(opt.spec_text);

        if (construct->parsed()) {
            rep.command = "construct";
            run_construct(rep, spec, opt);
            return deliver(rep, opt, "text", t0);
        }
        if (estimate->parsed()) {
            rep.command = "estimate";
            run_estimate(rep, spec, opt);
            return deliver(rep, opt, "text", t0);
        }
        if (check->parsed()) {
            rep.command = "check";
            run_check_cmd(rep, have_spec ? &spec : nullptr, opt);
            return deliver(rep, opt, "text", t0);
        }
        rep.command = "report";
        run_report_cmd(rep, spec, opt);
        return deliver(rep, opt, "json", t0);
    } catch (const dio::cli::SpecParseError& e) {
        std::cerr << "bad number spec: " << e.what() << "\n  " << opt.spec_text << "\n  "
                  << std::string(e.position, ' ') << "^\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const dio::InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
