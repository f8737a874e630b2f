#include "cli.hpp"

#include "balkit/convolutions.hpp"
#include "balkit/errors.hpp"
#include "balkit/genfunc.hpp"
#include "balkit/sequences.hpp"
#include "balkit/tail_floors.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "sweeps.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

namespace balkit::cli {

namespace {

struct Common {
    std::string format = "text";
    int jobs = 0;
    std::string output;
    bool verbose = false;

    bool json() const { return format == "json"; }
};

// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SequenceId parse_family(const std::string& name, std::optional<long> a) {
    if (name == "G") {
        if (!a) throw UsageError("family G needs --a");
        return SequenceId::gen_fibonacci(*a);
    }
    if (a) throw UsageError("--a applies to family G only");
    if (name == "B") return SequenceId::balancing();
    if (name == "C") return SequenceId::lucas_balancing();
    if (name == "F") return SequenceId::fibonacci();
    if (name == "L") return SequenceId::lucas();
    throw UsageError("unknown family '" + name + "' (expected B, C, F, L or G)");
}

ConvFamily parse_conv_family(const std::string& name) {
    if (name == "B") return ConvFamily::balancing;
    if (name == "C") return ConvFamily::lucas_balancing;
    if (name == "F") return ConvFamily::fibonacci;
    if (name == "L") return ConvFamily::lucas;
    throw UsageError("unknown family '" + name + "' (expected B, C, F or L)");
}

std::string join(const std::vector<long>& xs) {
    std::string s;
    for (long x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

// ---- seq

struct SeqArgs {
    std::string family;
    long from = 0;
    long to = 0;
    std::optional<long> a;
};

int cmd_seq(const SeqArgs& args, Report& report, std::ostream& out, const Common& common) {
    const SequenceId seq = parse_family(args.family, args.a);
    if (args.from > args.to) throw UsageError("--from must not exceed --to");
    report.parameters() = {{"family", seq.name()}, {"from", args.from}, {"to", args.to}};
    const auto terms = stream(seq, args.from, args.to);
    for (const auto& t : terms) report.add({{"n", t.n}, {"value", big(t.v)}}, true);
    if (!common.json()) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (common.verbose) out << seq.name() << "_" << terms[i].n << " = " << terms[i].v << "\n";
            else out << (i ? " " : "") << terms[i].v;
        }
        if (!common.verbose) out << "\n";
    }
    return exit_ok;
}

// ---- identity

struct IdentityArgs {
    std::string name;
    std::optional<long> max;
    std::optional<long> max_prime;
};

int cmd_identity(const IdentityArgs& args, Report& report, std::ostream& out, const Common& common) {
    const IdentityEntry* entry = find_identity(args.name);
    if (!entry) {
        std::string names;
        for (const auto& e : identity_catalog()) names += (names.empty() ? "" : ", ") + e.name;
        throw UsageError("unknown identity '" + args.name + "'; known: " + names);
    }
    if (entry->prime_bound && args.max) throw UsageError(args.name + " takes --max-prime, not --max");
    if (!entry->prime_bound && args.max_prime) throw UsageError(args.name + " takes --max, not --max-prime");
    const long max = entry->prime_bound ? args.max_prime.value_or(entry->default_max)
                                        : args.max.value_or(entry->default_max);
    report.parameters() = {{"identity", entry->name}, {entry->prime_bound ? "max_prime" : "max", max}};

    const auto grid = entry->grid(max);
    std::vector<Verdict> verdicts(grid.size());
    parallel_for(grid.size(), resolve_jobs(common.jobs), [&](std::size_t i) { verdicts[i] = entry->check(grid[i]); });

    for (std::size_t i = 0; i < grid.size(); ++i) {
        report.add(verdict_json(grid[i], verdicts[i]), verdicts[i].holds);
        if (common.json()) continue;
        const Verdict& v = verdicts[i];
        if (!v.holds)
            out << "FAIL (" << join(grid[i]) << "): " << v.witness->relation << ": " << v.witness->lhs
                << " != " << v.witness->rhs << "\n";
        else if (common.verbose)
            out << "ok   (" << join(grid[i]) << ")\n";
    }
    if (!common.json())
        out << entry->name << ": passed " << report.passed() << "/" << report.checked() << "\n";
    return report.failed() ? exit_mismatch : exit_ok;
}

// ---- conv

struct ConvArgs {
    std::string family;
    long k = 0;
    long r = 0;
    long n = 0;
    std::string method = "both";
};

int cmd_conv(const ConvArgs& args, Report& report, std::ostream& out, const Common& common) {
    const ConvFamily fam = parse_conv_family(args.family);
    const ConvParams p{args.k, args.r, args.n};
    validate(p);
    report.parameters() = {{"family", to_string(fam)}, {"k", p.k}, {"r", p.r}, {"n", p.n}, {"method", args.method}};

    Json item = {{"family", to_string(fam)}, {"k", p.k}, {"r", p.r}, {"n", p.n}};
    std::optional<BigInt> brute, closed;
    if (args.method != "closed") brute = brute_conv(fam, p);
    if (args.method != "brute") {
        try {
            closed = conv_closed(fam, p);
        } catch (const ConsistencyError& e) {
            item["error"] = e.what();
        }
    }
    if (brute) item["brute"] = big(*brute);
    if (closed) item["closed"] = big(*closed);
    bool ok = !item.contains("error");
    if (brute && closed) {
        ok = *brute == *closed;
        item["match"] = ok;
    }
    report.add(item, ok);

    if (!common.json()) {
        if (common.verbose) out << to_string(fam) << " k=" << p.k << " r=" << p.r << " n=" << p.n << "\n";
        if (brute) out << "brute  " << *brute << "\n";
        if (closed) out << "closed " << *closed << "\n";
        if (item.contains("error")) out << "closed form failed: " << item["error"].get<std::string>() << "\n";
        if (item.contains("match")) out << (ok ? "match" : "MISMATCH") << "\n";
    }
    return ok ? exit_ok : exit_mismatch;
}

// ---- tailfloor

struct TailArgs {
    std::string spec;
    long n = 0;
    long l = 1;
    long a = 1;
    std::string mode = "certify";
    long budget = default_term_budget;
    std::string bracket = "ratio-tail";
};

int cmd_tailfloor(const TailArgs& args, Report& report, std::ostream& out, const Common& common) {
    const TailSpec spec = TailSpec::parse(args.spec, args.l, args.a);
    const BracketMethod method =
        args.bracket == "partial-sums" ? BracketMethod::partial_sums : BracketMethod::ratio_tail;
    report.parameters() = {{"spec", spec.name()}, {"n", args.n},          {"mode", args.mode},
                           {"budget", args.budget}, {"bracket", args.bracket}};
    if (args.n < 1) throw RangeError(spec.name() + ": n must be >= 1");

    Json item = {{"spec", spec.name()}, {"n", args.n}};
    std::optional<FloorResult> closed;
    std::optional<CertifiedFloor> cert;
    std::optional<std::string> undecided;

    if (args.mode != "verified") {
        closed = closed_floor(spec, args.n);
        item["closed"] = big(closed->value);
        const FloorResult printed = printed_floor(spec, args.n);
        if (!(printed == *closed)) item["printed"] = big(printed.value);
    }
    if (args.mode != "closed") {
        try {
            cert = certify_floor(spec, args.n, args.budget, method);
            item["verified"] = big(cert->floor.value);
            item["terms"] = cert->terms;
            item["interval"] = {{"lo", big(cert->interval.lo)}, {"hi", big(cert->interval.hi)}};
        } catch (const UndecidedInterval& e) {
            undecided = e.what();
            item["undecided"] = *undecided;
        }
    }
    bool ok = !undecided;
    if (closed && cert) {
        ok = closed->value == cert->floor.value;
        item["match"] = ok;
    }
    report.add(item, ok);

    if (!common.json()) {
        out << spec.name() << " n=" << args.n << "\n";
        if (closed) out << "closed   " << closed->value << "\n";
        if (item.contains("printed"))
            out << "note     originally stated form gives " << item["printed"].get<std::string>() << "\n";
        if (cert) {
            out << "verified " << cert->floor.value << "  (" << cert->terms << " terms, tail in ["
                << approx(cert->interval.lo) << ", " << approx(cert->interval.hi) << "])\n";
            if (common.verbose)
                out << "lo = " << cert->interval.lo << "\nhi = " << cert->interval.hi << "\n";
        }
        if (undecided) out << "UNDECIDED: " << *undecided << "\n";
        if (closed && cert) out << (ok ? "match" : "MISMATCH") << "\n";
    }
    return ok ? exit_ok : exit_mismatch;
}

// ---- gf

struct GfArgs {
    std::string family;
    long k = 0;
    long r = 0;
    long terms = 10;
};

int cmd_gf(const GfArgs& args, Report& report, std::ostream& out, const Common& common) {
    const ConvFamily fam = parse_conv_family(args.family);
    const SequenceId seq = sequence_of(fam);
    report.parameters() = {{"family", seq.name()}, {"k", args.k}, {"r", args.r}, {"terms", args.terms}};
    const RationalGF g = gf(seq, args.k, args.r);
    const auto series = expand(g, static_cast<std::size_t>(args.terms));

    Json coeffs = Json::array();
    bool ok = true;
    for (long n = 0; n < args.terms; ++n) {
        coeffs.push_back(big(series.coeffs[n]));
        if (series.coeffs[n] != term(seq, args.k * n + args.r)) ok = false;
    }
    report.add({{"family", seq.name()},
                {"k", args.k},
                {"r", args.r},
                {"gf", g.to_string()},
                {"coefficients", coeffs},
                {"match", ok}},
               ok);

    if (!common.json()) {
        out << g.to_string() << "\n";
        for (long n = 0; n < args.terms; ++n) out << (n ? " " : "") << series.coeffs[n];
        out << "\n" << (ok ? "match" : "MISMATCH") << "\n";
    }
    return ok ? exit_ok : exit_mismatch;
}

// ---- verify-all

int cmd_verify_all(double budget_seconds, Report& report, std::ostream& out, const Common& common) {
    report.parameters() = {{"budget_seconds", budget_seconds}};
    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(budget_seconds));
    const auto outcomes = run_groups(verify_all_groups(), resolve_jobs(common.jobs), deadline);
    bool ok = true;
    for (const auto& o : outcomes) {
        Json item = {{"group", o.name}, {"checked", o.checked}, {"passed", o.passed},
                     {"failed", o.failed}, {"skipped", o.skipped}};
        if (o.first_failure) item["first_failure"] = *o.first_failure;
        report.add(item, o.ok());
        ok = ok && o.ok();
        if (common.json()) continue;
        out << (o.ok() ? "PASS " : "FAIL ") << o.name << ": passed " << o.passed << "/" << o.checked + o.skipped;
        if (o.skipped) out << " (" << o.skipped << " not run: budget exhausted)";
        out << "\n";
        if (o.first_failure) out << "     first failure: " << *o.first_failure << "\n";
    }
    return ok ? exit_ok : exit_mismatch;
}

void emit(const Report& report, std::ostream& out, const Common& common) {
    const Json j = report.to_json();
    if (common.json()) out << j.dump(2) << "\n";
    if (!common.output.empty()) {
        std::ofstream f(common.output);
        if (!f) throw UsageError("cannot write " + common.output);
        f << j.dump(2) << "\n";
    }
}

}  // namespace

unsigned resolve_jobs(int flag) {
    if (flag > 0) return static_cast<unsigned>(flag);
    if (const char* env = std::getenv("BALKIT_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact balancing-number toolkit"};
    app.name("balkit");
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", common.jobs, "Worker threads (default: BALKIT_JOBS or all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--output", common.output, "Also write the JSON report to this file");
    app.add_flag("--verbose,-v", common.verbose, "Per-item output");

    SeqArgs seq;
    auto* seq_cmd = app.add_subcommand("seq", "Print sequence terms");
    seq_cmd->add_option("family", seq.family, "B, C, F, L or G")->required();
    seq_cmd->add_option("--from", seq.from)->required();
    seq_cmd->add_option("--to", seq.to)->required();
    seq_cmd->add_option("--a", seq.a, "Parameter of G");

    IdentityArgs ident;
    auto* ident_cmd = app.add_subcommand("identity", "Sweep one identity over a range");
    ident_cmd->add_option("name", ident.name)->required();
    ident_cmd->add_option("--max", ident.max, "Upper index bound")->check(CLI::NonNegativeNumber);
    ident_cmd->add_option("--max-prime", ident.max_prime, "Upper prime bound")->check(CLI::NonNegativeNumber);

    ConvArgs conv;
    auto* conv_cmd = app.add_subcommand("conv", "Compare a convolution sum with its closed form");
    conv_cmd->add_option("family", conv.family, "B, C, F or L")->required();
    conv_cmd->add_option("--k", conv.k)->required();
    conv_cmd->add_option("--r", conv.r)->required();
    conv_cmd->add_option("--n", conv.n)->required();
    conv_cmd->add_option("--method", conv.method)->check(CLI::IsMember({"brute", "closed", "both"}));

    TailArgs tail;
    auto* tail_cmd = app.add_subcommand("tailfloor", "Floor of the reciprocal of a reciprocal-sum tail");
    tail_cmd->add_option("spec", tail.spec, "e.g. plain-B, alt-C, alt-sq-B, gf-plain")->required();
    tail_cmd->add_option("--n", tail.n)->required();
    tail_cmd->add_option("--l", tail.l, "Index step of plain-*")->check(CLI::PositiveNumber);
    tail_cmd->add_option("--a", tail.a, "Parameter of gf-*")->check(CLI::PositiveNumber);
    tail_cmd->add_option("--mode", tail.mode)->check(CLI::IsMember({"closed", "verified", "certify"}));
    tail_cmd->add_option("--budget", tail.budget, "Term budget for certification")->check(CLI::PositiveNumber);
    tail_cmd->add_option("--bracket", tail.bracket)->check(CLI::IsMember({"ratio-tail", "partial-sums"}));

    GfArgs gfa;
    auto* gf_cmd = app.add_subcommand("gf", "Generating function of S_{kn+r} and its expansion");
    gf_cmd->add_option("family", gfa.family, "B, C, F or L")->required();
    gf_cmd->add_option("--k", gfa.k)->required();
    gf_cmd->add_option("--r", gfa.r)->required();
    gf_cmd->add_option("--terms", gfa.terms)->check(CLI::PositiveNumber);

    double budget = 600;
    auto* all_cmd = app.add_subcommand("verify-all", "Run every sweep");
    all_cmd->add_option("--budget", budget, "Time cap in seconds")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    Report report(app.get_subcommands().front()->get_name(), args);
    int code = exit_ok;
    try {
        if (*seq_cmd) code = cmd_seq(seq, report, out, common);
        else if (*ident_cmd) code = cmd_identity(ident, report, out, common);
        else if (*conv_cmd) code = cmd_conv(conv, report, out, common);
        else if (*tail_cmd) code = cmd_tailfloor(tail, report, out, common);
        else if (*gf_cmd) code = cmd_gf(gfa, report, out, common);
        else if (*all_cmd) code = cmd_verify_all(budget, report, out, common);
        report.finish();
        emit(report, out, common);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {  // ParameterError
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::out_of_range& e) {  // RangeError
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return exit_mismatch;
    }
    return code;
}

}  // namespace balkit::cli
