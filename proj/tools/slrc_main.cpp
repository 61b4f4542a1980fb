#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "slrc/report.hpp"

namespace {

using namespace slrc;

constexpr int kExitParse = 2;
constexpr int kExitConstruct = 3;
constexpr int kExitBudget = 4;
constexpr int kExitShape = 5;
constexpr int kExitMismatch = 6;

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case Errc::parse_error: return kExitParse;
    case Errc::budget_exceeded: return kExitBudget;
    case Errc::shape_mismatch: return kExitShape;
    default: return kExitConstruct;
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::unknown_format, "cannot write " + path);
    out << text;
}

int cmd_build(const std::string& expr, const std::string& out_path) {
    BuiltCode b = parse_code_expr(expr);
    CodeAnalysis ca = analyze_code(b);
    std::cout << "[" << ca.params.n << ", " << ca.params.k << ", " << ca.d << "]\n";
    if (!out_path.empty())
        write_file(out_path, matrix_to_json(b.code.generator()).dump(2) + "\n");
    return 0;
}

int cmd_analyze(const std::string& expr, int r_override, bool exact_a, std::uint64_t alt_cap,
                std::uint64_t verify_cap) {
    BuiltCode b = parse_code_expr(expr);
    CodeAnalysis ca = analyze_code(b);
    if (r_override >= 0) ca.params.r = static_cast<std::size_t>(r_override);

    AnalysisReport rep;
    rep.n = ca.params.n;
    rep.k = ca.params.k;
    rep.d = ca.d;
    rep.r = ca.params.r;
    rep.t = ca.params.t;
    rep.a_formula = ca.params.a;
    rep.rate = ca.params.rate();
    rep.bounds = check_bounds(ca.params, ca.d);

    std::uint64_t cost = alternativity_scan_cost(rep.n, rep.r);
    if (exact_a && cost > alt_cap)
        throw Error(Errc::budget_exceeded, "alternativity enumeration over budget");
    if (cost <= alt_cap) {
        std::size_t a = alternativity(ca.product.code, rep.r);
        if (a < rep.a_formula)
            throw Error(Errc::parameter_violation, "enumerated alternativity below formula");
        rep.a_exact = a;
    }
    try {
        rep.verified = verify_slrc_exhaustive(ca.product.code, rep.r, rep.t, verify_cap).ok;
    } catch (const Error& e) {
        if (e.code() != Errc::budget_exceeded && e.code() != Errc::out_of_range) throw;
    }
    std::cout << analysis_to_json(rep).dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& expr, std::size_t r, std::size_t t, std::uint64_t budget) {
    BuiltCode b = parse_code_expr(expr);
    VerifyResult v = verify_slrc_exhaustive(b.code, r, t, budget);
    if (v.ok) {
        std::cout << "true\n";
        return 0;
    }
    std::cout << "false witness=[";
    for (std::size_t j = 0; j < v.witness.size(); ++j)
        std::cout << (j ? "," : "") << v.witness[j];
    std::cout << "]\n";
    return 0;
}

int cmd_recover(const std::string& expr, const std::string& pattern_path,
                const std::string& engine, const std::string& trace_path) {
    BuiltCode b = parse_code_expr(expr);
    CodeAnalysis ca = analyze_code(b);
    const ProductCode& pc = ca.product;

    std::ifstream in(pattern_path);
    if (!in) throw Error(Errc::unknown_format, "cannot read " + pattern_path);
    Json pj = Json::parse(in, nullptr, false);
    if (pj.is_discarded()) throw Error(Errc::unknown_format, "invalid pattern JSON");
    std::vector<std::size_t> shape;
    ErasurePattern pattern = pattern_from_json(pj, shape);
    if (shape != pc.shape) throw Error(Errc::shape_mismatch, "pattern shape does not match code");

    // deterministic nonzero probe message
    const Field& f = *pc.code.field();
    std::vector<Elt> msg(pc.code.dim());
    for (std::size_t i = 0; i < msg.size(); ++i)
        msg[i] = static_cast<Elt>(1 + i % (f.order() - 1));
    std::vector<Elt> cw = pc.code.encode(msg);

    ReceivedWord received = apply_erasures(cw, pattern);
    std::pair<ReceivedWord, RecoveryTrace> res =
        (engine == "generic") ? recover_generic(pc.code, received, ca.params.r)
                              : recover_lines(pc, received);
    if (!trace_is_sequential(res.second, pattern))
        throw Error(Errc::parameter_violation, "trace violates sequential order");
    for (std::size_t i = 0; i < cw.size(); ++i)
        if (res.first.known[i] && res.first.values[i] != cw[i])
            throw Error(Errc::parameter_violation, "recovered value disagrees with codeword");

    if (res.second.full)
        std::cout << "full\n";
    else
        std::cout << "partial " << res.second.residual.size() << "\n";
    if (!trace_path.empty()) write_file(trace_path, trace_to_json(res.second).dump(2) + "\n");
    return 0;
}

int cmd_classify(std::size_t n, std::size_t k, std::size_t d, std::size_t ell, std::uint64_t mu) {
    std::cout << to_string(classify_regime(n, k, d, ell, mu)) << "\n";
    return 0;
}

int cmd_tables(const std::string& which, const std::string& format) {
    EmitFormat fmt = parse_format(format);
    std::vector<int> selected;
    bool rate = false;
    if (which == "all") {
        selected = {1, 2, 3, 4};
        rate = true;
    } else if (which == "5") {
        rate = true;
    } else if (which.size() == 1 && which[0] >= '1' && which[0] <= '4') {
        selected = {which[0] - '0'};
    } else {
        std::cerr << "tables: --which must be 1..5 or all\n";
        return 1;
    }

    bool mismatch = false;
    for (int t : selected) {
        std::vector<CatalogEntry> entries = build_catalog(t);
        std::cout << emit_catalog(entries, fmt);
        for (const CatalogEntry& e : entries)
            if (!e.match) {
                mismatch = true;
                std::cerr << "mismatch: " << e.construction << " -> [" << e.n << ", " << e.dim
                          << ", " << e.d << "] t=" << e.t << " a=" << e.a << " (reference ["
                          << e.ref_n << ", " << e.k_group << ", " << e.ref_d
                          << "] t=" << e.ref_t << " a=" << e.ref_a << ")"
                          << (e.error.empty() ? "" : " error=" + e.error) << "\n";
            }
    }
    if (rate) std::cout << emit_rate(rate_table(2, 10), fmt);
    return mismatch ? kExitMismatch : 0;
}

int cmd_ratecmp(std::size_t r, std::size_t tmax, const std::string& format) {
    std::cout << emit_rate(rate_table(r, tmax), parse_format(format));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequential locally recoverable codes from tensor products"};
    app.require_subcommand(1);

    std::string expr, out_path, pattern_path, trace_path;
    std::string engine = "lines", format = "csv", which = "all";
    int r_override = -1;
    bool exact_a = false;
    std::size_t r = 0, t = 0, n = 0, k = 0, d = 0, ell = 1, tmax = 10;
    std::uint64_t mu = 0;
    std::uint64_t subset_budget = 10000000ULL;
    std::uint64_t alt_cap = kAltScanCap;
    std::uint64_t verify_cap = 10000000ULL;

    auto* build = app.add_subcommand("build", "construct a code and print [n, k, d]");
    build->add_option("expr", expr)->required();
    build->add_option("--out", out_path, "write generator matrix JSON");

    auto* analyze = app.add_subcommand("analyze", "emit the JSON analysis report");
    analyze->add_option("expr", expr)->required();
    analyze->add_option("--r", r_override, "override the derived locality");
    analyze->add_flag("--exact-a", exact_a, "fail instead of skipping exact alternativity");
    analyze->add_option("--alt-cap", alt_cap, "alternativity scan budget");
    analyze->add_option("--verify-cap", verify_cap, "erasure-set budget for verification");

    auto* verify = app.add_subcommand("verify", "exhaustive sequential-recoverability check");
    verify->add_option("expr", expr)->required();
    verify->add_option("--r", r)->required();
    verify->add_option("--t", t)->required();
    verify->add_option("--budget", subset_budget, "erasure-set budget");

    auto* recover = app.add_subcommand("recover", "repair an erasure pattern");
    recover->add_option("expr", expr)->required();
    recover->add_option("--pattern", pattern_path)->required()->check(CLI::ExistingFile);
    recover->add_option("--engine", engine)->check(CLI::IsMember({"lines", "generic"}));
    recover->add_option("--trace", trace_path, "write trace JSON");

    auto* classify = app.add_subcommand("classify", "erasure-count regime of an l-fold product");
    classify->add_option("--n", n)->required();
    classify->add_option("--k", k)->required();
    classify->add_option("--d", d)->required();
    classify->add_option("--ell", ell)->required();
    classify->add_option("--mu", mu)->required();

    auto* tables = app.add_subcommand("tables", "emit the construction catalog / rate table");
    tables->add_option("--which", which, "1..5 or all");
    tables->add_option("--format", format)->check(CLI::IsMember({"markdown", "csv", "json"}));

    auto* ratecmp = app.add_subcommand("ratecmp", "achieved rate vs reference formulas");
    ratecmp->add_option("--r", r)->required();
    ratecmp->add_option("--tmax", tmax)->required();
    ratecmp->add_option("--format", format)->check(CLI::IsMember({"markdown", "csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(expr, out_path);
        if (analyze->parsed()) return cmd_analyze(expr, r_override, exact_a, alt_cap, verify_cap);
        if (verify->parsed()) return cmd_verify(expr, r, t, subset_budget);
        if (recover->parsed()) return cmd_recover(expr, pattern_path, engine, trace_path);
        if (classify->parsed()) return cmd_classify(n, k, d, ell, mu);
        if (tables->parsed()) return cmd_tables(which, format);
        if (ratecmp->parsed()) return cmd_ratecmp(r, tmax, format);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
