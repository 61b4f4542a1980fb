#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slrc/report.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

using namespace slrc;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SLRC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

const CatalogEntry* find_row(const std::vector<CatalogEntry>& rows, const std::string& con) {
    for (const auto& e : rows)
        if (e.construction == con) return &e;
    return nullptr;
}

} // namespace

TEST_CASE("analyze_code summarizes factors and product") {
    auto ca = analyze_code(parse_code_expr("P(3) x D(3,3)"));
    CHECK(ca.params.n == 12);
    CHECK(ca.params.k == 4);
    CHECK(ca.params.r == 2);
    CHECK(ca.params.t == 5);
    CHECK(ca.params.a == 4);
    CHECK(ca.d == 6);
    REQUIRE(ca.factors.size() == 2);
    CHECK(ca.factors[0].r == 2);
    CHECK(ca.factors[0].a == 3);
    CHECK(ca.factors[1].a == 1);
    CHECK(ca.factors[1].t == 1);
}

TEST_CASE("factors of unequal locality are lifted to the maximum") {
    auto ca = analyze_code(parse_code_expr("R(5,5,3) x R(5,4,2)"));
    CHECK(ca.params.r == 3);
    CHECK(ca.factors[0].r == 3);
    CHECK(ca.factors[1].r == 2);
    // factor alternativities at their own radii; widening can only add supports
    CHECK(ca.params.a == 4 + 3);
    CHECK(ca.params.a_tag == Tag::lower_bound);
    CHECK(alternativity(ca.product.code, 3) >= ca.params.a);
}

TEST_CASE("catalog has the expected table sizes") {
    auto all = build_catalog();
    std::map<int, int> sizes;
    for (const auto& e : all) ++sizes[e.table];
    CHECK(sizes[1] == 19);
    CHECK(sizes[2] == 16);
    CHECK(sizes[3] == 17);
    CHECK(sizes[4] == 11);
    CHECK(all.size() == 63);
    for (const auto& e : all) CHECK(e.error.empty());
    CHECK(build_catalog(2).size() == 16);
}

TEST_CASE("spot-checked catalog rows carry exact parameters") {
    auto t1 = build_catalog(1);
    const auto* row = find_row(t1, "P(3) x D(3,3)");
    REQUIRE(row != nullptr);
    CHECK(row->n == 12);
    CHECK(row->dim == 4);
    CHECK(row->d == 6);
    CHECK(row->t == 5);
    CHECK(row->a == 4);
    CHECK(row->r == 2);
    CHECK(row->ell == 2);
    CHECK(row->match);

    const auto* bch = find_row(t1, "D(3,3) x punct(B(3,8,4); 1,5)");
    REQUIRE(bch != nullptr);
    CHECK(bch->n == 18);
    CHECK(bch->d == 4);
    CHECK(bch->match);
}

TEST_CASE("every mismatching catalog row is a known reference discrepancy") {
    auto all = build_catalog();
    std::vector<const CatalogEntry*> bad;
    for (const auto& e : all)
        if (!e.match) bad.push_back(&e);
    REQUIRE(bad.size() == 5);

    // one reference row lists a length its own construction cannot produce
    const auto* len = bad[0];
    for (const auto* e : bad)
        if (e->table == 3) len = e;
    CHECK(len->table == 3);
    CHECK(len->ref_n == 96);
    CHECK(len->n == 120);

    // four rows with a punctured-BCH factor: its alternativity is 4, the
    // reference tallies assume 3, so each sum lands one short
    int off_by_one = 0;
    for (const auto* e : bad)
        if (e->table == 4 && e->a == e->ref_a + 1) ++off_by_one;
    CHECK(off_by_one == 4);

    // everything q=3 reproduces exactly
    for (const auto* e : bad) CHECK(e->q == 5);
}

TEST_CASE("rate table for locality two") {
    auto rows = rate_table(2, 10);
    REQUIRE(rows.size() == 10);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> expect = {
        {2, 3}, {1, 2}, {4, 9}, {1, 3}, {1, 3}, {8, 27}, {8, 27}, {1, 4}, {2, 9}, {2, 9}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].t == i + 1);
        CHECK(rows[i].rate_num == expect[i].first);
        CHECK(rows[i].rate_den == expect[i].second);
        // both comparison formulas, as exact rationals
        CHECK(rows[i].frac_num * (2 + rows[i].t) == 2 * rows[i].frac_den);
        std::uint64_t p2 = 1, p3 = 1;
        for (std::size_t e = 0; e < rows[i].t; ++e) p2 *= 2, p3 *= 3;
        CHECK(rows[i].pow_num * p3 == rows[i].pow_den * p2);
        CHECK(rows[i].witness_t >= rows[i].t);
        // the whole point: products beat the r/(r+t) rate from t = 3 on
        if (rows[i].t >= 3) CHECK(rows[i].rate_num * rows[i].frac_den >=
                                  rows[i].frac_num * rows[i].rate_den);
    }
    CHECK(rows[0].witness == "D(3,3)");
    CHECK(rows[1].witness == "P(3)");
}

TEST_CASE("emitters are deterministic and format-complete") {
    auto rows = build_catalog(1);
    CHECK(emit_catalog(rows, EmitFormat::csv) == emit_catalog(rows, EmitFormat::csv));
    auto csv = emit_catalog(rows, EmitFormat::csv);
    CHECK(csv.rfind("q,k,r,ell,n,dim,d,t,a,a_tag,rate,construction,match", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 20); // header + 19 rows

    auto md = emit_catalog(rows, EmitFormat::markdown);
    CHECK(md.find("| ") != std::string::npos);
    auto j = Json::parse(emit_catalog(rows, EmitFormat::json));
    REQUIRE(j.is_array());
    CHECK(j.size() == 19);
    CHECK(j[0].contains("construction"));

    auto rcsv = emit_rate(rate_table(2, 3), EmitFormat::csv);
    CHECK(rcsv.rfind("t,rate,witness,witness_t,frac_bound,geo_bound", 0) == 0);
    CHECK(parse_format("csv") == EmitFormat::csv);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("cli build prints parameters and writes generators") {
    auto r = run_cli("build \"P(3) x D(3,3)\"");
    CHECK(r.status == 0);
    CHECK(r.out == "[12, 4, 6]\n");

    std::string path = std::string(SLRC_FIXTURE_DIR) + "/_tmp_gen.json";
    auto w = run_cli("build \"P(3)\" --out " + path);
    CHECK(w.status == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    Json j;
    in >> j;
    CHECK(matrix_from_json(j) == make_P(3).generator());
    std::remove(path.c_str());
}

TEST_CASE("cli exit codes distinguish failure classes") {
    CHECK(run_cli("build \"P(3\"").status == 2);
    CHECK(run_cli("build \"R(5,9,2)\"").status == 3);
    CHECK(run_cli("verify \"D(3,3) x D(3,3)\" --r 2 --t 8 --budget 3").status == 4);
}

TEST_CASE("cli analyze emits the full report") {
    auto r = run_cli("analyze \"P(3) x D(3,3)\"");
    REQUIRE(r.status == 0);
    auto j = Json::parse(r.out);
    CHECK(j["n"] == 12);
    CHECK(j["k"] == 4);
    CHECK(j["d"] == 6);
    CHECK(j["r"] == 2);
    CHECK(j["t"] == 5);
    CHECK(j["a_formula"] == 4);
    CHECK(j["a_exact"] == 4);
    CHECK(j["verified"] == true);
    CHECK(j["bounds"]["singleton_like"] == true);
}

TEST_CASE("cli verify reports witnesses") {
    auto ok = run_cli("verify \"P(3) x D(3,3)\" --r 2 --t 5");
    CHECK(ok.status == 0);
    CHECK(ok.out == "true\n");
    auto no = run_cli("verify \"P(3) x D(3,3)\" --r 2 --t 6");
    CHECK(no.status == 0);
    CHECK(no.out.rfind("false witness=[", 0) == 0);
}

TEST_CASE("cli recover handles the fixture patterns") {
    std::string fx = SLRC_FIXTURE_DIR;
    auto full = run_cli("recover \"R(5,5,2) x R(5,5,2)\" --pattern " + fx +
                        "/grid_iterative.json --engine lines");
    CHECK(full.status == 0);
    CHECK(full.out == "full\n");

    auto part = run_cli("recover \"R(5,5,2) x R(5,5,2)\" --pattern " + fx +
                        "/grid_unrecoverable.json --engine generic");
    CHECK(part.status == 0);
    CHECK(part.out == "partial 16\n");

    auto shape = run_cli("recover \"P(3) x P(3)\" --pattern " + fx + "/grid_iterative.json");
    CHECK(shape.status == 5);

    std::string trace = fx + "/_tmp_trace.json";
    auto tr = run_cli("recover \"R(5,5,2) x R(5,5,2)\" --pattern " + fx +
                      "/grid_sequential_only.json --trace " + trace);
    CHECK(tr.status == 0);
    std::ifstream in(trace);
    REQUIRE(in.good());
    Json j;
    in >> j;
    CHECK(j.is_array());
    CHECK(j.size() == 7);
    std::remove(trace.c_str());
}

TEST_CASE("cli classify names the regime") {
    CHECK(run_cli("classify --n 5 --k 2 --d 4 --ell 2 --mu 6").out == "ParallelGuaranteed\n");
    CHECK(run_cli("classify --n 5 --k 2 --d 4 --ell 2 --mu 15").out ==
          "SequentialGuaranteed\n");
    CHECK(run_cli("classify --n 5 --k 2 --d 4 --ell 2 --mu 16").out == "PatternDependent\n");
    CHECK(run_cli("classify --n 5 --k 2 --d 4 --ell 2 --mu 25").out == "Unrecoverable\n");
}

TEST_CASE("cli tables reproduce where the reference is consistent") {
    auto t1 = run_cli("tables --which 1 --format csv");
    CHECK(t1.status == 0);
    CHECK(std::count(t1.out.begin(), t1.out.end(), '\n') == 20);

    auto t2 = run_cli("tables --which 2 --format csv");
    CHECK(t2.status == 0);

    // these tables contain rows the reference itself states inconsistently
    CHECK(run_cli("tables --which 3 --format csv").status == 6);
    CHECK(run_cli("tables --which 4 --format csv").status == 6);

    CHECK(run_cli("tables --which 5 --format csv").status == 0);
    CHECK(run_cli("tables --which 7").status == 1);
}

TEST_CASE("cli ratecmp emits the comparison") {
    auto r = run_cli("ratecmp --r 2 --tmax 4 --format csv");
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line); // header
    std::getline(in, line);
    CHECK(line.rfind("1,0.67,", 0) == 0);
}
