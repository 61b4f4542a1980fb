#include "slrc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace slrc {

namespace {

struct RowSpec {
    int table;
    std::uint32_t q;
    std::size_t k, r, ell, n, d, t, a;
    const char* expr;
};

// clang-format off
const RowSpec kRows[] = {
    // q = 3
    {1, 3,  4, 2, 2, 16,  9,  8,  6, "P(3) x P(3)"},
    {1, 3,  4, 2, 2, 12,  6,  5,  4, "P(3) x D(3,3)"},
    {1, 3,  4, 2, 2,  9,  4,  3,  2, "D(3,3) x D(3,3)"},
    {1, 3,  6, 3, 2, 16,  6,  5,  4, "P(3) x D(3,4)"},
    {1, 3,  6, 3, 2, 12,  4,  3,  2, "D(3,4) x D(3,3)"},
    {1, 3,  8, 4, 2, 20,  6,  5,  4, "P(3) x D(3,5)"},
    {1, 3,  8, 4, 2, 15,  4,  3,  2, "D(3,5) x D(3,3)"},
    {1, 3,  8, 3, 2, 32, 12, 11,  8, "P(3) x B(3,8,4)"},
    {1, 3,  8, 3, 2, 28,  9,  8,  5, "P(3) x punct(B(3,8,4); 1)"},
    {1, 3,  8, 3, 2, 24,  8,  7,  6, "D(3,3) x B(3,8,4)"},
    {1, 3,  8, 3, 2, 21,  6,  5,  3, "D(3,3) x punct(B(3,8,4); 1)"},
    {1, 3,  8, 3, 2, 18,  4,  3,  3, "D(3,3) x punct(B(3,8,4); 1,5)"},
    {1, 3,  8, 2, 3, 64, 27, 26,  9, "P(3) x P(3) x P(3)"},
    {1, 3,  8, 2, 3, 48, 18, 17,  7, "P(3) x P(3) x D(3,3)"},
    {1, 3,  8, 2, 3, 36, 12, 11,  5, "P(3) x D(3,3) x D(3,3)"},
    {1, 3,  8, 2, 3, 27,  8,  7,  3, "D(3,3) x D(3,3) x D(3,3)"},
    {1, 3,  9, 3, 2, 16,  4,  3,  2, "D(3,4) x D(3,4)"},
    {1, 3, 10, 5, 2, 24,  6,  5,  4, "P(3) x D(3,6)"},
    {1, 3, 10, 5, 2, 18,  4,  3,  2, "D(3,6) x D(3,3)"},
    // q = 5, k in {4, 6}
    {2, 5,  4, 2, 2, 36, 25, 24, 20, "P(5) x P(5)"},
    {2, 5,  4, 2, 2, 30, 20, 19, 16, "P(5) x R(5,5,2)"},
    {2, 5,  4, 2, 2, 25, 16, 15, 12, "R(5,5,2) x R(5,5,2)"},
    {2, 5,  4, 2, 2, 24, 15, 14, 13, "P(5) x R(5,4,2)"},
    {2, 5,  4, 2, 2, 20, 12, 11,  9, "R(5,5,2) x R(5,4,2)"},
    {2, 5,  4, 2, 2, 18, 10,  9, 11, "P(5) x D(5,3)"},
    {2, 5,  4, 2, 2, 16,  9,  8,  6, "R(5,4,2) x R(5,4,2)"},
    {2, 5,  4, 2, 2, 15,  8,  7,  7, "R(5,5,2) x D(5,3)"},
    {2, 5,  4, 2, 2, 12,  6,  5,  4, "R(5,4,2) x D(5,3)"},
    {2, 5,  4, 2, 2,  9,  4,  3,  2, "D(5,3) x D(5,3)"},
    {2, 5,  6, 3, 2, 30, 15, 14, 14, "P(5) x R(5,5,3)"},
    {2, 5,  6, 3, 2, 25, 12, 11, 10, "R(5,5,3) x R(5,5,2)"},
    {2, 5,  6, 3, 2, 24, 10,  9, 11, "P(5) x D(5,4)"},
    {2, 5,  6, 3, 2, 20,  9,  8,  7, "R(5,5,3) x R(5,4,2)"},
    {2, 5,  6, 3, 2, 15,  6,  5,  5, "R(5,5,3) x D(5,3)"},
    {2, 5,  6, 3, 2, 12,  4,  3,  2, "D(5,4) x D(5,3)"},
    // q = 5, k = 8
    {3, 5,  8, 4, 2, 30, 10,  9, 11, "P(5) x D(5,5)"},
    {3, 5,  8, 4, 2, 25,  8,  7,  7, "R(5,5,2) x D(5,5)"},
    {3, 5,  8, 4, 2, 20,  6,  5,  4, "R(5,4,2) x D(5,5)"},
    {3, 5,  8, 4, 2, 15,  4,  3,  2, "D(5,5) x D(5,3)"},
    {3, 5,  8, 2, 3, 100, 48, 47, 15, "R(5,5,2) x R(5,5,2) x R(5,4,2)"},
    {3, 5,  8, 2, 3, 96, 45, 44, 19, "P(5) x R(5,5,2) x R(5,4,2)"},
    {3, 5,  8, 2, 3, 90, 40, 39, 17, "P(5) x R(5,5,2) x D(5,3)"},
    {3, 5,  8, 2, 3, 80, 36, 35, 12, "R(5,5,2) x R(5,4,2) x R(5,4,2)"},
    {3, 5,  8, 2, 3, 75, 32, 31, 13, "R(5,5,2) x R(5,5,2) x D(5,3)"},
    {3, 5,  8, 2, 3, 72, 30, 29, 14, "P(5) x R(5,4,2) x D(5,3)"},
    {3, 5,  8, 2, 3, 64, 27, 26,  9, "R(5,4,2) x R(5,4,2) x R(5,4,2)"},
    {3, 5,  8, 2, 3, 60, 24, 23, 10, "R(5,5,2) x R(5,4,2) x D(5,3)"},
    {3, 5,  8, 2, 3, 54, 20, 19, 12, "P(5) x D(5,3) x D(5,3)"},
    {3, 5,  8, 2, 3, 48, 18, 17,  7, "R(5,4,2) x R(5,4,2) x D(5,3)"},
    {3, 5,  8, 2, 3, 45, 16, 15,  8, "R(5,5,2) x D(5,3) x D(5,3)"},
    {3, 5,  8, 2, 3, 36, 12, 11,  5, "R(5,4,2) x D(5,3) x D(5,3)"},
    {3, 5,  8, 2, 3, 27,  8,  7,  3, "D(5,3) x D(5,3) x D(5,3)"},
    // q = 5, k in {9, 10}
    {4, 5,  9, 3, 2, 25,  9,  8,  8, "R(5,5,3) x R(5,5,3)"},
    {4, 5,  9, 3, 2, 20,  6,  5,  5, "R(5,5,3) x D(5,4)"},
    {4, 5,  9, 3, 2, 16,  4,  3,  2, "D(5,4) x D(5,4)"},
    {4, 5, 10, 5, 2, 42, 10,  9, 13, "P(5) x punct(B(5,8,3); 1)"},
    {4, 5, 10, 5, 2, 36, 10,  9, 11, "P(5) x D(5,6)"},
    {4, 5, 10, 5, 2, 35,  8,  7,  9, "R(5,5,2) x punct(B(5,8,3); 1)"},
    {4, 5, 10, 5, 2, 30,  8,  7,  7, "R(5,5,2) x D(5,6)"},
    {4, 5, 10, 5, 2, 28,  6,  5,  6, "R(5,4,2) x punct(B(5,8,3); 1)"},
    {4, 5, 10, 5, 2, 24,  6,  5,  4, "R(5,4,2) x D(5,6)"},
    {4, 5, 10, 5, 2, 21,  4,  3,  4, "D(5,3) x punct(B(5,8,3); 1)"},
    {4, 5, 10, 5, 2, 18,  4,  3,  2, "D(5,6) x D(5,3)"},
};
// clang-format on

std::string fmt_rate(std::uint64_t num, std::uint64_t den) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

} // namespace

CodeAnalysis analyze_code(const BuiltCode& b) {
    std::vector<FactorAnalysis> fas;
    std::size_t r_common = 0;
    for (const LinearCode& f : b.factors) {
        FactorAnalysis fa;
        fa.r = locality(f);
        fa.a = alternativity(f, fa.r);
        DistanceResult dr = f.min_distance();
        if (!dr.exact) throw Error(Errc::budget_exceeded, "factor distance budget exhausted");
        fa.d = dr.d;
        fa.t = dr.d - 1;
        r_common = std::max(r_common, fa.r);
        fas.push_back(fa);
    }
    std::vector<std::pair<LinearCode, SlrcParams>> parts;
    for (std::size_t j = 0; j < b.factors.size(); ++j) {
        SlrcParams p{b.factors[j].length(), b.factors[j].dim(), r_common,
                     fas[j].t, fas[j].a, Tag::exact};
        parts.push_back({b.factors[j], p});
    }
    auto [pc, params] = product_slrc(parts);
    CodeAnalysis out{std::move(pc), params, 1, std::move(fas)};
    for (const FactorAnalysis& fa : out.factors) out.d *= fa.d;
    out.params.n = out.product.code.length();
    out.params.k = out.product.code.dim();
    return out;
}

std::vector<CatalogEntry> build_catalog(int table) {
    std::vector<CatalogEntry> entries;
    for (const RowSpec& rs : kRows) {
        if (table != 0 && rs.table != table) continue;
        CatalogEntry e;
        e.table = rs.table;
        e.q = rs.q;
        e.k_group = rs.k;
        e.construction = rs.expr;
        e.ref_n = rs.n;
        e.ref_d = rs.d;
        e.ref_t = rs.t;
        e.ref_a = rs.a;
        try {
            CodeAnalysis ca = analyze_code(parse_code_expr(rs.expr));
            e.n = ca.params.n;
            e.dim = ca.params.k;
            e.d = ca.d;
            e.t = ca.params.t;
            e.a = ca.params.a;
            e.a_tag = ca.params.a_tag;
            e.r = ca.params.r;
            e.ell = ca.product.factors.size();
            e.match = e.n == rs.n && e.dim == rs.k && e.d == rs.d && e.t == rs.t && e.a == rs.a &&
                      e.r == rs.r && e.ell == rs.ell;
        } catch (const Error& err) {
            e.error = err.what();
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<RateRow> rate_table(std::size_t r, std::size_t t_max) {
    if (r < 2 || t_max < 1) throw Error(Errc::parameter_violation, "need r >= 2, t_max >= 1");

    // candidate pool: catalog rows at this locality, plus their single
    // factors whose own locality already equals r
    struct Candidate {
        std::size_t n, k, t;
        std::string expr;
    };
    std::vector<Candidate> pool;
    std::vector<std::string> seen;
    for (const RowSpec& rs : kRows) {
        if (rs.r != r) continue;
        pool.push_back({rs.n, rs.k, rs.t, rs.expr});
        BuiltCode b = parse_code_expr(rs.expr);
        for (const LinearCode& f : b.factors) {
            if (std::find(seen.begin(), seen.end(), f.name()) != seen.end()) continue;
            seen.push_back(f.name());
            if (locality(f) != r) continue;
            DistanceResult dr = f.min_distance();
            pool.push_back({f.length(), f.dim(), dr.d - 1, f.name()});
        }
    }

    std::vector<RateRow> rows;
    for (std::size_t t = 1; t <= t_max; ++t) {
        RateRow row;
        row.t = t;
        // a code tolerating t' >= t erasures serves t as well
        for (const Candidate& c : pool) {
            if (c.t < t) continue;
            bool better = row.rate_num == 0 ||
                          c.k * row.rate_den > row.rate_num * c.n ||
                          (c.k * row.rate_den == row.rate_num * c.n && c.t < row.witness_t);
            if (better) {
                std::uint64_t g = std::gcd(c.k, c.n);
                row.rate_num = c.k / g;
                row.rate_den = c.n / g;
                row.witness = c.expr;
                row.witness_t = c.t;
            }
        }
        std::uint64_t g = std::gcd(r, r + t);
        row.frac_num = r / g;
        row.frac_den = (r + t) / g;
        row.pow_num = 1;
        row.pow_den = 1;
        for (std::size_t i = 0; i < t; ++i) {
            row.pow_num *= r;
            row.pow_den *= r + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

EmitFormat parse_format(const std::string& s) {
    if (s == "markdown") return EmitFormat::markdown;
    if (s == "csv") return EmitFormat::csv;
    if (s == "json") return EmitFormat::json;
    throw Error(Errc::unknown_format, "unknown format: " + s);
}

std::string emit_catalog(const std::vector<CatalogEntry>& entries, EmitFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
    case EmitFormat::csv: {
        os << "q,k,r,ell,n,dim,d,t,a,a_tag,rate,construction,match\n";
        for (const CatalogEntry& e : entries) {
            char rate[32];
            std::snprintf(rate, sizeof rate, "%.4f",
                          e.n ? static_cast<double>(e.dim) / e.n : 0.0);
            os << e.q << ',' << e.k_group << ',' << e.r << ',' << e.ell << ',' << e.n << ','
               << e.dim << ',' << e.d << ',' << e.t << ',' << e.a << ','
               << (e.a_tag == Tag::exact ? "exact" : "lower-bound") << ',' << rate << ",\""
               << e.construction << "\"," << (e.match ? "yes" : "no") << '\n';
        }
        break;
    }
    case EmitFormat::markdown: {
        os << "| q | k | r | ell | Code | t | a | Construction |\n";
        os << "|---|---|---|-----|------|---|---|--------------|\n";
        for (const CatalogEntry& e : entries)
            os << "| " << e.q << " | " << e.k_group << " | " << e.r << " | " << e.ell << " | ["
               << e.n << ", " << e.dim << ", " << e.d << "] | " << e.t << " | " << e.a << " | "
               << e.construction << " |\n";
        break;
    }
    case EmitFormat::json: {
        Json arr = Json::array();
        for (const CatalogEntry& e : entries) {
            Json j{{"q", e.q},       {"k", e.k_group},
                   {"r", e.r},       {"ell", e.ell},
                   {"n", e.n},       {"dim", e.dim},
                   {"d", e.d},       {"t", e.t},
                   {"a", e.a},       {"a_tag", e.a_tag == Tag::exact ? "exact" : "lower-bound"},
                   {"rate_num", e.dim}, {"rate_den", e.n},
                   {"construction", e.construction},
                   {"match", e.match}};
            if (!e.error.empty()) j["error"] = e.error;
            arr.push_back(std::move(j));
        }
        os << arr.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

std::string emit_rate(const std::vector<RateRow>& rows, EmitFormat fmt) {
    std::ostringstream os;
    switch (fmt) {
    case EmitFormat::csv: {
        os << "t,rate,witness,witness_t,frac_bound,geo_bound\n";
        for (const RateRow& r : rows)
            os << r.t << ',' << fmt_rate(r.rate_num, r.rate_den) << ",\"" << r.witness << "\","
               << r.witness_t << ',' << fmt_rate(r.frac_num, r.frac_den) << ','
               << fmt_rate(r.pow_num, r.pow_den) << '\n';
        break;
    }
    case EmitFormat::markdown: {
        os << "| t | achieved | r/(r+t) | (r/(r+1))^t | witness |\n";
        os << "|---|----------|---------|-------------|---------|\n";
        for (const RateRow& r : rows)
            os << "| " << r.t << " | " << fmt_rate(r.rate_num, r.rate_den) << " | "
               << fmt_rate(r.frac_num, r.frac_den) << " | " << fmt_rate(r.pow_num, r.pow_den)
               << " | " << r.witness << " |\n";
        break;
    }
    case EmitFormat::json: {
        Json arr = Json::array();
        for (const RateRow& r : rows)
            arr.push_back(Json{{"t", r.t},
                               {"rate_num", r.rate_num},
                               {"rate_den", r.rate_den},
                               {"witness", r.witness},
                               {"witness_t", r.witness_t},
                               {"frac_num", r.frac_num},
                               {"frac_den", r.frac_den},
                               {"pow_num", r.pow_num},
                               {"pow_den", r.pow_den}});
        os << arr.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

} // namespace slrc
