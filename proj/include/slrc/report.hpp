#pragma once

#include "slrc/expr.hpp"
#include "slrc/json_io.hpp"
#include "slrc/slrc.hpp"

namespace slrc {

/// Per-factor analysis: minimal locality, alternativity at that locality,
/// exact distance, single-code erasure tolerance d-1.
struct FactorAnalysis {
    std::size_t r = 0, a = 0, d = 0, t = 0;
};

struct CodeAnalysis {
    ProductCode product;
    SlrcParams params; // r = max factor locality, a = sum of factor a's
    std::size_t d = 0; // product of exact factor distances
    std::vector<FactorAnalysis> factors;
};

/// Derive SLRC parameters of a parsed (product) code from its factors.
CodeAnalysis analyze_code(const BuiltCode& b);

/// Support-scan work cap below which exact alternativity enumeration runs.
inline constexpr std::uint64_t kAltScanCap = 2000000;

struct CatalogEntry {
    int table = 0; // source table 1..4
    std::uint32_t q = 0;
    std::size_t k_group = 0, r = 0, ell = 0;
    std::size_t n = 0, dim = 0, d = 0, t = 0, a = 0;
    Tag a_tag = Tag::lower_bound;
    std::string construction;
    bool match = false;
    std::string error; // nonempty when the row failed to build

    // printed reference values the row is checked against
    std::size_t ref_n = 0, ref_d = 0, ref_t = 0, ref_a = 0;
};

/// Build the canned construction catalog; table 0 selects every table.
/// Rows that fail to construct carry their error instead of aborting.
std::vector<CatalogEntry> build_catalog(int table = 0);

struct RateRow {
    std::size_t t = 0;
    // best achieved rate among catalog entries tolerating >= t erasures
    std::uint64_t rate_num = 0, rate_den = 1;
    std::string witness;     // construction achieving it
    std::size_t witness_t = 0;
    // comparison formulas r/(r+t) and (r/(r+1))^t, as exact rationals
    std::uint64_t frac_num = 0, frac_den = 1;
    std::uint64_t pow_num = 0, pow_den = 1;
};

std::vector<RateRow> rate_table(std::size_t r, std::size_t t_max);

enum class EmitFormat { markdown, csv, json };
EmitFormat parse_format(const std::string& s); // Errc::unknown_format

std::string emit_catalog(const std::vector<CatalogEntry>& entries, EmitFormat fmt);
std::string emit_rate(const std::vector<RateRow>& rows, EmitFormat fmt);

} // namespace slrc
