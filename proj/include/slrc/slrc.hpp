#pragma once

#include <utility>

#include "slrc/code.hpp"

namespace slrc {

/// Dual codeword v with i in its support and wt(v) <= r+1. Any codeword x
/// satisfies x_i = sum_j coeffs[j] * x_{set[j]}, so the coordinates in `set`
/// repair coordinate `target`.
struct RecoveryVector {
    std::size_t target = 0;
    std::vector<Elt> v;               // full-length dual codeword
    std::vector<std::size_t> support; // sorted support of v, contains target
    std::vector<std::size_t> set;     // support with target removed
    std::vector<Elt> coeffs;          // aligned with set: -v_j / v_i
};

/// One representative per distinct support among dual codewords of weight
/// <= r+1 whose support contains coordinate i (0-based).
std::vector<RecoveryVector> enumerate_recovery_vectors(const LinearCode& c, std::size_t i,
                                                       std::size_t r);

/// Smallest r such that every coordinate has a recovery vector.
std::size_t locality(const LinearCode& c);

/// Minimum over coordinates of the distinct-support count at radius r.
std::size_t alternativity(const LinearCode& c, std::size_t r);

/// Kernel evaluations a full support scan at radius r would perform, summed
/// over all n coordinates; saturates instead of overflowing.
std::uint64_t alternativity_scan_cost(std::size_t n, std::size_t r);

/// Cross-validation oracle: the same distinct supports obtained by walking
/// all q^(n-k) dual codewords. Only sensible for small duals.
std::vector<std::vector<std::size_t>> recovery_supports_via_dual(const LinearCode& c,
                                                                 std::size_t i, std::size_t r);

enum class Tag { exact, lower_bound };

struct SlrcParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t r = 0;
    std::size_t t = 0;
    std::size_t a = 0;
    Tag a_tag = Tag::exact;

    double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
};

/// Tensor product of codes with the last factor's coordinate varying fastest.
struct ProductCode {
    std::vector<LinearCode> factors;
    LinearCode code;
    std::vector<std::size_t> shape; // factor lengths

    std::size_t flat_index(const std::vector<std::size_t>& tuple) const;
    std::vector<std::size_t> tuple_of(std::size_t flat) const;
};

/// Parameter calculus for products of codes declared at a common locality r:
/// N = prod n_i, K = prod k_i, T = prod (t_i + 1) - 1, A = sum a_i. The
/// alternativity tag stays exact only when every factor dimension agrees.
std::pair<ProductCode, SlrcParams> product_slrc(
    const std::vector<std::pair<LinearCode, SlrcParams>>& factors);

/// Embed a factor recovery vector along one axis, pinning every other axis to
/// a fixed position. Weight is preserved.
RecoveryVector lift_recovery_vector(const ProductCode& p, std::size_t axis,
                                    const RecoveryVector& v,
                                    const std::vector<std::size_t>& fixed);

struct VerifyResult {
    bool ok = false;
    std::vector<std::size_t> witness; // first failing erasure set, when !ok
};

/// Exhaustive sequential-recoverability check: every erasure set of size
/// <= t must contain a coordinate whose recovery set avoids the rest of the
/// set; sets are walked in colex order, sizes ascending.
VerifyResult verify_slrc_exhaustive(const LinearCode& c, std::size_t r, std::size_t t,
                                    std::uint64_t budget_sets = 10000000ULL);

struct BoundsReport {
    std::int64_t singleton_like_rhs = 0; // n - k - ceil(k/r) + 2
    bool singleton_like_ok = false;
    bool rate_ok = false;      // k/n <= r/(r+1)
    bool rate_optimal = false; // equality in the rate bound
};
BoundsReport check_bounds(const SlrcParams& p, std::size_t d);

} // namespace slrc
