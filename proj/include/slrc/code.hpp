#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "slrc/matrix.hpp"

namespace slrc {

struct DistanceResult {
    std::size_t d = 0;
    bool exact = false; // false when the enumeration budget ran out
};

/// Minimum weight of the row space of G, by enumerating one representative
/// per 1-dimensional subspace of messages. budget_msgs caps how many
/// messages are expanded; on overrun the best weight seen so far is
/// returned with exact = false.
DistanceResult min_weight_parallel(const Matrix& G, std::uint64_t budget_msgs);
DistanceResult min_weight_serial(const Matrix& G, std::uint64_t budget_msgs);

/// Message budget for exhaustive kernels: SLRC_BUDGET_OPS from the
/// environment, or 10^8.
std::uint64_t enumeration_budget();

/// [n,k] linear code given by a full-rank generator matrix. The generator is
/// stored exactly as supplied; parity check and distance are computed lazily
/// and cached (cache fills are not synchronized, so share instances across
/// threads read-only after warmup).
class LinearCode {
public:
    explicit LinearCode(Matrix generator, std::string name = "");

    const FieldPtr& field() const { return gen_.field(); }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dim() const { return gen_.rows(); }
    const std::string& name() const { return name_; }

    const Matrix& generator() const { return gen_; }
    const Matrix& parity_check() const;

    std::vector<Elt> encode(const std::vector<Elt>& msg) const;

    LinearCode dual(std::string name = "") const;

    DistanceResult min_distance(std::uint64_t budget_msgs = enumeration_budget()) const;
    DistanceResult min_distance_serial(std::uint64_t budget_msgs = enumeration_budget()) const;

    /// Record an externally known exact distance (e.g. from MDS structure or a
    /// product formula) so later queries skip the enumeration.
    void set_known_distance(std::size_t d) const;

    /// Delete the given coordinates (1-based positions). The shortened
    /// generator must keep full rank.
    LinearCode punctured(const std::vector<std::size_t>& positions_1based) const;

    bool is_mds() const;

private:
    Matrix gen_;
    std::string name_;

    mutable std::optional<Matrix> parity_;
    mutable std::optional<DistanceResult> dist_;
};

/// [q+1, 2, q] code from evaluating lines through the projective point set;
/// the largest-length MDS code of dimension 2 over GF(q).
LinearCode make_P(std::uint32_t q);

/// [n, n-1, 2] single parity relation code, generator [I | 1].
LinearCode make_D(std::uint32_t q, std::size_t n);

/// [n, k, n-k+1] Reed-Solomon code evaluated at the first n field elements.
LinearCode make_R(std::uint32_t q, std::size_t n, std::size_t k);

/// Narrow-sense BCH code of length n and design distance d over GF(q),
/// q prime, gcd(n, q) = 1.
LinearCode make_BCH(std::uint32_t q, std::size_t n, std::size_t d);

} // namespace slrc
