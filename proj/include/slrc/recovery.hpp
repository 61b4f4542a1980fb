#pragma once

#include <optional>

#include "slrc/slrc.hpp"

namespace slrc {

struct ErasurePattern {
    std::size_t n = 0;
    std::vector<std::size_t> erased; // sorted, duplicate-free

    ErasurePattern() = default;
    ErasurePattern(std::size_t length, std::vector<std::size_t> idx);
};

struct ReceivedWord {
    std::vector<Elt> values;
    std::vector<bool> known;

    std::size_t erased_count() const;
};

struct TraceStep {
    std::size_t step = 0;
    std::size_t coord = 0;
    std::vector<std::size_t> recovery_set;
    std::optional<std::size_t> axis; // set by the line engine
    std::optional<std::size_t> line;
};

struct RecoveryTrace {
    std::vector<TraceStep> steps;
    bool full = false;
    std::vector<std::size_t> residual; // still-erased coordinates
};

enum class RecoveryRegime {
    ParallelGuaranteed,
    SequentialGuaranteed,
    PatternDependent,
    Unrecoverable,
};

const char* to_string(RecoveryRegime r);

/// Regime of an erasure count mu on the ell-fold product of an [n, k, d]
/// code, by thresholds ell(d-1), d^ell and min(n^ell - k^ell,
/// ell n^(ell-1) (d-1)). For ell = 1 the middle regimes collapse and the
/// split is mu <= d-1 / mu <= n-k / above.
RecoveryRegime classify_regime(std::size_t n, std::size_t k, std::size_t d, std::size_t ell,
                               std::uint64_t mu);

ReceivedWord apply_erasures(const std::vector<Elt>& codeword, const ErasurePattern& e);

/// Greedy repair: repeatedly fill the lowest-index erased coordinate that has
/// a recovery vector meeting the erased set only at itself.
std::pair<ReceivedWord, RecoveryTrace> recover_generic(const LinearCode& c,
                                                       const ReceivedWord& w, std::size_t r);

/// Axis-parallel line sweeps to a fixpoint. A line is decoded whenever its
/// erased factor parity-check columns are linearly independent, which is
/// strictly stronger than the erasure count being below the factor distance.
std::pair<ReceivedWord, RecoveryTrace> recover_lines(const ProductCode& p, const ReceivedWord& w);

/// True when one axis exists whose every line holds at most d_j - 1 erasures,
/// so a single sweep of that factor code clears the pattern.
bool is_parallel_recoverable(const ProductCode& p, const ErasurePattern& e);

/// Every step may only consume coordinates known before it ran.
bool trace_is_sequential(const RecoveryTrace& trace, const ErasurePattern& e);

} // namespace slrc
