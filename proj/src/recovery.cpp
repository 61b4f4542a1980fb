#include "slrc/recovery.hpp"

#include <algorithm>
#include <limits>

namespace slrc {

namespace {

std::uint64_t sat_pow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b)
            return std::numeric_limits<std::uint64_t>::max();
        r *= b;
    }
    return r;
}

} // namespace

ErasurePattern::ErasurePattern(std::size_t length, std::vector<std::size_t> idx)
    : n(length), erased(std::move(idx)) {
    std::sort(erased.begin(), erased.end());
    erased.erase(std::unique(erased.begin(), erased.end()), erased.end());
    if (!erased.empty() && erased.back() >= n)
        throw Error(Errc::index_out_of_range, "erased index out of range");
}

std::size_t ReceivedWord::erased_count() const {
    return static_cast<std::size_t>(std::count(known.begin(), known.end(), false));
}

const char* to_string(RecoveryRegime r) {
    switch (r) {
    case RecoveryRegime::ParallelGuaranteed: return "ParallelGuaranteed";
    case RecoveryRegime::SequentialGuaranteed: return "SequentialGuaranteed";
    case RecoveryRegime::PatternDependent: return "PatternDependent";
    case RecoveryRegime::Unrecoverable: return "Unrecoverable";
    }
    return "?";
}

RecoveryRegime classify_regime(std::size_t n, std::size_t k, std::size_t d, std::size_t ell,
                               std::uint64_t mu) {
    if (k < 1 || k >= n || d < 1 || d > n - k + 1 || ell < 1)
        throw Error(Errc::parameter_violation, "need 1 <= k < n, d <= n-k+1, ell >= 1");
    if (ell == 1) {
        if (mu <= d - 1) return RecoveryRegime::ParallelGuaranteed;
        if (mu <= n - k) return RecoveryRegime::PatternDependent;
        return RecoveryRegime::Unrecoverable;
    }
    if (mu <= static_cast<std::uint64_t>(ell) * (d - 1)) return RecoveryRegime::ParallelGuaranteed;
    if (mu < sat_pow(d, ell)) return RecoveryRegime::SequentialGuaranteed;
    std::uint64_t cap = std::min(sat_pow(n, ell) - sat_pow(k, ell),
                                 static_cast<std::uint64_t>(ell) * sat_pow(n, ell - 1) * (d - 1));
    if (mu <= cap) return RecoveryRegime::PatternDependent;
    return RecoveryRegime::Unrecoverable;
}

ReceivedWord apply_erasures(const std::vector<Elt>& codeword, const ErasurePattern& e) {
    if (codeword.size() != e.n) throw Error(Errc::dimension_mismatch, "length mismatch");
    ReceivedWord w{codeword, std::vector<bool>(e.n, true)};
    for (std::size_t i : e.erased) {
        w.known[i] = false;
        w.values[i] = 0;
    }
    return w;
}

std::pair<ReceivedWord, RecoveryTrace> recover_generic(const LinearCode& c, const ReceivedWord& w,
                                                       std::size_t r) {
    std::size_t n = c.length();
    if (w.values.size() != n || w.known.size() != n)
        throw Error(Errc::dimension_mismatch, "received word length mismatch");
    const Field& f = *c.field();

    std::vector<std::vector<RecoveryVector>> table(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!w.known[i]) table[i] = enumerate_recovery_vectors(c, i, r);

    ReceivedWord cur = w;
    RecoveryTrace trace;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < n && !progress; ++i) {
            if (cur.known[i]) continue;
            for (const RecoveryVector& rv : table[i]) {
                bool usable = std::all_of(rv.set.begin(), rv.set.end(),
                                          [&](std::size_t j) { return (bool)cur.known[j]; });
                if (!usable) continue;
                Elt x = 0;
                for (std::size_t t = 0; t < rv.set.size(); ++t)
                    x = f.add(x, f.mul(rv.coeffs[t], cur.values[rv.set[t]]));
                cur.values[i] = x;
                cur.known[i] = true;
                trace.steps.push_back({trace.steps.size(), i, rv.set, {}, {}});
                progress = true;
                break;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!cur.known[i]) trace.residual.push_back(i);
    trace.full = trace.residual.empty();
    return {std::move(cur), std::move(trace)};
}

std::pair<ReceivedWord, RecoveryTrace> recover_lines(const ProductCode& p, const ReceivedWord& w) {
    const LinearCode& prod = p.code;
    std::size_t n = prod.length(), ell = p.shape.size();
    if (w.values.size() != n || w.known.size() != n)
        throw Error(Errc::dimension_mismatch, "received word length mismatch");
    const Field& f = *prod.field();

    ReceivedWord cur = w;
    RecoveryTrace trace;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t axis = 0; axis < ell; ++axis) {
            const LinearCode& fac = p.factors[axis];
            const Matrix& h = fac.parity_check();
            std::size_t nj = p.shape[axis];
            std::size_t lines = n / nj;
            for (std::size_t line = 0; line < lines; ++line) {
                // decode the line index into the fixed off-axis positions
                std::vector<std::size_t> tuple(ell, 0);
                std::size_t rest = line;
                for (std::size_t j = ell; j-- > 0;) {
                    if (j == axis) continue;
                    tuple[j] = rest % p.shape[j];
                    rest /= p.shape[j];
                }
                std::vector<std::size_t> coords(nj);
                for (std::size_t s = 0; s < nj; ++s) {
                    tuple[axis] = s;
                    coords[s] = p.flat_index(tuple);
                }
                std::vector<std::size_t> erased_pos, known_coords;
                for (std::size_t s = 0; s < nj; ++s)
                    (cur.known[coords[s]] ? known_coords : erased_pos).push_back(s);
                if (erased_pos.empty()) continue;
                // H_E x_E = -(contribution of known symbols)
                std::vector<Elt> rhs(h.rows(), 0);
                for (std::size_t s : known_coords) {
                    Elt x = cur.values[coords[s]];
                    if (x == 0) continue;
                    for (std::size_t row = 0; row < h.rows(); ++row)
                        rhs[row] = f.add(rhs[row], f.mul(h.at(row, s), x));
                }
                for (Elt& e : rhs) e = f.neg(e);
                Matrix he = h.select_columns(erased_pos);
                Matrix::Solution sol = he.solve(rhs);
                if (!sol.solvable || sol.kernel_dim != 0) continue;
                std::vector<std::size_t> used;
                for (std::size_t s : known_coords) used.push_back(coords[s]);
                for (std::size_t t = 0; t < erased_pos.size(); ++t) {
                    std::size_t coord = coords[erased_pos[t]];
                    cur.values[coord] = sol.x[t];
                    cur.known[coord] = true;
                    trace.steps.push_back({trace.steps.size(), coord, used, axis, line});
                }
                progress = true;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!cur.known[i]) trace.residual.push_back(i);
    trace.full = trace.residual.empty();
    return {std::move(cur), std::move(trace)};
}

bool is_parallel_recoverable(const ProductCode& p, const ErasurePattern& e) {
    std::size_t n = p.code.length(), ell = p.shape.size();
    if (e.n != n) throw Error(Errc::dimension_mismatch, "pattern length mismatch");
    if (e.erased.empty()) return true;
    std::vector<bool> erased(n, false);
    for (std::size_t i : e.erased) erased[i] = true;
    for (std::size_t axis = 0; axis < ell; ++axis) {
        DistanceResult dr = p.factors[axis].min_distance();
        if (!dr.exact) continue;
        std::size_t nj = p.shape[axis], lines = n / nj;
        bool ok = true;
        for (std::size_t line = 0; line < lines && ok; ++line) {
            std::vector<std::size_t> tuple(ell, 0);
            std::size_t rest = line;
            for (std::size_t j = ell; j-- > 0;) {
                if (j == axis) continue;
                tuple[j] = rest % p.shape[j];
                rest /= p.shape[j];
            }
            std::size_t cnt = 0;
            for (std::size_t s = 0; s < nj; ++s) {
                tuple[axis] = s;
                cnt += erased[p.flat_index(tuple)];
            }
            ok = cnt <= dr.d - 1;
        }
        if (ok) return true;
    }
    return false;
}

bool trace_is_sequential(const RecoveryTrace& trace, const ErasurePattern& e) {
    std::vector<bool> known(e.n, true);
    for (std::size_t i : e.erased) known[i] = false;
    for (const TraceStep& s : trace.steps) {
        if (s.coord >= e.n || known[s.coord]) return false;
        for (std::size_t j : s.recovery_set)
            if (j >= e.n || !known[j]) return false;
        known[s.coord] = true;
    }
    return true;
}

} // namespace slrc
