#pragma once

#include <json.hpp>

#include "slrc/recovery.hpp"

namespace slrc {

using Json = nlohmann::json;

/// {"q": characteristic, "m": extension degree, "rows", "cols",
///  "entries": row-major canonical element indices}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"shape": [n1, ..., nl], "erased": [[i1, ..., il], ...]} with 0-based
/// tuple coordinates, last axis fastest in the flat order.
Json pattern_to_json(const ErasurePattern& e, const std::vector<std::size_t>& shape);
ErasurePattern pattern_from_json(const Json& j, std::vector<std::size_t>& shape_out);

/// [{"step", "coord", "axis", "line", "recovery_set"}, ...]; axis and line
/// are null for steps of the generic engine.
Json trace_to_json(const RecoveryTrace& t);

struct AnalysisReport {
    std::size_t n = 0, k = 0, d = 0, r = 0, t = 0;
    std::size_t a_formula = 0;
    std::optional<std::size_t> a_exact;
    double rate = 0.0;
    BoundsReport bounds;
    std::optional<bool> verified;
};
Json analysis_to_json(const AnalysisReport& a);

} // namespace slrc
