#include "slrc/json_io.hpp"

namespace slrc {

namespace {

void need(const Json& j, const char* key) {
    if (!j.contains(key))
        throw Error(Errc::unknown_format, std::string("missing key \"") + key + "\"");
}

} // namespace

Json matrix_to_json(const Matrix& m) {
    const Field& f = *m.field();
    Json j;
    j["q"] = f.characteristic();
    j["m"] = f.degree();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = m.entries();
    return j;
}

Matrix matrix_from_json(const Json& j) {
    for (const char* k : {"q", "m", "rows", "cols", "entries"}) need(j, k);
    std::uint32_t p = j["q"].get<std::uint32_t>();
    std::uint32_t deg = j["m"].get<std::uint32_t>();
    FieldPtr f = (deg <= 1) ? make_prime_field(p) : make_extension_field(p, deg);
    std::size_t rows = j["rows"].get<std::size_t>(), cols = j["cols"].get<std::size_t>();
    std::vector<Elt> entries = j["entries"].get<std::vector<Elt>>();
    for (Elt e : entries)
        if (e >= f->order()) throw Error(Errc::out_of_range, "entry outside the field");
    return Matrix(std::move(f), rows, cols, std::move(entries));
}

Json pattern_to_json(const ErasurePattern& e, const std::vector<std::size_t>& shape) {
    std::size_t total = 1;
    for (std::size_t n : shape) total *= n;
    if (total != e.n) throw Error(Errc::shape_mismatch, "shape product != pattern length");
    Json tuples = Json::array();
    for (std::size_t flat : e.erased) {
        std::vector<std::size_t> tuple(shape.size());
        std::size_t rest = flat;
        for (std::size_t j = shape.size(); j-- > 0;) {
            tuple[j] = rest % shape[j];
            rest /= shape[j];
        }
        tuples.push_back(tuple);
    }
    return Json{{"shape", shape}, {"erased", tuples}};
}

ErasurePattern pattern_from_json(const Json& j, std::vector<std::size_t>& shape_out) {
    need(j, "shape");
    need(j, "erased");
    shape_out = j["shape"].get<std::vector<std::size_t>>();
    if (shape_out.empty()) throw Error(Errc::unknown_format, "empty shape");
    std::size_t total = 1;
    for (std::size_t n : shape_out) {
        if (n == 0) throw Error(Errc::unknown_format, "zero-length axis");
        total *= n;
    }
    std::vector<std::size_t> flat;
    for (const Json& tj : j["erased"]) {
        std::vector<std::size_t> tuple = tj.get<std::vector<std::size_t>>();
        if (tuple.size() != shape_out.size())
            throw Error(Errc::shape_mismatch, "tuple arity != shape arity");
        std::size_t idx = 0;
        for (std::size_t a = 0; a < tuple.size(); ++a) {
            if (tuple[a] >= shape_out[a])
                throw Error(Errc::index_out_of_range, "tuple coordinate out of range");
            idx = idx * shape_out[a] + tuple[a];
        }
        flat.push_back(idx);
    }
    return ErasurePattern(total, std::move(flat));
}

Json trace_to_json(const RecoveryTrace& t) {
    Json out = Json::array();
    for (const TraceStep& s : t.steps) {
        Json js;
        js["step"] = s.step;
        js["coord"] = s.coord;
        js["axis"] = s.axis ? Json(*s.axis) : Json(nullptr);
        js["line"] = s.line ? Json(*s.line) : Json(nullptr);
        js["recovery_set"] = s.recovery_set;
        out.push_back(std::move(js));
    }
    return out;
}

Json analysis_to_json(const AnalysisReport& a) {
    Json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["d"] = a.d;
    j["r"] = a.r;
    j["t"] = a.t;
    j["a_formula"] = a.a_formula;
    j["a_exact"] = a.a_exact ? Json(*a.a_exact) : Json(nullptr);
    j["rate"] = a.rate;
    j["bounds"] = Json{{"singleton_like", a.bounds.singleton_like_ok},
                       {"rate", a.bounds.rate_ok}};
    j["verified"] = a.verified ? Json(*a.verified) : Json(nullptr);
    return j;
}

} // namespace slrc
