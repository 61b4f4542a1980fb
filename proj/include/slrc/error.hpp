#pragma once

#include <stdexcept>
#include <string>

namespace slrc {

enum class Errc {
    non_prime,
    out_of_range,
    degree_out_of_range,
    field_mismatch,
    dimension_mismatch,
    parameter_violation,
    rank_drop,
    distance_unknown,
    no_recovery,
    budget_exceeded,
    locality_mismatch,
    index_out_of_range,
    no_solution,
    shape_mismatch,
    unknown_format,
    parse_error,
};

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace slrc
