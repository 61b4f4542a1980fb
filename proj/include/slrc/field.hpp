#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "slrc/error.hpp"

namespace slrc {

/// Canonical element index: the integer value of the base-p coefficient vector,
/// constant term least significant. For prime fields this is just the residue.
using Elt = std::uint32_t;

/// GF(p) or GF(p^m) in polynomial basis. Immutable after construction; all
/// operations are pure, so concurrent reads need no synchronization.
class Field {
public:
    static std::shared_ptr<const Field> prime(std::uint32_t p);
    static std::shared_ptr<const Field> extension(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t order() const { return q_; }

    /// Modulus polynomial coefficients, constant term first, length m+1, monic.
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }

    Elt element(std::uint64_t canonical_index) const;
    std::vector<std::uint32_t> digits(Elt a) const;
    Elt from_digits(const std::vector<std::uint32_t>& d) const;

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, std::uint64_t e) const;

    std::uint64_t element_order(Elt a) const;

    /// Smallest element (in canonical order) of multiplicative order q-1.
    Elt primitive_element() const;

    bool same(const Field& other) const;

    std::string to_string(Elt a) const;

    /// Dense operation tables, available for small fields; hot loops index
    /// them directly as tab[a * q + b].
    bool has_tables() const { return !add_tab_.empty(); }
    const std::uint16_t* add_table() const { return add_tab_.data(); }
    const std::uint16_t* mul_table() const { return mul_tab_.data(); }

private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> mod);

    Elt mul_slow(Elt a, Elt b) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> mod_;
    std::vector<std::uint16_t> add_tab_;
    std::vector<std::uint16_t> mul_tab_;
    std::vector<std::uint16_t> inv_tab_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// GF(p) for prime p < 2^16.
FieldPtr make_prime_field(std::uint32_t p);

/// GF(p^m), 1 <= m <= 4, with the lowest (in canonical coefficient order)
/// monic irreducible modulus of degree m.
FieldPtr make_extension_field(std::uint32_t p, std::uint32_t m);

Elt find_primitive_element(const Field& f);

/// Factors q = p^m and builds the matching field. ParameterViolation when q is
/// not a prime power within the supported caps.
FieldPtr field_of_order(std::uint64_t q);

bool is_prime(std::uint64_t n);

} // namespace slrc
