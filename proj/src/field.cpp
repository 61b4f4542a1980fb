#include "slrc/field.hpp"

#include <algorithm>
#include <numeric>

namespace slrc {

namespace {

constexpr std::uint64_t kTableOrderCap = 1024; // dense q*q tables below this

// polynomial helpers over GF(p), coefficient vectors with constant term first

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    // mod is monic of degree deg
    const std::size_t deg = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > deg;) {
        std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) {
            std::uint64_t sub = std::uint64_t(c) * mod[j] % p;
            prod[i - deg + j] = static_cast<std::uint32_t>((prod[i - deg + j] + p - sub) % p);
        }
    }
    prod.resize(deg);
    return prod;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& mod, std::uint32_t p) {
    Poly result{1};
    result.resize(mod.size() - 1, 0);
    base.resize(mod.size() - 1, 0);
    while (e > 0) {
        if (e & 1) result = poly_mul_mod(result, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    auto inv_mod_p = [p](std::uint32_t x) {
        std::uint32_t r = 1;
        std::uint64_t base = x, e = p - 2;
        while (e > 0) {
            if (e & 1) r = static_cast<std::uint32_t>(r * base % p);
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        std::uint32_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(a.back()) * lead_inv % p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t sub = std::uint64_t(c) * b[j] % p;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin test: f of degree m is irreducible over GF(p) iff x^(p^m) == x (mod f)
// and gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m.
bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    auto x_power = [&](std::uint64_t e) { return poly_pow_mod(Poly{0, 1}, e, f, p); };
    auto pm = [&](std::size_t d) {
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < d; ++i) r *= p;
        return r;
    };
    Poly top = x_power(pm(m));
    Poly x{0, 1};
    x.resize(m, 0);
    if (top != x) return false;
    std::vector<std::size_t> prime_divs;
    std::size_t mm = m;
    for (std::size_t r = 2; r <= mm; ++r)
        if (mm % r == 0) {
            prime_divs.push_back(r);
            while (mm % r == 0) mm /= r;
        }
    for (std::size_t r : prime_divs) {
        Poly g = x_power(pm(m / r));
        // g - x
        Poly diff = g;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        Poly gc = poly_gcd(diff, f, p);
        if (!(gc.size() == 1)) return false;
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> mod)
    : p_(p), m_(m), mod_(std::move(mod)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
    if (q_ < kTableOrderCap) {
        const std::size_t q = static_cast<std::size_t>(q_);
        add_tab_.resize(q * q);
        mul_tab_.resize(q * q);
        inv_tab_.assign(q, 0);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b) {
                Elt s, t;
                if (m_ == 1) {
                    s = static_cast<Elt>((a + b) % p_);
                    t = static_cast<Elt>(a * b % p_);
                } else {
                    // digitwise add; polynomial mul
                    std::uint64_t x = a, y = b, pw = 1, sum = 0;
                    while (x > 0 || y > 0) {
                        sum += (x % p_ + y % p_) % p_ * pw;
                        x /= p_;
                        y /= p_;
                        pw *= p_;
                    }
                    s = static_cast<Elt>(sum);
                    t = mul_slow(static_cast<Elt>(a), static_cast<Elt>(b));
                }
                add_tab_[a * q + b] = static_cast<std::uint16_t>(s);
                mul_tab_[a * q + b] = static_cast<std::uint16_t>(t);
                if (t == 1) inv_tab_[a] = static_cast<std::uint16_t>(b);
            }
    }
}

std::shared_ptr<const Field> Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw Error(Errc::non_prime, std::to_string(p) + " is not prime");
    return std::shared_ptr<const Field>(new Field(p, 1, {}));
}

std::shared_ptr<const Field> Field::extension(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw Error(Errc::non_prime, std::to_string(p) + " is not prime");
    if (m < 1 || m > 4)
        throw Error(Errc::degree_out_of_range, "extension degree must be in [1, 4]");
    if (m == 1) return prime(p);
    // lowest canonical monic irreducible of degree m: scan constant-first
    // digit vectors in increasing integer value
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
        Poly f(m + 1, 0);
        std::uint64_t v = c;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p))
            return std::shared_ptr<const Field>(new Field(p, m, std::move(f)));
    }
    throw Error(Errc::parameter_violation, "no irreducible modulus found"); // unreachable
}

Elt Field::element(std::uint64_t v) const {
    if (v >= q_) throw Error(Errc::out_of_range, "element index out of range");
    return static_cast<Elt>(v);
}

std::vector<std::uint32_t> Field::digits(Elt a) const {
    std::vector<std::uint32_t> d(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elt Field::from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint64_t v = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        v += (i < d.size() ? d[i] % p_ : 0) * pw;
        pw *= p_;
    }
    return static_cast<Elt>(v);
}

Elt Field::add(Elt a, Elt b) const {
    if (has_tables()) return add_tab_[std::size_t(a) * q_ + b];
    if (m_ == 1) return (a + b) % p_;
    std::uint64_t x = a, y = b, pw = 1, sum = 0;
    while (x > 0 || y > 0) {
        sum += (x % p_ + y % p_) % p_ * pw;
        x /= p_;
        y /= p_;
        pw *= p_;
    }
    return static_cast<Elt>(sum);
}

Elt Field::neg(Elt a) const {
    if (m_ == 1) return a == 0 ? 0 : static_cast<Elt>(p_ - a);
    std::uint64_t x = a, pw = 1, out = 0;
    while (x > 0) {
        std::uint32_t d = x % p_;
        out += (d == 0 ? 0 : p_ - d) * pw;
        x /= p_;
        pw *= p_;
    }
    return static_cast<Elt>(out);
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::mul_slow(Elt a, Elt b) const {
    if (m_ == 1) return static_cast<Elt>(std::uint64_t(a) * b % p_);
    Poly pa(m_, 0), pb(m_, 0);
    std::uint64_t x = a, y = b;
    for (std::uint32_t i = 0; i < m_; ++i) {
        pa[i] = x % p_;
        pb[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    Poly pr = poly_mul_mod(pa, pb, mod_, p_);
    std::uint64_t v = 0, pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        v += pr[i] * pw;
        pw *= p_;
    }
    return static_cast<Elt>(v);
}

Elt Field::mul(Elt a, Elt b) const {
    if (has_tables()) return mul_tab_[std::size_t(a) * q_ + b];
    return mul_slow(a, b);
}

Elt Field::pow(Elt a, std::uint64_t e) const {
    Elt r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elt Field::inv(Elt a) const {
    if (a == 0) throw Error(Errc::parameter_violation, "inverse of zero");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return pow(a, q_ - 2);
}

std::uint64_t Field::element_order(Elt a) const {
    if (a == 0) throw Error(Errc::parameter_violation, "order of zero");
    std::uint64_t ord = 1;
    Elt x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

Elt Field::primitive_element() const {
    for (std::uint64_t v = 1; v < q_; ++v)
        if (element_order(static_cast<Elt>(v)) == q_ - 1) return static_cast<Elt>(v);
    throw Error(Errc::parameter_violation, "no primitive element"); // unreachable
}

bool Field::same(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && mod_ == other.mod_;
}

std::string Field::to_string(Elt a) const { return std::to_string(a); }

FieldPtr make_prime_field(std::uint32_t p) {
    if (p >= (1u << 16)) throw Error(Errc::out_of_range, "characteristic must be < 2^16");
    if (!is_prime(p)) throw Error(Errc::non_prime, std::to_string(p) + " is not prime");
    return Field::prime(p);
}

FieldPtr make_extension_field(std::uint32_t p, std::uint32_t m) {
    if (p >= (1u << 16)) throw Error(Errc::out_of_range, "characteristic must be < 2^16");
    if (!is_prime(p)) throw Error(Errc::non_prime, std::to_string(p) + " is not prime");
    if (m < 1 || m > 4) throw Error(Errc::degree_out_of_range, "extension degree must be in [1, 4]");
    return Field::extension(p, m);
}

Elt find_primitive_element(const Field& f) { return f.primitive_element(); }

FieldPtr field_of_order(std::uint64_t q) {
    if (q < 2) throw Error(Errc::parameter_violation, "field order must be >= 2");
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        std::uint32_t m = 0;
        std::uint64_t v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v != 1) throw Error(Errc::parameter_violation, std::to_string(q) + " is not a prime power");
        return make_extension_field(static_cast<std::uint32_t>(p), m);
    }
    return make_prime_field(static_cast<std::uint32_t>(q)); // q itself prime
}

} // namespace slrc
