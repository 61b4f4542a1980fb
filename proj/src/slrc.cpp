#include "slrc/slrc.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace slrc {

namespace {

// next size-w subset of [0, n) in colex order; false once exhausted
bool next_colex(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t w = c.size();
    for (std::size_t i = 0; i < w; ++i) {
        std::size_t cap = (i + 1 < w) ? c[i + 1] : n;
        if (c[i] + 1 < cap) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > std::numeric_limits<std::uint64_t>::max() - b)
               ? std::numeric_limits<std::uint64_t>::max()
               : a + b;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t w) {
    if (w > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= w; ++i) {
        r = sat_mul(r, n - w + i);
        if (r == std::numeric_limits<std::uint64_t>::max()) return r;
        r /= i;
    }
    return r;
}

// a vector in the row span of `basis` with no zero coordinate, if one exists
bool find_full_support(const Matrix& basis, std::vector<Elt>& out) {
    const Field& f = *basis.field();
    std::size_t dk = basis.rows(), w = basis.cols();
    if (dk == 0) return false;
    auto full = [&](const std::vector<Elt>& v) {
        return std::none_of(v.begin(), v.end(), [](Elt e) { return e == 0; });
    };
    if (dk == 1) {
        out = basis.row(0);
        return full(out);
    }
    // scan one representative per scalar class: leading coefficient 1
    std::uint64_t q = f.order();
    for (std::size_t lead = 0; lead < dk; ++lead) {
        std::vector<Elt> coef(dk, 0);
        coef[lead] = 1;
        std::size_t free_digits = dk - lead - 1;
        std::uint64_t combos = 1;
        for (std::size_t t = 0; t < free_digits; ++t) combos = sat_mul(combos, q);
        for (std::uint64_t c = 0; c < combos; ++c) {
            std::uint64_t x = c;
            for (std::size_t t = 0; t < free_digits; ++t) {
                coef[lead + 1 + t] = static_cast<Elt>(x % q);
                x /= q;
            }
            std::vector<Elt> v(w, 0);
            for (std::size_t b = 0; b < dk; ++b) {
                if (coef[b] == 0) continue;
                for (std::size_t j = 0; j < w; ++j)
                    v[j] = f.add(v[j], f.mul(coef[b], basis.at(b, j)));
            }
            if (full(v)) {
                out = std::move(v);
                return true;
            }
        }
    }
    return false;
}

RecoveryVector build_vector(const LinearCode& c, std::size_t target,
                            const std::vector<std::size_t>& supp, const std::vector<Elt>& local) {
    const Field& f = *c.field();
    RecoveryVector rv;
    rv.target = target;
    rv.support = supp;
    rv.v.assign(c.length(), 0);
    Elt vi = 0;
    for (std::size_t j = 0; j < supp.size(); ++j) {
        rv.v[supp[j]] = local[j];
        if (supp[j] == target) vi = local[j];
    }
    Elt inv_vi = f.inv(vi);
    for (std::size_t j = 0; j < supp.size(); ++j) {
        if (supp[j] == target) continue;
        rv.set.push_back(supp[j]);
        rv.coeffs.push_back(f.neg(f.mul(local[j], inv_vi)));
    }
    return rv;
}

} // namespace

std::vector<RecoveryVector> enumerate_recovery_vectors(const LinearCode& c, std::size_t i,
                                                       std::size_t r) {
    if (i >= c.length()) throw Error(Errc::index_out_of_range, "coordinate out of range");
    const Matrix& g = c.generator();
    std::size_t n = c.length();
    std::vector<std::size_t> others;
    others.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != i) others.push_back(j);

    std::vector<RecoveryVector> out;
    for (std::size_t w = 0; w <= r && w < n; ++w) {
        std::vector<std::size_t> pick(w);
        for (std::size_t t = 0; t < w; ++t) pick[t] = t;
        bool more = true;
        while (more) {
            std::vector<std::size_t> supp;
            supp.reserve(w + 1);
            for (std::size_t t : pick) supp.push_back(others[t]);
            supp.push_back(i);
            std::sort(supp.begin(), supp.end());

            Matrix ker = g.select_columns(supp).kernel();
            std::vector<Elt> local;
            if (find_full_support(ker, local)) out.push_back(build_vector(c, i, supp, local));

            more = w > 0 && next_colex(pick, others.size());
            if (w == 0) more = false;
        }
    }
    return out;
}

std::size_t locality(const LinearCode& c) {
    std::size_t n = c.length();
    const Matrix& h = c.parity_check();
    if (h.rows() == 0) throw Error(Errc::no_recovery, "dual code is zero");
    for (std::size_t i = 0; i < n; ++i) {
        bool nonzero = false;
        for (std::size_t row = 0; row < h.rows(); ++row) nonzero |= (h.at(row, i) != 0);
        if (!nonzero) throw Error(Errc::no_recovery, "coordinate outside every dual support");
    }
    for (std::size_t r = 1; r < n; ++r) {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i)
            all = !enumerate_recovery_vectors(c, i, r).empty();
        if (all) return r;
    }
    throw Error(Errc::no_recovery, "no locality up to n-1");
}

std::size_t alternativity(const LinearCode& c, std::size_t r) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < c.length(); ++i)
        best = std::min(best, enumerate_recovery_vectors(c, i, r).size());
    return best;
}

std::uint64_t alternativity_scan_cost(std::size_t n, std::size_t r) {
    std::uint64_t per_coord = 0;
    for (std::size_t w = 0; w <= r && w < n; ++w)
        per_coord = sat_add(per_coord, binom(n - 1, w));
    return sat_mul(per_coord, n);
}

std::vector<std::vector<std::size_t>> recovery_supports_via_dual(const LinearCode& c,
                                                                 std::size_t i, std::size_t r) {
    const Field& f = *c.field();
    const Matrix& h = c.parity_check();
    std::size_t dk = h.rows(), n = c.length();
    std::uint64_t q = f.order(), total = 1;
    for (std::size_t t = 0; t < dk; ++t) {
        total = sat_mul(total, q);
        if (total > 1000000ULL) throw Error(Errc::budget_exceeded, "dual too large to enumerate");
    }
    std::vector<std::vector<std::size_t>> supports;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t x = idx;
        std::vector<Elt> msg(dk);
        for (std::size_t t = 0; t < dk; ++t) {
            msg[t] = static_cast<Elt>(x % q);
            x /= q;
        }
        std::vector<Elt> v = h.left_mul(msg);
        if (v[i] == 0) continue;
        std::vector<std::size_t> supp;
        for (std::size_t j = 0; j < n; ++j)
            if (v[j] != 0) supp.push_back(j);
        if (supp.size() <= r + 1) supports.push_back(std::move(supp));
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    return supports;
}

std::size_t ProductCode::flat_index(const std::vector<std::size_t>& tuple) const {
    if (tuple.size() != shape.size()) throw Error(Errc::shape_mismatch, "tuple arity != factors");
    std::size_t flat = 0;
    for (std::size_t j = 0; j < shape.size(); ++j) {
        if (tuple[j] >= shape[j]) throw Error(Errc::index_out_of_range, "tuple entry too large");
        flat = flat * shape[j] + tuple[j];
    }
    return flat;
}

std::vector<std::size_t> ProductCode::tuple_of(std::size_t flat) const {
    std::vector<std::size_t> tuple(shape.size());
    for (std::size_t j = shape.size(); j-- > 0;) {
        tuple[j] = flat % shape[j];
        flat /= shape[j];
    }
    if (flat != 0) throw Error(Errc::index_out_of_range, "flat index too large");
    return tuple;
}

std::pair<ProductCode, SlrcParams> product_slrc(
    const std::vector<std::pair<LinearCode, SlrcParams>>& factors) {
    if (factors.empty()) throw Error(Errc::parameter_violation, "need at least one factor");
    const FieldPtr& f = factors.front().first.field();
    std::size_t r = factors.front().second.r;
    for (const auto& [code, p] : factors) {
        if (!code.field()->same(*f)) throw Error(Errc::field_mismatch, "factor fields differ");
        if (p.r != r) throw Error(Errc::locality_mismatch, "factor localities differ");
        for (std::size_t i = 0; i < code.length(); ++i)
            if (enumerate_recovery_vectors(code, i, r).empty())
                throw Error(Errc::locality_mismatch,
                            code.name() + ": coordinate " + std::to_string(i) +
                                " has no recovery set at radius " + std::to_string(r));
    }

    ProductCode pc{{}, factors.front().first, {}};
    SlrcParams out;
    out.r = r;
    out.n = 1;
    out.k = 1;
    std::size_t t_plus = 1, a_sum = 0;
    bool equal_dims = true, all_exact = true;
    Matrix g = factors.front().first.generator();
    std::string name;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const auto& [code, p] = factors[j];
        pc.factors.push_back(code);
        pc.shape.push_back(code.length());
        out.n *= p.n;
        out.k *= p.k;
        t_plus *= p.t + 1;
        a_sum += p.a;
        equal_dims &= (p.k == factors.front().second.k);
        all_exact &= (p.a_tag == Tag::exact);
        if (j > 0) g = g.kronecker(code.generator());
        name += (j ? " x " : "") + code.name();
    }
    out.t = t_plus - 1;
    out.a = a_sum;
    out.a_tag = (equal_dims && all_exact) ? Tag::exact : Tag::lower_bound;
    pc.code = LinearCode(std::move(g), std::move(name));
    return {std::move(pc), out};
}

RecoveryVector lift_recovery_vector(const ProductCode& p, std::size_t axis,
                                    const RecoveryVector& v,
                                    const std::vector<std::size_t>& fixed) {
    std::size_t ell = p.shape.size();
    if (axis >= ell) throw Error(Errc::index_out_of_range, "axis out of range");
    if (fixed.size() != ell) throw Error(Errc::shape_mismatch, "fixed position arity != factors");
    for (std::size_t j = 0; j < ell; ++j)
        if (j != axis && fixed[j] >= p.shape[j])
            throw Error(Errc::index_out_of_range, "fixed position out of range");

    RecoveryVector out;
    std::vector<std::size_t> tuple = fixed;
    tuple[axis] = v.target;
    out.target = p.flat_index(tuple);
    out.v.assign(p.code.length(), 0);
    for (std::size_t s : v.support) {
        tuple[axis] = s;
        std::size_t flat = p.flat_index(tuple);
        out.v[flat] = v.v[s];
        out.support.push_back(flat);
        if (flat != out.target) out.set.push_back(flat);
    }
    std::sort(out.support.begin(), out.support.end());
    std::sort(out.set.begin(), out.set.end());
    const Field& f = *p.code.field();
    Elt inv_vi = f.inv(out.v[out.target]);
    for (std::size_t j : out.set) out.coeffs.push_back(f.neg(f.mul(out.v[j], inv_vi)));
    return out;
}

VerifyResult verify_slrc_exhaustive(const LinearCode& c, std::size_t r, std::size_t t,
                                    std::uint64_t budget_sets) {
    std::size_t n = c.length();
    if (n > 64) throw Error(Errc::out_of_range, "length above 64 unsupported");
    if (t > n) t = n;

    std::uint64_t total = 0;
    for (std::size_t s = 1; s <= t; ++s) total = sat_add(total, binom(n, s));
    if (total > budget_sets) throw Error(Errc::budget_exceeded, "too many erasure sets");

    // recovery sets per coordinate, as masks of the set (target excluded)
    std::vector<std::vector<std::uint64_t>> table(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const RecoveryVector& rv : enumerate_recovery_vectors(c, i, r)) {
            std::uint64_t m = 0;
            for (std::size_t j : rv.set) m |= 1ULL << j;
            table[i].push_back(m);
        }

    auto recoverable = [&](std::uint64_t erased) {
        std::uint64_t e = erased;
        bool progress = true;
        while (e && progress) {
            progress = false;
            std::uint64_t scan = e;
            while (scan) {
                std::size_t i = static_cast<std::size_t>(std::countr_zero(scan));
                scan &= scan - 1;
                for (std::uint64_t m : table[i])
                    if ((m & e) == 0) {
                        e &= ~(1ULL << i);
                        progress = true;
                        break;
                    }
            }
        }
        return e == 0;
    };

    for (std::size_t s = 1; s <= t; ++s) {
        std::vector<std::size_t> pick(s);
        for (std::size_t j = 0; j < s; ++j) pick[j] = j;
        bool more = true;
        while (more) {
            std::uint64_t e = 0;
            for (std::size_t j : pick) e |= 1ULL << j;
            if (!recoverable(e)) return {false, pick};
            more = next_colex(pick, n);
        }
    }
    return {true, {}};
}

BoundsReport check_bounds(const SlrcParams& p, std::size_t d) {
    BoundsReport rep;
    std::int64_t ceil_kr = static_cast<std::int64_t>((p.k + p.r - 1) / p.r);
    rep.singleton_like_rhs =
        static_cast<std::int64_t>(p.n) - static_cast<std::int64_t>(p.k) - ceil_kr + 2;
    rep.singleton_like_ok = static_cast<std::int64_t>(d) <= rep.singleton_like_rhs;
    rep.rate_ok = p.k * (p.r + 1) <= p.n * p.r;
    rep.rate_optimal = p.k * (p.r + 1) == p.n * p.r;
    return rep;
}

} // namespace slrc
