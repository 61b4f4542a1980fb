#include "slrc/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slrc {

namespace {

// Messages are enumerated one per scalar class: the first nonzero digit is 1.
// Class j fixes msg[0..j-1] = 0, msg[j] = 1 and lets msg[j+1..k-1] run free,
// so the total count is (q^k - 1) / (q - 1). Ranks order classes by j and
// order suffixes as base-q counters with msg[k-1] least significant.
std::uint64_t class_count(std::uint64_t q, std::size_t k) {
    std::uint64_t total = 0, pw = 1;
    for (std::size_t j = 0; j < k; ++j) {
        total += pw; // classes enumerated from j = k-1 down: q^0 + q^1 + ...
        pw *= q;
    }
    return total;
}

struct Walker {
    const Matrix& g;
    const Field& f;
    std::size_t k, n;
    std::uint64_t q;
    std::vector<Elt> msg;
    std::vector<Elt> cw;
    std::size_t best;

    Walker(const Matrix& gen)
        : g(gen), f(*gen.field()), k(gen.rows()), n(gen.cols()), q(f.order()),
          msg(k, 0), cw(n, 0), best(n + 1) {}

    void apply(std::size_t row, Elt delta) {
        if (delta == 0) return;
        for (std::size_t i = 0; i < n; ++i)
            cw[i] = f.add(cw[i], f.mul(delta, g.at(row, i)));
    }

    void set_digit(std::size_t row, Elt v) {
        apply(row, f.sub(v, msg[row]));
        msg[row] = v;
    }

    void seek(std::uint64_t rank) {
        // decode rank into a message and rebuild the codeword
        std::fill(msg.begin(), msg.end(), 0);
        std::fill(cw.begin(), cw.end(), 0);
        std::size_t j = k;
        std::uint64_t pw = 1;
        while (j > 0) {
            --j;
            if (rank < pw) break;
            rank -= pw;
            pw *= q;
        }
        set_digit(j, 1);
        for (std::size_t t = k; t > j + 1; --t) {
            set_digit(t - 1, static_cast<Elt>(rank % q));
            rank /= q;
        }
    }

    void score() {
        std::size_t w = 0;
        for (Elt c : cw) w += (c != 0);
        if (w && w < best) best = w;
    }

    // advance to the next rank; returns false when the class space is done
    bool next() {
        std::size_t lead = 0;
        while (lead < k && msg[lead] == 0) ++lead;
        for (std::size_t t = k; t > lead + 1; --t) {
            Elt v = msg[t - 1];
            if (v + 1 < q) {
                set_digit(t - 1, v + 1);
                return true;
            }
            set_digit(t - 1, 0);
        }
        if (lead == 0) return false;
        set_digit(lead, 0);
        set_digit(lead - 1, 1);
        return true;
    }
};

std::size_t run_range(const Matrix& g, std::uint64_t lo, std::uint64_t hi) {
    Walker w(g);
    w.seek(lo);
    for (std::uint64_t r = lo; r < hi; ++r) {
        w.score();
        if (r + 1 < hi && !w.next()) break;
    }
    return w.best;
}

} // namespace

std::uint64_t enumeration_budget() {
    if (const char* s = std::getenv("SLRC_BUDGET_OPS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100000000ULL;
}

DistanceResult min_weight_serial(const Matrix& G, std::uint64_t budget_msgs) {
    if (G.rows() == 0) throw Error(Errc::dimension_mismatch, "empty generator");
    std::uint64_t total = class_count(G.field()->order(), G.rows());
    bool exact = total <= budget_msgs;
    std::uint64_t limit = exact ? total : budget_msgs;
    std::size_t best = run_range(G, 0, limit);
    if (best > G.cols()) throw Error(Errc::rank_drop, "generator has a zero row space vector");
    return {best, exact};
}

DistanceResult min_weight_parallel(const Matrix& G, std::uint64_t budget_msgs) {
    if (G.rows() == 0) throw Error(Errc::dimension_mismatch, "empty generator");
    std::uint64_t total = class_count(G.field()->order(), G.rows());
    bool exact = total <= budget_msgs;
    std::uint64_t limit = exact ? total : budget_msgs;

    int parts = 1;
#ifdef _OPENMP
    parts = std::max(1, omp_get_max_threads());
#endif
    std::uint64_t chunk = (limit + parts - 1) / parts;
    std::vector<std::size_t> part_best(parts, G.cols() + 1);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int t = 0; t < parts; ++t) {
        std::uint64_t lo = std::min<std::uint64_t>(limit, static_cast<std::uint64_t>(t) * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(limit, lo + chunk);
        if (lo < hi) part_best[t] = run_range(G, lo, hi);
    }

    std::size_t best = *std::min_element(part_best.begin(), part_best.end());
    if (best > G.cols()) throw Error(Errc::rank_drop, "generator has a zero row space vector");
    return {best, exact};
}

LinearCode::LinearCode(Matrix generator, std::string name)
    : gen_(std::move(generator)), name_(std::move(name)) {
    if (gen_.rows() == 0 || gen_.cols() == 0)
        throw Error(Errc::dimension_mismatch, "generator must be nonempty");
    if (gen_.rank() != gen_.rows())
        throw Error(Errc::rank_drop, "generator rows are linearly dependent");
}

const Matrix& LinearCode::parity_check() const {
    if (!parity_) parity_ = gen_.kernel();
    return *parity_;
}

std::vector<Elt> LinearCode::encode(const std::vector<Elt>& msg) const {
    return gen_.left_mul(msg);
}

LinearCode LinearCode::dual(std::string name) const {
    if (name.empty() && !name_.empty()) name = name_ + "^perp";
    return LinearCode(parity_check(), std::move(name));
}

DistanceResult LinearCode::min_distance(std::uint64_t budget_msgs) const {
    if (dist_ && dist_->exact) return *dist_;
    DistanceResult r = min_weight_parallel(gen_, budget_msgs);
    if (!dist_ || r.exact || r.d < dist_->d) dist_ = r;
    return *dist_;
}

DistanceResult LinearCode::min_distance_serial(std::uint64_t budget_msgs) const {
    return min_weight_serial(gen_, budget_msgs);
}

void LinearCode::set_known_distance(std::size_t d) const {
    dist_ = DistanceResult{d, true};
}

LinearCode LinearCode::punctured(const std::vector<std::size_t>& positions_1based) const {
    std::vector<std::size_t> drop;
    drop.reserve(positions_1based.size());
    for (std::size_t p : positions_1based) {
        if (p < 1 || p > length())
            throw Error(Errc::index_out_of_range, "puncture position out of range");
        drop.push_back(p - 1);
    }
    std::sort(drop.begin(), drop.end());
    if (std::adjacent_find(drop.begin(), drop.end()) != drop.end())
        throw Error(Errc::parameter_violation, "duplicate puncture position");
    std::string nm = name_;
    if (!nm.empty()) {
        nm += "*{";
        for (std::size_t i = 0; i < positions_1based.size(); ++i)
            nm += (i ? "," : "") + std::to_string(positions_1based[i]);
        nm += "}";
    }
    return LinearCode(gen_.drop_columns(drop), std::move(nm));
}

bool LinearCode::is_mds() const {
    DistanceResult r = min_distance();
    if (!r.exact) throw Error(Errc::distance_unknown, "distance budget exhausted");
    return r.d == length() - dim() + 1;
}

LinearCode make_P(std::uint32_t q) {
    FieldPtr f = field_of_order(q);
    if (q == 3) {
        LinearCode c(Matrix(f, {{1, 0, 1, 2}, {0, 1, 1, 1}}), "P(3)");
        c.set_known_distance(3);
        return c;
    }
    // evaluate (1, x) at all field points plus the point at infinity
    Matrix g(f, 2, q + 1);
    for (std::uint32_t j = 0; j < q; ++j) {
        g.at(0, j) = 1;
        g.at(1, j) = f->element(j);
    }
    g.at(1, q) = 1;
    RrefResult r = g.rref();
    LinearCode c(r.mat, "P(" + std::to_string(q) + ")");
    c.set_known_distance(q);
    return c;
}

LinearCode make_D(std::uint32_t q, std::size_t n) {
    if (n < 2) throw Error(Errc::parameter_violation, "length must be at least 2");
    FieldPtr f = field_of_order(q);
    Matrix g(f, n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        g.at(i, i) = 1;
        g.at(i, n - 1) = 1;
    }
    LinearCode c(std::move(g), "D(" + std::to_string(q) + "," + std::to_string(n) + ")");
    c.set_known_distance(2);
    return c;
}

LinearCode make_R(std::uint32_t q, std::size_t n, std::size_t k) {
    if (k < 1 || k > n || n > q)
        throw Error(Errc::parameter_violation, "need 1 <= k <= n <= q");
    FieldPtr f = field_of_order(q);
    Matrix g(f, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elt x = f->element(j);
        Elt p = 1;
        for (std::size_t i = 0; i < k; ++i) {
            g.at(i, j) = p;
            p = f->mul(p, x);
        }
    }
    LinearCode c(std::move(g), "R(" + std::to_string(q) + "," + std::to_string(n) + "," +
                                   std::to_string(k) + ")");
    c.set_known_distance(n - k + 1);
    return c;
}

LinearCode make_BCH(std::uint32_t q, std::size_t n, std::size_t d) {
    if (!is_prime(q)) throw Error(Errc::parameter_violation, "base field must be prime order");
    if (n < 2 || d < 2 || d > n) throw Error(Errc::parameter_violation, "need 2 <= d <= n");
    if (n % q == 0) throw Error(Errc::parameter_violation, "length must be coprime to q");

    // multiplicative order of q mod n gives the splitting field degree
    std::uint32_t m = 1;
    std::uint64_t pw = q % n;
    while (pw != 1) {
        pw = (pw * q) % n;
        ++m;
        if (m > 4) throw Error(Errc::degree_out_of_range, "splitting field degree above 4");
    }
    FieldPtr ext = (m == 1) ? field_of_order(q) : make_extension_field(q, m);
    Elt alpha = ext->primitive_element();
    Elt beta = ext->pow(alpha, (ext->order() - 1) / n);

    // cyclotomic cosets of 1..d-1 mod n under multiplication by q
    std::vector<bool> in_root(n, false);
    for (std::size_t i = 1; i < d; ++i) {
        std::size_t c = i;
        while (!in_root[c]) {
            in_root[c] = true;
            c = (c * q) % n;
        }
    }
    // g(x) = prod over roots (x - beta^i), computed in the extension field
    std::vector<Elt> g{1};
    for (std::size_t i = 1; i < n; ++i) {
        if (!in_root[i]) continue;
        Elt root = ext->pow(beta, i);
        std::vector<Elt> next(g.size() + 1, 0);
        for (std::size_t t = 0; t < g.size(); ++t) {
            next[t + 1] = ext->add(next[t + 1], g[t]);
            next[t] = ext->sub(next[t], ext->mul(root, g[t]));
        }
        g = std::move(next);
    }
    // coefficients lie in the prime subfield, whose canonical indices are 0..q-1
    for (Elt c : g)
        if (c >= q) throw Error(Errc::parameter_violation, "generator polynomial not over GF(q)");

    std::size_t deg = g.size() - 1;
    if (deg >= n) throw Error(Errc::parameter_violation, "design distance leaves no dimension");
    FieldPtr base = field_of_order(q);
    Matrix gen(base, n - deg, n);
    for (std::size_t i = 0; i < n - deg; ++i)
        for (std::size_t t = 0; t <= deg; ++t) gen.at(i, i + t) = g[t];
    return LinearCode(std::move(gen), "B(" + std::to_string(q) + "," + std::to_string(n) + "," +
                                         std::to_string(d) + ")");
}

} // namespace slrc
