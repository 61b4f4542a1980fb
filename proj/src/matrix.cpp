#include "slrc/matrix.hpp"

#include <algorithm>

namespace slrc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : f_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elt> entries)
    : f_(std::move(field)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw Error(Errc::dimension_mismatch, "entry count does not match dimensions");
}

Matrix::Matrix(FieldPtr field, std::initializer_list<std::initializer_list<int>> rows)
    : f_(std::move(field)), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(Errc::dimension_mismatch, "ragged initializer");
        for (int v : r) {
            std::int64_t q = static_cast<std::int64_t>(f_->order());
            std::int64_t w = ((v % q) + q) % q;
            e_.push_back(static_cast<Elt>(w));
        }
    }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.f_->one();
    return m;
}

void Matrix::check_same_field(const Matrix& other) const {
    if (!f_->same(*other.f_)) throw Error(Errc::field_mismatch, "operands over different fields");
}

std::vector<Elt> Matrix::row(std::size_t r) const {
    return std::vector<Elt>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

std::vector<Elt> Matrix::col(std::size_t c) const {
    std::vector<Elt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

Matrix Matrix::mul(const Matrix& rhs) const {
    check_same_field(rhs);
    if (cols_ != rhs.rows_) throw Error(Errc::dimension_mismatch, "inner dimensions differ");
    const Field& f = *f_;
    Matrix out(f_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elt a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(a, rhs.at(k, j)));
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::kronecker(const Matrix& rhs) const {
    check_same_field(rhs);
    const Field& f = *f_;
    Matrix out(f_, rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Elt a = at(i, j);
            if (a == 0) continue;
            for (std::size_t r = 0; r < rhs.rows_; ++r)
                for (std::size_t c = 0; c < rhs.cols_; ++c)
                    out.at(i * rhs.rows_ + r, j * rhs.cols_ + c) = f.mul(a, rhs.at(r, c));
        }
    return out;
}

std::vector<Elt> Matrix::left_mul(const std::vector<Elt>& msg) const {
    if (msg.size() != rows_) throw Error(Errc::dimension_mismatch, "message length != rows");
    const Field& f = *f_;
    std::vector<Elt> out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Elt a = msg[i];
        if (a == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) out[j] = f.add(out[j], f.mul(a, at(i, j)));
    }
    return out;
}

std::vector<Elt> Matrix::right_mul(const std::vector<Elt>& v) const {
    if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "vector length != cols");
    const Field& f = *f_;
    std::vector<Elt> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0 && at(i, j) != 0) out[i] = f.add(out[i], f.mul(at(i, j), v[j]));
    return out;
}

RrefResult Matrix::rref() const {
    const Field& f = *f_;
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
        std::size_t piv = lead_row;
        while (piv < rows_ && m.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != lead_row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead_row, j));
        Elt s = f.inv(m.at(lead_row, c));
        for (std::size_t j = 0; j < cols_; ++j) m.at(lead_row, j) = f.mul(s, m.at(lead_row, j));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead_row) continue;
            Elt a = m.at(r, c);
            if (a == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(a, m.at(lead_row, j)));
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

Matrix Matrix::kernel() const {
    const Field& f = *f_;
    RrefResult r = rref();
    const std::size_t rk = r.pivots.size();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    Matrix basis(f_, cols_ - rk, cols_);
    std::size_t row = 0;
    for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
        if (is_pivot[free_c]) continue;
        basis.at(row, free_c) = f.one();
        for (std::size_t pi = 0; pi < rk; ++pi)
            basis.at(row, r.pivots[pi]) = f.neg(r.mat.at(pi, free_c));
        ++row;
    }
    return basis.rref().mat;
}

Matrix::Solution Matrix::solve(const std::vector<Elt>& rhs) const {
    if (rhs.size() != rows_) throw Error(Errc::dimension_mismatch, "rhs length != rows");
    // eliminate on [M | rhs]
    Matrix aug(f_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = rhs[i];
    }
    RrefResult r = aug.rref();
    Solution sol;
    sol.kernel_dim = cols_;
    std::size_t rk = 0;
    for (std::size_t c : r.pivots) {
        if (c == cols_) return sol; // pivot in rhs column: inconsistent
        ++rk;
    }
    sol.solvable = true;
    sol.kernel_dim = cols_ - rk;
    sol.x.assign(cols_, 0);
    for (std::size_t pi = 0; pi < rk; ++pi) sol.x[r.pivots[pi]] = r.mat.at(pi, cols_);
    return sol;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& keep) const {
    Matrix out(f_, rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if (keep[j] >= cols_) throw Error(Errc::index_out_of_range, "column index out of range");
            out.at(i, j) = at(i, keep[j]);
        }
    return out;
}

Matrix Matrix::drop_columns(const std::vector<std::size_t>& drop) const {
    std::vector<bool> gone(cols_, false);
    for (std::size_t c : drop) {
        if (c >= cols_) throw Error(Errc::index_out_of_range, "column index out of range");
        gone[c] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!gone[c]) keep.push_back(c);
    return select_columns(keep);
}

Matrix Matrix::vstack(const Matrix& below) const {
    check_same_field(below);
    if (cols_ != below.cols_) throw Error(Errc::dimension_mismatch, "column counts differ");
    std::vector<Elt> e = e_;
    e.insert(e.end(), below.e_.begin(), below.e_.end());
    return Matrix(f_, rows_ + below.rows_, cols_, std::move(e));
}

bool Matrix::operator==(const Matrix& other) const {
    return f_->same(*other.f_) && rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
}

bool Matrix::row_space_equals(const Matrix& other) const {
    check_same_field(other);
    if (cols_ != other.cols_) return false;
    RrefResult a = rref(), b = other.rref();
    if (a.pivots != b.pivots) return false;
    std::size_t ra = a.pivots.size();
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (a.mat.at(i, j) != b.mat.at(i, j)) return false;
    return true;
}

std::vector<Elt> kron_vec(const Field& f, const std::vector<Elt>& a, const std::vector<Elt>& b) {
    std::vector<Elt> out;
    out.reserve(a.size() * b.size());
    for (Elt x : a)
        for (Elt y : b) out.push_back(f.mul(x, y));
    return out;
}

} // namespace slrc
