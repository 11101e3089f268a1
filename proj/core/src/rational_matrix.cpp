#include "klein_lie/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "klein_lie/errors.hpp"

namespace klein_lie {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> data) {
    rows_ = data.size();
    cols_ = rows_ ? data.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : data) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        for (const auto& x : r) entries_.push_back(x);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    RationalVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

RationalVector RationalMatrix::col(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void RationalMatrix::set_row(std::size_t r, const RationalVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    RationalMatrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                if (o.at(k, c).is_zero()) continue;
                m.at(r, c) += a * o.at(k, c);
            }
        }
    return m;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector product");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RationalMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] + o.entries_[i];
    return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RationalMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] - o.entries_[i];
    return m;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] * c;
    return m;
}

Rational RationalMatrix::trace() const {
    if (rows_ != cols_) throw NotSquare();
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& o) const {
    if (cols_ != o.cols_ && !o.empty() && !empty())
        throw std::invalid_argument("column mismatch in vstack");
    std::size_t cols = empty() ? o.cols_ : cols_;
    RationalMatrix m(rows_ + o.rows_, cols);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (std::size_t r = 0; r < o.rows_; ++r)
        for (std::size_t c = 0; c < o.cols_; ++c) m.at(rows_ + r, c) = o.at(r, c);
    return m;
}

std::vector<std::size_t> RationalMatrix::reduce() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t sel = lead;
        while (sel < rows_ && at(sel, c).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != lead)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(at(sel, k), at(lead, k));
        Rational inv = at(lead, c).inverse();
        for (std::size_t k = c; k < cols_; ++k) at(lead, k) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead || at(r, c).is_zero()) continue;
            Rational f = at(r, c);
            for (std::size_t k = c; k < cols_; ++k) at(r, k) -= f * at(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
    RationalMatrix m = *this;
    auto p = m.reduce();
    if (pivots) *pivots = std::move(p);
    return m;
}

std::size_t RationalMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::vector<RationalVector> RationalMatrix::kernel() const {
    std::vector<std::size_t> pivots;
    RationalMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols_);
        v[free] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -r.at(pr, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw NotSquare();
    RationalMatrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    auto pivots = aug.reduce();
    if (pivots.size() != rows_ || pivots.back() >= cols_) throw Degenerate();
    RationalMatrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c).str();
        }
        os << "]\n";
    }
    return os.str();
}

RationalVector eliminate(const RationalMatrix& rref_rows, const std::vector<std::size_t>& pivots,
                         RationalVector v) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Rational c = v[pivots[i]];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * rref_rows.at(i, k);
    }
    return v;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch in dot");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

bool is_zero_vector(const RationalVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

RationalVector scaled_vector(const RationalVector& v, const Rational& c) {
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
    return out;
}

void add_scaled(RationalVector& target, const RationalVector& v, const Rational& c) {
    if (target.size() != v.size()) throw std::invalid_argument("length mismatch in add_scaled");
    for (std::size_t i = 0; i < v.size(); ++i) target[i] += v[i] * c;
}

}  // namespace klein_lie
