#include "bgg/matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace bgg {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative shape");
    e_.resize(static_cast<size_t>(rows) * cols);
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("matrix: ragged initializer");
        for (long v : r) e_.emplace_back(v);
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
    if (!same_shape(o)) throw std::invalid_argument("matrix: shape mismatch in +");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
    if (!same_shape(o)) throw std::invalid_argument("matrix: shape mismatch in -");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    return multiply(*this, o);
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
    RationalMatrix m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
    return m;
}

RationalMatrix RationalMatrix::block(int r0, int c0, int nrows, int ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw std::invalid_argument("matrix: block out of range");
    RationalMatrix m(nrows, ncols);
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncols; ++c) m.at(r, c) = at(r0 + r, c0 + c);
    return m;
}

void RationalMatrix::set_block(int r0, int c0, const RationalMatrix& m) {
    if (r0 < 0 || c0 < 0 || r0 + m.rows() > rows_ || c0 + m.cols() > cols_)
        throw std::invalid_argument("matrix: set_block out of range");
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) at(r0 + r, c0 + c) = m.at(r, c);
}

RationalMatrix RationalMatrix::kron_identity(int m) const {
    if (m < 0) throw std::invalid_argument("matrix: negative kron factor");
    RationalMatrix k(rows_ * m, cols_ * m);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const Rational& v = at(r, c);
            if (v.is_zero()) continue;
            for (int s = 0; s < m; ++s) k.at(r * m + s, c * m + s) = v;
        }
    return k;
}

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("matrix: hcat row mismatch");
    RationalMatrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

RationalMatrix vcat(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("matrix: vcat col mismatch");
    RationalMatrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

RationalMatrix block2x2(const RationalMatrix& a, const RationalMatrix& b,
                        const RationalMatrix& c, const RationalMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols())
        throw std::invalid_argument("matrix: block2x2 shape mismatch");
    RationalMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    m.set_block(a.rows(), 0, c);
    m.set_block(a.rows(), a.cols(), d);
    return m;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << "[";
    for (int r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
    }
    return os << "]";
}

namespace {

void row_dot(RationalMatrix& out, const RationalMatrix& a, const RationalMatrix& b, int r) {
    Rational acc, term;
    for (int c = 0; c < b.cols(); ++c) {
        acc = Rational(0);
        for (int k = 0; k < a.cols(); ++k) {
            term = a.at(r, k) * b.at(k, c);
            acc += term;
        }
        out.at(r, c) = acc;
    }
}

}  // namespace

RationalMatrix multiply_serial(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix: multiply shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) row_dot(out, a, b, r);
    return out;
}

RationalMatrix multiply_parallel(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix: multiply shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < a.rows(); ++r) row_dot(out, a, b, r);
    return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    long work = static_cast<long>(a.rows()) * b.cols() * (a.cols() ? a.cols() : 1);
    if (work >= 4096) return multiply_parallel(a, b);
    return multiply_serial(a, b);
}

}  // namespace bgg
