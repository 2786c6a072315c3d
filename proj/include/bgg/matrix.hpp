#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "bgg/rational.hpp"

namespace bgg {

// Dense row-major matrix over Rational. Zero-dimensional shapes (0 x n, n x 0)
// are first-class values; they arise at every complex boundary.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(int n);
    static RationalMatrix zero(int rows, int cols) { return RationalMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool same_shape(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_;
    }

    RationalMatrix transpose() const;
    RationalMatrix operator-() const;
    RationalMatrix& operator+=(const RationalMatrix& o);
    RationalMatrix& operator-=(const RationalMatrix& o);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix scaled(const Rational& c) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

    RationalMatrix block(int r0, int c0, int nrows, int ncols) const;
    void set_block(int r0, int c0, const RationalMatrix& m);
    RationalMatrix col(int c) const { return block(0, c, rows_, 1); }

    // Kronecker product with the identity: self ⊗ I_m.
    RationalMatrix kron_identity(int m) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix vcat(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b);

// 2x2 block assembly [[a, b], [c, d]]; shapes must be conformal.
RationalMatrix block2x2(const RationalMatrix& a, const RationalMatrix& b,
                        const RationalMatrix& c, const RationalMatrix& d);

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

// Multiplication kernels. multiply() dispatches to the OpenMP path when the
// work is large enough; both paths produce bit-identical results because the
// arithmetic is exact and output entries are disjoint.
RationalMatrix multiply_serial(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix multiply_parallel(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace bgg
