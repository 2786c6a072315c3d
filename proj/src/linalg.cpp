#include "bgg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgg {

namespace {

// Eliminates column `col` from every row except `prow` using the (already
// normalized) pivot row. Row updates are independent, so the parallel path is
// a plain omp-for; exact arithmetic keeps both paths bit-identical.
void eliminate_row(RationalMatrix& r, int i, int prow, int col) {
    if (i == prow || r.at(i, col).is_zero()) return;
    Rational f = r.at(i, col);
    for (int c = col; c < r.cols(); ++c) {
        if (!r.at(prow, c).is_zero()) r.at(i, c) -= f * r.at(prow, c);
    }
}

template <bool Parallel>
void eliminate(RationalMatrix& r, int prow, int col) {
    const int nrows = r.rows();
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < nrows; ++i) eliminate_row(r, i, prow, col);
    } else {
        for (int i = 0; i < nrows; ++i) eliminate_row(r, i, prow, col);
    }
}

template <bool Parallel>
RrefResult rref_impl(const RationalMatrix& m) {
    RrefResult res;
    res.reduced = m;
    RationalMatrix& r = res.reduced;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int p = -1;
        for (int i = row; i < r.rows(); ++i) {
            if (!r.at(i, col).is_zero()) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != row) {
            for (int c = 0; c < r.cols(); ++c) std::swap(r.at(p, c), r.at(row, c));
        }
        Rational piv = r.at(row, col);
        if (piv != Rational(1)) {
            Rational pinv = piv.inv();
            for (int c = col; c < r.cols(); ++c) {
                if (!r.at(row, c).is_zero()) r.at(row, c) *= pinv;
            }
        }
        eliminate<Parallel>(r, row, col);
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = static_cast<int>(res.pivot_cols.size());
    return res;
}

}  // namespace

RrefResult rref_serial(const RationalMatrix& m) { return rref_impl<false>(m); }
RrefResult rref_parallel(const RationalMatrix& m) { return rref_impl<true>(m); }

RrefResult rref(const RationalMatrix& m) {
    if (static_cast<long>(m.rows()) * m.cols() >= 1024) return rref_parallel(m);
    return rref_serial(m);
}

int rank(const RationalMatrix& m) { return rref(m).rank; }

RationalMatrix kernel_basis(const RationalMatrix& m) {
    RrefResult rr = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;

    RationalMatrix k(n, n - rr.rank);
    int out = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        k.at(f, out) = Rational(1);
        for (int pi = 0; pi < rr.rank; ++pi) {
            k.at(rr.pivot_cols[pi], out) = -rr.reduced.at(pi, f);
        }
        // scale so the first nonzero entry is 1
        for (int r = 0; r < n; ++r) {
            if (!k.at(r, out).is_zero()) {
                Rational inv = k.at(r, out).inv();
                if (inv != Rational(1)) {
                    for (int q = r; q < n; ++q) {
                        if (!k.at(q, out).is_zero()) k.at(q, out) *= inv;
                    }
                }
                break;
            }
        }
        ++out;
    }
    return k;
}

RationalMatrix image_basis(const RationalMatrix& m) {
    RrefResult rr = rref(m);
    RationalMatrix b(m.rows(), rr.rank);
    for (int j = 0; j < rr.rank; ++j) {
        for (int r = 0; r < m.rows(); ++r) b.at(r, j) = m.at(r, rr.pivot_cols[j]);
    }
    return b;
}

std::optional<RationalMatrix> solve_matrix(const RationalMatrix& m, const RationalMatrix& B) {
    if (m.rows() != B.rows()) throw std::invalid_argument("solve: row mismatch");
    const int n = m.cols();
    RrefResult rr = rref(hcat(m, B));
    for (int c : rr.pivot_cols) {
        if (c >= n) return std::nullopt;  // pivot in an augmented column: inconsistent
    }
    RationalMatrix x(n, B.cols());
    for (int pi = 0; pi < rr.rank; ++pi) {
        for (int j = 0; j < B.cols(); ++j) {
            x.at(rr.pivot_cols[pi], j) = rr.reduced.at(pi, n + j);
        }
    }
    return x;
}

std::optional<RationalMatrix> solve(const RationalMatrix& m, const RationalMatrix& b) {
    if (b.cols() != 1) throw std::invalid_argument("solve: b must be a column");
    return solve_matrix(m, b);
}

RationalMatrix complement_basis(const RationalMatrix& sub, int ambient_dim,
                                ComplementPolicy policy) {
    if (sub.rows() != ambient_dim && sub.cols() > 0)
        throw std::invalid_argument("complement_basis: ambient dimension mismatch");
    RrefResult rr = rref(sub.transpose());
    if (rr.rank != sub.cols())
        throw std::invalid_argument("complement_basis: dependent columns");
    std::vector<bool> occupied(ambient_dim, false);
    for (int c : rr.pivot_cols) occupied[c] = true;
    RationalMatrix comp(ambient_dim, ambient_dim - sub.cols());
    int out = 0;
    for (int i = 0; i < ambient_dim; ++i) {
        if (!occupied[i]) comp.at(i, out++) = Rational(1);
    }
    if (policy == ComplementPolicy::Skewed && sub.cols() > 0) {
        RationalMatrix shift(ambient_dim, 1);
        for (int i = 0; i < ambient_dim; ++i) {
            Rational s(0);
            for (int j = 0; j < sub.cols(); ++j) s += sub.at(i, j);
            shift.at(i, 0) = s;
        }
        // adding a fixed vector from span(sub) to every column keeps
        // [sub | comp] column-equivalent, hence still a complement
        for (int j = 0; j < comp.cols(); ++j) {
            for (int i = 0; i < ambient_dim; ++i) comp.at(i, j) += shift.at(i, 0);
        }
    }
    return comp;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const int n = m.rows();
    RrefResult rr = rref(hcat(m, RationalMatrix::identity(n)));
    if (rr.rank != n) return std::nullopt;
    for (int i = 0; i < n; ++i) {
        if (rr.pivot_cols[i] != i) return std::nullopt;
    }
    return rr.reduced.block(0, n, n, n);
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    RationalMatrix a = m;
    const int n = a.rows();
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i) {
            if (!a.at(i, col).is_zero()) { p = i; break; }
        }
        if (p < 0) return Rational(0);
        if (p != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(p, c), a.at(col, c));
            det = -det;
        }
        det *= a.at(col, col);
        Rational pinv = a.at(col, col).inv();
        for (int i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col) * pinv;
            for (int c = col; c < n; ++c) a.at(i, c) -= f * a.at(col, c);
        }
    }
    return det;
}

PseudoInverse pseudoinverse(const RationalMatrix& s, ComplementPolicy policy) {
    const int m = s.rows(), n = s.cols();
    PseudoInverse p;
    p.kernel = kernel_basis(s);
    p.ker_complement = complement_basis(p.kernel, n, policy);
    p.image = image_basis(s);
    p.img_complement = complement_basis(p.image, m, policy);
    const int r = p.image.cols();

    // T on img S: invert S restricted to the kernel complement; T kills the
    // image complement. Assembled via T [image | img_complement] = [X | 0].
    RationalMatrix s_on_comp = multiply(s, p.ker_complement);  // m x r, full column rank
    auto y = solve_matrix(s_on_comp, p.image);
    if (!y) throw std::logic_error("pseudoinverse: image not reachable");  // impossible
    RationalMatrix x = multiply(p.ker_complement, *y);         // n x r
    RationalMatrix codomain_basis = hcat(p.image, p.img_complement);
    auto cb_inv = inverse(codomain_basis);
    if (!cb_inv) throw std::logic_error("pseudoinverse: degenerate codomain basis");
    p.T = multiply(hcat(x, RationalMatrix(n, m - r)), *cb_inv);
    p.P_C = RationalMatrix::identity(m) - multiply(s, p.T);
    p.P_K = RationalMatrix::identity(n) - multiply(p.T, s);
    return p;
}

std::optional<int> modp_rank(const RationalMatrix& m, long p) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<long> a(static_cast<size_t>(rows) * cols);
    // modular inverse by Fermat; p prime
    auto powmod = [p](long b, long e) {
        long r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    };
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            long den = m.at(i, j).den_mod(p);
            if (den == 0) return std::nullopt;
            long num = m.at(i, j).num_mod(p);
            a[static_cast<size_t>(i) * cols + j] = (num * powmod(den, p - 2)) % p;
        }
    }
    auto at = [&](int i, int j) -> long& { return a[static_cast<size_t>(i) * cols + j]; };
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int i = rk; i < rows; ++i) {
            if (at(i, col) != 0) { piv = i; break; }
        }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rk, j));
        long inv = powmod(at(rk, col), p - 2);
        for (int j = col; j < cols; ++j) at(rk, j) = (at(rk, j) * inv) % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rk || at(i, col) == 0) continue;
            long f = at(i, col);
            for (int j = col; j < cols; ++j) {
                at(i, j) = (at(i, j) - f * at(rk, j)) % p;
                if (at(i, j) < 0) at(i, j) += p;
            }
        }
        ++rk;
    }
    return rk;
}

}  // namespace bgg
