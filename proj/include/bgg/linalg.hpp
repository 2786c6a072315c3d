#pragma once

#include <optional>
#include <vector>

#include "bgg/matrix.hpp"

namespace bgg {

struct RrefResult {
    RationalMatrix reduced;
    std::vector<int> pivot_cols;  // strictly increasing
    int rank = 0;
};

// Reduced row echelon form by Gauss-Jordan elimination. Pivot choice is
// deterministic: leftmost nonzero column, topmost nonzero row; no magnitude
// heuristics (pointless over exact rationals). rref() dispatches to the
// parallel row-elimination kernel on large inputs; results are identical.
RrefResult rref_serial(const RationalMatrix& m);
RrefResult rref_parallel(const RationalMatrix& m);
RrefResult rref(const RationalMatrix& m);

int rank(const RationalMatrix& m);

// Basis of the null space, one column per free variable in increasing column
// order (standard construction from the rref), each column scaled so its first
// nonzero entry is 1.
RationalMatrix kernel_basis(const RationalMatrix& m);

// Basis of the column space: the original columns of m at the pivot indices.
RationalMatrix image_basis(const RationalMatrix& m);

// Particular solution of m x = b with all free variables set to zero;
// std::nullopt if the system is inconsistent. b must be a column.
std::optional<RationalMatrix> solve(const RationalMatrix& m, const RationalMatrix& b);

// Columnwise solve: X with m X = B, free variables zero; nullopt if any
// column is inconsistent.
std::optional<RationalMatrix> solve_matrix(const RationalMatrix& m, const RationalMatrix& B);

enum class ComplementPolicy {
    GreedyLow,  // standard basis vectors at the non-pivot positions (default)
    Skewed,     // GreedyLow vectors each shifted by the sum of sub's columns;
                // spans a different complement, used to certify that verdicts
                // do not depend on the complement choice
};

// Basis completing span(sub) to the ambient space. GreedyLow takes e_i at the
// non-pivot positions of rref(transpose(sub)) in increasing index order (a
// descending greedy rank-extension scan provably picks the same positions, so
// a genuinely different complement needs the Skewed policy). Throws if the
// columns of sub are dependent.
RationalMatrix complement_basis(const RationalMatrix& sub, int ambient_dim,
                                ComplementPolicy policy = ComplementPolicy::GreedyLow);

// Inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Exact determinant via fraction-tracking Gaussian elimination.
Rational determinant(const RationalMatrix& m);

// Deterministic pseudoinverse data for a map S : Q^n -> Q^m.
//   T S T = T, S T S = S, P_C = I - S T, P_K = I - T S.
// T inverts S from the chosen complement of ker S onto img S and kills the
// chosen complement of img S. All four bases are fixed by `policy`.
struct PseudoInverse {
    RationalMatrix T;             // n x m
    RationalMatrix P_C;           // m x m, projection with kernel img S
    RationalMatrix P_K;           // n x n, projection with image ker S
    RationalMatrix kernel;        // ker S basis (n x k)
    RationalMatrix ker_complement;    // complement of ker S (n x (n-k)) = img T
    RationalMatrix image;         // img S basis (m x r)
    RationalMatrix img_complement;    // complement of img S (m x (m-r))
};

PseudoInverse pseudoinverse(const RationalMatrix& s,
                            ComplementPolicy policy = ComplementPolicy::GreedyLow);

// Rank over GF(p), p = 1000003 by default; an independent shadow of the exact
// rank. nullopt when some denominator vanishes mod p.
std::optional<int> modp_rank(const RationalMatrix& m, long p = 1000003);

}  // namespace bgg
