#pragma once

#include <string>
#include <vector>

#include "bgg/complex.hpp"
#include "bgg/cones.hpp"
#include "bgg/linalg.hpp"

namespace bgg {

// Degreewise img S^(i-1) (+) img T^i with the differential [[0, S],[0, 0]]:
// the only nonzero block carries the T-image isomorphically onto the next
// S-image, so the complex is exact in every degree regardless of S.
struct MiddleTermComplex {
    CochainComplex M;
    std::vector<RationalMatrix> s_img_basis;  // img S^(i-1) inside B^i
    std::vector<RationalMatrix> t_img_basis;  // img T^i inside A^i
};

// Pseudoinverse reduction of a linked pair of rows. Everything below lives
// in the sign-alternated picture, where the linking map anticommutes and
// [[d_B, S],[0, d_A]] is a differential; the seam block -P_K d T d is the
// same matrix in either picture because its two differentials alternate at
// the same degree.
struct BGGReduction {
    TwoRowDiagram diag;  // the commuting input
    CochainComplex A_alt, B_alt;
    int lo = 0, hi = -1;  // union degree window

    // T[k] is the pseudoinverse of S^(lo-1+k), so P_C and P_K at degree i
    // use T at i-1 and i respectively.
    std::vector<RationalMatrix> T;
    std::vector<RationalMatrix> P_C;            // I - S T on B^i
    std::vector<RationalMatrix> P_K;            // I - T S on A^i
    std::vector<RationalMatrix> L, L_inv;       // unitriangular on B^i (+) A^i

    CochainComplex cone;        // [[d_B, S],[0, d_A]], alternated rows
    CochainComplex conjugated;  // same spaces, differential L^(-1) d L
    CochainComplex reduced;     // C^i (+) K^i, C first
    std::vector<RationalMatrix> c_basis;  // range of P_C inside B^i
    std::vector<RationalMatrix> k_basis;  // ker S^i inside A^i
    MiddleTermComplex middle;

    ChainMap lift;  // reduced -> cone, L after the subspace inclusion
    ChainMap quot;  // cone -> middle, projection coordinates after L^(-1)

    RationalMatrix T_at(int i) const;
    RationalMatrix P_C_at(int i) const;
    RationalMatrix P_K_at(int i) const;
    RationalMatrix L_at(int i) const;
    RationalMatrix L_inv_at(int i) const;
    RationalMatrix c_basis_at(int i) const;
    RationalMatrix k_basis_at(int i) const;
    int c_dim(int i) const;
    int k_dim(int i) const;

    // Block of the reduced differential from the complement part at degree i
    // to the kernel part at degree i+1. Under an accepted rank pattern it
    // vanishes away from the pivot and equals minus the seam matrix there.
    RationalMatrix seam_block(int i) const;
};

// Throws invalid_argument when the diagram fails validation. The complement
// choices behind T follow the given policy; certificates must not depend on
// it.
BGGReduction bgg_reduce(const TwoRowDiagram& diag,
                        ComplementPolicy policy = ComplementPolicy::GreedyLow);

CochainComplex reduced_complex(const BGGReduction& r);
ChainMap lifting_map(const BGGReduction& r);
ChainMap quotient_map(const BGGReduction& r);

// 0 -> reduced -> cone -> middle -> 0, degreewise exact.
ShortExactSequenceOfComplexes reduction_ses(const BGGReduction& r);

struct QuasiIsoCertificate {
    std::vector<int> betti_middle;  // all zero when the certificate holds
    bool middle_exact = false;
    InducedMap induced_lift;
    bool lift_invertible = false;
    std::vector<int> betti_reduced;
    std::vector<int> betti_cone;
    bool betti_match = false;

    bool ok() const { return middle_exact && lift_invertible && betti_match; }
    std::string to_string() const;
};

QuasiIsoCertificate verify_quasi_iso(const BGGReduction& r);

}  // namespace bgg
