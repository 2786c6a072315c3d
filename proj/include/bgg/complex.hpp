#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgg/linalg.hpp"
#include "bgg/matrix.hpp"

namespace bgg {

// Finite-support cochain complex: spaces sit in degrees lo..hi, the
// differential diff(i) maps degree i to degree i+1. Outside the support
// every query sees a zero space and a zero map of the right shape, so
// callers never special-case the ends of the window.
class CochainComplex {
public:
    CochainComplex() = default;  // the zero complex

    // dims[k] is the dimension at degree lo+k; diffs[k] maps degree lo+k
    // to lo+k+1 and must have shape dims[k+1] x dims[k].
    CochainComplex(int lo, std::vector<int> dims, std::vector<RationalMatrix> diffs);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool is_zero() const;

    int dim(int i) const;
    RationalMatrix diff(int i) const;

    int total_dim() const;
    long euler_characteristic() const;

    // Semantic equality: same dims and diffs at every degree, treating
    // everything outside either support as zero.
    bool operator==(const CochainComplex& o) const;
    bool operator!=(const CochainComplex& o) const { return !(*this == o); }

private:
    int lo_ = 0;
    std::vector<int> dims_;
    std::vector<RationalMatrix> diffs_;
};

struct ValidityReport {
    struct Failure {
        int degree;
        std::string what;
    };
    std::vector<Failure> failures;

    bool valid() const { return failures.empty(); }
    std::string to_string() const;
};

// Checks d(i+1) * d(i) = 0 at every degree; shape consistency is already
// enforced at construction. The report lists each failing degree.
ValidityReport validate_complex(const CochainComplex& c);

// Graded family of matrices f^i: source^i -> target^(i+shift), shift 0 or 1.
// Stored comps cover the source support; outside it comp(i) is the zero map
// of the right shape. Whether f commutes with the differentials is a
// property (is_chain_map), not a construction invariant, because tests need
// to build deliberately non-commuting families.
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(CochainComplex source, CochainComplex target, int shift,
             std::vector<RationalMatrix> comps);  // comps[k] at degree source.lo()+k

    const CochainComplex& source() const { return source_; }
    const CochainComplex& target() const { return target_; }
    int shift() const { return shift_; }

    RationalMatrix comp(int i) const;

    // d_target(i+shift) * f(i) - f(i+1) * d_source(i); zero iff the square
    // at degree i commutes.
    RationalMatrix residual(int i) const;
    bool is_chain_map() const;

private:
    CochainComplex source_;
    CochainComplex target_;
    int shift_ = 0;
    std::vector<RationalMatrix> comps_;
};

ChainMap identity_chain_map(const CochainComplex& c);
ChainMap zero_chain_map(const CochainComplex& source, const CochainComplex& target, int shift);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f; shifts add

struct DegreeCohomology {
    RationalMatrix cycles;      // basis of ker d^i, dim(i) x z
    RationalMatrix boundaries;  // basis of img d^(i-1), dim(i) x b
    RationalMatrix reps;        // chosen representatives, dim(i) x (z-b)
    int betti = 0;
};

class CohomologyBasis {
public:
    CohomologyBasis() = default;
    CohomologyBasis(int lo, std::vector<DegreeCohomology> degrees, std::vector<int> ambient_dims);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(degrees_.size()) - 1; }

    const DegreeCohomology& at(int i) const;  // empty bases outside the window
    int betti(int i) const;
    std::vector<int> betti_table() const;  // over lo..hi
    long euler_characteristic() const;     // alternating sum of betti

    // Coordinates of cycle columns in the quotient basis at the given degree:
    // solve [boundaries | reps] and keep the reps block. Throws logic_error
    // if a column is not a cycle there.
    RationalMatrix class_coords(int degree, const RationalMatrix& cycle_cols) const;

private:
    int lo_ = 0;
    std::vector<DegreeCohomology> degrees_;
    std::vector<int> ambient_dims_;
};

// Representative choice: boundaries are extended to a cycle basis through the
// deterministic complement rule, applied in cycle coordinates. Throws
// invalid_argument when the complex fails validation.
CohomologyBasis cohomology(const CochainComplex& c);

std::vector<int> betti_table(const CochainComplex& c);

// Matrix family of an induced map on cohomology, in the chosen quotient
// bases: mat(i) has shape betti_target(i+shift) x betti_source(i).
class InducedMap {
public:
    InducedMap() = default;
    InducedMap(int lo, int shift, std::vector<RationalMatrix> mats,
               std::vector<int> source_betti, std::vector<int> target_betti, int target_lo);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(mats_.size()) - 1; }
    int shift() const { return shift_; }

    RationalMatrix at(int i) const;  // fabricated zero-shape outside the window
    bool is_zero() const;
    bool is_identity() const;  // square and identity at every degree
    bool is_degreewise_invertible() const;

    bool operator==(const InducedMap& o) const;
    bool operator!=(const InducedMap& o) const { return !(*this == o); }

private:
    int source_betti(int i) const;
    int target_betti(int i) const;

    int lo_ = 0;
    int shift_ = 0;
    std::vector<RationalMatrix> mats_;
    std::vector<int> source_betti_;
    std::vector<int> target_betti_;
    int target_lo_ = 0;
};

// Evaluates f on the chosen representatives and reads the result off in the
// target quotient basis. f must be a chain map between the complexes whose
// cohomology bases are passed in. When perturb_seed is set, the source
// representatives are first shifted by seeded boundary combinations; the
// result must not change, which is the well-definedness certificate.
InducedMap induced_on_cohomology(const ChainMap& f, const CohomologyBasis& hs,
                                 const CohomologyBasis& ht,
                                 std::optional<unsigned long long> perturb_seed = std::nullopt);

// Flips diff(i) to (-1)^i diff(i). Applying it to both rows of a diagram
// converts a commuting S into an anticommuting one and back; betti numbers
// are unchanged.
CochainComplex alternate_signs(const CochainComplex& c);
// Shift-0 components also pick up (-1)^i; shift-1 components stay fixed,
// so an anticommuting family becomes a commuting chain map either way.
ChainMap alternate_signs_map(const ChainMap& f);

// S = d_B K + K d_A from degree-0 components K^i: A^i -> B^i. The result is
// a commuting shift-1 chain map inducing zero on cohomology.
ChainMap nullhomotopy_to_S(const CochainComplex& A, const CochainComplex& B,
                           const std::vector<RationalMatrix>& K_comps, int K_lo);

// Degree i content moves to degree i-k; differentials are carried over.
CochainComplex shift(const CochainComplex& c, int k);

CochainComplex direct_sum(const CochainComplex& c1, const CochainComplex& c2);

// Replaces each space by m copies and each differential by d tensor I_m.
CochainComplex tensor_constant(const CochainComplex& c, int m);

}  // namespace bgg
