#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgg/complex.hpp"
#include "bgg/cones.hpp"
#include "bgg/generators.hpp"
#include "bgg/linalg.hpp"

namespace bgg {

// Classification of one linking component by its rank: Injective and
// Surjective mean strictly one-sided; a map that is neither is a Violation.
enum class DegreeKind { Injective, Bijective, Surjective, Violation };

struct PatternDegree {
    int degree;
    DegreeKind kind;
    int rank;
    int dim_source;  // A^i
    int dim_target;  // B^(i+1)
};

// Accepted when some degree j is bijective with every earlier component
// injective and every later one surjective. Consecutive bijective degrees
// admit several such j; the largest is reported. A rejection lists the
// degrees whose components are one-sided in the wrong direction or neither.
struct PatternCertificate {
    bool accepted = false;
    int j = 0;
    std::vector<PatternDegree> degrees;  // over the scan window, ascending
    std::vector<int> violations;

    std::string to_string() const;
};

PatternCertificate detect_pattern(const TwoRowDiagram& diag);

// How preimages under the linking components are picked when a solve has
// slack. Results never depend on the choice; tests run both.
enum class LiftPolicy { FreeVarsZero, KernelShifted };

// The complex C with C^i the complement of img S^(i-1) inside B^i for
// i <= j and C^i = ker S^i inside A^i for i > j. The seam differential
// between degrees j and j+1 is w |-> d(S^j)^(-1) d(w).
struct OutputComplex {
    int j = 0;
    CochainComplex C;
    // basis[k] embeds C^(lo+k) into B (i <= j) or into A (i > j).
    std::vector<RationalMatrix> basis;
    // proj[k] projects B^(lo+k) onto C-coordinates along img S^(i-1); only
    // the degrees i <= j carry one, later entries are empty placeholders.
    std::vector<RationalMatrix> proj;

    int lo() const { return C.lo(); }
    RationalMatrix basis_at(int i) const;
    RationalMatrix proj_at(int i) const;
};

// Throws invalid_argument when the certificate is a rejection.
OutputComplex build_output_complex(const TwoRowDiagram& diag, const PatternCertificate& cert,
                                   LiftPolicy lift = LiftPolicy::FreeVarsZero,
                                   ComplementPolicy complement = ComplementPolicy::GreedyLow);

struct MergedNode {
    int degree;
    std::string label;
    int betti;
    bool exact;
};

// One long sequence ... -> H^(i-1)A -> H^iB -> H^iC -> H^iA -> H^(i+1)B -> ...
// On the cokernel side (i <= j) the middle maps are the induced projection
// and the lift-through-S zig-zag; past the seam the zig-zag moves to the
// B-to-C slot and the C-to-A map becomes the induced inclusion.
struct MergedLongExactSequence {
    int j = 0;
    std::vector<MergedNode> nodes;  // per degree: H^i(B), H^i(C), H^i(A)
    InducedMap s_tilde;             // H^i(A) -> H^(i+1)(B)
    int maps_lo = 0;
    std::vector<RationalMatrix> b_to_c;
    std::vector<RationalMatrix> c_to_a;
    std::vector<int> betti_B, betti_C, betti_A;  // aligned with maps_lo

    RationalMatrix b_to_c_at(int i) const;
    RationalMatrix c_to_a_at(int i) const;
    bool exact() const;
    std::string to_string() const;
};

MergedLongExactSequence merged_les(const TwoRowDiagram& diag, const PatternCertificate& cert,
                                   const OutputComplex& output,
                                   LiftPolicy lift = LiftPolicy::FreeVarsZero);

// Per-degree verdicts for 0 -> coker S~^(i-1) -> H^i(C) -> ker S~^i -> 0.
struct CorollaryDegree {
    int degree;
    int coker_dim;  // betti(B, i) - rank S~^(i-1)
    int ker_dim;    // betti(A, i) - rank S~^i
    int betti_C;
    bool dims_add_up;    // betti_C = coker_dim + ker_dim
    bool left_injective;   // H^iB -> H^iC has rank coker_dim
    bool right_surjective;  // H^iC -> H^iA has rank ker_dim, landing in ker S~^i
    bool middle_exact;
};

struct CorollaryReport {
    std::vector<CorollaryDegree> degrees;
    bool s_tilde_zero = false;
    bool split_holds = false;  // betti(C) = betti(A) + betti(B); only when s_tilde_zero

    bool all_hold() const;
    std::string to_string() const;
};

CorollaryReport corollary_check(const TwoRowDiagram& diag, const PatternCertificate& cert,
                                const OutputComplex& output);

// Dimension-level analogue of tensoring a mesh with two constant spaces of
// dimensions m and n and linking them by a seeded nullhomotopy: the merged
// cohomology has dimensions (m+n) * betti(mesh).
struct RigidMotionReport {
    int lo = 0;
    std::vector<int> betti;
    std::vector<int> expected;
    bool pattern_used = false;
    bool match = false;
};

RigidMotionReport rigid_motion_analogue(const SimplicialFixture& mesh, int m, int n,
                                        uint64_t seed);

}  // namespace bgg
