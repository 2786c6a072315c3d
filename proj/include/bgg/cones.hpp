#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bgg/complex.hpp"
#include "bgg/matrix.hpp"

namespace bgg {

// Two rows linked degreewise by S^i: A^i -> B^(i+1).
struct TwoRowDiagram {
    CochainComplex A;
    CochainComplex B;
    ChainMap S;  // shift 1, source A, target B
};

// Checks both rows, that S connects exactly these rows with shift 1, and
// that every linking square commutes. Failures are listed per degree.
ValidityReport validate_diagram(const TwoRowDiagram& diag);

TwoRowDiagram diagram_direct_sum(const TwoRowDiagram& d1, const TwoRowDiagram& d2);

// Z^i = B^i (+) A^i with differential [[d_B, S],[0, -d_A]]. The assembly is
// deliberately unchecked: Z passes validation exactly when S commutes, and
// that equivalence is itself under test. The commuting residual is exposed
// as S.residual(i).
CochainComplex twisted_complex(const ChainMap& S);

struct MappingCone {
    TwoRowDiagram diagram;  // block record: B block first, then A
    CochainComplex Z;

    int dim_B(int i) const { return diagram.B.dim(i); }
    int dim_A(int i) const { return diagram.A.dim(i); }
};

// Checked construction: throws invalid_argument when the diagram fails
// validation, otherwise returns a cone whose complex is valid.
MappingCone mapping_cone(const TwoRowDiagram& diag);

struct ShortExactSequenceOfComplexes {
    CochainComplex left;
    CochainComplex middle;
    CochainComplex right;
    ChainMap inj;   // shift 0, left -> middle
    ChainMap surj;  // shift 0, middle -> right
    std::array<std::string, 3> labels{{"left", "middle", "right"}};
};

// Degreewise exactness: inj injective, surj surjective, surj o inj = 0, and
// rank(inj) = dim ker(surj). Both maps must also commute with d.
ValidityReport validate_ses(const ShortExactSequenceOfComplexes& ses);

// 0 -> B -> Z -> A -> 0 by block inclusion and projection. The right factor
// carries -d_A (the twist moved the sign there); its cohomology bases
// coincide with those of A column for column, which keeps the connecting
// morphism directly comparable with the map S induces.
ShortExactSequenceOfComplexes cone_ses(const MappingCone& cone);

// Snake-lemma zig-zag H^i(right) -> H^(i+1)(left): lift a representative
// through surj (free variables zero), apply d_middle, pull back through inj.
// With perturb_seed set, representatives are shifted by boundaries and lifts
// by ker(surj) elements; the output must be unchanged, which certifies that
// the zig-zag is well defined.
InducedMap connecting_morphism(const ShortExactSequenceOfComplexes& ses,
                               std::optional<unsigned long long> perturb_seed = std::nullopt);

struct LesNode {
    int degree;
    std::string label;  // e.g. "H^2(Z)"
    int betti;
    bool exact;  // image of the incoming map equals the kernel of the outgoing
};

struct LongExactSequenceReport {
    // ... -> H^i(left) -> H^i(middle) -> H^i(right) -> H^(i+1)(left) -> ...
    std::vector<LesNode> nodes;
    InducedMap from_left;    // induced by inj
    InducedMap from_middle;  // induced by surj
    InducedMap connecting;   // degree-raising zig-zag

    bool exact() const;
    std::string to_string() const;
};

LongExactSequenceReport long_exact_sequence(const ShortExactSequenceOfComplexes& ses);

// Explicit chain isomorphism between the untwisted and the twisted cone when
// the twist is the commutator S = d_B K - K d_A. This routine works in the
// anticommuting convention, where the twisted differential is [[d_B, S],[0, d_A]];
// callers coming from the commuting convention alternate signs first.
struct GaugeEquivalence {
    CochainComplex Z0;  // block-diagonal cone, S = 0
    CochainComplex ZS;  // cone twisted by the commutator
    ChainMap S;         // the commutator family (anticommutes; not a chain map here)
    ChainMap Q;             // unitriangular chain isomorphism Z0 -> ZS
    char corner_sign = '?';  // '-' or '+': sign on the K block that made Q commute
    std::vector<int> betti_Z0;
    std::vector<int> betti_ZS;
};

// Throws invalid_argument when a row is invalid, a K component has the wrong
// shape, or neither sign choice for the K block yields a chain map. The
// minus sign is tried first and is the one the algebra predicts.
GaugeEquivalence gauge_equivalence(const CochainComplex& A, const CochainComplex& B,
                                   const std::vector<RationalMatrix>& K_comps, int K_lo);

}  // namespace bgg
