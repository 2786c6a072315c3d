#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgg/complex.hpp"
#include "bgg/cones.hpp"

namespace bgg {

// A finite simplicial complex given by ascending vertex tuples per dimension.
// simplices[m] lists the m-simplices; vertices are 0..vertex_count-1.
struct SimplicialFixture {
    std::string name;
    int vertex_count = 0;
    std::vector<std::vector<std::vector<int>>> simplices;
};

SimplicialFixture point_fixture();
SimplicialFixture interval_fixture();
SimplicialFixture circle3_fixture();       // triangle boundary
SimplicialFixture sphere_tetra_fixture();  // tetrahedron boundary
SimplicialFixture ball3_fixture();         // solid tetrahedron

// Lowercase names accepted by the CLI: point, interval, circle3,
// sphere_tetra, ball3.
std::optional<SimplicialFixture> fixture_by_name(const std::string& name);
std::vector<std::string> fixture_names();

// Tuples must ascend strictly, reference existing vertices, appear once,
// and every face of every simplex must be present.
ValidityReport validate_fixture(const SimplicialFixture& f);

// Cochain complex of the fixture with the alternating-sign coboundary;
// within each dimension simplices are ordered lexicographically. Throws
// invalid_argument when the fixture fails validation.
CochainComplex simplicial_cochain(const SimplicialFixture& f);

// S = d_B K + K d_A with K entries drawn uniformly from {-2..2}. Same seed,
// same diagram, bit for bit. The induced map on cohomology is always zero.
TwoRowDiagram random_nullhomotopy_diagram(const CochainComplex& A, const CochainComplex& B,
                                          uint64_t seed);

// B is A relabeled one degree up and S^i is the identity A^i -> B^(i+1), so
// S induces an isomorphism everywhere and the cone is exact.
TwoRowDiagram shift_identity_diagram(const CochainComplex& A);

// A = W (+) Kpart, B = shift(W, -1) (+) Cpart, S = project-then-include on
// the W block. Kpart must vanish in degrees <= j and Cpart in degrees > j,
// making S injective below j, bijective at j, surjective above. Throws on a
// support violation.
TwoRowDiagram pattern_diagram(const CochainComplex& W, const CochainComplex& Kpart,
                              const CochainComplex& Cpart, int j);

// Four-degree diagram with one-dimensional spaces arranged so the kernel
// and cokernel rows each carry cohomology on both sides of the seam and the
// knight-move map between them is the nonzero scalar 1/(2 + seed mod 3).
// The derivation is worked out in docs/phi_probe.md.
TwoRowDiagram phi_probe(uint64_t seed);

// S = d viewed as a degree-raising map from a row to itself. Never fits the
// injective/bijective/surjective pattern on a fixture with cohomology.
TwoRowDiagram differential_as_diagram(const CochainComplex& A);

}  // namespace bgg
