#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "bgg/complex.hpp"
#include "bgg/cones.hpp"
#include "bgg/generators.hpp"
#include "bgg/linalg.hpp"
#include "bgg/matrix.hpp"
#include "bgg/pattern.hpp"
#include "bgg/reduction.hpp"

using namespace bgg;

namespace {

CochainComplex circle() { return simplicial_cochain(circle3_fixture()); }
CochainComplex sphere() { return simplicial_cochain(sphere_tetra_fixture()); }

TwoRowDiagram seam_scalar() {
    CochainComplex b(0, {1, 1}, {RationalMatrix{{2}}});
    CochainComplex a(0, {1, 1}, {RationalMatrix{{5}}});
    std::vector<RationalMatrix> comps{RationalMatrix{{3}}, RationalMatrix(0, 1)};
    return TwoRowDiagram{a, b, ChainMap(a, b, 1, std::move(comps))};
}

TwoRowDiagram seam_shift() {
    CochainComplex a(-1, {1, 2, 1}, {RationalMatrix{{1}, {0}}, RationalMatrix{{0, 5}}});
    CochainComplex b(0, {2, 2}, {RationalMatrix{{2, 3}, {0, 4}}});
    std::vector<RationalMatrix> comps{RationalMatrix{{1}, {0}}, RationalMatrix{{2, 0}, {0, 2}},
                                      RationalMatrix(0, 1)};
    return TwoRowDiagram{a, b, ChainMap(a, b, 1, std::move(comps))};
}

TwoRowDiagram designed_pattern() {
    CochainComplex kpart(2, {1}, {});
    CochainComplex cpart(0, {1}, {});
    return pattern_diagram(circle(), kpart, cpart, 1);
}

std::vector<TwoRowDiagram> suite() {
    CochainComplex c2 = tensor_constant(circle(), 2);
    std::vector<TwoRowDiagram> out;
    out.push_back(random_nullhomotopy_diagram(c2, c2, 3));
    out.push_back(random_nullhomotopy_diagram(simplicial_cochain(ball3_fixture()), sphere(), 11));
    out.push_back(phi_probe(2));
    out.push_back(shift_identity_diagram(circle()));
    out.push_back(TwoRowDiagram{circle(), sphere(), zero_chain_map(circle(), sphere(), 1)});
    out.push_back(designed_pattern());
    out.push_back(seam_scalar());
    out.push_back(seam_shift());
    return out;
}

}  // namespace

TEST_CASE("pseudoinverse identities hold degree by degree on the whole suite") {
    for (const auto& diag : suite()) {
        BGGReduction r = bgg_reduce(diag);
        for (int i = r.lo; i <= r.hi; ++i) {
            CHECK(r.P_C_at(i) * r.P_C_at(i) == r.P_C_at(i));
            CHECK(r.P_K_at(i) * r.P_K_at(i) == r.P_K_at(i));
            CHECK((r.P_C_at(i + 1) * diag.S.comp(i)).is_zero());
            CHECK((diag.S.comp(i) * r.P_K_at(i)).is_zero());
            CHECK(r.L_at(i) * r.L_inv_at(i) ==
                  RationalMatrix::identity(diag.B.dim(i) + diag.A.dim(i)));
            CHECK(determinant(r.L_at(i)) == Rational(1));
        }
        CHECK(validate_complex(r.cone).valid());
        CHECK(validate_complex(r.conjugated).valid());
        CHECK(validate_complex(r.reduced).valid());
        CHECK(validate_complex(r.middle.M).valid());
    }
}

TEST_CASE("with no linking the reduction is the sum of the alternated rows") {
    CochainComplex a = circle(), b = sphere();
    TwoRowDiagram diag{a, b, zero_chain_map(a, b, 1)};
    BGGReduction r = bgg_reduce(diag);

    for (int i = r.lo; i <= r.hi; ++i) {
        CHECK(r.T_at(i).is_zero());
        CHECK(r.P_C_at(i) == RationalMatrix::identity(b.dim(i)));
        CHECK(r.P_K_at(i) == RationalMatrix::identity(a.dim(i)));
        CHECK(r.L_at(i) == RationalMatrix::identity(b.dim(i) + a.dim(i)));
        CHECK(r.lift.comp(i) == RationalMatrix::identity(b.dim(i) + a.dim(i)));
    }
    CHECK(r.reduced == direct_sum(alternate_signs(b), alternate_signs(a)));
    CHECK(r.middle.M.total_dim() == 0);

    QuasiIsoCertificate cert = verify_quasi_iso(r);
    CHECK(cert.ok());
    CHECK(cert.induced_lift.is_identity());
}

TEST_CASE("an invertible linking map reduces everything away") {
    BGGReduction r = bgg_reduce(shift_identity_diagram(sphere()));
    CHECK(r.reduced.total_dim() == 0);
    // The middle term swallows the whole cone.
    for (int i = r.lo; i <= r.hi; ++i) CHECK(r.middle.M.dim(i) == r.cone.dim(i));

    QuasiIsoCertificate cert = verify_quasi_iso(r);
    CHECK(cert.ok());
    for (int b : cert.betti_cone) CHECK(b == 0);
}

TEST_CASE("the reduced differential keeps its upper-right block empty") {
    for (const auto& diag : suite()) {
        BGGReduction r = bgg_reduce(diag);
        for (int i = r.lo; i < r.hi; ++i) {
            RationalMatrix ur = r.reduced.diff(i).block(0, r.c_dim(i), r.c_dim(i + 1),
                                                        r.k_dim(i));
            CHECK(ur.is_zero());
        }
    }
}

TEST_CASE("middle-term differential carries the T-image identically onto the S-image") {
    for (const auto& diag : suite()) {
        BGGReduction r = bgg_reduce(diag);
        for (int i = r.lo; i < r.hi; ++i) {
            int s0 = r.middle.s_img_basis[static_cast<size_t>(i - r.lo)].cols();
            int s1 = r.middle.s_img_basis[static_cast<size_t>(i + 1 - r.lo)].cols();
            int t0 = r.middle.t_img_basis[static_cast<size_t>(i - r.lo)].cols();
            RationalMatrix block = r.middle.M.diff(i).block(0, s0, s1, t0);
            // In the chosen bases the isomorphism is literally the identity.
            CHECK(block == RationalMatrix::identity(s1));
        }
        std::vector<int> mb = betti_table(r.middle.M);
        for (int b : mb) CHECK(b == 0);
    }
}

TEST_CASE("reduced, cone and middle term form a short exact sequence of complexes") {
    for (const auto& diag : suite()) {
        BGGReduction r = bgg_reduce(diag);
        ShortExactSequenceOfComplexes ses = reduction_ses(r);
        CHECK(validate_ses(ses).valid());
        CHECK(long_exact_sequence(ses).exact());
    }
}

TEST_CASE("the lifting map is a quasi-isomorphism onto the cone") {
    for (const auto& diag : suite()) {
        BGGReduction r = bgg_reduce(diag);
        QuasiIsoCertificate cert = verify_quasi_iso(r);
        CHECK(cert.ok());
        // The sign-alternated cone used internally matches the plain mapping
        // cone dimension for dimension.
        CHECK(cert.betti_cone == betti_table(mapping_cone(diag).Z));
    }
}

TEST_CASE("under an accepted pattern the reduction collapses onto the output complex") {
    for (const auto& diag : {designed_pattern(), seam_scalar(), seam_shift()}) {
        PatternCertificate cert = detect_pattern(diag);
        REQUIRE(cert.accepted);
        OutputComplex out = build_output_complex(diag, cert);
        BGGReduction r = bgg_reduce(diag);
        for (int i = out.C.lo(); i <= out.C.hi(); ++i)
            CHECK(r.reduced.dim(i) == out.C.dim(i));

        // The lower-left block of the reduced differential lives only at the
        // pivot, where it is minus the seam matrix.
        for (int i = r.lo; i < r.hi; ++i) {
            if (i == cert.j)
                CHECK(r.seam_block(i) == -out.C.diff(i));
            else
                CHECK(r.seam_block(i).is_zero());
        }
    }
}

TEST_CASE("frozen seam values: the pivot block is minus d pullback d") {
    BGGReduction r = bgg_reduce(seam_scalar());
    RationalMatrix expected(1, 1);
    expected.at(0, 0) = Rational(-10, 3);
    CHECK(r.seam_block(0) == expected);

    BGGReduction r2 = bgg_reduce(seam_shift());
    CHECK(r2.seam_block(0) == RationalMatrix{{-10}});
}

TEST_CASE("a skewed complement policy changes bases but no certificate") {
    for (const auto& diag : {random_nullhomotopy_diagram(circle(), circle(), 5),
                             designed_pattern(), seam_shift()}) {
        BGGReduction low = bgg_reduce(diag);
        BGGReduction skew = bgg_reduce(diag, ComplementPolicy::Skewed);
        CHECK(validate_complex(skew.reduced).valid());
        CHECK(validate_ses(reduction_ses(skew)).valid());
        CHECK(verify_quasi_iso(skew).ok());
        CHECK(betti_table(skew.reduced) == betti_table(low.reduced));
    }
}

TEST_CASE("reduction of a non-commuting diagram is refused") {
    // ball3 is long enough that the corrupted component meets a real
    // differential on both sides.
    CochainComplex a = simplicial_cochain(ball3_fixture());
    TwoRowDiagram diag = random_nullhomotopy_diagram(a, a, 9);
    std::vector<RationalMatrix> comps;
    for (int i = a.lo(); i <= a.hi(); ++i) comps.push_back(diag.S.comp(i));
    comps[1].at(0, 0) += 1;
    TwoRowDiagram broken{a, a, ChainMap(a, a, 1, std::move(comps))};
    CHECK_THROWS_AS(bgg_reduce(broken), std::invalid_argument);
}
