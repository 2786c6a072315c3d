#include "doctest.h"

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "bgg/complex.hpp"
#include "bgg/linalg.hpp"
#include "bgg/matrix.hpp"
#include "bgg/rational.hpp"
#include "bgg/rng.hpp"

using namespace bgg;

namespace {

RationalMatrix mat(int rows, int cols, std::initializer_list<long> entries) {
    RationalMatrix m(rows, cols);
    auto it = entries.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(*it++);
    return m;
}

RationalMatrix random_mat(SplitMix64& rng, int rows, int cols) {
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(static_cast<long>(rng.uniform(-2, 2)));
    return m;
}

// Two vertices joined by an edge; d sends a vertex function to its difference.
CochainComplex interval() {
    return CochainComplex(0, {2, 1}, {mat(1, 2, {-1, 1})});
}

// Three vertices, three edges in lexicographic order (01), (02), (12).
CochainComplex triangle_circle() {
    return CochainComplex(0, {3, 3},
                          {mat(3, 3, {-1, 1, 0, -1, 0, 1, 0, -1, 1})});
}

// Boundary of a tetrahedron: 4 vertices, 6 edges, 4 faces, lexicographic.
CochainComplex tetra_sphere() {
    RationalMatrix d0 = mat(6, 4, {-1, 1, 0, 0,
                                   -1, 0, 1, 0,
                                   -1, 0, 0, 1,
                                   0, -1, 1, 0,
                                   0, -1, 0, 1,
                                   0, 0, -1, 1});
    RationalMatrix d1 = mat(4, 6, {1, -1, 0, 1, 0, 0,
                                   1, 0, -1, 0, 1, 0,
                                   0, 1, -1, 0, 0, 1,
                                   0, 0, 0, 1, -1, 1});
    return CochainComplex(0, {4, 6, 4}, {d0, d1});
}

}  // namespace

TEST_CASE("complex reports zero spaces and maps outside its support") {
    CochainComplex c = interval();
    CHECK(c.lo() == 0);
    CHECK(c.hi() == 1);
    CHECK(c.dim(-1) == 0);
    CHECK(c.dim(0) == 2);
    CHECK(c.dim(2) == 0);
    CHECK(c.diff(-1).rows() == 2);
    CHECK(c.diff(-1).cols() == 0);
    CHECK(c.diff(1).rows() == 0);
    CHECK(c.diff(1).cols() == 1);
    CHECK(c.total_dim() == 3);
    CHECK(c.euler_characteristic() == 1);
    CHECK_FALSE(c.is_zero());
    CHECK(CochainComplex().is_zero());
}

TEST_CASE("construction rejects differentials of the wrong shape") {
    CHECK_THROWS_AS(CochainComplex(0, {2, 1}, {mat(1, 1, {1})}), std::invalid_argument);
    CHECK_THROWS_AS(CochainComplex(0, {2, 1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(CochainComplex(0, {2}, {mat(1, 2, {-1, 1})}), std::invalid_argument);
}

TEST_CASE("semantic equality ignores how the support window is padded") {
    CochainComplex a = interval();
    CochainComplex b(0, {2, 1, 0}, {mat(1, 2, {-1, 1}), RationalMatrix(0, 1)});
    CHECK(a == b);
    CHECK(a != triangle_circle());
    CHECK(shift(a, 0) == a);
}

TEST_CASE("validation accepts the fixtures and the zero complex") {
    CHECK(validate_complex(interval()).valid());
    CHECK(validate_complex(triangle_circle()).valid());
    CHECK(validate_complex(tetra_sphere()).valid());
    CHECK(validate_complex(CochainComplex()).valid());
}

TEST_CASE("validation pinpoints the degree where a corrupted square fails") {
    CochainComplex sphere = tetra_sphere();
    RationalMatrix bad_d1 = sphere.diff(1);
    bad_d1.at(0, 2) = Rational(1);  // face (012) picks up edge (03)
    CochainComplex corrupted(0, {4, 6, 4}, {sphere.diff(0), bad_d1});
    ValidityReport report = validate_complex(corrupted);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].degree == 0);
    CHECK_FALSE(report.valid());
    CHECK(report.to_string().find("degree 0") != std::string::npos);
}

TEST_CASE("validation lists every failing degree, not just the first") {
    RationalMatrix one = mat(1, 1, {1});
    CochainComplex chain(0, {1, 1, 1, 1}, {one, one, one});
    ValidityReport report = validate_complex(chain);
    REQUIRE(report.failures.size() == 2);
    CHECK(report.failures[0].degree == 0);
    CHECK(report.failures[1].degree == 1);
}

TEST_CASE("cohomology of the circle sees one component and one loop") {
    CochainComplex c = triangle_circle();
    CHECK(rank(c.diff(0)) == 2);
    CohomologyBasis h = cohomology(c);
    CHECK(h.betti_table() == std::vector<int>{1, 1});
    CHECK(h.euler_characteristic() == c.euler_characteristic());

    // Degree 0 representative is the constant function.
    CHECK(h.at(0).reps == mat(3, 1, {1, 1, 1}));
    // Degree 1 representative is the indicator of the last edge.
    CHECK(h.at(1).reps == mat(3, 1, {0, 0, 1}));
    CHECK(h.at(1).boundaries.cols() == 2);
}

TEST_CASE("cohomology of the tetrahedron boundary sees a 2-sphere") {
    CochainComplex c = tetra_sphere();
    CHECK(rank(c.diff(0)) == 3);
    CHECK(rank(c.diff(1)) == 3);
    CohomologyBasis h = cohomology(c);
    CHECK(h.betti_table() == std::vector<int>{1, 0, 1});
    CHECK(h.euler_characteristic() == 2);
    CHECK(betti_table(c) == std::vector<int>{1, 0, 1});
}

TEST_CASE("cohomology refuses an invalid complex") {
    RationalMatrix one = mat(1, 1, {1});
    CochainComplex chain(0, {1, 1, 1}, {one, one});
    CHECK_THROWS_AS(cohomology(chain), std::invalid_argument);
}

TEST_CASE("class coordinates separate boundaries from the chosen classes") {
    CohomologyBasis h = cohomology(triangle_circle());

    // A boundary column maps to the zero class.
    RationalMatrix b = triangle_circle().diff(0).col(0);
    CHECK(h.class_coords(1, b) == RationalMatrix(1, 1));

    // The representative itself has coordinate 1, and so does any cycle
    // differing from it by a boundary.
    CHECK(h.class_coords(1, h.at(1).reps) == mat(1, 1, {1}));
    CHECK(h.class_coords(1, mat(3, 1, {1, 0, 0})) == mat(1, 1, {1}));

    // Non-cycles are rejected.
    CHECK_THROWS_AS(h.class_coords(0, mat(3, 1, {1, 0, 0})), std::logic_error);
}

TEST_CASE("euler characteristic matches the alternating betti sum on random complexes") {
    // d1 is manufactured to kill d0's image, so the pair is always valid.
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n0 = static_cast<int>(rng.uniform(1, 4));
        int n1 = static_cast<int>(rng.uniform(1, 4));
        int n2 = static_cast<int>(rng.uniform(1, 4));
        RationalMatrix d0 = random_mat(rng, n1, n0);
        RationalMatrix lker = kernel_basis(d0.transpose());
        RationalMatrix d1 = (lker * random_mat(rng, lker.cols(), n2)).transpose();
        CochainComplex c(0, {n0, n1, n2}, {d0, d1});
        REQUIRE(validate_complex(c).valid());
        CohomologyBasis h = cohomology(c);
        CHECK(c.euler_characteristic() == h.euler_characteristic());
    }
}

TEST_CASE("chain map components are shape-checked and padded with zeros") {
    CochainComplex a = interval();
    ChainMap id = identity_chain_map(a);
    CHECK(id.is_chain_map());
    CHECK(id.comp(5) == RationalMatrix(0, 0));
    CHECK(id.comp(0) == RationalMatrix::identity(2));
    CHECK_THROWS_AS(ChainMap(a, a, 0, {mat(1, 1, {1}), mat(1, 1, {1})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ChainMap(a, a, 2,
                             {RationalMatrix::identity(2), RationalMatrix::identity(1)}),
                    std::invalid_argument);
    CHECK(zero_chain_map(a, a, 1).is_chain_map());
}

TEST_CASE("the differential itself is a degree-one chain map inducing zero") {
    CochainComplex c = tetra_sphere();
    std::vector<RationalMatrix> comps;
    for (int i = c.lo(); i <= c.hi(); ++i) comps.push_back(c.diff(i));
    ChainMap d_as_map(c, c, 1, comps);
    CHECK(d_as_map.is_chain_map());
    CohomologyBasis h = cohomology(c);
    CHECK(induced_on_cohomology(d_as_map, h, h).is_zero());
}

TEST_CASE("identity induces the identity on cohomology") {
    for (const CochainComplex& c : {triangle_circle(), tetra_sphere()}) {
        CohomologyBasis h = cohomology(c);
        InducedMap ind = induced_on_cohomology(identity_chain_map(c), h, h);
        CHECK(ind.is_identity());
        CHECK(ind.is_degreewise_invertible());
        InducedMap perturbed =
            induced_on_cohomology(identity_chain_map(c), h, h, 99);
        CHECK(ind == perturbed);
    }
}

TEST_CASE("relabeling a complex one degree up carries classes to themselves") {
    CochainComplex a = triangle_circle();
    CochainComplex b = shift(a, -1);
    CHECK(b.lo() == 1);
    CHECK(b.dim(1) == 3);
    std::vector<RationalMatrix> comps{RationalMatrix::identity(3), RationalMatrix::identity(3)};
    ChainMap s(a, b, 1, comps);
    CHECK(s.is_chain_map());
    InducedMap ind = induced_on_cohomology(s, cohomology(a), cohomology(b));
    CHECK(ind.is_identity());
}

TEST_CASE("induced map of a composition is the composition of induced maps") {
    CochainComplex a = triangle_circle();
    CochainComplex b = shift(a, -1);
    ChainMap triple(a, a, 0,
                    {RationalMatrix::identity(3).scaled(Rational(3)),
                     RationalMatrix::identity(3).scaled(Rational(3))});
    CHECK(triple.is_chain_map());
    ChainMap s(a, b, 1, {RationalMatrix::identity(3), RationalMatrix::identity(3)});
    ChainMap both = compose(s, triple);
    CHECK(both.shift() == 1);

    CohomologyBasis ha = cohomology(a);
    CohomologyBasis hb = cohomology(b);
    InducedMap ind_triple = induced_on_cohomology(triple, ha, ha);
    InducedMap ind_s = induced_on_cohomology(s, ha, hb);
    InducedMap ind_both = induced_on_cohomology(both, ha, hb);
    for (int i = ha.lo(); i <= ha.hi(); ++i)
        CHECK(ind_both.at(i) == ind_s.at(i) * ind_triple.at(i));
    CHECK(ind_both.at(0) == mat(1, 1, {3}));
}

TEST_CASE("nullhomotopy image is a chain map that kills cohomology") {
    // Circle plus a shifted circle stacks classes in consecutive degrees, so
    // the induced matrices have honest nonzero shapes that must still vanish.
    CochainComplex a = direct_sum(triangle_circle(), shift(triangle_circle(), -1));
    REQUIRE(betti_table(a) == std::vector<int>{1, 2, 1});
    SplitMix64 rng(11);
    std::vector<RationalMatrix> k;
    for (int i = a.lo(); i <= a.hi(); ++i) k.push_back(random_mat(rng, a.dim(i), a.dim(i)));
    ChainMap s = nullhomotopy_to_S(a, a, k, a.lo());
    CHECK(s.shift() == 1);
    CHECK(s.is_chain_map());
    CHECK_FALSE(s.comp(0).is_zero());

    CohomologyBasis h = cohomology(a);
    InducedMap ind = induced_on_cohomology(s, h, h);
    CHECK(ind.at(0).rows() * ind.at(0).cols() > 0);
    CHECK(ind.is_zero());
    CHECK(induced_on_cohomology(s, h, h, 5) == ind);
}

TEST_CASE("single-entry nullhomotopy on the interval is the matrix product") {
    CochainComplex a = interval();
    std::vector<RationalMatrix> k{mat(2, 2, {1, 0, 0, 0}), RationalMatrix(1, 1)};
    ChainMap s = nullhomotopy_to_S(a, a, k, 0);
    CHECK(s.comp(0) == mat(1, 2, {-1, 0}));
    CHECK(s.comp(1) == RationalMatrix(0, 1));
    CHECK(s.is_chain_map());
    CHECK_THROWS_AS(nullhomotopy_to_S(a, a, {mat(1, 1, {1}), RationalMatrix(1, 1)}, 0),
                    std::invalid_argument);
}

TEST_CASE("zero nullhomotopy gives the zero map") {
    CochainComplex a = triangle_circle();
    std::vector<RationalMatrix> k{RationalMatrix(3, 3), RationalMatrix(3, 3)};
    ChainMap s = nullhomotopy_to_S(a, a, k, 0);
    CHECK(s.comp(0).is_zero());
    CHECK(s.comp(1).is_zero());
}

TEST_CASE("sign alternation is an involution preserving betti") {
    for (const CochainComplex& c : {interval(), triangle_circle(), tetra_sphere()}) {
        CochainComplex alt = alternate_signs(c);
        CHECK(validate_complex(alt).valid());
        CHECK(alternate_signs(alt) == c);
        CHECK(betti_table(alt) == betti_table(c));
    }
    CochainComplex sphere = tetra_sphere();
    CHECK(alternate_signs(sphere).diff(0) == sphere.diff(0));
    CHECK(alternate_signs(sphere).diff(1) == -sphere.diff(1));
}

TEST_CASE("negating odd components of a commuting map makes it anticommute, and alternation undoes it") {
    CochainComplex a = tetra_sphere();
    SplitMix64 rng(13);
    std::vector<RationalMatrix> k;
    for (int i = a.lo(); i <= a.hi(); ++i) k.push_back(random_mat(rng, a.dim(i), a.dim(i)));
    ChainMap s = nullhomotopy_to_S(a, a, k, a.lo());
    REQUIRE(s.is_chain_map());
    REQUIRE_FALSE((a.diff(1) * s.comp(0)).is_zero());  // the square has content

    std::vector<RationalMatrix> anti;
    for (int i = a.lo(); i <= a.hi(); ++i)
        anti.push_back(i % 2 != 0 ? -s.comp(i) : s.comp(i));
    ChainMap g(a, a, 1, anti);
    for (int i = a.lo(); i <= a.hi(); ++i)
        CHECK((a.diff(i + 1) * g.comp(i) + g.comp(i + 1) * a.diff(i)).is_zero());
    CHECK_FALSE(g.is_chain_map());

    ChainMap back = alternate_signs_map(g);
    CHECK(back.is_chain_map());
}

TEST_CASE("alternation turns a shift-zero anticommuting family into a chain map") {
    CochainComplex a = interval();
    // d f0 + f1 d = 0 by construction: f0 = [[1,0],[2,-1]], f1 = [1].
    ChainMap f(a, a, 0, {mat(2, 2, {1, 0, 2, -1}), mat(1, 1, {1})});
    CHECK((a.diff(0) * f.comp(0) + f.comp(1) * a.diff(0)).is_zero());
    CHECK_FALSE(f.is_chain_map());
    ChainMap alt = alternate_signs_map(f);
    CHECK(alt.is_chain_map());
    CHECK(alt.comp(0) == f.comp(0));
    CHECK(alt.comp(1) == -f.comp(1));
}

TEST_CASE("a commutator becomes a nullhomotopy after alternating signs of d and K") {
    CochainComplex a = tetra_sphere();
    SplitMix64 rng(17);
    std::vector<RationalMatrix> k;
    for (int i = a.lo(); i <= a.hi(); ++i) k.push_back(random_mat(rng, a.dim(i), a.dim(i)));
    auto kat = [&](int i) {
        return (i >= a.lo() && i <= a.hi()) ? k[i - a.lo()]
                                            : RationalMatrix(a.dim(i), a.dim(i));
    };

    // Commutator S = dK - Kd anticommutes with the original differential.
    std::vector<RationalMatrix> comm;
    for (int i = a.lo(); i <= a.hi(); ++i)
        comm.push_back(a.diff(i) * kat(i) - kat(i + 1) * a.diff(i));
    for (int i = a.lo(); i <= a.hi(); ++i)
        CHECK((a.diff(i + 1) * comm[i - a.lo()] +
               (i + 1 <= a.hi() ? comm[i + 1 - a.lo()] : RationalMatrix(a.dim(i + 2), a.dim(i + 1))) *
                   a.diff(i))
                  .is_zero());

    // Alternating d on both sides and K degreewise exhibits the same
    // components as d'K' + K'd', a nullhomotopy image in the new convention.
    CochainComplex alt = alternate_signs(a);
    std::vector<RationalMatrix> kalt;
    for (int i = a.lo(); i <= a.hi(); ++i)
        kalt.push_back(i % 2 != 0 ? -kat(i) : kat(i));
    ChainMap s_via_nullhomotopy = nullhomotopy_to_S(alt, alt, kalt, a.lo());
    for (int i = a.lo(); i <= a.hi(); ++i)
        CHECK(s_via_nullhomotopy.comp(i) == comm[i - a.lo()]);
    CHECK(s_via_nullhomotopy.is_chain_map());
    CohomologyBasis h = cohomology(alt);
    CHECK(induced_on_cohomology(s_via_nullhomotopy, h, h).is_zero());
}

TEST_CASE("relabeling moves supports and flips the euler characteristic's sign") {
    CochainComplex c = interval();
    CochainComplex up = shift(c, 1);
    CHECK(up.lo() == -1);
    CHECK(up.dim(-1) == 2);
    CHECK(up.dim(0) == 1);
    CHECK(up.euler_characteristic() == -1);
    CHECK(shift(up, -1) == c);
    CHECK(betti_table(up) == betti_table(c));
}

TEST_CASE("direct sums add dimensions, differentials, and betti tables") {
    CochainComplex a = triangle_circle();
    CochainComplex b = tetra_sphere();
    CochainComplex s = direct_sum(a, b);
    CHECK(s.lo() == 0);
    CHECK(s.hi() == 2);
    CHECK(s.dim(0) == 7);
    CHECK(s.dim(1) == 9);
    CHECK(s.dim(2) == 4);
    CHECK(validate_complex(s).valid());
    CHECK(betti_table(s) == std::vector<int>{2, 1, 1});
    CHECK(direct_sum(CochainComplex(), a) == a);
    CHECK(direct_sum(a, CochainComplex()) == a);
}

TEST_CASE("tensoring with a constant space scales dimensions and betti") {
    CochainComplex c = triangle_circle();
    CochainComplex t = tensor_constant(c, 2);
    CHECK(t.dim(0) == 6);
    CHECK(t.diff(0) == c.diff(0).kron_identity(2));
    CHECK(validate_complex(t).valid());
    CHECK(betti_table(t) == std::vector<int>{2, 2});
    CHECK(tensor_constant(c, 1) == c);
    CHECK(tensor_constant(c, 0).total_dim() == 0);
    CHECK_THROWS_AS(tensor_constant(c, -1), std::invalid_argument);
}
