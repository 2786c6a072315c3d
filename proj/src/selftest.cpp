#include "bgg/selftest.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bgg/bggx.hpp"
#include "bgg/cli.hpp"
#include "bgg/generators.hpp"
#include "bgg/pattern.hpp"
#include "bgg/reduction.hpp"
#include "bgg/rng.hpp"
#include "bgg/spectral.hpp"

namespace bgg {

namespace {

// Accumulates per-criterion checks; remembers the first failure verbatim.
struct Tally {
    bool pass = true;
    int checks = 0;
    std::string first_fail;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            first_fail = what;
        }
    }
};

CriterionResult finish(int number, const std::string& name, const Tally& t,
                       const std::string& summary) {
    CriterionResult r;
    r.number = number;
    r.name = name;
    r.pass = t.pass;
    r.detail = t.pass ? summary : t.first_fail;
    return r;
}

CochainComplex fixture_complex(int k) {
    switch (k) {
        case 0: return simplicial_cochain(point_fixture());
        case 1: return simplicial_cochain(interval_fixture());
        case 2: return simplicial_cochain(circle3_fixture());
        case 3: return simplicial_cochain(sphere_tetra_fixture());
        default: return simplicial_cochain(ball3_fixture());
    }
}

std::vector<CochainComplex> all_fixture_complexes() {
    std::vector<CochainComplex> out;
    for (int k = 0; k < 5; ++k) out.push_back(fixture_complex(k));
    return out;
}

// The two hand-built seam instances: an accepted pattern whose seam operator
// D = d (S^j)^{-1} d is a nonzero scalar resp. a nonzero 1x1 after a shift.
TwoRowDiagram seam_scalar_instance() {
    CochainComplex b(0, {1, 1}, {RationalMatrix{{2}}});
    CochainComplex a(0, {1, 1}, {RationalMatrix{{5}}});
    std::vector<RationalMatrix> comps{RationalMatrix{{3}}, RationalMatrix(0, 1)};
    return TwoRowDiagram{a, b, ChainMap(a, b, 1, std::move(comps))};
}

TwoRowDiagram seam_shift_instance() {
    CochainComplex a(-1, {1, 2, 1}, {RationalMatrix{{1}, {0}}, RationalMatrix{{0, 5}}});
    CochainComplex b(0, {2, 2}, {RationalMatrix{{2, 3}, {0, 4}}});
    std::vector<RationalMatrix> comps{RationalMatrix{{1}, {0}}, RationalMatrix{{2, 0}, {0, 2}},
                                      RationalMatrix(0, 1)};
    return TwoRowDiagram{a, b, ChainMap(a, b, 1, std::move(comps))};
}

TwoRowDiagram designed_pattern_instance() {
    CochainComplex kpart(2, {1}, {});
    CochainComplex cpart(0, {1}, {});
    return pattern_diagram(simplicial_cochain(circle3_fixture()), kpart, cpart, 1);
}

CochainComplex corrupt_diff(const CochainComplex& c, int deg) {
    std::vector<int> dims;
    std::vector<RationalMatrix> diffs;
    for (int i = c.lo(); i <= c.hi(); ++i) dims.push_back(c.dim(i));
    for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(c.diff(i));
    diffs[deg - c.lo()].at(0, 0) += Rational(1);
    return CochainComplex(c.lo(), std::move(dims), std::move(diffs));
}

std::vector<int> failure_degrees(const ValidityReport& vr) {
    std::vector<int> out;
    for (const auto& f : vr.failures) out.push_back(f.degree);
    return out;
}

std::string degree_list(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    return os.str();
}

CriterionResult c1_validity() {
    Tally t;
    for (const auto& c : all_fixture_complexes())
        t.require(validate_complex(c).valid(), "a fixture fails d after d = 0");
    for (uint64_t seed = 0; seed < 100; ++seed) {
        TwoRowDiagram diag = seeded_nullhomotopy_instance(seed);
        CochainComplex z = mapping_cone(diag).Z;
        t.require(validate_complex(z).valid(),
                  "generated cone fails validity at seed " + std::to_string(seed));
    }
    CochainComplex sphere = fixture_complex(3), ball = fixture_complex(4);
    auto fd1 = failure_degrees(validate_complex(corrupt_diff(sphere, 1)));
    t.require(fd1 == std::vector<int>{0},
              "sphere corruption localized at {" + degree_list(fd1) + "}, expected {0}");
    auto fd2 = failure_degrees(validate_complex(corrupt_diff(ball, 2)));
    t.require(fd2 == std::vector<int>{1},
              "ball corruption localized at {" + degree_list(fd2) + "}, expected {1}");
    return finish(1, "complex validity and corruption localization", t,
                  "5 fixtures, 100 generated cones, 2 localized corruptions");
}

CriterionResult c2_betti() {
    Tally t;
    const std::vector<std::vector<int>> expected{{1}, {1, 0}, {1, 1}, {1, 0, 1}, {1, 0, 0, 0}};
    for (int k = 0; k < 5; ++k) {
        CochainComplex c = fixture_complex(k);
        std::vector<int> betti = betti_table(c);
        t.require(betti == expected[k], "betti mismatch on fixture " + std::to_string(k));

        long euler_dims = c.euler_characteristic();
        long euler_betti = 0;
        for (size_t i = 0; i < betti.size(); ++i)
            euler_betti += (i % 2 == 0 ? betti[i] : -betti[i]);
        t.require(euler_dims == euler_betti, "Euler characteristic cross-check failed");

        // prime-field shadow: ranks over GF(p) must reproduce the betti table
        std::vector<int> shadow;
        for (int i = c.lo(); i <= c.hi(); ++i) {
            auto r_here = modp_rank(c.diff(i));
            auto r_prev = modp_rank(c.diff(i - 1));
            t.require(r_here.has_value() && r_prev.has_value(), "shadow rank unavailable");
            shadow.push_back(c.dim(i) - *r_here - *r_prev);
        }
        t.require(shadow == betti, "prime-field shadow disagrees with exact betti");
    }
    return finish(2, "fixture betti with Euler and prime-field cross-checks", t,
                  "5 fixtures, 3 independent oracles each");
}

CriterionResult c3_les() {
    Tally t;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        TwoRowDiagram diag = seeded_nullhomotopy_instance(seed);
        auto les = long_exact_sequence(cone_ses(mapping_cone(diag)));
        t.require(les.exact(), "long exact sequence fails at seed " + std::to_string(seed));
        InducedMap via_s = induced_on_cohomology(diag.S, cohomology(diag.A), cohomology(diag.B));
        t.require(les.connecting == via_s,
                  "connecting morphism differs from the induced map at seed " +
                      std::to_string(seed));
    }
    return finish(3, "cone long exact sequence with matching connecting morphism", t,
                  "100 nullhomotopy instances over all fixtures");
}

CriterionResult c4_splitting() {
    Tally t;
    for (uint64_t seed = 0; seed < 100; ++seed) {
        TwoRowDiagram diag = seeded_nullhomotopy_instance(seed);
        CochainComplex z = mapping_cone(diag).Z;
        CohomologyBasis ha = cohomology(diag.A), hb = cohomology(diag.B), hz = cohomology(z);
        for (int i = z.lo(); i <= z.hi(); ++i)
            t.require(hz.betti(i) == ha.betti(i) + hb.betti(i),
                      "cone betti does not split at seed " + std::to_string(seed));
    }
    return finish(4, "betti splitting when the induced link vanishes", t, "100 instances");
}

CriterionResult c5_iso_case() {
    Tally t;
    for (const auto& c : all_fixture_complexes()) {
        CochainComplex z = mapping_cone(shift_identity_diagram(c)).Z;
        for (int b : betti_table(z)) t.require(b == 0, "shifted-identity cone has cohomology");
    }
    return finish(5, "isomorphism case yields an exact cone", t, "5 fixtures");
}

CriterionResult c6_merged_les() {
    Tally t;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        TwoRowDiagram diag = seeded_pattern_instance(seed);
        PatternCertificate cert = detect_pattern(diag);
        t.require(cert.accepted, "pattern rejected at seed " + std::to_string(seed));
        if (!cert.accepted) continue;
        OutputComplex out = build_output_complex(diag, cert);
        MergedLongExactSequence les = merged_les(diag, cert, out);
        t.require(les.exact(), "merged sequence fails at seed " + std::to_string(seed));
        CorollaryReport cor = corollary_check(diag, cert, out);
        t.require(cor.all_hold(),
                  "kernel/cokernel dimension count fails at seed " + std::to_string(seed));
    }
    return finish(6, "merged long exact sequence under the rank pattern", t, "50 instances");
}

CriterionResult c7_rigid_motion() {
    Tally t;
    RigidMotionReport ball = rigid_motion_analogue(ball3_fixture(), 3, 3, 2);
    t.require(ball.betti == std::vector<int>{6, 0, 0, 0} && ball.match,
              "solid tetrahedron with m = n = 3 misses (6,0,0,0)");
    RigidMotionReport ring = rigid_motion_analogue(circle3_fixture(), 3, 3, 3);
    t.require(ring.betti == std::vector<int>{6, 6} && ring.match,
              "triangle boundary with m = n = 3 misses (6,6)");
    return finish(7, "six-dimensional rigid-motion analogue", t,
                  "ball (6,0,0,0), circle (6,6)");
}

std::vector<TwoRowDiagram> reduction_instances() {
    std::vector<TwoRowDiagram> out;
    for (uint64_t seed = 0; seed < 60; ++seed) out.push_back(seeded_nullhomotopy_instance(seed));
    for (uint64_t seed = 0; seed < 20; ++seed) out.push_back(seeded_pattern_instance(seed));
    for (const auto& c : all_fixture_complexes()) out.push_back(shift_identity_diagram(c));
    for (int k = 0; k < 5; ++k) {
        CochainComplex a = fixture_complex(k), b = fixture_complex((k + 2) % 5);
        out.push_back(TwoRowDiagram{a, b, zero_chain_map(a, b, 1)});
    }
    for (uint64_t seed = 0; seed < 5; ++seed) out.push_back(phi_probe(seed));
    for (const auto& c : all_fixture_complexes()) out.push_back(differential_as_diagram(c));
    return out;
}

CriterionResult c8_reduction() {
    Tally t;
    std::vector<TwoRowDiagram> instances = reduction_instances();
    for (size_t k = 0; k < instances.size(); ++k) {
        const std::string tag = " at instance " + std::to_string(k);
        BGGReduction r = bgg_reduce(instances[k]);
        t.require(validate_ses(reduction_ses(r)).valid(), "reduction sequence not exact" + tag);
        QuasiIsoCertificate cert = verify_quasi_iso(r);
        t.require(cert.ok(), "quasi-isomorphism certificate fails" + tag);

        BGGReduction r2 = bgg_reduce(instances[k], ComplementPolicy::Skewed);
        QuasiIsoCertificate cert2 = verify_quasi_iso(r2);
        t.require(cert2.ok() == cert.ok() && cert2.betti_reduced == cert.betti_reduced,
                  "complement policy changes the verdict" + tag);
    }
    return finish(8, "reduction to the kernel-cokernel subcomplex", t,
                  std::to_string(instances.size()) + " diagrams, both complement policies");
}

CriterionResult c9_spectral() {
    Tally t;
    std::vector<TwoRowDiagram> instances;
    {
        CochainComplex circle = fixture_complex(2), sphere = fixture_complex(3);
        instances.push_back(TwoRowDiagram{circle, sphere, zero_chain_map(circle, sphere, 1)});
        instances.push_back(shift_identity_diagram(circle));
        instances.push_back(designed_pattern_instance());
        instances.push_back(differential_as_diagram(fixture_complex(4)));
        instances.push_back(seam_scalar_instance());
        instances.push_back(seam_shift_instance());
    }
    for (uint64_t seed = 0; seed < 10; ++seed)
        instances.push_back(seeded_nullhomotopy_instance(seed));
    for (uint64_t seed = 0; seed < 10; ++seed) instances.push_back(seeded_pattern_instance(seed));
    for (uint64_t seed = 0; seed < 3; ++seed) instances.push_back(phi_probe(seed));

    for (size_t k = 0; k < instances.size(); ++k)
        t.require(verify_convergence(instances[k]).ok(),
                  "convergence certificate fails at instance " + std::to_string(k));

    for (uint64_t seed = 0; seed < 3; ++seed) {
        KnightMoveMaps phi = knight_move_phi(phi_probe(seed));
        RationalMatrix expected(1, 1);
        expected.at(0, 0) = Rational(1, 2 + static_cast<long>(seed % 3));
        t.require(phi.at(1) == expected,
                  "probe knight move misses its hand value at seed " + std::to_string(seed));
    }
    return finish(9, "two-row spectral convergence in both orientations", t,
                  std::to_string(instances.size()) + " diagrams plus the hand-checked probe");
}

CriterionResult c10_seam_localization() {
    Tally t;
    std::vector<TwoRowDiagram> instances;
    for (uint64_t seed = 0; seed < 10; ++seed) instances.push_back(seeded_pattern_instance(seed));
    instances.push_back(designed_pattern_instance());
    instances.push_back(seam_scalar_instance());
    instances.push_back(seam_shift_instance());

    for (size_t k = 0; k < instances.size(); ++k) {
        const std::string tag = " at instance " + std::to_string(k);
        PatternCertificate cert = detect_pattern(instances[k]);
        t.require(cert.accepted, "pattern rejected" + tag);
        if (!cert.accepted) continue;
        OutputComplex out = build_output_complex(instances[k], cert);
        ChainMap Phi = phi_from_pseudoinverses(instances[k]);
        int lo = std::min(instances[k].A.lo(), instances[k].B.lo());
        int hi = std::max(instances[k].A.hi(), instances[k].B.hi());
        for (int i = lo - 1; i <= hi + 1; ++i) {
            if (i == cert.j)
                t.require(Phi.comp(i) == -out.C.diff(i), "seam component is not minus D" + tag);
            else
                t.require(Phi.comp(i).is_zero(), "off-seam component is nonzero" + tag);
        }
    }
    // the two hand seams carry genuinely nonzero blocks there
    t.require(!phi_from_pseudoinverses(seam_scalar_instance()).comp(0).is_zero(),
              "scalar seam collapsed to zero");
    t.require(!phi_from_pseudoinverses(seam_shift_instance()).comp(0).is_zero(),
              "shifted seam collapsed to zero");
    return finish(10, "pseudoinverse realization localizes at the seam", t,
                  std::to_string(instances.size()) + " accepted patterns");
}

CriterionResult c11_gauge() {
    Tally t;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        CochainComplex a = fixture_complex(static_cast<int>(seed % 5));
        CochainComplex b = fixture_complex(static_cast<int>((seed + 3) % 5));
        SplitMix64 rng(seed * 0x9e3779b9ULL + 17);
        std::vector<RationalMatrix> comps;
        for (int i = a.lo(); i <= a.hi(); ++i) {
            RationalMatrix k(b.dim(i), a.dim(i));
            for (int r = 0; r < k.rows(); ++r)
                for (int c = 0; c < k.cols(); ++c) k.at(r, c) = Rational(rng.uniform(-2, 2));
            comps.push_back(std::move(k));
        }
        GaugeEquivalence g = gauge_equivalence(a, b, comps, a.lo());
        t.require(g.Q.is_chain_map(), "gauge map fails to commute at seed " + std::to_string(seed));
        for (int i = g.Z0.lo(); i <= g.Z0.hi(); ++i)
            t.require(determinant(g.Q.comp(i)) == Rational(1),
                      "gauge map is not unimodular at seed " + std::to_string(seed));
        t.require(g.betti_Z0 == g.betti_ZS,
                  "gauge-equivalent cones disagree on betti at seed " + std::to_string(seed));
    }
    // flatness: the cone differential squares to zero exactly when every
    // linking square commutes, checked in both directions
    for (uint64_t seed = 0; seed < 5; ++seed) {
        TwoRowDiagram good = random_nullhomotopy_diagram(fixture_complex(4), fixture_complex(3),
                                                         seed);
        bool commutes = good.S.is_chain_map();
        bool flat = validate_complex(twisted_complex(good.S)).valid();
        t.require(commutes && flat, "commuting link fails flatness at seed " +
                                        std::to_string(seed));

        std::vector<RationalMatrix> comps;
        for (int i = good.A.lo(); i <= good.A.hi(); ++i) comps.push_back(good.S.comp(i));
        comps[1].at(0, 0) += Rational(1);
        ChainMap bad(good.A, good.B, 1, std::move(comps));
        t.require(!bad.is_chain_map() && !validate_complex(twisted_complex(bad)).valid(),
                  "broken link passes flatness at seed " + std::to_string(seed));
    }
    return finish(11, "gauge equivalence and the flatness criterion", t,
                  "50 gauge instances, 5 flatness pairs");
}

CriterionResult c12_determinism() {
    Tally t;

    auto nullhomotopy_text = [](uint64_t seed) {
        return emit_diagram(seeded_nullhomotopy_instance(seed),
                            {{"generator", "nullhomotopy"}, {"seed", std::to_string(seed)}});
    };
    auto pattern_text = [](uint64_t seed) {
        return emit_diagram(seeded_pattern_instance(seed),
                            {{"generator", "pattern"}, {"seed", std::to_string(seed)}});
    };

    std::vector<std::string> texts;
    for (uint64_t seed = 0; seed < 5; ++seed) {
        t.require(nullhomotopy_text(seed) == nullhomotopy_text(seed),
                  "nullhomotopy serialization is not reproducible");
        t.require(pattern_text(seed) == pattern_text(seed),
                  "pattern serialization is not reproducible");
        texts.push_back(nullhomotopy_text(seed));
        texts.push_back(pattern_text(seed));
    }
    for (int k = 0; k < 5; ++k) texts.push_back(emit_complex(fixture_complex(k)));
    texts.push_back(emit_diagram(phi_probe(1)));
    texts.push_back(emit_diagram(shift_identity_diagram(fixture_complex(2))));

    for (size_t k = 0; k < texts.size(); ++k) {
        BggxDocument doc = parse_bggx(texts[k]);
        t.require(emit_bggx(doc) == texts[k],
                  "round-trip is not the identity on document " + std::to_string(k));
    }

    // end-to-end: identical invocations must produce identical report bytes
    namespace fs = std::filesystem;
    fs::path input = fs::temp_directory_path() / "bgg-selftest-input.bggx";
    {
        std::ofstream f(input);
        f << nullhomotopy_text(0);
    }
    for (const char* format : {"text", "machine"}) {
        std::string first, second;
        for (std::string* dst : {&first, &second}) {
            std::ostringstream out, err;
            int code = run_command({"spectral", "--input", input.string(), "--format", format},
                                   out, err);
            t.require(code == 0, "spectral command failed during the determinism check");
            *dst = out.str();
        }
        t.require(first == second && !first.empty(), "report bytes differ between identical runs");
    }
    std::error_code ec;
    fs::remove(input, ec);

    return finish(12, "byte-identical serialization, reports and round-trips", t,
                  std::to_string(texts.size()) + " documents, 2 report formats");
}

}  // namespace

TwoRowDiagram seeded_nullhomotopy_instance(uint64_t seed) {
    CochainComplex circle = fixture_complex(2);
    CochainComplex a, b;
    switch (seed % 5) {
        case 0: a = circle, b = circle; break;
        case 1: a = fixture_complex(4), b = fixture_complex(3); break;
        case 2: a = fixture_complex(3), b = circle; break;
        case 3: a = fixture_complex(0), b = fixture_complex(4); break;
        default: a = tensor_constant(circle, 2), b = fixture_complex(3); break;
    }
    return random_nullhomotopy_diagram(a, b, seed);
}

TwoRowDiagram seeded_pattern_instance(uint64_t seed) {
    SplitMix64 rng(seed * 0x2545f4914f6cdd1dULL + 1);
    CochainComplex w = fixture_complex(static_cast<int>(seed % 5));
    int j = static_cast<int>(rng.uniform(0, 2));

    auto part = [&](int lo) {
        int d0 = static_cast<int>(rng.uniform(0, 2));
        int d1 = static_cast<int>(rng.uniform(0, 2));
        RationalMatrix d(d1, d0);
        for (int r = 0; r < d1; ++r)
            for (int c = 0; c < d0; ++c) d.at(r, c) = Rational(rng.uniform(-2, 2));
        return CochainComplex(lo, {d0, d1}, {std::move(d)});
    };
    CochainComplex kpart = part(j + 1);  // supported strictly above the seam
    CochainComplex cpart = part(j - 1);  // supported at or below it
    return pattern_diagram(w, kpart, cpart, j);
}

bool SelfTestReport::all_pass() const {
    for (const auto& c : criteria)
        if (!c.pass) return false;
    return true;
}

std::string SelfTestReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : criteria) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << (c.number < 10 ? " " : "") << c.number << "  "
           << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    int passed = 0;
    for (const auto& c : criteria) passed += c.pass ? 1 : 0;
    os << (all_pass() ? "all criteria pass" : "criteria failing") << " (" << passed << "/"
       << criteria.size() << ")\n";
    return os.str();
}

SelfTestReport run_selftest() {
    SelfTestReport report;
    report.criteria.push_back(c1_validity());
    report.criteria.push_back(c2_betti());
    report.criteria.push_back(c3_les());
    report.criteria.push_back(c4_splitting());
    report.criteria.push_back(c5_iso_case());
    report.criteria.push_back(c6_merged_les());
    report.criteria.push_back(c7_rigid_motion());
    report.criteria.push_back(c8_reduction());
    report.criteria.push_back(c9_spectral());
    report.criteria.push_back(c10_seam_localization());
    report.criteria.push_back(c11_gauge());
    report.criteria.push_back(c12_determinism());
    return report;
}

}  // namespace bgg
