#include "bgg/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bgg/rng.hpp"

namespace bgg {

namespace {

SimplicialFixture full_tetrahedron_shell() {
    SimplicialFixture f;
    f.vertex_count = 4;
    f.simplices = {{{0}, {1}, {2}, {3}},
                   {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                   {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    return f;
}

}  // namespace

SimplicialFixture point_fixture() {
    return SimplicialFixture{"point", 1, {{{0}}}};
}

SimplicialFixture interval_fixture() {
    return SimplicialFixture{"interval", 2, {{{0}, {1}}, {{0, 1}}}};
}

SimplicialFixture circle3_fixture() {
    return SimplicialFixture{"circle3", 3, {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}}};
}

SimplicialFixture sphere_tetra_fixture() {
    SimplicialFixture f = full_tetrahedron_shell();
    f.name = "sphere_tetra";
    return f;
}

SimplicialFixture ball3_fixture() {
    SimplicialFixture f = full_tetrahedron_shell();
    f.name = "ball3";
    f.simplices.push_back({{0, 1, 2, 3}});
    return f;
}

std::optional<SimplicialFixture> fixture_by_name(const std::string& name) {
    if (name == "point") return point_fixture();
    if (name == "interval") return interval_fixture();
    if (name == "circle3") return circle3_fixture();
    if (name == "sphere_tetra") return sphere_tetra_fixture();
    if (name == "ball3") return ball3_fixture();
    return std::nullopt;
}

std::vector<std::string> fixture_names() {
    return {"point", "interval", "circle3", "sphere_tetra", "ball3"};
}

ValidityReport validate_fixture(const SimplicialFixture& f) {
    ValidityReport report;
    std::vector<std::set<std::vector<int>>> present(f.simplices.size());
    for (size_t m = 0; m < f.simplices.size(); ++m) {
        for (const auto& s : f.simplices[m]) {
            if (s.size() != m + 1) {
                report.failures.push_back({static_cast<int>(m), "tuple of the wrong length"});
                continue;
            }
            for (size_t t = 0; t < s.size(); ++t) {
                if (s[t] < 0 || s[t] >= f.vertex_count)
                    report.failures.push_back({static_cast<int>(m), "vertex out of range"});
                if (t > 0 && s[t] <= s[t - 1])
                    report.failures.push_back({static_cast<int>(m), "tuple is not ascending"});
            }
            if (!present[m].insert(s).second)
                report.failures.push_back({static_cast<int>(m), "duplicate simplex"});
        }
    }
    for (size_t m = 1; m < f.simplices.size(); ++m) {
        for (const auto& s : f.simplices[m]) {
            if (s.size() != m + 1) continue;
            for (size_t t = 0; t < s.size(); ++t) {
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<long>(t));
                if (!present[m - 1].count(face))
                    report.failures.push_back({static_cast<int>(m), "face missing"});
            }
        }
    }
    return report;
}

CochainComplex simplicial_cochain(const SimplicialFixture& f) {
    ValidityReport report = validate_fixture(f);
    if (!report.valid())
        throw std::invalid_argument("simplicial_cochain: invalid fixture: " + report.to_string());

    std::vector<std::vector<std::vector<int>>> sorted = f.simplices;
    for (auto& level : sorted) std::sort(level.begin(), level.end());
    std::vector<std::map<std::vector<int>, int>> index(sorted.size());
    for (size_t m = 0; m < sorted.size(); ++m)
        for (size_t k = 0; k < sorted[m].size(); ++k) index[m][sorted[m][k]] = static_cast<int>(k);

    std::vector<int> dims;
    for (const auto& level : sorted) dims.push_back(static_cast<int>(level.size()));
    std::vector<RationalMatrix> diffs;
    for (size_t m = 0; m + 1 < sorted.size(); ++m) {
        RationalMatrix d(dims[m + 1], dims[m]);
        for (size_t r = 0; r < sorted[m + 1].size(); ++r) {
            const auto& s = sorted[m + 1][r];
            for (size_t t = 0; t < s.size(); ++t) {
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<long>(t));
                d.at(static_cast<int>(r), index[m].at(face)) =
                    Rational(t % 2 == 0 ? 1 : -1);
            }
        }
        diffs.push_back(std::move(d));
    }
    return CochainComplex(0, std::move(dims), std::move(diffs));
}

TwoRowDiagram random_nullhomotopy_diagram(const CochainComplex& A, const CochainComplex& B,
                                          uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<RationalMatrix> k;
    for (int i = A.lo(); i <= A.hi(); ++i) {
        RationalMatrix m(B.dim(i), A.dim(i));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                m.at(r, c) = Rational(static_cast<long>(rng.uniform(-2, 2)));
        k.push_back(std::move(m));
    }
    return TwoRowDiagram{A, B, nullhomotopy_to_S(A, B, k, A.lo())};
}

TwoRowDiagram shift_identity_diagram(const CochainComplex& A) {
    CochainComplex B = shift(A, -1);
    std::vector<RationalMatrix> comps;
    for (int i = A.lo(); i <= A.hi(); ++i) comps.push_back(RationalMatrix::identity(A.dim(i)));
    return TwoRowDiagram{A, B, ChainMap(A, B, 1, std::move(comps))};
}

TwoRowDiagram pattern_diagram(const CochainComplex& W, const CochainComplex& Kpart,
                              const CochainComplex& Cpart, int j) {
    for (int i = Kpart.lo(); i <= Kpart.hi(); ++i)
        if (i <= j && Kpart.dim(i) > 0) {
            std::ostringstream os;
            os << "pattern_diagram: kernel part must vanish in degrees <= " << j
               << " but has dimension " << Kpart.dim(i) << " at degree " << i;
            throw std::invalid_argument(os.str());
        }
    for (int i = Cpart.lo(); i <= Cpart.hi(); ++i)
        if (i > j && Cpart.dim(i) > 0) {
            std::ostringstream os;
            os << "pattern_diagram: cokernel part must vanish in degrees > " << j
               << " but has dimension " << Cpart.dim(i) << " at degree " << i;
            throw std::invalid_argument(os.str());
        }

    CochainComplex A = direct_sum(W, Kpart);
    CochainComplex B = direct_sum(shift(W, -1), Cpart);
    std::vector<RationalMatrix> comps;
    for (int i = A.lo(); i <= A.hi(); ++i) {
        RationalMatrix s(B.dim(i + 1), A.dim(i));
        s.set_block(0, 0, RationalMatrix::identity(W.dim(i)));
        comps.push_back(std::move(s));
    }
    return TwoRowDiagram{A, B, ChainMap(A, B, 1, std::move(comps))};
}

TwoRowDiagram phi_probe(uint64_t seed) {
    Rational s(static_cast<long>(2 + seed % 3));
    RationalMatrix zero11(1, 1);
    RationalMatrix one11(1, 1);
    one11.at(0, 0) = Rational(1);
    RationalMatrix s11(1, 1);
    s11.at(0, 0) = s;

    // A: Q -0-> Q -1-> Q -> 0, B: 0 -> Q -1-> Q -0-> Q. Commutation forces
    // the linking map to vanish outside the middle slot.
    CochainComplex A(0, {1, 1, 1, 0}, {zero11, one11, RationalMatrix(0, 1)});
    CochainComplex B(0, {0, 1, 1, 1}, {RationalMatrix(1, 0), one11, zero11});
    std::vector<RationalMatrix> comps{RationalMatrix(1, 1), s11, RationalMatrix(1, 1),
                                      RationalMatrix(0, 0)};
    return TwoRowDiagram{A, B, ChainMap(A, B, 1, std::move(comps))};
}

TwoRowDiagram differential_as_diagram(const CochainComplex& A) {
    std::vector<RationalMatrix> comps;
    for (int i = A.lo(); i <= A.hi(); ++i) comps.push_back(A.diff(i));
    return TwoRowDiagram{A, A, ChainMap(A, A, 1, std::move(comps))};
}

}  // namespace bgg
