#include <string>
#include <vector>

#include "doctest.h"

#include "bgg/bggx.hpp"
#include "bgg/generators.hpp"
#include "bgg/selftest.hpp"

using namespace bgg;

namespace {

std::vector<std::string> sample_documents() {
    std::vector<std::string> docs;
    for (const auto& name : fixture_names()) {
        auto f = fixture_by_name(name);
        REQUIRE(f.has_value());
        docs.push_back(emit_complex(simplicial_cochain(*f), {{"name", name}}));
        docs.push_back(emit_diagram(shift_identity_diagram(simplicial_cochain(*f))));
    }
    for (uint64_t seed : {0, 1, 2}) {
        docs.push_back(emit_diagram(seeded_nullhomotopy_instance(seed)));
        docs.push_back(emit_diagram(seeded_pattern_instance(seed)));
        docs.push_back(emit_diagram(phi_probe(seed)));
    }
    return docs;
}

}  // namespace

TEST_CASE("emit after parse reproduces the exact bytes") {
    for (const auto& text : sample_documents()) {
        BggxDocument doc = parse_bggx(text);
        CHECK(emit_bggx(doc) == text);
    }
}

TEST_CASE("emission is deterministic") {
    TwoRowDiagram d = seeded_nullhomotopy_instance(11);
    CHECK(emit_diagram(d) == emit_diagram(d));
}

TEST_CASE("a parsed complex matches its source object") {
    CochainComplex c(0, {1, 2, 1}, {RationalMatrix(2, 1), RationalMatrix(1, 2)});
    std::string text = emit_complex(c, {{"origin", "unit test"}});
    BggxDocument doc = parse_bggx(text);
    REQUIRE(doc.kind == BggxKind::Complex);
    CHECK(doc.complex.lo() == 0);
    CHECK(doc.complex.hi() == 2);
    CHECK(doc.complex.dim(1) == 2);
    CHECK(doc.complex.diff(0) == c.diff(0));
    CHECK(doc.meta.at("origin") == "unit test");
}

TEST_CASE("fractional entries survive the round trip") {
    RationalMatrix d(1, 1);
    d.at(0, 0) = Rational(-3, 7);
    CochainComplex c(2, {1, 1}, {d});
    BggxDocument doc = parse_bggx(emit_complex(c));
    REQUIRE(doc.kind == BggxKind::Complex);
    CHECK(doc.complex.lo() == 2);
    CHECK(doc.complex.diff(2).at(0, 0) == Rational(-3, 7));
    CHECK(emit_complex(c).find("\"-3/7\"") != std::string::npos);
}

TEST_CASE("a parsed diagram carries the linking components") {
    TwoRowDiagram d = phi_probe(1);
    BggxDocument doc = parse_bggx(emit_diagram(d));
    REQUIRE(doc.kind == BggxKind::Diagram);
    CHECK(betti_table(doc.diagram.A) == betti_table(d.A));
    CHECK(betti_table(doc.diagram.B) == betti_table(d.B));
    for (int i = d.A.lo(); i <= d.A.hi(); ++i) CHECK(doc.diagram.S.comp(i) == d.S.comp(i));
}

TEST_CASE("integer JSON entries are accepted alongside strings") {
    std::string text = R"({"format":"BGGX","version":1,"kind":"complex",
                           "lo":0,"dims":[1,1],"diff":[[[3]]]})";
    BggxDocument doc = parse_bggx(text);
    CHECK(doc.complex.diff(0).at(0, 0) == Rational(3));
}

TEST_CASE("parse failures name the offending path") {
    auto message = [](const std::string& text) {
        try {
            parse_bggx(text);
        } catch (const BggxError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };

    CHECK(message("{").find("bggx:") == 0);
    CHECK(message(R"({"format":"X","version":1,"kind":"complex"})").find("/format") !=
          std::string::npos);
    CHECK(message(R"({"format":"BGGX","version":2,"kind":"complex"})").find("/version") !=
          std::string::npos);
    CHECK(message(R"({"format":"BGGX","version":1,"kind":"widget"})").find("/kind") !=
          std::string::npos);
    CHECK(message(R"({"format":"BGGX","version":1,"kind":"complex","lo":0})").find("/dims") !=
          std::string::npos);

    std::string zero_denominator = message(
        R"({"format":"BGGX","version":1,"kind":"complex","lo":0,"dims":[1,1],"diff":[[["3/0"]]]})");
    CHECK(zero_denominator.find("3/0") != std::string::npos);

    std::string short_row = message(
        R"({"format":"BGGX","version":1,"kind":"complex","lo":5,"dims":[2,1],"diff":[[[1]]]})");
    CHECK(short_row.find("degree 5") != std::string::npos);

    std::string bad_shift = message(
        R"({"format":"BGGX","version":1,"kind":"diagram",
            "A":{"lo":0,"dims":[1],"diff":[]},
            "B":{"lo":1,"dims":[1],"diff":[]},
            "S":{"shift":2,"comps":[[[1]]]}})");
    CHECK(bad_shift.find("/S/shift") != std::string::npos);

    std::string comp_count = message(
        R"({"format":"BGGX","version":1,"kind":"diagram",
            "A":{"lo":0,"dims":[1],"diff":[]},
            "B":{"lo":1,"dims":[1],"diff":[]},
            "S":{"shift":1,"comps":[]}})");
    CHECK(comp_count.find("/S/comps") != std::string::npos);
}

TEST_CASE("documents parsed from disk form valid objects") {
    // The emit side never writes an invalid object from a generator, and the
    // parse side rebuilds it without relaxing the window conventions.
    BggxDocument doc = parse_bggx(emit_diagram(seeded_pattern_instance(9)));
    REQUIRE(doc.kind == BggxKind::Diagram);
    CHECK(validate_diagram(doc.diagram).valid());
}
