#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "bgg/complex.hpp"
#include "bgg/cones.hpp"

namespace bgg {

// Parse failure; the message names the JSON path (or byte position for
// malformed JSON) of the offending field.
struct BggxError : std::runtime_error {
    explicit BggxError(const std::string& what) : std::runtime_error(what) {}
};

enum class BggxKind { Complex, Diagram };

// One interchange document: a single complex or a linked two-row diagram,
// plus free-form string metadata. Matrices are dense row-major arrays of
// "p" / "p/q" strings; emission is canonical (sorted keys, two-space
// indent), so equal objects serialize to equal bytes.
struct BggxDocument {
    BggxKind kind = BggxKind::Complex;
    CochainComplex complex;  // kind == Complex
    TwoRowDiagram diagram;   // kind == Diagram
    std::map<std::string, std::string> meta;
};

BggxDocument parse_bggx(const std::string& text);
std::string emit_bggx(const BggxDocument& doc);

std::string emit_complex(const CochainComplex& c,
                         std::map<std::string, std::string> meta = {});
std::string emit_diagram(const TwoRowDiagram& d,
                         std::map<std::string, std::string> meta = {});

}  // namespace bgg
