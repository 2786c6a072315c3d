#include "bgg/bggx.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace bgg {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw BggxError("bggx: " + path + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) fail(path + "/" + key, "missing field");
    return *it;
}

int need_int(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_number_integer()) fail(path + "/" + key, "expected an integer");
    return v.get<int>();
}

std::vector<int> need_dims(const json& j, const std::string& path) {
    const json& v = need(j, "dims", path);
    if (!v.is_array()) fail(path + "/dims", "expected an array");
    std::vector<int> dims;
    for (const auto& e : v) {
        if (!e.is_number_integer() || e.get<int>() < 0)
            fail(path + "/dims", "dimensions must be nonnegative integers");
        dims.push_back(e.get<int>());
    }
    return dims;
}

Rational parse_entry(const json& e, const std::string& path) {
    if (e.is_number_integer()) return Rational(e.get<long>());
    if (!e.is_string()) fail(path, "expected a \"p/q\" string or an integer");
    try {
        return Rational::parse(e.get<std::string>());
    } catch (const std::invalid_argument& ex) {
        fail(path, "'" + e.get<std::string>() + "': " + ex.what());
    }
}

// Shape errors name the degree the matrix belongs to.
RationalMatrix parse_matrix(const json& m, int rows, int cols, int degree,
                            const std::string& path) {
    if (!m.is_array()) fail(path, "expected an array of rows");
    if (static_cast<int>(m.size()) != rows) {
        std::ostringstream os;
        os << "has " << m.size() << " rows, expected " << rows << " (degree " << degree << ")";
        fail(path, os.str());
    }
    RationalMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = m[r];
        std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!row.is_array()) fail(rpath, "expected an array of entries");
        if (static_cast<int>(row.size()) != cols) {
            std::ostringstream os;
            os << "row has " << row.size() << " entries, expected " << cols << " (degree "
               << degree << ")";
            fail(rpath, os.str());
        }
        for (int c = 0; c < cols; ++c)
            out.at(r, c) = parse_entry(row[c], rpath + "[" + std::to_string(c) + "]");
    }
    return out;
}

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

CochainComplex parse_complex_fields(const json& j, const std::string& path) {
    int lo = need_int(j, "lo", path);
    std::vector<int> dims = need_dims(j, path);
    const json& dj = need(j, "diff", path);
    if (!dj.is_array()) fail(path + "/diff", "expected an array of matrices");
    size_t want = dims.empty() ? 0 : dims.size() - 1;
    if (dj.size() != want) {
        std::ostringstream os;
        os << "has " << dj.size() << " matrices, expected " << want;
        fail(path + "/diff", os.str());
    }
    std::vector<RationalMatrix> diffs;
    for (size_t k = 0; k < want; ++k)
        diffs.push_back(parse_matrix(dj[k], dims[k + 1], dims[k], lo + static_cast<int>(k),
                                     path + "/diff[" + std::to_string(k) + "]"));
    return CochainComplex(lo, std::move(dims), std::move(diffs));
}

json complex_to_json(const CochainComplex& c) {
    json j;
    j["lo"] = c.lo();
    json dims = json::array(), diffs = json::array();
    for (int i = c.lo(); i <= c.hi(); ++i) dims.push_back(c.dim(i));
    for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(matrix_to_json(c.diff(i)));
    j["dims"] = std::move(dims);
    j["diff"] = std::move(diffs);
    return j;
}

std::map<std::string, std::string> parse_meta(const json& j) {
    std::map<std::string, std::string> meta;
    auto it = j.find("meta");
    if (it == j.end()) return meta;
    if (!it->is_object()) fail("/meta", "expected an object of strings");
    for (const auto& [k, v] : it->items()) {
        if (!v.is_string()) fail("/meta/" + k, "expected a string value");
        meta[k] = v.get<std::string>();
    }
    return meta;
}

}  // namespace

BggxDocument parse_bggx(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw BggxError(std::string("bggx: ") + e.what());
    }
    if (!j.is_object()) fail("/", "expected a JSON object");
    const json& fmt = need(j, "format", "");
    if (!fmt.is_string() || fmt.get<std::string>() != "BGGX")
        fail("/format", "expected \"BGGX\"");
    if (need_int(j, "version", "") != 1) fail("/version", "unsupported version");

    const json& kj = need(j, "kind", "");
    std::string kind = kj.is_string() ? kj.get<std::string>() : "";

    BggxDocument doc;
    doc.meta = parse_meta(j);
    if (kind == "complex") {
        doc.kind = BggxKind::Complex;
        doc.complex = parse_complex_fields(j, "");
    } else if (kind == "diagram") {
        doc.kind = BggxKind::Diagram;
        const json& aj = need(j, "A", "");
        const json& bj = need(j, "B", "");
        CochainComplex A = parse_complex_fields(aj, "/A");
        CochainComplex B = parse_complex_fields(bj, "/B");
        const json& sj = need(j, "S", "");
        if (need_int(sj, "shift", "/S") != 1) fail("/S/shift", "linking maps have shift 1");
        const json& cj = need(sj, "comps", "/S");
        if (!cj.is_array()) fail("/S/comps", "expected an array of matrices");
        size_t want = static_cast<size_t>(A.hi() - A.lo() + 1);
        if (A.hi() < A.lo()) want = 0;
        if (cj.size() != want) {
            std::ostringstream os;
            os << "has " << cj.size() << " matrices, expected one per degree of A (" << want
               << ")";
            fail("/S/comps", os.str());
        }
        std::vector<RationalMatrix> comps;
        for (size_t k = 0; k < want; ++k) {
            int deg = A.lo() + static_cast<int>(k);
            comps.push_back(parse_matrix(cj[k], B.dim(deg + 1), A.dim(deg), deg,
                                         "/S/comps[" + std::to_string(k) + "]"));
        }
        doc.diagram = TwoRowDiagram{A, B, ChainMap(A, B, 1, std::move(comps))};
    } else {
        fail("/kind", "expected \"complex\" or \"diagram\"");
    }
    return doc;
}

std::string emit_bggx(const BggxDocument& doc) {
    json j;
    j["format"] = "BGGX";
    j["version"] = 1;
    if (doc.kind == BggxKind::Complex) {
        j["kind"] = "complex";
        json cj = complex_to_json(doc.complex);
        for (auto& [k, v] : cj.items()) j[k] = std::move(v);
    } else {
        j["kind"] = "diagram";
        j["A"] = complex_to_json(doc.diagram.A);
        j["B"] = complex_to_json(doc.diagram.B);
        json sj;
        sj["shift"] = 1;
        json comps = json::array();
        for (int i = doc.diagram.A.lo(); i <= doc.diagram.A.hi(); ++i)
            comps.push_back(matrix_to_json(doc.diagram.S.comp(i)));
        sj["comps"] = std::move(comps);
        j["S"] = std::move(sj);
    }
    if (!doc.meta.empty()) {
        json mj;
        for (const auto& [k, v] : doc.meta) mj[k] = v;
        j["meta"] = std::move(mj);
    }
    return j.dump(2) + "\n";
}

std::string emit_complex(const CochainComplex& c, std::map<std::string, std::string> meta) {
    BggxDocument doc;
    doc.kind = BggxKind::Complex;
    doc.complex = c;
    doc.meta = std::move(meta);
    return emit_bggx(doc);
}

std::string emit_diagram(const TwoRowDiagram& d, std::map<std::string, std::string> meta) {
    BggxDocument doc;
    doc.kind = BggxKind::Diagram;
    doc.diagram = d;
    doc.meta = std::move(meta);
    return emit_bggx(doc);
}

}  // namespace bgg
