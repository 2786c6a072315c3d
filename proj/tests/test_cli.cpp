#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "bgg/bggx.hpp"
#include "bgg/cli.hpp"
#include "bgg/generators.hpp"
#include "bgg/selftest.hpp"

using namespace bgg;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "bgg-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto path = temp_dir() / name;
    std::ofstream f(path, std::ios::binary);
    f << text;
    return path.string();
}

}  // namespace

TEST_CASE("validate accepts a fixture and rejects a broken differential") {
    auto f = fixture_by_name("circle3");
    REQUIRE(f.has_value());
    std::string good = write_temp("circle.bggx", emit_complex(simplicial_cochain(*f)));
    RunResult ok = run({"validate", "--input", good});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("verdict: valid") != std::string::npos);

    // dims 1,1,1 with both maps the identity: d after d = 1 != 0
    std::string bad = write_temp("broken.bggx",
                                 R"({"format":"BGGX","version":1,"kind":"complex",
                                     "lo":0,"dims":[1,1,1],"diff":[[["1"]],[["1"]]]})");
    RunResult broken = run({"validate", "--input", bad});
    CHECK(broken.code == 1);
    CHECK(broken.out.find("status: fail") != std::string::npos);
}

TEST_CASE("usage and IO errors exit with 2") {
    CHECK(run({"validate"}).code == 2);                       // missing --input
    CHECK(run({"frobnicate"}).code == 2);                     // unknown command
    CHECK(run({}).code == 2);                                 // no command
    CHECK(run({"validate", "--input", "/does/not/exist"}).code == 2);
    CHECK(run({"generate", "--kind", "widget"}).code == 2);   // unknown generator kind
    CHECK(run({"generate", "--kind", "fixture", "--name", "klein"}).code == 2);
    std::string junk = write_temp("junk.bggx", "not json at all");
    RunResult parse = run({"validate", "--input", junk});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("bggx:") != std::string::npos);
}

TEST_CASE("help is available and exits cleanly") {
    RunResult top = run({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("generate") != std::string::npos);
    CHECK(run({"cohomology", "--help"}).code == 0);
}

TEST_CASE("cohomology prints the betti table and euler number") {
    auto f = fixture_by_name("circle3");
    std::string path = write_temp("circle.bggx", emit_complex(simplicial_cochain(*f)));
    RunResult r = run({"cohomology", "--input", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("betti: 1 1") != std::string::npos);
    CHECK(r.out.find("euler: 0") != std::string::npos);

    RunResult clipped = run({"cohomology", "--input", path, "--degree-range", "1:1"});
    CHECK(clipped.code == 0);
    CHECK(clipped.out.find("window: 1..1") != std::string::npos);
    CHECK(clipped.out.find("betti: 1\n") != std::string::npos);
}

TEST_CASE("generate is deterministic and --output matches stdout bytes") {
    RunResult a = run({"generate", "--kind", "pattern", "--seed", "5"});
    RunResult b = run({"generate", "--kind", "pattern", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto path = temp_dir() / "gen.bggx";
    RunResult c = run({"generate", "--kind", "pattern", "--seed", "5", "--output", path.string()});
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::ostringstream bytes;
    bytes << f.rdbuf();
    CHECK(bytes.str() == a.out);
}

TEST_CASE("every generator kind emits a parseable document") {
    for (std::string kind : {"nullhomotopy", "pattern", "phi-probe"}) {
        RunResult r = run({"generate", "--kind", kind, "--seed", "3"});
        CHECK(r.code == 0);
        BggxDocument doc = parse_bggx(r.out);
        CHECK(doc.kind == BggxKind::Diagram);
        CHECK(doc.meta.at("generator") == kind);
        CHECK(doc.meta.at("seed") == "3");
    }
    RunResult fx = run({"generate", "--kind", "fixture", "--name", "sphere_tetra"});
    CHECK(fx.code == 0);
    CHECK(parse_bggx(fx.out).kind == BggxKind::Complex);
    RunResult si = run({"generate", "--kind", "shift-identity", "--name", "ball3"});
    CHECK(si.code == 0);
    CHECK(parse_bggx(si.out).kind == BggxKind::Diagram);
}

TEST_CASE("diagram commands report their verdicts through the exit code") {
    std::string nh = write_temp("nh.bggx", emit_diagram(seeded_nullhomotopy_instance(7)));
    CHECK(run({"les", "--input", nh}).code == 0);
    CHECK(run({"cone", "--input", nh}).code == 0);
    CHECK(run({"bgg-reduce", "--input", nh}).code == 0);
    CHECK(run({"spectral", "--input", nh}).code == 0);

    // the nullhomotopy link is neither injective nor surjective in middle
    // degrees, so pattern detection rejects it: verdict exit 1, not a usage 2
    RunResult rejected = run({"bgg-pattern", "--input", nh});
    CHECK(rejected.code == 1);
    CHECK(rejected.out.find("status: fail") != std::string::npos);

    std::string pat = write_temp("pat.bggx", emit_diagram(seeded_pattern_instance(4)));
    RunResult accepted = run({"bgg-pattern", "--input", pat});
    CHECK(accepted.code == 0);
    CHECK(accepted.out.find("pattern accepted") != std::string::npos);
    CHECK(accepted.out.find("merged sequence") != std::string::npos);
}

TEST_CASE("reports are byte-identical across repeated runs") {
    std::string nh = write_temp("nh2.bggx", emit_diagram(seeded_nullhomotopy_instance(12)));
    for (std::string fmt : {"text", "machine"}) {
        RunResult a = run({"spectral", "--input", nh, "--format", fmt});
        RunResult b = run({"spectral", "--input", nh, "--format", fmt});
        CHECK(a.out == b.out);
        CHECK(a.code == 0);
    }
}

TEST_CASE("machine reports are JSON holding the same data as text") {
    auto f = fixture_by_name("circle3");
    std::string path = write_temp("circle2.bggx", emit_complex(simplicial_cochain(*f)));
    RunResult r = run({"cohomology", "--input", path, "--format", "machine"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["status"] == "ok");
    bool saw_betti = false;
    for (const auto& item : j["results"])
        if (item[0] == "betti") {
            CHECK(item[1] == "1 1");
            saw_betti = true;
        }
    CHECK(saw_betti);
}

TEST_CASE("the selftest command reports every criterion") {
    RunResult r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all criteria pass (12/12)") != std::string::npos);
}
