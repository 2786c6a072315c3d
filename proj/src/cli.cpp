#include "bgg/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"

#include "bgg/bggx.hpp"
#include "bgg/generators.hpp"
#include "bgg/pattern.hpp"
#include "bgg/reduction.hpp"
#include "bgg/report.hpp"
#include "bgg/selftest.hpp"
#include "bgg/spectral.hpp"

namespace bgg {

namespace {

struct CommonOpts {
    std::string input;
    std::string output;
    std::string format = "text";
    std::string degree_range;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_range) {
    cmd->add_option("--input", o.input, "BGGX input file")->required();
    cmd->add_option("--output", o.output, "write the result here instead of stdout");
    cmd->add_option("--format", o.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    if (with_range)
        cmd->add_option("--degree-range", o.degree_range, "clip printed tables to lo:hi");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw BggxError("bgg: cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string join_args(const std::vector<std::string>& args) {
    std::ostringstream os;
    for (size_t k = 0; k < args.size(); ++k) os << (k ? " " : "") << args[k];
    return os.str();
}

std::pair<int, int> clip_window(int lo, int hi, const std::string& range) {
    if (range.empty()) return {lo, hi};
    size_t colon = range.find(':');
    if (colon == std::string::npos) throw BggxError("--degree-range expects lo:hi");
    try {
        int a = std::stoi(range.substr(0, colon));
        int b = std::stoi(range.substr(colon + 1));
        return {std::max(lo, a), std::min(hi, b)};
    } catch (const std::exception&) {
        throw BggxError("--degree-range expects lo:hi");
    }
}

std::string window_string(int lo, int hi) {
    std::ostringstream os;
    if (hi < lo)
        os << "empty";
    else
        os << lo << ".." << hi;
    return os.str();
}

std::vector<int> betti_slice(const CohomologyBasis& h, int lo, int hi) {
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(h.betti(i));
    return out;
}

int emit(const Report& rep, const CommonOpts& o, std::ostream& out) {
    std::string body = rep.render(o.format == "machine");
    if (!o.output.empty()) {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) throw BggxError("bgg: cannot write " + o.output);
        f << body;
    } else {
        out << body;
    }
    return rep.ok ? 0 : 1;
}

// Validation becomes part of the report rather than an exception, so a bad
// input yields exit 1 with the failing degrees listed.
bool check_diagram(const BggxDocument& doc, Report& rep) {
    if (doc.kind != BggxKind::Diagram) {
        rep.ok = false;
        rep.add("error", "this command needs a diagram document");
        return false;
    }
    ValidityReport vr = validate_diagram(doc.diagram);
    if (!vr.valid()) {
        rep.ok = false;
        rep.add("diagram", vr.to_string());
        return false;
    }
    return true;
}

int cmd_validate(const BggxDocument& doc, const CommonOpts& o, Report rep, std::ostream& out) {
    if (doc.kind == BggxKind::Complex) {
        rep.add("kind", "complex");
        rep.add("window", window_string(doc.complex.lo(), doc.complex.hi()));
        ValidityReport vr = validate_complex(doc.complex);
        rep.ok = vr.valid();
        rep.add("verdict", vr.valid() ? "valid" : vr.to_string());
    } else {
        rep.add("kind", "diagram");
        ValidityReport vr = validate_diagram(doc.diagram);
        rep.ok = vr.valid();
        rep.add("verdict", vr.valid() ? "valid" : vr.to_string());
    }
    return emit(rep, o, out);
}

int cmd_cohomology(const BggxDocument& doc, const CommonOpts& o, Report rep, std::ostream& out) {
    if (doc.kind == BggxKind::Complex) {
        ValidityReport vr = validate_complex(doc.complex);
        if (!vr.valid()) {
            rep.ok = false;
            rep.add("complex", vr.to_string());
            return emit(rep, o, out);
        }
        auto [lo, hi] = clip_window(doc.complex.lo(), doc.complex.hi(), o.degree_range);
        rep.add("window", window_string(lo, hi));
        rep.add("betti", betti_slice(cohomology(doc.complex), lo, hi));
        rep.add("euler", doc.complex.euler_characteristic());
    } else {
        if (!check_diagram(doc, rep)) return emit(rep, o, out);
        auto [lo, hi] = clip_window(std::min(doc.diagram.A.lo(), doc.diagram.B.lo()),
                                    std::max(doc.diagram.A.hi(), doc.diagram.B.hi()),
                                    o.degree_range);
        rep.add("window", window_string(lo, hi));
        rep.add("betti A", betti_slice(cohomology(doc.diagram.A), lo, hi));
        rep.add("betti B", betti_slice(cohomology(doc.diagram.B), lo, hi));
    }
    return emit(rep, o, out);
}

int cmd_cone(const BggxDocument& doc, const CommonOpts& o, Report rep, std::ostream& out) {
    if (!check_diagram(doc, rep)) return emit(rep, o, out);
    CochainComplex z = mapping_cone(doc.diagram).Z;
    auto [lo, hi] = clip_window(z.lo(), z.hi(), o.degree_range);
    rep.add("window", window_string(lo, hi));
    std::vector<int> dims;
    for (int i = lo; i <= hi; ++i) dims.push_back(z.dim(i));
    rep.add("dims", dims);
    rep.add("betti", betti_slice(cohomology(z), lo, hi));
    return emit(rep, o, out);
}

int cmd_les(const BggxDocument& doc, const CommonOpts& o, Report rep, std::ostream& out) {
    if (!check_diagram(doc, rep)) return emit(rep, o, out);
    LongExactSequenceReport les = long_exact_sequence(cone_ses(mapping_cone(doc.diagram)));
    InducedMap via_s =
        induced_on_cohomology(doc.diagram.S, cohomology(doc.diagram.A), cohomology(doc.diagram.B));
    bool connecting_matches = les.connecting == via_s;
    rep.ok = les.exact() && connecting_matches;
    rep.add("sequence", les.to_string());
    rep.add("exact", les.exact() ? "yes" : "no");
    rep.add("connecting equals induced link", connecting_matches ? "yes" : "no");
    return emit(rep, o, out);
}

int cmd_bgg_pattern(const BggxDocument& doc, const CommonOpts& o, Report rep, std::ostream& out) {
    if (!check_diagram(doc, rep)) return emit(rep, o, out);
    PatternCertificate cert = detect_pattern(doc.diagram);
    rep.add("certificate", cert.to_string());
    if (!cert.accepted) {
        rep.ok = false;
        return emit(rep, o, out);
    }
    rep.add("seam", static_cast<long>(cert.j));
    OutputComplex output = build_output_complex(doc.diagram, cert);
    std::vector<int> dims;
    for (int i = output.C.lo(); i <= output.C.hi(); ++i) dims.push_back(output.C.dim(i));
    rep.add("output dims", dims);
    rep.add("output betti", betti_table(output.C));
    MergedLongExactSequence les = merged_les(doc.diagram, cert, output);
    rep.add("merged sequence", les.to_string());
    CorollaryReport cor = corollary_check(doc.diagram, cert, output);
    rep.add("kernel-cokernel count", cor.to_string());
    rep.ok = les.exact() && cor.all_hold();
    return emit(rep, o, out);
}

int cmd_bgg_reduce(const BggxDocument& doc, const CommonOpts& o, Report rep, std::ostream& out) {
    if (!check_diagram(doc, rep)) return emit(rep, o, out);
    BGGReduction r = bgg_reduce(doc.diagram);
    bool ses_ok = validate_ses(reduction_ses(r)).valid();
    QuasiIsoCertificate cert = verify_quasi_iso(r);
    std::vector<int> dims;
    for (int i = r.reduced.lo(); i <= r.reduced.hi(); ++i) dims.push_back(r.reduced.dim(i));
    rep.add("reduced dims", dims);
    rep.add("sequence exact", ses_ok ? "yes" : "no");
    rep.add("certificate", cert.to_string());
    rep.ok = ses_ok && cert.ok();
    return emit(rep, o, out);
}

int cmd_spectral(const BggxDocument& doc, const CommonOpts& o, Report rep, std::ostream& out) {
    if (!check_diagram(doc, rep)) return emit(rep, o, out);
    ConvergenceCertificate cert = verify_convergence(doc.diagram);
    rep.add("certificate", cert.to_string());
    rep.ok = cert.ok();
    return emit(rep, o, out);
}

struct GenerateOpts {
    std::string kind;
    std::string name = "circle3";
    uint64_t seed = 0;
    std::string output;
};

int cmd_generate(const GenerateOpts& g, std::ostream& out) {
    std::string body;
    if (g.kind == "fixture" || g.kind == "shift-identity") {
        auto f = fixture_by_name(g.name);
        if (!f) throw BggxError("unknown fixture '" + g.name + "'");
        if (g.kind == "fixture")
            body = emit_complex(simplicial_cochain(*f),
                                {{"generator", "fixture"}, {"name", g.name}});
        else
            body = emit_diagram(shift_identity_diagram(simplicial_cochain(*f)),
                                {{"generator", "shift-identity"}, {"name", g.name}});
    } else if (g.kind == "nullhomotopy") {
        body = emit_diagram(seeded_nullhomotopy_instance(g.seed),
                            {{"generator", "nullhomotopy"}, {"seed", std::to_string(g.seed)}});
    } else if (g.kind == "pattern") {
        body = emit_diagram(seeded_pattern_instance(g.seed),
                            {{"generator", "pattern"}, {"seed", std::to_string(g.seed)}});
    } else {
        body = emit_diagram(phi_probe(g.seed),
                            {{"generator", "phi-probe"}, {"seed", std::to_string(g.seed)}});
    }
    if (!g.output.empty()) {
        std::ofstream f(g.output, std::ios::binary);
        if (!f) throw BggxError("bgg: cannot write " + g.output);
        f << body;
    } else {
        out << body;
    }
    return 0;
}

int cmd_selftest(const CommonOpts& o, std::ostream& out) {
    SelfTestReport st = run_selftest();
    Report rep;
    rep.command = "selftest";
    rep.ok = st.all_pass();
    rep.add("criteria", st.to_string());
    return emit(rep, o, out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for two-row diagrams of cochain complexes"};
    app.name("bgg");
    app.require_subcommand(1);

    CommonOpts common;
    GenerateOpts gen;

    CLI::App* validate = app.add_subcommand("validate", "check d after d = 0 / linking squares");
    CLI::App* cohomology_cmd = app.add_subcommand("cohomology", "betti tables");
    CLI::App* cone = app.add_subcommand("cone", "mapping cone dimensions and betti");
    CLI::App* les = app.add_subcommand("les", "long exact sequence of the cone");
    CLI::App* pattern = app.add_subcommand("bgg-pattern", "rank-pattern detection and merged sequence");
    CLI::App* reduce = app.add_subcommand("bgg-reduce", "kernel-cokernel reduction certificate");
    CLI::App* spectral = app.add_subcommand("spectral", "two-row convergence certificate");
    CLI::App* generate = app.add_subcommand("generate", "emit a BGGX document");
    CLI::App* selftest = app.add_subcommand("selftest", "run the full acceptance suite");

    add_common(validate, common, false);
    add_common(cohomology_cmd, common, true);
    add_common(cone, common, true);
    add_common(les, common, false);
    add_common(pattern, common, false);
    add_common(reduce, common, false);
    add_common(spectral, common, false);

    generate->add_option("--kind", gen.kind, "fixture|nullhomotopy|shift-identity|pattern|phi-probe")
        ->required()
        ->check(CLI::IsMember({"fixture", "nullhomotopy", "shift-identity", "pattern", "phi-probe"}));
    generate->add_option("--seed", gen.seed, "generator seed");
    generate->add_option("--name", gen.name, "fixture name for fixture/shift-identity");
    generate->add_option("--output", gen.output, "write the document here instead of stdout");

    selftest->add_option("--format", common.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    selftest->add_option("--output", common.output, "write the report here instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("bgg");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen, out);
        if (selftest->parsed()) return cmd_selftest(common, out);

        std::string text = read_file(common.input);
        BggxDocument doc = parse_bggx(text);
        Report rep;
        rep.command = join_args(args);
        rep.input_digest = fnv1a_hex(text);

        if (validate->parsed()) return cmd_validate(doc, common, std::move(rep), out);
        if (cohomology_cmd->parsed()) return cmd_cohomology(doc, common, std::move(rep), out);
        if (cone->parsed()) return cmd_cone(doc, common, std::move(rep), out);
        if (les->parsed()) return cmd_les(doc, common, std::move(rep), out);
        if (pattern->parsed()) return cmd_bgg_pattern(doc, common, std::move(rep), out);
        if (reduce->parsed()) return cmd_bgg_reduce(doc, common, std::move(rep), out);
        if (spectral->parsed()) return cmd_spectral(doc, common, std::move(rep), out);
        err << "bgg: no command selected\n";
        return 2;
    } catch (const BggxError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "bgg: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bgg
