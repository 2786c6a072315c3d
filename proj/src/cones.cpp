#include "bgg/cones.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bgg/linalg.hpp"
#include "bgg/rng.hpp"

namespace bgg {

namespace {

CochainComplex negate_diffs(const CochainComplex& c) {
    std::vector<int> dims;
    std::vector<RationalMatrix> diffs;
    for (int i = c.lo(); i <= c.hi(); ++i) dims.push_back(c.dim(i));
    for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(-c.diff(i));
    return CochainComplex(c.lo(), std::move(dims), std::move(diffs));
}

// B block on top of A block over the union window; sign multiplies d_A.
CochainComplex assemble_cone(const CochainComplex& A, const CochainComplex& B, const ChainMap& S,
                             int a_sign) {
    int lo = std::min(A.lo(), B.lo());
    int hi = std::max(A.hi(), B.hi());
    std::vector<int> dims;
    std::vector<RationalMatrix> diffs;
    for (int i = lo; i <= hi; ++i) dims.push_back(B.dim(i) + A.dim(i));
    for (int i = lo; i < hi; ++i) {
        RationalMatrix da = a_sign < 0 ? -A.diff(i) : A.diff(i);
        diffs.push_back(block2x2(B.diff(i), S.comp(i), RationalMatrix(A.dim(i + 1), B.dim(i)), da));
    }
    return CochainComplex(lo, std::move(dims), std::move(diffs));
}

}  // namespace

ValidityReport validate_diagram(const TwoRowDiagram& diag) {
    ValidityReport report;
    ValidityReport ra = validate_complex(diag.A);
    for (const auto& f : ra.failures) report.failures.push_back({f.degree, "row A: " + f.what});
    ValidityReport rb = validate_complex(diag.B);
    for (const auto& f : rb.failures) report.failures.push_back({f.degree, "row B: " + f.what});
    if (diag.S.shift() != 1) {
        report.failures.push_back({diag.A.lo(), "S must raise degree by one"});
        return report;
    }
    if (diag.S.source() != diag.A || diag.S.target() != diag.B) {
        report.failures.push_back({diag.A.lo(), "S does not connect rows A and B"});
        return report;
    }
    for (int i = std::min(diag.A.lo(), diag.B.lo()) - 1; i <= std::max(diag.A.hi(), diag.B.hi());
         ++i) {
        if (!diag.S.residual(i).is_zero())
            report.failures.push_back({i, "linking square does not commute"});
    }
    return report;
}

TwoRowDiagram diagram_direct_sum(const TwoRowDiagram& d1, const TwoRowDiagram& d2) {
    CochainComplex A = direct_sum(d1.A, d2.A);
    CochainComplex B = direct_sum(d1.B, d2.B);
    std::vector<RationalMatrix> comps;
    for (int i = A.lo(); i <= A.hi(); ++i)
        comps.push_back(block_diag(d1.S.comp(i), d2.S.comp(i)));
    return TwoRowDiagram{A, B, ChainMap(A, B, 1, std::move(comps))};
}

CochainComplex twisted_complex(const ChainMap& S) {
    return assemble_cone(S.source(), S.target(), S, -1);
}

MappingCone mapping_cone(const TwoRowDiagram& diag) {
    ValidityReport report = validate_diagram(diag);
    if (!report.valid())
        throw std::invalid_argument("mapping_cone: invalid diagram: " + report.to_string());
    return MappingCone{diag, twisted_complex(diag.S)};
}

ValidityReport validate_ses(const ShortExactSequenceOfComplexes& ses) {
    ValidityReport report;
    if (ses.inj.shift() != 0 || ses.surj.shift() != 0) {
        report.failures.push_back({ses.middle.lo(), "structure maps must have shift 0"});
        return report;
    }
    if (!ses.inj.is_chain_map())
        report.failures.push_back({ses.left.lo(), "inclusion does not commute with d"});
    if (!ses.surj.is_chain_map())
        report.failures.push_back({ses.middle.lo(), "projection does not commute with d"});
    int lo = std::min({ses.left.lo(), ses.middle.lo(), ses.right.lo()});
    int hi = std::max({ses.left.hi(), ses.middle.hi(), ses.right.hi()});
    for (int i = lo; i <= hi; ++i) {
        RationalMatrix in = ses.inj.comp(i);
        RationalMatrix out = ses.surj.comp(i);
        if (rank(in) != ses.left.dim(i))
            report.failures.push_back({i, "inclusion is not injective"});
        if (rank(out) != ses.right.dim(i))
            report.failures.push_back({i, "projection is not surjective"});
        if (!(out * in).is_zero())
            report.failures.push_back({i, "projection after inclusion is nonzero"});
        else if (rank(in) != ses.middle.dim(i) - rank(out))
            report.failures.push_back({i, "image of inclusion is smaller than the kernel"});
    }
    return report;
}

ShortExactSequenceOfComplexes cone_ses(const MappingCone& cone) {
    const CochainComplex& A = cone.diagram.A;
    const CochainComplex& B = cone.diagram.B;
    const CochainComplex& Z = cone.Z;
    CochainComplex right = negate_diffs(A);

    std::vector<RationalMatrix> inj_comps;
    for (int i = B.lo(); i <= B.hi(); ++i) {
        RationalMatrix m(Z.dim(i), B.dim(i));
        m.set_block(0, 0, RationalMatrix::identity(B.dim(i)));
        inj_comps.push_back(std::move(m));
    }
    std::vector<RationalMatrix> surj_comps;
    for (int i = Z.lo(); i <= Z.hi(); ++i) {
        RationalMatrix m(A.dim(i), Z.dim(i));
        m.set_block(0, B.dim(i), RationalMatrix::identity(A.dim(i)));
        surj_comps.push_back(std::move(m));
    }
    ShortExactSequenceOfComplexes ses{B, Z, right, ChainMap(B, Z, 0, std::move(inj_comps)),
                                      ChainMap(Z, right, 0, std::move(surj_comps)),
                                      {{"B", "Z", "A"}}};
    return ses;
}

InducedMap connecting_morphism(const ShortExactSequenceOfComplexes& ses,
                               std::optional<unsigned long long> perturb_seed) {
    CohomologyBasis h_right = cohomology(ses.right);
    CohomologyBasis h_left = cohomology(ses.left);
    std::optional<SplitMix64> rng;
    if (perturb_seed) rng.emplace(*perturb_seed);
    auto noise = [&](int rows, int cols) {
        RationalMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                m.at(r, c) = Rational(static_cast<long>(rng->uniform(-2, 2)));
        return m;
    };

    std::vector<RationalMatrix> mats;
    for (int i = h_right.lo(); i <= h_right.hi(); ++i) {
        RationalMatrix reps = h_right.at(i).reps;
        if (rng && reps.cols() > 0 && h_right.at(i).boundaries.cols() > 0)
            reps += h_right.at(i).boundaries * noise(h_right.at(i).boundaries.cols(), reps.cols());

        auto lift = solve_matrix(ses.surj.comp(i), reps);
        if (!lift) throw std::logic_error("connecting_morphism: projection is not surjective");
        RationalMatrix w = *lift;
        if (rng && w.cols() > 0 && ses.left.dim(i) > 0)
            w += ses.inj.comp(i) * noise(ses.left.dim(i), w.cols());

        RationalMatrix v = ses.middle.diff(i) * w;
        auto back = solve_matrix(ses.inj.comp(i + 1), v);
        if (!back) throw std::logic_error("connecting_morphism: zig-zag left the image of the inclusion");
        mats.push_back(h_left.class_coords(i + 1, *back));
    }

    std::vector<int> sb, tb;
    for (int i = h_right.lo(); i <= h_right.hi(); ++i) sb.push_back(h_right.betti(i));
    for (int i = h_left.lo(); i <= h_left.hi(); ++i) tb.push_back(h_left.betti(i));
    return InducedMap(h_right.lo(), 1, std::move(mats), std::move(sb), std::move(tb), h_left.lo());
}

bool LongExactSequenceReport::exact() const {
    for (const auto& n : nodes)
        if (!n.exact) return false;
    return true;
}

std::string LongExactSequenceReport::to_string() const {
    std::ostringstream os;
    for (size_t k = 0; k < nodes.size(); ++k) {
        if (k) os << " -> ";
        os << nodes[k].label << "[" << nodes[k].betti << (nodes[k].exact ? "" : " NOT EXACT")
           << "]";
    }
    return os.str();
}

LongExactSequenceReport long_exact_sequence(const ShortExactSequenceOfComplexes& ses) {
    ValidityReport valid = validate_ses(ses);
    if (!valid.valid())
        throw std::invalid_argument("long_exact_sequence: invalid short exact sequence: " +
                                    valid.to_string());
    CohomologyBasis hl = cohomology(ses.left);
    CohomologyBasis hm = cohomology(ses.middle);
    CohomologyBasis hr = cohomology(ses.right);

    LongExactSequenceReport report;
    report.from_left = induced_on_cohomology(ses.inj, hl, hm);
    report.from_middle = induced_on_cohomology(ses.surj, hm, hr);
    report.connecting = connecting_morphism(ses);

    // Exactness of im(in) = ker(out) at one node: the compositions vanish
    // and rank(in) accounts for the whole kernel. One degree of zero padding
    // on each side covers the sequence's ends.
    auto exact_at = [](const RationalMatrix& in, const RationalMatrix& out) {
        return (out * in).is_zero() && rank(in) == out.cols() - rank(out);
    };
    int lo = std::min({hl.lo(), hm.lo(), hr.lo()}) - 1;
    int hi = std::max({hl.hi(), hm.hi(), hr.hi()}) + 1;
    for (int i = lo; i <= hi; ++i) {
        auto label = [&](const std::string& name) {
            std::ostringstream os;
            os << "H^" << i << "(" << name << ")";
            return os.str();
        };
        report.nodes.push_back({i, label(ses.labels[0]), hl.betti(i),
                                exact_at(report.connecting.at(i - 1), report.from_left.at(i))});
        report.nodes.push_back({i, label(ses.labels[1]), hm.betti(i),
                                exact_at(report.from_left.at(i), report.from_middle.at(i))});
        report.nodes.push_back({i, label(ses.labels[2]), hr.betti(i),
                                exact_at(report.from_middle.at(i), report.connecting.at(i))});
    }
    return report;
}

GaugeEquivalence gauge_equivalence(const CochainComplex& A, const CochainComplex& B,
                                   const std::vector<RationalMatrix>& K_comps, int K_lo) {
    if (!validate_complex(A).valid() || !validate_complex(B).valid())
        throw std::invalid_argument("gauge_equivalence: invalid row");
    auto kat = [&](int i) -> RationalMatrix {
        int k = i - K_lo;
        if (k < 0 || k >= static_cast<int>(K_comps.size()))
            return RationalMatrix(B.dim(i), A.dim(i));
        if (K_comps[k].rows() != B.dim(i) || K_comps[k].cols() != A.dim(i))
            throw std::invalid_argument("gauge_equivalence: K component shape mismatch");
        return K_comps[k];
    };

    // The commutator anticommutes with d, so the twisted cone keeps +d_A.
    std::vector<RationalMatrix> s_comps;
    for (int i = A.lo(); i <= A.hi(); ++i)
        s_comps.push_back(B.diff(i) * kat(i) - kat(i + 1) * A.diff(i));
    ChainMap S(A, B, 1, s_comps);

    CochainComplex Z0 = assemble_cone(A, B, zero_chain_map(A, B, 1), +1);
    CochainComplex ZS = assemble_cone(A, B, S, +1);
    if (!validate_complex(ZS).valid())
        throw std::logic_error("gauge_equivalence: twisted cone fails to be a complex");

    GaugeEquivalence result;
    result.Z0 = Z0;
    result.ZS = ZS;
    result.S = S;
    for (char sign : {'-', '+'}) {
        std::vector<RationalMatrix> q_comps;
        for (int i = Z0.lo(); i <= Z0.hi(); ++i) {
            RationalMatrix corner = sign == '-' ? -kat(i) : kat(i);
            q_comps.push_back(block2x2(RationalMatrix::identity(B.dim(i)), corner,
                                       RationalMatrix(A.dim(i), B.dim(i)),
                                       RationalMatrix::identity(A.dim(i))));
        }
        ChainMap Q(Z0, ZS, 0, std::move(q_comps));
        if (Q.is_chain_map()) {
            for (int i = Z0.lo(); i <= Z0.hi(); ++i)
                if (determinant(Q.comp(i)) != Rational(1))
                    throw std::logic_error("gauge_equivalence: unitriangular determinant is not 1");
            result.Q = Q;
            result.corner_sign = sign;
            result.betti_Z0 = betti_table(Z0);
            result.betti_ZS = betti_table(ZS);
            if (result.betti_Z0 != result.betti_ZS)
                throw std::logic_error("gauge_equivalence: isomorphic cones disagree on betti");
            return result;
        }
    }
    throw std::invalid_argument(
        "gauge_equivalence: neither sign on the K block yields a chain map");
}

}  // namespace bgg
