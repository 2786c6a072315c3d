#include "bgg/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bgg {

namespace {

RationalMatrix solve_or_die(const RationalMatrix& basis, const RationalMatrix& rhs,
                            const char* what) {
    auto x = solve_matrix(basis, rhs);
    if (!x) throw std::logic_error(std::string("bgg_reduce: ") + what + " escapes its subspace");
    return *x;
}

}  // namespace

RationalMatrix BGGReduction::T_at(int i) const {
    int k = i - (lo - 1);
    if (k >= 0 && k < static_cast<int>(T.size())) return T[static_cast<size_t>(k)];
    return RationalMatrix(diag.A.dim(i), diag.B.dim(i + 1));
}

RationalMatrix BGGReduction::P_C_at(int i) const {
    int k = i - lo;
    if (k >= 0 && k < static_cast<int>(P_C.size())) return P_C[static_cast<size_t>(k)];
    return RationalMatrix::identity(diag.B.dim(i));
}

RationalMatrix BGGReduction::P_K_at(int i) const {
    int k = i - lo;
    if (k >= 0 && k < static_cast<int>(P_K.size())) return P_K[static_cast<size_t>(k)];
    return RationalMatrix::identity(diag.A.dim(i));
}

RationalMatrix BGGReduction::L_at(int i) const {
    int k = i - lo;
    if (k >= 0 && k < static_cast<int>(L.size())) return L[static_cast<size_t>(k)];
    return RationalMatrix::identity(diag.B.dim(i) + diag.A.dim(i));
}

RationalMatrix BGGReduction::L_inv_at(int i) const {
    int k = i - lo;
    if (k >= 0 && k < static_cast<int>(L_inv.size())) return L_inv[static_cast<size_t>(k)];
    return RationalMatrix::identity(diag.B.dim(i) + diag.A.dim(i));
}

RationalMatrix BGGReduction::c_basis_at(int i) const {
    int k = i - lo;
    if (k >= 0 && k < static_cast<int>(c_basis.size())) return c_basis[static_cast<size_t>(k)];
    return RationalMatrix(diag.B.dim(i), 0);
}

RationalMatrix BGGReduction::k_basis_at(int i) const {
    int k = i - lo;
    if (k >= 0 && k < static_cast<int>(k_basis.size())) return k_basis[static_cast<size_t>(k)];
    return RationalMatrix(diag.A.dim(i), 0);
}

int BGGReduction::c_dim(int i) const { return c_basis_at(i).cols(); }
int BGGReduction::k_dim(int i) const { return k_basis_at(i).cols(); }

RationalMatrix BGGReduction::seam_block(int i) const {
    return reduced.diff(i).block(c_dim(i + 1), 0, k_dim(i + 1), c_dim(i));
}

BGGReduction bgg_reduce(const TwoRowDiagram& diag, ComplementPolicy policy) {
    ValidityReport valid = validate_diagram(diag);
    if (!valid.valid())
        throw std::invalid_argument("bgg_reduce: invalid diagram: " + valid.to_string());

    BGGReduction r;
    r.diag = diag;
    r.A_alt = alternate_signs(diag.A);
    r.B_alt = alternate_signs(diag.B);
    r.lo = std::min(diag.A.lo(), diag.B.lo());
    r.hi = std::max(diag.A.hi(), diag.B.hi());
    const int lo = r.lo, hi = r.hi;

    // Pseudoinverse data for every component that can touch the window;
    // pv[k] belongs to S^(lo-1+k).
    std::vector<PseudoInverse> pv;
    for (int i = lo - 1; i <= hi; ++i) pv.push_back(pseudoinverse(diag.S.comp(i), policy));
    auto pv_at = [&](int i) -> const PseudoInverse& {
        return pv[static_cast<size_t>(i - (lo - 1))];
    };
    for (const auto& p : pv) r.T.push_back(p.T);

    for (int i = lo; i <= hi; ++i) {
        int nB = diag.B.dim(i), nA = diag.A.dim(i);
        r.P_C.push_back(RationalMatrix::identity(nB) - diag.S.comp(i - 1) * pv_at(i - 1).T);
        r.P_K.push_back(RationalMatrix::identity(nA) - pv_at(i).T * diag.S.comp(i));
        RationalMatrix corner = pv_at(i).T * r.B_alt.diff(i);  // B^i -> A^i
        r.L.push_back(block2x2(RationalMatrix::identity(nB), RationalMatrix(nB, nA), -corner,
                               RationalMatrix::identity(nA)));
        r.L_inv.push_back(block2x2(RationalMatrix::identity(nB), RationalMatrix(nB, nA), corner,
                                   RationalMatrix::identity(nA)));
    }

    std::vector<int> zdims;
    for (int i = lo; i <= hi; ++i) zdims.push_back(diag.B.dim(i) + diag.A.dim(i));
    std::vector<RationalMatrix> zdiffs;
    for (int i = lo; i < hi; ++i)
        zdiffs.push_back(block2x2(r.B_alt.diff(i), diag.S.comp(i),
                                  RationalMatrix(diag.A.dim(i + 1), diag.B.dim(i)),
                                  r.A_alt.diff(i)));
    r.cone = CochainComplex(lo, zdims, std::move(zdiffs));

    std::vector<RationalMatrix> cdiffs;
    for (int i = lo; i < hi; ++i) {
        RationalMatrix conj = r.L_inv_at(i + 1) * (r.cone.diff(i) * r.L_at(i));
        // The conjugated differential has a closed block form; computing it
        // both ways guards the sign conventions.
        RationalMatrix tdb = r.T_at(i) * r.B_alt.diff(i);
        RationalMatrix blocks = block2x2(
            r.P_C_at(i + 1) * r.B_alt.diff(i), diag.S.comp(i),
            -(r.P_K_at(i + 1) * (r.A_alt.diff(i) * tdb)), r.P_K_at(i + 1) * r.A_alt.diff(i));
        if (conj != blocks)
            throw std::logic_error("bgg_reduce: conjugated differential disagrees with its block form");
        cdiffs.push_back(std::move(conj));
    }
    r.conjugated = CochainComplex(lo, zdims, std::move(cdiffs));

    // Subspace bases: the range of P_C is the chosen complement of the
    // incoming image, the range of P_K is the kernel.
    std::vector<int> rdims;
    std::vector<RationalMatrix> incs;
    for (int i = lo; i <= hi; ++i) {
        RationalMatrix cb = pv_at(i - 1).img_complement;
        RationalMatrix kb = pv_at(i).kernel;
        rdims.push_back(cb.cols() + kb.cols());
        incs.push_back(block2x2(cb, RationalMatrix(diag.B.dim(i), kb.cols()),
                                RationalMatrix(diag.A.dim(i), cb.cols()), kb));
        r.c_basis.push_back(std::move(cb));
        r.k_basis.push_back(std::move(kb));
    }
    std::vector<RationalMatrix> rdiffs;
    for (int i = lo; i < hi; ++i)
        rdiffs.push_back(solve_or_die(incs[static_cast<size_t>(i + 1 - lo)],
                                      r.conjugated.diff(i) * incs[static_cast<size_t>(i - lo)],
                                      "restricted differential"));
    r.reduced = CochainComplex(lo, rdims, std::move(rdiffs));

    std::vector<int> mdims;
    for (int i = lo; i <= hi; ++i) {
        RationalMatrix sb = pv_at(i - 1).image;
        RationalMatrix tb = pv_at(i).T * pv_at(i).image;
        mdims.push_back(sb.cols() + tb.cols());
        r.middle.s_img_basis.push_back(std::move(sb));
        r.middle.t_img_basis.push_back(std::move(tb));
    }
    std::vector<RationalMatrix> mdiffs;
    for (int i = lo; i < hi; ++i) {
        const RationalMatrix& sb1 = r.middle.s_img_basis[static_cast<size_t>(i + 1 - lo)];
        const RationalMatrix& tb1 = r.middle.t_img_basis[static_cast<size_t>(i + 1 - lo)];
        const RationalMatrix& sb0 = r.middle.s_img_basis[static_cast<size_t>(i - lo)];
        const RationalMatrix& tb0 = r.middle.t_img_basis[static_cast<size_t>(i - lo)];
        RationalMatrix top =
            solve_or_die(sb1, diag.S.comp(i) * tb0, "middle-term differential");
        RationalMatrix d(sb1.cols() + tb1.cols(), sb0.cols() + tb0.cols());
        d.set_block(0, sb0.cols(), top);
        mdiffs.push_back(std::move(d));
    }
    r.middle.M = CochainComplex(lo, mdims, std::move(mdiffs));

    std::vector<RationalMatrix> lift_comps, quot_comps;
    for (int i = lo; i <= hi; ++i) {
        lift_comps.push_back(r.L_at(i) * incs[static_cast<size_t>(i - lo)]);
        int nB = diag.B.dim(i), nA = diag.A.dim(i);
        const RationalMatrix& sb = r.middle.s_img_basis[static_cast<size_t>(i - lo)];
        const RationalMatrix& tb = r.middle.t_img_basis[static_cast<size_t>(i - lo)];
        RationalMatrix top = solve_or_die(
            sb, RationalMatrix::identity(nB) - r.P_C_at(i), "image projection");
        RationalMatrix bot = solve_or_die(
            tb, RationalMatrix::identity(nA) - r.P_K_at(i), "coimage projection");
        RationalMatrix j = block2x2(top, RationalMatrix(sb.cols(), nA),
                                    RationalMatrix(tb.cols(), nB), bot);
        quot_comps.push_back(j * r.L_inv_at(i));
    }
    r.lift = ChainMap(r.reduced, r.cone, 0, std::move(lift_comps));
    r.quot = ChainMap(r.cone, r.middle.M, 0, std::move(quot_comps));
    if (!r.lift.is_chain_map())
        throw std::logic_error("bgg_reduce: lifting map fails its chain identity");
    if (!r.quot.is_chain_map())
        throw std::logic_error("bgg_reduce: quotient map fails its chain identity");
    return r;
}

CochainComplex reduced_complex(const BGGReduction& r) { return r.reduced; }
ChainMap lifting_map(const BGGReduction& r) { return r.lift; }
ChainMap quotient_map(const BGGReduction& r) { return r.quot; }

ShortExactSequenceOfComplexes reduction_ses(const BGGReduction& r) {
    return ShortExactSequenceOfComplexes{r.reduced,
                                         r.cone,
                                         r.middle.M,
                                         r.lift,
                                         r.quot,
                                         {{"reduced", "cone", "middle"}}};
}

std::string QuasiIsoCertificate::to_string() const {
    std::ostringstream os;
    os << "middle-term cohomology vanishes: " << (middle_exact ? "yes" : "NO")
       << "; induced lift invertible: " << (lift_invertible ? "yes" : "NO")
       << "; betti(reduced) = betti(cone): " << (betti_match ? "yes" : "NO");
    return os.str();
}

QuasiIsoCertificate verify_quasi_iso(const BGGReduction& r) {
    QuasiIsoCertificate cert;
    cert.betti_middle = betti_table(r.middle.M);
    cert.middle_exact = true;
    for (int b : cert.betti_middle)
        if (b != 0) cert.middle_exact = false;

    CohomologyBasis h_red = cohomology(r.reduced);
    CohomologyBasis h_cone = cohomology(r.cone);
    cert.induced_lift = induced_on_cohomology(r.lift, h_red, h_cone);
    cert.lift_invertible = cert.induced_lift.is_degreewise_invertible();

    cert.betti_reduced = betti_table(r.reduced);
    cert.betti_cone = betti_table(r.cone);
    cert.betti_match = cert.betti_reduced == cert.betti_cone;
    return cert;
}

}  // namespace bgg
