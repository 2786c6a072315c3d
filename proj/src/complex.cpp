#include "bgg/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bgg/rng.hpp"

namespace bgg {

namespace {

bool odd(int i) { return i % 2 != 0; }

}  // namespace

CochainComplex::CochainComplex(int lo, std::vector<int> dims, std::vector<RationalMatrix> diffs)
    : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    for (int d : dims_)
        if (d < 0) throw std::invalid_argument("complex: negative dimension");
    size_t want = dims_.empty() ? 0 : dims_.size() - 1;
    if (diffs_.size() != want)
        throw std::invalid_argument("complex: need one differential per adjacent degree pair");
    for (size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows() != dims_[k + 1] || diffs_[k].cols() != dims_[k]) {
            std::ostringstream os;
            os << "complex: differential at degree " << lo_ + static_cast<int>(k)
               << " has shape " << diffs_[k].rows() << "x" << diffs_[k].cols() << ", expected "
               << dims_[k + 1] << "x" << dims_[k];
            throw std::invalid_argument(os.str());
        }
    }
}

bool CochainComplex::is_zero() const {
    for (int d : dims_)
        if (d != 0) return false;
    return true;
}

int CochainComplex::dim(int i) const {
    int k = i - lo_;
    if (k < 0 || k >= static_cast<int>(dims_.size())) return 0;
    return dims_[k];
}

RationalMatrix CochainComplex::diff(int i) const {
    int k = i - lo_;
    if (k < 0 || k >= static_cast<int>(diffs_.size())) return RationalMatrix(dim(i + 1), dim(i));
    return diffs_[k];
}

int CochainComplex::total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
}

long CochainComplex::euler_characteristic() const {
    long chi = 0;
    for (int i = lo(); i <= hi(); ++i) chi += odd(i) ? -dim(i) : dim(i);
    return chi;
}

bool CochainComplex::operator==(const CochainComplex& o) const {
    int a = std::min(lo(), o.lo());
    int b = std::max(hi(), o.hi());
    for (int i = a; i <= b; ++i) {
        if (dim(i) != o.dim(i)) return false;
        if (diff(i) != o.diff(i)) return false;
    }
    return true;
}

std::string ValidityReport::to_string() const {
    if (valid()) return "valid";
    std::ostringstream os;
    for (size_t k = 0; k < failures.size(); ++k) {
        if (k) os << "; ";
        os << "degree " << failures[k].degree << ": " << failures[k].what;
    }
    return os.str();
}

ValidityReport validate_complex(const CochainComplex& c) {
    ValidityReport report;
    for (int i = c.lo(); i + 1 <= c.hi() - 1; ++i) {
        if (!(c.diff(i + 1) * c.diff(i)).is_zero())
            report.failures.push_back({i, "composition of consecutive differentials is nonzero"});
    }
    return report;
}

ChainMap::ChainMap(CochainComplex source, CochainComplex target, int shift,
                   std::vector<RationalMatrix> comps)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift),
      comps_(std::move(comps)) {
    if (shift_ != 0 && shift_ != 1)
        throw std::invalid_argument("chain map: shift must be 0 or 1");
    int span = source_.hi() - source_.lo() + 1;
    if (static_cast<int>(comps_.size()) != std::max(span, 0))
        throw std::invalid_argument("chain map: need one component per source degree");
    for (size_t k = 0; k < comps_.size(); ++k) {
        int i = source_.lo() + static_cast<int>(k);
        if (comps_[k].rows() != target_.dim(i + shift_) || comps_[k].cols() != source_.dim(i)) {
            std::ostringstream os;
            os << "chain map: component at degree " << i << " has shape " << comps_[k].rows()
               << "x" << comps_[k].cols() << ", expected " << target_.dim(i + shift_) << "x"
               << source_.dim(i);
            throw std::invalid_argument(os.str());
        }
    }
}

RationalMatrix ChainMap::comp(int i) const {
    int k = i - source_.lo();
    if (k < 0 || k >= static_cast<int>(comps_.size()))
        return RationalMatrix(target_.dim(i + shift_), source_.dim(i));
    return comps_[k];
}

RationalMatrix ChainMap::residual(int i) const {
    return target_.diff(i + shift_) * comp(i) - comp(i + 1) * source_.diff(i);
}

bool ChainMap::is_chain_map() const {
    // One degree past each end so the fabricated zero components are covered.
    for (int i = source_.lo() - 1; i <= source_.hi(); ++i)
        if (!residual(i).is_zero()) return false;
    return true;
}

ChainMap identity_chain_map(const CochainComplex& c) {
    std::vector<RationalMatrix> comps;
    for (int i = c.lo(); i <= c.hi(); ++i) comps.push_back(RationalMatrix::identity(c.dim(i)));
    return ChainMap(c, c, 0, std::move(comps));
}

ChainMap zero_chain_map(const CochainComplex& source, const CochainComplex& target, int shift) {
    std::vector<RationalMatrix> comps;
    for (int i = source.lo(); i <= source.hi(); ++i)
        comps.emplace_back(target.dim(i + shift), source.dim(i));
    return ChainMap(source, target, shift, std::move(comps));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (g.source() != f.target())
        throw std::invalid_argument("compose: inner complexes do not match");
    int shift = f.shift() + g.shift();
    if (shift > 1) throw std::invalid_argument("compose: combined shift exceeds 1");
    std::vector<RationalMatrix> comps;
    for (int i = f.source().lo(); i <= f.source().hi(); ++i)
        comps.push_back(g.comp(i + f.shift()) * f.comp(i));
    return ChainMap(f.source(), g.target(), shift, std::move(comps));
}

CohomologyBasis::CohomologyBasis(int lo, std::vector<DegreeCohomology> degrees,
                                 std::vector<int> ambient_dims)
    : lo_(lo), degrees_(std::move(degrees)), ambient_dims_(std::move(ambient_dims)) {
    if (degrees_.size() != ambient_dims_.size())
        throw std::invalid_argument("cohomology basis: window size mismatch");
}

const DegreeCohomology& CohomologyBasis::at(int i) const {
    static const DegreeCohomology empty{};
    int k = i - lo_;
    if (k < 0 || k >= static_cast<int>(degrees_.size())) return empty;
    return degrees_[k];
}

int CohomologyBasis::betti(int i) const { return at(i).betti; }

std::vector<int> CohomologyBasis::betti_table() const {
    std::vector<int> t;
    for (const auto& d : degrees_) t.push_back(d.betti);
    return t;
}

long CohomologyBasis::euler_characteristic() const {
    long chi = 0;
    for (int i = lo(); i <= hi(); ++i) chi += odd(i) ? -betti(i) : betti(i);
    return chi;
}

RationalMatrix CohomologyBasis::class_coords(int degree, const RationalMatrix& cycle_cols) const {
    const DegreeCohomology& h = at(degree);
    RationalMatrix span = hcat(h.boundaries, h.reps);
    if (cycle_cols.rows() != span.rows()) {
        // Outside the window the only cycle space is zero.
        if (cycle_cols.rows() == 0 || cycle_cols.is_zero())
            return RationalMatrix(h.betti, cycle_cols.cols());
        throw std::logic_error("class_coords: column height does not match the degree");
    }
    auto x = solve_matrix(span, cycle_cols);
    if (!x) {
        std::ostringstream os;
        os << "class_coords: a column at degree " << degree << " is not a cycle";
        throw std::logic_error(os.str());
    }
    return x->block(h.boundaries.cols(), 0, h.betti, cycle_cols.cols());
}

CohomologyBasis cohomology(const CochainComplex& c) {
    ValidityReport report = validate_complex(c);
    if (!report.valid())
        throw std::invalid_argument("cohomology: invalid complex: " + report.to_string());

    std::vector<DegreeCohomology> degrees;
    std::vector<int> ambient;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        DegreeCohomology h;
        h.cycles = kernel_basis(c.diff(i));
        h.boundaries = image_basis(c.diff(i - 1));
        // Boundaries are cycles, so they have coordinates in the cycle basis;
        // extending those coordinates to a basis picks the representatives.
        auto bc = solve_matrix(h.cycles, h.boundaries);
        if (!bc) throw std::logic_error("cohomology: boundary outside the cycle space");
        RationalMatrix comp = complement_basis(*bc, h.cycles.cols());
        h.reps = h.cycles * comp;
        h.betti = h.cycles.cols() - h.boundaries.cols();
        degrees.push_back(std::move(h));
        ambient.push_back(c.dim(i));
    }
    return CohomologyBasis(c.lo(), std::move(degrees), std::move(ambient));
}

std::vector<int> betti_table(const CochainComplex& c) { return cohomology(c).betti_table(); }

InducedMap::InducedMap(int lo, int shift, std::vector<RationalMatrix> mats,
                       std::vector<int> source_betti, std::vector<int> target_betti, int target_lo)
    : lo_(lo), shift_(shift), mats_(std::move(mats)), source_betti_(std::move(source_betti)),
      target_betti_(std::move(target_betti)), target_lo_(target_lo) {}

int InducedMap::source_betti(int i) const {
    int k = i - lo_;
    if (k < 0 || k >= static_cast<int>(source_betti_.size())) return 0;
    return source_betti_[k];
}

int InducedMap::target_betti(int i) const {
    int k = i - target_lo_;
    if (k < 0 || k >= static_cast<int>(target_betti_.size())) return 0;
    return target_betti_[k];
}

RationalMatrix InducedMap::at(int i) const {
    int k = i - lo_;
    if (k < 0 || k >= static_cast<int>(mats_.size()))
        return RationalMatrix(target_betti(i + shift_), source_betti(i));
    return mats_[k];
}

bool InducedMap::is_zero() const {
    for (const auto& m : mats_)
        if (!m.is_zero()) return false;
    return true;
}

bool InducedMap::is_identity() const {
    for (size_t k = 0; k < mats_.size(); ++k)
        if (mats_[k] != RationalMatrix::identity(mats_[k].cols()) ||
            mats_[k].rows() != mats_[k].cols())
            return false;
    return true;
}

bool InducedMap::is_degreewise_invertible() const {
    for (const auto& m : mats_) {
        if (m.rows() != m.cols()) return false;
        if (rank(m) != m.cols()) return false;
    }
    return true;
}

bool InducedMap::operator==(const InducedMap& o) const {
    if (shift_ != o.shift_) return false;
    int a = std::min(lo(), o.lo());
    int b = std::max(hi(), o.hi());
    for (int i = a; i <= b; ++i)
        if (at(i) != o.at(i)) return false;
    return true;
}

InducedMap induced_on_cohomology(const ChainMap& f, const CohomologyBasis& hs,
                                 const CohomologyBasis& ht,
                                 std::optional<unsigned long long> perturb_seed) {
    if (!f.is_chain_map())
        throw std::invalid_argument("induced_on_cohomology: not a chain map");
    std::optional<SplitMix64> rng;
    if (perturb_seed) rng.emplace(*perturb_seed);

    std::vector<RationalMatrix> mats;
    for (int i = hs.lo(); i <= hs.hi(); ++i) {
        RationalMatrix reps = hs.at(i).reps;
        if (rng && reps.cols() > 0 && hs.at(i).boundaries.cols() > 0) {
            // Shift each representative inside its class; the induced matrix
            // must come out the same near or far from the chosen reps.
            RationalMatrix r(hs.at(i).boundaries.cols(), reps.cols());
            for (int a = 0; a < r.rows(); ++a)
                for (int b = 0; b < r.cols(); ++b)
                    r.at(a, b) = Rational(static_cast<long>(rng->uniform(-2, 2)));
            reps += hs.at(i).boundaries * r;
        }
        mats.push_back(ht.class_coords(i + f.shift(), f.comp(i) * reps));
    }

    std::vector<int> sb, tb;
    for (int i = hs.lo(); i <= hs.hi(); ++i) sb.push_back(hs.betti(i));
    for (int i = ht.lo(); i <= ht.hi(); ++i) tb.push_back(ht.betti(i));
    return InducedMap(hs.lo(), f.shift(), std::move(mats), std::move(sb), std::move(tb), ht.lo());
}

CochainComplex alternate_signs(const CochainComplex& c) {
    std::vector<int> dims;
    std::vector<RationalMatrix> diffs;
    for (int i = c.lo(); i <= c.hi(); ++i) dims.push_back(c.dim(i));
    for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(odd(i) ? -c.diff(i) : c.diff(i));
    return CochainComplex(c.lo(), std::move(dims), std::move(diffs));
}

ChainMap alternate_signs_map(const ChainMap& f) {
    // Degree-0 components pick up (-1)^i; degree-shifting ones stay fixed.
    // This is the unique choice under which anticommuting maps become
    // commuting in both shapes: for shift 1 the two alternated differentials
    // flanking S^i sit at degrees i and i+1 and contribute opposite signs
    // already, while for shift 0 they sit at the same degree and cancel.
    std::vector<RationalMatrix> comps;
    for (int i = f.source().lo(); i <= f.source().hi(); ++i) {
        bool negate = odd(i) && f.shift() == 0;
        comps.push_back(negate ? -f.comp(i) : f.comp(i));
    }
    return ChainMap(alternate_signs(f.source()), alternate_signs(f.target()), f.shift(),
                    std::move(comps));
}

ChainMap nullhomotopy_to_S(const CochainComplex& A, const CochainComplex& B,
                           const std::vector<RationalMatrix>& K_comps, int K_lo) {
    auto K = [&](int i) -> RationalMatrix {
        int k = i - K_lo;
        if (k < 0 || k >= static_cast<int>(K_comps.size())) return RationalMatrix(B.dim(i), A.dim(i));
        if (K_comps[k].rows() != B.dim(i) || K_comps[k].cols() != A.dim(i))
            throw std::invalid_argument("nullhomotopy_to_S: component shape mismatch");
        return K_comps[k];
    };
    std::vector<RationalMatrix> comps;
    for (int i = A.lo(); i <= A.hi(); ++i)
        comps.push_back(B.diff(i) * K(i) + K(i + 1) * A.diff(i));
    return ChainMap(A, B, 1, std::move(comps));
}

CochainComplex shift(const CochainComplex& c, int k) {
    std::vector<int> dims;
    std::vector<RationalMatrix> diffs;
    for (int i = c.lo(); i <= c.hi(); ++i) dims.push_back(c.dim(i));
    for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(c.diff(i));
    return CochainComplex(c.lo() - k, std::move(dims), std::move(diffs));
}

CochainComplex direct_sum(const CochainComplex& c1, const CochainComplex& c2) {
    if (c1.is_zero() && c1.hi() < c1.lo()) return c2;
    if (c2.is_zero() && c2.hi() < c2.lo()) return c1;
    int lo = std::min(c1.lo(), c2.lo());
    int hi = std::max(c1.hi(), c2.hi());
    std::vector<int> dims;
    std::vector<RationalMatrix> diffs;
    for (int i = lo; i <= hi; ++i) dims.push_back(c1.dim(i) + c2.dim(i));
    for (int i = lo; i < hi; ++i) diffs.push_back(block_diag(c1.diff(i), c2.diff(i)));
    return CochainComplex(lo, std::move(dims), std::move(diffs));
}

CochainComplex tensor_constant(const CochainComplex& c, int m) {
    if (m < 0) throw std::invalid_argument("tensor_constant: negative multiplicity");
    std::vector<int> dims;
    std::vector<RationalMatrix> diffs;
    for (int i = c.lo(); i <= c.hi(); ++i) dims.push_back(c.dim(i) * m);
    for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(c.diff(i).kron_identity(m));
    return CochainComplex(c.lo(), std::move(dims), std::move(diffs));
}

}  // namespace bgg
