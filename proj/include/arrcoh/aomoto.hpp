#pragma once

// Orlik-Solomon algebra of a line arrangement in degrees 0..2 (with the
// deleted line sent to infinity) and the Aomoto complex (A, omega^alpha ∧).

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrcoh/linalg.hpp"
#include "arrcoh/theorem1.hpp"

namespace arrcoh {

/// Sparse vector over the A^2 basis with small integer coefficients.
using OsVector = std::vector<std::pair<std::size_t, int>>;

/// Degree-2 part of the decone Orlik-Solomon algebra. Basis: e_{p,k} for
/// every affine point p and k in I_p minus its smallest index.
class OSDegree2 {
public:
    OSDegree2(const LineIncidence& inc, int deleted) : inc_(&inc), deleted_(deleted) {
        inc.check_line(deleted);
        offset_.assign(inc.num_points(), -1);
        for (std::size_t p = 0; p < inc.num_points(); ++p) {
            if (inc.contains(p, deleted)) continue;
            offset_[p] = static_cast<long>(basis_.size());
            const auto& ip = inc.point(p);
            for (std::size_t t = 1; t < ip.size(); ++t) basis_.emplace_back(p, ip[t]);
        }
    }

    std::size_t dim() const noexcept { return basis_.size(); }
    int deleted() const noexcept { return deleted_; }
    const LineIncidence& incidence() const noexcept { return *inc_; }
    /// (point index, line) of each basis element.
    const std::vector<std::pair<std::size_t, int>>& basis() const noexcept { return basis_; }

    /// Basis range [first, last) belonging to point p; empty when p lies on
    /// the deleted line.
    std::pair<std::size_t, std::size_t> block(std::size_t p) const {
        if (offset_[p] < 0) return {0, 0};
        const auto first = static_cast<std::size_t>(offset_[p]);
        return {first, first + inc_->point(p).size() - 1};
    }

    /// omega_j ∧ omega_k in the basis.
    OsVector expand(int j, int k) const {
        if (j == k) return {};
        if (j > k) {
            OsVector v = expand(k, j);
            for (auto& [i, c] : v) c = -c;
            return v;
        }
        const std::size_t p = inc_->point_of(j, k);
        if (offset_[p] < 0) return {};
        const auto& ip = inc_->point(p);
        auto element = [&](int m) {
            const auto it = std::lower_bound(ip.begin(), ip.end(), m);
            return static_cast<std::size_t>(offset_[p]) + static_cast<std::size_t>(it - ip.begin()) - 1;
        };
        if (j == ip.front()) return {{element(k), 1}};
        return {{element(k), 1}, {element(j), -1}};
    }

private:
    const LineIncidence* inc_;
    int deleted_;
    std::vector<long> offset_;
    std::vector<std::pair<std::size_t, int>> basis_;
};

inline OSDegree2 os2_build(const LineIncidence& inc, int deleted) { return OSDegree2(inc, deleted); }

/// Lines other than the deleted one, in increasing order: the A^1 basis.
inline std::vector<int> affine_lines(int d, int deleted) {
    std::vector<int> out;
    for (int k = 1; k <= d; ++k)
        if (k != deleted) out.push_back(k);
    return out;
}

/// The map omega^alpha ∧ : A^1 -> A^2 as a (dim A^2) x (d-1) matrix over Q.
inline ExactMatrix aomoto_matrix(const OSDegree2& os, const ResidueAssignment& ra) {
    const auto q = CycloField::make(1);
    const auto cols = affine_lines(ra.d(), os.deleted());
    ExactMatrix m(os.dim(), cols.size(), CycloNum::zero(q));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const int k = cols[c];
        for (int j : cols) {
            if (j == k || ra[j] == 0) continue;
            for (auto [row, sign] : os.expand(j, k)) m(row, c) += CycloNum(q, Rational(ra[j] * sign));
        }
    }
    return m;
}

enum class Certified { ESV, THEOREM1, NONE };

inline const char* to_string(Certified c) {
    switch (c) {
    case Certified::ESV: return "ESV";
    case Certified::THEOREM1: return "THEOREM1";
    case Certified::NONE: return "NONE";
    }
    return "NONE";
}

struct AomotoResult {
    int h0 = 0, h1 = 0, h2 = 0;
    std::size_t rank_M = 0;
    std::size_t dim_A2 = 0;
    int euler = 0;
    Certified certified = Certified::NONE;
    EsvReport esv;
    std::optional<ConditionReport> theorem1; // absent when out of scope
};

/// Cohomology of the Aomoto complex. h^0 = 0 for a nontrivial system, h^1 =
/// nullity(M) - 1 (the image of A^0 is spanned by omega^alpha itself), h^2
/// = dim A^2 - rank(M).
inline AomotoResult aomoto_cohomology(const LineIncidence& inc, const ResidueAssignment& ra,
                                      CVariant variant = CVariant::Prime) {
    if (ra.d() != inc.d()) throw Error(ErrorKind::SizeMismatch, "residue vector length differs from d");
    if (ra.trivial()) throw Error(ErrorKind::TrivialAssignment, "all residues are integers");
    const OSDegree2 os(inc, ra.deleted);
    const ExactMatrix m = aomoto_matrix(os, ra);
    AomotoResult r;
    r.rank_M = rank(m);
    r.dim_A2 = os.dim();
    const int a1 = inc.d() - 1;
    r.h0 = 0;
    r.h1 = a1 - static_cast<int>(r.rank_M) - 1;
    r.h2 = static_cast<int>(os.dim()) - static_cast<int>(r.rank_M);
    r.euler = 1 - a1 + static_cast<int>(os.dim());
    r.esv = esv_check(inc, ra);
    try {
        r.theorem1 = check_theorem1(inc, ra, variant);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInScope) throw;
    }
    if (r.esv.pass) r.certified = Certified::ESV;
    else if (r.theorem1 && r.theorem1->overall) r.certified = Certified::THEOREM1;
    return r;
}

struct MilnorReport {
    int k = 0, d = 0;
    Rational exponent;           // lambda = exp(-2 pi i * exponent)
    std::vector<int> subset;
    AomotoResult aomoto;
    std::optional<int> h1_milnor; // dim H^1(F_f)_lambda, only when certified
    bool euler_identity = false;  // h0 - h1 + h2 = chi(U)
};

inline MilnorReport milnor_report(const LineIncidence& inc, int k, const std::vector<int>& subset, int deleted,
                                  CVariant variant = CVariant::Prime) {
    MilnorReport rep;
    rep.k = k;
    rep.d = inc.d();
    rep.exponent = make_rational(k, inc.d());
    rep.subset = subset;
    std::sort(rep.subset.begin(), rep.subset.end());
    const auto ra = residues_from_subset(inc.d(), k, subset, deleted);
    rep.aomoto = aomoto_cohomology(inc, ra, variant);
    if (rep.aomoto.certified != Certified::NONE) rep.h1_milnor = rep.aomoto.h1;
    const auto ps = poset_summary(inc, deleted);
    rep.euler_identity = rep.aomoto.h0 - rep.aomoto.h1 + rep.aomoto.h2 == ps.euler;
    return rep;
}

} // namespace arrcoh
