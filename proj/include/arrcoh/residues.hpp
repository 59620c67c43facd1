#pragma once

// Residue assignments alpha = (alpha_1..alpha_d), sum alpha_k = 0, which
// fix a rank-1 local system by lambda_k = exp(-2 pi i alpha_k), and the
// ESV/STV condition on dense edges.

#include <set>
#include <string>
#include <vector>

#include "arrcoh/arrangement.hpp"

namespace arrcoh {

struct ResidueAssignment {
    std::vector<Rational> alpha; // alpha[k-1] is the residue along X_k
    int deleted = 0;             // the hyperplane sent to infinity, 1-based

    int d() const noexcept { return static_cast<int>(alpha.size()); }
    const Rational& operator[](int k) const { return alpha.at(static_cast<std::size_t>(k - 1)); }

    bool trivial() const {
        for (const auto& a : alpha)
            if (!is_integer(a)) return false;
        return true;
    }

    Rational sum_over(const std::vector<int>& idx) const {
        Rational s(0);
        for (int k : idx) s += (*this)[k];
        return s;
    }
};

/// Validate shape and sum; throws on violation.
inline ResidueAssignment make_residues(std::vector<Rational> alpha, int deleted) {
    ResidueAssignment ra{std::move(alpha), deleted};
    if (ra.alpha.empty()) throw Error(ErrorKind::InvalidArgument, "empty residue vector");
    if (deleted < 1 || deleted > ra.d())
        throw Error(ErrorKind::IndexOutOfRange, "deleted index " + std::to_string(deleted) + " outside 1.." +
                                                    std::to_string(ra.d()));
    Rational s(0);
    for (const auto& a : ra.alpha) s += a;
    if (s != 0) throw Error(ErrorKind::InvalidArgument, "residues sum to " + s.get_str() + ", expected 0");
    return ra;
}

/// alpha_j = 1 - k/d on I and -k/d off I; the local system whose
/// cohomology is the exp(-2 pi i k/d)-eigenspace of the Milnor monodromy.
inline ResidueAssignment residues_from_subset(int d, int k, const std::vector<int>& subset, int deleted) {
    std::set<int> s(subset.begin(), subset.end());
    if (static_cast<int>(s.size()) != k || static_cast<int>(subset.size()) != k)
        throw Error(ErrorKind::SizeMismatch, "subset has " + std::to_string(s.size()) + " distinct elements, k = " +
                                                 std::to_string(k));
    if (k < 1 || k > d - 1) throw Error(ErrorKind::InvalidArgument, "k must lie in 1..d-1");
    for (int j : s)
        if (j < 1 || j > d) throw Error(ErrorKind::IndexOutOfRange, "subset element " + std::to_string(j));
    const Rational base = make_rational(-k, d);
    std::vector<Rational> alpha(static_cast<std::size_t>(d), base);
    for (int j : s) alpha[static_cast<std::size_t>(j - 1)] += 1;
    return make_residues(std::move(alpha), deleted);
}

struct EdgeViolation {
    std::vector<int> edge; // one index: a line; several: the lines through a point
    Rational alpha_sum;
};

struct EsvReport {
    bool pass = true;
    std::vector<EdgeViolation> violations;
};

/// alpha_Z must avoid Z_{>0} on every dense edge: every line and every point
/// of multiplicity >= 3.
inline EsvReport esv_check(const LineIncidence& inc, const ResidueAssignment& ra) {
    if (ra.d() != inc.d()) throw Error(ErrorKind::SizeMismatch, "residue vector length differs from d");
    EsvReport rep;
    for (int k = 1; k <= inc.d(); ++k)
        if (is_positive_integer(ra[k])) rep.violations.push_back({{k}, ra[k]});
    for (std::size_t p : dense_points(inc)) {
        Rational s = ra.sum_over(inc.point(p));
        if (is_positive_integer(s)) rep.violations.push_back({inc.point(p), s});
    }
    rep.pass = rep.violations.empty();
    return rep;
}

} // namespace arrcoh
