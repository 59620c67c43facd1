#pragma once

// Applicability of the relaxed comparison theorem for line arrangements:
// bad points, the split I^b / I^c, and conditions (a), (b), (c), (c'), (d)
// with witnesses that can be re-checked by hand.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arrcoh/residues.hpp"

namespace arrcoh {

struct BadLocus {
    std::vector<std::size_t> bad_points; // dense points with alpha_p in Z_{>0}
    std::vector<int> Ib;                 // union of the lines through bad points
    std::vector<int> Ic;                 // the remaining lines
};

/// Throws NotInScope when some line already has alpha_k in Z_{>0}.
inline BadLocus bad_locus(const LineIncidence& inc, const ResidueAssignment& ra) {
    if (ra.d() != inc.d()) throw Error(ErrorKind::SizeMismatch, "residue vector length differs from d");
    for (int k = 1; k <= inc.d(); ++k)
        if (is_positive_integer(ra[k]))
            throw Error(ErrorKind::NotInScope, "line " + std::to_string(k) + " has alpha = " + ra[k].get_str());
    BadLocus bl;
    std::set<int> ib;
    for (std::size_t p : dense_points(inc)) {
        if (is_positive_integer(ra.sum_over(inc.point(p)))) {
            bl.bad_points.push_back(p);
            ib.insert(inc.point(p).begin(), inc.point(p).end());
        }
    }
    bl.Ib.assign(ib.begin(), ib.end());
    for (int k = 1; k <= inc.d(); ++k)
        if (!ib.count(k)) bl.Ic.push_back(k);
    return bl;
}

struct Witness {
    std::string note;
    std::vector<int> lines;
    std::vector<std::vector<int>> points;
};

struct Verdict {
    bool pass = true;
    std::vector<Witness> witnesses;
};

enum class CVariant { Strict, Prime };

struct ConditionReport {
    BadLocus locus;
    std::vector<std::size_t> ic_zero_points; // X^{I^c(0)}
    Verdict a, b_affine, b_literal, c, c_prime, d;
    CVariant variant = CVariant::Prime;
    bool overall = false;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline bool contains_sorted(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

inline std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

/// Evaluate all conditions. `variant` picks which of (c) and (c') enters
/// the overall verdict; both are always reported.
inline ConditionReport check_theorem1(const LineIncidence& inc, const ResidueAssignment& ra,
                                      CVariant variant = CVariant::Prime) {
    using detail::contains_sorted;
    using detail::intersect;
    ConditionReport rep;
    rep.variant = variant;
    rep.locus = bad_locus(inc, ra);
    const int ds = ra.deleted;
    inc.check_line(ds);
    const auto& Ib = rep.locus.Ib;
    const auto& Ic = rep.locus.Ic;

    // (a)
    for (std::size_t p : rep.locus.bad_points) {
        const auto& ip = inc.point(p);
        const Rational ap = ra.sum_over(ip);
        if (!contains_sorted(ip, ds)) {
            rep.a.pass = false;
            rep.a.witnesses.push_back({"bad point off the deleted line", {}, {ip}});
        } else if (ap != 1) {
            rep.a.pass = false;
            rep.a.witnesses.push_back({"bad point with alpha_p = " + ap.get_str(), {}, {ip}});
        } else {
            rep.a.witnesses.push_back({"bad point on the deleted line, alpha_p = 1", {}, {ip}});
        }
    }
    if (ra[ds] == 1) {
        rep.a.pass = false;
        rep.a.witnesses.push_back({"alpha of the deleted line equals 1", {ds}, {}});
    }

    // X^{I^c(0)}: multiplicity and residue sum measured inside X^{I^c}.
    std::vector<char> ic_zero(inc.num_points(), 0);
    for (std::size_t p = 0; p < inc.num_points(); ++p) {
        auto common = intersect(inc.point(p), Ic);
        if (common.size() >= 3 && ra.sum_over(common) == 0) {
            ic_zero[p] = 1;
            rep.ic_zero_points.push_back(p);
        }
    }

    // (b): connectivity of the I^c lines through the surviving points.
    auto connectivity = [&](bool literal) {
        Verdict v;
        std::vector<int> verts;
        for (int k : Ic)
            if (k != ds) verts.push_back(k);
        if (verts.empty()) {
            v.pass = false;
            v.witnesses.push_back({"no lines left in I^c", {}, {}});
            return v;
        }
        std::vector<int> pos(static_cast<std::size_t>(inc.d()) + 1, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
        detail::UnionFind uf(static_cast<int>(verts.size()));
        for (std::size_t p = 0; p < inc.num_points(); ++p) {
            const auto& ip = inc.point(p);
            const bool on_deleted = contains_sorted(ip, ds);
            if (on_deleted && !literal) continue;
            if (ic_zero[p]) continue;
            if (!intersect(ip, Ib).empty()) continue;
            int first = -1;
            for (int k : ip) {
                if (pos[k] < 0) continue;
                if (first < 0) first = pos[k];
                else uf.unite(first, pos[k]);
            }
        }
        std::map<int, std::vector<int>> comps;
        for (std::size_t i = 0; i < verts.size(); ++i) comps[uf.find(static_cast<int>(i))].push_back(verts[i]);
        v.pass = comps.size() == 1;
        for (auto& [root, members] : comps) v.witnesses.push_back({"component", members, {}});
        return v;
    };
    rep.b_affine = connectivity(false);
    rep.b_literal = connectivity(true);

    // (c) and (c'): each bad line other than the deleted one needs two points
    // meeting X^{I^c} away from the other bad lines.
    auto coupling = [&](bool prime) {
        Verdict v;
        for (int k : Ib) {
            if (k == ds) continue;
            std::vector<int> excluded;
            for (int j : Ib)
                if (j != k && (!prime || j < k)) excluded.push_back(j);
            Witness w{"line " + std::to_string(k), {k}, {}};
            for (std::size_t p : inc.points_on(k)) {
                const auto& ip = inc.point(p);
                if (intersect(ip, Ic).empty()) continue;
                if (!intersect(ip, excluded).empty()) continue;
                w.points.push_back(ip);
            }
            if (w.points.size() < 2) {
                v.pass = false;
                w.note += ": only " + std::to_string(w.points.size()) + " qualifying point(s)";
                v.witnesses.push_back(std::move(w));
            }
        }
        for (int j : Ic) {
            if (ra[j] == 0) {
                v.pass = false;
                v.witnesses.push_back({"alpha vanishes on an I^c line", {j}, {}});
            }
        }
        return v;
    };
    rep.c = coupling(false);
    rep.c_prime = coupling(true);

    // (d)
    Witness dw{"ordinary double points on the deleted line", {ds}, {}};
    for (std::size_t p : inc.points_on(ds))
        if (inc.point(p).size() == 2) dw.points.push_back(inc.point(p));
    rep.d.pass = dw.points.size() >= 2;
    rep.d.witnesses.push_back(std::move(dw));

    const bool c_used = variant == CVariant::Prime ? rep.c_prime.pass : rep.c.pass;
    rep.overall = rep.a.pass && rep.b_affine.pass && c_used && rep.d.pass;
    return rep;
}

enum class SearchMode { Esv, Theorem1 };

struct SearchResult {
    std::vector<std::vector<int>> subsets; // lexicographic order
    bool truncated = false;
    long nodes = 0;
};

/// Depth-first search for subsets I with |I| = k whose residues (alpha_j =
/// 1 - k/d on I, -k/d off I) pass esv_check (Esv mode) or the overall
/// theorem check (Theorem1 mode). A branch dies once a fully decided dense
/// point is already bad (Esv) or violates condition (a) (Theorem1).
inline SearchResult search_subset(const LineIncidence& inc, int k, long budget, SearchMode mode, int deleted,
                                  CVariant variant = CVariant::Prime) {
    const int d = inc.d();
    if (k < 1 || k > d - 1) throw Error(ErrorKind::InvalidArgument, "k must lie in 1..d-1");
    inc.check_line(deleted);
    // dense points grouped by their largest line
    std::vector<std::vector<std::size_t>> closing(static_cast<std::size_t>(d) + 1);
    for (std::size_t p : dense_points(inc)) closing[inc.point(p).back()].push_back(p);
    const Rational off = make_rational(-k, d);

    SearchResult res;
    std::vector<char> chosen(static_cast<std::size_t>(d) + 1, 0);
    std::vector<int> current;

    auto point_ok = [&](std::size_t p) {
        Rational s(0);
        for (int j : inc.point(p)) s += chosen[j] ? Rational(off + 1) : off;
        if (!is_positive_integer(s)) return true;
        if (mode == SearchMode::Esv) return false;
        return s == 1 && detail::contains_sorted(inc.point(p), deleted);
    };

    std::function<void(int)> rec = [&](int j) {
        if (res.truncated) return;
        if (++res.nodes > budget) {
            res.truncated = true;
            return;
        }
        const int have = static_cast<int>(current.size());
        if (have == k) {
            // remaining indices are all excluded; settle the open points
            for (int t = j; t <= d; ++t)
                for (std::size_t p : closing[t])
                    if (!point_ok(p)) return;
            auto ra = residues_from_subset(d, k, current, deleted);
            bool ok = false;
            if (mode == SearchMode::Esv) {
                ok = esv_check(inc, ra).pass;
            } else {
                try {
                    ok = check_theorem1(inc, ra, variant).overall;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::NotInScope) throw;
                }
            }
            if (ok) res.subsets.push_back(current);
            return;
        }
        if (j > d || d - j + 1 < k - have) return;
        for (int take = 1; take >= 0; --take) {
            chosen[j] = static_cast<char>(take);
            if (take) current.push_back(j);
            bool alive = true;
            for (std::size_t p : closing[j])
                if (!point_ok(p)) {
                    alive = false;
                    break;
                }
            if (alive) rec(j + 1);
            if (take) current.pop_back();
            chosen[j] = 0;
            if (res.truncated) return;
        }
    };
    rec(1);
    return res;
}

} // namespace arrcoh
