#pragma once

// The G31 reflection arrangement: 60 planes in P^3 indexed by classes of
// vectors in (mu_4 ⊔ {0})^4 modulo the diagonal mu_4 action, and the
// combinatorial classification of how two of its planes meet.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "arrcoh/arrangement.hpp"
#include "arrcoh/theorem1.hpp"

namespace arrcoh::g31 {

/// Entry of (mu_4 ⊔ {0}): kZero or an exponent e meaning i^e, e in 0..3.
using Entry = int;
inline constexpr Entry kZero = -1;

/// Canonical class representative: first nonzero entry equals 1.
class Label {
public:
    explicit Label(std::array<Entry, 4> entries) : e_(entries) {
        int first = -1;
        for (int k = 0; k < 4; ++k)
            if (e_[k] != kZero) {
                first = e_[k];
                break;
            }
        if (first < 0) throw Error(ErrorKind::InvalidArgument, "zero vector is not a G31 label");
        for (auto& x : e_)
            if (x != kZero) x = ((x - first) % 4 + 4) % 4;
        const int supp = support_size();
        if (supp == 1) stratum_ = 1;
        else if (supp == 2) stratum_ = 2;
        else if (supp == 4 && prod_exponent() % 2 == 0) stratum_ = 3;
        else stratum_ = 0;
    }

    const std::array<Entry, 4>& entries() const noexcept { return e_; }
    /// 1, 2 or 3; 0 for classes outside the arrangement.
    int stratum() const noexcept { return stratum_; }
    bool in_arrangement() const noexcept { return stratum_ != 0; }

    int support_size() const {
        return static_cast<int>(std::count_if(e_.begin(), e_.end(), [](Entry x) { return x != kZero; }));
    }
    std::vector<int> support() const {
        std::vector<int> s;
        for (int k = 0; k < 4; ++k)
            if (e_[k] != kZero) s.push_back(k + 1);
        return s;
    }
    /// Exponent of prod(a) as a power of i; meaningful for full support.
    int prod_exponent() const {
        int s = 0;
        for (auto x : e_)
            if (x != kZero) s += x;
        return s % 4;
    }
    /// Some mu_4 multiple is a real vector.
    bool is_real() const {
        for (int t = 0; t < 4; ++t) {
            bool real = true;
            for (auto x : e_)
                if (x != kZero && (x + t) % 2 != 0) real = false;
            if (real) return true;
        }
        return false;
    }

    std::vector<CycloNum> vector(const FieldPtr& f) const {
        std::vector<CycloNum> v;
        for (auto x : e_) v.push_back(x == kZero ? CycloNum::zero(f) : CycloNum::zeta(f, x));
        return v;
    }

    std::string to_string() const {
        static const char* names[] = {"1", "i", "-1", "-i"};
        std::string s = "(";
        for (int k = 0; k < 4; ++k) {
            if (k) s += ",";
            s += e_[k] == kZero ? "0" : names[e_[k]];
        }
        return s + ")";
    }

    /// Order key: zero < 1 < i < -1 < -i entrywise.
    std::array<int, 4> key() const {
        std::array<int, 4> k{};
        for (int t = 0; t < 4; ++t) k[t] = e_[t] == kZero ? 0 : e_[t] + 1;
        return k;
    }

    friend bool operator==(const Label& a, const Label& b) { return a.e_ == b.e_; }
    friend bool operator<(const Label& a, const Label& b) {
        if (a.stratum_ != b.stratum_) return a.stratum_ < b.stratum_;
        return a.key() < b.key();
    }

private:
    std::array<Entry, 4> e_;
    int stratum_ = 0;
};

struct G31 {
    std::vector<Label> labels; // position k-1 is hyperplane k
    Arrangement arrangement;

    int index_of(const Label& l) const {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw Error(ErrorKind::InvalidArgument, "label " + l.to_string() + " not in G31");
        return static_cast<int>(it - labels.begin()) + 1;
    }
};

inline G31 generate() {
    std::vector<Label> labels;
    std::array<Entry, 4> e{};
    for (int c0 = -1; c0 < 4; ++c0)
        for (int c1 = -1; c1 < 4; ++c1)
            for (int c2 = -1; c2 < 4; ++c2)
                for (int c3 = -1; c3 < 4; ++c3) {
                    e = {c0, c1, c2, c3};
                    auto first = std::find_if(e.begin(), e.end(), [](Entry x) { return x != kZero; });
                    if (first == e.end() || *first != 0) continue; // canonical only
                    Label l(e);
                    if (l.in_arrangement()) labels.push_back(l);
                }
    std::sort(labels.begin(), labels.end());
    const auto f = CycloField::make(4);
    std::vector<Hyperplane> hs;
    for (const auto& l : labels) hs.emplace_back(l.vector(f));
    return {labels, Arrangement(f, 4, std::move(hs))};
}

struct PairClass {
    std::string case_tag;
    int mult = 0;
};

namespace detail {

// det of the 2x2 minor on Supp(a) = {j < k}.
inline CycloNum support_det(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
    std::vector<int> s;
    for (int k = 0; k < 4; ++k)
        if (!a[k].is_zero()) s.push_back(k);
    if (s.size() != 2) throw Error(ErrorKind::InvalidArgument, "det needs |Supp a| = 2");
    return a[s[0]] * b[s[1]] - a[s[1]] * b[s[0]];
}

inline bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace detail

/// Case analysis of the intersection X_a ∩ X_b, returning the case and
/// mult = number of planes through the intersection line.
inline PairClass classify_pair(Label a, Label b) {
    if (a == b) throw Error(ErrorKind::EqualClasses, a.to_string());
    if (!a.in_arrangement() || !b.in_arrangement())
        throw Error(ErrorKind::InvalidArgument, "labels must belong to G31");
    if (a.stratum() > b.stratum()) std::swap(a, b);
    const auto f = CycloField::make(4);
    const auto sa = a.support(), sb = b.support();
    switch (a.stratum() * 10 + b.stratum()) {
    case 11: return {"(1,1)", 6};
    case 12: return detail::subset_of(sa, sb) ? PairClass{"(1,2)(a)", 6} : PairClass{"(1,2)(b)", 2};
    case 13: return {"(1,3)", 3};
    case 22: {
        std::vector<int> uni;
        std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(uni));
        if (uni.size() == 2) return {"(2,2)(a)", 6};
        if (uni.size() == 3) return {"(2,2)(b)", 3};
        // disjoint supports: prod(a+b) is the product of all four entries
        const int e = (a.prod_exponent() + b.prod_exponent()) % 4;
        return e % 2 == 0 ? PairClass{"(2,2)(c)", 6} : PairClass{"(2,2)(d)", 2};
    }
    case 23: {
        const CycloNum n = abs_squared(detail::support_det(a.vector(f), b.vector(f)));
        if (n.is_zero()) return {"(2,3)(a)", 6};
        if (n == CycloNum(f, Rational(2))) return {"(2,3)(b)", 3};
        if (n == CycloNum(f, Rational(4))) return {"(2,3)(c)", 2};
        throw Error(ErrorKind::InvalidArgument, "unexpected |det|^2 = " + format_cyclo(n));
    }
    case 33: {
        const auto va = a.vector(f), vb = b.vector(f);
        int best = 5;
        std::vector<CycloNum> best_diff;
        for (int t = 0; t < 4; ++t) {
            const CycloNum xi = CycloNum::zeta(f, t);
            std::vector<CycloNum> diff;
            int n = 0;
            for (int k = 0; k < 4; ++k) {
                diff.push_back(xi * va[k] - vb[k]);
                if (!diff.back().is_zero()) ++n;
            }
            if (n < best) {
                best = n;
                best_diff = std::move(diff);
            }
        }
        if (best == 1) return {"(3,3)(a)", 3};
        if (best == 2) {
            return detail::support_det(best_diff, vb).is_zero() ? PairClass{"(3,3)(c)", 6}
                                                                : PairClass{"(3,3)(b)", 3};
        }
        if (best == 3) return {"(3,3)(d)", 2};
        throw Error(ErrorKind::EqualClasses, a.to_string() + " vs " + b.to_string());
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unreachable stratum pair");
}

inline int mult_slot(int m) { return m == 2 ? 0 : (m == 3 ? 1 : 2); }
inline constexpr std::array<int, 3> kMults{2, 3, 6};

/// lambda[j-1][j'-1][slot(m)] = #{b in stratum j' : mult(a,b) = m} for a in
/// stratum j.
using LambdaTable = std::array<std::array<std::array<int, 3>, 3>, 3>;

/// Brute force over all ordered pairs; every representative a of a stratum
/// must give the same row, otherwise RepresentativeDependent.
inline LambdaTable lambda_table(const G31& g) {
    LambdaTable t{};
    std::array<bool, 3> seen{};
    for (const auto& a : g.labels) {
        LambdaTable::value_type row{};
        for (const auto& b : g.labels) {
            if (a == b) continue;
            const auto pc = classify_pair(a, b);
            ++row[b.stratum() - 1][mult_slot(pc.mult)];
        }
        const int j = a.stratum() - 1;
        if (!seen[j]) {
            t[j] = row;
            seen[j] = true;
        } else if (t[j] != row) {
            throw Error(ErrorKind::RepresentativeDependent, "row of " + a.to_string() + " differs");
        }
    }
    return t;
}

/// Connected components of stratum 3 under the relation mult = 2. Each
/// component is a sorted list of 1-based hyperplane indices.
inline std::vector<std::vector<int>> two_connectivity(const G31& g) {
    std::vector<int> members;
    for (std::size_t k = 0; k < g.labels.size(); ++k)
        if (g.labels[k].stratum() == 3) members.push_back(static_cast<int>(k));
    arrcoh::detail::UnionFind uf(static_cast<int>(members.size()));
    for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y)
            if (classify_pair(g.labels[members[x]], g.labels[members[y]]).mult == 2)
                uf.unite(static_cast<int>(x), static_cast<int>(y));
    std::map<int, std::vector<int>> comps;
    for (std::size_t x = 0; x < members.size(); ++x) comps[uf.find(static_cast<int>(x))].push_back(members[x] + 1);
    std::vector<std::vector<int>> out;
    for (auto& [r, c] : comps) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

struct SubsetData {
    std::vector<int> subset; // 1-based hyperplane indices, sorted
    int deleted = 0;
    int k = 0;
};

inline Label parse_label(const std::string& text) {
    // "(a,b,c,d)" with entries among 0, 1, -1, i, -i
    std::array<Entry, 4> e{};
    std::size_t pos = 0;
    int slot = 0;
    std::string tok;
    auto flush = [&]() {
        if (slot >= 4) throw Error(ErrorKind::ParseError, "label " + text + " has too many entries");
        if (tok == "0") e[slot] = kZero;
        else if (tok == "1") e[slot] = 0;
        else if (tok == "i") e[slot] = 1;
        else if (tok == "-1") e[slot] = 2;
        else if (tok == "-i") e[slot] = 3;
        else throw Error(ErrorKind::ParseError, "label entry '" + tok + "'");
        ++slot;
        tok.clear();
    };
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch == '(' || ch == ' ') continue;
        if (ch == ',' || ch == ')') flush();
        else tok.push_back(ch);
    }
    if (slot != 4) throw Error(ErrorKind::ParseError, "label " + text + " needs four entries");
    return Label(e);
}

inline int deleted_index(const G31& g) { return g.index_of(parse_label("(0,0,0,1)")); }

/// The ten listed planes for lambda = exp(-2 pi i/6), with (0,0,0,1) sent
/// to infinity.
inline SubsetData sixth_root_data(const G31& g) {
    static const char* listed[] = {"(0,0,0,1)", "(-i,0,0,1)", "(0,-i,0,1)", "(0,0,-i,1)", "(1,-1,0,0)",
                                   "(1,0,-1,0)", "(0,1,-1,0)", "(i,i,1,1)",  "(i,1,i,1)",  "(1,i,i,1)"};
    SubsetData out;
    for (const char* s : listed) out.subset.push_back(g.index_of(parse_label(s)));
    std::sort(out.subset.begin(), out.subset.end());
    out.deleted = deleted_index(g);
    out.k = 10;
    return out;
}

/// Half of every stratum, for lambda = -1: Supp in {{3},{4}} on stratum 1;
/// on stratum 2, real classes containing 4 in the support together with
/// non-real classes avoiding it; prod = 1 on stratum 3.
inline SubsetData minus_one_data(const G31& g) {
    SubsetData out;
    for (std::size_t k = 0; k < g.labels.size(); ++k) {
        const auto& l = g.labels[k];
        const auto s = l.support();
        bool in = false;
        if (l.stratum() == 1) in = s == std::vector<int>{3} || s == std::vector<int>{4};
        else if (l.stratum() == 2) {
            const bool has4 = std::find(s.begin(), s.end(), 4) != s.end();
            in = l.is_real() == has4;
        } else {
            in = l.prod_exponent() == 0;
        }
        if (in) out.subset.push_back(static_cast<int>(k) + 1);
    }
    out.deleted = deleted_index(g);
    out.k = 30;
    return out;
}

} // namespace arrcoh::g31
