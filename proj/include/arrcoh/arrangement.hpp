#pragma once

// Projective arrangements over Q(zeta_N) in P^2 and P^3 and their
// incidence combinatorics.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arrcoh/cyclo.hpp"
#include "arrcoh/linalg.hpp"
#include "arrcoh/literal.hpp"

namespace arrcoh {

/// Linear form up to a nonzero scalar, stored with first nonzero entry 1.
class Hyperplane {
public:
    explicit Hyperplane(std::vector<CycloNum> coeffs) : c_(std::move(coeffs)) {
        auto it = std::find_if(c_.begin(), c_.end(), [](const CycloNum& x) { return !x.is_zero(); });
        if (it == c_.end()) throw Error(ErrorKind::InvalidArgument, "hyperplane with all coefficients zero");
        const CycloNum inv = it->inverse();
        for (auto& x : c_) x *= inv;
    }

    const std::vector<CycloNum>& coeffs() const noexcept { return c_; }
    std::size_t ambient() const noexcept { return c_.size(); }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.c_ == b.c_; }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

private:
    std::vector<CycloNum> c_;
};

/// Reduced arrangement of d >= 1 hyperplanes in P^{n-1}, n in {3, 4}.
/// Hyperplanes are addressed 1..d.
class Arrangement {
public:
    Arrangement(FieldPtr field, int ambient, std::vector<Hyperplane> hyperplanes)
        : field_(std::move(field)), ambient_(ambient), h_(std::move(hyperplanes)) {
        if (ambient_ != 3 && ambient_ != 4)
            throw Error(ErrorKind::InvalidArgument, "ambient dimension n must be 3 or 4, got " + std::to_string(ambient_));
        if (h_.empty()) throw Error(ErrorKind::InvalidArgument, "arrangement needs at least one hyperplane");
        std::map<Hyperplane, int> seen;
        for (std::size_t k = 0; k < h_.size(); ++k) {
            if (static_cast<int>(h_[k].ambient()) != ambient_)
                throw Error(ErrorKind::InvalidArgument, "hyperplane " + std::to_string(k + 1) + " has wrong length");
            auto [it, fresh] = seen.emplace(h_[k], static_cast<int>(k + 1));
            if (!fresh)
                throw Error(ErrorKind::NotReduced, "hyperplanes " + std::to_string(it->second) + " and " +
                                                       std::to_string(k + 1) + " are proportional");
        }
    }

    const FieldPtr& field() const noexcept { return field_; }
    int ambient() const noexcept { return ambient_; }
    int size() const noexcept { return static_cast<int>(h_.size()); }
    const std::vector<Hyperplane>& hyperplanes() const noexcept { return h_; }
    /// 1-based access.
    const Hyperplane& operator[](int k) const { return h_.at(static_cast<std::size_t>(k - 1)); }

private:
    FieldPtr field_;
    int ambient_;
    std::vector<Hyperplane> h_;
};

/// Combinatorial line arrangement: d lines and the singular points, each
/// recorded by the sorted set of lines through it. Every pair of lines
/// lies in exactly one point. Points are kept in lexicographic order.
class LineIncidence {
public:
    LineIncidence() = default;

    LineIncidence(int d, std::vector<std::vector<int>> points) : d_(d), points_(std::move(points)) {
        if (d_ < 1) throw Error(ErrorKind::InvalidArgument, "incidence needs d >= 1");
        for (auto& p : points_) {
            std::sort(p.begin(), p.end());
            if (p.size() < 2) throw Error(ErrorKind::InvalidArgument, "point with fewer than two lines");
            if (std::adjacent_find(p.begin(), p.end()) != p.end())
                throw Error(ErrorKind::InvalidArgument, "point lists a line twice");
            if (p.front() < 1 || p.back() > d_)
                throw Error(ErrorKind::IndexOutOfRange, "line index outside 1.." + std::to_string(d_));
        }
        std::sort(points_.begin(), points_.end());
        if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
            throw Error(ErrorKind::InvalidArgument, "duplicate point");
        pair_point_.assign(static_cast<std::size_t>(d_) * d_, -1);
        for (std::size_t p = 0; p < points_.size(); ++p) {
            const auto& s = points_[p];
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b) {
                    auto& slot = pair_point_[idx(s[a], s[b])];
                    if (slot != -1)
                        throw Error(ErrorKind::InvalidArgument, "lines " + std::to_string(s[a]) + " and " +
                                                                    std::to_string(s[b]) + " meet at two points");
                    slot = static_cast<int>(p);
                    pair_point_[idx(s[b], s[a])] = static_cast<int>(p);
                }
        }
        for (int j = 1; j <= d_; ++j)
            for (int k = j + 1; k <= d_; ++k)
                if (pair_point_[idx(j, k)] == -1)
                    throw Error(ErrorKind::InvalidArgument,
                                "lines " + std::to_string(j) + " and " + std::to_string(k) + " share no point");
    }

    int d() const noexcept { return d_; }
    const std::vector<std::vector<int>>& points() const noexcept { return points_; }
    std::size_t num_points() const noexcept { return points_.size(); }
    const std::vector<int>& point(std::size_t p) const { return points_.at(p); }

    /// Index of the point X_j ∩ X_k (j != k, 1-based lines).
    std::size_t point_of(int j, int k) const {
        check_line(j);
        check_line(k);
        if (j == k) throw Error(ErrorKind::InvalidArgument, "point_of needs two distinct lines");
        return static_cast<std::size_t>(pair_point_[idx(j, k)]);
    }

    bool contains(std::size_t p, int k) const {
        return std::binary_search(points_[p].begin(), points_[p].end(), k);
    }

    /// Points through line k.
    std::vector<std::size_t> points_on(int k) const {
        check_line(k);
        std::vector<std::size_t> out;
        for (std::size_t p = 0; p < points_.size(); ++p)
            if (contains(p, k)) out.push_back(p);
        return out;
    }

    void check_line(int k) const {
        if (k < 1 || k > d_)
            throw Error(ErrorKind::IndexOutOfRange, "line " + std::to_string(k) + " outside 1.." + std::to_string(d_));
    }

    friend bool operator==(const LineIncidence& a, const LineIncidence& b) {
        return a.d_ == b.d_ && a.points_ == b.points_;
    }

private:
    std::size_t idx(int j, int k) const { return static_cast<std::size_t>(j - 1) * d_ + (k - 1); }

    int d_ = 0;
    std::vector<std::vector<int>> points_;
    std::vector<int> pair_point_;
};

/// Number of unordered pairs covered by the points; equals C(d,2).
inline long pair_count(const LineIncidence& inc) {
    long s = 0;
    for (const auto& p : inc.points()) s += static_cast<long>(p.size()) * (p.size() - 1) / 2;
    return s;
}

/// Multiplicity census m -> number of points.
inline std::map<int, int> multiplicity_census(const LineIncidence& inc) {
    std::map<int, int> out;
    for (const auto& p : inc.points()) ++out[static_cast<int>(p.size())];
    return out;
}

namespace detail {

inline std::vector<CycloNum> projective_normalize(std::vector<CycloNum> v) {
    auto it = std::find_if(v.begin(), v.end(), [](const CycloNum& x) { return !x.is_zero(); });
    if (it == v.end()) return v;
    const CycloNum inv = it->inverse();
    for (auto& x : v) x *= inv;
    return v;
}

inline std::vector<CycloNum> cross(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace detail

/// Singular points of a line arrangement in P^2, found by intersecting every
/// pair exactly and grouping coincident points.
inline LineIncidence incidence_p2(const Arrangement& arr) {
    if (arr.ambient() != 3) throw Error(ErrorKind::InvalidArgument, "incidence_p2 needs an arrangement in P^2");
    std::map<std::vector<CycloNum>, std::set<int>> groups;
    const int d = arr.size();
    for (int j = 1; j <= d; ++j)
        for (int k = j + 1; k <= d; ++k) {
            auto pt = detail::projective_normalize(detail::cross(arr[j].coeffs(), arr[k].coeffs()));
            auto& s = groups[pt];
            s.insert(j);
            s.insert(k);
        }
    std::vector<std::vector<int>> pts;
    pts.reserve(groups.size());
    for (auto& [pt, s] : groups) pts.emplace_back(s.begin(), s.end());
    return LineIncidence(d, std::move(pts));
}

/// Codimension-2 edges of a plane arrangement in P^3, as the incidence
/// structure of a generic plane section. X_c contains X_a ∩ X_b iff the
/// 3x4 coefficient matrix has rank 2.
inline LineIncidence codim2_edges_p3(const Arrangement& arr) {
    if (arr.ambient() != 4) throw Error(ErrorKind::InvalidArgument, "codim2_edges_p3 needs an arrangement in P^3");
    const int d = arr.size();
    std::vector<char> covered(static_cast<std::size_t>(d) * d, 0);
    std::vector<std::vector<int>> edges;
    const CycloNum zero = CycloNum::zero(arr.field());
    for (int j = 1; j <= d; ++j)
        for (int k = j + 1; k <= d; ++k) {
            if (covered[(j - 1) * d + (k - 1)]) continue;
            ExactMatrix m(2, 4, zero);
            for (int c = 0; c < 4; ++c) {
                m(0, c) = arr[j].coeffs()[c];
                m(1, c) = arr[k].coeffs()[c];
            }
            auto ech = row_reduce(m, true);
            std::vector<int> edge{j, k};
            for (int c = 1; c <= d; ++c) {
                if (c == j || c == k) continue;
                // residual of c after removing its components along the pivots
                std::vector<CycloNum> v = arr[c].coeffs();
                for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
                    const CycloNum f = v[ech.pivot_cols[r]];
                    if (f.is_zero()) continue;
                    for (int t = 0; t < 4; ++t) v[t] -= f * ech.reduced(r, t);
                }
                if (std::all_of(v.begin(), v.end(), [](const CycloNum& x) { return x.is_zero(); }))
                    edge.push_back(c);
            }
            std::sort(edge.begin(), edge.end());
            for (std::size_t a = 0; a < edge.size(); ++a)
                for (std::size_t b = a + 1; b < edge.size(); ++b)
                    covered[(edge[a] - 1) * d + (edge[b] - 1)] = 1;
            edges.push_back(std::move(edge));
        }
    return LineIncidence(d, std::move(edges));
}

struct PosetSummary {
    int deleted = 0;
    std::map<std::size_t, int> rho_points; // affine point index -> rho_p
    int b0 = 1, b1 = 0, b2 = 0;
    int euler = 0;
};

inline PosetSummary poset_summary(const LineIncidence& inc, int deleted) {
    inc.check_line(deleted);
    PosetSummary s;
    s.deleted = deleted;
    s.b1 = inc.d() - 1;
    for (std::size_t p = 0; p < inc.num_points(); ++p) {
        if (inc.contains(p, deleted)) continue;
        const int rho = static_cast<int>(inc.point(p).size()) - 1;
        s.rho_points[p] = rho;
        s.b2 += rho;
    }
    s.euler = s.b0 - s.b1 + s.b2;
    return s;
}

/// Local ranks of the affine poset (ambient plane, affine lines, affine
/// points) from the alternating recursion sum_{Z' ⊇ Z} (-1)^{dim Z' - dim Z}
/// rho_{Z'} = 0, solved top-down. Returned: rho of every affine point,
/// indexed like poset_summary().rho_points.
inline std::map<std::size_t, int> mobius_ranks(const LineIncidence& inc, int deleted) {
    inc.check_line(deleted);
    const int rho_plane = 1;
    std::map<int, int> rho_line;
    for (int k = 1; k <= inc.d(); ++k)
        if (k != deleted) rho_line[k] = rho_plane; // rho_L - rho_Y = 0
    std::map<std::size_t, int> out;
    for (std::size_t p = 0; p < inc.num_points(); ++p) {
        if (inc.contains(p, deleted)) continue;
        int s = rho_plane; // (-1)^2 rho_Y
        for (int k : inc.point(p)) s -= rho_line.at(k);
        out[p] = -s;
    }
    return out;
}

/// Points of multiplicity >= 3; together with the lines these are the dense
/// edges of a line arrangement.
inline std::vector<std::size_t> dense_points(const LineIncidence& inc) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < inc.num_points(); ++p)
        if (inc.point(p).size() >= 3) out.push_back(p);
    return out;
}

struct GenericSection {
    Arrangement lines;
    std::vector<Rational> plane; // coefficients of the cutting plane H
    std::uint64_t seed_used = 0;
};

/// Restrict a P^3 arrangement to a pseudo-random plane H and certify exactly
/// that the resulting line arrangement has the incidence of the codim-2
/// edges. Seeds seed, seed+1, ... are tried until one is generic.
inline GenericSection generic_section_coords(const Arrangement& arr, std::uint64_t seed, int retry_budget = 32) {
    if (arr.ambient() != 4) throw Error(ErrorKind::InvalidArgument, "generic_section_coords needs P^3");
    const LineIncidence target = codim2_edges_p3(arr);
    const auto& field = arr.field();
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 gen(s);
        std::vector<Rational> h(4);
        for (auto& x : h) {
            const long num = static_cast<long>(gen() % 19) - 9;
            const long den = static_cast<long>(gen() % 5) + 1;
            x = make_rational(num, den);
        }
        if (h[3] == 0) continue;
        // H = {h . x = 0}, parametrized by x4 = -(h1 x1 + h2 x2 + h3 x3)/h4.
        std::vector<Hyperplane> restricted;
        bool ok = true;
        for (const auto& hp : arr.hyperplanes()) {
            const auto& a = hp.coeffs();
            std::vector<CycloNum> c;
            for (int i = 0; i < 3; ++i) c.push_back(a[i] - a[3] * (h[i] / h[3]));
            if (std::all_of(c.begin(), c.end(), [](const CycloNum& x) { return x.is_zero(); })) {
                ok = false;
                break;
            }
            restricted.emplace_back(std::move(c));
        }
        if (!ok) continue;
        try {
            Arrangement sec(field, 3, std::move(restricted));
            if (incidence_p2(sec) == target) return {std::move(sec), h, s};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotReduced) throw;
        }
    }
    throw Error(ErrorKind::GenericityExhausted,
                "no generic plane found in " + std::to_string(retry_budget) + " attempts from seed " +
                    std::to_string(seed));
}

} // namespace arrcoh
