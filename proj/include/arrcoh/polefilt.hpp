#pragma once

// The complex P_1 Psi of twisted logarithmic forms with pole order <= 1
// along the deleted line, realised with explicit rational forms on the
// affine chart. Gives a second route to H^1(U, L) and the connecting-map
// probe for the quotient by the acyclic subcomplex Theta.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrcoh/aomoto.hpp"
#include "arrcoh/linalg.hpp"
#include "arrcoh/literal.hpp"

namespace arrcoh {

/// Polynomial in x, y of total degree <= cap, dense in the monomials
/// x^i y^j ordered by total degree then by j.
class Poly2 {
public:
    Poly2(FieldPtr f, int cap) : f_(std::move(f)), cap_(cap), c_(size_for(cap), CycloNum::zero(f_)) {}

    static std::size_t size_for(int cap) { return static_cast<std::size_t>(cap + 1) * (cap + 2) / 2; }
    static std::size_t index(int i, int j) {
        const auto t = static_cast<std::size_t>(i + j);
        return t * (t + 1) / 2 + static_cast<std::size_t>(j);
    }

    static Poly2 constant(const FieldPtr& f, int cap, const CycloNum& v) {
        Poly2 p(f, cap);
        p.c_[0] = v;
        return p;
    }

    int cap() const noexcept { return cap_; }
    const FieldPtr& field() const noexcept { return f_; }
    const std::vector<CycloNum>& coeffs() const noexcept { return c_; }
    const CycloNum& at(int i, int j) const { return c_[index(i, j)]; }
    CycloNum& at(int i, int j) { return c_[index(i, j)]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const CycloNum& a) { return a.is_zero(); });
    }

    int degree() const {
        for (int t = cap_; t >= 0; --t)
            for (int j = 0; j <= t; ++j)
                if (!at(t - j, j).is_zero()) return t;
        return -1;
    }

    Poly2& operator+=(const Poly2& o) {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!o.c_[k].is_zero()) c_[k] -= o.c_[k];
        return *this;
    }
    Poly2& operator*=(const CycloNum& s) {
        for (auto& a : c_)
            if (!a.is_zero()) a *= s;
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(Poly2 a, const CycloNum& s) { return a *= s; }
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.cap_ == b.cap_ && a.c_ == b.c_; }

    /// Multiply by x (var = 0) or y (var = 1).
    Poly2 shifted(int var) const {
        Poly2 out(f_, cap_);
        for (int t = 0; t <= cap_; ++t)
            for (int j = 0; j <= t; ++j) {
                const auto& a = at(t - j, j);
                if (a.is_zero()) continue;
                if (t == cap_) throw Error(ErrorKind::InvalidArgument, "polynomial degree exceeds cap");
                out.at(t - j + (var == 0), j + (var == 1)) = a;
            }
        return out;
    }

    /// Product with c + a x + b y.
    Poly2 times_linear(const CycloNum& c, const CycloNum& a, const CycloNum& b) const {
        Poly2 out = *this * c;
        if (!a.is_zero()) out += shifted(0) * a;
        if (!b.is_zero()) out += shifted(1) * b;
        return out;
    }

    /// Exact quotient by c + a x + b y; throws InvalidArgument on a remainder.
    Poly2 divided_by_linear(const CycloNum& c, const CycloNum& a, const CycloNum& b) const {
        if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by a constant linear form");
        Poly2 rem = *this;
        Poly2 q(f_, cap_);
        const int top = degree();
        for (int t = top; t >= 1; --t) {
            // (a x + b y) H = R_t where H is the degree t-1 part of q
            std::vector<CycloNum> r(static_cast<std::size_t>(t) + 1, CycloNum::zero(f_));
            for (int j = 0; j <= t; ++j) r[j] = rem.at(t - j, j);
            std::vector<CycloNum> h(static_cast<std::size_t>(t), CycloNum::zero(f_));
            if (!b.is_zero()) {
                CycloNum next = CycloNum::zero(f_); // h_t = 0
                for (int j = t; j >= 1; --j) {
                    h[j - 1] = (r[j] - a * next) / b;
                    next = h[j - 1];
                }
                if (r[0] != a * h[0]) throw Error(ErrorKind::InvalidArgument, "inexact division by linear form");
            } else {
                for (int j = 0; j < t; ++j) h[j] = r[j] / a;
                if (!r[t].is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact division by linear form");
            }
            // the degree-t part is now accounted for; c H drops one degree
            for (int jj = 0; jj <= t; ++jj) rem.at(t - jj, jj) = CycloNum::zero(f_);
            for (int j = 0; j < t; ++j) {
                if (h[j].is_zero()) continue;
                q.at(t - 1 - j, j) = h[j];
                rem.at(t - 1 - j, j) -= c * h[j];
            }
        }
        if (!rem.at(0, 0).is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact division by linear form");
        return q;
    }

private:
    FieldPtr f_;
    int cap_;
    std::vector<CycloNum> c_;
};

/// g_k = c + c' g_i + c'' g_j on the chart where X_deleted is at infinity.
inline std::array<CycloNum, 3> c_constants(const Arrangement& arr, int deleted, int k, int i, int j) {
    if (arr.ambient() != 3) throw Error(ErrorKind::InvalidArgument, "c_constants needs a line arrangement");
    for (int t : {deleted, k, i, j})
        if (t < 1 || t > arr.size()) throw Error(ErrorKind::IndexOutOfRange, "line " + std::to_string(t));
    const auto& f = arr.field();
    ExactMatrix a(3, 3, CycloNum::zero(f));
    ExactMatrix b(3, 1, CycloNum::zero(f));
    for (int r = 0; r < 3; ++r) {
        a(r, 0) = arr[deleted].coeffs()[r];
        a(r, 1) = arr[i].coeffs()[r];
        a(r, 2) = arr[j].coeffs()[r];
        b(r, 0) = arr[k].coeffs()[r];
    }
    if (rank(a) < 3)
        throw Error(ErrorKind::ParallelPair,
                    "lines " + std::to_string(i) + " and " + std::to_string(j) + " do not meet in the affine chart");
    const auto sol = solve(a, b);
    return {sol.x(0, 0), sol.x(1, 0), sol.x(2, 0)};
}

/// Building blocks of structured forms: omega_k, dx, dy.
struct Gen {
    enum Kind { Omega, DX, DY } kind;
    int k = 0;
    friend bool operator==(const Gen& a, const Gen& b) { return a.kind == b.kind && a.k == b.k; }
};

inline Gen omega(int k) { return {Gen::Omega, k}; }
inline Gen dx() { return {Gen::DX, 0}; }
inline Gen dy() { return {Gen::DY, 0}; }

/// coef * h * gens[0] ∧ gens[1] ..., h in {1, x, y}.
struct Term {
    CycloNum coef;
    int h = 0; // 0: 1, 1: x, 2: y
    std::vector<Gen> gens;
};

using FormExpr = std::vector<Term>;

/// Numerators over the universal denominator D = prod_{k<d} g_k. One
/// numerator in degrees 0 and 2 (coefficient of dx∧dy), two in degree 1
/// (along dx and dy).
struct RationalForm {
    int degree = 0;
    std::vector<Poly2> numerators;
    int degree_cap = 0;

    std::vector<CycloNum> flatten() const {
        std::vector<CycloNum> out;
        for (const auto& n : numerators) out.insert(out.end(), n.coeffs().begin(), n.coeffs().end());
        return out;
    }
    bool is_zero() const {
        return std::all_of(numerators.begin(), numerators.end(), [](const Poly2& p) { return p.is_zero(); });
    }
    friend bool operator==(const RationalForm& a, const RationalForm& b) {
        return a.degree == b.degree && a.numerators == b.numerators;
    }
};

inline std::string describe(const Term& t) {
    std::string s;
    if (t.h == 1) s += "x*";
    if (t.h == 2) s += "y*";
    if (t.gens.empty()) return t.h == 0 ? "1" : s.substr(0, 1);
    for (std::size_t i = 0; i < t.gens.size(); ++i) {
        if (i) s += "^";
        const auto& g = t.gens[i];
        s += g.kind == Gen::Omega ? "w" + std::to_string(g.k) : (g.kind == Gen::DX ? "dx" : "dy");
    }
    return s;
}

/// Affine chart after relabeling: the deleted line is d, and x = g_1, y =
/// g_2. Converts structured forms into numerators.
class PoleChart {
public:
    PoleChart(const Arrangement& arr) : f_(arr.field()), d_(arr.size()), cap_(arr.size()) {
        g_.push_back({CycloNum::zero(f_), CycloNum::zero(f_), CycloNum::zero(f_)});
        for (int k = 1; k < d_; ++k) g_.push_back(c_constants(arr, d_, k, 1, 2));
        denom_ = Poly2::constant(f_, cap_, CycloNum::one(f_));
        for (int k = 1; k < d_; ++k) denom_ = denom_.times_linear(g_[k][0], g_[k][1], g_[k][2]);
    }

    int d() const noexcept { return d_; }
    int cap() const noexcept { return cap_; }
    const FieldPtr& field() const noexcept { return f_; }
    const Poly2& denominator() const noexcept { return denom_; }
    /// (c, c', c'') with g_k = c + c' x + c'' y.
    const std::array<CycloNum, 3>& g(int k) const { return g_.at(static_cast<std::size_t>(k)); }

    /// D divided by the product of g_k over the given distinct lines.
    const Poly2& quotient(std::vector<int> lines) {
        std::sort(lines.begin(), lines.end());
        auto it = cache_.find(lines);
        if (it != cache_.end()) return it->second;
        Poly2 q = denom_;
        if (!lines.empty()) {
            std::vector<int> rest(lines.begin(), lines.end() - 1);
            const auto& gk = g_[lines.back()];
            q = quotient(rest).divided_by_linear(gk[0], gk[1], gk[2]);
        }
        return cache_.emplace(lines, std::move(q)).first->second;
    }

    RationalForm zero_form(int degree) const {
        return {degree, std::vector<Poly2>(degree == 1 ? 2 : 1, Poly2(f_, cap_)), cap_};
    }

    RationalForm to_form(const FormExpr& e, int degree) {
        RationalForm out = zero_form(degree);
        for (const auto& t : e) {
            if (static_cast<int>(t.gens.size()) != degree)
                throw Error(ErrorKind::InvalidArgument, "term degree differs from form degree");
            add_term(out, t);
        }
        return out;
    }

    /// d^alpha e = de + omega^alpha ∧ e, alpha indexed 1..d.
    static FormExpr twisted_d(const FormExpr& e, const std::vector<CycloNum>& alpha, int d) {
        FormExpr out;
        for (const auto& t : e) {
            if (t.gens.size() >= 2) continue;
            if (t.h != 0) {
                Term dt{t.coef, 0, {t.h == 1 ? dx() : dy()}};
                dt.gens.insert(dt.gens.end(), t.gens.begin(), t.gens.end());
                out.push_back(std::move(dt));
            }
            for (int j = 1; j < d; ++j) {
                const auto& a = alpha[static_cast<std::size_t>(j - 1)];
                if (a.is_zero()) continue;
                Term wt{t.coef * a, t.h, {omega(j)}};
                wt.gens.insert(wt.gens.end(), t.gens.begin(), t.gens.end());
                out.push_back(std::move(wt));
            }
        }
        return out;
    }

private:
    // (a, b) with gen = (a dx + b dy) / g_S
    std::pair<std::array<CycloNum, 2>, std::vector<int>> vec(const Gen& g) const {
        switch (g.kind) {
        case Gen::Omega: {
            if (g.k < 1 || g.k >= d_) throw Error(ErrorKind::IndexOutOfRange, "omega index " + std::to_string(g.k));
            return {{g_[g.k][1], g_[g.k][2]}, {g.k}};
        }
        case Gen::DX: return {{CycloNum::one(f_), CycloNum::zero(f_)}, {}};
        case Gen::DY: return {{CycloNum::zero(f_), CycloNum::one(f_)}, {}};
        }
        throw Error(ErrorKind::InvalidArgument, "bad generator");
    }

    Poly2 with_h(Poly2 p, int h) const { return h == 0 ? p : p.shifted(h - 1); }

    void add_term(RationalForm& out, const Term& t) {
        if (t.coef.is_zero()) return;
        if (t.gens.empty()) {
            out.numerators[0] += with_h(denom_, t.h) * t.coef;
            return;
        }
        if (t.gens.size() == 1) {
            auto [v, s] = vec(t.gens[0]);
            const Poly2 base = with_h(quotient(s), t.h);
            if (!v[0].is_zero()) out.numerators[0] += base * (t.coef * v[0]);
            if (!v[1].is_zero()) out.numerators[1] += base * (t.coef * v[1]);
            return;
        }
        auto [v1, s1] = vec(t.gens[0]);
        auto [v2, s2] = vec(t.gens[1]);
        if (!s1.empty() && s1 == s2) return; // omega_k ∧ omega_k
        const CycloNum det = v1[0] * v2[1] - v1[1] * v2[0];
        if (det.is_zero()) return;
        std::vector<int> s = s1;
        s.insert(s.end(), s2.begin(), s2.end());
        out.numerators[0] += with_h(quotient(s), t.h) * (t.coef * det);
    }

    FieldPtr f_;
    int d_;
    int cap_;
    std::vector<std::array<CycloNum, 3>> g_; // g_[k] for k in 1..d-1
    Poly2 denom_{f_, 0};
    std::map<std::vector<int>, Poly2> cache_;
};

struct PoleComplex {
    std::vector<int> order;      // order[new - 1] = original index
    int d = 0;
    int original_deleted = 0;
    Arrangement arrangement;     // relabeled, deleted line last
    LineIncidence incidence;     // of the relabeled arrangement
    ResidueAssignment residues;  // relabeled
    std::vector<CycloNum> alpha; // residues in the field
    std::array<std::vector<FormExpr>, 3> basis;
    std::array<std::vector<std::string>, 3> labels;
    std::array<std::size_t, 3> p0_dim{}; // leading P_0 block of each basis
    ExactMatrix d0, d1;                  // d^alpha in the bases, columns = sources
    std::vector<RationalForm> basis_forms2;

    std::size_t dim(int p) const { return basis[p].size(); }
    std::size_t gr_dim(int p) const { return basis[p].size() - p0_dim[p]; }
};

/// Counting form of the Gr^P_m bases: m+1, 2m+d-1, m+d-2 for p = 0, 1, 2.
inline int gr_dimension(int p, int m, int d) {
    if (m < 1 || m > 3) throw Error(ErrorKind::InvalidArgument, "m must lie in 1..3");
    if (d < 3) throw Error(ErrorKind::InvalidArgument, "need d >= 3");
    int count = 0;
    switch (p) {
    case 0:
        for (int i = 0; i <= m; ++i) ++count; // x^i y^{m-i}
        return count;
    case 1:
        count = d - 3; // x^m omega_k
        for (int i = 0; i <= m; ++i) count += 2; // x^i y^{m-i} dx/x and dy/y
        return count;
    case 2:
        count = d - 3; // x^{m-1} dx ∧ omega_k
        for (int i = 0; i <= m; ++i) ++count; // x^i y^{m-i} dx/x ∧ dy/y
        return count;
    }
    throw Error(ErrorKind::InvalidArgument, "p must lie in 0..2");
}

namespace detail {

inline ExactMatrix form_columns(const std::vector<RationalForm>& forms, const FieldPtr& f) {
    const std::size_t rows = forms.empty() ? 0 : forms.front().flatten().size();
    ExactMatrix m(rows, forms.size(), CycloNum::zero(f));
    for (std::size_t c = 0; c < forms.size(); ++c) m.set_column(c, forms[c].flatten());
    return m;
}

} // namespace detail

/// Relabeling used by build_pole_complex: the two lowest lines meeting the
/// deleted line at double points, the remaining lines in order, the deleted
/// line last.
inline std::vector<int> pole_relabeling(const LineIncidence& inc, int deleted) {
    inc.check_line(deleted);
    std::vector<int> pick;
    for (int k = 1; k <= inc.d() && pick.size() < 2; ++k)
        if (k != deleted && inc.point(inc.point_of(k, deleted)).size() == 2) pick.push_back(k);
    if (pick.size() < 2)
        throw Error(ErrorKind::InvalidArgument, "fewer than two double points on the deleted line");
    std::vector<int> order = pick;
    for (int k = 1; k <= inc.d(); ++k)
        if (k != deleted && k != pick[0] && k != pick[1]) order.push_back(k);
    order.push_back(deleted);
    return order;
}

inline PoleComplex build_pole_complex(const Arrangement& arr, const ResidueAssignment& ra) {
    if (arr.ambient() != 3) throw Error(ErrorKind::InvalidArgument, "pole complex needs a line arrangement");
    if (ra.d() != arr.size()) throw Error(ErrorKind::SizeMismatch, "residue vector length differs from d");
    if (arr.size() < 3) throw Error(ErrorKind::InvalidArgument, "need d >= 3");
    for (int k = 1; k <= ra.d(); ++k)
        if (is_positive_integer(ra[k]))
            throw Error(ErrorKind::NotInScope, "line " + std::to_string(k) + " has alpha = " + ra[k].get_str());
    const auto order = pole_relabeling(incidence_p2(arr), ra.deleted);
    const int d = arr.size();
    std::vector<Hyperplane> hs;
    std::vector<Rational> alpha;
    for (int k : order) {
        hs.push_back(arr[k]);
        alpha.push_back(ra[k]);
    }
    Arrangement rel(arr.field(), 3, std::move(hs));
    const auto& f = rel.field();
    PoleComplex pc{order, d, ra.deleted, rel, incidence_p2(rel), make_residues(alpha, d), {}, {}, {}, {},
                   ExactMatrix(0, 0, CycloNum::zero(f)), ExactMatrix(0, 0, CycloNum::zero(f)), {}};
    for (const auto& a : alpha) pc.alpha.push_back(CycloNum(f, a));

    const CycloNum one = CycloNum::one(f);
    auto term = [&](int h, std::vector<Gen> gens) { return FormExpr{Term{one, h, std::move(gens)}}; };

    // degree 0: 1 | x, y
    pc.basis[0] = {term(0, {}), term(1, {}), term(2, {})};
    pc.labels[0] = {"1", "x", "y"};
    pc.p0_dim[0] = 1;
    // degree 1: omega_k | x omega_k (k >= 3), dx, y omega_1, dy, x omega_2
    for (int k = 1; k < d; ++k) pc.basis[1].push_back(term(0, {omega(k)}));
    pc.p0_dim[1] = pc.basis[1].size();
    for (int k = 3; k < d; ++k) pc.basis[1].push_back(term(1, {omega(k)}));
    pc.basis[1].push_back(term(0, {dx()}));
    pc.basis[1].push_back(term(2, {omega(1)}));
    pc.basis[1].push_back(term(0, {dy()}));
    pc.basis[1].push_back(term(1, {omega(2)}));
    // degree 2: A^2 basis | dx ∧ omega_k (k >= 3), omega_1 ∧ dy, dx ∧ omega_2
    const OSDegree2 os(pc.incidence, d);
    for (const auto& [p, k] : os.basis()) pc.basis[2].push_back(term(0, {omega(pc.incidence.point(p).front()), omega(k)}));
    pc.p0_dim[2] = pc.basis[2].size();
    for (int k = 3; k < d; ++k) pc.basis[2].push_back(term(0, {dx(), omega(k)}));
    pc.basis[2].push_back(term(0, {omega(1), dy()}));
    pc.basis[2].push_back(term(0, {dx(), omega(2)}));
    for (int p = 1; p <= 2; ++p)
        for (const auto& e : pc.basis[p]) pc.labels[p].push_back(describe(e.front()));

    PoleChart chart(rel);
    std::array<std::vector<RationalForm>, 3> forms;
    std::array<ExactMatrix, 3> bm{ExactMatrix(0, 0, CycloNum::zero(f)), ExactMatrix(0, 0, CycloNum::zero(f)),
                                  ExactMatrix(0, 0, CycloNum::zero(f))};
    for (int p = 0; p <= 2; ++p) {
        for (const auto& e : pc.basis[p]) forms[p].push_back(chart.to_form(e, p));
        bm[p] = detail::form_columns(forms[p], f);
        if (rank(bm[p]) != forms[p].size())
            throw Error(ErrorKind::BasisDependent, "degree " + std::to_string(p) + " basis is linearly dependent");
    }
    pc.basis_forms2 = forms[2];

    auto differential = [&](int p) {
        std::vector<RationalForm> images;
        for (const auto& e : pc.basis[p]) images.push_back(chart.to_form(PoleChart::twisted_d(e, pc.alpha, d), p + 1));
        const auto sol = solve(bm[p + 1], detail::form_columns(images, f));
        if (!sol.unsolvable.empty())
            throw Error(ErrorKind::NotInSpan, "d^alpha(" + pc.labels[p][sol.unsolvable.front()] +
                                                  ") leaves P_1 in degree " + std::to_string(p + 1));
        return sol.x;
    };
    pc.d0 = differential(0);
    pc.d1 = differential(1);
    return pc;
}

/// Coordinates of an arbitrary degree-p form in the basis of pc; throws
/// NotInSpan if it is not in P_1.
inline std::vector<CycloNum> pole_coordinates(const PoleComplex& pc, const FormExpr& e, int p) {
    PoleChart chart(pc.arrangement);
    const auto& f = pc.arrangement.field();
    std::vector<RationalForm> forms;
    for (const auto& b : pc.basis[p]) forms.push_back(chart.to_form(b, p));
    const auto sol = solve(detail::form_columns(forms, f), detail::form_columns({chart.to_form(e, p)}, f));
    if (!sol.unsolvable.empty()) throw Error(ErrorKind::NotInSpan, "form outside P_1");
    return sol.x.column(0);
}

struct PoleCohomology {
    int h0 = 0, h1 = 0, h2 = 0;
    std::size_t rank_d0 = 0, rank_d1 = 0;
    int euler = 0;
};

inline PoleCohomology pole_cohomology(const PoleComplex& pc) {
    PoleCohomology h;
    h.rank_d0 = rank(pc.d0);
    h.rank_d1 = rank(pc.d1);
    const int c0 = static_cast<int>(pc.dim(0)), c1 = static_cast<int>(pc.dim(1)), c2 = static_cast<int>(pc.dim(2));
    h.h0 = c0 - static_cast<int>(h.rank_d0);
    h.h1 = c1 - static_cast<int>(h.rank_d1) - static_cast<int>(h.rank_d0);
    h.h2 = c2 - static_cast<int>(h.rank_d1);
    h.euler = c0 - c1 + c2;
    return h;
}

inline int h1_pole(const PoleComplex& pc) { return pole_cohomology(pc).h1; }

struct Injectivity {
    bool pass = false;
    std::size_t cocycles = 0;   // dim Z^1 of the quotient complex, lifted to Gr^1
    std::size_t boundaries = 0; // dim of D(Gr^0) + Theta^1
    std::size_t kernel = 0;     // cocycles whose connecting image is exact
    int h1_pole = 0;
    std::optional<int> h1_aomoto;
    bool alarm = false; // h1 routes disagree although the conditions pass
};

/// Injectivity of the connecting map H^1(Gr_1 / Theta) -> H^2(A) by exact
/// ranks. The original incidence and residues feed the consistency check.
inline Injectivity connecting_injectivity(const PoleComplex& pc, const LineIncidence& original,
                                          const ResidueAssignment& ra) {
    const auto& f = pc.arrangement.field();
    const std::size_t a1 = pc.p0_dim[1], a2 = pc.p0_dim[2];
    const std::size_t g1 = pc.gr_dim(1), g2 = pc.gr_dim(2);
    const int d = pc.d;
    const CycloNum one = CycloNum::one(f);

    FormExpr w_alpha_x, w_alpha_y, dxw, dyw;
    for (int j = 1; j < d; ++j) {
        const auto& a = pc.alpha[static_cast<std::size_t>(j - 1)];
        w_alpha_x.push_back({a, 1, {omega(j)}});
        w_alpha_y.push_back({a, 2, {omega(j)}});
        dxw.push_back({a, 0, {dx(), omega(j)}});
        dyw.push_back({a, 0, {dy(), omega(j)}});
    }
    const std::vector<FormExpr> theta1 = {{Term{one, 0, {dx()}}}, {Term{one, 0, {dy()}}}, w_alpha_x, w_alpha_y};
    const auto t2a = pole_coordinates(pc, dxw, 2);
    const auto t2b = pole_coordinates(pc, dyw, 2);

    // Z: (u, s) with Gr(d u) = s_a Gr(t2a) + s_b Gr(t2b)
    ExactMatrix sys(g2, g1 + 2, CycloNum::zero(f));
    for (std::size_t r = 0; r < g2; ++r) {
        for (std::size_t c = 0; c < g1; ++c) sys(r, c) = pc.d1(a2 + r, a1 + c);
        sys(r, g1) = -t2a[a2 + r];
        sys(r, g1 + 1) = -t2b[a2 + r];
    }
    const auto rk = rank_and_kernel(sys);

    ExactMatrix m(a2, a1, CycloNum::zero(f));
    for (std::size_t r = 0; r < a2; ++r)
        for (std::size_t c = 0; c < a1; ++c) m(r, c) = pc.d1(r, c);
    ExactMatrix img(a2, rk.kernel.size() + a1, CycloNum::zero(f));
    for (std::size_t v = 0; v < rk.kernel.size(); ++v) {
        const auto& z = rk.kernel[v];
        for (std::size_t r = 0; r < a2; ++r) {
            CycloNum s = CycloNum::zero(f);
            for (std::size_t c = 0; c < g1; ++c)
                if (!z[c].is_zero()) s += pc.d1(r, a1 + c) * z[c];
            s -= z[g1] * t2a[r] + z[g1 + 1] * t2b[r];
            img(r, v) = s;
        }
    }
    for (std::size_t r = 0; r < a2; ++r)
        for (std::size_t c = 0; c < a1; ++c) img(r, rk.kernel.size() + c) = m(r, c);

    Injectivity out;
    out.cocycles = rk.kernel.size();
    out.kernel = out.cocycles - (rank(img) - rank(m));

    ExactMatrix bd(g1, 6, CycloNum::zero(f));
    for (std::size_t r = 0; r < g1; ++r) {
        bd(r, 0) = pc.d0(a1 + r, 1);
        bd(r, 1) = pc.d0(a1 + r, 2);
    }
    for (std::size_t t = 0; t < theta1.size(); ++t) {
        const auto c = pole_coordinates(pc, theta1[t], 1);
        for (std::size_t r = 0; r < g1; ++r) bd(r, 2 + t) = c[a1 + r];
    }
    out.boundaries = rank(bd);
    out.pass = out.kernel == out.boundaries;

    out.h1_pole = h1_pole(pc);
    const auto ao = aomoto_cohomology(original, ra);
    out.h1_aomoto = ao.h1;
    if (ao.theorem1 && ao.theorem1->overall && ao.h1 != out.h1_pole) {
        out.alarm = true;
        out.pass = false;
    }
    return out;
}

} // namespace arrcoh
