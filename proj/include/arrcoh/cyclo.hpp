#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_N).
//
// An element is stored as its coefficient vector in the power basis
// 1, z, ..., z^{phi(N)-1}, fully reduced modulo the N-th cyclotomic
// polynomial. That representation is unique, so equality is coefficient
// equality. Q itself is Q(zeta_1).

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

#include "arrcoh/error.hpp"

namespace arrcoh {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline bool is_positive_integer(const Rational& q) { return is_integer(q) && sgn(q) > 0; }

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

// Dense integer polynomials, index = degree.
using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of a by a monic-up-to-sign divisor b; remainder must vanish.
inline IntPoly exact_div(IntPoly a, const IntPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() - 1 < db) return {Integer(0)};
    IntPoly q(a.size() - db, Integer(0));
    for (std::size_t i = a.size(); i-- > db;) {
        Integer t = a[i] / b[db];
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
    }
    return q;
}

} // namespace detail

/// Coefficients (constant term first) of the N-th cyclotomic polynomial,
/// obtained by dividing z^N - 1 by Phi_d for every proper divisor d of N.
inline std::vector<Integer> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
    detail::IntPoly num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) num = detail::exact_div(std::move(num), cyclotomic_polynomial(d));
    }
    detail::trim(num);
    return num;
}

/// Immutable description of Q(zeta_N): the modulus and reduced powers of z.
class CycloField {
public:
    static std::shared_ptr<const CycloField> make(unsigned order) {
        return std::shared_ptr<const CycloField>(new CycloField(order));
    }

    unsigned order() const noexcept { return order_; }
    unsigned degree() const noexcept { return degree_; }
    const std::vector<Integer>& modulus() const noexcept { return modulus_; }

    /// Reduced coefficients of z^k (k taken modulo N).
    const std::vector<Rational>& power(long k) const {
        long m = k % static_cast<long>(order_);
        if (m < 0) m += order_;
        return powers_[static_cast<std::size_t>(m)];
    }

    /// Reduce a coefficient vector of arbitrary length in place; result has
    /// exactly degree() entries.
    void reduce(std::vector<Rational>& c) const {
        const std::size_t deg = degree_;
        for (std::size_t k = c.size(); k-- > deg;) {
            if (c[k] == 0) continue;
            const Rational t = c[k];
            c[k] = 0;
            for (std::size_t j = 0; j < deg; ++j) {
                if (modulus_[j] != 0) c[k - deg + j] -= t * modulus_[j];
            }
        }
        c.resize(deg);
    }

private:
    explicit CycloField(unsigned order)
        : order_(order), degree_(euler_phi(order)), modulus_(cyclotomic_polynomial(order)) {
        powers_.reserve(order_);
        for (unsigned k = 0; k < order_; ++k) {
            std::vector<Rational> c(std::max<std::size_t>(k + 1, degree_), Rational(0));
            c[k] = 1;
            reduce(c);
            powers_.push_back(std::move(c));
        }
    }

    unsigned order_;
    unsigned degree_;
    std::vector<Integer> modulus_;
    std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// Element of Q(zeta_N).
class CycloNum {
public:
    CycloNum() = default;

    explicit CycloNum(FieldPtr field) : field_(std::move(field)), c_(field_->degree(), Rational(0)) {}

    CycloNum(FieldPtr field, const Rational& q) : CycloNum(std::move(field)) { c_[0] = q; }

    CycloNum(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        field_->reduce(c_);
    }

    static CycloNum zero(const FieldPtr& f) { return CycloNum(f); }
    static CycloNum one(const FieldPtr& f) { return CycloNum(f, Rational(1)); }
    static CycloNum zeta(const FieldPtr& f, long k) { return CycloNum(f, f->power(k)); }

    const FieldPtr& field() const noexcept { return field_; }
    unsigned order() const noexcept { return field_ ? field_->order() : 0; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
    }
    bool is_rational() const {
        return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](const Rational& q) { return q == 0; });
    }
    /// Constant coefficient; equals the value when is_rational().
    const Rational& rational_part() const { return c_.front(); }

    /// Sum of coefficient bit sizes; pivot-selection heuristic.
    std::size_t height() const {
        std::size_t h = 0;
        for (const auto& q : c_) {
            if (q != 0) h += mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
        }
        return h;
    }

    CycloNum& operator+=(const CycloNum& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CycloNum& operator-=(const CycloNum& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    CycloNum& operator*=(const CycloNum& o) {
        check_same(o);
        if (c_.size() == 1) {
            c_[0] *= o.c_[0];
            return *this;
        }
        std::vector<Rational> prod(2 * c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
            }
        }
        field_->reduce(prod);
        c_ = std::move(prod);
        return *this;
    }
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }

    CycloNum& operator*=(const Rational& q) {
        for (auto& x : c_) x *= q;
        return *this;
    }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    friend CycloNum operator*(CycloNum a, const Rational& q) { return a *= q; }
    friend CycloNum operator*(const Rational& q, CycloNum a) { return a *= q; }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.order() == b.order() && a.c_ == b.c_;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Arbitrary total order on coefficient vectors; used only for grouping.
    friend bool operator<(const CycloNum& a, const CycloNum& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    CycloNum inverse() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
        if (c_.size() == 1) return CycloNum(field_, Rational(1) / c_[0]);
        return CycloNum(field_, poly_inverse_mod(c_, field_->modulus()));
    }

    /// Image under the Galois automorphism z -> z^{N-1}.
    CycloNum conjugate() const {
        std::vector<Rational> out(c_.size(), Rational(0));
        const long n = static_cast<long>(order());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            const auto& p = field_->power((n - 1) * static_cast<long>(k));
            for (std::size_t j = 0; j < out.size(); ++j) out[j] += c_[k] * p[j];
        }
        return CycloNum(field_, std::move(out));
    }

private:
    void check_same(const CycloNum& o) const {
        if (order() != o.order()) {
            throw Error(ErrorKind::OrderMismatch,
                        "orders " + std::to_string(order()) + " and " + std::to_string(o.order()));
        }
    }

    using QPoly = std::vector<Rational>;

    static void qtrim(QPoly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    // (quotient, remainder) of a by b over Q.
    static std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
        qtrim(a);
        if (a.size() < b.size()) return {QPoly{}, a};
        QPoly q(a.size() - b.size() + 1, Rational(0));
        for (std::size_t top = a.size(); top >= b.size(); --top) {
            const std::size_t shift = top - b.size();
            const Rational t = a[top - 1] / b.back();
            q[shift] = t;
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= t * b[j];
        }
        qtrim(a);
        return {q, a};
    }

    static QPoly qmulsub(const QPoly& a, const QPoly& q, const QPoly& b) {
        // a - q*b
        QPoly r(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1), Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
        qtrim(r);
        return r;
    }

    // Extended Euclid: returns s with s*a = 1 mod m.
    static QPoly poly_inverse_mod(const QPoly& a_in, const std::vector<Integer>& m_in) {
        QPoly a = a_in;
        qtrim(a);
        QPoly m(m_in.begin(), m_in.end());
        QPoly r0 = m, r1 = a, s0{}, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r] = qdivmod(r0, r1);
            QPoly s = qmulsub(s0, q, s1);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r0 is a nonzero constant since Phi_N is irreducible.
        const Rational inv = Rational(1) / r0[0];
        for (auto& x : s0) x *= inv;
        return s0;
    }

    FieldPtr field_;
    std::vector<Rational> c_;
};

/// a * conj(a) with conj(z) = z^{N-1}; a nonnegative rational on the
/// inputs used by the G31 classification.
inline CycloNum abs_squared(const CycloNum& a) { return a * a.conjugate(); }

inline CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, char op) {
    switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
    default: throw Error(ErrorKind::InvalidArgument, std::string("unknown operator ") + op);
    }
}

} // namespace arrcoh
