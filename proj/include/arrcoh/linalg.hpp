#pragma once

// Dense exact linear algebra over an exact field scalar (Rational or
// CycloNum). No floating point anywhere.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "arrcoh/cyclo.hpp"

namespace arrcoh {

inline bool scalar_is_zero(const Rational& q) { return q == 0; }
inline bool scalar_is_zero(const CycloNum& a) { return a.is_zero(); }

inline std::size_t scalar_height(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}
inline std::size_t scalar_height(const CycloNum& a) { return a.height(); }

inline Rational scalar_one_like(const Rational&) { return Rational(1); }
inline CycloNum scalar_one_like(const CycloNum& a) { return CycloNum::one(a.field()); }

template <class F>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, F zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)), a_(rows * cols, zero_) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const F& zero() const noexcept { return zero_; }

    F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<F> column(std::size_t c) const {
        std::vector<F> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    void set_column(std::size_t c, const std::vector<F>& v) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!scalar_is_zero(x)) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    /// Horizontal concatenation [*this | other].
    Matrix hcat(const Matrix& other) const {
        Matrix out(rows_, cols_ + other.cols_, zero_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(i, k);
                if (scalar_is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!scalar_is_zero(b(k, j))) out(i, j) += x * b(k, j);
            }
        return out;
    }

private:
    std::size_t rows_, cols_;
    F zero_;
    std::vector<F> a_;
};

using ExactMatrix = Matrix<CycloNum>;

template <class F>
struct Echelon {
    Matrix<F> reduced;                  // row echelon form (reduced if requested)
    std::vector<std::size_t> pivot_cols; // pivot column of row i
};

/// Gaussian elimination. Pivots are searched only in columns < pivot_limit;
/// within a column the entry of smallest height wins. With full = true the
/// result is the reduced row echelon form.
template <class F>
Echelon<F> row_reduce(Matrix<F> m, bool full = true, std::size_t pivot_limit = static_cast<std::size_t>(-1)) {
    std::vector<std::size_t> pivots;
    const std::size_t limit = std::min(pivot_limit, m.cols());
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
        std::optional<std::size_t> best;
        std::size_t best_h = 0;
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (scalar_is_zero(m(r, col))) continue;
            const std::size_t h = scalar_height(m(r, col));
            if (!best || h < best_h) {
                best = r;
                best_h = h;
            }
        }
        if (!best) continue;
        m.swap_rows(row, *best);
        const F inv = scalar_one_like(m(row, col)) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!scalar_is_zero(m(row, c))) m(row, c) *= inv;
        for (std::size_t r = full ? 0 : row + 1; r < m.rows(); ++r) {
            if (r == row || scalar_is_zero(m(r, col))) continue;
            const F factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!scalar_is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return row_reduce(m, false).pivot_cols.size();
}

template <class F>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<F>> kernel; // basis of the right null space
};

template <class F>
RankKernel<F> rank_and_kernel(const Matrix<F>& m) {
    auto ech = row_reduce(m, true);
    RankKernel<F> out;
    out.rank = ech.pivot_cols.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(m.cols(), m.zero());
        v[f] = scalar_one_like(m.zero());
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) v[ech.pivot_cols[i]] = -ech.reduced(i, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class F>
struct SolveResult {
    Matrix<F> x;                  // a * x = b on the solvable columns
    std::vector<std::size_t> unsolvable; // columns of b outside the column span of a
};

/// Solve a * x = b column by column. Columns of b not in the span of a are
/// reported; their column of x is left zero.
template <class F>
SolveResult<F> solve(const Matrix<F>& a, const Matrix<F>& b) {
    auto ech = row_reduce(a.hcat(b), true, a.cols());
    const std::size_t r = ech.pivot_cols.size();
    SolveResult<F> out{Matrix<F>(a.cols(), b.cols(), a.zero()), {}};
    for (std::size_t j = 0; j < b.cols(); ++j) {
        bool ok = true;
        for (std::size_t i = r; i < a.rows() && ok; ++i)
            if (!scalar_is_zero(ech.reduced(i, a.cols() + j))) ok = false;
        if (!ok) {
            out.unsolvable.push_back(j);
            continue;
        }
        for (std::size_t i = 0; i < r; ++i) out.x(ech.pivot_cols[i], j) = ech.reduced(i, a.cols() + j);
    }
    return out;
}

} // namespace arrcoh
