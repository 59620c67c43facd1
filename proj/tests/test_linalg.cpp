#include <gtest/gtest.h>

#include <random>

#include "arrcoh/linalg.hpp"
#include "arrcoh/literal.hpp"
#include "support.hpp"

using namespace arrcoh;

namespace {

std::vector<CycloNum> apply(const ExactMatrix& m, const std::vector<CycloNum>& v) {
    std::vector<CycloNum> out(m.rows(), m.zero());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

bool all_zero(const std::vector<CycloNum>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// product of random r x k and k x c matrices has rank <= k, and == k for
// generic factors; the kernel is then checked directly
ExactMatrix random_product(std::mt19937_64& gen, const FieldPtr& f, std::size_t r, std::size_t k, std::size_t c) {
    ExactMatrix a(r, k, CycloNum::zero(f)), b(k, c, CycloNum::zero(f));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) a(i, j) = fx::random_cyclo(gen, f);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < c; ++j) b(i, j) = fx::random_cyclo(gen, f);
    return a * b;
}

} // namespace

TEST(RankKernel, Identity) {
    const auto q = CycloField::make(1);
    ExactMatrix m(3, 3, CycloNum::zero(q));
    for (int i = 0; i < 3; ++i) m(i, i) = CycloNum::one(q);
    const auto rk = rank_and_kernel(m);
    EXPECT_EQ(rk.rank, 3u);
    EXPECT_TRUE(rk.kernel.empty());
}

TEST(RankKernel, GaussianExample) {
    const auto f = CycloField::make(4);
    ExactMatrix m(2, 2, CycloNum::zero(f));
    m(0, 0) = parse_cyclo("1", f);
    m(0, 1) = parse_cyclo("i", f);
    m(1, 0) = parse_cyclo("i", f);
    m(1, 1) = parse_cyclo("-1", f);
    const auto rk = rank_and_kernel(m);
    ASSERT_EQ(rk.rank, 1u);
    ASSERT_EQ(rk.kernel.size(), 1u);
    const auto& v = rk.kernel[0];
    // x + i y = 0, so the kernel is spanned by (1, i); (i, 1) is not in it
    EXPECT_EQ(v[1], parse_cyclo("i", f) * v[0]);
    EXPECT_FALSE(v[0].is_zero());
    EXPECT_FALSE((m(0, 0) * parse_cyclo("i", f) + m(0, 1)).is_zero());
}

TEST(RankKernel, NoRows) {
    const auto q = CycloField::make(1);
    ExactMatrix m(0, 4, CycloNum::zero(q));
    const auto rk = rank_and_kernel(m);
    EXPECT_EQ(rk.rank, 0u);
    ASSERT_EQ(rk.kernel.size(), 4u);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(rk.kernel[j][i].is_zero(), i != j);
}

TEST(RankKernel, RandomRankNullity) {
    std::mt19937_64 gen(2024);
    const FieldPtr fields[] = {CycloField::make(1), CycloField::make(4), CycloField::make(12)};
    for (int t = 0; t < 100; ++t) {
        const auto& f = fields[t % 3];
        const std::size_t r = 1 + gen() % 6, c = 1 + gen() % 6, k = gen() % 5;
        const auto m = random_product(gen, f, r, k, c);
        const auto rk = rank_and_kernel(m);
        EXPECT_EQ(rk.rank + rk.kernel.size(), c);
        EXPECT_LE(rk.rank, std::min({r, c, k}));
        EXPECT_EQ(rank(m), rk.rank);
        for (const auto& v : rk.kernel) EXPECT_TRUE(all_zero(apply(m, v)));
        // kernel vectors are independent
        ExactMatrix kv(c, rk.kernel.size(), m.zero());
        for (std::size_t j = 0; j < rk.kernel.size(); ++j) kv.set_column(j, rk.kernel[j]);
        EXPECT_EQ(rank(kv), rk.kernel.size());
    }
}

TEST(Solve, ReportsColumnsOutsideSpan) {
    std::mt19937_64 gen(5);
    const auto f = CycloField::make(4);
    const auto a = random_product(gen, f, 5, 2, 3);
    ExactMatrix x(3, 2, a.zero());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) x(i, j) = fx::random_cyclo(gen, f);
    ExactMatrix b = a * x;
    ExactMatrix extra(5, 1, a.zero());
    for (std::size_t i = 0; i < 5; ++i) extra(i, 0) = fx::random_cyclo(gen, f);
    b = b.hcat(extra);
    const auto s = solve(a, b);
    ASSERT_EQ(s.unsolvable, std::vector<std::size_t>{2});
    const auto ax = a * s.x;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(ax(i, j), b(i, j));
}
