#include <gtest/gtest.h>

#include <map>
#include <random>

#include "arrcoh/aomoto.hpp"
#include "support.hpp"

using namespace arrcoh;

namespace {

const FieldPtr Q = CycloField::make(1);

std::vector<Rational> rats(std::initializer_list<std::pair<long, long>> v) {
    std::vector<Rational> out;
    for (auto [n, d] : v) out.push_back(make_rational(n, d));
    return out;
}

// Lambda^2 of the affine lines modulo the concurrency relations and the
// pairs meeting on the deleted line; no OS basis involved
struct Quotient {
    std::map<std::pair<int, int>, std::size_t> pair_index;
    ExactMatrix relations{0, 0, CycloNum::zero(Q)};
    std::size_t rank_rel = 0;
};

Quotient brute_quotient(const LineIncidence& inc, int ds) {
    Quotient q;
    const auto lines = affine_lines(inc.d(), ds);
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b) q.pair_index[{lines[a], lines[b]}] = q.pair_index.size();
    std::vector<std::vector<std::pair<std::size_t, int>>> rels;
    for (int j : lines)
        for (int k : lines)
            if (j < k && inc.contains(inc.point_of(j, k), ds)) rels.push_back({{q.pair_index[{j, k}], 1}});
    for (const auto& p : inc.points())
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                for (std::size_t c = b + 1; c < p.size(); ++c) {
                    const int i = p[a], j = p[b], k = p[c];
                    if (i == ds || j == ds || k == ds) continue;
                    rels.push_back({{q.pair_index[{i, j}], 1}, {q.pair_index[{j, k}], 1}, {q.pair_index[{i, k}], -1}});
                }
    q.relations = ExactMatrix(q.pair_index.size(), rels.size(), CycloNum::zero(Q));
    for (std::size_t c = 0; c < rels.size(); ++c)
        for (auto [r, s] : rels[c]) q.relations(r, c) += CycloNum(Q, Rational(s));
    q.rank_rel = rank(q.relations);
    return q;
}

// rank of omega^alpha ∧ on A^1 computed inside the exterior algebra
std::size_t brute_rank(const LineIncidence& inc, const ResidueAssignment& ra, const Quotient& q) {
    const auto lines = affine_lines(inc.d(), ra.deleted);
    ExactMatrix img(q.pair_index.size(), lines.size(), CycloNum::zero(Q));
    for (std::size_t c = 0; c < lines.size(); ++c) {
        const int k = lines[c];
        for (int j : lines) {
            if (j == k) continue;
            const auto key = j < k ? std::make_pair(j, k) : std::make_pair(k, j);
            const Rational s = j < k ? ra[j] : Rational(-ra[j]);
            img(q.pair_index.at(key), c) += CycloNum(Q, s);
        }
    }
    return rank(q.relations.hcat(img)) - q.rank_rel;
}

ResidueAssignment random_alpha(std::mt19937_64& gen, int d, int ds, long den) {
    std::vector<Rational> a;
    Rational s(0);
    for (int k = 1; k < d; ++k) {
        a.push_back(make_rational(static_cast<long>(gen() % (4 * den)) - 2 * den, den));
        s += a.back();
    }
    a.push_back(-s);
    return make_residues(std::move(a), ds);
}

const char* kSmall[] = {"triangle", "near_pencil", "ex26a", "ex26b"};

} // namespace

TEST(OS2, Dimensions) {
    const auto tri = os2_build(fx::incidence("triangle"), 3);
    EXPECT_EQ(tri.dim(), 1u);
    ASSERT_EQ(tri.basis().size(), 1u);
    EXPECT_EQ(fx::incidence("triangle").point(tri.basis()[0].first), (std::vector<int>{1, 2}));
    EXPECT_EQ(tri.basis()[0].second, 2);
    EXPECT_EQ(os2_build(fx::incidence("near_pencil"), 4).dim(), 2u);
}

TEST(OS2, BruteForceQuotient) {
    for (const char* name : kSmall) {
        const auto inc = fx::incidence(name);
        for (int ds = 1; ds <= inc.d(); ++ds) {
            const auto q = brute_quotient(inc, ds);
            EXPECT_EQ(os2_build(inc, ds).dim(), q.pair_index.size() - q.rank_rel) << name << " " << ds;
        }
    }
}

TEST(OS2, ExpansionSupportedOnOnePoint) {
    const auto inc = fx::incidence("ex26a");
    const OSDegree2 os(inc, 9);
    for (int j = 1; j <= 9; ++j)
        for (int k = 1; k <= 9; ++k) {
            if (j == k) continue;
            const std::size_t p = inc.point_of(j, k);
            const auto [lo, hi] = os.block(p);
            const auto v = os.expand(j, k);
            if (inc.contains(p, 9)) EXPECT_TRUE(v.empty());
            for (auto [i, c] : v) {
                EXPECT_GE(i, lo);
                EXPECT_LT(i, hi);
            }
            // antisymmetry
            auto w = os.expand(k, j);
            for (auto& [i, c] : w) c = -c;
            EXPECT_EQ(v, w);
        }
}

TEST(Residues, FromSubset) {
    const auto a = residues_from_subset(9, 3, {4, 5, 9}, 9);
    for (int k = 1; k <= 9; ++k)
        EXPECT_EQ(a[k], (k == 4 || k == 5 || k == 9) ? make_rational(2, 3) : make_rational(-1, 3));
    const auto b = residues_from_subset(4, 2, {3, 4}, 4);
    EXPECT_EQ(b.alpha, rats({{-1, 2}, {-1, 2}, {1, 2}, {1, 2}}));
    try {
        (void)residues_from_subset(9, 3, {4, 5}, 9);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeMismatch);
    }
}

TEST(Esv, Examples) {
    const auto np = fx::incidence("near_pencil");
    EXPECT_TRUE(esv_check(np, make_residues(rats({{-1, 2}, {-1, 2}, {1, 2}, {1, 2}}), 4)).pass);

    const auto ex = fx::incidence("ex26a");
    const auto rep = esv_check(ex, residues_from_subset(9, 3, {4, 5, 9}, 9));
    EXPECT_FALSE(rep.pass);
    std::set<std::vector<int>> edges;
    for (const auto& v : rep.violations) {
        edges.insert(v.edge);
        EXPECT_EQ(v.alpha_sum, 1);
    }
    EXPECT_EQ(edges, (std::set<std::vector<int>>{{2, 4, 9}, {3, 5, 9}}));

    const auto line = esv_check(np, make_residues(rats({{1, 1}, {-1, 2}, {-1, 2}, {0, 1}}), 4));
    ASSERT_FALSE(line.pass);
    EXPECT_EQ(line.violations[0].edge, std::vector<int>{1});
}

TEST(Aomoto, Triangle) {
    const auto r = aomoto_cohomology(fx::incidence("triangle"), make_residues(rats({{1, 3}, {1, 3}, {-2, 3}}), 3));
    EXPECT_EQ(std::vector<int>({r.h0, r.h1, r.h2}), std::vector<int>({0, 0, 0}));
    EXPECT_EQ(r.rank_M, 1u);
    EXPECT_EQ(r.certified, Certified::ESV);
}

TEST(Aomoto, NearPencil) {
    const auto r =
        aomoto_cohomology(fx::incidence("near_pencil"), make_residues(rats({{-1, 2}, {-1, 2}, {1, 2}, {1, 2}}), 4));
    EXPECT_EQ(std::vector<int>({r.h0, r.h1, r.h2}), std::vector<int>({0, 0, 0}));
    EXPECT_EQ(r.rank_M, 2u);
    EXPECT_EQ(r.dim_A2, 2u);
    EXPECT_EQ(r.certified, Certified::ESV);
}

TEST(Aomoto, TrivialAssignment) {
    try {
        (void)aomoto_cohomology(fx::incidence("triangle"), make_residues(rats({{1, 1}, {-1, 1}, {0, 1}}), 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TrivialAssignment);
    }
}

TEST(Aomoto, RankMatchesExteriorAlgebra) {
    std::mt19937_64 gen(17);
    for (const char* name : kSmall) {
        const auto inc = fx::incidence(name);
        for (int ds = 1; ds <= inc.d(); ++ds) {
            const auto q = brute_quotient(inc, ds);
            for (int t = 0; t < 6; ++t) {
                const auto ra = random_alpha(gen, inc.d(), ds, 1 + t % 4);
                if (ra.trivial()) continue;
                EXPECT_EQ(aomoto_cohomology(inc, ra).rank_M, brute_rank(inc, ra, q)) << name << " " << ds;
            }
        }
    }
}

TEST(Aomoto, EulerInvariance) {
    std::mt19937_64 gen(99);
    for (const char* name : kSmall) {
        const auto inc = fx::incidence(name);
        for (int t = 0; t < 100; ++t) {
            const int ds = 1 + static_cast<int>(gen() % inc.d());
            const auto ra = random_alpha(gen, inc.d(), ds, 2 + t % 5);
            if (ra.trivial()) continue;
            const auto r = aomoto_cohomology(inc, ra);
            EXPECT_EQ(r.h0 - r.h1 + r.h2, poset_summary(inc, ds).euler) << name;
            EXPECT_EQ(r.h0, 0);
        }
    }
}

TEST(Aomoto, GenericVanishing) {
    std::mt19937_64 gen(5);
    for (const char* name : kSmall) {
        const auto inc = fx::incidence(name);
        int tested = 0;
        for (int t = 0; t < 200 && tested < 40; ++t) {
            const auto ra = random_alpha(gen, inc.d(), inc.d(), 7);
            bool generic = !ra.trivial() && esv_check(inc, ra).pass;
            for (const auto& p : inc.points())
                if (is_integer(ra.sum_over(p))) generic = false;
            if (!generic) continue;
            ++tested;
            EXPECT_EQ(aomoto_cohomology(inc, ra).h1, 0) << name;
        }
        EXPECT_GT(tested, 0) << name;
    }
}

// at a double point {j,k} the component of omega^beta ∧ omega^alpha is
// (beta_j alpha_k - beta_k alpha_j) e; when it vanishes, alpha_p beta_k =
// beta_p alpha_k must hold
TEST(Aomoto, DoublePointCoupling) {
    std::mt19937_64 gen(8);
    const auto inc = fx::incidence("ex26a");
    const OSDegree2 os(inc, 9);
    int vanished = 0;
    for (int t = 0; t < 200; ++t) {
        const auto alpha = random_alpha(gen, 9, 9, 2);
        ResidueAssignment beta = t % 2 ? random_alpha(gen, 9, 9, 2) : alpha;
        if (t % 4 == 0)
            for (auto& b : beta.alpha) b *= 3;
        for (std::size_t p = 0; p < inc.num_points(); ++p) {
            const auto& ip = inc.point(p);
            if (ip.size() != 2 || inc.contains(p, 9)) continue;
            Rational comp(0);
            for (int j : ip)
                for (int k : ip)
                    for (auto [i, c] : os.expand(j, k)) comp += beta[j] * alpha[k] * c;
            if (comp != 0) continue;
            ++vanished;
            const Rational ap = alpha.sum_over(ip), bp = beta.sum_over(ip);
            for (int k : ip) EXPECT_EQ(ap * beta[k], bp * alpha[k]);
        }
    }
    EXPECT_GT(vanished, 0);
}

TEST(Milnor, Ex26aUncertified) {
    const auto m = milnor_report(fx::incidence("ex26a"), 3, {4, 5, 9}, 9);
    EXPECT_EQ(m.aomoto.certified, Certified::NONE);
    EXPECT_FALSE(m.h1_milnor.has_value());
    EXPECT_TRUE(m.euler_identity);
    EXPECT_EQ(m.exponent, make_rational(1, 3));
}
