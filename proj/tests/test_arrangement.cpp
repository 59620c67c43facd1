#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace arrcoh;
using arrcoh::io::Json;

namespace {

Arrangement make(unsigned n, int proj, const std::vector<std::vector<std::string>>& rows) {
    Json j;
    j["cyclotomic_order"] = n;
    j["ambient_projective_dim"] = proj;
    j["hyperplanes"] = rows;
    return io::parse_arrangement(j);
}

CycloNum det3(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b, const std::vector<CycloNum>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// concurrency by 3x3 determinants, no intersection points involved
std::set<std::vector<int>> brute_p2(const Arrangement& arr) {
    std::set<std::vector<int>> pts;
    const int d = arr.size();
    for (int j = 1; j <= d; ++j)
        for (int k = j + 1; k <= d; ++k) {
            std::vector<int> p{j, k};
            for (int l = 1; l <= d; ++l)
                if (l != j && l != k && det3(arr[j].coeffs(), arr[k].coeffs(), arr[l].coeffs()).is_zero())
                    p.push_back(l);
            std::sort(p.begin(), p.end());
            pts.insert(p);
        }
    return pts;
}

// X_c contains X_a ∩ X_b iff every 3x3 minor of [a; b; c] vanishes
std::set<std::vector<int>> brute_p3(const Arrangement& arr) {
    std::set<std::vector<int>> edges;
    const int d = arr.size();
    auto drop = [](const std::vector<CycloNum>& v, int col) {
        std::vector<CycloNum> out;
        for (int i = 0; i < 4; ++i)
            if (i != col) out.push_back(v[i]);
        return out;
    };
    for (int a = 1; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b) {
            std::vector<int> e{a, b};
            for (int c = 1; c <= d; ++c) {
                if (c == a || c == b) continue;
                bool all = true;
                for (int col = 0; col < 4 && all; ++col)
                    all = det3(drop(arr[a].coeffs(), col), drop(arr[b].coeffs(), col), drop(arr[c].coeffs(), col))
                              .is_zero();
                if (all) e.push_back(c);
            }
            std::sort(e.begin(), e.end());
            edges.insert(e);
        }
    return edges;
}

std::set<std::vector<int>> as_set(const LineIncidence& inc) { return {inc.points().begin(), inc.points().end()}; }

Arrangement braid() {
    return make(1, 3,
                {{"1", "-1", "0", "0"},
                 {"1", "0", "-1", "0"},
                 {"1", "0", "0", "-1"},
                 {"0", "1", "-1", "0"},
                 {"0", "1", "0", "-1"},
                 {"0", "0", "1", "-1"}});
}

Arrangement tetrahedron() {
    return make(1, 3, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}});
}

} // namespace

TEST(Parse, Canonicalizes) {
    const auto t = make(1, 2, {{"2", "0", "0"}, {"0", "3", "0"}, {"0", "0", "1"}});
    EXPECT_EQ(t.size(), 3);
    EXPECT_EQ(t[1].coeffs()[0], CycloNum::one(t.field()));
    EXPECT_EQ(fx::arrangement("ex26a").size(), 9);
}

TEST(Parse, NotReduced) {
    try {
        (void)make(1, 2, {{"1", "0", "0"}, {"2", "0", "0"}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotReduced);
        EXPECT_NE(std::string(e.what()).find("1 and 2"), std::string::npos);
    }
}

TEST(IncidenceP2, MatchesDeterminantOracle) {
    for (const char* name : {"triangle", "near_pencil", "ex26a", "ex26b"}) {
        const auto arr = fx::arrangement(name);
        const auto inc = incidence_p2(arr);
        EXPECT_EQ(as_set(inc), brute_p2(arr)) << name;
        EXPECT_EQ(pair_count(inc), static_cast<long>(inc.d()) * (inc.d() - 1) / 2) << name;
    }
}

TEST(IncidenceP2, Triangle) {
    const auto inc = incidence_p2(fx::arrangement("triangle"));
    EXPECT_EQ(inc.num_points(), 3u);
    EXPECT_TRUE(dense_points(inc).empty());
}

TEST(IncidenceP2, Ex26a) {
    const auto inc = incidence_p2(fx::arrangement("ex26a"));
    int aff3 = 0, aff2 = 0, inf3 = 0, inf2 = 0;
    std::set<std::vector<int>> inf_triples;
    for (const auto& p : inc.points()) {
        const bool inf = std::binary_search(p.begin(), p.end(), 9);
        ASSERT_LE(p.size(), 3u);
        if (p.size() == 3) {
            (inf ? inf3 : aff3)++;
            if (inf) inf_triples.insert(p);
        } else {
            (inf ? inf2 : aff2)++;
        }
    }
    EXPECT_EQ(aff3, 7);
    EXPECT_EQ(aff2, 5);
    EXPECT_EQ(inf3, 2);
    EXPECT_EQ(inf2, 4);
    EXPECT_EQ(inf_triples, (std::set<std::vector<int>>{{2, 4, 9}, {3, 5, 9}}));
    EXPECT_EQ(dense_points(inc).size(), 9u);
}

TEST(IncidenceP2, Ex26bTwelveTriples) {
    const auto inc = incidence_p2(fx::arrangement("ex26b"));
    EXPECT_EQ(multiplicity_census(inc), (std::map<int, int>{{3, 12}}));
    EXPECT_EQ(dense_points(inc).size(), 12u);
}

TEST(Codim2, SmallArrangements) {
    const auto tet = codim2_edges_p3(tetrahedron());
    EXPECT_EQ(multiplicity_census(tet), (std::map<int, int>{{2, 6}}));
    const auto two = codim2_edges_p3(make(1, 3, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}}));
    EXPECT_EQ(two.points(), (std::vector<std::vector<int>>{{1, 2}}));
    const auto br = codim2_edges_p3(braid());
    EXPECT_EQ(multiplicity_census(br), (std::map<int, int>{{2, 3}, {3, 4}}));
    EXPECT_EQ(as_set(br), brute_p3(braid()));
}

TEST(Poset, Betti) {
    const auto tri = poset_summary(fx::incidence("triangle"), 3);
    EXPECT_EQ(std::vector<int>({tri.b0, tri.b1, tri.b2}), std::vector<int>({1, 2, 1}));
    EXPECT_EQ(tri.euler, 0);
    const auto np = poset_summary(fx::incidence("near_pencil"), 4);
    EXPECT_EQ(std::vector<int>({np.b0, np.b1, np.b2}), std::vector<int>({1, 3, 2}));
    EXPECT_EQ(np.euler, 0);
    EXPECT_THROW(poset_summary(fx::incidence("triangle"), 4), Error);
}

TEST(Poset, AlternatingSumClosure) {
    for (const char* name : {"triangle", "near_pencil", "ex26a", "ex26b"}) {
        const auto inc = fx::incidence(name);
        for (int ds = 1; ds <= inc.d(); ++ds) {
            const auto s = poset_summary(inc, ds);
            EXPECT_EQ(mobius_ranks(inc, ds), s.rho_points) << name << " " << ds;
        }
    }
}

TEST(Poset, EulerIndependentOfDeleted) {
    for (const char* name : {"triangle", "near_pencil", "ex26a", "ex26b", "g31sec"}) {
        const auto inc = fx::incidence(name);
        const int e = poset_summary(inc, 1).euler;
        for (int ds = 2; ds <= inc.d(); ++ds) EXPECT_EQ(poset_summary(inc, ds).euler, e) << name << " " << ds;
    }
}

TEST(GenericSection, Certified) {
    for (const auto& arr : {tetrahedron(), braid(), make(1, 3, {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}})}) {
        const auto sec = generic_section_coords(arr, 0);
        EXPECT_EQ(sec.lines.ambient(), 3);
        EXPECT_EQ(incidence_p2(sec.lines), codim2_edges_p3(arr));
    }
    const auto tet = generic_section_coords(tetrahedron(), 0);
    EXPECT_EQ(incidence_p2(tet.lines).num_points(), 6u);
}

TEST(GenericSection, BudgetExhausted) {
    try {
        (void)generic_section_coords(braid(), 0, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::GenericityExhausted);
    }
}

TEST(Incidence, RejectsBrokenPartition) {
    EXPECT_THROW(LineIncidence(3, {{1, 2}, {1, 3}}), Error);
    EXPECT_THROW(LineIncidence(3, {{1, 2, 3}, {1, 2}}), Error);
    EXPECT_THROW(LineIncidence(3, {{1, 4}, {1, 2, 3}}), Error);
}
