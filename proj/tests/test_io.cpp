#include <gtest/gtest.h>

#include "arrcoh/io.hpp"
#include "support.hpp"

using namespace arrcoh;
using io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST(Documents, ArrangementRoundTrip) {
    for (const char* name : {"triangle", "near_pencil", "ex26a", "ex26b"}) {
        const auto arr = fx::arrangement(name);
        const auto text = io::dump(io::arrangement_doc(arr));
        const auto again = io::parse_arrangement(Json::parse(text));
        EXPECT_EQ(io::dump(io::arrangement_doc(again)), text) << name;
        EXPECT_EQ(again.size(), arr.size());
    }
}

TEST(Documents, IncidenceRoundTrip) {
    for (const char* name : {"ex26a", "g31sec"}) {
        const auto inc = fx::incidence(name);
        const auto text = io::dump(io::incidence_doc(inc));
        const auto again = io::parse_incidence(Json::parse(text));
        EXPECT_EQ(again.points(), inc.points()) << name;
        EXPECT_EQ(io::dump(io::incidence_doc(again)), text);
    }
}

TEST(Documents, PrettyPrinter) {
    Json j;
    j["a"] = Json::array({1, 2});
    j["b"] = Json::object();
    j["c"] = Json::array({Json::array({1}), "x"});
    EXPECT_EQ(io::dump(j), "{\n  \"a\": [1, 2],\n  \"b\": {},\n  \"c\": [\n    [1],\n    \"x\"\n  ]\n}\n");
}

TEST(Documents, ArrangementErrors) {
    EXPECT_EQ(kind_of([] { (void)io::parse_arrangement(Json::parse(R"({"cyclotomic_order": 1})")); }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] {
                  (void)io::parse_arrangement(Json::parse(
                      R"({"cyclotomic_order": 1, "ambient_projective_dim": 4, "hyperplanes": []})"));
              }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] {
                  (void)io::parse_arrangement(Json::parse(
                      R"({"cyclotomic_order": 4, "ambient_projective_dim": 2, "hyperplanes": [[1, 0]]})"));
              }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] {
                  (void)io::parse_arrangement(Json::parse(
                      R"({"cyclotomic_order": 4, "ambient_projective_dim": 2, "hyperplanes": [["1", "q", 0]]})"));
              }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] {
                  (void)io::parse_arrangement(Json::parse(
                      R"({"cyclotomic_order": 4, "ambient_projective_dim": 2, "hyperplanes": [[0, 0, 0]]})"));
              }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { (void)io::read_json_file("/nonexistent/file.json"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { (void)io::load_incidence(Json::parse(R"({"foo": 1})")); }), ErrorKind::ParseError);
}

TEST(Scalars, Rationals) {
    EXPECT_EQ(io::parse_rational("-2/4"), make_rational(-1, 2));
    EXPECT_EQ(io::parse_rational(" +3 "), Rational(3));
    EXPECT_EQ(io::parse_rational_list("1/3,1/3,-2/3").size(), 3u);
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1/-2", "--1"})
        EXPECT_EQ(kind_of([bad] { (void)io::parse_rational(bad); }), ErrorKind::ParseError) << bad;
    EXPECT_EQ(io::parse_int_list("4,5,9"), (std::vector<int>{4, 5, 9}));
    EXPECT_EQ(kind_of([] { (void)io::parse_int_list("4,x"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { (void)io::parse_int_list("4,5a"); }), ErrorKind::ParseError);
}

TEST(Residues, ExplicitAndSubset) {
    const auto ra = io::parse_residues(Json::parse(R"({"alpha": ["1/3", "1/3", "-2/3"], "deleted": 3})"), 3);
    EXPECT_EQ(ra.alpha[2], make_rational(-2, 3));
    EXPECT_EQ(ra.deleted, 3);
    const auto back = io::parse_residues(io::residues_doc(ra), 3);
    EXPECT_EQ(back.alpha, ra.alpha);

    const auto sub = io::parse_residues(Json::parse(R"({"k": 3, "subset": [4, 5, 9], "deleted": 9})"), 9);
    EXPECT_EQ(sub.alpha, residues_from_subset(9, 3, {4, 5, 9}, 9).alpha);

    EXPECT_EQ(kind_of([] { (void)io::parse_residues(Json::parse(R"({"alpha": ["1", "-1"], "deleted": 1})"), 3); }),
              ErrorKind::SizeMismatch);
    EXPECT_EQ(kind_of([] { (void)io::parse_residues(Json::parse(R"({"alpha": [0.5], "deleted": 1})"), 1); }),
              ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { (void)io::parse_residues(Json::parse(R"({"k": 3, "deleted": 9})"), 9); }),
              ErrorKind::ParseError);
}

TEST(Residues, FixtureDocuments) {
    const auto a5 = io::parse_residues(fx::load("a5.json"), 60);
    EXPECT_EQ(a5.deleted, 1);
    const auto r2 = io::parse_residues(fx::load("minus_one.json"), 60);
    Rational s(0);
    for (const auto& a : r2.alpha) s += a;
    EXPECT_EQ(s, 0);
}
