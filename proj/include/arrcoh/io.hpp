#pragma once

// Documents (arrangement, incidence, residues) and reports, as JSON with
// scalar arrays kept on one line, or as plain text.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "arrcoh/aomoto.hpp"
#include "arrcoh/g31.hpp"
#include "arrcoh/literal.hpp"
#include "arrcoh/polefilt.hpp"

namespace arrcoh::io {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

namespace detail {

inline void pretty(const Json& j, std::ostringstream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string pad2(static_cast<std::size_t>(indent + 2), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        std::size_t n = 0;
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << pad2 << Json(it.key()).dump() << ": ";
            pretty(it.value(), os, indent + 2);
            os << (++n < j.size() ? ",\n" : "\n");
        }
        os << pad << "}";
    } else if (j.is_array()) {
        const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
        if (flat) {
            os << "[";
            for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
            os << "]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << pad2;
            pretty(j[i], os, indent + 2);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << "]";
    } else {
        os << j.dump();
    }
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

inline int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
    return j.get<int>();
}

inline std::vector<int> as_int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be a list");
    std::vector<int> out;
    for (const auto& e : j) out.push_back(as_int(e, what));
    return out;
}

} // namespace detail

/// Pretty JSON text ending in a newline.
inline std::string dump(const Json& j) {
    std::ostringstream os;
    detail::pretty(j, os, 0);
    os << "\n";
    return os.str();
}

inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    const auto slash = s.find('/');
    auto digits = [](const std::string& t, bool sign) {
        std::size_t i = sign && !t.empty() && (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) throw Error(ErrorKind::ParseError, "bad rational \"" + text + "\"");
    Integer n(num[0] == '+' ? num.substr(1) : num), dd(den);
    if (dd == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + text + "\"");
    Rational q(n, dd);
    q.canonicalize();
    return q;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad integer \"" + item + "\"");
        }
    }
    return out;
}

// ---- documents ----

inline bool is_arrangement_doc(const Json& j) { return j.is_object() && j.contains("hyperplanes"); }
inline bool is_incidence_doc(const Json& j) { return j.is_object() && j.contains("points"); }

inline Arrangement parse_arrangement(const Json& j) {
    const int n = detail::as_int(detail::field(j, "cyclotomic_order"), "cyclotomic_order");
    const int dim = detail::as_int(detail::field(j, "ambient_projective_dim"), "ambient_projective_dim");
    if (n < 1) throw Error(ErrorKind::ParseError, "cyclotomic_order must be >= 1");
    if (dim != 2 && dim != 3) throw Error(ErrorKind::ParseError, "ambient_projective_dim must be 2 or 3");
    const auto f = CycloField::make(static_cast<unsigned>(n));
    const auto& rows = detail::field(j, "hyperplanes");
    if (!rows.is_array()) throw Error(ErrorKind::ParseError, "hyperplanes must be a list");
    std::vector<Hyperplane> hs;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dim + 1)
            throw Error(ErrorKind::ParseError, "hyperplane " + std::to_string(r + 1) + " needs " +
                                                   std::to_string(dim + 1) + " entries");
        std::vector<CycloNum> c;
        for (const auto& e : rows[r]) {
            if (e.is_string()) c.push_back(parse_cyclo(e.get<std::string>(), f));
            else if (e.is_number_integer()) c.push_back(CycloNum(f, Rational(e.get<long>())));
            else throw Error(ErrorKind::ParseError, "hyperplane " + std::to_string(r + 1) + ": bad entry");
        }
        if (std::all_of(c.begin(), c.end(), [](const CycloNum& x) { return x.is_zero(); }))
            throw Error(ErrorKind::InvalidArgument, "hyperplane " + std::to_string(r + 1) + " is zero");
        hs.emplace_back(std::move(c));
    }
    return Arrangement(f, dim + 1, std::move(hs));
}

inline Json arrangement_doc(const Arrangement& arr) {
    Json rows = Json::array();
    for (const auto& h : arr.hyperplanes()) {
        Json row = Json::array();
        for (const auto& c : h.coeffs()) row.push_back(format_cyclo(c));
        rows.push_back(row);
    }
    Json j;
    j["cyclotomic_order"] = arr.field()->order();
    j["ambient_projective_dim"] = arr.ambient() - 1;
    j["hyperplanes"] = rows;
    return j;
}

inline LineIncidence parse_incidence(const Json& j) {
    const int d = detail::as_int(detail::field(j, "d"), "d");
    const auto& pts = detail::field(j, "points");
    if (!pts.is_array()) throw Error(ErrorKind::ParseError, "points must be a list");
    std::vector<std::vector<int>> points;
    for (const auto& p : pts) points.push_back(detail::as_int_list(p, "point"));
    return LineIncidence(d, std::move(points));
}

inline Json incidence_doc(const LineIncidence& inc) {
    Json j;
    j["d"] = inc.d();
    j["points"] = inc.points();
    return j;
}

/// Incidence of an arrangement document (plane: exact points; space: the
/// codim-2 edges) or of an incidence document.
inline LineIncidence load_incidence(const Json& j) {
    if (is_arrangement_doc(j)) {
        const auto arr = parse_arrangement(j);
        return arr.ambient() == 3 ? incidence_p2(arr) : codim2_edges_p3(arr);
    }
    if (is_incidence_doc(j)) return parse_incidence(j);
    throw Error(ErrorKind::ParseError, "input is neither an arrangement nor an incidence document");
}

inline ResidueAssignment parse_residues(const Json& j, int d) {
    const int deleted = detail::as_int(detail::field(j, "deleted"), "deleted");
    if (j.contains("alpha")) {
        std::vector<Rational> alpha;
        for (const auto& a : j.at("alpha")) {
            if (a.is_string()) alpha.push_back(parse_rational(a.get<std::string>()));
            else if (a.is_number_integer()) alpha.push_back(Rational(a.get<long>()));
            else throw Error(ErrorKind::ParseError, "alpha entries must be rational strings");
        }
        if (static_cast<int>(alpha.size()) != d)
            throw Error(ErrorKind::SizeMismatch, "alpha has " + std::to_string(alpha.size()) + " entries, d = " +
                                                     std::to_string(d));
        return make_residues(std::move(alpha), deleted);
    }
    const int k = detail::as_int(detail::field(j, "k"), "k");
    return residues_from_subset(d, k, detail::as_int_list(detail::field(j, "subset"), "subset"), deleted);
}

inline Json residues_doc(const ResidueAssignment& ra) {
    Json alpha = Json::array();
    for (const auto& a : ra.alpha) alpha.push_back(a.get_str());
    Json j;
    j["alpha"] = alpha;
    j["deleted"] = ra.deleted;
    return j;
}

inline Json subset_doc(const g31::SubsetData& s) {
    Json j;
    j["k"] = s.k;
    j["subset"] = s.subset;
    j["deleted"] = s.deleted;
    return j;
}

// ---- reports ----

inline Json violations_json(const EsvReport& esv) {
    Json v = Json::array();
    for (const auto& e : esv.violations) {
        Json x;
        x["edge"] = e.edge;
        x["alpha"] = e.alpha_sum.get_str();
        v.push_back(x);
    }
    return v;
}

inline Json esv_json(const EsvReport& esv) {
    Json j;
    j["pass"] = esv.pass;
    j["violations"] = violations_json(esv);
    return j;
}

inline Json verdict_json(const Verdict& v) {
    Json w = Json::array();
    for (const auto& x : v.witnesses) {
        Json e;
        e["note"] = x.note;
        e["lines"] = x.lines;
        e["points"] = x.points;
        w.push_back(e);
    }
    Json j;
    j["pass"] = v.pass;
    j["witnesses"] = w;
    return j;
}

inline Json report_json(const LineIncidence& inc, const ConditionReport& r) {
    Json bad = Json::array();
    for (auto p : r.locus.bad_points) bad.push_back(inc.point(p));
    Json j;
    j["bad_points"] = bad;
    j["Ib"] = r.locus.Ib;
    j["Ic"] = r.locus.Ic;
    Json c;
    c["a"] = verdict_json(r.a);
    c["b_affine"] = verdict_json(r.b_affine);
    c["b_literal"] = verdict_json(r.b_literal);
    c["c"] = verdict_json(r.c);
    c["c_prime"] = verdict_json(r.c_prime);
    c["d"] = verdict_json(r.d);
    j["conditions"] = c;
    j["variant"] = r.variant == CVariant::Prime ? "c_prime" : "c";
    j["b_variants_disagree"] = r.b_affine.pass != r.b_literal.pass;
    j["overall"] = r.overall;
    return j;
}

inline Json aomoto_json(const AomotoResult& r) {
    Json j;
    j["h"] = {r.h0, r.h1, r.h2};
    j["rank"] = r.rank_M;
    j["dim_A2"] = r.dim_A2;
    j["euler"] = r.euler;
    j["certified"] = to_string(r.certified);
    j["violations"] = violations_json(r.esv);
    return j;
}

inline Json milnor_json(const MilnorReport& m) {
    Json j;
    j["k"] = m.k;
    j["d"] = m.d;
    j["exponent"] = m.exponent.get_str();
    j["subset"] = m.subset;
    j["h"] = {m.aomoto.h0, m.aomoto.h1, m.aomoto.h2};
    j["rank"] = m.aomoto.rank_M;
    j["certified"] = to_string(m.aomoto.certified);
    j["violations"] = violations_json(m.aomoto.esv);
    j["h1_milnor"] = m.h1_milnor ? Json(*m.h1_milnor) : Json(nullptr);
    j["euler_identity"] = m.euler_identity;
    return j;
}

inline Json betti_json(const LineIncidence& inc, const PosetSummary& s) {
    Json rho = Json::array();
    for (const auto& [p, r] : s.rho_points) {
        Json e;
        e["point"] = inc.point(p);
        e["rho"] = r;
        rho.push_back(e);
    }
    Json j;
    j["deleted"] = s.deleted;
    j["betti"] = {s.b0, s.b1, s.b2};
    j["euler"] = s.euler;
    j["rho"] = rho;
    return j;
}

inline Json search_json(int k, const std::string& mode, const SearchResult& r) {
    Json j;
    j["k"] = k;
    j["mode"] = mode;
    j["subsets"] = r.subsets;
    j["count"] = r.subsets.size();
    j["truncated"] = r.truncated;
    j["nodes"] = r.nodes;
    return j;
}

inline Json lambda_json(const g31::LambdaTable& t) {
    Json j;
    Json rows = Json::object();
    for (int s = 0; s < 3; ++s) {
        Json m = Json::array();
        for (int a = 0; a < 3; ++a) {
            Json row = Json::array();
            for (int b = 0; b < 3; ++b) row.push_back(t[a][b][s]);
            m.push_back(row);
        }
        rows[std::to_string(g31::kMults[s])] = m;
    }
    j["lambda"] = rows;
    Json ids = Json::array();
    for (int a = 0; a < 3; ++a) {
        Json e;
        Json per_stratum = Json::array(), per_mult = Json::array();
        for (int b = 0; b < 3; ++b) per_stratum.push_back(t[a][b][0] + t[a][b][1] + t[a][b][2]);
        for (int s = 0; s < 3; ++s) per_mult.push_back(t[a][0][s] + t[a][1][s] + t[a][2][s]);
        e["j"] = a + 1;
        e["by_stratum"] = per_stratum;
        e["by_mult"] = per_mult;
        ids.push_back(e);
    }
    j["row_sums"] = ids;
    return j;
}

inline Json components_json(const g31::G31& g, const std::vector<std::vector<int>>& comps) {
    Json list = Json::array();
    for (const auto& c : comps) {
        Json labels = Json::array(), prods = Json::array();
        std::set<int> pr;
        for (int k : c) {
            const auto& l = g.labels[static_cast<std::size_t>(k - 1)];
            labels.push_back(l.to_string());
            pr.insert(l.prod_exponent() == 0 ? 1 : -1);
        }
        Json e;
        e["members"] = c;
        e["labels"] = labels;
        e["prod"] = std::vector<int>(pr.begin(), pr.end());
        list.push_back(e);
    }
    Json j;
    j["count"] = comps.size();
    j["components"] = list;
    return j;
}

inline Json labels_json(const g31::G31& g) {
    Json list = Json::array();
    for (std::size_t k = 0; k < g.labels.size(); ++k) {
        Json e;
        e["index"] = k + 1;
        e["label"] = g.labels[k].to_string();
        e["stratum"] = g.labels[k].stratum();
        list.push_back(e);
    }
    return list;
}

struct PoleSummary {
    PoleComplex pc;
    PoleCohomology h;
    bool dd_zero = false;
    Injectivity inj;
};

inline Json pole_json(const PoleSummary& s) {
    Json j;
    j["relabeling"] = s.pc.order;
    j["dims"] = {s.pc.dim(0), s.pc.dim(1), s.pc.dim(2)};
    j["gr_dims"] = {s.pc.gr_dim(0), s.pc.gr_dim(1), s.pc.gr_dim(2)};
    j["h"] = {s.h.h0, s.h.h1, s.h.h2};
    j["h1_pole"] = s.h.h1;
    j["h1_aomoto"] = s.inj.h1_aomoto ? Json(*s.inj.h1_aomoto) : Json(nullptr);
    j["euler"] = s.h.euler;
    j["dd_zero"] = s.dd_zero;
    Json inj;
    inj["pass"] = s.inj.pass;
    inj["cocycles"] = s.inj.cocycles;
    inj["boundaries"] = s.inj.boundaries;
    inj["kernel"] = s.inj.kernel;
    inj["alarm"] = s.inj.alarm;
    j["injectivity"] = inj;
    return j;
}

// ---- text ----

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

inline std::string point_text(const std::vector<int>& p) { return "{" + join(p) + "}"; }

inline std::string incidence_text(const LineIncidence& inc) {
    std::ostringstream os;
    os << "d = " << inc.d() << ", " << inc.num_points() << " points\n";
    for (const auto& [m, n] : multiplicity_census(inc)) os << "  mult " << m << ": " << n << "\n";
    for (const auto& p : inc.points()) os << "  " << point_text(p) << "\n";
    return os.str();
}

inline std::string verdict_text(const char* name, const Verdict& v) {
    std::ostringstream os;
    os << "  (" << name << ") " << (v.pass ? "pass" : "FAIL") << "\n";
    for (const auto& w : v.witnesses) {
        os << "      " << w.note;
        if (!w.lines.empty()) os << " lines " << join(w.lines);
        for (const auto& p : w.points) os << " " << point_text(p);
        os << "\n";
    }
    return os.str();
}

inline std::string report_text(const LineIncidence& inc, const ConditionReport& r) {
    std::ostringstream os;
    os << "bad points:";
    for (auto p : r.locus.bad_points) os << " " << point_text(inc.point(p));
    os << "\nI^b = {" << join(r.locus.Ib) << "} (" << r.locus.Ib.size() << ")\n";
    os << "I^c = {" << join(r.locus.Ic) << "} (" << r.locus.Ic.size() << ")\n";
    os << verdict_text("a", r.a) << verdict_text("b, affine", r.b_affine) << verdict_text("b, literal", r.b_literal)
       << verdict_text("c", r.c) << verdict_text("c'", r.c_prime) << verdict_text("d", r.d);
    if (r.b_affine.pass != r.b_literal.pass) os << "note: the two readings of (b) disagree\n";
    os << "overall (with " << (r.variant == CVariant::Prime ? "c'" : "c") << "): " << (r.overall ? "pass" : "FAIL")
       << "\n";
    return os.str();
}

inline std::string esv_text(const EsvReport& e) {
    std::ostringstream os;
    os << "ESV: " << (e.pass ? "pass" : "FAIL") << "\n";
    for (const auto& v : e.violations) os << "  alpha_" << point_text(v.edge) << " = " << v.alpha_sum.get_str() << "\n";
    return os.str();
}

inline std::string aomoto_text(const AomotoResult& r) {
    std::ostringstream os;
    os << "h = (" << r.h0 << ", " << r.h1 << ", " << r.h2 << ")\n";
    os << "rank M = " << r.rank_M << ", dim A^2 = " << r.dim_A2 << ", euler = " << r.euler << "\n";
    os << "certified: " << to_string(r.certified) << "\n";
    return os.str() + (r.esv.pass ? "" : esv_text(r.esv));
}

} // namespace arrcoh::io
