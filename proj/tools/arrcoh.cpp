// arrcoh: twisted cohomology of line arrangements from the command line.
//
// exit codes: 0 ok, 1 precondition violated, 2 parse error,
//             3 conditions not satisfied (check verbs, milnor with NONE)

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "arrcoh/io.hpp"

using namespace arrcoh;
namespace io = arrcoh::io;

namespace {

struct Common {
    std::string format = "text";
    std::uint64_t seed = 0;
};

struct ResidueOpts {
    std::string residues;
    std::string alpha;
    std::optional<int> deleted;
    std::optional<int> k;
    std::string subset;
};

void add_residue_opts(CLI::App* sub, ResidueOpts& r) {
    sub->add_option("--residues", r.residues, "residue document");
    sub->add_option("--alpha", r.alpha, "comma separated rationals");
    sub->add_option("--deleted", r.deleted, "line sent to infinity (default d)");
    sub->add_option("--k", r.k, "Milnor exponent numerator");
    sub->add_option("--subset", r.subset, "comma separated line indices");
}

ResidueAssignment residues_of(const ResidueOpts& r, int d) {
    if (!r.residues.empty()) {
        auto ra = io::parse_residues(io::read_json_file(r.residues), d);
        if (r.deleted) ra = make_residues(ra.alpha, *r.deleted);
        return ra;
    }
    const int deleted = r.deleted.value_or(d);
    if (!r.alpha.empty()) {
        auto alpha = io::parse_rational_list(r.alpha);
        if (static_cast<int>(alpha.size()) != d)
            throw Error(ErrorKind::SizeMismatch,
                        "alpha has " + std::to_string(alpha.size()) + " entries, d = " + std::to_string(d));
        return make_residues(std::move(alpha), deleted);
    }
    if (r.k) return residues_from_subset(d, *r.k, io::parse_int_list(r.subset), deleted);
    throw Error(ErrorKind::InvalidArgument, "give --residues, --alpha, or --k with --subset");
}

void emit(const Common& c, const io::Json& j, const std::string& text) {
    if (c.format == "json") std::cout << io::dump(j);
    else std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arrcoh: Aomoto complexes, applicability checks, pole-order complexes and G31 data"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", common.seed, "seed for generic sections");

    std::string input;
    ResidueOpts ro;
    std::string variant = "c_prime";
    long budget = 1000000;
    std::string mode = "esv";
    int k = 0;
    std::optional<int> deleted;
    bool explicit_coords = false;

    auto* inc_cmd = app.add_subcommand("incidence", "points of a line arrangement or codim-2 edges");
    inc_cmd->add_option("--input", input)->required();

    auto* betti = app.add_subcommand("betti", "Betti numbers of the affine complement");
    betti->add_option("--input", input)->required();
    betti->add_option("--deleted", deleted);

    auto* aomoto = app.add_subcommand("aomoto", "cohomology of the Aomoto complex");
    aomoto->add_option("--input", input)->required();
    add_residue_opts(aomoto, ro);

    auto* esv = app.add_subcommand("check-esv", "ESV/STV condition");
    esv->add_option("--input", input)->required();
    add_residue_opts(esv, ro);

    auto* thm = app.add_subcommand("check-thm1", "bad locus and conditions (a)-(d)");
    thm->add_option("--input", input)->required();
    add_residue_opts(thm, ro);
    thm->add_option("--variant", variant)->check(CLI::IsMember({"c", "c_prime"}));

    auto* milnor = app.add_subcommand("milnor", "monodromy eigenspace of the Milnor fiber");
    milnor->add_option("--input", input)->required();
    add_residue_opts(milnor, ro);
    milnor->add_option("--variant", variant)->check(CLI::IsMember({"c", "c_prime"}));

    auto* pole = app.add_subcommand("polefilt-h1", "H^1 through the pole-order complex");
    pole->add_option("--input", input)->required();
    add_residue_opts(pole, ro);

    auto* search = app.add_subcommand("search-subset", "subsets I with admissible residues");
    search->add_option("--input", input)->required();
    search->add_option("--k", k)->required();
    search->add_option("--deleted", deleted);
    search->add_option("--budget", budget);
    search->add_option("--mode", mode)->check(CLI::IsMember({"esv", "thm1"}));
    search->add_option("--variant", variant)->check(CLI::IsMember({"c", "c_prime"}));

    auto* g31cmd = app.add_subcommand("g31", "the G31 reflection arrangement");
    g31cmd->require_subcommand(1);
    g31cmd->fallthrough();
    auto* g_gen = g31cmd->add_subcommand("generate", "the 60 planes");
    auto* g_table = g31cmd->add_subcommand("table", "lambda table");
    auto* g_comp = g31cmd->add_subcommand("components", "(2)-connected components of Lambda_3");
    auto* g_sixth = g31cmd->add_subcommand("sixth-root", "residue data for exp(-2 pi i/6)");
    auto* g_minus = g31cmd->add_subcommand("minus-one", "residue data for -1");
    auto* g_sec = g31cmd->add_subcommand("section", "generic plane section");
    g_sec->add_flag("--explicit", explicit_coords, "exact coordinates instead of the combinatorial incidence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (inc_cmd->parsed()) {
            const auto inc = io::load_incidence(io::read_json_file(input));
            emit(common, io::incidence_doc(inc), io::incidence_text(inc));
            return 0;
        }
        if (betti->parsed()) {
            const auto inc = io::load_incidence(io::read_json_file(input));
            const auto s = poset_summary(inc, deleted.value_or(inc.d()));
            std::ostringstream os;
            os << "deleted X_" << s.deleted << "\nb = (" << s.b0 << ", " << s.b1 << ", " << s.b2
               << "), euler = " << s.euler << "\n";
            emit(common, io::betti_json(inc, s), os.str());
            return 0;
        }
        const CVariant var = variant == "c" ? CVariant::Strict : CVariant::Prime;
        if (aomoto->parsed()) {
            const auto inc = io::load_incidence(io::read_json_file(input));
            const auto r = aomoto_cohomology(inc, residues_of(ro, inc.d()), var);
            emit(common, io::aomoto_json(r), io::aomoto_text(r));
            return 0;
        }
        if (esv->parsed()) {
            const auto inc = io::load_incidence(io::read_json_file(input));
            const auto r = esv_check(inc, residues_of(ro, inc.d()));
            emit(common, io::esv_json(r), io::esv_text(r));
            return r.pass ? 0 : 3;
        }
        if (thm->parsed()) {
            const auto inc = io::load_incidence(io::read_json_file(input));
            const auto r = check_theorem1(inc, residues_of(ro, inc.d()), var);
            emit(common, io::report_json(inc, r), io::report_text(inc, r));
            return r.overall ? 0 : 3;
        }
        if (milnor->parsed()) {
            const auto inc = io::load_incidence(io::read_json_file(input));
            if (!ro.k) throw Error(ErrorKind::InvalidArgument, "milnor needs --k and --subset");
            const auto m =
                milnor_report(inc, *ro.k, io::parse_int_list(ro.subset), ro.deleted.value_or(inc.d()), var);
            std::ostringstream os;
            os << "lambda = exp(-2 pi i " << m.exponent.get_str() << "), I = {" << io::join(m.subset) << "}\n"
               << io::aomoto_text(m.aomoto);
            if (m.h1_milnor) os << "dim H^1(F_f)_lambda = " << *m.h1_milnor << "\n";
            else os << "dim H^1(F_f)_lambda cannot be certified\n";
            emit(common, io::milnor_json(m), os.str());
            return m.h1_milnor ? 0 : 3;
        }
        if (pole->parsed()) {
            const auto doc = io::read_json_file(input);
            if (!io::is_arrangement_doc(doc)) throw Error(ErrorKind::InvalidArgument, "polefilt-h1 needs coordinates");
            const auto arr = io::parse_arrangement(doc);
            const auto inc = incidence_p2(arr);
            const auto ra = residues_of(ro, arr.size());
            auto pc = build_pole_complex(arr, ra);
            io::PoleSummary s{pc, pole_cohomology(pc), (pc.d1 * pc.d0).is_zero(), connecting_injectivity(pc, inc, ra)};
            std::ostringstream os;
            os << "relabeling (new -> old): " << io::join(pc.order) << "\n";
            os << "dim P_1 = (" << pc.dim(0) << ", " << pc.dim(1) << ", " << pc.dim(2) << "), Gr_1 = ("
               << pc.gr_dim(0) << ", " << pc.gr_dim(1) << ", " << pc.gr_dim(2) << ")\n";
            os << "h = (" << s.h.h0 << ", " << s.h.h1 << ", " << s.h.h2 << "), d^2 = 0: " << (s.dd_zero ? "yes" : "NO")
               << "\n";
            if (s.inj.h1_aomoto) os << "Aomoto h^1 = " << *s.inj.h1_aomoto << "\n";
            os << "connecting map injective: " << (s.inj.pass ? "yes" : "no") << "\n";
            if (s.inj.alarm) os << "ALARM: h^1 routes disagree although the conditions pass\n";
            emit(common, io::pole_json(s), os.str());
            return s.inj.alarm ? 3 : 0;
        }
        if (search->parsed()) {
            const auto inc = io::load_incidence(io::read_json_file(input));
            const auto r = search_subset(inc, k, budget, mode == "esv" ? SearchMode::Esv : SearchMode::Theorem1,
                                         deleted.value_or(inc.d()), var);
            std::ostringstream os;
            os << r.subsets.size() << " subset(s) of size " << k << (r.truncated ? " (budget exhausted)" : "")
               << "\n";
            for (const auto& s : r.subsets) os << "  {" << io::join(s) << "}\n";
            emit(common, io::search_json(k, mode, r), os.str());
            return 0;
        }
        if (g31cmd->parsed()) {
            const auto g = g31::generate();
            if (g_gen->parsed()) {
                std::ostringstream os;
                for (std::size_t i = 0; i < g.labels.size(); ++i)
                    os << i + 1 << "  " << g.labels[i].to_string() << "  Lambda_" << g.labels[i].stratum() << "\n";
                emit(common, io::arrangement_doc(g.arrangement), os.str());
            } else if (g_table->parsed()) {
                const auto t = g31::lambda_table(g);
                std::ostringstream os;
                os << "lambda^m_{j,j'}   (j,j') = 11 12 13 21 22 23 31 32 33\n";
                for (int s = 0; s < 3; ++s) {
                    os << "  m = " << g31::kMults[s] << ":";
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b) os << " " << t[a][b][s];
                    os << "\n";
                }
                emit(common, io::lambda_json(t), os.str());
            } else if (g_comp->parsed()) {
                const auto comps = g31::two_connectivity(g);
                std::ostringstream os;
                os << comps.size() << " component(s)\n";
                for (const auto& c : comps) os << "  {" << io::join(c) << "}\n";
                emit(common, io::components_json(g, comps), os.str());
            } else if (g_sixth->parsed() || g_minus->parsed()) {
                const auto s = g_sixth->parsed() ? g31::sixth_root_data(g) : g31::minus_one_data(g);
                std::ostringstream os;
                os << "k = " << s.k << ", deleted = " << s.deleted << "\nI = {" << io::join(s.subset) << "}\n";
                emit(common, io::subset_doc(s), os.str());
            } else if (g_sec->parsed()) {
                if (explicit_coords) {
                    const auto sec = generic_section_coords(g.arrangement, common.seed);
                    std::ostringstream os;
                    os << "seed " << sec.seed_used << ", plane (";
                    for (std::size_t i = 0; i < sec.plane.size(); ++i) os << (i ? ", " : "") << sec.plane[i].get_str();
                    os << ")\n";
                    emit(common, io::arrangement_doc(sec.lines), os.str() + io::incidence_text(incidence_p2(sec.lines)));
                } else {
                    const auto inc = codim2_edges_p3(g.arrangement);
                    emit(common, io::incidence_doc(inc), io::incidence_text(inc));
                }
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? 2 : 1;
    }
    return 0;
}
