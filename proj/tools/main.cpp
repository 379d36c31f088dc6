#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvezeta/builder.hpp"
#include "curvezeta/corpus.hpp"
#include "curvezeta/engine.hpp"
#include "curvezeta/errors.hpp"
#include "curvezeta/monodromy.hpp"
#include "curvezeta/polar.hpp"
#include "curvezeta/zeta.hpp"

using json = nlohmann::json;
using namespace curvezeta;

namespace {

// exit codes: 0 ok, 1 corpus mismatch, 2 non-rational centre,
//             3 parse/input error, 4 validation failure

json ratfun_json(const RatFun& f) {
    json num = json::array(), den = json::array();
    for (const Rat& c : f.num().coeffs()) num.push_back(c.get_str());
    for (const Rat& c : f.den().coeffs()) den.push_back(c.get_str());
    return {{"num", num}, {"den", den}};
}

json poles_json(const std::vector<std::pair<Rat, int>>& ps) {
    json a = json::array();
    for (const auto& [v, o] : ps) a.push_back({{"value", v.get_str()}, {"order", o}});
    return a;
}

json cyclo_json(const CycloVector& v) {
    json m = json::object();
    for (const auto& [k, e] : v.exponents()) m[std::to_string(k)] = e;
    return m;
}

ResolutionGraph load_checked(const std::string& path) {
    ResolutionGraph g = load_graph_file(path);
    ValidationReport rep = validate(g);
    if (!rep.ok) {
        std::cerr << "graph fails the numerical-data identities:\n" << rep.summary();
        std::exit(4);
    }
    return g;
}

FormSpec parse_form(const std::string& name, const std::string& custom, int seed) {
    if (name == "standard") return FormStandard{};
    if (name == "hessian") return FormHessian{};
    if (name == "polar") {
        auto [a, b] = sample_generic(seed);
        return FormPolar{a, b};
    }
    if (name == "custom") {
        if (custom.empty()) throw Error("--form custom needs --g <poly>");
        return FormCustom{parse_bipoly(custom)};
    }
    throw Error("unknown form '" + name + "' (standard|hessian|polar|custom)");
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"embedded resolution graphs and zeta functions of plane curve germs"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::string format = "text";
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // resolve
    auto* cmd_resolve = app.add_subcommand("resolve", "resolve a curve germ with a 2-form");
    std::string r_curve, r_form = "standard", r_custom, r_out;
    int r_seed = 0;
    bool r_minimal = false, r_no_stability = false;
    cmd_resolve->add_option("--curve", r_curve, "bivariate polynomial in x, y")->required();
    cmd_resolve->add_option("--form", r_form, "standard|hessian|polar|custom");
    cmd_resolve->add_option("--g", r_custom, "custom form polynomial");
    cmd_resolve->add_option("--seed", r_seed, "sample seed for generic coefficients");
    cmd_resolve->add_option("--out", r_out, "write the graph file here");
    cmd_resolve->add_flag("--minimal-f", r_minimal, "resolve f alone (carry the form)");
    cmd_resolve->add_flag("--no-stability-check", r_no_stability,
                          "skip the two-sample genericity comparison");

    // build-quasi / build-cable
    auto* cmd_quasi = app.add_subcommand("build-quasi", "dual graph of y^b - x^a with polar circles");
    long q_a = 0, q_b = 0;
    cmd_quasi->add_option("a", q_a)->required();
    cmd_quasi->add_option("b", q_b)->required();
    auto* cmd_cable = app.add_subcommand("build-cable", "dual graph from Zariski pairs a1 b1 a2 b2 ...");
    std::vector<long> cable_args;
    cmd_cable->add_option("pairs", cable_args)->required();

    // graph analyses
    std::string g_path;
    auto add_graph_opt = [&](CLI::App* c) {
        c->add_option("--graph", g_path, "graph file")->required();
    };
    auto* cmd_zeta = app.add_subcommand("zeta", "topological (and motivic) zeta function");
    bool z_motivic = false;
    add_graph_opt(cmd_zeta);
    cmd_zeta->add_flag("--motivic", z_motivic, "also print the motivic zeta function");
    auto* cmd_poles = app.add_subcommand("poles", "candidate and actual poles");
    add_graph_opt(cmd_poles);
    auto* cmd_mono = app.add_subcommand("monodromy", "alternating cyclotomic product");
    add_graph_opt(cmd_mono);
    auto* cmd_check = app.add_subcommand("check", "eigenvalue verdict for every pole");
    add_graph_opt(cmd_check);
    long multiplier = 1;
    cmd_check->add_option("--multiplier", multiplier, "test e^{2 pi i d s0} instead");
    auto* cmd_dead = app.add_subcommand("deadbranch", "rupture vertices and dead branches");
    std::string dead_graph, contacts_file, dead_curve;
    int dead_seed = 0;
    cmd_dead->add_option("--graph", dead_graph, "graph file to analyse");
    cmd_dead->add_option("--contacts", contacts_file, "file of 'vertex m' contact orders");
    cmd_dead->add_option("--curve", dead_curve,
                         "resolve this curve minimally and analyse it with measured polar contacts");
    cmd_dead->add_option("--seed", dead_seed, "polar sample seed");

    auto* cmd_sweep = app.add_subcommand("deadbranch-sweep", "alpha and determinant identities over a range");
    long sweep_max = 40;
    cmd_sweep->add_option("--max-ab", sweep_max, "sweep 2 <= b < a <= max");

    auto* cmd_corpus = app.add_subcommand("corpus", "run the bundled worked-example corpus");
    std::string filter;
    cmd_corpus->add_option("--filter", filter, "substring filter on entry ids");

    auto* cmd_graph = app.add_subcommand("graph", "validate | dot");
    std::string g_action;
    cmd_graph->add_option("action", g_action, "validate|dot")->required();
    cmd_graph->add_option("--graph", g_path, "graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (format == "json") as_json = true;

    try {
        if (cmd_resolve->parsed()) {
            BiPoly f = parse_bipoly(r_curve);
            ResolveOptions opts;
            opts.full = !r_minimal;
            opts.want_contacts = true;
            if (r_form == "polar" && !r_no_stability) {
                // sampled coefficients must give a stable decorated graph
                auto family = [&](int s) { return parse_form("polar", "", s); };
                if (!genericity_stable(f, family, {r_seed, r_seed + 1, r_seed + 2}, opts))
                    throw GenericityUncertain(
                        "polar samples disagree across seeds; widen the sampling or pass "
                        "--no-stability-check");
            }
            ResolutionResult res = resolve(f, parse_form(r_form, r_custom, r_seed), opts);
            std::string text = serialize(res.graph);
            if (!r_out.empty()) {
                std::ofstream out(r_out);
                out << text;
            }
            if (as_json) {
                json cj = json::object();
                for (const auto& [id, m] : res.contacts) cj[id] = m;
                std::cout << json{{"graph", text}, {"transcript", res.transcript}, {"contacts", cj}}
                                 .dump(2)
                          << "\n";
            } else {
                for (const std::string& line : res.transcript) std::cout << line << "\n";
                if (r_out.empty())
                    std::cout << text;
                else
                    std::cout << "graph written to " << r_out << "\n";
            }
        } else if (cmd_quasi->parsed()) {
            std::cout << serialize(build_Bab(q_a, q_b));
        } else if (cmd_cable->parsed()) {
            if (cable_args.size() < 2 || cable_args.size() % 2 != 0)
                throw Error("build-cable needs an even number of integers");
            ZariskiSpec spec;
            for (std::size_t i = 0; i < cable_args.size(); i += 2)
                spec.pairs.emplace_back(cable_args[i], cable_args[i + 1]);
            std::cout << serialize(assemble_zariski_pairs(spec));
        } else if (cmd_zeta->parsed()) {
            ResolutionGraph g = load_checked(g_path);
            RatFun z = topological_zeta(g);
            json j{{"zeta", ratfun_json(z)}, {"poles", poles_json(poles_with_orders(z))}};
            std::string text = "Z = " + z.str_factored() + "\n";
            if (z_motivic) {
                LTRatExpr m = motivic_zeta(g);
                j["motivic"] = m.str();
                text += "Z_mot = " + m.str() + "\n";
            }
            emit(j, as_json, text);
        } else if (cmd_poles->parsed()) {
            ResolutionGraph g = load_checked(g_path);
            PoleReport rep = actual_poles(g);
            json cands = json::array();
            std::string text;
            for (const CandidatePole& c : rep.candidates) {
                json w = json::array();
                for (const std::string& id : c.witnesses) w.push_back(id);
                cands.push_back({{"value", c.value.get_str()}, {"witnesses", w}, {"trivial", c.trivial}});
                text += "candidate " + c.value.get_str() + (c.trivial ? " (trivial)" : "") + "\n";
            }
            for (const auto& [v, o] : rep.actual)
                text += "pole " + v.get_str() + " of order " + std::to_string(o) + "\n";
            json j{{"candidates", cands}, {"actual", poles_json(rep.actual)},
                   {"zeta", ratfun_json(rep.zeta)}};
            emit(j, as_json, text);
        } else if (cmd_mono->parsed()) {
            ResolutionGraph g = load_checked(g_path);
            CycloVector v = acampo_product(g);
            emit(json{{"acampo", cyclo_json(v)}, {"display", v.str()}}, as_json, v.str() + "\n");
        } else if (cmd_check->parsed()) {
            ResolutionGraph g = load_checked(g_path);
            VerdictReport rep = conjecture_verdict(g, g.ambient, multiplier);
            json poles = json::array();
            for (const PoleVerdict& p : rep.poles)
                poles.push_back({{"pole", p.pole.get_str()},
                                 {"order", p.order},
                                 {"trivial", p.trivial},
                                 {"eigenvalue", p.eigenvalue == TriBool::True
                                                    ? "yes"
                                                    : p.eigenvalue == TriBool::False ? "no" : "unknown"}});
            json j{{"holds", rep.holds == TriBool::True
                                 ? "yes"
                                 : rep.holds == TriBool::False ? "no" : "unknown"},
                   {"poles", poles}};
            if (rep.failing_pole) j["failing_pole"] = rep.failing_pole->get_str();
            emit(j, as_json, rep.str());
        } else if (cmd_dead->parsed()) {
            if (dead_graph.empty() == dead_curve.empty())
                throw Error("deadbranch needs exactly one of --graph or --curve");
            ResolutionGraph g;
            std::map<std::string, long> contacts;
            bool have_contacts = false;
            if (!dead_curve.empty()) {
                // analyse the engine's own minimal resolution, whose labels
                // match the measured contact orders
                BiPoly f = parse_bipoly(dead_curve);
                auto [a, b] = sample_generic(dead_seed);
                ResolveOptions opts;
                opts.full = false;
                opts.want_contacts = true;
                ResolutionResult r = resolve(f, FormPolar{a, b}, opts);
                g = r.graph;
                contacts = r.contacts;
                have_contacts = true;
            } else {
                g = load_checked(dead_graph);
            }
            if (!contacts_file.empty()) {
                // line-oriented "vertex-id m" pairs
                std::ifstream in(contacts_file);
                if (!in) throw Error("cannot open contacts file '" + contacts_file + "'");
                std::string id;
                long m;
                while (in >> id >> m) contacts[id] = m;
                have_contacts = true;
            }
            (void)0;
            std::string text;
            json branches = json::array();
            for (const DeadBranch& b : find_dead_branches(g)) {
                BranchVerdict alpha = alpha_one_check(g, b);
                BranchVerdict kappa = kappa_identity_check(g, b);
                std::string chain;
                for (const std::string& id : b.chain) chain += (chain.empty() ? "" : "-") + id;
                text += "rupture " + b.rupture + " branch " + chain +
                        ": alpha_1 = " + alpha.alpha1.get_str() +
                        (alpha.pass ? " (= 1)" : " (!= 1)") +
                        ", determinant identity " + (kappa.pass ? "holds" : "FAILS") + "\n";
                json bj{{"rupture", b.rupture},
                        {"chain", b.chain},
                        {"alpha1", alpha.alpha1.get_str()},
                        {"kappa_identity", kappa.pass}};
                if (have_contacts) {
                    BranchVerdict oq = open_question_check(g, b, contacts);
                    text += "  contact identity: " + oq.lhs.get_str() + " vs " + oq.rhs.get_str() +
                            (oq.pass ? " (holds)" : " (FAILS)") + "\n";
                    bj["contact_identity"] = oq.pass;
                }
                branches.push_back(bj);
            }
            emit(json{{"branches", branches}}, as_json, text);
        } else if (cmd_sweep->parsed()) {
            std::string text;
            long checked = 0, failed = 0;
            for (long a = 3; a <= sweep_max; ++a)
                for (long b = 2; b < a; ++b) {
                    if (std::gcd(a, b) != 1) continue;
                    ResolutionGraph g = build_Bab(a, b);
                    for (const DeadBranch& br : find_dead_branches(g)) {
                        BranchVerdict alpha = alpha_one_check(g, br);
                        BranchVerdict kappa = kappa_identity_check(g, br);
                        ++checked;
                        if (!alpha.pass || !kappa.pass) {
                            ++failed;
                            text += "FAIL (" + std::to_string(a) + "," + std::to_string(b) + ") at " +
                                    br.rupture + "\n";
                        }
                    }
                }
            text += std::to_string(checked) + " branches checked, " + std::to_string(failed) +
                    " failures\n";
            emit(json{{"checked", checked}, {"failed", failed}}, as_json, text);
            if (failed > 0) return 1;
        } else if (cmd_corpus->parsed()) {
            CorpusReport rep = run_corpus(filter);
            json entries = json::array();
            for (const CorpusOutcome& e : rep.entries) {
                json checks = json::array();
                for (const CorpusCheck& c : e.checks)
                    checks.push_back({{"what", c.what},
                                      {"origin", c.origin},
                                      {"pass", c.pass},
                                      {"expected", c.expected},
                                      {"got", c.got}});
                entries.push_back({{"id", e.id}, {"pass", e.pass}, {"checks", checks}});
            }
            emit(json{{"entries", entries}, {"passed", rep.passed}, {"failed", rep.failed}},
                 as_json, rep.table());
            if (!rep.all_pass()) return 1;
        } else if (cmd_graph->parsed()) {
            ResolutionGraph g = load_graph_file(g_path);
            if (g_action == "validate") {
                ValidationReport rep = validate(g);
                std::cout << rep.summary();
                if (!rep.ok) return 4;
            } else if (g_action == "dot") {
                std::cout << to_dot(g);
            } else {
                throw Error("graph action must be validate or dot");
            }
        }
    } catch (const NonRationalCenter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
