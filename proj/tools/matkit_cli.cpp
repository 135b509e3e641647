// matkit command-line interface: rank queries, predicates, decompositions,
// constructions, reconstruction, and the verification suites.
//
// Exit codes: 0 success / property holds, 1 property violation or refusal,
// 2 usage or input error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matkit/cofactor.hpp"
#include "matkit/count_matroid.hpp"
#include "matkit/graph.hpp"
#include "matkit/matroid.hpp"
#include "matkit/reconstruct.hpp"
#include "matkit/suites.hpp"

using namespace matkit;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MultiGraph load_graph(const std::string& path) {
    try {
        return read_graph_json(slurp(path));
    } catch (const std::exception& e) {
        throw CLI::ValidationError(path + ": " + e.what());
    }
}

// --edges takes a comma-separated list of edge ids; empty means all edges.
Bitset edge_query(const MultiGraph& g, const std::string& list) {
    if (list.empty()) return Bitset::full(g.num_edges());
    Bitset q(g.num_edges());
    std::stringstream ss(list);
    std::string id;
    while (std::getline(ss, id, ',')) {
        int e = g.edge_index(id);
        if (e < 0) throw CLI::ValidationError("unknown edge id: " + id);
        q.set(e);
    }
    return q;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw CLI::ValidationError("cannot write " + out_path);
        out << text << "\n";
    }
}

RankOracle family_oracle(const MultiGraph& g, const std::string& family, int k, int l, int t) {
    if (family == "count") return count_oracle(g, CountParams(k, l));
    if (family == "cofactor") return cofactor_oracle(g, t);
    throw CLI::ValidationError("unknown family: " + family);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-matroid toolkit: count matroids, cofactor rank, "
                 "connectivity, reconstruction, verification suites"};
    app.require_subcommand(1);

    std::string input, output, edges_list, predicate, family = "count", suite_name, json_out,
                params;
    int k = 2, l = 3, t = 0;
    unsigned seed = 1;
    int samples = 0, max_n = 0;
    bool all_suites = false, mutant = false;

    auto* rank_cmd = app.add_subcommand("rank", "rank of an edge set with certificate");
    rank_cmd->add_option("--k", k, "count parameter k");
    rank_cmd->add_option("--l", l, "count parameter l");
    rank_cmd->add_option("--t", t, "cofactor fold t (selects the cofactor matroid)");
    rank_cmd->add_option("--input", input, "graph JSON file")->required();
    rank_cmd->add_option("--edges", edges_list, "comma-separated edge ids (default: all)");

    auto* check_cmd = app.add_subcommand("check", "test a count-matroid predicate");
    check_cmd->add_option("--predicate", predicate, "sparse|rigid|tight|redundant|mconnected")
        ->required();
    check_cmd->add_option("--k", k, "count parameter k");
    check_cmd->add_option("--l", l, "count parameter l");
    check_cmd->add_option("--input", input, "graph JSON file")->required();

    auto* comp_cmd = app.add_subcommand("components", "matroid components of an edge set");
    comp_cmd->add_option("--family", family, "count|cofactor");
    comp_cmd->add_option("--k", k, "count parameter k");
    comp_cmd->add_option("--l", l, "count parameter l");
    comp_cmd->add_option("--t", t, "cofactor fold t");
    comp_cmd->add_option("--input", input, "graph JSON file")->required();

    auto* vconn_cmd = app.add_subcommand("vconn", "vertical connectivity with witness");
    vconn_cmd->add_option("--family", family, "count|cofactor");
    vconn_cmd->add_option("--k", k, "count parameter k");
    vconn_cmd->add_option("--l", l, "count parameter l");
    vconn_cmd->add_option("--t", t, "cofactor fold t");
    vconn_cmd->add_option("--input", input, "graph JSON file")->required();

    auto* construct_cmd = app.add_subcommand("construct", "named graph constructions");
    construct_cmd
        ->add_option("--family", family,
                     "complete|cycle|path|wheel|lovasz-yemini|cofactor-packing")
        ->required();
    construct_cmd->add_option("--params", params, "comma-separated integer parameters")
        ->required();
    construct_cmd->add_option("--out", output, "output file (default: stdout)");

    auto* recon_cmd = app.add_subcommand("reconstruct", "rebuild a graph from a labeled matroid");
    recon_cmd->add_option("--input", input, "labeled matroid JSON file")->required();
    recon_cmd->add_option("--out", output, "output graph JSON file (default: stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite_name, "suite name (see --list)");
    verify_cmd->add_flag("--all", all_suites, "run every suite");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--samples", samples, "sample count override (0 = suite default)");
    verify_cmd->add_option("--max-n,--n", max_n, "max vertex count override (0 = default)");
    verify_cmd->add_option("--json", json_out, "write the report to this file");
    verify_cmd->add_flag("--mutant", mutant, "run the suite's broken mutant (must fail)");
    bool list_suites = false;
    verify_cmd->add_flag("--list", list_suites, "list suite names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rank_cmd->parsed()) {
            MultiGraph g = load_graph(input);
            Bitset q = edge_query(g, edges_list);
            if (t > 0) {
                CofactorCertificate c = cofactor_rt(g, q, t);
                std::cout << c.rank << "\n" << cofactor_certificate_json(g, c) << "\n";
            } else {
                CountParams p(k, l);
                CoverCertificate c = rank_certificate(g, p, q);
                std::cout << c.rank << "\n" << certificate_json(g, c) << "\n";
            }
            return 0;
        }
        if (check_cmd->parsed()) {
            MultiGraph g = load_graph(input);
            CountParams p(k, l);
            bool ok;
            if (predicate == "sparse")
                ok = is_sparse(g, p);
            else if (predicate == "rigid")
                ok = is_rigid(g, p);
            else if (predicate == "tight")
                ok = is_tight(g, p);
            else if (predicate == "redundant")
                ok = is_redundant(g, p);
            else if (predicate == "mconnected") {
                Components c = m_components(g, p);
                ok = c.parts.size() == 1 && c.parts[0].count() >= 2;
            } else
                throw CLI::ValidationError("unknown predicate: " + predicate);
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        }
        if (comp_cmd->parsed()) {
            MultiGraph g = load_graph(input);
            RankOracle o = family_oracle(g, family, k, l, std::max(t, 1));
            Components c = components(o);
            nlohmann::json j;
            j["components"] = nlohmann::json::array();
            for (const Bitset& part : c.parts) {
                nlohmann::json ids = nlohmann::json::array();
                for (int e : part.elements()) ids.push_back(g.edge(e).id);
                j["components"].push_back(ids);
            }
            j["trivial"] = int(std::count(c.trivial.begin(), c.trivial.end(), true));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (vconn_cmd->parsed()) {
            MultiGraph g = load_graph(input);
            RankOracle o = family_oracle(g, family, k, l, std::max(t, 1));
            VerticalConnectivity vc = vertical_connectivity(o);
            nlohmann::json j;
            j["value"] = vc.value;
            if (vc.witness) {
                std::vector<std::string> ids;
                for (int e = 0; e < g.num_edges(); ++e) ids.push_back(g.edge(e).id);
                j["witness"] = nlohmann::json::parse(separation_json(*vc.witness, ids));
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (construct_cmd->parsed()) {
            std::vector<int> ps;
            std::stringstream ss(params);
            std::string tok;
            while (std::getline(ss, tok, ',')) ps.push_back(std::stoi(tok));
            auto need = [&](size_t n) {
                if (ps.size() != n)
                    throw CLI::ValidationError(family + " needs " + std::to_string(n) +
                                               " parameter(s)");
            };
            MultiGraph g;
            if (family == "complete") {
                need(1);
                g = make_complete(ps[0]);
            } else if (family == "cycle") {
                need(1);
                g = make_cycle(ps[0]);
            } else if (family == "path") {
                need(1);
                g = make_path(ps[0]);
            } else if (family == "wheel") {
                need(1);
                g = make_wheel(ps[0]);
            } else if (family == "lovasz-yemini") {
                need(2);
                g = make_lovasz_yemini(ps[0], ps[1]);
            } else if (family == "cofactor-packing") {
                need(2);
                CofactorPacking pk = make_cofactor_packing(ps[0], ps[1]);
                nlohmann::json j;
                j["graph"] = nlohmann::json::parse(write_graph_json(pk.kn));
                j["parts"] = nlohmann::json::array();
                for (const Bitset& part : pk.parts) {
                    nlohmann::json ids = nlohmann::json::array();
                    for (int e : part.elements()) ids.push_back(pk.kn.edge(e).id);
                    j["parts"].push_back(ids);
                }
                emit(j.dump(2), output);
                return 0;
            } else {
                throw CLI::ValidationError("unknown construction: " + family);
            }
            emit(write_graph_json(g), output);
            return 0;
        }
        if (recon_cmd->parsed()) {
            LabeledMatroid m = read_labeled_matroid(slurp(input));
            try {
                MultiGraph g = reconstruct(m);
                emit(write_graph_json(g), output);
                return 0;
            } catch (const MatroidError& e) {
                std::cerr << "reconstruction refused: " << e.what() << "\n";
                return 1;
            }
        }
        if (verify_cmd->parsed()) {
            if (list_suites) {
                for (const auto& n : suite_names()) std::cout << n << "\n";
                return 0;
            }
            std::vector<std::string> names;
            if (all_suites)
                names = suite_names();
            else if (!suite_name.empty())
                names.push_back(suite_name);
            else
                throw CLI::ValidationError("verify needs --suite NAME or --all");
            SuiteConfig cfg;
            cfg.seed = seed;
            cfg.samples = samples;
            cfg.max_n = max_n;
            cfg.mutant = mutant;
            bool any_violation = false;
            nlohmann::json all = nlohmann::json::array();
            for (const auto& name : names) {
                SuiteReport rep = run_suite(name, cfg);
                any_violation |= !rep.passed();
                std::printf("%-22s cases=%5d violations=%3zu  %7.2fs  %s\n", name.c_str(),
                            rep.cases, rep.violations.size(), rep.wall_seconds,
                            rep.passed() ? "PASS" : "FAIL");
                for (const Violation& v : rep.violations)
                    std::printf("    %s\n", v.description.c_str());
                all.push_back(nlohmann::json::parse(report_json(rep)));
            }
            if (!json_out.empty())
                emit(all.dump(2), json_out);
            return any_violation ? 1 : 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MatroidError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
