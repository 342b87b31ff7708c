#include "rainbowlab/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rainbowlab/bounds.hpp"
#include "rainbowlab/coloring_io.hpp"
#include "rainbowlab/construct.hpp"
#include "rainbowlab/search.hpp"

namespace rainbowlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;
constexpr int kExitBudget = 3;

GraphSpec parse_graph(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph must be complete:N or bipartite2:N");
    std::string kind = s.substr(0, colon);
    int n = std::stoi(s.substr(colon + 1));
    if (kind == "complete") return GraphSpec::complete(n);
    if (kind == "bipartite2") return GraphSpec::bipartite2(n);
    throw std::invalid_argument("unknown graph kind: " + kind);
}

int default_threads() {
    if (const char* env = std::getenv("RAINBOWLAB_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

void print_witness(std::ostream& out, const Coloring& c, const Witness& w) {
    out << "violation: required " << w.required << " colors, observed "
        << w.observed << "\n";
    for (EdgeId e : w.member) {
        auto [a, b] = endpoints(c.spec, e);
        out << vertex_name(c.spec, a) << ' ' << vertex_name(c.spec, b) << ' '
            << c.colors[e] << "\n";
    }
}

int cmd_verify(const std::string& file, const std::string& cname,
               std::ostream& out) {
    Coloring c = read_coloring_file(file);
    Constraint k = constraint_by_name(cname);
    Verdict v = verify(c, k);
    if (v.pass) {
        out << "pass\n";
        return kExitOk;
    }
    print_witness(out, c, *v.witness);
    return kExitNegative;
}

int cmd_construct(int n, const std::string& outfile, std::ostream& out) {
    Coloring c = construct_k2n(n);
    out << "colors: " << distinct_colors(c) << "\n";
    if (!outfile.empty()) write_coloring_file(outfile, c);
    return kExitOk;
}

int cmd_search(const std::string& graph, const std::string& cname,
               const std::string& engine, long long max_nodes,
               double max_seconds, int threads, const std::string& outfile,
               std::ostream& out, std::ostream& err) {
    GraphSpec spec = parse_graph(graph);
    Constraint k = constraint_by_name(cname);
    SearchResult r;
    if (engine == "bb") {
        if (threads <= 0) threads = default_threads();
        r = min_colors_bb(spec, k, Budget{max_nodes, max_seconds}, threads);
    } else if (engine == "exhaustive") {
        r = min_colors_exhaustive(spec, k);
    } else {
        throw std::invalid_argument("engine must be bb or exhaustive");
    }
    if (!r.optimal && r.proven_optimal) {
        out << "unsatisfiable\n";
        return kExitOk;
    }
    out << "min_colors: " << r.min_colors << " proven: "
        << (r.proven_optimal ? "true" : "false") << "\n";
    err << "nodes: " << r.nodes_explored << " elapsed: " << std::fixed
        << std::setprecision(3) << r.elapsed_seconds << "s\n";
    if (!outfile.empty() && r.optimal) write_coloring_file(outfile, *r.optimal);
    return r.proven_optimal ? kExitOk : kExitBudget;
}

int cmd_census(const std::string& graph, const std::string& list,
               const std::string& format, std::ostream& out) {
    GraphSpec spec = parse_graph(graph);
    std::vector<Constraint> ks;
    std::vector<std::string> names;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        ks.push_back(constraint_by_name(tok));
        names.push_back(tok);
    }
    if (ks.empty()) throw std::invalid_argument("empty constraint list");
    CensusReport rep = census(spec, ks);
    const int nk = (int)ks.size();
    if (format == "csv") {
        out << "constraint,passes\n";
        for (int i = 0; i < nk; ++i)
            out << names[i] << ',' << rep.pass_counts[i] << "\n";
        out << "\nfrom,to,contained\n";
        for (int a = 0; a < nk; ++a)
            for (int b = 0; b < nk; ++b)
                if (a != b)
                    out << names[a] << ',' << names[b] << ','
                        << (rep.contained[a][b] ? "yes" : "no") << "\n";
        return kExitOk;
    }
    out << "graph: " << spec.to_string() << "\n";
    out << "partitions: " << rep.total_partitions << "\n";
    out << "pass counts:\n";
    for (int i = 0; i < nk; ++i)
        out << "  " << names[i] << ": " << rep.pass_counts[i] << "\n";
    out << "containment (pass(A) within pass(B)):\n";
    for (int a = 0; a < nk; ++a)
        for (int b = 0; b < nk; ++b) {
            if (a == b) continue;
            out << "  " << names[a] << " -> " << names[b] << ": "
                << (rep.contained[a][b] ? "yes" : "no") << "\n";
            if (!rep.contained[a][b]) {
                out << "  counterexample (passes " << names[a] << ", fails "
                    << names[b] << "):\n";
                std::ostringstream buf;
                write_coloring(buf, *rep.counterexample[a][b]);
                std::istringstream lines(buf.str());
                std::string line;
                while (std::getline(lines, line)) out << "    " << line << "\n";
            }
        }
    return kExitOk;
}

int cmd_scan(const std::string& graph, const std::string& from,
             const std::string& to, std::ostream& out) {
    GraphSpec spec = parse_graph(graph);
    auto counterexample =
        implication_scan(spec, constraint_by_name(from), constraint_by_name(to));
    if (!counterexample) {
        out << "implication holds\n";
        return kExitOk;
    }
    out << "counterexample:\n";
    write_coloring(out, *counterexample);
    return kExitNegative;
}

int cmd_bounds(int from, int to, const std::string& format, std::ostream& out) {
    auto rows = bound_table(from, to);
    if (format == "csv") {
        out << "n,claimed,claimed_ceil,eq3_root,eq3_ceil,axenovich,toth,"
               "proper_case,lemma_value,flagged\n";
        for (const auto& r : rows)
            out << r.n << ',' << r.claimed.to_string() << ',' << r.claimed_ceil
                << ',' << std::setprecision(12) << r.eq3_root << ','
                << r.eq3_ceil << ',' << std::setprecision(12) << r.axenovich
                << ',' << r.toth << ',' << r.proper_case << ','
                << r.lemma_value << ',' << (r.discrepancy ? "yes" : "no")
                << "\n";
        return kExitOk;
    }
    out << std::left << std::setw(5) << "n" << std::setw(10) << "claimed"
        << std::setw(9) << "c_ceil" << std::setw(14) << "eq3_root"
        << std::setw(10) << "eq3_ceil" << std::setw(14) << "axenovich"
        << std::setw(7) << "toth" << std::setw(8) << "proper" << std::setw(7)
        << "lemma" << "flag\n";
    for (const auto& r : rows)
        out << std::left << std::setw(5) << r.n << std::setw(10)
            << r.claimed.to_string() << std::setw(9) << r.claimed_ceil
            << std::setw(14) << std::setprecision(10) << r.eq3_root
            << std::setw(10) << r.eq3_ceil << std::setw(14)
            << std::setprecision(10) << r.axenovich << std::setw(7) << r.toth
            << std::setw(8) << r.proper_case << std::setw(7) << r.lemma_value
            << (r.discrepancy ? "FLAG" : "") << "\n";
    out << "# eq3 right-hand side evaluated as printed; the (3/2)(n - 2C/s)\n"
           "# term is not clamped when 2C/s exceeds n.\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact small-case toolkit for rainbow edge-coloring bounds"};
    app.require_subcommand(1);

    std::string coloring_file, cname, graph, engine = "bb", outfile;
    std::string from_name, to_name, format = "table";
    int k2n_n = 0, bounds_from = 0, bounds_to = 0, threads = 0;
    long long max_nodes = 100'000'000;
    double max_seconds = 3600.0;
    std::string constraints_list;

    auto* verify_cmd = app.add_subcommand("verify", "check a coloring file");
    verify_cmd->add_option("--coloring", coloring_file)->required();
    verify_cmd->add_option("--constraint", cname)->required();

    auto* construct_cmd =
        app.add_subcommand("construct", "the explicit K_{2,n} coloring");
    construct_cmd->add_option("--k2n", k2n_n)->required();
    construct_cmd->add_option("-o,--output", outfile);

    auto* search_cmd = app.add_subcommand("search", "exact minimum colors");
    search_cmd->add_option("--graph", graph)->required();
    search_cmd->add_option("--constraint", cname)->required();
    search_cmd->add_option("--engine", engine);
    search_cmd->add_option("--max-nodes", max_nodes);
    search_cmd->add_option("--max-seconds", max_seconds);
    search_cmd->add_option("--threads", threads);
    search_cmd->add_option("-o,--output", outfile);

    auto* census_cmd =
        app.add_subcommand("census", "pass counts over all partitions");
    census_cmd->add_option("--graph", graph)->required();
    census_cmd->add_option("--constraints", constraints_list)->required();
    census_cmd->add_option("--format", format);

    auto* scan_cmd = app.add_subcommand("scan", "implication between constraints");
    scan_cmd->add_option("--graph", graph)->required();
    scan_cmd->add_option("--from", from_name)->required();
    scan_cmd->add_option("--to", to_name)->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "bound table");
    bounds_cmd->add_option("--from", bounds_from)->required();
    bounds_cmd->add_option("--to", bounds_to)->required();
    bounds_cmd->add_option("--format", format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(coloring_file, cname, out);
        if (construct_cmd->parsed()) return cmd_construct(k2n_n, outfile, out);
        if (search_cmd->parsed())
            return cmd_search(graph, cname, engine, max_nodes, max_seconds,
                              threads, outfile, out, err);
        if (census_cmd->parsed())
            return cmd_census(graph, constraints_list, format, out);
        if (scan_cmd->parsed()) return cmd_scan(graph, from_name, to_name, out);
        if (bounds_cmd->parsed())
            return cmd_bounds(bounds_from, bounds_to, format, out);
    } catch (const budget_error& e) {
        err << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rainbowlab
