#include "rainbowlab/coloring_io.hpp"

#include <fstream>
#include <sstream>

namespace rainbowlab {

namespace {

Vertex parse_vertex(const GraphSpec& spec, const std::string& tok) {
    if (spec.kind == GraphKind::Bipartite2) {
        if (tok == "u") return 0;
        if (tok == "v") return 1;
        int col = std::stoi(tok);
        if (col < 0 || col >= spec.n)
            throw std::runtime_error("column out of range: " + tok);
        return 2 + col;
    }
    int x = std::stoi(tok);
    if (x < 0 || x >= spec.n) throw std::runtime_error("vertex out of range: " + tok);
    return x;
}

}  // namespace

Coloring read_coloring(std::istream& in) {
    std::string line;
    GraphSpec spec{GraphKind::Complete, 0};
    bool have_header = false;
    std::vector<int> colors;
    std::vector<char> seen;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        auto fail = [&](const std::string& msg) -> std::runtime_error {
            return std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
        };
        if (!have_header) {
            std::string kind;
            int n;
            if (first != "graph" || !(ls >> kind >> n))
                throw fail("expected 'graph complete <n>' or 'graph bipartite2 <n>'");
            if (kind == "complete")
                spec = GraphSpec::complete(n);
            else if (kind == "bipartite2")
                spec = GraphSpec::bipartite2(n);
            else
                throw fail("unknown graph kind: " + kind);
            colors.assign(spec.edge_count(), -1);
            seen.assign(spec.edge_count(), 0);
            have_header = true;
            continue;
        }
        std::string btok;
        long long color;
        if (!(ls >> btok >> color)) throw fail("expected '<a> <b> <color>'");
        if (color < 0) throw fail("negative color");
        EdgeId e;
        try {
            Vertex a = parse_vertex(spec, first);
            Vertex b = parse_vertex(spec, btok);
            e = edge_index(spec, a, b);
        } catch (const std::exception& ex) {
            throw fail(ex.what());
        }
        if (seen[e]) throw fail("duplicate edge");
        seen[e] = 1;
        colors[e] = int(color);
    }
    if (!have_header) throw std::runtime_error("missing graph header");
    for (size_t e = 0; e < seen.size(); ++e)
        if (!seen[e]) {
            auto [a, b] = endpoints(spec, EdgeId(e));
            throw std::runtime_error("missing edge " + vertex_name(spec, a) + " " +
                                     vertex_name(spec, b));
        }
    return {spec, std::move(colors)};
}

Coloring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& c) {
    Coloring canon = canonicalize(c);
    const GraphSpec& spec = canon.spec;
    out << "graph " << (spec.kind == GraphKind::Complete ? "complete" : "bipartite2")
        << ' ' << spec.n << '\n';
    for (EdgeId e = 0; e < spec.edge_count(); ++e) {
        auto [a, b] = endpoints(spec, e);
        out << vertex_name(spec, a) << ' ' << vertex_name(spec, b) << ' '
            << canon.colors[e] << '\n';
    }
}

void write_coloring_file(const std::string& path, const Coloring& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_coloring(out, c);
}

}  // namespace rainbowlab
