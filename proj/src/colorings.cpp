#include "rainbowlab/colorings.hpp"

#include <map>
#include <set>

namespace rainbowlab {

void validate(const Coloring& c) {
    if ((int)c.colors.size() != c.spec.edge_count())
        throw std::runtime_error("coloring length does not match edge count");
    for (int col : c.colors)
        if (col < 0) throw std::runtime_error("negative color id");
}

Coloring canonicalize(const Coloring& c) {
    validate(c);
    Coloring out{c.spec, std::vector<int>(c.colors.size())};
    std::map<int, int> relabel;
    int next = 0;
    for (size_t e = 0; e < c.colors.size(); ++e) {
        auto [it, inserted] = relabel.try_emplace(c.colors[e], next);
        if (inserted) ++next;
        out.colors[e] = it->second;
    }
    return out;
}

int distinct_colors(const Coloring& c) {
    validate(c);
    return int(std::set<int>(c.colors.begin(), c.colors.end()).size());
}

std::vector<std::vector<EdgeId>> color_classes(const Coloring& c) {
    validate(c);
    std::vector<std::vector<EdgeId>> classes;
    std::map<int, int> slot;  // color id -> class index
    for (EdgeId e = 0; e < (int)c.colors.size(); ++e) {
        auto [it, inserted] = slot.try_emplace(c.colors[e], (int)classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].push_back(e);
    }
    // already ordered by smallest edge id: classes are created on first sight
    return classes;
}

int colors_on(const Coloring& c, std::span<const EdgeId> edges) {
    validate(c);
    // members are tiny; linear dedup beats a set here
    int seen[16];
    int count = 0;
    std::set<int> big;
    for (EdgeId e : edges) {
        if (e < 0 || e >= (int)c.colors.size())
            throw std::invalid_argument("edge id out of range");
        int col = c.colors[e];
        if (edges.size() <= 16) {
            bool dup = false;
            for (int i = 0; i < count; ++i)
                if (seen[i] == col) { dup = true; break; }
            if (!dup) seen[count++] = col;
        } else {
            big.insert(col);
        }
    }
    return edges.size() <= 16 ? count : int(big.size());
}

std::vector<int> vertex_palette(const Coloring& c, Vertex x) {
    validate(c);
    if (x < 0 || x >= c.spec.vertex_count())
        throw std::invalid_argument("vertex out of range");
    std::set<int> palette;
    if (c.spec.kind == GraphKind::Bipartite2) {
        if (x <= 1) {
            int base = x == 0 ? 0 : c.spec.n;
            for (int j = 0; j < c.spec.n; ++j) palette.insert(c.colors[base + j]);
        } else {
            int col = x - 2;
            palette.insert(c.colors[col]);
            palette.insert(c.colors[c.spec.n + col]);
        }
    } else {
        for (Vertex y = 0; y < c.spec.n; ++y) {
            if (y == x) continue;
            palette.insert(c.colors[edge_index(c.spec, x, y)]);
        }
    }
    return {palette.begin(), palette.end()};
}

bool is_proper(const Coloring& c) {
    validate(c);
    for (Vertex x = 0; x < c.spec.vertex_count(); ++x) {
        int degree = 0;
        if (c.spec.kind == GraphKind::Bipartite2)
            degree = x <= 1 ? c.spec.n : 2;
        else
            degree = c.spec.n - 1;
        if ((int)vertex_palette(c, x).size() != degree) return false;
    }
    return true;
}

}  // namespace rainbowlab
