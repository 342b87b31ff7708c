#pragma once

#include <span>
#include <vector>

#include "rainbowlab/graphs.hpp"

namespace rainbowlab {

// A dense edge coloring: colors[e] is the (nonnegative) color of edge e.
// Color ids are opaque labels; every verdict downstream depends only on the
// induced partition of edges into color classes.
struct Coloring {
    GraphSpec spec;
    std::vector<int> colors;

    bool operator==(const Coloring&) const = default;
};

void validate(const Coloring& c);

// Relabels colors in first-occurrence order scanning edges 0,1,2,...
// Idempotent; preserves the partition.
Coloring canonicalize(const Coloring& c);

int distinct_colors(const Coloring& c);

// The partition into color classes, ordered by each class's smallest edge id.
std::vector<std::vector<EdgeId>> color_classes(const Coloring& c);

// Number of distinct colors on an edge set; 0 for the empty set.
int colors_on(const Coloring& c, std::span<const EdgeId> edges);

// The set of colors on edges incident to x, ascending.
std::vector<int> vertex_palette(const Coloring& c, Vertex x);

// No vertex sees a repeated color.
bool is_proper(const Coloring& c);

}  // namespace rainbowlab
