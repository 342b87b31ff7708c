#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rainbowlab/colorings.hpp"
#include "rainbowlab/constraints.hpp"

namespace rainbowlab {

// Exhaustive enumeration refuses above this; Bell(12) ~ 4.2e6 partitions.
inline constexpr int kExhaustiveEdgeCap = 12;

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Budget {
    long long max_nodes = 100'000'000;
    double max_seconds = 3600.0;
};

struct SearchResult {
    int min_colors = 0;                // 0 when no coloring satisfies k
    std::optional<Coloring> optimal;   // canonical, re-verifies under k
    long long nodes_explored = 0;
    bool proven_optimal = false;
    double elapsed_seconds = 0.0;
};

// Depth-first branch and bound over edge colorings in edge-index order.
// Symmetry breaking: edge e may only take colors 0..(max used before e)+1.
// If the budget exhausts, min_colors is the best upper bound found and
// proven_optimal is false.
SearchResult min_colors_bb(const GraphSpec& spec, const Constraint& k,
                           const Budget& budget = {}, int threads = 1);

// Independent oracle: enumerates every partition of the edge set via
// restricted growth strings.  Always proven optimal; refuses above the
// edge cap.
SearchResult min_colors_exhaustive(const GraphSpec& spec, const Constraint& k);

struct CensusReport {
    GraphSpec spec;
    std::vector<Constraint> constraints;
    long long total_partitions = 0;  // Bell(edge_count)
    std::vector<long long> pass_counts;
    // contained[a][b]: pass(a) subset-of pass(b); when false,
    // counterexample[a][b] passes a and fails b (first in RGS order)
    std::vector<std::vector<bool>> contained;
    std::vector<std::vector<std::optional<Coloring>>> counterexample;
};

// Evaluates every constraint on every partition of the spec's edges.
CensusReport census(const GraphSpec& spec, const std::vector<Constraint>& ks);

// First coloring (in restricted-growth-string order) passing a but failing
// b, or nullopt if pass(a) is contained in pass(b).
std::optional<Coloring> implication_scan(const GraphSpec& spec,
                                         const Constraint& a,
                                         const Constraint& b);

}  // namespace rainbowlab
