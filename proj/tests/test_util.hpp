#pragma once

// Brute-force oracles used by the tests.  These deliberately avoid the
// library's enumeration path: members are found by scanning all 4-edge
// subsets and classifying them from scratch.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "rainbowlab/colorings.hpp"
#include "rainbowlab/graphs.hpp"

namespace testutil {

using rainbowlab::EdgeId;
using rainbowlab::GraphSpec;
using rainbowlab::Member;
using rainbowlab::Vertex;

inline std::vector<Vertex> span_vertices(const GraphSpec& spec,
                                         const Member& edges) {
    std::set<Vertex> vs;
    for (EdgeId e : edges) {
        auto [a, b] = endpoints(spec, e);
        vs.insert(a);
        vs.insert(b);
    }
    return {vs.begin(), vs.end()};
}

inline bool connected(const GraphSpec& spec, const Member& edges) {
    auto vs = span_vertices(spec, edges);
    if (vs.empty()) return true;
    std::set<Vertex> reached{vs.front()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (EdgeId e : edges) {
            auto [a, b] = endpoints(spec, e);
            if (reached.count(a) != reached.count(b)) {
                reached.insert(a);
                reached.insert(b);
                grew = true;
            }
        }
    }
    return reached.size() == vs.size();
}

// degree multiset of the subgraph induced by the edge set
inline std::vector<int> degree_profile(const GraphSpec& spec,
                                       const Member& edges) {
    std::map<Vertex, int> deg;
    for (EdgeId e : edges) {
        auto [a, b] = endpoints(spec, e);
        ++deg[a];
        ++deg[b];
    }
    std::vector<int> profile;
    for (auto& [v, d] : deg) profile.push_back(d);
    std::sort(profile.begin(), profile.end());
    return profile;
}

inline bool is_four_edge_path(const GraphSpec& spec, const Member& edges) {
    return edges.size() == 4 && connected(spec, edges) &&
           degree_profile(spec, edges) == std::vector<int>{1, 1, 2, 2, 2};
}

inline bool is_four_edge_cycle(const GraphSpec& spec, const Member& edges) {
    return edges.size() == 4 && connected(spec, edges) &&
           degree_profile(spec, edges) == std::vector<int>{2, 2, 2, 2};
}

template <typename Pred>
std::vector<Member> all_four_edge_subsets(const GraphSpec& spec, Pred&& keep) {
    const int m = spec.edge_count();
    std::vector<Member> out;
    for (EdgeId a = 0; a < m; ++a)
        for (EdgeId b = a + 1; b < m; ++b)
            for (EdgeId c = b + 1; c < m; ++c)
                for (EdgeId d = c + 1; d < m; ++d) {
                    Member member{a, b, c, d};
                    if (keep(member)) out.push_back(member);
                }
    return out;
}

inline std::vector<Member> oracle_paths_cycles4(const GraphSpec& spec) {
    return all_four_edge_subsets(spec, [&](const Member& edges) {
        return is_four_edge_path(spec, edges) || is_four_edge_cycle(spec, edges);
    });
}

inline std::vector<Member> oracle_small_four_edge(const GraphSpec& spec) {
    return all_four_edge_subsets(spec, [&](const Member& edges) {
        return span_vertices(spec, edges).size() <= 5;
    });
}

inline rainbowlab::Coloring random_coloring(const GraphSpec& spec,
                                            std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, spec.edge_count() - 1);
    rainbowlab::Coloring c{spec, std::vector<int>(spec.edge_count())};
    for (auto& col : c.colors) col = pick(rng);
    return c;
}

}  // namespace testutil
