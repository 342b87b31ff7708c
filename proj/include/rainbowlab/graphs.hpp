#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbowlab {

using Vertex = int;
using EdgeId = int;

enum class GraphKind { Complete, Bipartite2 };

// A complete graph K_n, or the complete bipartite graph K_{2,n} with left
// vertices u (vertex 0) and v (vertex 1) and columns w_0..w_{n-1}
// (vertices 2..n+1).
struct GraphSpec {
    GraphKind kind;
    int n;

    static GraphSpec complete(int n) {
        if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
        return {GraphKind::Complete, n};
    }
    static GraphSpec bipartite2(int n) {
        if (n < 1) throw std::invalid_argument("bipartite2 graph needs n >= 1");
        return {GraphKind::Bipartite2, n};
    }

    int vertex_count() const {
        return kind == GraphKind::Complete ? n : n + 2;
    }
    int edge_count() const {
        return kind == GraphKind::Complete ? n * (n - 1) / 2 : 2 * n;
    }
    bool operator==(const GraphSpec&) const = default;

    std::string to_string() const;
};

// Canonical edge indexing.  Complete: lexicographic over pairs (a,b), a<b.
// Bipartite2: row-major, index(u,w_j) = j and index(v,w_j) = n+j.
EdgeId edge_index(const GraphSpec& spec, Vertex a, Vertex b);
std::pair<Vertex, Vertex> endpoints(const GraphSpec& spec, EdgeId e);

// Prints a vertex the way the coloring file format spells it:
// "u"/"v" and column numbers for bipartite2, plain numbers for complete.
std::string vertex_name(const GraphSpec& spec, Vertex x);

struct SubgraphFamilyId {
    enum class Kind { Cliques, BiColumns, PathsCycles4, SmallFourEdge };
    Kind kind;
    int size = 0;  // p for Cliques, t for BiColumns

    static SubgraphFamilyId cliques(int p) { return {Kind::Cliques, p}; }
    static SubgraphFamilyId bi_columns(int t) { return {Kind::BiColumns, t}; }
    static SubgraphFamilyId paths_cycles4() { return {Kind::PathsCycles4, 0}; }
    static SubgraphFamilyId small_four_edge() { return {Kind::SmallFourEdge, 0}; }

    bool operator==(const SubgraphFamilyId&) const = default;
    std::string to_string() const;
};

bool family_admissible(const GraphSpec& spec, const SubgraphFamilyId& family);
void require_admissible(const GraphSpec& spec, const SubgraphFamilyId& family);

// Number of edges every member of the family carries on this spec.
int member_edge_count(const SubgraphFamilyId& family);

// Closed-form member count where one exists; SmallFourEdge falls back to
// enumeration.
long long count_members(const GraphSpec& spec, const SubgraphFamilyId& family);

using Member = std::vector<EdgeId>;

// All members, each as a sorted edge-id tuple, in lexicographic order over
// those tuples.  Materializes the stream; meant for desk-scale specs.
std::vector<Member> enumerate_members(const GraphSpec& spec,
                                      const SubgraphFamilyId& family);

namespace detail {

// Streams members as sorted edge-id spans.  Cliques, BiColumns and
// SmallFourEdge are generated directly in lexicographic tuple order;
// PathsCycles4 is generated in an unspecified deterministic order.
// The callback returns false to stop early; the function returns false if
// stopped.
template <typename Fn>
bool stream_members(const GraphSpec& spec, const SubgraphFamilyId& family,
                    Fn&& fn) {
    using K = SubgraphFamilyId::Kind;
    const int n = spec.n;
    switch (family.kind) {
        case K::Cliques: {
            // vertex subsets in lex order; for fixed p this coincides with
            // lex order over the sorted edge tuples
            const int p = family.size;
            std::vector<Vertex> vs(p);
            std::vector<EdgeId> edges(p * (p - 1) / 2);
            // iterative combination enumeration
            for (int i = 0; i < p; ++i) vs[i] = i;
            while (true) {
                int k = 0;
                for (int i = 0; i < p; ++i)
                    for (int j = i + 1; j < p; ++j)
                        edges[k++] = edge_index(spec, vs[i], vs[j]);
                std::sort(edges.begin(), edges.end());
                if (!fn(std::span<const EdgeId>(edges))) return false;
                int i = p - 1;
                while (i >= 0 && vs[i] == n - p + i) --i;
                if (i < 0) break;
                ++vs[i];
                for (int j = i + 1; j < p; ++j) vs[j] = vs[j - 1] + 1;
            }
            return true;
        }
        case K::BiColumns: {
            const int t = family.size;
            if (t > n) return true;  // vacuous
            std::vector<int> cols(t);
            std::vector<EdgeId> edges(2 * t);
            for (int i = 0; i < t; ++i) cols[i] = i;
            while (true) {
                for (int i = 0; i < t; ++i) {
                    edges[i] = cols[i];
                    edges[t + i] = n + cols[i];
                }
                if (!fn(std::span<const EdgeId>(edges))) return false;
                int i = t - 1;
                while (i >= 0 && cols[i] == n - t + i) --i;
                if (i < 0) break;
                ++cols[i];
                for (int j = i + 1; j < t; ++j) cols[j] = cols[j - 1] + 1;
            }
            return true;
        }
        case K::PathsCycles4: {
            std::array<EdgeId, 4> e;
            if (spec.kind == GraphKind::Bipartite2) {
                // paths w_a - u - w_b - v - w_c, one edge set per ordered
                // triple of distinct columns (a,b,c)
                for (int b = 0; b < n; ++b)
                    for (int a = 0; a < n; ++a) {
                        if (a == b) continue;
                        for (int c = 0; c < n; ++c) {
                            if (c == a || c == b) continue;
                            e[0] = std::min(a, b);
                            e[1] = std::max(a, b);
                            e[2] = n + std::min(b, c);
                            e[3] = n + std::max(b, c);
                            if (!fn(std::span<const EdgeId>(e))) return false;
                        }
                    }
                // 4-cycles through column pairs
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        e = {i, j, n + i, n + j};
                        if (!fn(std::span<const EdgeId>(e))) return false;
                    }
                return true;
            }
            // complete graph: 4-edge paths as vertex sequences up to
            // reversal, then 4-cycles with the smallest vertex first
            std::array<EdgeId, 4> se;
            for (int v0 = 0; v0 < n; ++v0)
                for (int v1 = 0; v1 < n; ++v1) {
                    if (v1 == v0) continue;
                    for (int v2 = 0; v2 < n; ++v2) {
                        if (v2 == v0 || v2 == v1) continue;
                        for (int v3 = 0; v3 < n; ++v3) {
                            if (v3 == v0 || v3 == v1 || v3 == v2) continue;
                            for (int v4 = v0 + 1; v4 < n; ++v4) {
                                if (v4 == v1 || v4 == v2 || v4 == v3) continue;
                                se[0] = edge_index(spec, v0, v1);
                                se[1] = edge_index(spec, v1, v2);
                                se[2] = edge_index(spec, v2, v3);
                                se[3] = edge_index(spec, v3, v4);
                                std::sort(se.begin(), se.end());
                                if (!fn(std::span<const EdgeId>(se))) return false;
                            }
                        }
                    }
                }
            for (int v0 = 0; v0 < n; ++v0)
                for (int v1 = v0 + 1; v1 < n; ++v1)
                    for (int v3 = v1 + 1; v3 < n; ++v3)
                        for (int v2 = v0 + 1; v2 < n; ++v2) {
                            if (v2 == v1 || v2 == v3) continue;
                            se[0] = edge_index(spec, v0, v1);
                            se[1] = edge_index(spec, v1, v2);
                            se[2] = edge_index(spec, v2, v3);
                            se[3] = edge_index(spec, v0, v3);
                            std::sort(se.begin(), se.end());
                            if (!fn(std::span<const EdgeId>(se))) return false;
                        }
            return true;
        }
        case K::SmallFourEdge: {
            // 4-edge combinations filtered by vertex span <= 5; combination
            // order is already lex over edge tuples
            const int m = spec.edge_count();
            std::array<EdgeId, 4> e;
            std::array<Vertex, 8> vs;
            for (e[0] = 0; e[0] < m - 3; ++e[0])
                for (e[1] = e[0] + 1; e[1] < m - 2; ++e[1])
                    for (e[2] = e[1] + 1; e[2] < m - 1; ++e[2])
                        for (e[3] = e[2] + 1; e[3] < m; ++e[3]) {
                            for (int i = 0; i < 4; ++i) {
                                auto [a, b] = endpoints(spec, e[i]);
                                vs[2 * i] = a;
                                vs[2 * i + 1] = b;
                            }
                            std::sort(vs.begin(), vs.end());
                            int span = 1;
                            for (int i = 1; i < 8; ++i)
                                if (vs[i] != vs[i - 1]) ++span;
                            if (span > 5) continue;
                            if (!fn(std::span<const EdgeId>(e))) return false;
                        }
            return true;
        }
    }
    throw std::logic_error("unreachable");
}

// True when stream_members already yields lex order over sorted edge tuples.
inline bool stream_is_lex_ordered(const SubgraphFamilyId& family) {
    return family.kind != SubgraphFamilyId::Kind::PathsCycles4;
}

}  // namespace detail

}  // namespace rainbowlab
