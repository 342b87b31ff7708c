#include "rainbowlab/graphs.hpp"

namespace rainbowlab {

std::string GraphSpec::to_string() const {
    return (kind == GraphKind::Complete ? "complete:" : "bipartite2:") +
           std::to_string(n);
}

std::string SubgraphFamilyId::to_string() const {
    switch (kind) {
        case Kind::Cliques: return "cliques(" + std::to_string(size) + ")";
        case Kind::BiColumns: return "bicolumns(" + std::to_string(size) + ")";
        case Kind::PathsCycles4: return "paths_cycles4";
        case Kind::SmallFourEdge: return "small_four_edge";
    }
    return "?";
}

EdgeId edge_index(const GraphSpec& spec, Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= spec.vertex_count())
        throw std::invalid_argument("vertex out of range");
    if (spec.kind == GraphKind::Complete) {
        // lexicographic rank of (a,b) with a < b
        long long before = (long long)a * spec.n - (long long)a * (a + 1) / 2;
        return int(before + (b - a - 1));
    }
    if (a >= 2) throw std::invalid_argument("bipartite edge needs u or v");
    if (b < 2) throw std::invalid_argument("bipartite edge joins two left vertices");
    int col = b - 2;
    return a == 0 ? col : spec.n + col;
}

std::pair<Vertex, Vertex> endpoints(const GraphSpec& spec, EdgeId e) {
    if (e < 0 || e >= spec.edge_count())
        throw std::invalid_argument("edge id out of range");
    if (spec.kind == GraphKind::Bipartite2) {
        int left = e < spec.n ? 0 : 1;
        int col = e < spec.n ? e : e - spec.n;
        return {left, 2 + col};
    }
    int a = 0;
    int remaining = e;
    while (remaining >= spec.n - 1 - a) {
        remaining -= spec.n - 1 - a;
        ++a;
    }
    return {a, a + 1 + remaining};
}

std::string vertex_name(const GraphSpec& spec, Vertex x) {
    if (spec.kind == GraphKind::Complete) return std::to_string(x);
    if (x == 0) return "u";
    if (x == 1) return "v";
    return std::to_string(x - 2);
}

bool family_admissible(const GraphSpec& spec, const SubgraphFamilyId& family) {
    using K = SubgraphFamilyId::Kind;
    switch (family.kind) {
        case K::Cliques:
            return spec.kind == GraphKind::Complete && family.size >= 2 &&
                   spec.n >= family.size;
        case K::BiColumns:
            // n < t is admissible but vacuous: the family has no members
            return spec.kind == GraphKind::Bipartite2 && family.size >= 1;
        case K::PathsCycles4:
        case K::SmallFourEdge:
            return true;
    }
    return false;
}

void require_admissible(const GraphSpec& spec, const SubgraphFamilyId& family) {
    if (!family_admissible(spec, family))
        throw std::invalid_argument("family " + family.to_string() +
                                    " is not admissible for " + spec.to_string());
}

int member_edge_count(const SubgraphFamilyId& family) {
    using K = SubgraphFamilyId::Kind;
    switch (family.kind) {
        case K::Cliques: return family.size * (family.size - 1) / 2;
        case K::BiColumns: return 2 * family.size;
        case K::PathsCycles4:
        case K::SmallFourEdge: return 4;
    }
    return 0;
}

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

long long count_members(const GraphSpec& spec, const SubgraphFamilyId& family) {
    require_admissible(spec, family);
    using K = SubgraphFamilyId::Kind;
    const long long n = spec.n;
    switch (family.kind) {
        case K::Cliques: return binomial(n, family.size);
        case K::BiColumns: return binomial(n, family.size);
        case K::PathsCycles4:
            if (spec.kind == GraphKind::Bipartite2)
                return n * (n - 1) * (n - 2) + binomial(n, 2);
            // 5-vertex paths up to reversal, plus 3 cycles per 4-subset
            return n * (n - 1) * (n - 2) * (n - 3) * (n - 4) / 2 +
                   3 * binomial(n, 4);
        case K::SmallFourEdge: {
            long long count = 0;
            detail::stream_members(spec, family,
                                   [&](std::span<const EdgeId>) {
                                       ++count;
                                       return true;
                                   });
            return count;
        }
    }
    return 0;
}

std::vector<Member> enumerate_members(const GraphSpec& spec,
                                      const SubgraphFamilyId& family) {
    require_admissible(spec, family);
    std::vector<Member> out;
    detail::stream_members(spec, family, [&](std::span<const EdgeId> m) {
        out.emplace_back(m.begin(), m.end());
        return true;
    });
    if (!detail::stream_is_lex_ordered(family))
        std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rainbowlab
