#include "rainbowlab/constraints.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

namespace rainbowlab {

std::string Constraint::to_string() const {
    return family.to_string() + " q>=" + std::to_string(q);
}

Constraint c59() { return {SubgraphFamilyId::cliques(5), 9}; }
Constraint b235() { return {SubgraphFamilyId::bi_columns(3), 5}; }
Constraint b247() { return {SubgraphFamilyId::bi_columns(4), 7}; }
Constraint pc3() { return {SubgraphFamilyId::paths_cycles4(), 3}; }
Constraint sfe3() { return {SubgraphFamilyId::small_four_edge(), 3}; }

Constraint constraint_by_name(const std::string& name) {
    if (name == "c59") return c59();
    if (name == "b235") return b235();
    if (name == "b247") return b247();
    if (name == "pc3") return pc3();
    if (name == "sfe3") return sfe3();
    throw std::invalid_argument("unknown constraint name: " + name);
}

namespace {

// distinct colors among a tiny edge set, no validation in the hot loop
inline int distinct_on(const std::vector<int>& colors,
                       std::span<const EdgeId> member) {
    int seen[16];
    int count = 0;
    for (EdgeId e : member) {
        int col = colors[e];
        bool dup = false;
        for (int i = 0; i < count; ++i)
            if (seen[i] == col) { dup = true; break; }
        if (!dup) seen[count++] = col;
    }
    return count;
}

bool member_less(std::span<const EdgeId> a, std::span<const EdgeId> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Memoized member lists for desk-scale specs; verification is the inner
// loop of the search and census paths.
const std::vector<Member>& cached_members(const GraphSpec& spec,
                                          const SubgraphFamilyId& family) {
    using Key = std::tuple<GraphKind, int, SubgraphFamilyId::Kind, int>;
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<std::vector<Member>>> cache;
    Key key{spec.kind, spec.n, family.kind, family.size};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto members =
        std::make_unique<std::vector<Member>>(enumerate_members(spec, family));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace(key, std::move(members));
    return *it->second;
}

// Small specs scan the cached lex-ordered list and can short-circuit;
// large bipartite specs are streamed without materializing.
constexpr int kMaterializeEdgeCap = 64;

}  // namespace

Verdict verify(const Coloring& c, const Constraint& k) {
    validate(c);
    require_admissible(c.spec, k.family);
    std::optional<Witness> worst;
    if (c.spec.edge_count() <= kMaterializeEdgeCap) {
        for (const Member& m : cached_members(c.spec, k.family)) {
            int got = distinct_on(c.colors, m);
            if (got < k.q) return {false, Witness{m, got, k.q}};
        }
        return {true, std::nullopt};
    }
    if (detail::stream_is_lex_ordered(k.family)) {
        detail::stream_members(c.spec, k.family, [&](std::span<const EdgeId> m) {
            int got = distinct_on(c.colors, m);
            if (got < k.q) {
                worst = Witness{Member(m.begin(), m.end()), got, k.q};
                return false;  // lex order: first hit is the witness
            }
            return true;
        });
    } else {
        // generation order is not lex; keep the lex-smallest violator
        detail::stream_members(c.spec, k.family, [&](std::span<const EdgeId> m) {
            int got = distinct_on(c.colors, m);
            if (got < k.q && (!worst || member_less(m, worst->member)))
                worst = Witness{Member(m.begin(), m.end()), got, k.q};
            return true;
        });
    }
    if (worst) return {false, std::move(worst)};
    return {true, std::nullopt};
}

ViolationReport verify_all(const Coloring& c, const Constraint& k) {
    validate(c);
    require_admissible(c.spec, k.family);
    long long violations = 0;
    std::optional<Witness> first;
    detail::stream_members(c.spec, k.family, [&](std::span<const EdgeId> m) {
        int got = distinct_on(c.colors, m);
        if (got < k.q) {
            ++violations;
            if (!first || member_less(m, first->member))
                first = Witness{Member(m.begin(), m.end()), got, k.q};
        }
        return true;
    });
    return {violations, std::move(first)};
}

Eq1Stats eq1_stats(const Coloring& c) {
    validate(c);
    if (c.spec.kind != GraphKind::Bipartite2)
        throw std::invalid_argument("eq1_stats needs a bipartite2 coloring");
    const int n = c.spec.n;
    std::set<int> cu(c.colors.begin(), c.colors.begin() + n);
    std::set<int> cv(c.colors.begin() + n, c.colors.end());
    int shared = 0;
    for (int col : cu) shared += cv.count(col);
    std::set<int> all(cu);
    all.insert(cv.begin(), cv.end());
    Eq1Stats s;
    s.shared = shared;
    s.union_size = int(all.size());
    s.symdiff = s.union_size - shared;
    s.eq1_holds = s.shared <= s.symdiff / 2;
    s.eq2_holds = 2 * s.union_size >= 3 * n;
    return s;
}

}  // namespace rainbowlab
