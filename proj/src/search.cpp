#include "rainbowlab/search.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

namespace rainbowlab {

namespace {

using Clock = std::chrono::steady_clock;

struct MemberTable {
    std::vector<Member> members;          // lex order
    std::vector<std::vector<int>> by_edge;  // edge id -> member indices
    int q = 0;

    MemberTable(const GraphSpec& spec, const Constraint& k) : q(k.q) {
        require_admissible(spec, k.family);
        members = enumerate_members(spec, k.family);
        by_edge.resize(spec.edge_count());
        for (int i = 0; i < (int)members.size(); ++i)
            for (EdgeId e : members[i]) by_edge[e].push_back(i);
    }

    // Full check of one complete assignment, short-circuiting.
    bool passes(const std::vector<int>& colors) const {
        for (const Member& m : members) {
            uint64_t mask = 0;
            for (EdgeId e : m) mask |= uint64_t(1) << colors[e];
            int need = q - (int)std::popcount(mask);
            if (need > 0) return false;
        }
        return true;
    }

    // After edges 0..e have been colored: can every member containing e
    // still reach q colors?
    bool feasible_after(const std::vector<int>& colors, EdgeId e) const {
        for (int i : by_edge[e]) {
            const Member& m = members[i];
            uint64_t mask = 0;
            int uncolored = 0;
            for (EdgeId x : m) {
                if (x <= e)
                    mask |= uint64_t(1) << colors[x];
                else
                    ++uncolored;
            }
            if ((int)std::popcount(mask) + uncolored < q) return false;
        }
        return true;
    }
};

struct BbShared {
    std::atomic<int> best;
    std::atomic<long long> nodes{0};
    std::atomic<bool> out_of_budget{false};
    long long max_nodes;
    Clock::time_point deadline;
};

// Sequential DFS from a partial assignment of edges [0, depth).
// Updates shared.best and records the first strictly improving solution.
struct BbWorker {
    const MemberTable& table;
    BbShared& shared;
    int edge_count;
    std::vector<int> colors;
    std::optional<std::vector<int>> found;
    long long local_nodes = 0;

    void dfs(int e, int maxused) {
        if (maxused + 1 >= shared.best.load(std::memory_order_relaxed)) return;
        if (e == edge_count) {
            // feasible_after pruning already certified every member
            int used = maxused + 1;
            int prev = shared.best.load();
            while (used < prev) {
                if (shared.best.compare_exchange_weak(prev, used)) {
                    found = colors;
                    break;
                }
            }
            return;
        }
        for (int col = 0; col <= maxused + 1; ++col) {
            if (col > maxused && maxused + 2 >= shared.best.load(std::memory_order_relaxed))
                break;
            if (++local_nodes % 4096 == 0) {
                shared.nodes.fetch_add(4096, std::memory_order_relaxed);
                if (shared.nodes.load(std::memory_order_relaxed) > shared.max_nodes ||
                    Clock::now() > shared.deadline)
                    shared.out_of_budget.store(true);
            }
            if (shared.out_of_budget.load(std::memory_order_relaxed)) return;
            colors[e] = col;
            if (table.feasible_after(colors, e))
                dfs(e + 1, std::max(maxused, col));
        }
        colors[e] = -1;
    }
};

// Deterministic first solution using at most `limit` colors, in
// lexicographic order of canonical color sequences.
struct FirstSolution {
    const MemberTable& table;
    int edge_count;
    int limit;
    std::vector<int> colors;
    long long nodes = 0;

    bool dfs(int e, int maxused) {
        if (e == edge_count) return true;
        for (int col = 0; col <= maxused + 1 && col < limit; ++col) {
            ++nodes;
            colors[e] = col;
            if (table.feasible_after(colors, e) &&
                dfs(e + 1, std::max(maxused, col)))
                return true;
        }
        colors[e] = -1;
        return false;
    }
};

int resolve_threads(int threads) {
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? int(hw) : 1;
    }
    return threads;
}

}  // namespace

SearchResult min_colors_bb(const GraphSpec& spec, const Constraint& k,
                           const Budget& budget, int threads) {
    require_admissible(spec, k.family);
    if (budget.max_nodes <= 0 || budget.max_seconds <= 0)
        throw std::invalid_argument("budget must be positive");
    const int m = spec.edge_count();
    if (m > 64)
        throw budget_error("branch and bound supports at most 64 edges");
    threads = resolve_threads(threads);

    auto start = Clock::now();
    MemberTable table(spec, k);
    BbShared shared{};
    shared.best.store(m + 1);  // a rainbow coloring has m colors
    shared.max_nodes = budget.max_nodes;
    shared.deadline =
        start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(budget.max_seconds));

    // Rainbow may itself fail (q above the member size); seed the bound
    // only if it passes.
    std::vector<int> rainbow_colors(m);
    for (int i = 0; i < m; ++i) rainbow_colors[i] = i;
    std::optional<std::vector<int>> best_colors;
    if (table.passes(rainbow_colors)) {
        best_colors = rainbow_colors;
        shared.best.store(m);
    } else {
        shared.best.store(m + 1);
    }

    long long total_nodes = 0;
    if (threads == 1 || m <= 4) {
        BbWorker w{table, shared, m, std::vector<int>(m, -1)};
        w.dfs(0, -1);
        total_nodes = w.local_nodes;
        if (w.found) best_colors = w.found;
    } else {
        // expand a frontier of prefixes, then split across workers
        int depth = 2;
        std::vector<std::vector<int>> roots;
        while (true) {
            roots.clear();
            std::vector<int> prefix(m, -1);
            // enumerate prefixes of the first `depth` edges under the same
            // symmetry breaking and pruning
            auto expand = [&](auto&& self, int e, int maxused) -> void {
                if (e == depth) {
                    roots.push_back(prefix);
                    return;
                }
                for (int col = 0; col <= maxused + 1; ++col) {
                    prefix[e] = col;
                    if (table.feasible_after(prefix, e))
                        self(self, e + 1, std::max(maxused, col));
                }
                prefix[e] = -1;
            };
            expand(expand, 0, -1);
            if ((int)roots.size() >= 4 * threads || depth >= m) break;
            ++depth;
        }
        std::atomic<size_t> next{0};
        std::mutex found_mutex;
        long long worker_nodes = 0;
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                BbWorker w{table, shared, m, std::vector<int>(m, -1)};
                for (size_t i = next.fetch_add(1); i < roots.size();
                     i = next.fetch_add(1)) {
                    w.colors = roots[i];
                    int maxused = -1;
                    for (int e = 0; e < depth; ++e)
                        maxused = std::max(maxused, w.colors[e]);
                    w.dfs(depth, maxused);
                }
                std::lock_guard<std::mutex> lock(found_mutex);
                worker_nodes += w.local_nodes;
                if (w.found &&
                    (!best_colors ||
                     *std::max_element(w.found->begin(), w.found->end()) <
                         *std::max_element(best_colors->begin(), best_colors->end())))
                    best_colors = w.found;
            });
        }
        for (auto& th : pool) th.join();
        total_nodes = worker_nodes;
    }

    SearchResult r;
    r.proven_optimal = !shared.out_of_budget.load();
    if (best_colors) {
        r.min_colors = *std::max_element(best_colors->begin(), best_colors->end()) + 1;
        if (r.proven_optimal) {
            // deterministic tie-break: lex-smallest canonical sequence
            FirstSolution fs{table, m, r.min_colors, std::vector<int>(m, -1)};
            bool ok = fs.dfs(0, -1);
            total_nodes += fs.nodes;
            if (ok) best_colors = fs.colors;
        }
        r.optimal = canonicalize(Coloring{spec, *best_colors});
    } else {
        r.min_colors = 0;  // nothing satisfies k (within the bound m)
    }
    r.nodes_explored = total_nodes;
    r.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

namespace {

// Restricted growth strings: colors[e] in 0..max(colors[0..e-1])+1.
// Calls fn(colors) for every complete string.  fn returns false to stop.
template <typename Fn>
bool for_each_partition(int m, Fn&& fn) {
    std::vector<int> colors(m, 0);
    auto rec = [&](auto&& self, int e, int maxused) -> bool {
        if (e == m) return fn(colors);
        for (int col = 0; col <= maxused + 1; ++col) {
            colors[e] = col;
            if (!self(self, e + 1, std::max(maxused, col))) return false;
        }
        return true;
    };
    return rec(rec, 0, -1);
}

void require_exhaustive_cap(const GraphSpec& spec) {
    if (spec.edge_count() > kExhaustiveEdgeCap)
        throw budget_error("exhaustive enumeration capped at " +
                           std::to_string(kExhaustiveEdgeCap) + " edges (got " +
                           std::to_string(spec.edge_count()) + ")");
}

}  // namespace

SearchResult min_colors_exhaustive(const GraphSpec& spec, const Constraint& k) {
    require_admissible(spec, k.family);
    require_exhaustive_cap(spec);
    auto start = Clock::now();
    MemberTable table(spec, k);
    const int m = spec.edge_count();

    SearchResult r;
    r.proven_optimal = true;
    int best = m + 1;
    std::optional<std::vector<int>> best_colors;
    long long nodes = 0;

    std::vector<int> colors(m, 0);
    // plain RGS recursion; prunes only on class count, checks members at
    // the leaves -- deliberately independent of the bb engine's pruning
    auto rec = [&](auto&& self, int e, int maxused) -> void {
        if (maxused + 1 >= best) return;
        if (e == m) {
            ++nodes;
            if (table.passes(colors)) {
                best = maxused + 1;
                best_colors = colors;
            }
            return;
        }
        for (int col = 0; col <= maxused + 1; ++col) {
            colors[e] = col;
            self(self, e + 1, std::max(maxused, col));
        }
    };
    rec(rec, 0, -1);

    if (best_colors) {
        r.min_colors = best;
        r.optimal = Coloring{spec, *best_colors};  // RGS is already canonical
    }
    r.nodes_explored = nodes;
    r.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

CensusReport census(const GraphSpec& spec, const std::vector<Constraint>& ks) {
    require_exhaustive_cap(spec);
    const int m = spec.edge_count();
    const int nk = (int)ks.size();
    std::vector<MemberTable> tables;
    tables.reserve(nk);
    for (const Constraint& k : ks) tables.emplace_back(spec, k);

    CensusReport report;
    report.spec = spec;
    report.constraints = ks;
    report.pass_counts.assign(nk, 0);
    report.contained.assign(nk, std::vector<bool>(nk, true));
    report.counterexample.assign(
        nk, std::vector<std::optional<Coloring>>(nk));

    std::vector<char> pass(nk);
    for_each_partition(m, [&](const std::vector<int>& colors) {
        ++report.total_partitions;
        for (int i = 0; i < nk; ++i) {
            pass[i] = tables[i].passes(colors);
            if (pass[i]) ++report.pass_counts[i];
        }
        for (int a = 0; a < nk; ++a) {
            if (!pass[a]) continue;
            for (int b = 0; b < nk; ++b) {
                // first counterexample in RGS order wins
                if (!pass[b] && report.contained[a][b]) {
                    report.contained[a][b] = false;
                    report.counterexample[a][b] = Coloring{spec, colors};
                }
            }
        }
        return true;
    });
    return report;
}

std::optional<Coloring> implication_scan(const GraphSpec& spec,
                                         const Constraint& a,
                                         const Constraint& b) {
    require_admissible(spec, a.family);
    require_admissible(spec, b.family);
    require_exhaustive_cap(spec);
    if (a == b) return std::nullopt;
    MemberTable ta(spec, a), tb(spec, b);
    std::optional<Coloring> hit;
    for_each_partition(spec.edge_count(), [&](const std::vector<int>& colors) {
        if (ta.passes(colors) && !tb.passes(colors)) {
            hit = Coloring{spec, colors};
            return false;
        }
        return true;
    });
    return hit;
}

}  // namespace rainbowlab
