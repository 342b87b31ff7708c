// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Time limits are asserted, not just reported.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "rainbowlab/bounds.hpp"
#include "rainbowlab/construct.hpp"
#include "rainbowlab/search.hpp"

using namespace rainbowlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    const char* label;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::string detail;

    explicit Criterion(const char* l) : label(l) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }

    ~Criterion() {
        double secs =
            std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("%s %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", label, secs,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

// Golden regression value for the minimum colors of a (5,9)-coloring of
// K_6, recorded from the first proven branch-and-bound run.
constexpr int kK6MinColorsGolden = 12;

}  // namespace

static void criterion1() {
    Criterion c("1: lemma values, exhaustive B235 minima on K_{2,n}");
    for (int n = 3; n <= 6; ++n) {
        auto t0 = Clock::now();
        auto r = min_colors_exhaustive(GraphSpec::bipartite2(n), b235());
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        c.expect(r.min_colors == (3 * n + 1) / 2,
                 "n=" + std::to_string(n) + " got " + std::to_string(r.min_colors));
        c.expect(r.proven_optimal, "n=" + std::to_string(n) + " not proven");
        double limit = n <= 5 ? 60.0 : 600.0;
        c.expect(secs < limit, "n=" + std::to_string(n) + " too slow");
    }
}

static void criterion2() {
    Criterion c("2: engine agreement on every pairing with <= 10 edges");
    std::vector<GraphSpec> specs = {GraphSpec::complete(4), GraphSpec::complete(5)};
    for (int n = 2; n <= 5; ++n) specs.push_back(GraphSpec::bipartite2(n));
    for (const auto& spec : specs) {
        if (spec.edge_count() > 10) continue;
        for (const Constraint& k : {c59(), b235(), b247(), pc3(), sfe3()}) {
            if (!family_admissible(spec, k.family)) continue;
            auto bb = min_colors_bb(spec, k);
            auto ex = min_colors_exhaustive(spec, k);
            c.expect(bb.min_colors == ex.min_colors && bb.proven_optimal &&
                         ex.proven_optimal,
                     spec.to_string() + " / " + k.to_string());
        }
    }
}

static void criterion3() {
    Criterion c("3: construction sweep n in [2,300]");
    auto t0 = Clock::now();
    for (int n = 2; n <= 300; ++n) {
        auto col = construct_k2n(n);
        bool ok = distinct_colors(col) == (3 * n + 1) / 2 && is_proper(col) &&
                  verify(col, pc3()).pass &&
                  (n < 3 || verify(col, b235()).pass);
        if (!ok) {
            c.expect(false, "n=" + std::to_string(n));
            return;
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(secs < 30.0, "sweep took too long");
}

static void criterion4() {
    Criterion c("4: K_5 census over all 115975 partitions");
    auto t0 = Clock::now();
    auto rep = census(GraphSpec::complete(5), {c59(), sfe3(), pc3()});
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(rep.total_partitions == 115975, "Bell(10) mismatch");
    c.expect(rep.pass_counts[0] == rep.pass_counts[1], "c59 vs sfe3 counts");
    c.expect(rep.contained[0][1] && rep.contained[1][0],
             "c59 and sfe3 not mutually contained");
    c.expect(rep.contained[0][2], "c59 does not imply pc3");
    c.expect(!rep.contained[2][0], "pc3 implies c59 (should be strict)");
    if (rep.counterexample[2][0]) {
        const auto& cx = *rep.counterexample[2][0];
        c.expect(!verify(cx, c59()).pass && verify(cx, pc3()).pass,
                 "counterexample does not re-verify");
    } else {
        c.expect(false, "no stored counterexample");
    }
    c.expect(secs < 60.0, "census too slow");
}

static void criterion5() {
    Criterion c("5: implication scans");
    auto cx = implication_scan(GraphSpec::bipartite2(4), b235(), b247());
    c.expect(cx.has_value(), "no B235 vs B247 counterexample");
    if (cx)
        c.expect(verify(*cx, b235()).pass && !verify(*cx, b247()).pass,
                 "scan counterexample does not re-verify");
    auto recipe = construct_k2n(4);
    c.expect(verify(recipe, b235()).pass && !verify(recipe, b247()).pass,
             "construct_k2n(4) is not a B235-pass/B247-fail witness");
    c.expect(!implication_scan(GraphSpec::complete(5), c59(), pc3()),
             "c59 -> pc3 scan found a spurious counterexample");
}

static void criterion6() {
    Criterion c("6: exact value on (K_5, C59)");
    auto t0 = Clock::now();
    auto r = min_colors_bb(GraphSpec::complete(5), c59());
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(r.min_colors == 9, "got " + std::to_string(r.min_colors));
    c.expect(r.proven_optimal, "not proven");
    c.expect(secs < 1.0, "took >= 1s");
}

static void criterion7() {
    Criterion c("7: bounds exactness");
    c.expect(claimed_bound(5) == Rational(8, 1), "claimed_bound(5)");
    auto ref = reference_bounds(10);
    c.expect(ref.toth == 14 && ref.proper_case == 23 && ref.lemma_value == 15,
             "reference_bounds(10)");
    auto eq3 = eq3_min_s(10);
    c.expect(eq3.root == 15.0 && eq3.min_integer_s == 15, "eq3_min_s(10)");
    for (const auto& row : bound_table(5, 30))
        c.expect(row.discrepancy && row.claimed_ceil > row.eq3_ceil,
                 "row n=" + std::to_string(row.n) + " not flagged");
}

static void criterion8() {
    Criterion c("8: relabeling invariance on 1000 random K_6 colorings");
    std::mt19937 rng(20240817);
    auto k6 = GraphSpec::complete(6);
    std::uniform_int_distribution<int> pick(0, k6.edge_count() - 1);
    for (int i = 0; i < 1000; ++i) {
        Coloring col{k6, std::vector<int>(k6.edge_count())};
        for (auto& x : col.colors) x = pick(rng);
        std::vector<int> perm(k6.edge_count());
        for (size_t j = 0; j < perm.size(); ++j) perm[j] = (int)j;
        std::shuffle(perm.begin(), perm.end(), rng);
        Coloring relabeled = col;
        for (auto& x : relabeled.colors) x = perm[x];
        for (const Constraint& k : {c59(), pc3(), sfe3()})
            if (verify(col, k).pass != verify(relabeled, k).pass) {
                c.expect(false, "verdict changed at i=" + std::to_string(i));
                return;
            }
        auto canon = canonicalize(col);
        if (canonicalize(canon) != canon) {
            c.expect(false, "canonicalize not idempotent at i=" + std::to_string(i));
            return;
        }
    }
}

static void criterion9() {
    Criterion c("9: parallel determinism on (K_6, C59)");
    Budget budget{100'000'000, 3600.0};
    auto seq = min_colors_bb(GraphSpec::complete(6), c59(), budget, 1);
    auto par = min_colors_bb(GraphSpec::complete(6), c59(), budget, 0);  // all cores
    c.expect(seq.min_colors == par.min_colors, "min_colors differ");
    c.expect(seq.proven_optimal == par.proven_optimal, "proven flags differ");
    c.expect(seq.proven_optimal, "sequential run not proven within budget");
    c.expect(seq.min_colors == kK6MinColorsGolden,
             "golden regression: got " + std::to_string(seq.min_colors));
}

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    return failures == 0 ? 0 : 1;
}
