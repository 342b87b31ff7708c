#pragma once

#include <optional>
#include <string>

#include "rainbowlab/colorings.hpp"
#include "rainbowlab/graphs.hpp"

namespace rainbowlab {

// Every member of `family` must carry at least q distinct colors.
struct Constraint {
    SubgraphFamilyId family;
    int q;

    bool operator==(const Constraint&) const = default;
    std::string to_string() const;
};

// The named instances used throughout.
Constraint c59();   // (Cliques(5), 9)
Constraint b235();  // (BiColumns(3), 5)
Constraint b247();  // (BiColumns(4), 7)
Constraint pc3();   // (PathsCycles4, 3)
Constraint sfe3();  // (SmallFourEdge, 3)

// Lowercase token -> constraint; throws on unknown names.
Constraint constraint_by_name(const std::string& name);

struct Witness {
    Member member;  // sorted edge ids of the violating subgraph
    int observed;
    int required;
};

struct Verdict {
    bool pass;
    std::optional<Witness> witness;  // lexicographically first violation
};

// Pass iff every member of k.family has >= q distinct colors.  Vacuous
// families pass.  Short-circuits on the first violation in enumeration
// order (lex over sorted edge tuples).
Verdict verify(const Coloring& c, const Constraint& k);

// Exhaustive mode: counts every violating member, still reporting the
// lex-first one.
struct ViolationReport {
    long long violations;
    std::optional<Witness> first;
};
ViolationReport verify_all(const Coloring& c, const Constraint& k);

// Color-sharing statistics between the two left-vertex palettes of a
// K_{2,n} coloring.  Pure measurement; asserts nothing.
struct Eq1Stats {
    int shared;      // |c(u) n c(v)|
    int symdiff;     // |(c(u) u c(v)) \ (c(u) n c(v))|
    int union_size;  // |c(u) u c(v)|
    bool eq1_holds;  // shared <= floor(symdiff / 2)
    bool eq2_holds;  // union_size >= ceil(3n/2)
};
Eq1Stats eq1_stats(const Coloring& c);

}  // namespace rainbowlab
