#pragma once

#include "rainbowlab/colorings.hpp"

namespace rainbowlab {

// The explicit K_{2,n} coloring with ceil(3n/2) colors: with r = floor(n/2),
// edge (u,w_i) and edge (v,w_{n-1-i}) share color i for i < r; the remaining
// 2(n-r) edges get fresh distinct colors in edge-index order.  Canonical.
Coloring construct_k2n(int n);

Coloring rainbow(const GraphSpec& spec);
Coloring monochrome(const GraphSpec& spec);

}  // namespace rainbowlab
