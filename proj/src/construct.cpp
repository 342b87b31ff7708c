#include "rainbowlab/construct.hpp"

#include <numeric>

namespace rainbowlab {

Coloring construct_k2n(int n) {
    if (n < 2) throw std::invalid_argument("construct_k2n needs n >= 2");
    const int r = n / 2;
    Coloring c{GraphSpec::bipartite2(n), std::vector<int>(2 * n, -1)};
    for (int i = 0; i < r; ++i) {
        c.colors[i] = i;              // (u, w_i)
        c.colors[2 * n - 1 - i] = i;  // (v, w_{n-1-i})
    }
    int fresh = r;
    for (int e = 0; e < 2 * n; ++e)
        if (c.colors[e] < 0) c.colors[e] = fresh++;
    return c;  // fresh colors rise with edge index, so already canonical
}

Coloring rainbow(const GraphSpec& spec) {
    Coloring c{spec, std::vector<int>(spec.edge_count())};
    std::iota(c.colors.begin(), c.colors.end(), 0);
    return c;
}

Coloring monochrome(const GraphSpec& spec) {
    return {spec, std::vector<int>(spec.edge_count(), 0)};
}

}  // namespace rainbowlab
