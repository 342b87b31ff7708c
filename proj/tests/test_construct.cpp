#include <doctest.h>

#include "rainbowlab/constraints.hpp"
#include "rainbowlab/construct.hpp"

using namespace rainbowlab;

TEST_CASE("recipe base cases") {
    CHECK(construct_k2n(2).colors == std::vector<int>{0, 1, 2, 0});
    CHECK(distinct_colors(construct_k2n(2)) == 3);

    auto c3 = construct_k2n(3);
    CHECK(distinct_colors(c3) == 5);
    int doubled = 0;
    for (const auto& cls : color_classes(c3))
        if (cls.size() == 2) ++doubled;
    CHECK(doubled == 1);

    CHECK(construct_k2n(4).colors == std::vector<int>{0, 1, 2, 3, 4, 5, 1, 0});

    CHECK_THROWS_AS(construct_k2n(1), std::invalid_argument);
}

TEST_CASE("recipe structure for n up to 40") {
    for (int n = 2; n <= 40; ++n) {
        auto c = construct_k2n(n);
        CHECK(distinct_colors(c) == (3 * n + 1) / 2);  // ceil(3n/2)
        CHECK(canonicalize(c) == c);
        CHECK(is_proper(c));
        for (const auto& cls : color_classes(c)) {
            REQUIRE(cls.size() <= 2);
            if (cls.size() == 2) {
                // one u-edge on column i, one v-edge on column n-1-i, i < n/2
                int i = cls[0];
                CHECK(i < n / 2);
                CHECK(cls[1] == 2 * n - 1 - i);
            }
        }
        CHECK(verify(c, pc3()).pass);
        if (n >= 3) CHECK(verify(c, b235()).pass);
    }
}

TEST_CASE("rainbow and monochrome baselines") {
    auto k5 = GraphSpec::complete(5);
    auto rb = rainbow(k5);
    CHECK(distinct_colors(rb) == 10);
    CHECK(canonicalize(rb) == rb);
    CHECK(verify(rb, c59()).pass);
    CHECK(verify(rb, pc3()).pass);
    CHECK(verify(rb, sfe3()).pass);

    auto mono = monochrome(k5);
    CHECK(distinct_colors(mono) == 1);
    CHECK(!verify(mono, c59()).pass);
    CHECK(!verify(mono, pc3()).pass);
    CHECK(!verify(mono, sfe3()).pass);

    CHECK(distinct_colors(rainbow(GraphSpec::bipartite2(3))) == 6);
    CHECK(verify(rainbow(GraphSpec::bipartite2(3)), b235()).pass);
}
