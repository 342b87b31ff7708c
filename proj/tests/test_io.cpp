#include <doctest.h>

#include <random>
#include <sstream>

#include "rainbowlab/coloring_io.hpp"
#include "rainbowlab/construct.hpp"
#include "test_util.hpp"

using namespace rainbowlab;

TEST_CASE("bipartite writer output is exact") {
    std::ostringstream out;
    write_coloring(out, construct_k2n(3));
    CHECK(out.str() ==
          "graph bipartite2 3\n"
          "u 0 0\n"
          "u 1 1\n"
          "u 2 2\n"
          "v 0 3\n"
          "v 1 4\n"
          "v 2 0\n");
}

TEST_CASE("round trip reproduces canonical colorings") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 100; ++i) {
        for (GraphSpec spec :
             {GraphSpec::complete(5), GraphSpec::bipartite2(4)}) {
            auto c = canonicalize(testutil::random_coloring(spec, rng));
            std::ostringstream out;
            write_coloring(out, c);
            std::istringstream in(out.str());
            CHECK(read_coloring(in) == c);
        }
    }
}

TEST_CASE("parse is order-insensitive and skips comments") {
    std::istringstream in(
        "# a K_{2,2} coloring\n"
        "graph bipartite2 2\n"
        "\n"
        "v 1 0   # out of order on purpose\n"
        "u 0 0\n"
        "u 1 1\n"
        "v 0 2\n");
    auto c = read_coloring(in);
    CHECK(c.spec == GraphSpec::bipartite2(2));
    CHECK(c.colors == std::vector<int>{0, 1, 2, 0});
}

TEST_CASE("parse errors") {
    auto expect_throw = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_coloring(in), std::runtime_error);
    };
    expect_throw("");                                      // no header
    expect_throw("graph torus 3\n");                       // unknown kind
    expect_throw("graph complete 3\n0 1 0\n0 1 1\n1 2 2\n0 2 3\n");  // dup
    expect_throw("graph complete 3\n0 1 0\n");             // missing edges
    expect_throw("graph complete 3\n0 1 0\n0 2 1\n1 2 -4\n");  // negative
    expect_throw("graph bipartite2 2\nu v 0\n");           // same-side pair
    expect_throw("graph complete 3\n0 1\n");               // short line
}
