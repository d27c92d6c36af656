#include <stdexcept>

#include "doctest.h"
#include "nanoread/read_graph.hpp"
#include "nanoread/read_vector.hpp"

using namespace nanoread;

TEST_CASE("confusability graph edges match pairwise read distances") {
    for (int t : {1, 2}) {
        const ReadGraph g = build_read_graph(6, 2, t);
        REQUIRE(g.order == 64);
        for (std::uint32_t a = 0; a < g.order; ++a) {
            CHECK_FALSE(g.adjacent(a, a));
            const ReadVector ra = read_vector(BinaryWord::from_uint(a, 6), 2);
            for (std::uint32_t b = a + 1; b < g.order; ++b) {
                const ReadVector rb = read_vector(BinaryWord::from_uint(b, 6), 2);
                const bool confusable = hamming_distance(ra, rb) <= 2 * t;
                CHECK(g.adjacent(a, b) == confusable);
                CHECK(g.adjacent(b, a) == confusable);
            }
        }
    }
}

TEST_CASE("graph degree and edge bookkeeping") {
    const ReadGraph g = build_read_graph(5, 2, 1);
    std::uint64_t twice_edges = 0;
    for (std::uint32_t v = 0; v < g.order; ++v) twice_edges += g.degree(v);
    CHECK(twice_edges == 2 * g.edge_count());
}

TEST_CASE("largest safe word sets at small lengths") {
    // Exact optima for window 2 under two substitutions.
    const int expect[] = {2, 3, 5, 8};
    for (int n = 4; n <= 7; ++n) {
        const MisResult res = max_independent_set(n, 2, 2);
        CHECK(res.exact);
        CHECK(res.size == expect[n - 4]);
        REQUIRE(res.witness.size() == std::size_t(res.size.get_ui()));
        // Witness words pairwise clear the distance threshold.
        CHECK(is_t_sub_read_code(res.witness, 2, 2).ok);
    }

    const MisResult one_sub = max_independent_set(6, 2, 1);
    CHECK(one_sub.exact);
    CHECK(one_sub.size == 20);
    CHECK(is_t_sub_read_code(one_sub.witness, 2, 1).ok);
}

TEST_CASE("zero substitutions admit every word") {
    const MisResult res = max_independent_set(20, 3, 0);
    CHECK(res.exact);
    CHECK(res.size == mpz_class(1) << 20);
    CHECK(res.witness.empty());
}

TEST_CASE("greedy baseline is independent and no better than exact") {
    for (int n = 4; n <= 7; ++n) {
        const ReadGraph g = build_read_graph(n, 2, 2);
        const auto greedy = greedy_independent_set(g);
        for (std::size_t i = 0; i < greedy.size(); ++i) {
            for (std::size_t j = i + 1; j < greedy.size(); ++j) {
                CHECK_FALSE(g.adjacent(greedy[i], greedy[j]));
            }
        }
        const auto exact = exact_independent_set(g);
        CHECK(greedy.size() <= exact.size());
        CHECK(max_independent_set(n, 2, 2).size == exact.size());
    }
}

TEST_CASE("beyond the exact cutoff the search degrades to greedy") {
    const MisResult res = max_independent_set(kMaxExactMisN + 1, 2, 2);
    CHECK_FALSE(res.exact);
    CHECK(res.size > 0);
    CHECK(is_t_sub_read_code(res.witness, 2, 2).ok);
}

TEST_CASE("graph construction guards") {
    CHECK_THROWS_AS(build_read_graph(kMaxGraphN + 1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_read_graph(0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_read_graph(6, 14, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_read_graph(6, 2, -1), std::invalid_argument);
    CHECK_THROWS_AS(max_independent_set(40, 2, 2), std::invalid_argument);
}
