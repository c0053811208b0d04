#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/corpus.hpp"
#include "wim/random_trees.hpp"
#include "wim/tree_wim.hpp"

using namespace wim;
namespace ts = testsupport;

namespace {

Graph subdivided_star(int r, int k) {
    // K_{1,r} with every edge subdivided by k vertices (test-local build)
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < r; ++i) {
        int prev = 0;
        for (int j = 0; j <= k; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(next, std::move(edges));
}

}  // namespace

TEST_CASE("good_pendant_edges", "[tree]") {
    SECTION("P7") {
        auto gp = good_pendant_edges(ts::path(7));
        CHECK(gp.edges == std::vector<int>{0, 5});
        CHECK(gp.per_edge_cover_count == std::vector<int>{1, 1, 1, 1, 1, 1});
    }
    SECTION("P5 has doubly covered middle edges") {
        auto gp = good_pendant_edges(ts::path(5));
        CHECK(gp.edges == std::vector<int>{0, 3});
        CHECK(gp.per_edge_cover_count == std::vector<int>{1, 2, 2, 1});
    }
    SECTION("star has none") {
        auto gp = good_pendant_edges(ts::star(4));
        CHECK(gp.edges.empty());
        CHECK(gp.per_edge_cover_count == std::vector<int>{0, 0, 0, 0});
    }
    SECTION("rejects non-trees") {
        CHECK_THROWS_AS(good_pendant_edges(ts::cycle(5)), ValidationError);
        CHECK_THROWS_AS(good_pendant_edges(Graph::from_edges(4, {{0, 1}, {2, 3}})),
                        ValidationError);
    }
}

TEST_CASE("is_wim_tree accepts exactly P1..P4 and P7 among paths", "[tree]") {
    for (int n = 1; n <= 30; ++n) {
        auto cert = is_wim_tree(ts::path(n));
        bool expect = n <= 4 || n == 7;
        REQUIRE(cert.well_indumatched() == expect);
        if (expect) REQUIRE(cert.k == (n == 1 ? 0 : n == 7 ? 2 : 1));
    }
}

TEST_CASE("is_wim_tree pinned examples", "[tree]") {
    SECTION("subdivided star S_{3,2}") {
        Graph s32 = subdivided_star(3, 2);
        auto cert = is_wim_tree(s32);
        CHECK(cert.well_indumatched());
        CHECK(cert.k == 3);
        CHECK(oracle_is_wim(s32).k == 3);
    }
    SECTION("rejection carries a verifiable witness pair") {
        Graph p5 = ts::path(5);
        auto cert = is_wim_tree(p5);
        REQUIRE_FALSE(cert.well_indumatched());
        REQUIRE(cert.has_witnesses());
        CHECK(is_maximal_induced(p5, cert.witness_small));
        CHECK(is_maximal_induced(p5, cert.witness_large));
        CHECK(cert.witness_small.size() < cert.witness_large.size());
        CHECK_FALSE(cert.reason.empty());
    }
    SECTION("big rejected trees get a structural reason only") {
        Graph p30 = ts::path(30);
        auto cert = is_wim_tree(p30);
        REQUIRE_FALSE(cert.well_indumatched());
        CHECK_FALSE(cert.has_witnesses());
        CHECK_FALSE(cert.reason.empty());
    }
    SECTION("witnesses come in input ids even after reduction") {
        // P5 plus a twin leaf: reduce() strips vertex 5, witness must still
        // index edges of the input tree
        Graph t = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
        Graph noisy = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}});
        auto cert = is_wim_tree(noisy);
        REQUIRE_FALSE(cert.well_indumatched());
        REQUIRE(cert.has_witnesses());
        CHECK(is_maximal_induced(noisy, cert.witness_small));
        CHECK(is_maximal_induced(noisy, cert.witness_large));
        (void)t;
    }
    SECTION("non-tree input throws") {
        CHECK_THROWS_AS(is_wim_tree(ts::cycle(4)), ValidationError);
    }
}

TEST_CASE("tree recognizer agrees with the oracle exhaustively", "[tree]") {
    for (int n = 1; n <= 8; ++n) {
        ts::for_each_labeled_tree(n, [](const Graph& t) {
            auto fast = is_wim_tree(t);
            auto slow = oracle_is_wim(t);
            REQUIRE(fast.well_indumatched() == slow.well_indumatched());
            if (fast.well_indumatched()) REQUIRE(fast.k == slow.k);
        });
    }
}

TEST_CASE("tree recognizer agrees with the oracle on random trees", "[tree]") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 1500; ++trial) {
        int n = 10 + static_cast<int>(rng() % 7);
        Graph t = random_tree(n, rng);
        auto fast = is_wim_tree(t);
        auto slow = oracle_is_wim(t);
        REQUIRE(fast.well_indumatched() == slow.well_indumatched());
        if (fast.well_indumatched()) REQUIRE(fast.k == slow.k);
    }
}

TEST_CASE("good pendants form a maximal induced matching in reduced WIM trees", "[tree]") {
    auto check = [](const Graph& t) {
        if (!is_reduced(t) || t.order() < 5) return;
        if (!oracle_is_wim(t).well_indumatched()) return;
        auto gp = good_pendant_edges(t);
        REQUIRE(is_maximal_induced(t, gp.edges));
    };
    for (int n = 5; n <= 8; ++n) ts::for_each_labeled_tree(n, check);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 800; ++trial) check(random_tree(9 + trial % 6, rng));
}

TEST_CASE("longest_path_rule", "[tree]") {
    SECTION("pinned verdicts") {
        CHECK(longest_path_rule(ts::path(6)) == LongestPathVerdict::NotWellIndumatched);
        CHECK(longest_path_rule(ts::path(7)) == LongestPathVerdict::WellIndumatched);
        // 7-path with a pendant edge at the middle vertex
        Graph cat = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
        CHECK(longest_path_rule(cat) == LongestPathVerdict::NotWellIndumatched);
        // degree-4 spider: hypothesis fails
        Graph spider = subdivided_star(4, 1);
        CHECK(longest_path_rule(spider) == LongestPathVerdict::NotApplicable);
    }
    SECTION("agrees with the recognizer whenever applicable") {
        auto check = [](const Graph& t) {
            auto rule = longest_path_rule(t);
            if (rule == LongestPathVerdict::NotApplicable) return;
            REQUIRE((rule == LongestPathVerdict::WellIndumatched) ==
                    is_wim_tree(t).well_indumatched());
        };
        for (int n = 1; n <= 8; ++n) ts::for_each_labeled_tree(n, check);
        std::mt19937 rng(99);
        for (int trial = 0; trial < 600; ++trial) check(random_tree(9 + trial % 8, rng));
    }
}

TEST_CASE("random_reduced_tree produces reduced trees", "[tree]") {
    std::mt19937 rng(4242);
    for (int n : {1, 2, 4, 5, 6, 7, 8, 9, 10, 13, 17, 25, 40, 64, 100}) {
        for (int rep = 0; rep < 30; ++rep) {
            Graph t = random_reduced_tree(n, rng);
            REQUIRE(t.order() == n);
            REQUIRE(is_tree(t));
            REQUIRE(is_reduced(t));
        }
    }
    CHECK_THROWS_AS(random_reduced_tree(3, rng), ValidationError);
    CHECK_THROWS_AS(random_reduced_tree(0, rng), ValidationError);
}
