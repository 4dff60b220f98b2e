#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sumlab/labeller.hpp"
#include "sumlab/oracle.hpp"

using namespace sumlab;

TEST_CASE("reference decoder on the complete-graph label set") {
    Graph g = brute_force_decode({1, 5, 6, 9, 10, 13, 14, 18, 22});
    CHECK(g.vertex_count() == 9);
    std::vector<Edge> expect{{1, 2}, {1, 4}, {1, 6}, {2, 4}, {2, 6}, {4, 6}};
    CHECK(g.edges() == expect);
}

TEST_CASE("reference decoder handles repeated sums") {
    // 1+4 = 2+3 = 5: both pairs are edges
    Graph g = brute_force_decode({1, 2, 3, 4, 5});
    CHECK(g.has_edge(1, 4));      // 1+4 = 5
    CHECK(g.has_edge(2, 3));      // 2+3 = 5 as well
    CHECK(g.has_edge(1, 2));      // 1+2 = 3
    CHECK(g.has_edge(1, 3));      // 1+3 = 4
    CHECK(!g.has_edge(2, 4));     // 2+4 = 6, absent
    CHECK(g.edge_count() == 4);
}

TEST_CASE("exhaustive sum numbers of tiny graphs") {
    CHECK(brute_force_sum_number(Graph(2, {{1, 2}}), 3, 8) == 1);
    CHECK(brute_force_sum_number(path_graph(3), 3, 8) == 1);
    CHECK(brute_force_sum_number(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), 4, 12) == 3);
    CHECK(brute_force_sum_number(complete_graph_of(4), 5, 16) == 5);
}

TEST_CASE("the search returns a certifying labelling") {
    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    SumLabelling w;
    int sigma = brute_force_sum_number(c4, 4, 12, &w);
    CHECK(sigma == 3);
    CHECK(w.base_graph == c4);
    CHECK(w.isolate_labels.size() == 3);
    CHECK(check_valid(w).ok);
}

TEST_CASE("search guards") {
    Graph k2(2, {{1, 2}});
    CHECK_THROWS_AS(brute_force_sum_number(path_graph(7), 2, 20), Error);  // too many vertices
    CHECK_THROWS_AS(brute_force_sum_number(k2, 9, 8), Error);    // isolate bound too high
    CHECK_THROWS_AS(brute_force_sum_number(k2, 2, 65), Error);   // limit too large
    CHECK_THROWS_AS(brute_force_sum_number(k2, 2, 1), Error);    // limit below n
    // K4 needs labels past 4, so the minimal limit finds nothing
    CHECK_THROWS_AS(brute_force_sum_number(complete_graph_of(4), 4, 4), Error);
    // C4 needs three isolates, so a bound of two is not enough
    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK_THROWS_AS(brute_force_sum_number(c4, 2, 12), Error);
}

TEST_CASE("labeller output is never below the exact sum number") {
    Graph graphs[] = {Graph(2, {{1, 2}}), path_graph(3), path_graph(4),
                      Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), complete_graph_of(4)};
    int limits[] = {8, 8, 14, 12, 16};
    int s_max[] = {3, 3, 4, 4, 5};
    for (int i = 0; i < 5; ++i) {
        const Graph& g = graphs[i];
        int sigma = brute_force_sum_number(g, s_max[i], limits[i]);
        SumLabelling l = sum_label(g, VertexOrdering::identity(g.vertex_count()));
        CAPTURE(i);
        CHECK(static_cast<int>(l.isolate_labels.size()) >= sigma);
    }
}

TEST_CASE("seeded graph generation is deterministic") {
    Graph a = random_graph(10, 20, 7);
    Graph b = random_graph(10, 20, 7);
    CHECK(a == b);
    Graph c = random_graph(10, 20, 8);
    CHECK(!(a == c));
    CHECK(a.vertex_count() == 10);
    CHECK(a.edge_count() == 20);
    CHECK(a.min_degree() >= 1);
}

TEST_CASE("generated graphs respect the requested density") {
    for (unsigned seed = 1; seed <= 40; ++seed) {
        int n = 4 + static_cast<int>(seed % 12);
        int max_m = n * (n - 1) / 2;
        int m = (n + 1) / 2 + static_cast<int>(seed) % (max_m - (n + 1) / 2 + 1);
        Graph g = random_graph(n, m, seed);
        CAPTURE(seed);
        CHECK(g.edge_count() == m);
        CHECK(g.min_degree() >= 1);
    }
    // full density is reachable
    CHECK(random_graph(5, 10, 3) == complete_graph_of(5));
}

TEST_CASE("graph generation rejects impossible sizes") {
    CHECK_THROWS_AS(random_graph(4, 1, 1), Error);       // cannot cover 4 vertices
    CHECK_THROWS_AS(random_graph(4, 7, 1), Error);       // beyond complete
    CHECK_THROWS_AS(random_graph(0, 0, 1), Error);
    CHECK_THROWS_AS(random_graph(4, 2, 1, 2), Error);    // min_degree 2 unsupported
    CHECK(random_graph(4, 0, 1, 0).edge_count() == 0);   // explicit degree-0 mode
}

TEST_CASE("degenerate generation stays within its width bound") {
    for (unsigned seed = 1; seed <= 30; ++seed) {
        int d = 1 + static_cast<int>(seed % 5);
        int n = 6 + static_cast<int>(seed % 15);
        Graph g = random_degenerate_graph(n, d, seed);
        CAPTURE(seed);
        CAPTURE(d);
        CHECK(g.vertex_count() == n);
        CHECK(g.min_degree() >= 1);
        CHECK(g.edge_count() >= n - 1);
        CHECK(degeneracy_ordering(g).degeneracy <= d);
    }
    CHECK(random_degenerate_graph(12, 2, 5) == random_degenerate_graph(12, 2, 5));
    CHECK_THROWS_AS(random_degenerate_graph(1, 1, 1), Error);
    CHECK_THROWS_AS(random_degenerate_graph(5, 0, 1), Error);
}
