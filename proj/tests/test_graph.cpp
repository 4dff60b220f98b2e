#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sumlab/graph.hpp"
#include "sumlab/oracle.hpp"

using namespace sumlab;

TEST_CASE("graph construction normalizes and validates") {
    Graph g(4, {{2, 1}, {3, 4}, {1, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {3, 4}});
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(2, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(4) == 1);
    CHECK(g.neighbours(1) == std::vector<int>{2, 3});
    CHECK(g.min_degree() == 1);

    CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);          // loop
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), Error);  // duplicate
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), Error);          // out of range
    CHECK_THROWS_AS(Graph(3, {{0, 2}}), Error);
}

TEST_CASE("graph with isolated vertex") {
    Graph g(5, {{1, 2}});
    CHECK(g.min_degree() == 0);
    CHECK(g.degree(5) == 0);
    CHECK(g.neighbours(5).empty());
}

TEST_CASE("edge list text round trip") {
    Graph g(5, {{1, 2}, {2, 3}, {4, 5}});
    std::string text = serialize_edge_list(g);
    Graph back = parse_edge_list(text);
    CHECK(back == g);
    CHECK(text.substr(0, 6) == "p 5 3\n");
}

TEST_CASE("edge list parsing accepts comments and no header") {
    Graph g = parse_edge_list("# a comment\n2 1\n\n1 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);

    Graph h = parse_edge_list("p 4 1\n# hi\n3 4\n");
    CHECK(h.vertex_count() == 4);
    CHECK(h.edge_count() == 1);
}

TEST_CASE("edge list parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), Error);
    CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), Error);       // extra token
    CHECK_THROWS_AS(parse_edge_list("1\n"), Error);           // missing endpoint
    CHECK_THROWS_AS(parse_edge_list("a b\n"), Error);         // not integers
    CHECK_THROWS_AS(parse_edge_list("1 1\n"), Error);         // loop
    CHECK_THROWS_AS(parse_edge_list("1 2\n2 1\n"), Error);    // duplicate
    CHECK_THROWS_AS(parse_edge_list("0 2\n"), Error);         // below 1
    CHECK_THROWS_AS(parse_edge_list("p 3 2\n1 2\n"), Error);  // count mismatch
    CHECK_THROWS_AS(parse_edge_list("p 3 1\n1 4\n"), Error);  // above header n
    CHECK_THROWS_AS(parse_edge_list("1 2\np 3 1\n"), Error);  // late header
    CHECK_THROWS_AS(parse_edge_list("p 3 1\np 3 1\n1 2\n"), Error);
}

TEST_CASE("vertex ordering validation") {
    CHECK(VertexOrdering::identity(3).order == std::vector<int>{1, 2, 3});
    VertexOrdering o{{2, 1, 3}};
    CHECK_NOTHROW(o.validate(3));
    CHECK_THROWS_AS(o.validate(4), Error);
    VertexOrdering repeated{{1, 1, 2}};
    CHECK_THROWS_AS(repeated.validate(3), Error);
    VertexOrdering out_of_range{{1, 2, 4}};
    CHECK_THROWS_AS(out_of_range.validate(3), Error);
    VertexOrdering empty{{}};
    CHECK_THROWS_AS(empty.validate(1), Error);
}

TEST_CASE("family constructors") {
    CHECK(path_graph(4).edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(matching_graph(6).edges() == std::vector<Edge>{{1, 2}, {3, 4}, {5, 6}});
    CHECK_THROWS_AS(matching_graph(5), Error);
    CHECK(complete_graph_of(4).edge_count() == 6);
    CHECK(complete_graph_of(4).min_degree() == 3);
}

namespace {

// smallest over all orderings of the largest backward degree
int exhaustive_degeneracy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    int best = n;
    do {
        std::vector<int> pos(static_cast<size_t>(n) + 1);
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
        int width = 0;
        for (int v = 1; v <= n; ++v) {
            int back = 0;
            for (int w : g.neighbours(v))
                if (pos[static_cast<size_t>(w)] < pos[static_cast<size_t>(v)]) ++back;
            width = std::max(width, back);
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

int backward_width(const Graph& g, const VertexOrdering& o) {
    std::vector<int> pos(static_cast<size_t>(g.vertex_count()) + 1);
    for (size_t i = 0; i < o.order.size(); ++i) pos[static_cast<size_t>(o.order[i])] = static_cast<int>(i);
    int width = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        int back = 0;
        for (int w : g.neighbours(v))
            if (pos[static_cast<size_t>(w)] < pos[static_cast<size_t>(v)]) ++back;
        width = std::max(width, back);
    }
    return width;
}

}  // namespace

TEST_CASE("degeneracy ordering on known families") {
    CHECK(degeneracy_ordering(path_graph(4)).degeneracy == 1);
    CHECK(degeneracy_ordering(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})).degeneracy == 2);
    CHECK(degeneracy_ordering(complete_graph_of(4)).degeneracy == 3);
    CHECK(degeneracy_ordering(Graph(3, {})).degeneracy == 0);
}

TEST_CASE("degeneracy matches exhaustive search on small graphs") {
    for (unsigned seed = 1; seed <= 12; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);  // 4..7
        int m = n + static_cast<int>(seed % 3);
        Graph g = random_graph(n, m, seed);
        DegeneracyResult r = degeneracy_ordering(g);
        CAPTURE(seed);
        CHECK(r.degeneracy == exhaustive_degeneracy(g));
        CHECK(backward_width(g, r.ordering) <= r.degeneracy);
        CHECK_NOTHROW(r.ordering.validate(n));
    }
}
