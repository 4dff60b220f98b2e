#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sumlab/labelling.hpp"

using namespace sumlab;

namespace {

SumLabelling k4_reference() {
    SumLabelling l;
    l.base_graph = Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    l.vertex_labels = {1, 5, 9, 13};
    l.isolate_labels = {6, 10, 14, 18, 22};
    return l;
}

}  // namespace

TEST_CASE("a correct labelling has no violations") {
    auto r = check_valid(k4_reference());
    CHECK(r.ok);
    CHECK(r.violations.empty());
}

TEST_CASE("an edge without a witness is reported") {
    SumLabelling l;
    l.base_graph = Graph(2, {{1, 2}});
    l.vertex_labels = {1, 2};
    auto vs = find_violations(l);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].kind == Violation::Kind::missing);
    CHECK(vs[0].sum == 3);
    CHECK(to_string(vs[0]).find("missing witness") != std::string::npos);
}

TEST_CASE("an unintended sum is reported as a triple") {
    SumLabelling l;  // 1 + 2 = 3 but (1,2) is not an edge
    l.base_graph = Graph(3, {});
    l.vertex_labels = {1, 2, 3};
    auto vs = find_violations(l);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].kind == Violation::Kind::triple);
    CHECK(vs[0].label_a == 1);
    CHECK(vs[0].label_b == 2);
    CHECK(vs[0].sum == 3);
    CHECK(!vs[0].witness.is_isolate);
    CHECK(vs[0].witness.index == 3);
}

TEST_CASE("an isolate may not take part in an edge") {
    SumLabelling l;  // vertex 1 + isolate 2 = vertex 3
    l.base_graph = Graph(2, {});
    l.vertex_labels = {1, 3};
    l.isolate_labels = {2};
    auto vs = find_violations(l);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].kind == Violation::Kind::triple);
    CHECK(to_string(vs[0]).find("isolate") != std::string::npos);
}

TEST_CASE("duplicate labels are reported, with the construction exemption") {
    SumLabelling l;
    l.base_graph = Graph(2, {});
    l.vertex_labels = {1, 5};
    l.isolate_labels = {10, 10};
    auto strict = find_violations(l);
    REQUIRE(strict.size() == 1);
    CHECK(strict[0].kind == Violation::Kind::pair);
    CHECK(find_violations(l, true).empty());  // isolate pair tolerated mid-build

    l.vertex_labels = {5, 5};
    l.isolate_labels.clear();
    CHECK(find_violations(l, true).size() == 1);  // vertex dup never tolerated
}

TEST_CASE("labels must be positive and match the graph size") {
    SumLabelling l;
    l.base_graph = Graph(2, {});
    l.vertex_labels = {1};
    CHECK_THROWS_AS(find_violations(l), Error);
    l.vertex_labels = {1, 0};
    CHECK_THROWS_AS(find_violations(l), Error);
}

TEST_CASE("exclusivity distinguishes isolate and vertex witnesses") {
    CHECK(is_exclusive(k4_reference()));

    SumLabelling l;  // edge (1,2) witnessed by vertex 3
    l.base_graph = Graph(3, {{1, 2}});
    l.vertex_labels = {1, 2, 3};
    l.isolate_labels = {};
    CHECK(check_valid(l).ok);
    CHECK(!is_exclusive(l));
}

TEST_CASE("exclusive lift of a vertex-witnessed triangle") {
    // graph labels (1,4,3) with extras (5,7): edges 1+4=5, 1+3=4, 4+3=7
    SumLabelling l = exclusive_lift({1, 4, 3}, {5, 7});
    CHECK(l.vertex_labels == std::vector<Int>{5, 17, 13});
    CHECK(l.isolate_labels == std::vector<Int>{18, 22, 30});
    CHECK(l.base_graph.edge_count() == 3);
    CHECK(check_valid(l).ok);
    CHECK(is_exclusive(l));
}

TEST_CASE("exclusive lift keeps the decoded graph") {
    // labels (1,2,3,5) + extras (6,8) decode to the 4-cycle 1-2, 1-5(wraps), ...
    SumLabelling l = exclusive_lift({1, 2, 3, 5}, {6, 8});
    CHECK(l.vertex_labels == std::vector<Int>{5, 9, 13, 21});
    CHECK(l.isolate_labels == std::vector<Int>{14, 22, 26, 34});
    CHECK(l.base_graph.edge_count() == 4);
    CHECK(l.base_graph.has_edge(1, 2));
    CHECK(l.base_graph.has_edge(1, 4));
    CHECK(l.base_graph.has_edge(2, 3));
    CHECK(l.base_graph.has_edge(3, 4));
    CHECK(check_valid(l).ok);
    CHECK(is_exclusive(l));
}

TEST_CASE("exclusive lift rejects bad inputs") {
    CHECK_THROWS_AS(exclusive_lift({}, {}), Error);
    CHECK_THROWS_AS(exclusive_lift({1, 1}, {}), Error);
    CHECK_THROWS_AS(exclusive_lift({1, 2}, {2}), Error);
    CHECK_THROWS_AS(exclusive_lift({0, 2}, {}), Error);
}

TEST_CASE("text round trip") {
    SumLabelling l = k4_reference();
    SumLabelling back = labelling_from_text(to_text(l));
    CHECK(back.vertex_labels == l.vertex_labels);
    CHECK(back.isolate_labels == l.isolate_labels);
    CHECK(back.base_graph == l.base_graph);
}

TEST_CASE("json round trip") {
    SumLabelling l = k4_reference();
    SumLabelling back = labelling_from_json(to_json(l));
    CHECK(back.vertex_labels == l.vertex_labels);
    CHECK(back.isolate_labels == l.isolate_labels);
    CHECK(back.base_graph == l.base_graph);
}

TEST_CASE("json accepts numeric labels too") {
    SumLabelling l = labelling_from_json(
        R"({"vertices":[{"id":1,"label":1},{"id":2,"label":"5"}],"isolates":[6]})");
    CHECK(l.vertex_labels == std::vector<Int>{1, 5});
    CHECK(l.isolate_labels == std::vector<Int>{6});
    CHECK(l.base_graph.has_edge(1, 2));
}

TEST_CASE("malformed labelling text is rejected") {
    CHECK_THROWS_AS(labelling_from_text(""), Error);
    CHECK_THROWS_AS(labelling_from_text("1 5\n"), Error);  // before any section
    CHECK_THROWS_AS(labelling_from_text("vertices\n1\n"), Error);
    CHECK_THROWS_AS(labelling_from_text("vertices\n1 5 9\n"), Error);
    CHECK_THROWS_AS(labelling_from_text("vertices\n1 x\n"), Error);
    CHECK_THROWS_AS(labelling_from_text("vertices\n1 5\n1 9\n"), Error);   // repeat id
    CHECK_THROWS_AS(labelling_from_text("vertices\n1 5\n3 9\n"), Error);   // gap
    CHECK_THROWS_AS(labelling_from_text("vertices\n1 5\nisolates\n6 7\n"), Error);
    CHECK_THROWS_AS(labelling_from_text("vertices\n1 0\n"), Error);
}

TEST_CASE("malformed labelling json is rejected") {
    CHECK_THROWS_AS(labelling_from_json("not json"), Error);
    CHECK_THROWS_AS(labelling_from_json("{}"), Error);
    CHECK_THROWS_AS(labelling_from_json(R"({"vertices":[],"isolates":[]})"), Error);
    CHECK_THROWS_AS(labelling_from_json(R"({"vertices":[{"id":1}],"isolates":[]})"), Error);
    CHECK_THROWS_AS(
        labelling_from_json(R"({"vertices":[{"id":1,"label":-3}],"isolates":[]})"), Error);
    CHECK_THROWS_AS(
        labelling_from_json(R"({"vertices":[{"id":2,"label":4}],"isolates":[]})"), Error);
}

TEST_CASE("no zero-isolate labelling of K2 or K3 passes validation") {
    std::mt19937 gen(99);
    for (int n : {2, 3}) {
        Graph g = n == 2 ? Graph(2, {{1, 2}}) : Graph(3, {{1, 2}, {1, 3}, {2, 3}});
        for (int trial = 0; trial < 500; ++trial) {
            SumLabelling l;
            l.base_graph = g;
            std::vector<int> vals;
            while (static_cast<int>(vals.size()) < n) {
                int v = static_cast<int>(gen() % 50) + 1;
                if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
            }
            for (int v : vals) l.vertex_labels.emplace_back(v);
            CHECK(!check_valid(l).ok);
        }
    }
}
