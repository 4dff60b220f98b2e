#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumlab/types.hpp"

namespace sumlab {

// Undirected edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 1..n. No loops, no multi-edges.
// Immutable once constructed; all mutating operations build a new graph.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const;
    bool has_edge(int u, int w) const;
    int degree(int v) const;
    int min_degree() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;           // sorted lexicographically
    std::vector<std::vector<int>> adj_; // sorted neighbour lists, index 0 unused
};

// A processing order for the incremental labeller: a permutation of 1..n.
struct VertexOrdering {
    std::vector<int> order;

    static VertexOrdering identity(int n);
    void validate(int n) const;  // throws Error unless a permutation of 1..n
};

struct DegeneracyResult {
    VertexOrdering ordering;
    int degeneracy = 0;
};

// Text edge-list format:
//   optional first line "p <n> <m>", then one "u w" pair per line,
//   '#' starts a comment line, blank lines ignored.
// Without a header, n is the largest index seen. With one, the edge count
// and all indices are validated against it.
Graph parse_edge_list(std::string_view text);

// Emits the header and the edges sorted lexicographically.
std::string serialize_edge_list(const Graph& g);

// Reverse min-degree peeling. Ties break toward the smallest vertex index.
// The returned ordering gives every vertex at most `degeneracy` neighbours
// among its predecessors.
DegeneracyResult degeneracy_ordering(const Graph& g);

Graph path_graph(int n);      // 1-2-...-n
Graph matching_graph(int n);  // edges {1,2},{3,4},...; n must be even
Graph complete_graph_of(int n);

}  // namespace sumlab
