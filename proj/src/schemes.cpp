#include "sumlab/schemes.hpp"

namespace sumlab {

SumLabelling matching_exponential(int n) {
    if (n < 2 || n % 2 != 0) throw Error("matching_exponential: n must be even and >= 2");
    SumLabelling l;
    l.base_graph = matching_graph(n);
    l.vertex_labels.resize(static_cast<size_t>(n));
    l.vertex_labels[0] = 2;
    for (int k = 2; k <= n; ++k) {
        if (k % 2 == 0)
            l.vertex_labels[static_cast<size_t>(k) - 1] =
                l.vertex_labels[static_cast<size_t>(k) - 2] + 1;
        else
            l.vertex_labels[static_cast<size_t>(k) - 1] =
                l.vertex_labels[static_cast<size_t>(k) - 3] +
                l.vertex_labels[static_cast<size_t>(k) - 2];
    }
    l.isolate_labels.push_back(l.vertex_labels[static_cast<size_t>(n) - 2] +
                               l.vertex_labels[static_cast<size_t>(n) - 1]);
    return l;
}

Int matching_closed_form(int k) {
    if (k < 1) throw Error("matching_closed_form: k must be >= 1");
    if (k % 2 == 0) return 3 * pow2(static_cast<unsigned>(k / 2 - 1));
    return 3 * pow2(static_cast<unsigned>(k / 2)) - 1;
}

SumLabelling matching_linear(int n) {
    if (n < 2 || n % 2 != 0) throw Error("matching_linear: n must be even and >= 2");
    SumLabelling l;
    l.base_graph = matching_graph(n);
    l.vertex_labels.resize(static_cast<size_t>(n));
    for (int i = 0; i < n / 2; ++i) {
        l.vertex_labels[static_cast<size_t>(2 * i)] = n + i;
        l.vertex_labels[static_cast<size_t>(2 * i) + 1] = 2 * n - 1 - i;
    }
    l.isolate_labels.push_back(3 * n - 1);
    return l;
}

SumLabelling matching_block_union(int d) {
    if (d < 0) throw Error("matching_block_union: d must be >= 0");
    if (d > 28) throw Error("matching_block_union: d too large");
    int pairs = 1 << d;
    Int high = pow2(static_cast<unsigned>(4 + d));
    SumLabelling l;
    l.base_graph = matching_graph(2 * pairs);
    l.vertex_labels.resize(static_cast<size_t>(2 * pairs));
    for (int j = 1; j <= pairs; ++j) {
        l.vertex_labels[static_cast<size_t>(2 * j) - 2] = 1 + 8 * (j - 1) + high * (pairs - j);
        l.vertex_labels[static_cast<size_t>(2 * j) - 1] = 2 + 8 * (pairs - j) + high * (j - 1);
    }
    l.isolate_labels.push_back(3 + 8 * (pairs - 1) + high * (pairs - 1));
    return l;
}

SumLabelling complete_graph_labelling(int n) {
    if (n < 4) throw Error("complete_graph_labelling: n must be >= 4");
    SumLabelling l;
    l.base_graph = complete_graph_of(n);
    for (int i = 1; i <= n; ++i) l.vertex_labels.push_back(4 * i - 3);
    for (int j = 1; j <= 2 * n - 3; ++j) l.isolate_labels.push_back(4 * j + 2);
    return l;
}

VertexOrdering path_optimal_ordering(int n) {
    if (n < 1) throw Error("path_optimal_ordering: n must be >= 1");
    VertexOrdering o;
    for (int v = 1; v <= n; v += 2) o.order.push_back(v);
    int start = n % 2 == 0 ? n : n - 1;
    for (int v = start; v >= 2; v -= 2) o.order.push_back(v);
    return o;
}

SumLabelling incidence_scheme(const Graph& g) {
    int n = g.vertex_count();
    if (g.edge_count() == 0) throw Error("incidence_scheme: graph has no edges");
    if (g.min_degree() < 1) throw Error("incidence_scheme: isolated vertex in input");
    unsigned un = static_cast<unsigned>(n);
    SumLabelling l;
    l.base_graph = g;
    for (int i = 1; i <= n; ++i)
        l.vertex_labels.push_back(pow2(un) + pow2(un - static_cast<unsigned>(i)));
    for (auto [u, w] : g.edges())
        l.isolate_labels.push_back(pow2(un + 1) + pow2(un - static_cast<unsigned>(u)) +
                                   pow2(un - static_cast<unsigned>(w)));
    return l;
}

}  // namespace sumlab
