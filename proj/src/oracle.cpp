#include "sumlab/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace sumlab {

Graph brute_force_decode(const std::vector<Int>& labels) {
    int n = static_cast<int>(labels.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (labels[i] + labels[j] == labels[k]) {
                    edges.push_back({i + 1, j + 1});
                    break;
                }
    return Graph(n, edges);
}

namespace {

// Exhaustive search state. Vertex labels are small ints here; isolate labels
// are derived as the edge sums not already used by vertices, so only the
// vertex assignment is enumerated.
struct SigmaSearch {
    const Graph& g;
    int n;
    int limit;
    std::vector<int> label;       // 1-based vertex -> value, 0 = unassigned
    std::vector<bool> used;       // value -> taken by a vertex
    std::multiset<int> edge_sums;
    std::multiset<int> non_edge_sums;
    int best;
    std::vector<int> best_label;
    std::set<int> best_iso;

    SigmaSearch(const Graph& graph, int label_limit)
        : g(graph),
          n(graph.vertex_count()),
          limit(label_limit),
          label(n + 1, 0),
          used(label_limit + 1, false),
          best(g.edge_count() + 1) {}

    bool leaf_valid_and_count(std::set<int>& iso) {
        // vertex labels and derived isolate set
        std::set<int> vertex_set(label.begin() + 1, label.end());
        for (const auto& [u, w] : g.edges()) {
            int s = label[u] + label[w];
            if (!vertex_set.count(s)) iso.insert(s);
        }
        auto in_any = [&](long long s) {
            return (s <= limit && vertex_set.count(static_cast<int>(s))) ||
                   iso.count(static_cast<int>(s));
        };
        // no vertex-isolate or isolate-isolate pair may decode as an edge
        for (int v = 1; v <= n; ++v)
            for (int w : iso)
                if (in_any(static_cast<long long>(label[v]) + w)) return false;
        for (auto it = iso.begin(); it != iso.end(); ++it)
            for (auto jt = std::next(it); jt != iso.end(); ++jt)
                if (in_any(static_cast<long long>(*it) + *jt)) return false;
        return true;
    }

    void place(int v) {
        if (v > n) {
            std::set<int> iso;
            if (leaf_valid_and_count(iso) && static_cast<int>(iso.size()) < best) {
                best = static_cast<int>(iso.size());
                best_label.assign(label.begin(), label.end());
                best_iso = std::move(iso);
            }
            return;
        }
        for (int value = 1; value <= limit && best > 0; ++value) {
            if (used[value]) continue;
            // a vertex label may not equal any recorded non-edge sum
            if (non_edge_sums.count(value)) continue;
            bool ok = true;
            std::vector<int> pushed_edge, pushed_non_edge;
            for (int u = 1; u < v && ok; ++u) {
                int s = label[u] + value;
                if (g.has_edge(u, v)) {
                    if (non_edge_sums.count(s)) ok = false;
                    else { edge_sums.insert(s); pushed_edge.push_back(s); }
                } else {
                    if ((s <= limit && used[s]) || edge_sums.count(s)) ok = false;
                    else { non_edge_sums.insert(s); pushed_non_edge.push_back(s); }
                }
            }
            if (ok) {
                label[v] = value;
                used[value] = true;
                place(v + 1);
                used[value] = false;
                label[v] = 0;
            }
            for (int s : pushed_edge) edge_sums.erase(edge_sums.find(s));
            for (int s : pushed_non_edge) non_edge_sums.erase(non_edge_sums.find(s));
        }
    }
};

}  // namespace

int brute_force_sum_number(const Graph& g, int s_max, int label_limit, SumLabelling* witness) {
    if (g.vertex_count() > 6 || s_max > 8 || label_limit > 64 || label_limit < g.vertex_count())
        throw Error("search bounds too large for exhaustive sum-number computation");
    SigmaSearch search(g, label_limit);
    search.place(1);
    if (search.best > g.edge_count()) throw Error("no labelling found under the label limit");
    if (search.best > s_max) throw Error("sum number exceeds search bound");
    if (witness) {
        witness->base_graph = g;
        witness->vertex_labels.clear();
        witness->isolate_labels.clear();
        for (int v = 1; v <= g.vertex_count(); ++v)
            witness->vertex_labels.emplace_back(search.best_label[static_cast<size_t>(v)]);
        for (int s : search.best_iso) witness->isolate_labels.emplace_back(s);
        witness->unique_isolates = false;
    }
    return search.best;
}

namespace {

// modulo on a fresh draw, for identical streams across platforms
int draw(std::mt19937& gen, int n) { return static_cast<int>(gen() % static_cast<unsigned>(n)); }

}  // namespace

Graph random_graph(int n, int m, unsigned seed, int min_degree) {
    if (n < 1) throw Error("need at least one vertex");
    if (min_degree != 0 && min_degree != 1) throw Error("min_degree must be 0 or 1");
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    long long floor_edges = min_degree == 1 ? (n + 1) / 2 : 0;
    if (m < floor_edges || m > max_edges) throw Error("edge count out of range for n");

    std::mt19937 gen(seed);
    std::set<Edge> present;
    auto add = [&](int u, int w) {
        if (u > w) std::swap(u, w);
        return present.insert({u, w}).second;
    };

    if (min_degree == 1) {
        // a near-perfect matching touches every vertex
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[draw(gen, i + 1)]);
        for (int i = 0; i + 1 < n; i += 2) add(perm[i], perm[i + 1]);
        if (n % 2 == 1 && n > 1) add(perm[n - 1], perm[0]);
    }

    long long tries = 0;
    while (static_cast<long long>(present.size()) < m) {
        if (++tries > 200LL * m + 10000) {
            // dense target: take absent pairs in order
            for (int u = 1; u <= n && static_cast<long long>(present.size()) < m; ++u)
                for (int w = u + 1; w <= n && static_cast<long long>(present.size()) < m; ++w)
                    add(u, w);
            break;
        }
        int u = draw(gen, n) + 1;
        int w = draw(gen, n) + 1;
        if (u != w) add(u, w);
    }
    return Graph(n, std::vector<Edge>(present.begin(), present.end()));
}

Graph random_degenerate_graph(int n, int d, unsigned seed) {
    if (n < 2) throw Error("need at least two vertices");
    if (d < 1) throw Error("degeneracy bound must be positive");
    std::mt19937 gen(seed);
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v) {
        int cap = std::min(d, v - 1);
        int k = 1 + draw(gen, cap);
        std::vector<int> earlier(v - 1);
        for (int i = 0; i < v - 1; ++i) earlier[i] = i + 1;
        for (int i = 0; i < k; ++i) {
            int j = i + draw(gen, v - 1 - i);
            std::swap(earlier[i], earlier[j]);
            edges.push_back({earlier[i], v});
        }
    }
    return Graph(n, edges);
}

}  // namespace sumlab
