#include "sumlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

namespace sumlab {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw Error("graph must have at least one vertex");
    edges_.reserve(edges.size());
    for (auto [u, w] : edges) {
        if (u < 1 || u > n || w < 1 || w > n)
            throw Error("edge endpoint out of range: (" + std::to_string(u) + "," +
                        std::to_string(w) + ")");
        if (u == w) throw Error("self-loop at vertex " + std::to_string(u));
        if (u > w) std::swap(u, w);
        edges_.emplace_back(u, w);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error("duplicate edge (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ")");
    adj_.assign(static_cast<size_t>(n) + 1, {});
    for (auto [u, w] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(w);
        adj_[static_cast<size_t>(w)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw Error("vertex out of range: " + std::to_string(v));
}

const std::vector<int>& Graph::neighbours(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

bool Graph::has_edge(int u, int w) const {
    check_vertex(u);
    check_vertex(w);
    if (u == w) return false;
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), w);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

int Graph::min_degree() const {
    int best = n_ > 0 ? degree(1) : 0;
    for (int v = 2; v <= n_; ++v) best = std::min(best, degree(v));
    return best;
}

VertexOrdering VertexOrdering::identity(int n) {
    VertexOrdering o;
    o.order.resize(static_cast<size_t>(n));
    std::iota(o.order.begin(), o.order.end(), 1);
    return o;
}

void VertexOrdering::validate(int n) const {
    if (static_cast<int>(order.size()) != n)
        throw Error("ordering has " + std::to_string(order.size()) + " entries, graph has " +
                    std::to_string(n) + " vertices");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : order) {
        if (v < 1 || v > n) throw Error("ordering entry out of range: " + std::to_string(v));
        if (seen[static_cast<size_t>(v)])
            throw Error("ordering repeats vertex " + std::to_string(v));
        seen[static_cast<size_t>(v)] = true;
    }
}

namespace {

long long parse_int_token(const std::string& tok, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw Error("line " + std::to_string(line_no) + ": not an integer: '" + tok + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false, seen_edge = false;
    long long header_n = 0, header_m = 0;
    std::vector<Edge> edges;
    int max_index = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "p") {
            if (have_header) throw Error("line " + std::to_string(line_no) + ": repeated header");
            if (seen_edge)
                throw Error("line " + std::to_string(line_no) + ": header after edges");
            std::string a, b, extra;
            if (!(ls >> a >> b) || (ls >> extra))
                throw Error("line " + std::to_string(line_no) + ": header must be 'p <n> <m>'");
            header_n = parse_int_token(a, line_no);
            header_m = parse_int_token(b, line_no);
            if (header_n < 1) throw Error("header: vertex count must be positive");
            if (header_m < 0) throw Error("header: negative edge count");
            have_header = true;
            continue;
        }
        std::string second, extra;
        if (!(ls >> second) || (ls >> extra))
            throw Error("line " + std::to_string(line_no) + ": expected 'u w'");
        long long u = parse_int_token(tok, line_no);
        long long w = parse_int_token(second, line_no);
        if (u < 1 || w < 1)
            throw Error("line " + std::to_string(line_no) + ": vertex index below 1");
        if (have_header && (u > header_n || w > header_n))
            throw Error("line " + std::to_string(line_no) + ": vertex index exceeds header n");
        seen_edge = true;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(w));
        max_index = std::max({max_index, static_cast<int>(u), static_cast<int>(w)});
    }

    if (have_header && static_cast<long long>(edges.size()) != header_m)
        throw Error("header promises " + std::to_string(header_m) + " edges, file has " +
                    std::to_string(edges.size()));
    int n = have_header ? static_cast<int>(header_n) : max_index;
    if (n == 0) throw Error("no vertices (empty input and no header)");
    return Graph(n, std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, w] : g.edges()) out << u << ' ' << w << '\n';
    return out.str();
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n) + 1);
    std::vector<bool> removed(static_cast<size_t>(n) + 1, false);
    for (int v = 1; v <= n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);

    std::vector<int> peel_order;
    peel_order.reserve(static_cast<size_t>(n));
    int d = 0;
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 1; v <= n; ++v) {
            if (removed[static_cast<size_t>(v)]) continue;
            if (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)])
                best = v;
        }
        d = std::max(d, deg[static_cast<size_t>(best)]);
        removed[static_cast<size_t>(best)] = true;
        peel_order.push_back(best);
        for (int w : g.neighbours(best))
            if (!removed[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }

    DegeneracyResult res;
    res.degeneracy = d;
    res.ordering.order.assign(peel_order.rbegin(), peel_order.rend());
    return res;
}

Graph path_graph(int n) {
    if (n < 1) throw Error("path_graph: n must be >= 1");
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, std::move(e));
}

Graph matching_graph(int n) {
    if (n < 2 || n % 2 != 0) throw Error("matching_graph: n must be even and >= 2");
    std::vector<Edge> e;
    for (int v = 1; v < n; v += 2) e.emplace_back(v, v + 1);
    return Graph(n, std::move(e));
}

Graph complete_graph_of(int n) {
    if (n < 1) throw Error("complete_graph_of: n must be >= 1");
    std::vector<Edge> e;
    for (int u = 1; u <= n; ++u)
        for (int w = u + 1; w <= n; ++w) e.emplace_back(u, w);
    return Graph(n, std::move(e));
}

}  // namespace sumlab
