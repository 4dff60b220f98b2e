#include "sumlab/labeller.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace sumlab {

namespace {

// Identity of a violation seen during one repair loop, pinned to the fixed
// entities and values involved. Every kind resolves to exactly one blocked
// candidate, so a signature can fire in one round only; one coming back
// after it cleared means the loop stopped making progress.
// kinds: 0 = candidate collides with an existing label,
//        1 = candidate + old vertex u hits an old isolate,
//        2 = old non-adjacent pair (a,b) sums to the fresh isolate of
//            neighbour k,
//        3 = fresh isolate of neighbour k collides with an existing label.
using ViolationSig = std::tuple<int, int, int, Int>;

}  // namespace

struct Labeller::RoundScan {
    std::vector<ViolationSig> sigs;
};

Labeller::Labeller(LabellerOptions opts) : opts_(opts) {
    adj_.emplace_back();  // index 0 unused
}

void Labeller::scan_round(const Int& candidate, const std::vector<int>& neighbours,
                          RoundScan& out) const {
    if (vertex_label_map_.count(candidate) || iso_label_set_.count(candidate))
        out.sigs.emplace_back(0, 0, 0, candidate);

    // The candidate must not complete an existing isolate with a non-adjacent
    // old vertex. Adjacent ones are fine: there the sum is this step's own
    // isolate, possibly shared with an equal old one. The difference index
    // holds every (isolate, vertex) pair, so subtract the adjacent hits.
    if (auto it = iso_diffs_.find(candidate); it != iso_diffs_.end()) {
        int benign = 0;
        for (int b : neighbours)
            if (iso_label_set_.count(candidate + labels_[static_cast<size_t>(b) - 1])) ++benign;
        if (it->second.count > benign) {
            int u = it->second.rep;
            if (std::binary_search(neighbours.begin(), neighbours.end(), u)) {
                // representative is one of the benign hits; find a real one
                u = 0;
                size_t next_nbr = 0;
                for (int cand_u = 1; cand_u <= processed(); ++cand_u) {
                    if (next_nbr < neighbours.size() && neighbours[next_nbr] == cand_u) {
                        ++next_nbr;
                        continue;
                    }
                    if (iso_label_set_.count(candidate +
                                             labels_[static_cast<size_t>(cand_u) - 1])) {
                        u = cand_u;
                        break;
                    }
                }
                if (u == 0) throw InternalError("difference index out of sync");
            }
            out.sigs.emplace_back(1, u, 0, candidate + labels_[static_cast<size_t>(u) - 1]);
        }
    }

    // Fresh isolates must not equal the sum of an old non-adjacent pair
    // (edges of the prefix are fine: the same value already witnesses them)
    // and must not collide with an existing label.
    for (size_t k = 0; k < neighbours.size(); ++k) {
        Int iso = candidate + labels_[static_cast<size_t>(neighbours[k]) - 1];
        if (auto it = non_edge_sums_.find(iso); it != non_edge_sums_.end())
            out.sigs.emplace_back(2, it->second.first, it->second.second, Int(k));
        if (vertex_label_map_.count(iso))
            out.sigs.emplace_back(3, static_cast<int>(k), 0, iso);
        else if (opts_.unique_isolates && iso_label_set_.count(iso))
            out.sigs.emplace_back(3, static_cast<int>(k), 0, iso);
    }
}

void Labeller::extend(const std::vector<int>& neighbours) {
    int placed = processed();
    std::vector<int> nbrs = neighbours;
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
        throw Error("extend: repeated neighbour");
    for (int u : nbrs)
        if (u < 1 || u > placed)
            throw Error("extend: neighbour " + std::to_string(u) + " not yet placed");

    if (placed == 0) {
        if (!nbrs.empty()) throw Error("extend: first vertex cannot have neighbours");
        labels_.push_back(1);
        vertex_label_map_.emplace(1, 1);
        adj_.emplace_back();
        return;
    }

    StepStats st;
    st.prefix_size = placed;
    st.new_neighbours = static_cast<int>(nbrs.size());
    st.budget_cap = 4ll * placed * placed * placed;

    Int candidate = 5;
    std::set<ViolationSig> active, vanished;
    for (;;) {
        RoundScan scan;
        scan_round(candidate, nbrs, scan);
        if (scan.sigs.empty()) break;

        // Each conflict pairs the moving labels against fixed ones, so it can
        // block exactly one candidate value. A conflict coming back after it
        // cleared would sink the whole budget argument; treat it as a bug.
        std::set<ViolationSig> current(scan.sigs.begin(), scan.sigs.end());
        for (const auto& sig : current)
            if (vanished.count(sig))
                throw InternalError("repair loop: a cleared violation reappeared");
        for (const auto& sig : active)
            if (!current.count(sig)) vanished.insert(sig);
        active = std::move(current);

        candidate += 4;
        if (++st.increments > st.budget_cap)
            throw InternalError("repair loop exceeded its budget at prefix size " +
                                std::to_string(placed));
    }

    int self = placed + 1;
    // pairs of the new label with every old isolate
    for (const Int& s : iso_label_set_)
        if (s - candidate >= 5) {
            auto& e = iso_diffs_[s - candidate];
            if (e.count++ == 0) e.rep = self;
        }

    labels_.push_back(candidate);
    vertex_label_map_.emplace(candidate, self);
    adj_.emplace_back();
    std::vector<Int> fresh;
    for (int u : nbrs) {
        Int iso = candidate + labels_[static_cast<size_t>(u) - 1];
        edges_.emplace_back(u, self);
        adj_[static_cast<size_t>(u)].push_back(self);
        adj_[static_cast<size_t>(self)].push_back(u);
        // A value equal to an older isolate just shares that witness.
        if (opts_.unique_isolates || !iso_label_set_.count(iso)) {
            iso_labels_.push_back(iso);
            iso_witness_.emplace_back(u, self);
            iso_label_set_.insert(iso);
            fresh.push_back(iso);
        }
    }
    // pairs of each genuinely new isolate value with every vertex
    for (const Int& s : fresh)
        for (int u = 1; u <= self; ++u) {
            Int d = s - labels_[static_cast<size_t>(u) - 1];
            if (d >= 5) {
                auto& e = iso_diffs_[d];
                if (e.count++ == 0) e.rep = u;
            }
        }
    // sums of the new vertex with each old vertex it is not adjacent to
    {
        size_t next_nbr = 0;
        for (int u = 1; u <= placed; ++u) {
            if (next_nbr < nbrs.size() && nbrs[next_nbr] == u) {
                ++next_nbr;
                continue;
            }
            non_edge_sums_.emplace(candidate + labels_[static_cast<size_t>(u) - 1],
                                   Edge{u, self});
        }
    }
    for (int u : nbrs) {
        auto& nb = adj_[static_cast<size_t>(u)];
        std::sort(nb.begin(), nb.end());
    }
    stats_.push_back(st);
}

SumLabelling Labeller::snapshot() const {
    SumLabelling l;
    l.base_graph = Graph(processed(), edges_);
    l.vertex_labels = labels_;
    l.isolate_labels = iso_labels_;
    l.unique_isolates = opts_.unique_isolates;
    return l;
}

SumLabelling sum_label(const Graph& g, const VertexOrdering& ordering, LabellerOptions opts,
                       std::vector<StepStats>* stats) {
    int n = g.vertex_count();
    ordering.validate(n);

    std::vector<int> arrival_of(static_cast<size_t>(n) + 1, 0);
    for (int pos = 0; pos < n; ++pos)
        arrival_of[static_cast<size_t>(ordering.order[static_cast<size_t>(pos)])] = pos + 1;

    Labeller state(opts);
    for (int pos = 0; pos < n; ++pos) {
        int v = ordering.order[static_cast<size_t>(pos)];
        std::vector<int> nbrs;
        for (int w : g.neighbours(v)) {
            int a = arrival_of[static_cast<size_t>(w)];
            if (a != 0 && a <= pos) nbrs.push_back(a);
        }
        state.extend(nbrs);
    }

    SumLabelling l;
    l.base_graph = g;
    l.vertex_labels.resize(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v)
        l.vertex_labels[static_cast<size_t>(v) - 1] =
            state.vertex_labels()[static_cast<size_t>(arrival_of[static_cast<size_t>(v)]) - 1];
    l.isolate_labels = state.isolate_labels();
    l.unique_isolates = opts.unique_isolates;

    auto report = check_valid(l);
    if (!report.ok)
        throw InternalError("constructed labelling failed validation: " +
                            to_string(report.violations.front()));
    if (stats) *stats = state.step_stats();
    return l;
}

namespace {

// edge (by base-graph index) -> isolate index, requiring a bijection.
std::vector<size_t> witness_bijection(const SumLabelling& l) {
    const auto& edges = l.base_graph.edges();
    if (l.isolate_labels.size() != edges.size())
        throw Error("labelling is not in unique-isolate form: " +
                    std::to_string(l.isolate_labels.size()) + " isolates for " +
                    std::to_string(edges.size()) + " edges");
    std::map<Int, size_t> iso_index;
    for (size_t k = 0; k < l.isolate_labels.size(); ++k)
        if (!iso_index.emplace(l.isolate_labels[k], k).second)
            throw Error("labelling is not in unique-isolate form: duplicate isolate label");
    std::vector<size_t> witness;
    std::vector<bool> used(l.isolate_labels.size(), false);
    for (auto [u, w] : edges) {
        auto it = iso_index.find(l.label_of(u) + l.label_of(w));
        if (it == iso_index.end() || used[it->second])
            throw Error("labelling is not in unique-isolate form: edge without its own witness");
        used[it->second] = true;
        witness.push_back(it->second);
    }
    return witness;
}

}  // namespace

SumLabelling delete_edge(const SumLabelling& l, Edge e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    const auto& edges = l.base_graph.edges();
    auto pos = std::find(edges.begin(), edges.end(), e);
    if (pos == edges.end())
        throw Error("delete_edge: no edge (" + std::to_string(e.first) + "," +
                    std::to_string(e.second) + ")");
    auto witness = witness_bijection(l);
    size_t drop = witness[static_cast<size_t>(pos - edges.begin())];

    SumLabelling out;
    std::vector<Edge> kept(edges.begin(), edges.end());
    kept.erase(kept.begin() + (pos - edges.begin()));
    out.base_graph = Graph(l.base_graph.vertex_count(), std::move(kept));
    out.vertex_labels = l.vertex_labels;
    for (size_t k = 0; k < l.isolate_labels.size(); ++k)
        if (k != drop) out.isolate_labels.push_back(l.isolate_labels[k]);
    out.unique_isolates = true;
    return out;
}

SumLabelling delete_vertex(const SumLabelling& l, int v) {
    int n = l.base_graph.vertex_count();
    if (v < 1 || v > n) throw Error("delete_vertex: no vertex " + std::to_string(v));
    if (n == 1) throw Error("delete_vertex: cannot delete the last vertex");
    auto witness = witness_bijection(l);
    const auto& edges = l.base_graph.edges();

    std::vector<bool> drop_iso(l.isolate_labels.size(), false);
    std::vector<Edge> kept;
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        if (a == v || b == v) {
            drop_iso[witness[i]] = true;
        } else {
            kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
        }
    }

    SumLabelling out;
    out.base_graph = Graph(n - 1, std::move(kept));
    for (int u = 1; u <= n; ++u)
        if (u != v) out.vertex_labels.push_back(l.label_of(u));
    for (size_t k = 0; k < l.isolate_labels.size(); ++k)
        if (!drop_iso[k]) out.isolate_labels.push_back(l.isolate_labels[k]);
    out.unique_isolates = true;
    return out;
}

}  // namespace sumlab
