#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "sumlab/graph.hpp"
#include "sumlab/labelling.hpp"

namespace sumlab {

struct LabellerOptions {
    // Give every edge its own isolate: a fresh isolate clashing with any
    // existing label forces another repair round instead of being shared.
    // Buys support for edge/vertex deletion at the cost of more isolates.
    bool unique_isolates = false;
};

struct StepStats {
    int prefix_size = 0;      // vertices already placed when the step began
    int new_neighbours = 0;   // edges this step introduced
    std::int64_t increments = 0;
    std::int64_t budget_cap = 0;
};

// Streaming construction of a sum labelling. Vertices arrive one at a time
// with their adjacency into the already-placed prefix; arrival order is the
// vertex identity (1-based). The first vertex gets label 1; every later
// vertex starts at 5 and is pushed up in steps of 4, together with its fresh
// isolates, until the prefix decodes cleanly again. Working labels stay at
// 1 mod 4 and isolates at 2 mod 4, which is what keeps the two populations
// from ever colliding.
class Labeller {
public:
    explicit Labeller(LabellerOptions opts = {});

    // neighbours: arrival indices (1-based, distinct, < current count + 1).
    void extend(const std::vector<int>& neighbours);

    int processed() const { return static_cast<int>(labels_.size()); }
    const std::vector<Int>& vertex_labels() const { return labels_; }
    const std::vector<Int>& isolate_labels() const { return iso_labels_; }
    // Which edge each isolate was created for, parallel to isolate_labels().
    const std::vector<Edge>& isolate_witnesses() const { return iso_witness_; }
    const std::vector<StepStats>& step_stats() const { return stats_; }

    // Snapshot as a labelling over arrival indices.
    SumLabelling snapshot() const;

private:
    struct RoundScan;
    void scan_round(const Int& candidate, const std::vector<int>& neighbours,
                    RoundScan& out) const;

    struct DiffEntry {
        int count = 0;  // (isolate, vertex) pairs with this difference
        int rep = 0;    // one such vertex, by arrival index
    };

    LabellerOptions opts_;
    std::vector<Int> labels_;
    std::vector<Int> iso_labels_;
    std::vector<Edge> iso_witness_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;  // arrival-indexed, 0 unused
    std::map<Int, int> vertex_label_map_;  // label -> arrival index
    std::set<Int> iso_label_set_;
    std::map<Int, DiffEntry> iso_diffs_;   // isolate - vertex label, when >= 5
    std::map<Int, Edge> non_edge_sums_;    // label sums of non-adjacent pairs
    std::vector<StepStats> stats_;
};

// Runs the labeller over g in the given order and reports labels under the
// original vertex ids. The result always passes a full validity check before
// being returned. Optional stats receive one entry per vertex after the first.
SumLabelling sum_label(const Graph& g, const VertexOrdering& ordering,
                       LabellerOptions opts = {},
                       std::vector<StepStats>* stats = nullptr);

// Remove one edge from a labelling in which every edge has its own isolate:
// dropping the witness is enough. Errors when the edge is absent or the
// witness structure is not one-to-one.
SumLabelling delete_edge(const SumLabelling& l, Edge e);

// Remove a vertex, its label, and the witnesses of its incident edges.
// Remaining vertices above v shift down by one to stay contiguous.
SumLabelling delete_vertex(const SumLabelling& l, int v);

}  // namespace sumlab
