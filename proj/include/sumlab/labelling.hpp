#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sumlab/graph.hpp"
#include "sumlab/types.hpp"

namespace sumlab {

// A (candidate) sum labelling: one label per graph vertex plus a list of
// isolate labels. Valid when the graph decoded from the combined label set
// is exactly base_graph plus isolated extra vertices: u~w iff some labelled
// vertex carries lambda(u)+lambda(w).
struct SumLabelling {
    Graph base_graph;
    std::vector<Int> vertex_labels;   // index v-1 holds the label of vertex v
    std::vector<Int> isolate_labels;  // creation order
    // Set by the labeller when every edge received its own isolate. The
    // deletion operations verify the property itself rather than trust this.
    bool unique_isolates = false;

    const Int& label_of(int v) const { return vertex_labels.at(static_cast<size_t>(v) - 1); }
};

// Either a graph vertex (by id) or an isolate (by 1-based list position).
struct EntityRef {
    bool is_isolate = false;
    int index = 0;
};

struct Violation {
    enum class Kind {
        pair,    // two entities share a label (and are not both isolates
                 // while construction is in flight)
        triple,  // lambda(a) + lambda(b) equals some label but (a,b) is not
                 // an edge of the base graph
        missing, // (a,b) is an edge but no entity carries the sum
    };
    Kind kind = Kind::pair;
    EntityRef a, b;
    EntityRef witness;  // triple only: who carries the sum
    Int label_a, label_b;
    Int sum;  // triple: the witnessed value; missing: the absent value
};

std::string to_string(const Violation& v);

struct ValidityReport {
    bool ok = false;
    std::vector<Violation> violations;
};

// Exhaustive scan: duplicate labels, witnessed non-edges, unwitnessed edges.
// With during_construction set, equal labels on two isolates are tolerated.
// The list is empty exactly when check_valid reports ok.
std::vector<Violation> find_violations(const SumLabelling& l,
                                       bool during_construction = false);

ValidityReport check_valid(const SumLabelling& l, bool during_construction = false);

// True when every edge sum is carried by an isolate (never by a working
// vertex). Meaningful for valid labellings.
bool is_exclusive(const SumLabelling& l);

// Maps graph vertices to 4*lambda+1 and extras to 4*lambda+2, which severs
// every sum relation except vertex+vertex = extra. Edges whose only witness
// was a graph vertex get a fresh extra carrying 4*(sum)+2, so the decoded
// graph is preserved and the result is exclusive. Input labels must be
// positive and pairwise distinct; the graph is whatever the combined label
// set decodes to over the graph positions.
SumLabelling exclusive_lift(const std::vector<Int>& graph_labels,
                            const std::vector<Int>& extra_labels);

// Labelling file format:
//   vertices
//   <id> <label>     (one per vertex)
//   isolates
//   <label>          (one per isolate)
// and an equivalent single-object JSON form. Labels are serialized as
// decimal strings in JSON since they may exceed 64 bits. Loading infers
// base_graph from the decoded relation over the vertex labels.
std::string to_text(const SumLabelling& l);
SumLabelling labelling_from_text(std::string_view text);
std::string to_json(const SumLabelling& l);
SumLabelling labelling_from_json(std::string_view text);

}  // namespace sumlab
