#pragma once

#include <string>

#include "sumlab/codec.hpp"
#include "sumlab/labelling.hpp"
#include "sumlab/types.hpp"

namespace sumlab {

// Sum of ceil(log2 label) over all labels.
Int storage_bits(const SumEncoding& enc);

// Label count times ceil(log2 max label): fixed-width accounting.
Int storage_max_bits(const SumEncoding& enc);

// Spread of the label set. For any encoding that carries at least one edge
// the range exceeds the smallest label and twice the range exceeds the
// largest label, which is what makes difference coding pay off.
struct RangeReport {
    Int min_label;
    Int max_label;
    Int range;
    bool range_exceeds_min = false;
    bool twice_range_exceeds_max = false;
};
RangeReport range_report(const SumEncoding& enc);

// ceil(log2 count!): bits needed to tell apart the orderings of `count`
// distinguishable items; a floor for any positional code.
Int stirling_lower_bound(int count);

Int adjacency_matrix_bits(int n);                 // n^2
Int adjacency_list_bits(int n, int m);            // (n + 2m) ceil(log2 n)
Int compressed_incidence_cost(int n, int m);      // (n + 2m + 2) ceil(log2 n) + 2 ceil(log2 m) + 2

// Checks a labelling produced for graph G against its guarantees:
// label growth limits, total fixed-width storage, and isolate budget.
struct BoundReport {
    Int vertex_label_limit;
    Int isolate_label_limit;
    bool vertex_labels_ok = false;
    bool isolate_labels_ok = false;
    double storage_limit = 0.0;       // bits
    Int storage_max;
    bool storage_ok = false;
    int isolate_count = 0;
    int edge_count = 0;
    bool isolate_count_ok = false;

    bool all_ok() const {
        return vertex_labels_ok && isolate_labels_ok && storage_ok && isolate_count_ok;
    }
};
BoundReport bound_report(const SumLabelling& l);              // limits 4n^3 and 8n^3
BoundReport bound_report(const SumLabelling& l, int degeneracy);  // 6dn^2 and 12dn^2

struct StorageReport {
    int vertex_count = 0;
    int edge_count = 0;
    int label_count = 0;
    int isolate_count = 0;
    Int min_label;
    Int max_label;
    Int storage;            // sum of per-label widths
    Int storage_max;        // fixed-width total
    Int gamma_stream;       // serialized difference-code bits, before padding
    Int matrix_baseline;
    Int list_baseline;
    Int incidence_baseline;
    Int permutation_floor;  // ceil(log2 label_count!)
};
StorageReport storage_report(const SumLabelling& l);
std::string to_text(const StorageReport& r);
std::string to_json(const StorageReport& r);

}  // namespace sumlab
