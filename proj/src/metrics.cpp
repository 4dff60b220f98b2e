#include "sumlab/metrics.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace sumlab {

Int storage_bits(const SumEncoding& enc) {
    Int total = 0;
    for (const auto& l : enc.labels) total += ceil_log2(l);
    return total;
}

Int storage_max_bits(const SumEncoding& enc) {
    if (enc.labels.empty()) throw Error("encoding has no labels");
    return Int(enc.size()) * ceil_log2(enc.labels.back());
}

RangeReport range_report(const SumEncoding& enc) {
    if (enc.labels.empty()) throw Error("encoding has no labels");
    RangeReport r;
    r.min_label = enc.labels.front();
    r.max_label = enc.labels.back();
    r.range = r.max_label - r.min_label;
    r.range_exceeds_min = r.range > r.min_label;
    r.twice_range_exceeds_max = 2 * r.range > r.max_label;
    return r;
}

Int stirling_lower_bound(int count) {
    if (count < 1) throw Error("count must be positive");
    Int fact = 1;
    for (int i = 2; i <= count; ++i) fact *= i;
    return ceil_log2(fact);
}

Int adjacency_matrix_bits(int n) {
    if (n < 1) throw Error("need at least one vertex");
    return Int(n) * n;
}

Int adjacency_list_bits(int n, int m) {
    if (n < 1 || m < 0) throw Error("bad graph size");
    return Int(n + 2 * Int(m)) * ceil_log2(Int(n));
}

Int compressed_incidence_cost(int n, int m) {
    if (n < 1 || m < 1) throw Error("bad graph size");
    return Int(n + 2 * Int(m) + 2) * ceil_log2(Int(n)) + 2 * ceil_log2(Int(m)) + 2;
}

namespace {

BoundReport bound_report_with(const SumLabelling& l, Int vertex_limit, Int isolate_limit,
                              double storage_limit) {
    BoundReport r;
    r.vertex_label_limit = std::move(vertex_limit);
    r.isolate_label_limit = std::move(isolate_limit);
    r.storage_limit = storage_limit;
    r.vertex_labels_ok = true;
    for (const auto& x : l.vertex_labels)
        if (x > r.vertex_label_limit) r.vertex_labels_ok = false;
    r.isolate_labels_ok = true;
    for (const auto& x : l.isolate_labels)
        if (x > r.isolate_label_limit) r.isolate_labels_ok = false;
    r.storage_max = storage_max_bits(encoding_from_labelling(l));
    r.storage_ok = static_cast<double>(r.storage_max) <= storage_limit;
    r.isolate_count = static_cast<int>(l.isolate_labels.size());
    r.edge_count = l.base_graph.edge_count();
    r.isolate_count_ok = r.isolate_count <= r.edge_count;
    return r;
}

}  // namespace

BoundReport bound_report(const SumLabelling& l) {
    Int n = l.base_graph.vertex_count();
    int m = l.base_graph.edge_count();
    double limit = 9.0 * m * (std::log2(static_cast<double>(n)) + 1.0);
    return bound_report_with(l, 4 * n * n * n, 8 * n * n * n, limit);
}

BoundReport bound_report(const SumLabelling& l, int degeneracy) {
    if (degeneracy < 1) throw Error("degeneracy must be positive");
    Int n = l.base_graph.vertex_count();
    int m = l.base_graph.edge_count();
    double limit = 3.0 * m *
                   (2.0 * std::log2(static_cast<double>(n)) + std::log2(12.0 * degeneracy));
    return bound_report_with(l, 6 * degeneracy * n * n, 12 * degeneracy * n * n, limit);
}

StorageReport storage_report(const SumLabelling& l) {
    SumEncoding enc = encoding_from_labelling(l);
    StorageReport r;
    r.vertex_count = l.base_graph.vertex_count();
    r.edge_count = l.base_graph.edge_count();
    r.label_count = enc.size();
    r.isolate_count = static_cast<int>(l.isolate_labels.size());
    r.min_label = enc.labels.front();
    r.max_label = enc.labels.back();
    r.storage = storage_bits(enc);
    r.storage_max = storage_max_bits(enc);
    r.gamma_stream = Int(gamma_bit_count(enc));
    r.matrix_baseline = adjacency_matrix_bits(r.vertex_count);
    r.list_baseline = adjacency_list_bits(r.vertex_count, r.edge_count);
    r.incidence_baseline =
        r.edge_count > 0 ? compressed_incidence_cost(r.vertex_count, r.edge_count) : Int(0);
    r.permutation_floor = stirling_lower_bound(r.label_count);
    return r;
}

std::string to_text(const StorageReport& r) {
    std::ostringstream out;
    out << "vertices            " << r.vertex_count << '\n'
        << "edges               " << r.edge_count << '\n'
        << "labels              " << r.label_count << '\n'
        << "isolates            " << r.isolate_count << '\n'
        << "min label           " << r.min_label << '\n'
        << "max label           " << r.max_label << '\n'
        << "storage bits        " << r.storage << '\n'
        << "fixed-width bits    " << r.storage_max << '\n'
        << "gamma stream bits   " << r.gamma_stream << '\n'
        << "matrix baseline     " << r.matrix_baseline << '\n'
        << "list baseline       " << r.list_baseline << '\n'
        << "incidence baseline  " << r.incidence_baseline << '\n'
        << "permutation floor   " << r.permutation_floor << '\n';
    return out.str();
}

std::string to_json(const StorageReport& r) {
    nlohmann::json j;
    j["vertices"] = r.vertex_count;
    j["edges"] = r.edge_count;
    j["labels"] = r.label_count;
    j["isolates"] = r.isolate_count;
    j["min_label"] = r.min_label.str();
    j["max_label"] = r.max_label.str();
    j["storage_bits"] = r.storage.str();
    j["fixed_width_bits"] = r.storage_max.str();
    j["gamma_stream_bits"] = r.gamma_stream.str();
    j["matrix_baseline"] = r.matrix_baseline.str();
    j["list_baseline"] = r.list_baseline.str();
    j["incidence_baseline"] = r.incidence_baseline.str();
    j["permutation_floor"] = r.permutation_floor.str();
    return j.dump(2) + "\n";
}

}  // namespace sumlab
