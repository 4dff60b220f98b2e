#include "sumlab/codec.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sumlab/bitstream.hpp"

namespace sumlab {

namespace {

constexpr std::uint8_t kMagic = 0x53;
constexpr std::uint8_t kVersion = 0x01;

void check_sorted_distinct(const std::vector<Int>& labels) {
    if (labels.empty()) throw Error("encoding has no labels");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 1) throw Error("labels must be positive");
        if (i > 0 && labels[i] <= labels[i - 1]) throw Error("duplicate label in encoding");
    }
}

}  // namespace

SumEncoding make_encoding(std::vector<Int> labels) {
    std::sort(labels.begin(), labels.end());
    check_sorted_distinct(labels);
    return SumEncoding{std::move(labels)};
}

SumEncoding encoding_from_labelling(const SumLabelling& l) {
    std::vector<Int> all = l.vertex_labels;
    all.insert(all.end(), l.isolate_labels.begin(), l.isolate_labels.end());
    return make_encoding(std::move(all));
}

DecodeResult decode(const SumEncoding& enc) {
    const auto& ls = enc.labels;
    int n = enc.size();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Int sum = ls[i] + ls[j];
            if (sum > ls.back()) break;  // ls sorted, later j only larger
            if (std::binary_search(ls.begin(), ls.end(), sum))
                edges.push_back({i + 1, j + 1});
        }
    Graph g(n, edges);
    std::vector<int> isolated;
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) == 0) isolated.push_back(v);
    return DecodeResult{std::move(g), std::move(isolated)};
}

bool adjacent(const SumEncoding& enc, int i, int j) {
    int n = enc.size();
    if (i < 1 || i > n || j < 1 || j > n) throw Error("position out of range");
    if (i == j) throw Error("positions must differ");
    Int sum = enc.labels[i - 1] + enc.labels[j - 1];
    ++enc.searches;
    return std::binary_search(enc.labels.begin(), enc.labels.end(), sum);
}

std::vector<std::uint8_t> serialize_gamma(const SumEncoding& enc) {
    check_sorted_distinct(enc.labels);
    BitWriter w;
    w.put_gamma(Int(enc.size()));
    w.put_gamma(enc.labels[0]);
    for (std::size_t i = 1; i < enc.labels.size(); ++i)
        w.put_gamma(enc.labels[i] - enc.labels[i - 1]);
    std::vector<std::uint8_t> out{kMagic, kVersion};
    auto body = w.finish();
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

std::size_t gamma_bit_count(const SumEncoding& enc) {
    check_sorted_distinct(enc.labels);
    auto gamma_len = [](const Int& x) { return 2 * bit_length(x) - 1; };
    std::size_t bits = 16 + gamma_len(Int(enc.size())) + gamma_len(enc.labels[0]);
    for (std::size_t i = 1; i < enc.labels.size(); ++i)
        bits += gamma_len(enc.labels[i] - enc.labels[i - 1]);
    return bits;
}

SumEncoding parse_gamma(std::span<const std::uint8_t> data) {
    if (data.size() < 3) throw Error("stream too short");
    if (data[0] != kMagic) throw Error("bad magic byte");
    if (data[1] != kVersion) throw Error("unsupported version");
    BitReader r(data.subspan(2));
    Int count = r.get_gamma();
    // each further code takes at least one bit, so a sane count is bounded
    if (count < 1 || count > Int(data.size() * 8)) throw Error("implausible label count");
    int n = static_cast<int>(count);
    std::vector<Int> labels;
    labels.reserve(n);
    labels.push_back(r.get_gamma());
    for (int i = 1; i < n; ++i) labels.push_back(labels.back() + r.get_gamma());
    r.expect_zero_padding();
    return SumEncoding{std::move(labels)};
}

namespace {

// header field: L ones, a zero, then value-1 in L = ceil(log2 value) bits
void put_header(BitWriter& w, int value) {
    unsigned L = ceil_log2(Int(value));
    w.put_unary(L);
    w.put_int(Int(value - 1), L);
}

int get_header(BitReader& r) {
    unsigned L = r.get_unary();
    if (L > 30) throw Error("implausible header width");
    Int v = r.get_int(L) + 1;
    if (ceil_log2(v) != L) throw Error("non-canonical header");
    return static_cast<int>(v);
}

}  // namespace

std::vector<std::uint8_t> serialize_incidence(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (m == 0) throw Error("incidence stream requires at least one edge");
    unsigned width = ceil_log2(Int(n));
    BitWriter w;
    put_header(w, n);
    put_header(w, m);
    for (const auto& [u, v] : g.edges()) {  // already sorted, u < v
        w.put_int(Int(u - 1), width);
        w.put_int(Int(v - 1), width);
    }
    return w.finish();
}

std::size_t incidence_bit_count(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (m == 0) throw Error("incidence stream requires at least one edge");
    return 2 * ceil_log2(Int(n)) + 1 + 2 * ceil_log2(Int(m)) + 1 +
           2 * std::size_t(m) * ceil_log2(Int(n));
}

Graph parse_incidence(std::span<const std::uint8_t> data) {
    BitReader r(data);
    int n = get_header(r);
    int m = get_header(r);
    if (m < 1) throw Error("incidence stream requires at least one edge");
    unsigned width = ceil_log2(Int(n));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) {
        int u = static_cast<int>(r.get_int(width)) + 1;
        int v = static_cast<int>(r.get_int(width)) + 1;
        if (u >= v) throw Error("edge endpoints not in canonical order");
        if (v > n) throw Error("edge endpoint out of range");
        if (!edges.empty() && edges.back() >= Edge{u, v})
            throw Error("edges not in canonical order");
        edges.push_back({u, v});
    }
    r.expect_zero_padding();
    return Graph(n, edges);
}

std::string encoding_to_text(const SumEncoding& enc) {
    std::ostringstream out;
    for (const auto& l : enc.labels) out << l << '\n';
    return out.str();
}

SumEncoding encoding_from_text(const std::string& text) {
    std::vector<Int> labels;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                labels.emplace_back(tok);
            } catch (const std::exception&) {
                throw Error("bad label '" + tok + "'");
            }
        }
    }
    return make_encoding(std::move(labels));
}

}  // namespace sumlab
