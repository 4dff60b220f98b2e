#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumlab/graph.hpp"
#include "sumlab/labelling.hpp"
#include "sumlab/types.hpp"

namespace sumlab {

// A bare sum-graph code: the sorted label multiset with vertex/isolate roles
// erased. Adjacency is recovered arithmetically.
struct SumEncoding {
    std::vector<Int> labels;         // strictly increasing
    mutable long long searches = 0;  // membership probes done by adjacent()

    int size() const { return static_cast<int>(labels.size()); }
};

struct DecodeResult {
    Graph graph;                        // over label positions 1..N
    std::vector<int> isolate_positions; // positions with no incident edge
};

SumEncoding make_encoding(std::vector<Int> labels);
SumEncoding encoding_from_labelling(const SumLabelling& l);

DecodeResult decode(const SumEncoding& enc);

// Positions are 1-based indices into the sorted label list.
// One addition and one binary search per call.
bool adjacent(const SumEncoding& enc, int i, int j);

// Self-delimiting stream: magic byte, version byte, then Elias gamma codes
// for the count, the first label and the successive differences.
std::vector<std::uint8_t> serialize_gamma(const SumEncoding& enc);
SumEncoding parse_gamma(std::span<const std::uint8_t> data);
std::size_t gamma_bit_count(const SumEncoding& enc);  // before byte padding

// Edge-list stream: self-delimiting headers for n and m, then 2m endpoint
// fields of ceil(log2 n) bits each. Requires at least one edge.
std::vector<std::uint8_t> serialize_incidence(const Graph& g);
Graph parse_incidence(std::span<const std::uint8_t> data);
std::size_t incidence_bit_count(const Graph& g);      // before byte padding

// Plain text: decimal labels separated by whitespace, '#' starts a comment.
std::string encoding_to_text(const SumEncoding& enc);
SumEncoding encoding_from_text(const std::string& text);

}  // namespace sumlab
