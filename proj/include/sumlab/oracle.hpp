#pragma once

#include <vector>

#include "sumlab/graph.hpp"
#include "sumlab/labelling.hpp"
#include "sumlab/types.hpp"

namespace sumlab {

// Cubic-time reference decoder: an edge between positions i<j whenever some
// label equals labels[i] + labels[j]. No sorting assumptions, no searches.
Graph brute_force_decode(const std::vector<Int>& labels);

// Smallest number of extra isolated vertices that makes g decodable, found
// by exhaustive search over injective vertex labellings with labels in
// 1..label_limit. Exact whenever an optimal labelling fits under the limit.
// Throws if the answer exceeds s_max or the search bounds are too large
// (needs vertex_count <= 6, s_max <= 8 and label_limit <= 64). A non-null
// witness receives a labelling realizing the returned count.
int brute_force_sum_number(const Graph& g, int s_max = 6, int label_limit = 64,
                           SumLabelling* witness = nullptr);

// Deterministic pseudo-random graph with n vertices, m edges and, when
// min_degree is 1, no isolated vertex. Same seed, same graph.
Graph random_graph(int n, int m, unsigned seed, int min_degree = 1);

// Each vertex after the first attaches to between 1 and d earlier vertices,
// so the result is connected and d-degenerate.
Graph random_degenerate_graph(int n, int d, unsigned seed);

}  // namespace sumlab
