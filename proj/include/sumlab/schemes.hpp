#pragma once

#include "sumlab/graph.hpp"
#include "sumlab/labelling.hpp"

namespace sumlab {

// Closed-form labellings for specific families. All return labellings over
// the family graph with edges {1,2},{3,4},... for matchings.

// Perfect matching on n vertices (n even), one shared isolate. Labels follow
// lambda(1)=2, even k: previous+1, odd k: sum of the previous two; they grow
// like sqrt(2)^k. Not exclusive: inner edges are witnessed by later vertices.
SumLabelling matching_exponential(int n);

// Closed form of the same sequence: 3*2^(j-1) for k=2j, 3*2^j - 1 for k=2j+1.
Int matching_closed_form(int k);

// Matching on n vertices with labels n..2n-1 paired to a constant sum and a
// single isolate 3n-1. Exclusive, linear-size labels.
SumLabelling matching_linear(int n);

// Matching on 2^(d+1) vertices assembled from d levels of pairwise unions;
// every pair sums to the same isolate and labels fit in 2d+5 bits.
SumLabelling matching_block_union(int d);

// Complete graph, n >= 4: vertex i gets 4i-3, isolates 4j+2 for j=1..2n-3.
SumLabelling complete_graph_labelling(int n);

// Order that makes the incremental labeller produce exactly two isolates on
// a path 1-2-...-n: odd positions ascending, then even positions descending.
VertexOrdering path_optimal_ordering(int n);

// Column-wise incidence labelling: vertex i carries 2^n + 2^(n-i), edge
// {u,w} carries 2^(n+1) + 2^(n-u) + 2^(n-w). One isolate per edge, every
// label below 2^(n+2). Requires min degree >= 1.
SumLabelling incidence_scheme(const Graph& g);

}  // namespace sumlab
