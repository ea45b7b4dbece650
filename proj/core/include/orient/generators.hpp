#pragma once

#include <random>

#include "orient/graph.hpp"

namespace orient::gen {

using Rng = std::mt19937_64;

MultiGraph path(int n);
MultiGraph cycle(int n);
MultiGraph star(int leaves);
MultiGraph complete(int n);
// Every edge of g repeated `times` times (copies adjacent in id order).
MultiGraph multiply(const MultiGraph& g, int times);
// C3 with each edge of multiplicity k: 01 x k, 12 x k, 02 x k.
MultiGraph triangle_times(int k);

// Uniform random labelled tree by random attachment.
MultiGraph random_tree(Rng& rng, int n);
// Connected: a random tree plus extra uniformly random non-loop edges.
MultiGraph random_connected(Rng& rng, int n, int edges);
// Union of `trees` random spanning trees plus `extra` random edges.
MultiGraph random_tree_connected(Rng& rng, int n, int trees, int extra = 0);
// Adds random edges to a random tree until edge-connectivity reaches lambda.
MultiGraph random_edge_connected(Rng& rng, int n, int lambda);

}  // namespace orient::gen
