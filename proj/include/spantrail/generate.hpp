#ifndef SPANTRAIL_GENERATE_HPP
#define SPANTRAIL_GENERATE_HPP

#include "spantrail/graph.hpp"

#include <cstdint>
#include <functional>
#include <random>

namespace spantrail {

using Rng = std::mt19937_64;

/// Every labelled graph on n vertices (n <= 8), by edge mask in increasing
/// order, until `visit` returns false.
void for_each_graph(int n, const std::function<bool(const Graph&)>& visit);

/// Same, restricted to connected graphs.
void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& visit);

/// Each pair independently with probability p. Uses raw engine output only,
/// so a seed reproduces the same graph on every platform.
Graph random_graph(int n, double p, Rng& rng);

/// Rejection-samples random_graph until connected.
Graph random_connected_graph(int n, double p, Rng& rng);

/// Random 2K2-free graph: start from a random graph of density 1 - q and
/// add a random cross pair of each induced 2K2 until none is left.
Graph random_2k2_free_graph(int n, double q, Rng& rng);

/// Uniform integer in [lo, hi] from raw engine output.
int uniform_int(Rng& rng, int lo, int hi);
double uniform_unit(Rng& rng);

} // namespace spantrail

#endif // SPANTRAIL_GENERATE_HPP
