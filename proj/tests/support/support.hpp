#pragma once

// Shared helpers for the test suites: instance enumeration, random
// instances and brute-force reference checkers.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lved/graph.hpp"
#include "lved/labelled_tree.hpp"

namespace lved::test {

/// Calls f for every labelled tree on n vertices (n^(n-2) Prüfer codes).
void for_each_tree(std::size_t n, const std::function<void(const Graph&)>& f);

/// Uniform random tree on n vertices.
Graph random_tree(std::size_t n, std::mt19937_64& rng);

/// Random connected graph: a random tree plus each remaining pair with
/// probability p.
Graph random_connected(std::size_t n, double p, std::mt19937_64& rng);

/// Random labelled tree with demands in {0,1,2} and R tags with probability pr.
LabelledTree random_labelling(const Graph& tree, double pr, std::mt19937_64& rng);

/// One representative per isomorphism class of graphs on n vertices
/// (n <= 7). Optionally only connected ones.
std::vector<Graph> graphs_up_to_iso(std::size_t n, bool connected_only);

// Brute-force checkers straight from the definitions (all pairs, sets
// rebuilt per query). Slow by design.
bool naive_lveds(const Graph& g, const std::vector<Vertex>& l);
bool naive_kveds(const Graph& g, const std::vector<Vertex>& d, int k);
bool naive_liars_ds(const Graph& g, const std::vector<Vertex>& d);
bool naive_lkt(const LabelledTree& t, const std::vector<Vertex>& d);

/// Minimum size of a set satisfying pred, by plain subset enumeration.
std::size_t naive_min(std::size_t n, const std::function<bool(const std::vector<Vertex>&)>& pred);

}  // namespace lved::test
