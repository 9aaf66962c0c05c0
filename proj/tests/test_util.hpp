#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frustrix/signed_graph.hpp"

extern std::uint64_t g_test_seed;

namespace testutil {

std::mt19937_64 seeded_rng(std::uint64_t salt = 0);

// Random connected signed graph with maximum degree 3: random tree grown
// under the degree cap, then extra edges while capacity remains.
frustrix::SignedGraph random_connected_subcubic(std::mt19937_64& rng, int n,
                                                double extra_edge_prob = 0.6);

// Random +-1 state.
frustrix::SwitchState random_state(std::mt19937_64& rng, int n);

// Independent frustration oracle: walks all 2^(n-1) states and recounts the
// negative edges from scratch each time. No Gray code, no pruning.
int plain_frustration(const frustrix::SignedGraph& g);

// Frustration of a possibly disconnected graph via the plain oracle.
int plain_frustration_components(const frustrix::SignedGraph& g);

// Minimum over all proper cuts of the boundary size (edge connectivity).
int min_cut_size(const frustrix::SignedGraph& g);

// Canonical certificate by minimizing over all n! relabelings. Independent
// of the refinement-based canonical form. n <= 8.
std::vector<std::uint8_t> perm_min_cert(const frustrix::SignedGraph& g);

// All connected graphs with max degree <= 3 on exactly n labeled vertices,
// collected up to isomorphism with perm_min_cert. Independent of the census
// enumerator. n <= 6.
std::vector<std::vector<std::uint8_t>> naive_subcubic_classes(int n, bool cubic_only);

// Number of labeled connected simple cubic graphs on n vertices, counted by
// direct search over adjacency choices. Independent of any isomorphism
// machinery.
long long labeled_cubic_count(int n);

// Number of labeled connected simple graphs with max degree <= 3, counted by
// a DFS over the edge slots.
long long labeled_subcubic_count(int n);

// Sum over census classes of n! / |Aut|, for cross-checking labeled counts.
long long labeled_count_from_classes(const std::vector<frustrix::SignedGraph>& classes);

}  // namespace testutil
