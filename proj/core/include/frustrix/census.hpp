#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "frustrix/signed_graph.hpp"

namespace frustrix {

// Certificate of an unsigned graph's isomorphism class: two graphs have
// equal certs iff they are isomorphic. relabeling[old] = new achieves it.
struct CanonicalForm {
    std::vector<std::uint8_t> cert;
    std::vector<int> relabeling;

    std::string cert_hex() const;
};

// Canonical labeling by iterated degree/neighborhood refinement plus
// backtracking over refinement cells, taking the lexicographically smallest
// adjacency encoding. Signs are ignored; parallel edges are not supported.
// Capacity n <= 16.
CanonicalForm canonical_form(const SignedGraph& g);

// All automorphisms of the underlying simple graph, as permutations
// perm[old] = image. Deterministic order.
std::vector<std::vector<int>> automorphisms(const SignedGraph& g);

struct CensusFilter {
    bool two_edge_connected = false;
    bool cubic = false;
    int girth_min = 0;  // 0 = no girth constraint; forests pass any bound
};

// Exactly one all-positive representative per isomorphism class of connected
// simple graphs on n vertices with maximum degree <= 3 satisfying the
// filter, in deterministic (certificate) order. Capacity n <= 12.
void enumerate_subcubic(int n, const CensusFilter& filter,
                        const std::function<void(const SignedGraph&)>& emit);
std::vector<SignedGraph> enumerate_subcubic(int n, const CensusFilter& filter);

// Keeps graphs with girth >= g_min (forests pass).
std::vector<SignedGraph> girth_filtered(std::vector<SignedGraph> graphs, int g_min);

// Exactly one signature per switching class of the connected graph g:
// spanning-tree edges positive, the 2^(m-n+1) cotree patterns free. With
// reduce_by_automorphisms, only the lexicographic minimum of each orbit of
// the automorphism group action is kept.
std::vector<SignatureBits> enumerate_switching_classes(const SignedGraph& g,
                                                       bool reduce_by_automorphisms = false);

// True iff some underlying-graph isomorphism pulls b's signature back to one
// switching-equivalent to a's. Both graphs connected, n <= 16.
bool switching_isomorphic(const SignedGraph& a, const SignedGraph& b);

// Relabel vertices of a signed graph: perm[old] = new.
SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm);

}  // namespace frustrix
