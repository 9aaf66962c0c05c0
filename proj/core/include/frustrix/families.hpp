#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "frustrix/signed_graph.hpp"

namespace frustrix {

// The five exceptional signed subcubic graphs with F > v/3, i = 1..5.
// Vertex numbering follows the reading order of each drawing:
//   gamma(1): K4 on {0..3} with the negative perfect matching {03, 12}.
//   gamma(2): gamma(1) with its negative edge 12 subdivided by vertex 4.
//   gamma(3), gamma(4): the two 8-vertex cubic graphs (hubs first, then rim).
//   gamma(5): the cube, outer square 0..3, inner square 4..7.
SignedGraph gamma(int i);

enum class GadgetKind {
    Triangle,      // negative triangle, one degree-2 apex
    Gamma1TwoSub,  // 2-subdivision of gamma(1): 6 vertices, 2 negatives
};

struct GadgetSpec {
    GadgetKind kind = GadgetKind::Triangle;
    // For Gamma1TwoSub: indices (into gamma(1)'s canonical edge list) of the
    // two distinct edges to subdivide. The default subdivides the two positive
    // edges 02 and 13.
    std::optional<std::pair<int, int>> subdivided_edges;
};

// Closed chain of gadgets joined by positive edges x_i y_{i-1} (indices mod
// the chain length). Needs at least two gadgets to stay simple. The result
// is simple, subcubic, 2-edge-connected, with F = v/3.
SignedGraph gadget_chain(const std::vector<GadgetKind>& kinds);
SignedGraph gadget_chain(const std::vector<GadgetSpec>& specs);

// Equality family of the (3n+2)/8 bound: take a tree whose internal
// vertices all have degree 3, replace each internal vertex by a negative
// triangle and attach each leaf to the 2-vertex of a fresh gamma(2) copy.
// With k internal vertices: v = 8k+10 and exactly 3k+4 negative edges.
// The tree is given by its edge list on vertices 0..t-1.
SignedGraph triangle_tree_extremal(int tree_n, const std::vector<std::pair<int, int>>& tree_edges);

// Convenience: path-shaped internal tree with k internal vertices (k >= 0).
SignedGraph triangle_tree_path(int k);

// The two 8-vertex cubic graphs that admit no exceptional signature,
// unsigned (all-positive). W1 labels a,b,c,d,a',b',c',d' -> 0..7;
// W2 labels a,b,c,u,v,w,x,y -> 0..7.
std::pair<SignedGraph, SignedGraph> w_graphs();

// Petersen graph with all 15 edges negative.
SignedGraph petersen_negative();

// Cycle of k digons joined by single positive edges: 2k vertices, every
// vertex in a digon, minimal signature with F = k = n/2. Requires k >= 2.
SignedGraph digon_graph(int k);

}  // namespace frustrix
