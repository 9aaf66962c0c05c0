#pragma once

#include <cstdint>
#include <optional>

#include "frustrix/signed_graph.hpp"

namespace frustrix {

enum class SolveMethod { Bruteforce, BranchBound };

struct FrustrationResult {
    int f = 0;
    SwitchState witness_state;        // applying it to the input yields f negatives
    SignatureBits witness_signature;  // signs after applying witness_state
    std::uint64_t states_explored = 0;
    SolveMethod method = SolveMethod::Bruteforce;
};

// Capacity defaults; FRUSTRIX_MAX_N overrides both when set.
int solver_capacity_bruteforce();
int solver_capacity_branch_bound();

// Exact frustration index by Gray-code enumeration of all 2^(n-1) vertex
// states with s[0] = +1. Requires a connected graph within capacity.
FrustrationResult frustration_bruteforce(const SignedGraph& g);

// Exact frustration index by depth-first search over vertex states in BFS
// order from vertex 0, pruning on the decided-edge negative count.
FrustrationResult frustration_branch_bound(const SignedGraph& g);

// Convenience: branch-and-bound when the graph is too big for brute force.
int frustration_index(const SignedGraph& g);

// Sum of frustration indices over connected components (bridge/edge-deletion
// helpers; the solvers themselves reject disconnected input).
int frustration_sum_components(const SignedGraph& g);

// True iff the current signature attains the frustration index.
bool is_minimal_signature(const SignedGraph& g);

// Some edge-cut with more negative than positive edges, if one exists.
// Exhaustive over the 2^(n-1)-1 proper subsets avoiding vertex 0; returns
// the first hit in Gray-code order. Independent of the frustration solver.
std::optional<CutProfile> find_unequilibrated_cut(const SignedGraph& g);

struct MaxCutResult {
    int size = 0;
    std::uint64_t side = 0;
};

// Maximum cut of the underlying graph, signs ignored. Plain subset scan,
// kept independent of the frustration code path.
MaxCutResult max_cut_bruteforce(const SignedGraph& g);

}  // namespace frustrix
