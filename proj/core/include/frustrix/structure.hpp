#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "frustrix/signed_graph.hpp"

namespace frustrix {

// Bipartition of V by incidence to negative edges, with the degree strata
// used in the discharging argument. Defined for any signature; the strata
// are only meaningful when the signature is minimal (caller's contract).
struct XYPartition {
    std::vector<int> x;                    // vertices incident to no negative edge
    std::vector<int> y;                    // the rest
    std::array<std::vector<int>, 4> x_by;  // x_by[i]: x-vertices with i neighbors in Y
    std::array<std::vector<int>, 3> y_by;  // y_by[j]: y-vertices with j neighbors in X
};

XYPartition xy_partition(const SignedGraph& g);

struct KeyInequalityReport {
    int lhs = 0;  // |X3| + |Y0|
    int rhs = 0;  // |Y2|
    bool holds = false;
};

// Diagnostic only: the inequality is proved under minimum-counterexample
// hypotheses, so no direction is asserted here.
KeyInequalityReport key_inequality_report(const XYPartition& p);

struct TCWitness {
    bool is_cycle = false;       // false: induced tree, true: induced odd cycle
    std::vector<int> vertices;   // ascending
    int k = 0;                   // |vertices| == 2k+1
    int negative_boundary = 0;
};

// Searches induced odd-order trees with >= k+2 negative boundary edges and
// induced odd cycles with >= k+1 negative boundary edges, k <= k_max.
// A witness certifies the signature is not minimal.
std::optional<TCWitness> violates_tc_free(const SignedGraph& g, int k_max);

// F(g) == k and deleting any single edge strictly lowers F.
bool is_critically_frustrated(const SignedGraph& g, int k);

// For each positive edge, exhaustively searches the cuts through it for one
// with equally many positive and negative edges. Capacity n <= 20.
bool every_positive_edge_in_equilibrated_cut(const SignedGraph& g);

enum class Rule {
    Degree2Vertex,
    NegTriangle,
    AdjTriangles,
    Tri4CycleNeg,
    Neg4CyclesShared,
    TriPentaShared,
    H1Subgraph,
    H2Subgraph,
    Pos2EdgeCut,  // detector only; reports the forbidden premise, no rewrite
};

const char* rule_name(Rule r);  // "DEGREE2_VERTEX", ...

struct ConfigurationMatch {
    Rule rule = Rule::Degree2Vertex;
    // Matched vertices in the pattern's labeled order:
    //   DEGREE2_VERTEX    {z, x, y}
    //   NEG_TRIANGLE      {a, b, c, x, y, z}       (bc negative, x/y/z thirds)
    //   ADJ_TRIANGLES     {a, b, c, d, x, y}       (triangles acd, bcd)
    //   TRI_4CYCLE_NEG    {z, c, d, a, b, x, y}    (triangle cdz, 4-cycle abdc)
    //   NEG_4CYCLES_SHARED / TRI_PENTA_SHARED
    //                     {x, y, a, b, c, d, a', b', c', d'}
    //   H1_SUBGRAPH       {x, a, b, c, d, y}
    //   H2_SUBGRAPH       {x, u, y, z, b, c, b', c'}
    //   POS_2EDGECUT      {v1, u1, v2, u2}
    std::vector<int> vertices;
    std::vector<int> edges;  // matched edge indices, ascending
};

struct ConditionCheck {
    std::string name;
    bool passed = false;
};

struct ReductionStep {
    Rule rule = Rule::Degree2Vertex;
    SignedGraph input;   // graph the rule was applied to
    SignedGraph output;  // rewritten graph (vertices relabeled, new ones last)
    int offset = 0;      // claimed F(input) - F(output), 0 or 1
    std::vector<int> matched_vertices;
    std::vector<ConditionCheck> conditions_checked;
};

// First match in deterministic scan order (anchor vertices/edges ascending,
// then lexicographic tuples) satisfying the rule's structural hypotheses:
// sign placement, chord counts, degrees. A pattern match does not promise
// the rewrite applies; apply_reduction checks that separately.
std::optional<ConfigurationMatch> detect_configuration(const SignedGraph& g, Rule rule);

// Applies the rule's rewrite. The offset is the rule's claimed F drop; the
// implementation additionally asserts that the negative-edge count drops by
// exactly the offset (true whenever the input signature is minimal).
// Throws rule_inapplicable_error when side conditions fail.
ReductionStep apply_reduction(const SignedGraph& g, const ConfigurationMatch& m);

struct ReductionTrace {
    SignedGraph final_graph;
    int total_offset = 0;
    std::vector<ReductionStep> steps;
    int normalization_switches = 0;  // unequilibrated-cut switches before reducing
};

// Normalizes the signature to a minimal one by switching at unequilibrated
// cuts, then applies rules in the fixed priority order
//   DEGREE2_VERTEX, NEG_TRIANGLE, ADJ_TRIANGLES, TRI_4CYCLE_NEG,
//   NEG_4CYCLES_SHARED, TRI_PENTA_SHARED, H1_SUBGRAPH, H2_SUBGRAPH
// until none applies. F(input) == F(final) + total_offset.
ReductionTrace reduce_to_fixpoint(const SignedGraph& g);

}  // namespace frustrix
