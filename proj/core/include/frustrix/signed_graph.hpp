#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frustrix/errors.hpp"

namespace frustrix {

// Hard model limit: vertex subsets and adjacency rows are 64-bit masks.
inline constexpr int kMaxModelVertices = 64;

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

inline Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::Plus : Sign::Minus;
}

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct Edge {
    int u = 0;  // u <= v always
    int v = 0;
    Sign sign = Sign::Plus;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return static_cast<int>(a.sign) < static_cast<int>(b.sign);
    }
};

// Compact edge-sign vector over the canonical (sorted) edge order.
// Bit i set means edge i is negative.
class SignatureBits {
public:
    SignatureBits() = default;
    explicit SignatureBits(int bit_count);

    int size() const { return m_; }
    bool test(int i) const;
    void set(int i, bool value);
    int count() const;

    // Hex of the value sum(bit_i * 2^i), exactly ceil(m/4) digits,
    // most significant nibble first. Empty string when m == 0.
    std::string hex() const;
    static SignatureBits from_hex(const std::string& hex, int bit_count);

    friend bool operator==(const SignatureBits&, const SignatureBits&) = default;
    friend bool operator<(const SignatureBits& a, const SignatureBits& b);

private:
    int m_ = 0;
    std::vector<std::uint64_t> words_;
};

// A +-1 state per vertex; switching multiplies each edge sign by s[u]*s[v].
struct SwitchState {
    std::vector<std::int8_t> s;  // entries are +1 or -1

    static SwitchState identity(int n) { return SwitchState{std::vector<std::int8_t>(n, 1)}; }
    static SwitchState from_mask(std::uint64_t minus_side, int n);
    std::uint64_t minus_mask() const;
    int size() const { return static_cast<int>(s.size()); }
};

struct CutProfile {
    std::uint64_t side = 0;  // vertex subset X as a bitmask
    int pos = 0;             // positive edges with exactly one endpoint in X
    int neg = 0;

    int size() const { return pos + neg; }
    bool unequilibrated() const { return neg > pos; }
    bool equilibrated() const { return neg == pos; }
};

// Immutable signed multigraph. Vertices are 0..n-1. At most two parallel
// edges per vertex pair; if two, their signs differ (a digon). No loops.
// The edge list is sorted by (u, v, sign); this order is the canonical
// edge index used by SignatureBits and the file format.
class SignedGraph {
public:
    SignedGraph();  // empty graph (n = 0)
    SignedGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const;

    // Incident edge indices, ascending.
    const std::vector<int>& incident(int v) const;
    int degree(int v) const { return static_cast<int>(incident(v).size()); }
    std::uint64_t adjacency_mask(int v) const;
    bool adjacent(int u, int v) const;
    // Index of some edge between u and v, or -1.
    int edge_between(int u, int v) const;

    bool is_simple() const;  // no parallel edges
    bool is_subcubic() const;
    bool is_cubic() const;
    bool is_connected() const;

    int negative_edge_count() const;
    SignatureBits signature_bits() const;
    SignedGraph with_signature(const SignatureBits& bits) const;
    // Same underlying edge list, all edges positive.
    SignedGraph underlying() const;
    bool same_underlying(const SignedGraph& other) const;

    // Induced signed subgraph, vertices relabeled 0..k-1 in ascending order.
    SignedGraph induced(const std::vector<int>& vertices) const;
    SignedGraph induced(std::uint64_t vertex_mask) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::uint64_t> adj_mask_;
    void validate_and_index();
};

// --- primitive operations -------------------------------------------------

// Multiplies each edge sign by state.s[u]*state.s[v]. Involutive.
SignedGraph switch_graph(const SignedGraph& g, const SwitchState& state);

int negative_edge_count(const SignedGraph& g);

// Boundary profile of the vertex subset given by side_mask. Requires a
// proper cut: 0 < |X| < n.
CutProfile cut_profile(const SignedGraph& g, std::uint64_t side_mask);

// Signed subdivision of edge e = (x, y): negative xy becomes positive xz
// plus negative zy; positive xy becomes two positive edges. Preserves F.
SignedGraph subdivide_edge(const SignedGraph& g, int edge_index);

// Cut-edges of a connected graph, ascending edge indices. A digon pair is
// never a bridge.
std::vector<int> bridges(const SignedGraph& g);

struct Block {
    std::vector<int> vertices;  // ascending
    bool is_leaf = false;       // incident to exactly one bridge
};

// Components of g minus its bridges. A bridgeless graph yields one
// non-leaf block.
std::vector<Block> block_decomposition(const SignedGraph& g);

// True iff the two signatures on the same connected underlying graph are
// switching equivalent: every fundamental cycle (w.r.t. the canonical DFS
// spanning tree) has the same sign product under both.
bool fundamental_cycle_signs(const SignedGraph& g, const SignatureBits& sigma_a,
                             const SignatureBits& sigma_b);
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// Canonical representative of g's switching class: all edges of the DFS
// spanning tree (rooted at 0, neighbors ascending) made positive, plus the
// state that achieves it. Idempotent and constant on switching classes.
std::pair<SignedGraph, SwitchState> tree_canonical_signature(const SignedGraph& g);

// Edge indices of the canonical DFS spanning tree (rooted at 0).
std::vector<int> spanning_tree_edges(const SignedGraph& g);

// Shortest cycle length; a digon counts as a 2-cycle. Throws no_cycle_error
// on forests.
int girth(const SignedGraph& g);
std::optional<int> girth_opt(const SignedGraph& g);

}  // namespace frustrix
