#include "frustrix/signed_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <deque>

namespace frustrix {

// --- SignatureBits ----------------------------------------------------------

SignatureBits::SignatureBits(int bit_count) : m_(bit_count) {
    if (bit_count < 0) throw dimension_error("negative bit count");
    words_.assign((bit_count + 63) / 64, 0);
}

bool SignatureBits::test(int i) const {
    if (i < 0 || i >= m_) throw index_error("signature bit out of range");
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void SignatureBits::set(int i, bool value) {
    if (i < 0 || i >= m_) throw index_error("signature bit out of range");
    std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= bit;
    else
        words_[i / 64] &= ~bit;
}

int SignatureBits::count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
}

std::string SignatureBits::hex() const {
    int digits = (m_ + 3) / 4;
    std::string out(digits, '0');
    for (int d = 0; d < digits; ++d) {
        int nibble = 0;
        for (int b = 0; b < 4; ++b) {
            int i = 4 * d + b;
            if (i < m_ && test(i)) nibble |= 1 << b;
        }
        out[digits - 1 - d] = "0123456789abcdef"[nibble];
    }
    return out;
}

SignatureBits SignatureBits::from_hex(const std::string& hex, int bit_count) {
    int digits = (bit_count + 3) / 4;
    if (static_cast<int>(hex.size()) != digits)
        throw parse_error("signature hex has wrong length: expected " + std::to_string(digits) +
                          " digits, got " + std::to_string(hex.size()));
    SignatureBits bits(bit_count);
    for (int d = 0; d < digits; ++d) {
        char c = hex[digits - 1 - d];
        int nibble;
        if (c >= '0' && c <= '9')
            nibble = c - '0';
        else if (c >= 'a' && c <= 'f')
            nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            nibble = c - 'A' + 10;
        else
            throw parse_error(std::string("bad hex digit '") + c + "'");
        for (int b = 0; b < 4; ++b) {
            int i = 4 * d + b;
            if (nibble >> b & 1) {
                if (i >= bit_count) throw parse_error("signature hex sets bit beyond edge count");
                bits.set(i, true);
            }
        }
    }
    return bits;
}

bool operator<(const SignatureBits& a, const SignatureBits& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_;
    for (int w = static_cast<int>(a.words_.size()) - 1; w >= 0; --w)
        if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
}

// --- SwitchState ------------------------------------------------------------

SwitchState SwitchState::from_mask(std::uint64_t minus_side, int n) {
    SwitchState st = identity(n);
    for (int v = 0; v < n; ++v)
        if (minus_side >> v & 1) st.s[v] = -1;
    return st;
}

std::uint64_t SwitchState::minus_mask() const {
    std::uint64_t m = 0;
    for (int v = 0; v < size(); ++v)
        if (s[v] < 0) m |= std::uint64_t{1} << v;
    return m;
}

// --- SignedGraph ------------------------------------------------------------

SignedGraph::SignedGraph() = default;

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    validate_and_index();
}

void SignedGraph::validate_and_index() {
    if (n_ < 0) throw construction_error("negative vertex count");
    if (n_ > kMaxModelVertices)
        throw capacity_error("graph has " + std::to_string(n_) + " vertices, model supports at most " +
                             std::to_string(kMaxModelVertices));
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) throw construction_error("edge endpoint out of range");
        if (e.u == e.v) throw construction_error("loops are not allowed");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        const Edge& a = edges_[i - 1];
        const Edge& b = edges_[i];
        if (a.u == b.u && a.v == b.v) {
            if (a.sign == b.sign) throw construction_error("parallel edges with equal signs");
            if (i >= 2 && edges_[i - 2].u == b.u && edges_[i - 2].v == b.v)
                throw construction_error("more than two parallel edges");
        }
    }
    incident_.assign(n_, {});
    adj_mask_.assign(n_, 0);
    for (int e = 0; e < edge_count(); ++e) {
        incident_[edges_[e].u].push_back(e);
        incident_[edges_[e].v].push_back(e);
        adj_mask_[edges_[e].u] |= std::uint64_t{1} << edges_[e].v;
        adj_mask_[edges_[e].v] |= std::uint64_t{1} << edges_[e].u;
    }
}

const Edge& SignedGraph::edge(int e) const {
    if (e < 0 || e >= edge_count()) throw index_error("edge index out of range");
    return edges_[e];
}

const std::vector<int>& SignedGraph::incident(int v) const {
    if (v < 0 || v >= n_) throw index_error("vertex index out of range");
    return incident_[v];
}

std::uint64_t SignedGraph::adjacency_mask(int v) const {
    if (v < 0 || v >= n_) throw index_error("vertex index out of range");
    return adj_mask_[v];
}

bool SignedGraph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw index_error("vertex index out of range");
    return (adj_mask_[u] >> v) & 1u;
}

int SignedGraph::edge_between(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e : incident(u)) {
        if (edges_[e].u == u && edges_[e].v == v) return e;
    }
    return -1;
}

bool SignedGraph::is_simple() const {
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) return false;
    return true;
}

bool SignedGraph::is_subcubic() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) > 3) return false;
    return true;
}

bool SignedGraph::is_cubic() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != 3) return false;
    return n_ > 0;
}

bool SignedGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int e : incident_[u]) {
            int w = edges_[e].u == u ? edges_[e].v : edges_[e].u;
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == n_;
}

int SignedGraph::negative_edge_count() const {
    int c = 0;
    for (const auto& e : edges_)
        if (e.sign == Sign::Minus) ++c;
    return c;
}

SignatureBits SignedGraph::signature_bits() const {
    SignatureBits bits(edge_count());
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].sign == Sign::Minus) bits.set(e, true);
    return bits;
}

SignedGraph SignedGraph::with_signature(const SignatureBits& bits) const {
    if (bits.size() != edge_count()) throw dimension_error("signature bit length != edge count");
    std::vector<Edge> es = edges_;
    for (int e = 0; e < edge_count(); ++e) es[e].sign = bits.test(e) ? Sign::Minus : Sign::Plus;
    return SignedGraph(n_, std::move(es));
}

SignedGraph SignedGraph::underlying() const {
    std::vector<Edge> es = edges_;
    for (auto& e : es) e.sign = Sign::Plus;
    // A digon collapses to a single positive edge in the underlying simple view
    // only for serialization; here parallel pairs must keep both edges, which
    // the model forbids with equal signs. Keep digons as +/- pairs instead.
    for (std::size_t i = 1; i < es.size(); ++i)
        if (es[i - 1].u == es[i].u && es[i - 1].v == es[i].v) es[i].sign = Sign::Minus;
    return SignedGraph(n_, std::move(es));
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
    if (n_ != other.n_ || edge_count() != other.edge_count()) return false;
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].u != other.edges_[e].u || edges_[e].v != other.edges_[e].v) return false;
    return true;
}

SignedGraph SignedGraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> relabel(n_, -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= n_) throw index_error("vertex index out of range");
        relabel[vs[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (const auto& e : edges_)
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0)
            es.push_back(Edge{relabel[e.u], relabel[e.v], e.sign});
    return SignedGraph(static_cast<int>(vs.size()), std::move(es));
}

SignedGraph SignedGraph::induced(std::uint64_t vertex_mask) const {
    std::vector<int> vs;
    for (int v = 0; v < n_; ++v)
        if (vertex_mask >> v & 1) vs.push_back(v);
    return induced(vs);
}

// --- operations -------------------------------------------------------------

SignedGraph switch_graph(const SignedGraph& g, const SwitchState& state) {
    if (state.size() != g.vertex_count())
        throw dimension_error("switch state length != vertex count");
    for (auto v : state.s)
        if (v != 1 && v != -1) throw dimension_error("switch state entries must be +1 or -1");
    std::vector<Edge> es = g.edges();
    for (auto& e : es)
        if (state.s[e.u] * state.s[e.v] < 0) e.sign = e.sign * Sign::Minus;
    return SignedGraph(g.vertex_count(), std::move(es));
}

int negative_edge_count(const SignedGraph& g) { return g.negative_edge_count(); }

CutProfile cut_profile(const SignedGraph& g, std::uint64_t side_mask) {
    int n = g.vertex_count();
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    side_mask &= full;
    if (side_mask == 0 || side_mask == full)
        throw invalid_cut_error("cut side must be a proper nonempty vertex subset");
    CutProfile p;
    p.side = side_mask;
    for (const auto& e : g.edges()) {
        bool cu = side_mask >> e.u & 1, cv = side_mask >> e.v & 1;
        if (cu != cv) (e.sign == Sign::Minus ? p.neg : p.pos)++;
    }
    return p;
}

SignedGraph subdivide_edge(const SignedGraph& g, int edge_index) {
    const Edge e = g.edge(edge_index);
    int z = g.vertex_count();
    std::vector<Edge> es;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != edge_index) es.push_back(g.edges()[i]);
    es.push_back(Edge{e.u, z, Sign::Plus});
    es.push_back(Edge{e.v, z, e.sign});
    return SignedGraph(z + 1, std::move(es));
}

namespace {

// Iterative DFS lowlink bridge finder; parallel edges handled by skipping
// only the entering edge index, so a digon is never reported.
std::vector<int> find_bridges(const SignedGraph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> bridge_es;
    int timer = 0;
    struct Frame {
        int v;
        int via_edge;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < g.incident(f.v).size()) {
                int e = g.incident(f.v)[f.next++];
                if (e == f.via_edge) continue;
                const Edge& ed = g.edge(e);
                int w = ed.u == f.v ? ed.v : ed.u;
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, via = f.via_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] > disc[parent]) bridge_es.push_back(via);
                }
            }
        }
    }
    std::sort(bridge_es.begin(), bridge_es.end());
    return bridge_es;
}

}  // namespace

std::vector<int> bridges(const SignedGraph& g) {
    if (!g.is_connected()) throw connectivity_error("bridges() requires a connected graph");
    return find_bridges(g);
}

std::vector<Block> block_decomposition(const SignedGraph& g) {
    if (!g.is_connected()) throw connectivity_error("block_decomposition() requires a connected graph");
    std::vector<int> bridge_es = find_bridges(g);
    std::vector<char> is_bridge(g.edge_count(), 0);
    for (int e : bridge_es) is_bridge[e] = 1;

    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = ncomp;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int e : g.incident(u)) {
                if (is_bridge[e]) continue;
                int w = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    queue.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<Block> blocks(ncomp);
    for (int v = 0; v < n; ++v) blocks[comp[v]].vertices.push_back(v);
    std::vector<int> incident_bridges(ncomp, 0);
    for (int e : bridge_es) {
        incident_bridges[comp[g.edge(e).u]]++;
        incident_bridges[comp[g.edge(e).v]]++;
    }
    for (int c = 0; c < ncomp; ++c) blocks[c].is_leaf = incident_bridges[c] == 1;
    return blocks;
}

std::vector<int> spanning_tree_edges(const SignedGraph& g) {
    if (!g.is_connected()) throw connectivity_error("spanning tree requires a connected graph");
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> tree;
    // DFS from 0, neighbors in ascending edge-index order (hence ascending
    // neighbor order for simple graphs): deterministic canonical tree.
    std::vector<int> stack{0};
    seen[0] = 1;
    std::vector<std::size_t> next(n, 0);
    while (!stack.empty()) {
        int u = stack.back();
        if (next[u] < g.incident(u).size()) {
            int e = g.incident(u)[next[u]++];
            int w = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
            if (!seen[w]) {
                seen[w] = 1;
                tree.push_back(e);
                stack.push_back(w);
            }
        } else {
            stack.pop_back();
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

namespace {

// Per-vertex product of tree-edge signs along the path from the root.
std::vector<std::int8_t> tree_potentials(const SignedGraph& g, const SignatureBits& sigma,
                                         const std::vector<int>& tree) {
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> tadj(n);  // (neighbor, edge)
    for (int e : tree) {
        tadj[g.edge(e).u].push_back({g.edge(e).v, e});
        tadj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
    std::vector<std::int8_t> pot(n, 0);
    pot[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto [w, e] : tadj[u]) {
            if (pot[w] != 0) continue;
            pot[w] = static_cast<std::int8_t>(pot[u] * (sigma.test(e) ? -1 : 1));
            queue.push_back(w);
        }
    }
    return pot;
}

}  // namespace

bool fundamental_cycle_signs(const SignedGraph& g, const SignatureBits& sigma_a,
                             const SignatureBits& sigma_b) {
    if (sigma_a.size() != g.edge_count() || sigma_b.size() != g.edge_count())
        throw mismatch_error("signature bit length != edge count");
    std::vector<int> tree = spanning_tree_edges(g);
    std::vector<char> in_tree(g.edge_count(), 0);
    for (int e : tree) in_tree[e] = 1;
    auto pa = tree_potentials(g, sigma_a, tree);
    auto pb = tree_potentials(g, sigma_b, tree);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[e]) continue;
        const Edge& ed = g.edge(e);
        int ca = (sigma_a.test(e) ? -1 : 1) * pa[ed.u] * pa[ed.v];
        int cb = (sigma_b.test(e) ? -1 : 1) * pb[ed.u] * pb[ed.v];
        if (ca != cb) return false;
    }
    return true;
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
    if (!a.same_underlying(b)) throw mismatch_error("underlying graphs differ");
    return fundamental_cycle_signs(a, a.signature_bits(), b.signature_bits());
}

std::pair<SignedGraph, SwitchState> tree_canonical_signature(const SignedGraph& g) {
    std::vector<int> tree = spanning_tree_edges(g);
    auto pot = tree_potentials(g, g.signature_bits(), tree);
    SwitchState st;
    st.s.assign(pot.begin(), pot.end());
    if (g.vertex_count() == 0) return {g, st};
    return {switch_graph(g, st), st};
}

std::optional<int> girth_opt(const SignedGraph& g) {
    int n = g.vertex_count();
    int best = -1;
    // Digons are 2-cycles.
    for (std::size_t i = 1; i < g.edges().size(); ++i)
        if (g.edges()[i - 1].u == g.edges()[i].u && g.edges()[i - 1].v == g.edges()[i].v) return 2;
    std::vector<int> dist(n), via(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        via[root] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int e : g.incident(u)) {
                if (e == via[u]) continue;
                int w = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else if (dist[w] >= dist[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

int girth(const SignedGraph& g) {
    auto v = girth_opt(g);
    if (!v) throw no_cycle_error("graph is a forest");
    return *v;
}

}  // namespace frustrix
