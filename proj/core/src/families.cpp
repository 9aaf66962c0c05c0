#include "frustrix/families.hpp"

#include <algorithm>
#include <map>

namespace frustrix {

namespace {

SignedGraph make(int n, std::vector<Edge> es) { return SignedGraph(n, std::move(es)); }

Edge pos(int u, int v) { return Edge{u, v, Sign::Plus}; }
Edge neg(int u, int v) { return Edge{u, v, Sign::Minus}; }

}  // namespace

SignedGraph gamma(int i) {
    switch (i) {
        case 1:
            return make(4, {pos(0, 1), pos(0, 2), neg(0, 3), neg(1, 2), pos(1, 3), pos(2, 3)});
        case 2:
            // gamma(1) with edge 12 subdivided by vertex 4 (negative half at 1).
            return make(5, {pos(0, 1), pos(0, 2), neg(0, 3), pos(1, 3), pos(2, 3), neg(1, 4),
                            pos(2, 4)});
        case 3:
            return make(8, {neg(0, 2), pos(0, 3), pos(0, 7), pos(1, 4), neg(1, 5), pos(1, 6),
                            pos(2, 3), pos(2, 7), pos(3, 4), pos(4, 5), pos(5, 6), neg(6, 7)});
        case 4:
            return make(8, {pos(0, 2), pos(0, 3), neg(0, 4), pos(1, 2), pos(1, 5), pos(1, 6),
                            neg(2, 7), pos(3, 4), pos(3, 7), pos(4, 5), neg(5, 6), pos(6, 7)});
        case 5:
            return make(8, {pos(0, 1), neg(0, 3), pos(0, 4), pos(1, 2), neg(1, 5), pos(2, 3),
                            pos(2, 6), pos(3, 7), pos(4, 5), pos(4, 7), pos(5, 6), neg(6, 7)});
        default:
            throw index_error("gamma index must be 1..5");
    }
}

namespace {

// A gadget realized on global vertex ids, with its two attachment points.
struct BuiltGadget {
    std::vector<Edge> edges;
    int x = 0;  // joins to the previous gadget's y
    int y = 0;  // joins to the next gadget's x
    int size = 0;
};

BuiltGadget build_gadget(const GadgetSpec& spec, int base) {
    BuiltGadget b;
    if (spec.kind == GadgetKind::Triangle) {
        int x = base, y = base + 1, a = base + 2;
        b.edges = {pos(a, x), pos(x, y), neg(y, a)};
        b.x = x;
        b.y = y;
        b.size = 3;
        return b;
    }
    // 2-subdivision of gamma(1). Default: subdivide the positive edges 02 and
    // 13 (the matching complementary to the negative one).
    auto choice = spec.subdivided_edges.value_or(std::pair<int, int>{1, 4});
    SignedGraph g1 = gamma(1);
    if (choice.first == choice.second)
        throw construction_error("gamma(1) 2-subdivision needs two distinct edges");
    Edge second = g1.edge(choice.second);
    SignedGraph sub1 = subdivide_edge(g1, choice.first);  // new vertex 4
    int second_idx = -1;
    for (int e = 0; e < sub1.edge_count(); ++e)
        if (sub1.edges()[e] == second) second_idx = e;
    if (second_idx < 0) throw construction_error("subdivided edges must be distinct gamma(1) edges");
    SignedGraph sub2 = subdivide_edge(sub1, second_idx);  // new vertex 5
    if (sub2.degree(4) != 2 || sub2.degree(5) != 2)
        throw construction_error("gamma(1) 2-subdivision attachment points must have degree 2");
    for (const auto& e : sub2.edges()) b.edges.push_back(Edge{base + e.u, base + e.v, e.sign});
    b.x = base + 4;
    b.y = base + 5;
    b.size = 6;
    return b;
}

}  // namespace

SignedGraph gadget_chain(const std::vector<GadgetKind>& kinds) {
    std::vector<GadgetSpec> specs;
    for (auto k : kinds) specs.push_back(GadgetSpec{k, std::nullopt});
    return gadget_chain(specs);
}

SignedGraph gadget_chain(const std::vector<GadgetSpec>& specs) {
    if (specs.size() < 2)
        throw construction_error("gadget chain needs at least 2 gadgets to stay simple");
    std::vector<BuiltGadget> gs;
    int base = 0;
    for (const auto& spec : specs) {
        gs.push_back(build_gadget(spec, base));
        base += gs.back().size;
    }
    std::vector<Edge> es;
    for (const auto& g : gs) es.insert(es.end(), g.edges.begin(), g.edges.end());
    int n = static_cast<int>(gs.size());
    for (int i = 0; i < n; ++i) es.push_back(pos(gs[i].x, gs[(i + n - 1) % n].y));
    return make(base, std::move(es));
}

SignedGraph triangle_tree_extremal(int tree_n, const std::vector<std::pair<int, int>>& tree_edges) {
    if (tree_n < 2) throw construction_error("tree needs at least 2 vertices");
    if (static_cast<int>(tree_edges.size()) != tree_n - 1)
        throw construction_error("tree must have exactly n-1 edges");
    std::vector<std::vector<int>> adj(tree_n);
    for (auto [s, t] : tree_edges) {
        if (s < 0 || t < 0 || s >= tree_n || t >= tree_n || s == t)
            throw construction_error("bad tree edge");
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    // Connectivity check; with n-1 edges this also certifies a tree.
    {
        std::vector<char> seen(tree_n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != tree_n) throw construction_error("tree edges do not form a tree");
    }
    for (int t = 0; t < tree_n; ++t) {
        std::sort(adj[t].begin(), adj[t].end());
        if (adj[t].size() != 1 && adj[t].size() != 3)
            throw construction_error("every internal tree vertex must have degree 3");
    }

    // Lay out structures: internal vertex -> negative triangle, leaf -> gamma(2).
    const SignedGraph leaf_block = gamma(2);
    std::vector<Edge> es;
    std::vector<int> base(tree_n, 0);
    int next = 0;
    for (int t = 0; t < tree_n; ++t) {
        base[t] = next;
        if (adj[t].size() == 3) {
            es.push_back(neg(next, next + 1));
            es.push_back(pos(next, next + 2));
            es.push_back(pos(next + 1, next + 2));
            next += 3;
        } else {
            for (const auto& e : leaf_block.edges())
                es.push_back(Edge{base[t] + e.u, base[t] + e.v, e.sign});
            next += 5;
        }
    }
    // Port for tree edge (t, s): leaves attach at their 2-vertex (local id 4);
    // internal triangles hand out local 0, 1, 2 to neighbors in ascending order.
    auto port = [&](int t, int to) {
        if (adj[t].size() == 1) return base[t] + 4;
        int slot = static_cast<int>(std::lower_bound(adj[t].begin(), adj[t].end(), to) -
                                    adj[t].begin());
        return base[t] + slot;
    };
    for (auto [s, t] : tree_edges) es.push_back(pos(port(s, t), port(t, s)));
    return make(next, std::move(es));
}

SignedGraph triangle_tree_path(int k) {
    if (k < 0) throw construction_error("k must be >= 0");
    if (k == 0) return triangle_tree_extremal(2, {{0, 1}});
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    int next = k;
    for (int i = 0; i < k; ++i) {
        int want = 3 - (i > 0 ? 1 : 0) - (i + 1 < k ? 1 : 0);
        for (int j = 0; j < want; ++j) edges.push_back({i, next++});
    }
    return triangle_tree_extremal(next, edges);
}

std::pair<SignedGraph, SignedGraph> w_graphs() {
    SignedGraph w1 = make(8, {pos(0, 1), pos(1, 3), pos(2, 3), pos(0, 2), pos(0, 4), pos(4, 6),
                              pos(2, 6), pos(4, 5), pos(5, 7), pos(6, 7), pos(1, 7), pos(3, 5)});
    SignedGraph w2 = make(8, {pos(0, 1), pos(1, 2), pos(0, 2), pos(0, 3), pos(3, 6), pos(5, 6),
                              pos(5, 7), pos(4, 7), pos(1, 4), pos(3, 7), pos(4, 6), pos(2, 5)});
    return {w1, w2};
}

SignedGraph petersen_negative() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(neg(i, (i + 1) % 5));
        es.push_back(neg(i, i + 5));
        es.push_back(neg(5 + i, 5 + (i + 2) % 5));
    }
    return make(10, std::move(es));
}

SignedGraph digon_graph(int k) {
    if (k < 2) throw construction_error("digon cycle needs k >= 2");
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) {
        es.push_back(pos(2 * i, 2 * i + 1));
        es.push_back(neg(2 * i, 2 * i + 1));
        es.push_back(pos(2 * i + 1, (2 * i + 2) % (2 * k)));
    }
    return make(2 * k, std::move(es));
}

}  // namespace frustrix
