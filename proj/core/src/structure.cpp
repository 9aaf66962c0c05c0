#include "frustrix/structure.hpp"

#include <algorithm>
#include <functional>

#include "frustrix/solver.hpp"

namespace frustrix {

// --- partitions and diagnostics ---------------------------------------------

XYPartition xy_partition(const SignedGraph& g) {
    int n = g.vertex_count();
    std::vector<char> in_y(n, 0);
    for (const auto& e : g.edges())
        if (e.sign == Sign::Minus) in_y[e.u] = in_y[e.v] = 1;
    XYPartition p;
    for (int v = 0; v < n; ++v) (in_y[v] ? p.y : p.x).push_back(v);
    for (int v = 0; v < n; ++v) {
        int dy = 0, dx = 0;
        std::uint64_t nb = g.adjacency_mask(v);
        while (nb) {
            int w = __builtin_ctzll(nb);
            nb &= nb - 1;
            (in_y[w] ? dy : dx)++;
        }
        if (!in_y[v]) {
            if (dy > 3) throw construction_error("xy_partition expects a subcubic graph");
            p.x_by[dy].push_back(v);
        } else {
            if (dx > 2) throw construction_error("a negative edge endpoint cannot have 3 X-neighbors");
            p.y_by[dx].push_back(v);
        }
    }
    return p;
}

KeyInequalityReport key_inequality_report(const XYPartition& p) {
    KeyInequalityReport r;
    r.lhs = static_cast<int>(p.x_by[3].size() + p.y_by[0].size());
    r.rhs = static_cast<int>(p.y_by[2].size());
    r.holds = r.lhs <= r.rhs;
    return r;
}

namespace {

int boundary_negatives(const SignedGraph& g, std::uint64_t side) {
    int neg = 0;
    for (const auto& e : g.edges())
        if (e.sign == Sign::Minus && (((side >> e.u) ^ (side >> e.v)) & 1)) ++neg;
    return neg;
}

// Ascending combinations of {0..n-1} of the given size.
template <typename F>
void for_each_subset(int n, int size, F&& f) {
    if (size > n || size <= 0) return;
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
        f(pick);
        int i = size - 1;
        while (i >= 0 && pick[i] == n - size + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

std::optional<TCWitness> violates_tc_free(const SignedGraph& g, int k_max) {
    int n = g.vertex_count();
    for (int k = 0; k <= k_max; ++k) {
        int size = 2 * k + 1;
        if (size > n) break;
        std::optional<TCWitness> hit;
        for_each_subset(n, size, [&](const std::vector<int>& pick) {
            if (hit) return;
            std::uint64_t side = 0;
            for (int v : pick) side |= std::uint64_t{1} << v;
            SignedGraph sub = g.induced(pick);
            bool tree = sub.edge_count() == size - 1 && sub.is_connected();
            bool cycle = size >= 3 && sub.edge_count() == size && sub.is_connected();
            if (cycle)
                for (int v = 0; v < size; ++v)
                    if (sub.degree(v) != 2) cycle = false;
            if (!tree && !cycle) return;
            int neg = boundary_negatives(g, side);
            if ((tree && neg >= k + 2) || (cycle && neg >= k + 1)) {
                TCWitness w;
                w.is_cycle = cycle;
                w.vertices = pick;
                w.k = k;
                w.negative_boundary = neg;
                hit = std::move(w);
            }
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

namespace {

SignedGraph remove_edge(const SignedGraph& g, int e) {
    std::vector<Edge> es;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != e) es.push_back(g.edges()[i]);
    return SignedGraph(g.vertex_count(), std::move(es));
}

}  // namespace

bool is_critically_frustrated(const SignedGraph& g, int k) {
    if (!g.is_connected()) throw connectivity_error("is_critically_frustrated requires a connected graph");
    if (frustration_index(g) != k) return false;
    for (int e = 0; e < g.edge_count(); ++e)
        if (frustration_sum_components(remove_edge(g, e)) >= k) return false;
    return true;
}

bool every_positive_edge_in_equilibrated_cut(const SignedGraph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw capacity_error("every_positive_edge_in_equilibrated_cut: n exceeds capacity 20");
    for (int pe = 0; pe < g.edge_count(); ++pe) {
        if (g.edges()[pe].sign != Sign::Plus) continue;
        int u = g.edges()[pe].u, v = g.edges()[pe].v;
        std::vector<int> free;
        for (int w = 0; w < n; ++w)
            if (w != u && w != v) free.push_back(w);
        // Gray walk over cuts with u inside and v outside; every cut through
        // the edge uv is visited exactly once.
        std::uint64_t side = std::uint64_t{1} << u;
        int pos = 0, neg = 0;
        for (int e : g.incident(u)) (g.edges()[e].sign == Sign::Minus ? neg : pos)++;
        bool found = pos == neg;
        std::uint64_t total = std::uint64_t{1} << free.size();
        for (std::uint64_t t = 1; t < total && !found; ++t) {
            int w = free[__builtin_ctzll(t)];
            for (int e : g.incident(w)) {
                const Edge& ed = g.edges()[e];
                int other = ed.u == w ? ed.v : ed.u;
                bool was_crossing = ((side >> w) & 1) != ((side >> other) & 1);
                (ed.sign == Sign::Minus ? neg : pos) += was_crossing ? -1 : 1;
            }
            side ^= std::uint64_t{1} << w;
            found = pos == neg;
        }
        if (!found) return false;
    }
    return true;
}

// --- configuration detectors and rewrites -----------------------------------

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Degree2Vertex: return "DEGREE2_VERTEX";
        case Rule::NegTriangle: return "NEG_TRIANGLE";
        case Rule::AdjTriangles: return "ADJ_TRIANGLES";
        case Rule::Tri4CycleNeg: return "TRI_4CYCLE_NEG";
        case Rule::Neg4CyclesShared: return "NEG_4CYCLES_SHARED";
        case Rule::TriPentaShared: return "TRI_PENTA_SHARED";
        case Rule::H1Subgraph: return "H1_SUBGRAPH";
        case Rule::H2Subgraph: return "H2_SUBGRAPH";
        case Rule::Pos2EdgeCut: return "POS_2EDGECUT";
    }
    return "?";
}

namespace {

std::vector<int> neighbors_of(const SignedGraph& g, int v) {
    std::vector<int> out;
    std::uint64_t nb = g.adjacency_mask(v);
    while (nb) {
        out.push_back(__builtin_ctzll(nb));
        nb &= nb - 1;
    }
    return out;
}

// Third neighbor of v besides a and b; -1 when deg(v) != 3 or v has a digon.
int third_neighbor(const SignedGraph& g, int v, int a, int b) {
    if (g.degree(v) != 3) return -1;
    auto nb = neighbors_of(g, v);
    if (nb.size() != 3) return -1;  // digon present
    for (int w : nb)
        if (w != a && w != b) return w;
    return -1;
}

Sign sign_between(const SignedGraph& g, int u, int v) {
    int e = g.edge_between(u, v);
    if (e < 0) throw index_error("no edge between requested vertices");
    return g.edges()[e].sign;
}

bool has_edge_signed(const SignedGraph& g, int u, int v, Sign s) {
    int e = g.edge_between(u, v);
    return e >= 0 && g.edges()[e].sign == s;
}

struct Rewrite {
    std::vector<int> drop;
    int new_vertices = 0;                             // ids n..n+new-1 before remap
    std::vector<Edge> add;                            // endpoints in pre-remap ids
    std::vector<std::pair<int, Sign>> force_sign;     // edge index -> sign
};

std::optional<SignedGraph> run_rewrite(const SignedGraph& g, const Rewrite& rw) {
    int n = g.vertex_count();
    std::vector<char> dead(n + rw.new_vertices, 0);
    for (int v : rw.drop) dead[v] = 1;
    std::vector<int> remap(n + rw.new_vertices, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!dead[v]) remap[v] = next++;
    for (int j = 0; j < rw.new_vertices; ++j) remap[n + j] = next++;

    std::vector<Sign> sign_of(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) sign_of[e] = g.edges()[e].sign;
    for (auto [e, s] : rw.force_sign) sign_of[e] = s;

    std::vector<Edge> es;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edges()[e];
        if (dead[ed.u] || dead[ed.v]) continue;
        es.push_back(Edge{remap[ed.u], remap[ed.v], sign_of[e]});
    }
    for (const auto& ed : rw.add) {
        if (dead[ed.u] || dead[ed.v]) return std::nullopt;
        es.push_back(Edge{remap[ed.u], remap[ed.v], ed.sign});
    }
    try {
        return SignedGraph(next, std::move(es));
    } catch (const construction_error&) {
        return std::nullopt;
    }
}

struct TryResult {
    SignedGraph input;  // possibly switched at an equilibrated cut
    SignedGraph output;
    int offset = 0;
    std::vector<ConditionCheck> conditions;
};

void note(std::vector<ConditionCheck>& cs, const char* name, bool ok) {
    cs.push_back(ConditionCheck{name, ok});
}

bool result_ok(const SignedGraph& out) {
    return out.vertex_count() > 0 && out.is_simple() && out.is_subcubic() && out.is_connected();
}

// DEGREE2_VERTEX {z, x, y}
std::optional<TryResult> try_degree2(const SignedGraph& g, const std::vector<int>& vs) {
    if (vs.size() != 3) return std::nullopt;
    int z = vs[0], x = vs[1], y = vs[2];
    TryResult r{g, g, 0, {}};
    auto& cs = r.conditions;
    if (g.degree(z) != 2 || x == y || !g.adjacent(z, x) || !g.adjacent(z, y)) return std::nullopt;
    note(cs, "z_is_2_vertex_with_neighbors_x_y", true);

    if (!g.adjacent(x, y)) {
        // Smooth z away: delete it, join x and y with the path's sign product.
        Sign sx = sign_between(g, x, z), sy = sign_between(g, z, y);
        bool at_most_one_neg = !(sx == Sign::Minus && sy == Sign::Minus);
        note(cs, "at_most_one_negative_at_z", at_most_one_neg);
        if (!at_most_one_neg) return std::nullopt;
        Rewrite rw;
        rw.drop = {z};
        rw.add = {Edge{x, y, sx * sy}};
        auto out = run_rewrite(g, rw);
        if (!out || !result_ok(*out)) return std::nullopt;
        note(cs, "result_simple_connected", true);
        r.output = std::move(*out);
        r.offset = 0;
        return r;
    }

    // Triangle x, y, z.
    int neg = (sign_between(g, x, y) == Sign::Minus) + (sign_between(g, x, z) == Sign::Minus) +
              (sign_between(g, y, z) == Sign::Minus);
    if (neg == 0) {
        note(cs, "triangle_positive", true);
        // Delete z and one 3-valent triangle partner, rewire its third edge.
        for (auto [keep, gone] : {std::pair{x, y}, std::pair{y, x}}) {
            if (g.degree(gone) != 3) continue;
            int yp = third_neighbor(g, gone, z, keep);
            if (yp < 0 || g.adjacent(keep, yp)) continue;
            Rewrite rw;
            rw.drop = {z, gone};
            rw.add = {Edge{keep, yp, sign_between(g, gone, yp)}};
            auto out = run_rewrite(g, rw);
            if (!out || !result_ok(*out)) continue;
            note(cs, "rewired_third_edge_stays_simple", true);
            r.output = std::move(*out);
            r.offset = 0;
            return r;
        }
        return std::nullopt;
    }
    if (neg != 1) return std::nullopt;
    note(cs, "triangle_has_exactly_one_negative_edge", true);
    if (g.degree(x) != 3 || g.degree(y) != 3) return std::nullopt;
    int xp = third_neighbor(g, x, z, y), yp = third_neighbor(g, y, z, x);
    if (xp < 0 || yp < 0 || xp == yp) return std::nullopt;
    note(cs, "third_neighbors_exist_and_differ", true);
    bool ext_pos = sign_between(g, x, xp) == Sign::Plus && sign_between(g, y, yp) == Sign::Plus;
    note(cs, "external_edges_positive", ext_pos);
    if (!ext_pos) return std::nullopt;
    Rewrite rw;
    rw.drop = {x, y, z};
    bool joined = g.adjacent(xp, yp);
    note(cs, joined ? "third_neighbors_already_adjacent" : "joined_third_neighbors_positively",
         true);
    if (!joined) rw.add = {Edge{xp, yp, Sign::Plus}};
    auto out = run_rewrite(g, rw);
    if (!out || !result_ok(*out)) return std::nullopt;
    note(cs, "result_simple_connected", true);
    r.output = std::move(*out);
    r.offset = 1;
    return r;
}

// NEG_TRIANGLE {a, b, c, x, y, z}
std::optional<TryResult> try_neg_triangle(const SignedGraph& g, const std::vector<int>& vs) {
    if (vs.size() != 6) return std::nullopt;
    int a = vs[0], b = vs[1], c = vs[2], x = vs[3], y = vs[4], z = vs[5];
    TryResult r{g, g, 1, {}};
    auto& cs = r.conditions;
    if (!g.adjacent(a, b) || !g.adjacent(a, c) || !g.adjacent(b, c)) return std::nullopt;
    bool signs = has_edge_signed(g, b, c, Sign::Minus) && has_edge_signed(g, a, b, Sign::Plus) &&
                 has_edge_signed(g, a, c, Sign::Plus);
    note(cs, "triangle_with_single_negative_edge_bc", signs);
    if (!signs) return std::nullopt;
    if (g.degree(a) != 3 || g.degree(b) != 3 || g.degree(c) != 3) return std::nullopt;
    if (third_neighbor(g, a, b, c) != x || third_neighbor(g, b, a, c) != y ||
        third_neighbor(g, c, a, b) != z)
        return std::nullopt;
    note(cs, "all_triangle_vertices_cubic", true);
    bool distinct = x != y && x != z && y != z;
    note(cs, "third_neighbors_pairwise_distinct", distinct);
    if (!distinct) return std::nullopt;
    bool ext_pos = has_edge_signed(g, b, y, Sign::Plus) && has_edge_signed(g, c, z, Sign::Plus);
    note(cs, "edges_by_cz_positive", ext_pos);
    if (!ext_pos) return std::nullopt;
    bool xz_free = !g.adjacent(x, z);
    note(cs, "x_not_adjacent_z", xz_free);
    if (!xz_free) return std::nullopt;
    Rewrite rw;
    rw.drop = {a, b, c};
    rw.add = {Edge{x, z, sign_between(g, a, x)}};
    auto out = run_rewrite(g, rw);
    if (!out || !result_ok(*out)) return std::nullopt;
    note(cs, "result_simple_connected", true);
    r.output = std::move(*out);
    return r;
}

// ADJ_TRIANGLES {a, b, c, d, x, y}: triangles acd and bcd share edge cd.
std::optional<TryResult> try_adj_triangles(const SignedGraph& g, const std::vector<int>& vs) {
    if (vs.size() != 6) return std::nullopt;
    int a = vs[0], b = vs[1], c = vs[2], d = vs[3], x = vs[4], y = vs[5];
    TryResult r{g, g, 0, {}};
    auto& cs = r.conditions;
    if (!g.adjacent(a, c) || !g.adjacent(a, d) || !g.adjacent(c, d) || !g.adjacent(b, c) ||
        !g.adjacent(b, d))
        return std::nullopt;
    if (a == b || g.adjacent(a, b)) return std::nullopt;
    note(cs, "apexes_distinct_nonadjacent", true);
    if (g.degree(a) != 3 || g.degree(b) != 3) return std::nullopt;
    if (third_neighbor(g, a, c, d) != x || third_neighbor(g, b, c, d) != y) return std::nullopt;
    bool xy_ok = x != y;
    note(cs, "apex_third_neighbors_differ", xy_ok);
    if (!xy_ok) return std::nullopt;

    // Normalize so the four shared-triangle edges carry at most one negative.
    auto neg_set = [&](const SignedGraph& h) {
        std::vector<std::pair<int, int>> s;
        for (auto [u, v] : {std::pair{a, c}, {a, d}, {c, d}, {b, c}, {b, d}})
            if (sign_between(h, u, v) == Sign::Minus) s.push_back({u, v});
        return s;
    };
    SignedGraph cur = g;
    auto negs = neg_set(cur);
    if (negs.size() > 1) {
        std::uint64_t side = 0;
        if (negs == std::vector<std::pair<int, int>>{{a, c}, {b, d}} ||
            negs == std::vector<std::pair<int, int>>{{b, d}, {a, c}})
            side = (std::uint64_t{1} << a) | (std::uint64_t{1} << d);
        else if (negs == std::vector<std::pair<int, int>>{{a, d}, {b, c}} ||
                 negs == std::vector<std::pair<int, int>>{{b, c}, {a, d}})
            side = (std::uint64_t{1} << a) | (std::uint64_t{1} << c);
        if (side == 0) {
            note(cs, "negative_pattern_reachable_by_equilibrated_switch", false);
            return std::nullopt;
        }
        CutProfile cp = cut_profile(cur, side);
        note(cs, "normalization_cut_equilibrated", cp.equilibrated());
        if (!cp.equilibrated()) return std::nullopt;
        cur = switch_graph(cur, SwitchState::from_mask(side, g.vertex_count()));
        negs = neg_set(cur);
    }
    if (negs.size() > 1) return std::nullopt;
    note(cs, "triangle_pair_negatives_at_most_one", true);

    Rewrite rw;
    rw.drop = {b, c, d};
    rw.add = {Edge{a, y, sign_between(cur, b, y)}};
    auto out = run_rewrite(cur, rw);
    if (!out || !result_ok(*out)) return std::nullopt;
    note(cs, "result_simple_connected", true);
    r.input = std::move(cur);
    r.output = std::move(*out);
    r.offset = static_cast<int>(negs.size());
    return r;
}

// TRI_4CYCLE_NEG {z, c, d, a, b, x, y}: triangle cdz, 4-cycle abdc, dz negative.
std::optional<TryResult> try_tri_4cycle(const SignedGraph& g, const std::vector<int>& vs) {
    if (vs.size() != 7) return std::nullopt;
    int z = vs[0], c = vs[1], d = vs[2], a = vs[3], b = vs[4], x = vs[5], y = vs[6];
    TryResult r{g, g, 1, {}};
    auto& cs = r.conditions;
    std::vector<int> pat{z, c, d, a, b};
    std::sort(pat.begin(), pat.end());
    if (std::unique(pat.begin(), pat.end()) != pat.end()) return std::nullopt;
    if (!g.adjacent(c, d) || !g.adjacent(c, z) || !g.adjacent(d, z)) return std::nullopt;
    if (!g.adjacent(a, b) || !g.adjacent(b, d) || !g.adjacent(a, c)) return std::nullopt;
    bool signs = has_edge_signed(g, d, z, Sign::Minus) && has_edge_signed(g, c, z, Sign::Plus);
    note(cs, "triangle_negative_edge_dz_not_shared", signs);
    if (!signs) return std::nullopt;
    if (g.degree(a) != 3 || g.degree(b) != 3) return std::nullopt;
    if (third_neighbor(g, a, b, c) != x || third_neighbor(g, b, a, d) != y) return std::nullopt;
    bool outside = x != z && y != z && x != d && y != c && x != y;
    note(cs, "third_neighbors_outside_pattern", outside);
    if (!outside) return std::nullopt;

    // Normalize the five-vertex patch to a single negative edge.
    auto patch_negs = [&](const SignedGraph& h) {
        std::vector<std::pair<int, int>> s;
        for (auto [u, v] : {std::pair{a, b}, {b, d}, {d, c}, {c, a}, {c, z}, {d, z}})
            if (sign_between(h, u, v) == Sign::Minus) s.push_back({u, v});
        return s;
    };
    SignedGraph cur = g;
    auto negs = patch_negs(cur);
    if (negs.size() > 1) {
        std::uint64_t side = 0;
        auto has = [&](int u, int v) {
            return std::find(negs.begin(), negs.end(), std::pair{u, v}) != negs.end() ||
                   std::find(negs.begin(), negs.end(), std::pair{v, u}) != negs.end();
        };
        if (negs.size() == 2 && has(a, b) && has(d, z))
            side = (std::uint64_t{1} << b) | (std::uint64_t{1} << d);
        else if (negs.size() == 2 && has(c, a) && has(d, z))
            side = (std::uint64_t{1} << c) | (std::uint64_t{1} << z);
        if (side == 0) {
            note(cs, "negative_pattern_reachable_by_equilibrated_switch", false);
            return std::nullopt;
        }
        CutProfile cp = cut_profile(cur, side);
        note(cs, "normalization_cut_equilibrated", cp.equilibrated());
        if (!cp.equilibrated()) return std::nullopt;
        cur = switch_graph(cur, SwitchState::from_mask(side, g.vertex_count()));
        negs = patch_negs(cur);
    }
    if (negs.size() != 1) return std::nullopt;
    note(cs, "patch_has_single_negative", true);

    // Prefer the variant keeping c and z; fall back to keeping d and z.
    if (!g.adjacent(y, z) && !g.adjacent(x, c)) {
        Rewrite rw;
        rw.drop = {a, b, d};
        rw.add = {Edge{x, c, sign_between(cur, x, a)}, Edge{y, z, sign_between(cur, y, b)}};
        auto out = run_rewrite(cur, rw);
        if (out && result_ok(*out)) {
            note(cs, "variant_keep_c_z", true);
            r.input = std::move(cur);
            r.output = std::move(*out);
            return r;
        }
    }
    if (!g.adjacent(x, z) && !g.adjacent(y, d)) {
        Rewrite rw;
        rw.drop = {a, b, c};
        rw.add = {Edge{y, d, sign_between(cur, y, b)}, Edge{x, z, sign_between(cur, x, a)}};
        rw.force_sign = {{cur.edge_between(std::min(d, z), std::max(d, z)), Sign::Plus}};
        auto out = run_rewrite(cur, rw);
        if (out && result_ok(*out)) {
            note(cs, "variant_keep_d_z", true);
            r.input = std::move(cur);
            r.output = std::move(*out);
            return r;
        }
    }
    return std::nullopt;
}

// NEG_4CYCLES_SHARED / TRI_PENTA_SHARED {x, y, a, b, c, d, a', b', c', d'}
std::optional<TryResult> try_shared_chord(const SignedGraph& g, Rule rule,
                                          const std::vector<int>& vs) {
    if (vs.size() != 10) return std::nullopt;
    int x = vs[0], y = vs[1], a = vs[2], b = vs[3], c = vs[4], d = vs[5];
    int ap = vs[6], bp = vs[7], cp = vs[8], dp = vs[9];
    TryResult r{g, g, 1, {}};
    auto& cs = r.conditions;
    std::vector<int> six{x, y, a, b, c, d};
    std::vector<int> sorted = six;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

    bool cycle_ok;
    if (rule == Rule::Neg4CyclesShared) {
        // 6-cycle a-x-c-d-y-b, chord xy: two negative 4-cycles share edge xy.
        cycle_ok = has_edge_signed(g, a, x, Sign::Plus) && has_edge_signed(g, x, c, Sign::Plus) &&
                   has_edge_signed(g, c, d, Sign::Plus) && has_edge_signed(g, d, y, Sign::Plus) &&
                   has_edge_signed(g, y, b, Sign::Plus) && has_edge_signed(g, b, a, Sign::Plus);
    } else {
        // 6-cycle a-x-c-y-d-b, chord xy: negative triangle xcy and 5-cycle.
        cycle_ok = has_edge_signed(g, a, x, Sign::Plus) && has_edge_signed(g, x, c, Sign::Plus) &&
                   has_edge_signed(g, c, y, Sign::Plus) && has_edge_signed(g, y, d, Sign::Plus) &&
                   has_edge_signed(g, d, b, Sign::Plus) && has_edge_signed(g, b, a, Sign::Plus);
    }
    if (!cycle_ok || !has_edge_signed(g, x, y, Sign::Minus)) return std::nullopt;
    note(cs, "positive_6_cycle_with_negative_chord", true);

    SignedGraph patch = g.induced(six);
    bool one_chord = patch.edge_count() == 7;
    note(cs, "6_cycle_has_exactly_one_chord", one_chord);
    if (!one_chord) return std::nullopt;

    int want_ap, want_bp, want_cp, want_dp;
    if (rule == Rule::Neg4CyclesShared) {
        want_ap = third_neighbor(g, a, x, b);
        want_bp = third_neighbor(g, b, a, y);
        want_cp = third_neighbor(g, c, x, d);
        want_dp = third_neighbor(g, d, c, y);
    } else {
        want_ap = third_neighbor(g, a, x, b);
        want_bp = third_neighbor(g, b, a, d);
        want_cp = third_neighbor(g, c, x, y);
        want_dp = third_neighbor(g, d, y, b);
    }
    if (want_ap != ap || want_bp != bp || want_cp != cp || want_dp != dp) return std::nullopt;
    if (ap < 0 || bp < 0 || cp < 0 || dp < 0) return std::nullopt;
    if (g.degree(x) != 3 || g.degree(y) != 3) return std::nullopt;
    note(cs, "ring_vertices_cubic_with_outside_thirds", true);

    int n = g.vertex_count();
    int u = n, v = n + 1;
    Sign sa = sign_between(g, a, ap), sb = sign_between(g, b, bp);
    Sign sc = sign_between(g, c, cp), sd = sign_between(g, d, dp);
    // First replacement pairs {a',c'} and {b',d'} on u and v; the second
    // pairs {a',b'} and {c',d'}; at least one stays simple.
    if (ap != cp && bp != dp) {
        Rewrite rw;
        rw.drop = six;
        rw.new_vertices = 2;
        rw.add = {Edge{ap, u, sa}, Edge{cp, u, sc}, Edge{bp, v, sb}, Edge{dp, v, sd},
                  Edge{u, v, Sign::Plus}};
        auto out = run_rewrite(g, rw);
        if (out && result_ok(*out)) {
            note(cs, "variant_pair_ac_bd", true);
            r.output = std::move(*out);
            return r;
        }
    }
    if (ap != bp && cp != dp) {
        Rewrite rw;
        rw.drop = six;
        rw.new_vertices = 2;
        rw.add = {Edge{ap, u, sa}, Edge{bp, u, sb}, Edge{cp, v, sc}, Edge{dp, v, sd},
                  Edge{u, v, Sign::Plus}};
        auto out = run_rewrite(g, rw);
        if (out && result_ok(*out)) {
            note(cs, "variant_pair_ab_cd", true);
            r.output = std::move(*out);
            return r;
        }
    }
    return std::nullopt;
}

// H1_SUBGRAPH {x, a, b, c, d, y}: the 6-vertex 2-subdivision gadget.
std::optional<TryResult> try_h1(const SignedGraph& g, const std::vector<int>& vs) {
    if (vs.size() != 6) return std::nullopt;
    int x = vs[0], a = vs[1], b = vs[2], c = vs[3], d = vs[4], y = vs[5];
    TryResult r{g, g, 1, {}};
    auto& cs = r.conditions;
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    bool edges_ok = has_edge_signed(g, x, a, Sign::Plus) && has_edge_signed(g, x, c, Sign::Plus) &&
                    has_edge_signed(g, a, b, Sign::Plus) && has_edge_signed(g, c, d, Sign::Plus) &&
                    has_edge_signed(g, b, y, Sign::Plus) && has_edge_signed(g, d, y, Sign::Plus) &&
                    has_edge_signed(g, a, d, Sign::Minus) && has_edge_signed(g, c, b, Sign::Minus);
    note(cs, "gadget_edges_and_signs_match", edges_ok);
    if (!edges_ok) return std::nullopt;
    bool internal = g.degree(a) == 3 && g.degree(b) == 3 && g.degree(c) == 3 && g.degree(d) == 3;
    note(cs, "core_vertices_have_no_outside_edges", internal);
    if (!internal) return std::nullopt;
    bool xy_free = !g.adjacent(x, y);
    note(cs, "attachment_points_not_adjacent", xy_free);
    if (!xy_free) return std::nullopt;

    int w = g.vertex_count();
    Rewrite rw;
    rw.drop = {a, b, c, d};
    rw.new_vertices = 1;
    rw.add = {Edge{w, x, Sign::Plus}, Edge{x, y, Sign::Plus}, Edge{y, w, Sign::Minus}};
    auto out = run_rewrite(g, rw);
    if (!out || !result_ok(*out)) return std::nullopt;
    note(cs, "result_simple_connected", true);
    r.output = std::move(*out);
    return r;
}

// H2_SUBGRAPH {x, u, y, z, b, c, b', c'}
std::optional<TryResult> try_h2(const SignedGraph& g, const std::vector<int>& vs) {
    if (vs.size() != 8) return std::nullopt;
    int x = vs[0], u = vs[1], y = vs[2], z = vs[3], b = vs[4], c = vs[5], bp = vs[6], cp = vs[7];
    TryResult r{g, g, 1, {}};
    auto& cs = r.conditions;
    std::vector<int> six{x, u, y, z, b, c};
    std::sort(six.begin(), six.end());
    if (std::unique(six.begin(), six.end()) != six.end()) return std::nullopt;
    bool edges_ok = has_edge_signed(g, u, x, Sign::Plus) && has_edge_signed(g, u, y, Sign::Plus) &&
                    has_edge_signed(g, u, z, Sign::Plus) && has_edge_signed(g, b, y, Sign::Minus) &&
                    has_edge_signed(g, b, z, Sign::Plus) && has_edge_signed(g, c, y, Sign::Plus) &&
                    has_edge_signed(g, c, z, Sign::Minus);
    note(cs, "gadget_edges_and_signs_match", edges_ok);
    if (!edges_ok) return std::nullopt;
    if (g.degree(u) != 3 || g.degree(y) != 3 || g.degree(z) != 3 || g.degree(b) != 3 ||
        g.degree(c) != 3)
        return std::nullopt;
    if (third_neighbor(g, b, y, z) != bp || third_neighbor(g, c, y, z) != cp) return std::nullopt;
    bool ext_pos = has_edge_signed(g, b, bp, Sign::Plus) && has_edge_signed(g, c, cp, Sign::Plus);
    note(cs, "external_edges_positive", ext_pos);
    if (!ext_pos) return std::nullopt;
    bool distinct = bp != cp && x != bp && x != cp;
    for (int w : {u, y, z, b, c})
        if (bp == w || cp == w) distinct = false;
    note(cs, "attachment_targets_distinct_from_pattern", distinct);
    if (!distinct) return std::nullopt;

    Rewrite rw;
    rw.drop = {y, z, b, c};
    rw.add = {Edge{u, bp, Sign::Minus}, Edge{u, cp, Sign::Plus}};
    auto out = run_rewrite(g, rw);
    if (!out || !result_ok(*out)) return std::nullopt;
    note(cs, "result_simple_connected", true);
    r.output = std::move(*out);
    return r;
}

std::optional<TryResult> try_rule(const SignedGraph& g, Rule rule, const std::vector<int>& vs) {
    switch (rule) {
        case Rule::Degree2Vertex: return try_degree2(g, vs);
        case Rule::NegTriangle: return try_neg_triangle(g, vs);
        case Rule::AdjTriangles: return try_adj_triangles(g, vs);
        case Rule::Tri4CycleNeg: return try_tri_4cycle(g, vs);
        case Rule::Neg4CyclesShared: return try_shared_chord(g, rule, vs);
        case Rule::TriPentaShared: return try_shared_chord(g, rule, vs);
        case Rule::H1Subgraph: return try_h1(g, vs);
        case Rule::H2Subgraph: return try_h2(g, vs);
        case Rule::Pos2EdgeCut: return std::nullopt;
    }
    return std::nullopt;
}

// Pattern-level validation: the rule's structural hypotheses (sign placement,
// chord counts, degrees), but not the rewrite's applicability conditions.
// detect_configuration reports these; apply_reduction may still refuse.
bool pattern_match_ok(const SignedGraph& g, Rule rule, const std::vector<int>& vs) {
    switch (rule) {
        case Rule::Degree2Vertex:
            return vs.size() == 3 && g.degree(vs[0]) == 2 && vs[1] != vs[2];
        case Rule::NegTriangle: {
            if (vs.size() != 6) return false;
            int a = vs[0], b = vs[1], c = vs[2], y = vs[4], z = vs[5];
            return has_edge_signed(g, a, b, Sign::Plus) && has_edge_signed(g, a, c, Sign::Plus) &&
                   has_edge_signed(g, b, c, Sign::Minus) && has_edge_signed(g, b, y, Sign::Plus) &&
                   has_edge_signed(g, c, z, Sign::Plus);
        }
        case Rule::AdjTriangles: {
            if (vs.size() != 6) return false;
            int a = vs[0], b = vs[1], c = vs[2], d = vs[3];
            return a != b && g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(c, d) &&
                   g.adjacent(b, c) && g.adjacent(b, d);
        }
        case Rule::Tri4CycleNeg: {
            if (vs.size() != 7) return false;
            int z = vs[0], c = vs[1], d = vs[2], a = vs[3], b = vs[4];
            return g.adjacent(c, d) && g.adjacent(a, b) && g.adjacent(b, d) && g.adjacent(a, c) &&
                   has_edge_signed(g, d, z, Sign::Minus) && has_edge_signed(g, c, z, Sign::Plus);
        }
        case Rule::Neg4CyclesShared:
        case Rule::TriPentaShared: {
            if (vs.size() != 10) return false;
            int x = vs[0], y = vs[1], a = vs[2], b = vs[3], c = vs[4], d = vs[5];
            bool cycle_ok;
            if (rule == Rule::Neg4CyclesShared)
                cycle_ok = has_edge_signed(g, a, x, Sign::Plus) &&
                           has_edge_signed(g, x, c, Sign::Plus) &&
                           has_edge_signed(g, c, d, Sign::Plus) &&
                           has_edge_signed(g, d, y, Sign::Plus) &&
                           has_edge_signed(g, y, b, Sign::Plus) &&
                           has_edge_signed(g, b, a, Sign::Plus);
            else
                cycle_ok = has_edge_signed(g, a, x, Sign::Plus) &&
                           has_edge_signed(g, x, c, Sign::Plus) &&
                           has_edge_signed(g, c, y, Sign::Plus) &&
                           has_edge_signed(g, y, d, Sign::Plus) &&
                           has_edge_signed(g, d, b, Sign::Plus) &&
                           has_edge_signed(g, b, a, Sign::Plus);
            if (!cycle_ok || !has_edge_signed(g, x, y, Sign::Minus)) return false;
            std::vector<int> six{x, y, a, b, c, d};
            std::vector<int> sorted = six;
            std::sort(sorted.begin(), sorted.end());
            if (std::unique(sorted.begin(), sorted.end()) != sorted.end()) return false;
            if (g.induced(six).edge_count() != 7) return false;
            return g.degree(x) == 3 && g.degree(y) == 3;
        }
        case Rule::H1Subgraph: {
            if (vs.size() != 6) return false;
            int x = vs[0], a = vs[1], b = vs[2], c = vs[3], d = vs[4], y = vs[5];
            std::vector<int> six = vs;
            std::sort(six.begin(), six.end());
            if (std::unique(six.begin(), six.end()) != six.end()) return false;
            return has_edge_signed(g, x, a, Sign::Plus) && has_edge_signed(g, x, c, Sign::Plus) &&
                   has_edge_signed(g, a, b, Sign::Plus) && has_edge_signed(g, c, d, Sign::Plus) &&
                   has_edge_signed(g, b, y, Sign::Plus) && has_edge_signed(g, d, y, Sign::Plus) &&
                   has_edge_signed(g, a, d, Sign::Minus) && has_edge_signed(g, c, b, Sign::Minus) &&
                   g.degree(a) == 3 && g.degree(b) == 3 && g.degree(c) == 3 && g.degree(d) == 3;
        }
        case Rule::H2Subgraph: {
            if (vs.size() != 8) return false;
            int x = vs[0], u = vs[1], y = vs[2], z = vs[3], b = vs[4], c = vs[5], bp = vs[6],
                cp = vs[7];
            std::vector<int> six{x, u, y, z, b, c};
            std::sort(six.begin(), six.end());
            if (std::unique(six.begin(), six.end()) != six.end()) return false;
            if (bp == cp || x == bp || x == cp) return false;
            return has_edge_signed(g, u, x, Sign::Plus) && has_edge_signed(g, u, y, Sign::Plus) &&
                   has_edge_signed(g, u, z, Sign::Plus) && has_edge_signed(g, b, y, Sign::Minus) &&
                   has_edge_signed(g, b, z, Sign::Plus) && has_edge_signed(g, c, y, Sign::Plus) &&
                   has_edge_signed(g, c, z, Sign::Minus) && has_edge_signed(g, b, bp, Sign::Plus) &&
                   has_edge_signed(g, c, cp, Sign::Plus) && g.degree(u) == 3 && g.degree(y) == 3 &&
                   g.degree(z) == 3 && g.degree(b) == 3 && g.degree(c) == 3;
        }
        case Rule::Pos2EdgeCut:
            return true;
    }
    return false;
}

std::vector<int> pattern_edges(const SignedGraph& g, const std::vector<int>& vs) {
    std::vector<int> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            int e = g.edge_between(vs[i], vs[j]);
            if (e >= 0) es.push_back(e);
        }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

// Deterministic candidate enumeration per rule; emit returns true to stop.
void enumerate_candidates(const SignedGraph& g, Rule rule,
                          const std::function<bool(const std::vector<int>&)>& emit) {
    int n = g.vertex_count();
    switch (rule) {
        case Rule::Degree2Vertex: {
            for (int z = 0; z < n; ++z) {
                if (g.degree(z) != 2) continue;
                auto nb = neighbors_of(g, z);
                if (nb.size() != 2) continue;  // digon
                if (emit({z, nb[0], nb[1]})) return;
            }
            return;
        }
        case Rule::NegTriangle: {
            for (int p = 0; p < n; ++p)
                for (int q : neighbors_of(g, p)) {
                    if (q <= p) continue;
                    for (int s : neighbors_of(g, q)) {
                        if (s <= q || !g.adjacent(p, s)) continue;
                        // Identify the single negative edge; apex goes first.
                        int negs = (sign_between(g, p, q) == Sign::Minus) +
                                   (sign_between(g, p, s) == Sign::Minus) +
                                   (sign_between(g, q, s) == Sign::Minus);
                        if (negs != 1) continue;
                        int a, b, c;
                        if (sign_between(g, q, s) == Sign::Minus) a = p, b = q, c = s;
                        else if (sign_between(g, p, s) == Sign::Minus) a = q, b = p, c = s;
                        else a = s, b = p, c = q;
                        int x = third_neighbor(g, a, b, c), y = third_neighbor(g, b, a, c),
                            z = third_neighbor(g, c, a, b);
                        if (x < 0 || y < 0 || z < 0) continue;
                        if (emit({a, b, c, x, y, z})) return;
                    }
                }
            return;
        }
        case Rule::AdjTriangles: {
            for (int e = 0; e < g.edge_count(); ++e) {
                int cc = g.edges()[e].u, d = g.edges()[e].v;
                std::uint64_t common = g.adjacency_mask(cc) & g.adjacency_mask(d);
                std::vector<int> apex;
                for (std::uint64_t m = common; m;) {
                    apex.push_back(__builtin_ctzll(m));
                    m &= m - 1;
                }
                for (std::size_t i = 0; i < apex.size(); ++i)
                    for (std::size_t j = i + 1; j < apex.size(); ++j) {
                        int a = apex[i], b = apex[j];
                        int x = third_neighbor(g, a, cc, d), y = third_neighbor(g, b, cc, d);
                        if (x < 0 || y < 0) continue;
                        if (emit({a, b, cc, d, x, y})) return;
                        if (emit({b, a, cc, d, y, x})) return;
                    }
            }
            return;
        }
        case Rule::Tri4CycleNeg: {
            for (int e = 0; e < g.edge_count(); ++e) {
                int p = g.edges()[e].u, q = g.edges()[e].v;
                std::uint64_t common = g.adjacency_mask(p) & g.adjacency_mask(q);
                for (std::uint64_t m = common; m;) {
                    int z = __builtin_ctzll(m);
                    m &= m - 1;
                    // Orient so dz is the negative triangle edge.
                    for (auto [cc, d] : {std::pair{p, q}, std::pair{q, p}}) {
                        if (!has_edge_signed(g, d, z, Sign::Minus) ||
                            !has_edge_signed(g, cc, z, Sign::Plus))
                            continue;
                        for (int a : neighbors_of(g, cc)) {
                            if (a == d || a == z) continue;
                            for (int bb : neighbors_of(g, d)) {
                                if (bb == cc || bb == z || bb == a || !g.adjacent(a, bb)) continue;
                                int x = third_neighbor(g, a, bb, cc),
                                    y = third_neighbor(g, bb, a, d);
                                if (x < 0 || y < 0) continue;
                                if (emit({z, cc, d, a, bb, x, y})) return;
                            }
                        }
                    }
                }
            }
            return;
        }
        case Rule::Neg4CyclesShared: {
            for (int e = 0; e < g.edge_count(); ++e) {
                if (g.edges()[e].sign != Sign::Minus) continue;
                for (auto [x, y] : {std::pair{g.edges()[e].u, g.edges()[e].v},
                                    std::pair{g.edges()[e].v, g.edges()[e].u}}) {
                    for (int a : neighbors_of(g, x)) {
                        if (a == y) continue;
                        for (int c : neighbors_of(g, x)) {
                            if (c == y || c == a) continue;
                            for (int d : neighbors_of(g, y)) {
                                if (d == x || !g.adjacent(c, d)) continue;
                                for (int b : neighbors_of(g, y)) {
                                    if (b == x || b == d || !g.adjacent(b, a)) continue;
                                    int ap = third_neighbor(g, a, x, b),
                                        bp = third_neighbor(g, b, a, y),
                                        cp = third_neighbor(g, c, x, d),
                                        dp = third_neighbor(g, d, c, y);
                                    if (ap < 0 || bp < 0 || cp < 0 || dp < 0) continue;
                                    if (emit({x, y, a, b, c, d, ap, bp, cp, dp})) return;
                                }
                            }
                        }
                    }
                }
            }
            return;
        }
        case Rule::TriPentaShared: {
            for (int e = 0; e < g.edge_count(); ++e) {
                if (g.edges()[e].sign != Sign::Minus) continue;
                for (auto [x, y] : {std::pair{g.edges()[e].u, g.edges()[e].v},
                                    std::pair{g.edges()[e].v, g.edges()[e].u}}) {
                    for (int c : neighbors_of(g, x)) {
                        if (c == y || !g.adjacent(c, y)) continue;
                        for (int a : neighbors_of(g, x)) {
                            if (a == y || a == c) continue;
                            for (int d : neighbors_of(g, y)) {
                                if (d == x || d == c || d == a) continue;
                                for (int b : neighbors_of(g, a)) {
                                    if (b == x || !g.adjacent(b, d)) continue;
                                    int ap = third_neighbor(g, a, x, b),
                                        bp = third_neighbor(g, b, a, d),
                                        cp = third_neighbor(g, c, x, y),
                                        dp = third_neighbor(g, d, y, b);
                                    if (ap < 0 || bp < 0 || cp < 0 || dp < 0) continue;
                                    if (emit({x, y, a, b, c, d, ap, bp, cp, dp})) return;
                                }
                            }
                        }
                    }
                }
            }
            return;
        }
        case Rule::H1Subgraph: {
            for (int x = 0; x < n; ++x)
                for (int a : neighbors_of(g, x))
                    for (int c : neighbors_of(g, x)) {
                        if (c == a) continue;
                        for (int d : neighbors_of(g, a)) {
                            if (d == x || d == c) continue;
                            for (int b : neighbors_of(g, c)) {
                                if (b == x || b == a || b == d) continue;
                                std::uint64_t ys = g.adjacency_mask(b) & g.adjacency_mask(d);
                                for (std::uint64_t m = ys; m;) {
                                    int y = __builtin_ctzll(m);
                                    m &= m - 1;
                                    if (y == x || y == a || y == c) continue;
                                    if (emit({x, a, b, c, d, y})) return;
                                }
                            }
                        }
                    }
            return;
        }
        case Rule::H2Subgraph: {
            for (int u = 0; u < n; ++u) {
                if (g.degree(u) != 3) continue;
                auto nb = neighbors_of(g, u);
                if (nb.size() != 3) continue;
                for (int xi = 0; xi < 3; ++xi)
                    for (int yi = 0; yi < 3; ++yi) {
                        if (yi == xi) continue;
                        int zi = 3 - xi - yi;
                        int x = nb[xi], y = nb[yi], z = nb[zi];
                        std::uint64_t common = g.adjacency_mask(y) & g.adjacency_mask(z);
                        std::vector<int> cands;
                        for (std::uint64_t m = common; m;) {
                            cands.push_back(__builtin_ctzll(m));
                            m &= m - 1;
                        }
                        for (int b : cands) {
                            if (b == u || b == x) continue;
                            for (int c : cands) {
                                if (c == u || c == x || c == b) continue;
                                int bp = third_neighbor(g, b, y, z), cp = third_neighbor(g, c, y, z);
                                if (bp < 0 || cp < 0) continue;
                                if (emit({x, u, y, z, b, c, bp, cp})) return;
                            }
                        }
                    }
            }
            return;
        }
        case Rule::Pos2EdgeCut:
            return;  // handled separately
    }
}

}  // namespace

std::optional<ConfigurationMatch> detect_configuration(const SignedGraph& g, Rule rule) {
    if (rule == Rule::Pos2EdgeCut) {
        if (!g.is_connected()) return std::nullopt;
        std::vector<int> bs = bridges(g);
        std::vector<char> is_bridge(g.edge_count(), 0);
        for (int e : bs) is_bridge[e] = 1;
        int n = g.vertex_count();
        std::vector<char> has_neg(n, 0);
        for (const auto& ed : g.edges())
            if (ed.sign == Sign::Minus) has_neg[ed.u] = has_neg[ed.v] = 1;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (is_bridge[e] || g.edges()[e].sign != Sign::Plus) continue;
            for (int f = e + 1; f < g.edge_count(); ++f) {
                if (is_bridge[f] || g.edges()[f].sign != Sign::Plus) continue;
                // Does removing both disconnect?
                SignedGraph cut = remove_edge(remove_edge(g, f), e);
                if (cut.is_connected()) continue;
                std::vector<char> seen(n, 0);
                std::vector<int> stack{0};
                seen[0] = 1;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (int w : neighbors_of(cut, u))
                        if (!seen[w]) {
                            seen[w] = 1;
                            stack.push_back(w);
                        }
                }
                for (int side_pick = 0; side_pick < 2; ++side_pick) {
                    std::vector<int> hverts;
                    for (int v = 0; v < n; ++v)
                        if ((seen[v] != 0) == (side_pick == 0)) hverts.push_back(v);
                    if (hverts.empty()) continue;
                    auto in_h = [&](int v) { return (seen[v] != 0) == (side_pick == 0); };
                    const Edge& e1 = g.edges()[e];
                    const Edge& e2 = g.edges()[f];
                    if (in_h(e1.u) == in_h(e1.v) || in_h(e2.u) == in_h(e2.v)) continue;
                    int u1 = in_h(e1.u) ? e1.u : e1.v, v1 = in_h(e1.u) ? e1.v : e1.u;
                    int u2 = in_h(e2.u) ? e2.u : e2.v, v2 = in_h(e2.u) ? e2.v : e2.u;
                    SignedGraph h = g.induced(hverts);
                    if (!h.is_connected() || !bridges(h).empty()) continue;
                    if (v1 == v2 || g.adjacent(v1, v2)) continue;
                    if (!has_neg[v1] && !has_neg[v2]) continue;
                    ConfigurationMatch m;
                    m.rule = Rule::Pos2EdgeCut;
                    m.vertices = {v1, u1, v2, u2};
                    m.edges = {e, f};
                    return m;
                }
            }
        }
        return std::nullopt;
    }
    std::optional<ConfigurationMatch> found;
    enumerate_candidates(g, rule, [&](const std::vector<int>& vs) {
        if (!pattern_match_ok(g, rule, vs)) return false;
        ConfigurationMatch m;
        m.rule = rule;
        m.vertices = vs;
        m.edges = pattern_edges(g, vs);
        found = std::move(m);
        return true;
    });
    return found;
}

namespace {

// First match whose rewrite actually applies (pattern plus applicability).
std::optional<ReductionStep> find_applicable(const SignedGraph& g, Rule rule) {
    std::optional<ReductionStep> found;
    enumerate_candidates(g, rule, [&](const std::vector<int>& vs) {
        auto res = try_rule(g, rule, vs);
        if (!res) return false;
        ReductionStep step;
        step.rule = rule;
        step.input = res->input;
        step.output = res->output;
        step.offset = res->offset;
        step.matched_vertices = vs;
        step.conditions_checked = std::move(res->conditions);
        found = std::move(step);
        return true;
    });
    if (found) {
        int drop = g.negative_edge_count() - found->output.negative_edge_count();
        if (drop != found->offset)
            throw error(std::string(rule_name(rule)) + ": negative-edge drop " +
                        std::to_string(drop) + " does not match claimed offset " +
                        std::to_string(found->offset));
    }
    return found;
}

}  // namespace

ReductionStep apply_reduction(const SignedGraph& g, const ConfigurationMatch& m) {
    if (m.rule == Rule::Pos2EdgeCut)
        throw rule_inapplicable_error("POS_2EDGECUT is a diagnostic pattern with no rewrite");
    auto res = try_rule(g, m.rule, m.vertices);
    if (!res)
        throw rule_inapplicable_error(std::string(rule_name(m.rule)) +
                                      ": side conditions do not hold for this match");
    ReductionStep step;
    step.rule = m.rule;
    step.input = res->input;
    step.output = res->output;
    step.offset = res->offset;
    step.matched_vertices = m.vertices;
    step.conditions_checked = std::move(res->conditions);
    int drop = g.negative_edge_count() - step.output.negative_edge_count();
    if (drop != step.offset)
        throw error(std::string(rule_name(m.rule)) + ": negative-edge drop " +
                    std::to_string(drop) + " does not match claimed offset " +
                    std::to_string(step.offset));
    return step;
}

ReductionTrace reduce_to_fixpoint(const SignedGraph& g) {
    if (!g.is_connected()) throw connectivity_error("reduce_to_fixpoint requires a connected graph");
    if (!g.is_subcubic()) throw construction_error("reduce_to_fixpoint requires a subcubic graph");

    ReductionTrace trace{g, 0, {}, 0};
    SignedGraph cur = g;
    while (auto cut = find_unequilibrated_cut(cur)) {
        cur = switch_graph(cur, SwitchState::from_mask(cut->side, cur.vertex_count()));
        ++trace.normalization_switches;
    }

    static const Rule kPriority[] = {Rule::Degree2Vertex,    Rule::NegTriangle,
                                     Rule::AdjTriangles,     Rule::Tri4CycleNeg,
                                     Rule::Neg4CyclesShared, Rule::TriPentaShared,
                                     Rule::H1Subgraph,       Rule::H2Subgraph};
    for (;;) {
        bool applied = false;
        for (Rule rule : kPriority) {
            auto step = find_applicable(cur, rule);
            if (!step) continue;
            trace.total_offset += step->offset;
            cur = step->output;
            trace.steps.push_back(std::move(*step));
            applied = true;
            break;
        }
        if (!applied) break;
        // Every rewrite must keep the signature minimal; verify while cheap.
        if (cur.vertex_count() <= 18 && find_unequilibrated_cut(cur))
            throw error("reduction step broke signature minimality");
    }
    trace.final_graph = std::move(cur);
    return trace;
}

}  // namespace frustrix
