#include "frustrix/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace frustrix {

namespace {

constexpr int kCanonicalCapacity = 16;
constexpr int kCensusCapacity = 12;

void require_simple_unsigned(const SignedGraph& g, const char* who) {
    if (!g.is_simple()) throw construction_error(std::string(who) + " supports simple graphs only");
}

struct AdjView {
    int n;
    std::vector<std::uint64_t> mask;

    explicit AdjView(const SignedGraph& g) : n(g.vertex_count()), mask(n) {
        for (int v = 0; v < n; ++v) mask[v] = g.adjacency_mask(v);
    }
    bool at(int u, int v) const { return (mask[u] >> v) & 1; }
};

// Iterated neighborhood refinement: colors stabilize under
// (color, sorted neighbor colors). Returns per-vertex colors, 0-based,
// cells numbered by order of first appearance after sorting keys.
std::vector<int> refine_colors(const AdjView& g, std::vector<int> color) {
    int n = g.n;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nc;
            for (int w = 0; w < n; ++w)
                if (g.at(v, w)) nc.push_back(color[w]);
            std::sort(nc.begin(), nc.end());
            nc.insert(nc.begin(), color[v]);
            keys[v] = {std::move(nc), v};
        }
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return keys[a].first < keys[b].first; });
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && keys[idx[i]].first != keys[idx[i - 1]].first) ++c;
            next[idx[i]] = c;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

std::vector<std::uint8_t> encode_under(const AdjView& g, const std::vector<int>& pos_of) {
    // pos_of[old] = new label; cert = n followed by packed upper-triangle bits.
    int n = g.n;
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[pos_of[v]] = v;
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(n));
    int bit = 0;
    std::uint8_t acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.at(at[i], at[j])) acc |= static_cast<std::uint8_t>(1u << bit);
            if (++bit == 8) {
                out.push_back(acc);
                acc = 0;
                bit = 0;
            }
        }
    if (bit) out.push_back(acc);
    return out;
}

struct CanonSearch {
    const AdjView& g;
    std::vector<std::uint8_t> best;
    std::vector<std::vector<int>> best_perms;  // all pos_of achieving best

    explicit CanonSearch(const AdjView& graph) : g(graph) {}

    void leaf(const std::vector<int>& color) {
        // Discrete coloring: color is a permutation old -> position.
        auto code = encode_under(g, color);
        if (best.empty() || code < best) {
            best = code;
            best_perms.assign(1, color);
        } else if (code == best) {
            best_perms.push_back(color);
        }
    }

    void run(std::vector<int> color) {
        color = refine_colors(g, color);
        int n = g.n;
        // Find the first cell with more than one vertex.
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) count[color[v]]++;
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            leaf(color);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            auto next = color;
            // Individualize v: give it its own color in front of its cell.
            for (int w = 0; w < n; ++w)
                if (next[w] >= target) next[w]++;
            next[v] = target;
            run(std::move(next));
        }
    }
};

std::pair<std::vector<std::uint8_t>, std::vector<std::vector<int>>> canonical_search(
    const SignedGraph& g) {
    require_simple_unsigned(g, "canonical_form");
    if (g.vertex_count() > kCanonicalCapacity)
        throw capacity_error("canonical_form: n exceeds capacity " +
                             std::to_string(kCanonicalCapacity));
    AdjView view(g);
    if (view.n == 0) return {{0}, {{}}};
    CanonSearch search(view);
    search.run(std::vector<int>(view.n, 0));
    std::sort(search.best_perms.begin(), search.best_perms.end());
    return {search.best, search.best_perms};
}

}  // namespace

std::string CanonicalForm::cert_hex() const {
    std::string out;
    for (auto b : cert) {
        out.push_back("0123456789abcdef"[b >> 4]);
        out.push_back("0123456789abcdef"[b & 15]);
    }
    return out;
}

CanonicalForm canonical_form(const SignedGraph& g) {
    auto [cert, perms] = canonical_search(g);
    return CanonicalForm{cert, perms.front()};
}

std::vector<std::vector<int>> automorphisms(const SignedGraph& g) {
    auto [cert, perms] = canonical_search(g);
    (void)cert;
    int n = g.vertex_count();
    const auto& q0 = perms.front();
    std::vector<int> q0_inv(n);
    for (int v = 0; v < n; ++v) q0_inv[q0[v]] = v;
    std::vector<std::vector<int>> aut;
    for (const auto& p : perms) {
        std::vector<int> a(n);
        for (int v = 0; v < n; ++v) a[v] = q0_inv[p[v]];
        aut.push_back(std::move(a));
    }
    std::sort(aut.begin(), aut.end());
    return aut;
}

SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw dimension_error("permutation length != vertex count");
    std::vector<Edge> es;
    es.reserve(g.edges().size());
    for (const auto& e : g.edges()) es.push_back(Edge{perm[e.u], perm[e.v], e.sign});
    return SignedGraph(g.vertex_count(), std::move(es));
}

namespace {

bool extension_viable(const SignedGraph& h, int target_n, const CensusFilter& filter) {
    int remaining = target_n - h.vertex_count();
    int defect = 0;
    for (int v = 0; v < h.vertex_count(); ++v) defect += 3 - h.degree(v);
    if (filter.cubic) {
        if (remaining == 0) {
            if (defect != 0) return false;
        } else {
            if (defect > 3 * remaining) return false;
            if ((3 * remaining - defect) % 2 != 0) return false;
            if (defect == 0) return false;
        }
    } else if (remaining > 0 && defect == 0) {
        return false;
    }
    if (filter.girth_min > 2) {
        auto gir = girth_opt(h);
        if (gir && *gir < filter.girth_min) return false;
    }
    return true;
}

bool passes_filter(const SignedGraph& g, const CensusFilter& filter) {
    if (filter.cubic && !g.is_cubic()) return false;
    if (filter.two_edge_connected && !bridges(g).empty()) return false;
    if (filter.girth_min > 2) {
        auto gir = girth_opt(g);
        if (gir && *gir < filter.girth_min) return false;
    }
    return true;
}

}  // namespace

void enumerate_subcubic(int n, const CensusFilter& filter,
                        const std::function<void(const SignedGraph&)>& emit) {
    if (n > kCensusCapacity)
        throw capacity_error("enumerate_subcubic: n exceeds capacity " +
                             std::to_string(kCensusCapacity));
    if (n < 1) return;

    // Grow connected graphs one vertex at a time: every connected graph has a
    // connected vertex ordering, so attaching the new vertex to 1..3 existing
    // vertices of degree < 3 reaches every class; canonical certificates
    // reject isomorphs per level.
    std::map<std::vector<std::uint8_t>, SignedGraph> level;
    SignedGraph k1(1, {});
    if (extension_viable(k1, n, filter)) level.emplace(canonical_form(k1).cert, k1);
    for (int k = 2; k <= n; ++k) {
        std::map<std::vector<std::uint8_t>, SignedGraph> next;
        for (const auto& [cert, g] : level) {
            std::vector<int> open;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) < 3) open.push_back(v);
            int c = static_cast<int>(open.size());
            for (int pick = 1; pick < (1 << c); ++pick) {
                if (__builtin_popcount(static_cast<unsigned>(pick)) > 3) continue;
                std::vector<Edge> es = g.edges();
                for (int i = 0; i < c; ++i)
                    if (pick >> i & 1) es.push_back(Edge{open[i], k - 1, Sign::Plus});
                SignedGraph h(k, std::move(es));
                if (!extension_viable(h, n, filter)) continue;
                auto cf = canonical_form(h);
                next.emplace(std::move(cf.cert), std::move(h));
            }
        }
        level = std::move(next);
    }
    for (const auto& [cert, g] : level)
        if (passes_filter(g, filter)) emit(g);
}

std::vector<SignedGraph> enumerate_subcubic(int n, const CensusFilter& filter) {
    std::vector<SignedGraph> out;
    enumerate_subcubic(n, filter, [&](const SignedGraph& g) { out.push_back(g); });
    return out;
}

std::vector<SignedGraph> girth_filtered(std::vector<SignedGraph> graphs, int g_min) {
    std::vector<SignedGraph> out;
    for (auto& g : graphs) {
        auto gir = girth_opt(g);
        if (!gir || *gir >= g_min) out.push_back(std::move(g));
    }
    return out;
}

std::vector<SignatureBits> enumerate_switching_classes(const SignedGraph& g,
                                                       bool reduce_by_automorphisms) {
    if (!g.is_connected())
        throw connectivity_error("enumerate_switching_classes requires a connected graph");
    // A digon's cycle sign is pinned to minus by the model, so free cotree
    // patterns only make sense on simple graphs.
    if (!g.is_simple())
        throw construction_error("enumerate_switching_classes supports simple graphs only");
    std::vector<int> tree = spanning_tree_edges(g);
    std::vector<char> in_tree(g.edge_count(), 0);
    for (int e : tree) in_tree[e] = 1;
    std::vector<int> cotree;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_tree[e]) cotree.push_back(e);
    int c = static_cast<int>(cotree.size());
    if (c > 30) throw capacity_error("too many switching classes to enumerate");

    std::vector<std::vector<int>> auts;
    if (reduce_by_automorphisms) auts = automorphisms(g);

    std::vector<SignatureBits> out;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << c); ++pattern) {
        SignatureBits bits(g.edge_count());
        for (int j = 0; j < c; ++j)
            if (pattern >> j & 1) bits.set(cotree[j], true);
        if (reduce_by_automorphisms) {
            bool minimal = true;
            SignedGraph signed_g = g.with_signature(bits);
            for (const auto& perm : auts) {
                auto [canon, state] = tree_canonical_signature(relabel(signed_g, perm));
                if (canon.signature_bits() < bits) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) continue;
        }
        out.push_back(std::move(bits));
    }
    return out;
}

bool switching_isomorphic(const SignedGraph& a, const SignedGraph& b) {
    if (!a.is_connected() || !b.is_connected())
        throw connectivity_error("switching_isomorphic requires connected graphs");
    require_simple_unsigned(a, "switching_isomorphic");
    require_simple_unsigned(b, "switching_isomorphic");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    auto [cert_a, perms_a] = canonical_search(a);
    auto [cert_b, perms_b] = canonical_search(b);
    if (cert_a != cert_b) return false;

    // All isomorphisms a -> b form the coset {q0^-1 . p : p minimizer of a}.
    int n = a.vertex_count();
    const auto& q0 = perms_b.front();
    std::vector<int> q0_inv(n);
    for (int v = 0; v < n; ++v) q0_inv[q0[v]] = v;
    SignatureBits sig_a = a.signature_bits();
    for (const auto& p : perms_a) {
        std::vector<int> iso(n);
        for (int v = 0; v < n; ++v) iso[v] = q0_inv[p[v]];
        SignatureBits pulled(a.edge_count());
        bool ok = true;
        for (int e = 0; e < a.edge_count() && ok; ++e) {
            const Edge& ed = a.edges()[e];
            int be = b.edge_between(iso[ed.u], iso[ed.v]);
            if (be < 0)
                ok = false;
            else if (b.edges()[be].sign == Sign::Minus)
                pulled.set(e, true);
        }
        if (ok && fundamental_cycle_signs(a, sig_a, pulled)) return true;
    }
    return false;
}

}  // namespace frustrix
