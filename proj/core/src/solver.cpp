#include "frustrix/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <vector>

namespace frustrix {

namespace {

std::optional<int> env_max_n() {
    const char* v = std::getenv("FRUSTRIX_MAX_N");
    if (!v || !*v) return std::nullopt;
    return std::atoi(v);
}

void require_connected(const SignedGraph& g, const char* who) {
    if (!g.is_connected())
        throw connectivity_error(std::string(who) + " requires a connected graph; sum over components instead");
}

void require_capacity(const SignedGraph& g, int cap, const char* who) {
    if (g.vertex_count() > cap)
        throw capacity_error(std::string(who) + ": n = " + std::to_string(g.vertex_count()) +
                             " exceeds capacity " + std::to_string(cap));
}

}  // namespace

int solver_capacity_bruteforce() {
    if (auto v = env_max_n()) return *v;
    return 30;
}

int solver_capacity_branch_bound() {
    if (auto v = env_max_n()) return *v;
    return 48;
}

FrustrationResult frustration_bruteforce(const SignedGraph& g) {
    require_connected(g, "frustration_bruteforce");
    require_capacity(g, solver_capacity_bruteforce(), "frustration_bruteforce");
    const int n = g.vertex_count();

    FrustrationResult res;
    res.method = SolveMethod::Bruteforce;
    if (n == 0) {
        res.witness_state = SwitchState::identity(0);
        res.witness_signature = SignatureBits(0);
        res.states_explored = 1;
        return res;
    }

    // state bit v set = s[v] == -1; s[0] stays +1, killing global negation.
    std::uint64_t state = 0;
    int cur = g.negative_edge_count();
    int best = cur;
    std::uint64_t best_state = 0;

    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t t = 1; t < total; ++t) {
        int v = __builtin_ctzll(t) + 1;  // Gray code: one vertex flips per step
        for (int e : g.incident(v)) {
            const Edge& ed = g.edge(e);
            bool neg = (ed.sign == Sign::Minus) ^ ((state >> ed.u) & 1) ^ ((state >> ed.v) & 1);
            cur += neg ? -1 : 1;
        }
        state ^= std::uint64_t{1} << v;
        if (cur < best) {
            best = cur;
            best_state = state;
        }
    }

    res.f = best;
    res.states_explored = total;
    res.witness_state = SwitchState::from_mask(best_state, n);
    SignatureBits bits(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        bool neg = (ed.sign == Sign::Minus) ^ ((best_state >> ed.u) & 1) ^ ((best_state >> ed.v) & 1);
        if (neg) bits.set(e, true);
    }
    res.witness_signature = bits;
    return res;
}

namespace {

struct BnB {
    const SignedGraph& g;
    std::vector<int> order;                           // BFS order from 0
    std::vector<std::vector<std::pair<int, int>>> back;  // per depth: (earlier depth, sign -1/+1)
    std::vector<std::int8_t> assign;                  // by depth
    int best;
    std::uint64_t best_state;
    std::uint64_t nodes = 0;

    explicit BnB(const SignedGraph& graph) : g(graph) {
        int n = g.vertex_count();
        std::vector<int> depth_of(n, -1);
        std::deque<int> queue{0};
        depth_of[0] = 0;
        order.push_back(0);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            std::vector<int> nbrs;
            for (int e : g.incident(u)) nbrs.push_back(g.edge(e).u == u ? g.edge(e).v : g.edge(e).u);
            std::sort(nbrs.begin(), nbrs.end());
            for (int w : nbrs) {
                if (depth_of[w] < 0) {
                    depth_of[w] = static_cast<int>(order.size());
                    order.push_back(w);
                    queue.push_back(w);
                }
            }
        }
        back.resize(n);
        for (const auto& ed : g.edges()) {
            int du = depth_of[ed.u], dv = depth_of[ed.v];
            if (du > dv) std::swap(du, dv);
            back[dv].push_back({du, ed.sign == Sign::Minus ? -1 : 1});
        }
        assign.assign(n, 0);
        best = g.negative_edge_count();  // achieved by the identity state
        best_state = 0;
    }

    void run(int depth, int cur) {
        ++nodes;
        if (cur >= best) return;
        int n = g.vertex_count();
        if (depth == n) {
            best = cur;
            best_state = 0;
            for (int d = 0; d < n; ++d)
                if (assign[d] < 0) best_state |= std::uint64_t{1} << order[d];
            return;
        }
        for (int sv = 0; sv < (depth == 0 ? 1 : 2); ++sv) {
            std::int8_t s = sv == 0 ? 1 : -1;
            assign[depth] = s;
            int add = 0;
            for (auto [du, sign] : back[depth])
                if (sign * s * assign[du] < 0) ++add;
            run(depth + 1, cur + add);
        }
        assign[depth] = 0;
    }
};

}  // namespace

FrustrationResult frustration_branch_bound(const SignedGraph& g) {
    require_connected(g, "frustration_branch_bound");
    require_capacity(g, solver_capacity_branch_bound(), "frustration_branch_bound");

    FrustrationResult res;
    res.method = SolveMethod::BranchBound;
    if (g.vertex_count() == 0) {
        res.witness_state = SwitchState::identity(0);
        res.witness_signature = SignatureBits(0);
        res.states_explored = 1;
        return res;
    }

    BnB bnb(g);
    bnb.run(0, 0);
    res.f = bnb.best;
    res.states_explored = bnb.nodes;
    res.witness_state = SwitchState::from_mask(bnb.best_state, g.vertex_count());
    SignatureBits bits(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        bool neg = (ed.sign == Sign::Minus) ^ ((bnb.best_state >> ed.u) & 1) ^
                   ((bnb.best_state >> ed.v) & 1);
        if (neg) bits.set(e, true);
    }
    res.witness_signature = bits;
    return res;
}

int frustration_index(const SignedGraph& g) {
    if (g.vertex_count() <= solver_capacity_bruteforce()) return frustration_bruteforce(g).f;
    return frustration_branch_bound(g).f;
}

int frustration_sum_components(const SignedGraph& g) {
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
                int w = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    queue.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    int total = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) vs.push_back(v);
        total += frustration_index(g.induced(vs));
    }
    return total;
}

bool is_minimal_signature(const SignedGraph& g) {
    require_connected(g, "is_minimal_signature");
    return g.negative_edge_count() == frustration_index(g);
}

std::optional<CutProfile> find_unequilibrated_cut(const SignedGraph& g) {
    require_capacity(g, solver_capacity_bruteforce(), "find_unequilibrated_cut");
    const int n = g.vertex_count();
    if (n < 2) return std::nullopt;

    // Walk subsets of {1..n-1} in Gray-code order; vertex 0 stays outside,
    // so each proper cut is visited exactly once.
    std::uint64_t side = 0;
    int pos = 0, neg = 0;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t t = 1; t < total; ++t) {
        int v = __builtin_ctzll(t) + 1;
        for (int e : g.incident(v)) {
            const Edge& ed = g.edge(e);
            int w = ed.u == v ? ed.v : ed.u;
            bool was_crossing = ((side >> v) & 1) != ((side >> w) & 1);
            int delta = was_crossing ? -1 : 1;
            (ed.sign == Sign::Minus ? neg : pos) += delta;
        }
        side ^= std::uint64_t{1} << v;
        if (neg > pos) {
            CutProfile p;
            p.side = side;
            p.pos = pos;
            p.neg = neg;
            return p;
        }
    }
    return std::nullopt;
}

MaxCutResult max_cut_bruteforce(const SignedGraph& g) {
    require_capacity(g, solver_capacity_bruteforce(), "max_cut_bruteforce");
    const int n = g.vertex_count();
    MaxCutResult best;
    if (n < 2) return best;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t side = 1; side < total; ++side) {
        int size = 0;
        for (const auto& ed : g.edges())
            if (((side >> ed.u) & 1) != ((side >> ed.v) & 1)) ++size;
        if (size > best.size) {
            best.size = size;
            best.side = side;
        }
    }
    return best;
}

}  // namespace frustrix
