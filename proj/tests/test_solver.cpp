#include <doctest.h>

#include <algorithm>

#include "frustrix/census.hpp"
#include "frustrix/families.hpp"
#include "frustrix/solver.hpp"
#include "test_util.hpp"

using namespace frustrix;

namespace {

SignedGraph all_negative(const SignedGraph& g) {
    std::vector<Edge> es = g.edges();
    for (auto& e : es) e.sign = Sign::Minus;
    return SignedGraph(g.vertex_count(), std::move(es));
}

bool is_matching(const SignedGraph& g, const SignatureBits& bits) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (bits.test(e)) {
            deg[g.edges()[e].u]++;
            deg[g.edges()[e].v]++;
        }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; });
}

}  // namespace

TEST_CASE("bruteforce on the named graphs") {
    SignedGraph k4neg = all_negative(gamma(1).underlying());
    auto res = frustration_bruteforce(k4neg);
    CHECK(res.f == 2);
    CHECK(res.witness_signature.count() == 2);
    CHECK(is_matching(k4neg, res.witness_signature));
    CHECK(res.states_explored == 8);

    SignedGraph c3_plus(3, {Edge{0, 1, Sign::Plus}, Edge{0, 2, Sign::Plus}, Edge{1, 2, Sign::Plus}});
    CHECK(frustration_bruteforce(c3_plus).f == 0);
    CHECK(frustration_bruteforce(petersen_negative()).f == 3);
}

TEST_CASE("witness achieves f") {
    auto rng = testutil::seeded_rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        SignedGraph g = testutil::random_connected_subcubic(rng, n);
        auto res = frustration_bruteforce(g);
        CHECK(switch_graph(g, res.witness_state).negative_edge_count() == res.f);
        CHECK(switch_graph(g, res.witness_state).signature_bits() == res.witness_signature);
        CHECK(res.f == testutil::plain_frustration(g));
        if (g.is_subcubic()) CHECK(res.f <= g.vertex_count() / 2);
    }
}

TEST_CASE("F is invariant under switching") {
    auto rng = testutil::seeded_rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        SignedGraph g = testutil::random_connected_subcubic(rng, n);
        int f = frustration_bruteforce(g).f;
        for (int s = 0; s < 20; ++s)
            CHECK(frustration_bruteforce(switch_graph(g, testutil::random_state(rng, n))).f == f);
    }
}

TEST_CASE("branch and bound agrees with brute force everywhere it runs") {
    // Every switching class of every connected subcubic graph up to 8 vertices.
    for (int n = 1; n <= 8; ++n) {
        for (const auto& g : enumerate_subcubic(n, CensusFilter{})) {
            for (const auto& bits : enumerate_switching_classes(g)) {
                SignedGraph sg = g.with_signature(bits);
                CHECK(frustration_branch_bound(sg).f == frustration_bruteforce(sg).f);
            }
        }
    }
    CHECK(frustration_branch_bound(gamma(3)).f == 3);
    SignedGraph chain8 = gadget_chain(std::vector<GadgetKind>(8, GadgetKind::Triangle));
    CHECK(chain8.vertex_count() == 24);
    CHECK(frustration_branch_bound(chain8).f == 8);
}

TEST_CASE("solver error paths") {
    CHECK_THROWS_AS(frustration_bruteforce(SignedGraph(3, {Edge{0, 1, Sign::Plus}})),
                    connectivity_error);
    CHECK_THROWS_AS(is_minimal_signature(SignedGraph(2, {})), connectivity_error);
    SignedGraph big(34, [] {
        std::vector<Edge> es;
        for (int i = 0; i + 1 < 34; ++i) es.push_back(Edge{i, i + 1, Sign::Minus});
        return es;
    }());
    CHECK_THROWS_AS(frustration_bruteforce(big), capacity_error);

    // FRUSTRIX_MAX_N overrides the default capacities.
    setenv("FRUSTRIX_MAX_N", "35", 1);
    CHECK(solver_capacity_bruteforce() == 35);
    CHECK(frustration_branch_bound(big).f == 0);  // a path is always balanced
    unsetenv("FRUSTRIX_MAX_N");
    CHECK(solver_capacity_bruteforce() == 30);
    CHECK_THROWS_AS(frustration_branch_bound(SignedGraph(50, [] {
                        std::vector<Edge> es;
                        for (int i = 0; i + 1 < 50; ++i) es.push_back(Edge{i, i + 1, Sign::Plus});
                        return es;
                    }())),
                    capacity_error);
}

TEST_CASE("minimality and unequilibrated cuts") {
    CHECK(is_minimal_signature(gamma(1)));
    SignedGraph c3neg(3, {Edge{0, 1, Sign::Minus}, Edge{0, 2, Sign::Minus}, Edge{1, 2, Sign::Minus}});
    CHECK(!is_minimal_signature(c3neg));
    SignedGraph k4plus = gamma(1).underlying().with_signature(SignatureBits(6));
    CHECK(is_minimal_signature(k4plus));

    auto cut = find_unequilibrated_cut(c3neg);
    REQUIRE(cut.has_value());
    CHECK(__builtin_popcountll(cut->side) == 1);
    CHECK(cut->pos == 0);
    CHECK(cut->neg == 2);

    CHECK(!find_unequilibrated_cut(gamma(1)).has_value());
    for (int i = 2; i <= 5; ++i) CHECK(!find_unequilibrated_cut(gamma(i)).has_value());
}

TEST_CASE("minimal subcubic signatures: negatives form a matching, cuts balanced") {
    // Observation-level facts checked on every class representative's witness.
    for (int n = 3; n <= 7; ++n) {
        for (const auto& g : enumerate_subcubic(n, CensusFilter{})) {
            for (const auto& bits : enumerate_switching_classes(g)) {
                SignedGraph sg = g.with_signature(bits);
                auto res = frustration_bruteforce(sg);
                SignedGraph minimal = sg.with_signature(res.witness_signature);
                CHECK(is_matching(minimal, res.witness_signature));
                // Every proper cut has at most floor(k/2) negatives.
                int nn = minimal.vertex_count();
                for (std::uint64_t side = 1; side < (std::uint64_t{1} << (nn - 1)); ++side) {
                    CutProfile p = cut_profile(minimal, side);
                    CHECK(p.neg <= p.size() / 2);
                }
            }
        }
    }
}

TEST_CASE("max cut") {
    CHECK(max_cut_bruteforce(gamma(1).underlying()).size == 4);
    SignedGraph c5(5, {Edge{0, 1, Sign::Plus}, Edge{1, 2, Sign::Plus}, Edge{2, 3, Sign::Plus},
                       Edge{3, 4, Sign::Plus}, Edge{0, 4, Sign::Plus}});
    auto mc = max_cut_bruteforce(c5);
    CHECK(mc.size == 4);
    // The witness side realizes the size.
    int crossing = 0;
    for (const auto& e : c5.edges())
        if (((mc.side >> e.u) ^ (mc.side >> e.v)) & 1) ++crossing;
    CHECK(crossing == 4);
}
