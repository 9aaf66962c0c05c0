#include "frustrix/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "frustrix/census.hpp"
#include "frustrix/families.hpp"
#include "frustrix/sgio.hpp"
#include "frustrix/solver.hpp"

namespace frustrix {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<SignedGraph>& census_cached(int n, const CensusFilter& filter) {
    static std::mutex mu;
    static std::map<std::tuple<int, bool, bool, int>, std::vector<SignedGraph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(n, filter.two_edge_connected, filter.cubic, filter.girth_min);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_subcubic(n, filter)).first;
    return it->second;
}

struct GraphItem {
    SignedGraph graph;  // all-positive representative
    std::string cert;
    std::string g6;
};

std::vector<GraphItem> collect_graphs(int n_min, int n_max, const CensusFilter& filter) {
    std::vector<GraphItem> items;
    for (int n = n_min; n <= n_max; ++n)
        for (const auto& g : census_cached(n, filter))
            items.push_back(GraphItem{g, canonical_form(g).cert_hex(), graph6_encode(g)});
    return items;
}

// Classifies every switching class of one graph; returns records in class order.
using Classifier = std::function<std::vector<ReportRecord>(const GraphItem&)>;

std::vector<std::vector<ReportRecord>> run_items(const std::vector<GraphItem>& items,
                                                 const Classifier& classify, int workers) {
    std::vector<std::vector<ReportRecord>> results(items.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) results[i] = classify(items[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            results[i] = classify(items[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

void finalize(VerificationReport& rep, const std::vector<std::vector<ReportRecord>>& results,
              const VerifyOptions& opts) {
    for (const auto& recs : results)
        for (const auto& r : recs) {
            rep.summary.classes_scanned++;
            if (r.status == "ok") rep.summary.ok++;
            if (r.status == "equality") {
                rep.summary.equalities++;
                rep.equalities.push_back(r);
            }
            if (r.status == "exception") {
                rep.summary.exceptions++;
                rep.exceptions_found.push_back(r);
            }
            if (r.status == "violation") {
                rep.summary.violations++;
                rep.violations.push_back(r);
            }
            if (opts.sink) opts.sink(r);
        }
}

ReportRecord base_record(const GraphItem& item, const SignatureBits& bits, int f,
                         const char* bound_id, long long num, long long den) {
    ReportRecord r;
    r.cert = item.cert;
    r.graph6 = item.g6;
    r.signature_hex = bits.hex();
    r.n = item.graph.vertex_count();
    r.m = item.graph.edge_count();
    r.f = f;
    r.bound_id = bound_id;
    r.bound_num = num;
    r.bound_den = den;
    return r;
}

// Matches a signed graph against the five exceptions; 0 if none.
int match_exception(const SignedGraph& g) {
    static const std::vector<SignedGraph> gammas = [] {
        std::vector<SignedGraph> v;
        for (int i = 1; i <= 5; ++i) v.push_back(gamma(i));
        return v;
    }();
    int n = g.vertex_count(), m = g.edge_count();
    for (int i = 1; i <= 5; ++i) {
        const SignedGraph& gi = gammas[i - 1];
        if (gi.vertex_count() != n || gi.edge_count() != m) continue;
        if (switching_isomorphic(g, gi)) return i;
    }
    return 0;
}

}  // namespace

bool matches_eq38_shape(const SignedGraph& minimal_signed) {
    if (!minimal_signed.is_cubic()) return false;
    if (!minimal_signed.is_connected()) return false;
    if (bridges(minimal_signed).empty()) return false;
    static const SignedGraph g2 = gamma(2);
    for (const auto& block : block_decomposition(minimal_signed)) {
        SignedGraph sub = minimal_signed.induced(block.vertices);
        if (block.is_leaf) {
            if (sub.vertex_count() != 5 || sub.edge_count() != 7) return false;
            if (!switching_isomorphic(sub, g2)) return false;
        } else {
            if (sub.vertex_count() != 3 || sub.edge_count() != 3) return false;
            int negs = sub.negative_edge_count();
            if (negs % 2 == 0) return false;  // triangle must be negative
        }
    }
    return true;
}

VerificationReport verify_main_theorem(int n_max, const VerifyOptions& opts) {
    if (n_max > 10) throw capacity_error("verify_main_theorem: n_max exceeds capacity 10");
    auto start = Clock::now();
    VerificationReport rep;
    rep.summary.theorem_id = "main";
    rep.summary.n_max = n_max;

    CensusFilter filter;
    filter.two_edge_connected = true;
    auto items = collect_graphs(1, n_max, filter);
    rep.summary.graphs_scanned = static_cast<long long>(items.size());

    Classifier classify = [](const GraphItem& item) {
        std::vector<ReportRecord> recs;
        int n = item.graph.vertex_count();
        for (const auto& bits : enumerate_switching_classes(item.graph)) {
            SignedGraph sg = item.graph.with_signature(bits);
            int f = frustration_bruteforce(sg).f;
            ReportRecord r = base_record(item, bits, f, "main", n, 3);
            if (3 * f < n)
                r.status = "ok";
            else if (3 * f == n)
                r.status = "equality";
            else {
                int idx = match_exception(sg);
                if (idx > 0) {
                    r.status = "exception";
                    r.exception_index = idx;
                } else {
                    r.status = "violation";
                }
            }
            recs.push_back(std::move(r));
        }
        return recs;
    };
    finalize(rep, run_items(items, classify, opts.workers), opts);
    rep.summary.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

VerificationReport verify_3n2_over_8(int n_max, const VerifyOptions& opts) {
    if (n_max > 10) throw capacity_error("verify_3n2_over_8: n_max exceeds capacity 10");
    auto start = Clock::now();
    VerificationReport rep;
    rep.summary.theorem_id = "eq38";
    rep.summary.n_max = n_max;

    CensusFilter filter;  // connected subcubic, bridges allowed
    auto items = collect_graphs(1, n_max, filter);
    rep.summary.graphs_scanned = static_cast<long long>(items.size());

    Classifier classify = [](const GraphItem& item) {
        std::vector<ReportRecord> recs;
        int n = item.graph.vertex_count();
        bool k4_shape = n == 4 && item.graph.edge_count() == 6;
        for (const auto& bits : enumerate_switching_classes(item.graph)) {
            SignedGraph sg = item.graph.with_signature(bits);
            auto sol = frustration_bruteforce(sg);
            ReportRecord r = base_record(item, bits, sol.f, "eq38", 3LL * n + 2, 8);
            if (k4_shape && match_exception(sg) == 1) {
                r.status = "exception";  // gamma(1)'s class is excluded by the theorem
                r.exception_index = 1;
                recs.push_back(std::move(r));
                continue;
            }
            SignedGraph minimal =
                tree_canonical_signature(sg.with_signature(sol.witness_signature)).first;
            bool shape = matches_eq38_shape(minimal);
            long long lhs = 8LL * sol.f, rhs = 3LL * n + 2;
            if (lhs > rhs || (lhs == rhs) != shape)
                r.status = "violation";
            else if (lhs == rhs)
                r.status = "equality";
            else
                r.status = "ok";
            recs.push_back(std::move(r));
        }
        return recs;
    };
    finalize(rep, run_items(items, classify, opts.workers), opts);
    rep.summary.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

VerificationReport verify_cubic_corollary(int n, const VerifyOptions& opts) {
    if (n != 10 && n != 12) throw capacity_error("verify_cubic_corollary: n must be 10 or 12");
    auto start = Clock::now();
    VerificationReport rep;
    rep.summary.theorem_id = "cubic29";
    rep.summary.n_max = n;

    CensusFilter filter;
    filter.two_edge_connected = true;
    filter.cubic = true;
    auto items = collect_graphs(n, n, filter);
    rep.summary.graphs_scanned = static_cast<long long>(items.size());

    Classifier classify = [](const GraphItem& item) {
        std::vector<ReportRecord> recs;
        int m = item.graph.edge_count();
        for (const auto& bits : enumerate_switching_classes(item.graph)) {
            SignedGraph sg = item.graph.with_signature(bits);
            int f = frustration_bruteforce(sg).f;
            ReportRecord r = base_record(item, bits, f, "cubic29", 2LL * m, 9);
            if (9 * f < 2 * m)
                r.status = "ok";
            else if (9 * f == 2 * m)
                r.status = "equality";
            else
                r.status = "violation";
            recs.push_back(std::move(r));
        }
        return recs;
    };
    finalize(rep, run_items(items, classify, opts.workers), opts);
    rep.summary.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

VerificationReport verify_small_characterization(const VerifyOptions& opts) {
    auto start = Clock::now();
    VerificationReport rep;
    rep.summary.theorem_id = "small";
    rep.summary.n_max = 9;

    CensusFilter filter;
    filter.two_edge_connected = true;
    auto items = collect_graphs(1, 9, filter);
    rep.summary.graphs_scanned = static_cast<long long>(items.size());

    // (a) F = n/2 on the census happens exactly at gamma(1)'s class.
    std::atomic<long long> odd5_exceptional{0}, odd7_exceptional{0}, odd9_exceptional{0};
    std::atomic<bool> odd5_is_gamma2{true};
    Classifier classify = [&](const GraphItem& item) {
        std::vector<ReportRecord> recs;
        int n = item.graph.vertex_count();
        for (const auto& bits : enumerate_switching_classes(item.graph)) {
            SignedGraph sg = item.graph.with_signature(bits);
            int f = frustration_bruteforce(sg).f;
            ReportRecord r = base_record(item, bits, f, "half", n, 2);
            if (2 * f > n) {
                r.status = "violation";
            } else if (2 * f == n) {
                int idx = match_exception(sg);
                if (idx == 1) {
                    r.status = "exception";
                    r.exception_index = 1;
                } else {
                    r.status = "violation";
                }
            } else {
                r.status = "ok";
            }
            if (3 * f > n && (n == 5 || n == 7 || n == 9)) {
                if (n == 5) {
                    odd5_exceptional++;
                    if (match_exception(sg) != 2) odd5_is_gamma2 = false;
                } else if (n == 7)
                    odd7_exceptional++;
                else
                    odd9_exceptional++;
            }
            recs.push_back(std::move(r));
        }
        return recs;
    };
    finalize(rep, run_items(items, classify, opts.workers), opts);

    bool found_gamma1 = false;
    for (const auto& r : rep.exceptions_found)
        if (r.exception_index == 1) found_gamma1 = true;
    if (!found_gamma1) {
        rep.summary.violations++;
        rep.summary.notes.push_back("gamma(1) class with F = n/2 not found in census");
    }

    // (b) W1, W2: the maximum of F over all 32 classes is exactly 2.
    auto [w1, w2] = w_graphs();
    int wi = 1;
    for (const SignedGraph& w : {w1, w2}) {
        auto classes = enumerate_switching_classes(w);
        int maxf = 0;
        for (const auto& bits : classes)
            maxf = std::max(maxf, frustration_bruteforce(w.with_signature(bits)).f);
        rep.summary.notes.push_back("W" + std::to_string(wi) + ": " +
                                    std::to_string(classes.size()) +
                                    " classes, max F = " + std::to_string(maxf));
        if (classes.size() != 32 || maxf != 2) rep.summary.violations++;
        ++wi;
    }

    // (c) odd orders: n = 5 has exactly gamma(2)'s exceptional class; 7 and 9 none.
    if (odd5_exceptional != 1 || !odd5_is_gamma2) {
        rep.summary.violations++;
        rep.summary.notes.push_back("n=5 exceptional classes != {gamma(2)}");
    } else {
        rep.summary.notes.push_back("n=5: single exceptional class, switching-isomorphic to gamma(2)");
    }
    if (odd7_exceptional != 0 || odd9_exceptional != 0) {
        rep.summary.violations++;
        rep.summary.notes.push_back("unexpected exceptional classes at n = 7 or 9");
    } else {
        rep.summary.notes.push_back("n=7 and n=9: no exceptional classes");
    }

    rep.summary.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

VerificationReport probe_girth5_conjecture(int n_max, const VerifyOptions& opts) {
    if (n_max > 12) throw capacity_error("probe_girth5_conjecture: n_max exceeds capacity 12");
    auto start = Clock::now();
    VerificationReport rep;
    rep.summary.theorem_id = "girth5";
    rep.summary.n_max = n_max;

    CensusFilter filter;
    filter.girth_min = 5;
    auto items = collect_graphs(1, n_max, filter);
    rep.summary.graphs_scanned = static_cast<long long>(items.size());

    Classifier classify = [](const GraphItem& item) {
        std::vector<ReportRecord> recs;
        int n = item.graph.vertex_count();
        for (const auto& bits : enumerate_switching_classes(item.graph)) {
            SignedGraph sg = item.graph.with_signature(bits);
            int f = frustration_bruteforce(sg).f;
            ReportRecord r = base_record(item, bits, f, "girth5", 3LL * n, 10);
            if (10 * f > 3 * n)
                r.status = "violation";  // a conjecture counterexample, reported in-band
            else if (10 * f == 3 * n)
                r.status = "equality";
            else
                r.status = "ok";
            recs.push_back(std::move(r));
        }
        return recs;
    };
    auto results = run_items(items, classify, opts.workers);
    finalize(rep, results, opts);

    // Exact maximum of F/n by cross-multiplication.
    for (const auto& recs : results)
        for (const auto& r : recs) {
            if (r.f == 0) continue;
            long long num = r.f, den = r.n;
            long long cmp = num * rep.max_ratio_den - rep.max_ratio_num * den;
            if (cmp > 0) {
                rep.max_ratio_num = num;
                rep.max_ratio_den = den;
                rep.maximizers.clear();
                rep.maximizers.push_back(r);
            } else if (cmp == 0) {
                rep.maximizers.push_back(r);
            }
        }
    rep.summary.notes.push_back("max F/n = " + std::to_string(rep.max_ratio_num) + "/" +
                                std::to_string(rep.max_ratio_den) + " over " +
                                std::to_string(rep.maximizers.size()) + " class(es)");
    rep.summary.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

std::string record_json_line(const ReportRecord& r) {
    nlohmann::json j;
    j["cert"] = r.cert;
    j["graph6"] = r.graph6;
    j["signature_hex"] = r.signature_hex;
    j["n"] = r.n;
    j["m"] = r.m;
    j["F"] = r.f;
    j["bound_id"] = r.bound_id;
    j["bound_num"] = r.bound_num;
    j["bound_den"] = r.bound_den;
    j["status"] = r.status;
    if (r.exception_index > 0) j["exception_index"] = r.exception_index;
    return j.dump();
}

std::string summary_json_line(const VerifySummary& s) {
    nlohmann::json j;
    j["summary"]["theorem_id"] = s.theorem_id;
    j["summary"]["n_max"] = s.n_max;
    j["summary"]["graphs_scanned"] = s.graphs_scanned;
    j["summary"]["classes_scanned"] = s.classes_scanned;
    j["summary"]["ok"] = s.ok;
    j["summary"]["equalities"] = s.equalities;
    j["summary"]["exceptions"] = s.exceptions;
    j["summary"]["violations"] = s.violations;
    j["summary"]["elapsed_seconds"] = s.elapsed_seconds;
    j["summary"]["notes"] = s.notes;
    return j.dump();
}

}  // namespace frustrix
