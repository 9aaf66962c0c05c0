#pragma once

#include <functional>
#include <string>
#include <vector>

#include "frustrix/signed_graph.hpp"

namespace frustrix {

// One scanned (graph, switching class) pair.
struct ReportRecord {
    std::string cert;           // canonical certificate, hex
    std::string graph6;
    std::string signature_hex;  // class representative over the canonical edge order
    int n = 0;
    int m = 0;
    int f = 0;
    std::string bound_id;       // main | eq38 | cubic29 | half | girth5
    long long bound_num = 0;    // bound value as an exact fraction num/den
    long long bound_den = 1;
    std::string status;         // ok | equality | exception | violation
    int exception_index = 0;    // 1..5 when matched to one of the five exceptions
};

struct VerifySummary {
    std::string theorem_id;
    int n_max = 0;
    long long graphs_scanned = 0;
    long long classes_scanned = 0;
    long long ok = 0;
    long long equalities = 0;
    long long exceptions = 0;
    long long violations = 0;
    double elapsed_seconds = 0.0;
    std::vector<std::string> notes;  // per-theorem side results
};

struct VerificationReport {
    VerifySummary summary;
    std::vector<ReportRecord> violations;
    std::vector<ReportRecord> exceptions_found;
    std::vector<ReportRecord> equalities;
    // girth-5 probe: exact maximum of F/n and its witnesses.
    long long max_ratio_num = 0;
    long long max_ratio_den = 1;
    std::vector<ReportRecord> maximizers;

    bool passed() const { return summary.violations == 0; }
};

struct VerifyOptions {
    int workers = 1;
    // Streamed one record per (graph, class) in deterministic order.
    std::function<void(const ReportRecord&)> sink;
};

// F <= n/3 over all 2-edge-connected simple subcubic graphs on <= n_max
// vertices and all switching classes; the exceedances must be exactly the
// five exceptional signed graphs up to switching isomorphism.
VerificationReport verify_main_theorem(int n_max, const VerifyOptions& opts = {});

// 8F <= 3n+2 over all connected simple subcubic graphs on <= n_max vertices,
// all classes except gamma(1)'s; equality exactly on the cubic
// leaf-blocks-gamma(2) / negative-triangle-blocks shape.
VerificationReport verify_3n2_over_8(int n_max, const VerifyOptions& opts = {});

// 9F <= 2m over all 2-edge-connected simple cubic graphs on exactly n
// vertices (n in {10, 12}), all classes; equality witnesses are recorded.
VerificationReport verify_cubic_corollary(int n, const VerifyOptions& opts = {});

// The small-graph characterization: (a) F = n/2 on the 2EC census (n <= 9)
// exactly at gamma(1)'s class, (b) W1/W2 have max class F = 2, (c) the odd
// orders 5, 7, 9 carry exactly the expected exceptional classes.
VerificationReport verify_small_characterization(const VerifyOptions& opts = {});

// Scans girth >= 5 connected simple subcubic graphs up to n_max; any class
// with 10F > 3n is reported as a counterexample candidate, and the exact
// maximizers of F/n are listed.
VerificationReport probe_girth5_conjecture(int n_max, const VerifyOptions& opts = {});

// Does the minimal signed graph match the (3n+2)/8 equality shape: cubic,
// at least one cut-edge, every leaf-block switching-isomorphic to gamma(2),
// every non-leaf block a negative triangle.
bool matches_eq38_shape(const SignedGraph& minimal_signed);

// JSON-lines serialization of the report stream.
std::string record_json_line(const ReportRecord& r);
std::string summary_json_line(const VerifySummary& s);

}  // namespace frustrix
