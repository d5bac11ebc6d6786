#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tricolor {

// Verification suites runnable from the CLI. Each asserts a family of exact
// identities over a deterministic set of sampled points.
//   states          state counts and grid validity, per corner color
//   gamma-balance   per-column gamma counting plus the s-monomial bookkeeping
//   funceq          functional equations for F, W and V, both sides
//   parity          sign of W and V under negating one coordinate
//   support         Laurent support and vanishing structure of V
//   proportionality u-independence of V^r / det(P or Q) at fixed b
//   schur           Jacobi-Trudi cross-check of script-P/script-Q
//   recursions      the u_{2n} = a^{-1} u_{2n-1} specialization relations
//   closed-form     brute force vs the determinant representation
//   all             every suite above with its default range
struct SuiteConfig {
    std::string suite = "all";
    int n_min = 0; // 0 = suite default
    int n_max = 0; // 0 = suite default
    int trials = 25;
    std::uint64_t seed = 1;
    bool json_output = false;
    std::string point_file; // run point-based suites on this fixed point
    std::string cache_path; // state cache consumed by `states`
    bool perturb = false;   // negative-control weight tweak (suite expected to fail)
};

struct CheckRecord {
    std::string suite;
    int n = 0;
    std::optional<int> r;
    std::optional<std::string> side;
    std::optional<int> k;
    std::optional<std::uint64_t> point_seed;
    bool pass = false;
    std::string witness; // empty when passing; serialized residual or note otherwise
};

struct CheckReport {
    std::vector<CheckRecord> records;
    bool pass = true;
    double wall_ms = 0.0; // not part of the canonical JSON

    void add(CheckRecord record) {
        pass = pass && record.pass;
        records.push_back(std::move(record));
    }
};

// Executes one suite (or "all"). Throws std::invalid_argument for unknown
// suite names; degeneracy and sampling failures propagate.
CheckReport run_suite(const SuiteConfig& cfg);

// Canonical JSON rendering: byte-identical across runs (and across worker
// counts) for a fixed (suite, seed, n-range, trials, version). Contains no
// timing data.
std::string report_to_canonical_json(const CheckReport& report, const SuiteConfig& cfg);

// Human-readable rendering, including wall-clock timing.
void print_report_text(std::ostream& os, const CheckReport& report, const SuiteConfig& cfg);

// Known state counts: 1, 2, 7, 42, 429, ... (the alternating-sign-matrix
// numbers), computed exactly for any n.
std::string expected_state_count(int n);

} // namespace tricolor
