#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "levi/families.hpp"

namespace levi {

struct OracleOptions {
    /// Worker threads for the outer (g, h) scan; 0 picks the LEVI_WORKERS
    /// environment default. The merged output is canonically sorted, so the
    /// result never depends on the partitioning.
    int workers = 0;
    /// Cap on outer iterations |K|^(2|M|).
    std::uint64_t pair_budget = std::uint64_t{1} << 32;
};

/// Outcome of one completeness experiment: the exhaustive solution set versus
/// the union of the generated families.
struct OracleReport {
    std::string spec_digest;
    std::uint64_t oracle_count = 0;
    std::uint64_t family_count = 0;
    std::vector<SolutionTuple> missing;  // found by the oracle, not generated
    std::vector<SolutionTuple> extra;    // generated but failing the residual
    std::map<std::string, std::uint64_t> per_family;
    double wall_ms = 0.0;  // diagnostics only; kept out of serialized payloads

    bool clean() const { return missing.empty() && extra.empty(); }
};

/// Every solution tuple of the equation on a small instance, found by brute
/// force. For each fixed (g, h) the equation is linear in (f, h_1..h_n); the
/// coefficient matrix does not depend on (g, h), so it is reduced once and
/// only the right-hand side work repeats across the |K|^(2|M|) outer scan.
/// Prime fields only; |M| <= 8; nullspace dimension capped at 20 (a cap hit
/// is a hard NullspaceCapExceeded, never a truncation).
std::vector<SolutionTuple> solve_all(const ProblemSpec& spec, const OracleOptions& opts = {});

/// The affine solution set in (f, h_1..h_n) for one fixed pair (g, h). Works
/// over the rationals as well; a positive-dimensional set over the rationals
/// cannot be enumerated (InfiniteField).
std::vector<SolutionTuple> solve_fixed(const ProblemSpec& spec, const Func& g, const Func& h);

/// Runs solve_all and sweep_families and reports the exact set difference.
OracleReport compare(const ProblemSpec& spec, const OracleOptions& opts = {},
                     const SweepOptions& sweep_opts = {});

/// Stable fingerprint of the spec content (FNV-1a over a canonical byte form).
std::string spec_digest(const ProblemSpec& spec);

/// LEVI_WORKERS environment override, else hardware concurrency capped at 8.
int default_worker_count();

}  // namespace levi
