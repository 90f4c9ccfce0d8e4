#pragma once

#include "tclab/params.hpp"
#include "tclab/sums.hpp"

#include <optional>
#include <vector>

namespace tclab::theorem {

inline constexpr std::uint64_t kDefaultTupleBudget = 1'000'000;

/// Per-tuple verdict for the alternation theorem:
///   f(1) != 0 mod p, and f(ell) == (-1)^(ell-1) f(1) mod p on [1, c+d+1-k].
/// closed_form_c1_ok additionally checks
///   C(1) == (-1)^(k-1) binom(c+d-k, k-1) binom(p-1, c-k)  mod p.
struct TheoremReport {
    Params params;
    arith::Residue f1_residue;
    bool nonzero_ok = false;
    bool alternation_ok = false;
    std::optional<long long> first_failure_ell;  // set iff alternation failed
    bool closed_form_c1_ok = false;
    bool forms_ok = false;      // defining and rewritten forms agree exactly
    bool fast_path_ok = false;  // Lucas-path residues match exact reduction

    bool passed() const {
        return nonzero_ok && alternation_ok && closed_form_c1_ok &&
               forms_ok && fast_path_ok;
    }
};

TheoremReport verify_theorem(const Params& pr);

struct SweepSummary {
    std::uint64_t p_max = 0;
    std::uint64_t tuples_checked = 0;
    std::vector<TheoremReport> failures;  // ordered by (p, c, d, k)
    double wall_seconds = 0.0;            // reporting only, never in payloads

    bool all_passed() const { return failures.empty(); }
};

/// Verifies every admissible tuple with p <= p_max. The summary is
/// deterministic for any worker count: results merge in tuple order.
/// Throws BudgetError when the tuple count exceeds the budget (0 = unlimited).
SweepSummary sweep(std::uint64_t p_max, unsigned jobs = 1,
                   std::uint64_t tuple_budget = kDefaultTupleBudget);

} // namespace tclab::theorem
