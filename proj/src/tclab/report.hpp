#pragma once

#include "tclab/params.hpp"
#include "tclab/tensor.hpp"
#include "tclab/theorem.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace tclab::report {

using nlohmann::json;

/// Outcome of one command: a verdict string ("pass", "fail" or "evaluated")
/// plus a canonical JSON payload. Payload keys are emitted sorted and exact
/// integers appear as decimal strings, so identical inputs always serialize
/// to identical bytes. Timing never enters a payload.
struct Outcome {
    std::string verdict;
    json payload;
    double wall_seconds = 0.0;
};

/// family: C, C_alt, D, D_alt, f (needs p) or F, G, F_closed, G_closed
/// (p ignored). Throws std::invalid_argument for unknown families or
/// invalid parameters.
Outcome eval_sum(const std::string& family, std::uint64_t p, std::uint64_t c,
                 std::uint64_t d, std::uint64_t k, long long ell, bool exploratory);

Outcome f_table(std::uint64_t p, std::uint64_t c, std::uint64_t d, std::uint64_t k);

/// scope: theorem, rewrites, lemmas or all.
Outcome verify(const std::string& scope, std::uint64_t p_max, std::uint64_t max_cd,
               unsigned jobs, std::uint64_t tuple_budget);

/// method: closed, rank or both.
Outcome rep_decompose(std::uint64_t p, std::uint64_t c, std::uint64_t d,
                      const std::string& method, std::uint64_t dim_budget);

Outcome rep_generator(std::uint64_t p, std::uint64_t c, std::uint64_t d,
                      std::uint64_t k);

json theorem_report_json(const theorem::TheoremReport& r);

} // namespace tclab::report
