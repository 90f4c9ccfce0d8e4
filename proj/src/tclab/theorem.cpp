#include "tclab/theorem.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <string>
#include <thread>

namespace tclab::theorem {

using arith::BigInt;
using arith::Residue;

TheoremReport verify_theorem(const Params& pr) {
    const std::uint64_t p = pr.p();
    const long long ell_max = pr.ell_max();

    std::vector<BigInt> rewritten, defining;
    rewritten.reserve(static_cast<std::size_t>(ell_max));
    defining.reserve(static_cast<std::size_t>(ell_max));
    for (long long ell = 1; ell <= ell_max; ++ell) {
        rewritten.push_back(sums::f_eval(pr, ell, sums::Form::rewritten));
        defining.push_back(sums::f_eval(pr, ell, sums::Form::defining));
    }

    TheoremReport report{pr, Residue::from_bigint(rewritten[0], p),
                         false, false, std::nullopt, false, false, false};
    report.nonzero_ok = !report.f1_residue.is_zero();

    report.alternation_ok = true;
    for (long long ell = 1; ell <= ell_max; ++ell) {
        Residue got = Residue::from_bigint(rewritten[static_cast<std::size_t>(ell - 1)], p);
        Residue want = (ell % 2 == 1) ? report.f1_residue : -report.f1_residue;
        if (got != want) {
            report.alternation_ok = false;
            report.first_failure_ell = ell;
            break;
        }
    }

    report.forms_ok = rewritten == defining;

    report.fast_path_ok = true;
    for (long long ell = 1; ell <= ell_max; ++ell) {
        if (sums::f_residue_fast(pr, ell) !=
            Residue::from_bigint(rewritten[static_cast<std::size_t>(ell - 1)], p)) {
            report.fast_path_ok = false;
            break;
        }
    }

    // C(1) residue from the proof of the main theorem.
    const long long c = static_cast<long long>(pr.c());
    const long long d = static_cast<long long>(pr.d());
    const long long k = static_cast<long long>(pr.k());
    Residue c1 = Residue::from_bigint(sums::C_def(pr, 1), p);
    Residue closed = arith::binomial_mod(c + d - k, k - 1, p) *
                     arith::binomial_mod(static_cast<long long>(p) - 1, c - k, p);
    if (k % 2 == 0) closed = -closed;
    report.closed_form_c1_ok = (c1 == closed);

    return report;
}

SweepSummary sweep(std::uint64_t p_max, unsigned jobs, std::uint64_t tuple_budget) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<Params> tuples = enumerate_params(p_max);
    if (tuple_budget != 0 && tuples.size() > tuple_budget)
        throw BudgetError("sweep: " + std::to_string(tuples.size()) +
                          " tuples exceed budget of " + std::to_string(tuple_budget));

    SweepSummary summary;
    summary.p_max = p_max;
    summary.tuples_checked = tuples.size();

    if (jobs == 0) jobs = 1;
    std::vector<std::vector<std::pair<std::size_t, TheoremReport>>> found(jobs);
    std::atomic<std::size_t> next{0};

    auto worker = [&](unsigned id) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tuples.size()) break;
            TheoremReport r = verify_theorem(tuples[i]);
            if (!r.passed()) found[id].emplace_back(i, std::move(r));
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
        for (auto& t : pool) t.join();
    }

    // Merge per-worker failures back into enumeration order.
    std::vector<std::pair<std::size_t, TheoremReport>> merged;
    for (auto& part : found)
        for (auto& item : part) merged.push_back(std::move(item));
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& item : merged) summary.failures.push_back(std::move(item.second));

    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return summary;
}

} // namespace tclab::theorem
