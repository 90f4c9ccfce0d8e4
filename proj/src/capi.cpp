#include "tclab.h"

#include "tclab/report.hpp"

#include <new>
#include <string>

struct tcl_ctx {
    unsigned jobs = 1;
    std::uint64_t tuple_budget = tclab::theorem::kDefaultTupleBudget;
    std::uint64_t dim_budget = tclab::tensor::kDefaultDimBudget;
    std::string last_error;
};

struct tcl_report {
    std::string verdict;
    std::string payload;
    double wall_seconds = 0.0;
};

namespace {

tcl_report* make_report(const tclab::report::Outcome& outcome) {
    auto* r = new tcl_report;
    r->verdict = outcome.verdict;
    r->payload = outcome.payload.dump();
    r->wall_seconds = outcome.wall_seconds;
    return r;
}

template <typename Fn>
tcl_status run(tcl_ctx* ctx, tcl_report** out, Fn&& fn) {
    if (ctx == nullptr || out == nullptr) return TCL_EINVAL;
    *out = nullptr;
    try {
        *out = make_report(fn());
        ctx->last_error.clear();
        return TCL_OK;
    } catch (const tclab::BudgetError& e) {
        ctx->last_error = e.what();
        return TCL_EBUDGET;
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return TCL_EINVAL;
    } catch (const std::out_of_range& e) {
        ctx->last_error = e.what();
        return TCL_EINVAL;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return TCL_EINTERNAL;
    }
}

} // namespace

extern "C" {

const char* tcl_version(void) { return "1.0.0"; }

tcl_status tcl_ctx_create(tcl_ctx** out) {
    if (out == nullptr) return TCL_EINVAL;
    *out = new (std::nothrow) tcl_ctx;
    return *out ? TCL_OK : TCL_EINTERNAL;
}

void tcl_ctx_destroy(tcl_ctx* ctx) { delete ctx; }

tcl_status tcl_ctx_set_jobs(tcl_ctx* ctx, uint32_t jobs) {
    if (ctx == nullptr || jobs == 0) return TCL_EINVAL;
    ctx->jobs = jobs;
    return TCL_OK;
}

tcl_status tcl_ctx_set_tuple_budget(tcl_ctx* ctx, uint64_t max_tuples) {
    if (ctx == nullptr) return TCL_EINVAL;
    ctx->tuple_budget = max_tuples;
    return TCL_OK;
}

tcl_status tcl_ctx_set_dim_budget(tcl_ctx* ctx, uint64_t max_dim) {
    if (ctx == nullptr) return TCL_EINVAL;
    ctx->dim_budget = max_dim;
    return TCL_OK;
}

const char* tcl_ctx_last_error(const tcl_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

tcl_status tcl_eval(tcl_ctx* ctx, const char* family, uint64_t p, uint64_t c,
                    uint64_t d, uint64_t k, int64_t ell, int exploratory,
                    tcl_report** out) {
    if (family == nullptr) return TCL_EINVAL;
    std::string fam = family;
    return run(ctx, out, [&] {
        return tclab::report::eval_sum(fam, p, c, d, k, ell, exploratory != 0);
    });
}

tcl_status tcl_f_table(tcl_ctx* ctx, uint64_t p, uint64_t c, uint64_t d,
                       uint64_t k, tcl_report** out) {
    return run(ctx, out, [&] { return tclab::report::f_table(p, c, d, k); });
}

tcl_status tcl_verify(tcl_ctx* ctx, const char* scope, uint64_t p_max,
                      uint64_t max_cd, tcl_report** out) {
    if (scope == nullptr) return TCL_EINVAL;
    std::string sc = scope;
    return run(ctx, out, [&] {
        return tclab::report::verify(sc, p_max, max_cd, ctx->jobs, ctx->tuple_budget);
    });
}

tcl_status tcl_rep_decompose(tcl_ctx* ctx, uint64_t p, uint64_t c, uint64_t d,
                             const char* method, tcl_report** out) {
    if (method == nullptr) return TCL_EINVAL;
    std::string m = method;
    return run(ctx, out, [&] {
        return tclab::report::rep_decompose(p, c, d, m, ctx->dim_budget);
    });
}

tcl_status tcl_rep_generator(tcl_ctx* ctx, uint64_t p, uint64_t c, uint64_t d,
                             uint64_t k, tcl_report** out) {
    return run(ctx, out, [&] { return tclab::report::rep_generator(p, c, d, k); });
}

const char* tcl_report_verdict(const tcl_report* report) {
    return report ? report->verdict.c_str() : "";
}

const char* tcl_report_payload(const tcl_report* report) {
    return report ? report->payload.c_str() : "";
}

double tcl_report_wall_seconds(const tcl_report* report) {
    return report ? report->wall_seconds : 0.0;
}

void tcl_report_destroy(tcl_report* report) { delete report; }

} // extern "C"
