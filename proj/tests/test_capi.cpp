#include <doctest.h>

#include "tclab.h"

#include <json.hpp>

#include <cstring>
#include <string>

using nlohmann::json;

namespace {

struct Ctx {
    tcl_ctx* ptr = nullptr;
    Ctx() { REQUIRE(tcl_ctx_create(&ptr) == TCL_OK); }
    ~Ctx() { tcl_ctx_destroy(ptr); }
};

struct Report {
    tcl_report* ptr = nullptr;
    ~Report() { tcl_report_destroy(ptr); }
    json payload() const { return json::parse(tcl_report_payload(ptr)); }
    std::string verdict() const { return tcl_report_verdict(ptr); }
};

} // namespace

TEST_CASE("version string") {
    CHECK(std::strlen(tcl_version()) > 0);
}

TEST_CASE("eval f through the C surface") {
    Ctx ctx;
    Report r;
    REQUIRE(tcl_eval(ctx.ptr, "f", 5, 2, 2, 1, 1, 0, &r.ptr) == TCL_OK);
    CHECK(r.verdict() == "evaluated");
    json payload = r.payload();
    CHECK(payload["value"] == "4");
    CHECK(payload["residue"] == 4);
    CHECK(payload["modulus"] == 5);
}

TEST_CASE("eval D at ell=1 is zero") {
    Ctx ctx;
    Report r;
    REQUIRE(tcl_eval(ctx.ptr, "D", 5, 2, 2, 1, 1, 0, &r.ptr) == TCL_OK);
    CHECK(r.payload()["value"] == "0");
}

TEST_CASE("eval F_closed ignores p") {
    Ctx ctx;
    Report r;
    REQUIRE(tcl_eval(ctx.ptr, "F_closed", 0, 2, 3, 2, 2, 0, &r.ptr) == TCL_OK);
    json payload = r.payload();
    CHECK(payload["value"] == "1");
    CHECK_FALSE(payload.contains("p"));
    CHECK_FALSE(payload.contains("residue"));
}

TEST_CASE("negative exact values serialize as signed decimal strings") {
    Ctx ctx;
    Report r;
    REQUIRE(tcl_eval(ctx.ptr, "f", 5, 2, 3, 1, 5, 0, &r.ptr) == TCL_OK);
    json payload = r.payload();
    CHECK(payload["value"] == "-6");
    CHECK(payload["residue"] == 4);
}

TEST_CASE("validation failures set TCL_EINVAL and a message") {
    Ctx ctx;
    tcl_report* raw = nullptr;
    CHECK(tcl_eval(ctx.ptr, "f", 4, 2, 2, 1, 1, 0, &raw) == TCL_EINVAL);
    CHECK(raw == nullptr);
    CHECK(std::strlen(tcl_ctx_last_error(ctx.ptr)) > 0);

    CHECK(tcl_eval(ctx.ptr, "nosuch", 5, 2, 2, 1, 1, 0, &raw) == TCL_EINVAL);
    CHECK(tcl_eval(ctx.ptr, "f", 5, 2, 2, 1, 99, 0, &raw) == TCL_EINVAL);
    // exploratory lifts the domain check
    Report ok;
    CHECK(tcl_eval(ctx.ptr, "f", 5, 2, 2, 1, 99, 1, &ok.ptr) == TCL_OK);
    CHECK(std::strlen(tcl_ctx_last_error(ctx.ptr)) == 0);
}

TEST_CASE("f_table matches the worked values") {
    Ctx ctx;
    Report r;
    REQUIRE(tcl_f_table(ctx.ptr, 5, 2, 3, 1, &r.ptr) == TCL_OK);
    json payload = r.payload();
    CHECK(payload["values"] == json::array({"4", "1", "-1", "-4", "-6"}));
    CHECK(payload["residues"] == json::array({4, 1, 4, 1, 4}));
    CHECK(payload["ell_max"] == 5);
}

TEST_CASE("verify theorem over a small sweep") {
    Ctx ctx;
    Report r;
    REQUIRE(tcl_verify(ctx.ptr, "theorem", 7, 12, &r.ptr) == TCL_OK);
    CHECK(r.verdict() == "pass");
    json payload = r.payload();
    CHECK(payload["tuples_checked"] == 31);
    CHECK(payload["failures"].empty());
}

TEST_CASE("verify all bundles the three scopes") {
    Ctx ctx;
    Report r;
    REQUIRE(tcl_verify(ctx.ptr, "all", 5, 6, &r.ptr) == TCL_OK);
    CHECK(r.verdict() == "pass");
    json payload = r.payload();
    CHECK(payload.contains("theorem"));
    CHECK(payload.contains("rewrites"));
    CHECK(payload.contains("lemmas"));
    tcl_report* raw = nullptr;
    CHECK(tcl_verify(ctx.ptr, "bogus", 5, 6, &raw) == TCL_EINVAL);
    CHECK(raw == nullptr);
}

TEST_CASE("tuple budget surfaces as TCL_EBUDGET") {
    Ctx ctx;
    REQUIRE(tcl_ctx_set_tuple_budget(ctx.ptr, 10) == TCL_OK);
    tcl_report* raw = nullptr;
    CHECK(tcl_verify(ctx.ptr, "theorem", 23, 12, &raw) == TCL_EBUDGET);
    CHECK(raw == nullptr);
}

TEST_CASE("rep decompose both compares the two methods") {
    Ctx ctx;
    Report r;
    REQUIRE(tcl_rep_decompose(ctx.ptr, 5, 2, 2, "both", &r.ptr) == TCL_OK);
    CHECK(r.verdict() == "pass");
    json payload = r.payload();
    CHECK(payload["closed"] == json::array({13, 11, 9, 7, 5, 3, 1}));
    CHECK(payload["rank"] == payload["closed"]);
    CHECK(payload["match"] == true);
    CHECK(payload["total_dim"] == 49);

    Report closed_only;
    REQUIRE(tcl_rep_decompose(ctx.ptr, 5, 1, 1, "closed", &closed_only.ptr) == TCL_OK);
    CHECK(closed_only.verdict() == "evaluated");
    CHECK(closed_only.payload()["closed"] == json::array({11, 9, 5, 5, 5, 1}));
}

TEST_CASE("rep decompose respects the dimension budget") {
    Ctx ctx;
    REQUIRE(tcl_ctx_set_dim_budget(ctx.ptr, 10) == TCL_OK);
    tcl_report* raw = nullptr;
    CHECK(tcl_rep_decompose(ctx.ptr, 5, 2, 2, "rank", &raw) == TCL_EBUDGET);
    // closed form needs no budget
    Report r;
    CHECK(tcl_rep_decompose(ctx.ptr, 5, 2, 2, "closed", &r.ptr) == TCL_OK);
}

TEST_CASE("rep generator passes and links f(1)") {
    Ctx ctx;
    Report r;
    REQUIRE(tcl_rep_generator(ctx.ptr, 5, 2, 2, 1, &r.ptr) == TCL_OK);
    CHECK(r.verdict() == "pass");
    json payload = r.payload();
    CHECK(payload["f1_residue"] == 4);
    CHECK(payload["module_dim"] == 7);
    CHECK(payload["cyclic_span_dim"] == 7);
    CHECK(payload["top_power_matches_f1_alt"] == true);
}

TEST_CASE("payloads are byte-stable across repeated calls") {
    Ctx ctx;
    Report a, b;
    REQUIRE(tcl_verify(ctx.ptr, "theorem", 7, 12, &a.ptr) == TCL_OK);
    REQUIRE(tcl_ctx_set_jobs(ctx.ptr, 8) == TCL_OK);
    REQUIRE(tcl_verify(ctx.ptr, "theorem", 7, 12, &b.ptr) == TCL_OK);
    CHECK(std::string(tcl_report_payload(a.ptr)) ==
          std::string(tcl_report_payload(b.ptr)));
}
