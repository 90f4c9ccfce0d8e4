// tclab command-line front end. Everything mathematical happens behind the
// shared C API; this file only parses arguments, shapes output and appends
// run history.
#include "tclab.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <utility>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Options {
    unsigned jobs = 1;
    std::string format = "text";
    std::string out_path;
    std::string history_path = "./runs.jsonl";
    std::uint64_t tuple_budget = 1000000;
    std::uint64_t dim_budget = 4096;
    bool force_budget = false;

    // eval
    std::string family;
    std::uint64_t p = 0, c = 0, d = 0, k = 0;
    std::int64_t ell = 0;
    bool exploratory = false;

    // verify
    std::string scope;
    std::uint64_t p_max = 23;
    std::uint64_t max_cd = 12;

    // rep
    std::string action;
    std::string method = "both";
};

struct CtxDeleter {
    void operator()(tcl_ctx* ctx) const { tcl_ctx_destroy(ctx); }
};
struct ReportDeleter {
    void operator()(tcl_report* r) const { tcl_report_destroy(r); }
};
using CtxPtr = std::unique_ptr<tcl_ctx, CtxDeleter>;
using ReportPtr = std::unique_ptr<tcl_report, ReportDeleter>;

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int exit_code_for(tcl_status status, const std::string& verdict) {
    switch (status) {
        case TCL_OK: break;
        case TCL_EINVAL: return kExitUsage;
        case TCL_EBUDGET: return kExitBudget;
        default: return kExitInternal;
    }
    return verdict == "fail" ? kExitMathFailure : kExitOk;
}

// ---- output projections ----------------------------------------------------

std::string csv_escape(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void csv_failure_rows(std::ostream& os, const std::string& scope, const json& payload);

void csv_theorem_rows(std::ostream& os, const json& payload) {
    for (const auto& f : payload["failures"]) {
        const auto& pr = f["params"];
        os << "theorem,alternation," << pr["p"] << ',' << pr["c"] << ',' << pr["d"]
           << ',' << pr["k"] << ','
           << (f.contains("first_failure_ell") ? f["first_failure_ell"].dump() : "")
           << ",,f1=" << f["f1_residue"] << '\n';
    }
}

void csv_failure_rows(std::ostream& os, const std::string& scope, const json& payload) {
    if (scope == "theorem") {
        csv_theorem_rows(os, payload);
        return;
    }
    if (scope == "rewrites") {
        for (const auto& f : payload["failures"]) {
            const auto& pr = f["params"];
            os << "rewrites," << csv_escape(f["family"]) << ',' << pr["p"] << ','
               << pr["c"] << ',' << pr["d"] << ',' << pr["k"] << ',' << f["ell"]
               << ",," << csv_escape(f["defining"]) << "!=" << csv_escape(f["rewritten"])
               << '\n';
        }
        return;
    }
    if (scope == "lemmas") {
        const auto& checks = payload["checks"];
        for (const auto& f : checks["c1"]["failures"])
            os << "lemmas,c1,," << f["c"] << ",," << f["k"] << ",," << f["j"] << ",\n";
        for (const auto& f : checks["d1"]["failures"])
            os << "lemmas,d1,,," << f["d"] << ',' << f["k"] << ",," << f["j"] << ",\n";
        for (const auto& f : checks["lk"]["failures"]) {
            const auto& pr = f["params"];
            os << "lemmas,lk," << pr["p"] << ',' << pr["c"] << ',' << pr["d"] << ','
               << pr["k"] << ',' << f["ell"] << ",,\n";
        }
        for (const auto& f : checks["fg"]["failures"])
            os << "lemmas,fg,," << f["c"] << ',' << f["d"] << ',' << f["k"] << ','
               << f["ell"] << ",," << csv_escape(f["kinds"]) << '\n';
        return;
    }
    // scope == all
    csv_failure_rows(os, "theorem", payload["theorem"]);
    csv_failure_rows(os, "rewrites", payload["rewrites"]);
    csv_failure_rows(os, "lemmas", payload["lemmas"]);
}

void print_verify_section_text(std::ostream& os, const std::string& scope,
                               const json& payload) {
    if (scope == "theorem") {
        os << "theorem sweep: p_max=" << payload["p_max"]
           << " tuples=" << payload["tuples_checked"]
           << " failures=" << payload["failures"].size() << '\n';
        for (const auto& f : payload["failures"]) {
            const auto& pr = f["params"];
            os << "  counterexample (p=" << pr["p"] << ", c=" << pr["c"]
               << ", d=" << pr["d"] << ", k=" << pr["k"] << ")";
            if (f.contains("first_failure_ell"))
                os << " first failing ell=" << f["first_failure_ell"];
            os << '\n';
        }
    } else if (scope == "rewrites") {
        os << "rewrite identities: p_max=" << payload["p_max"]
           << " tuples=" << payload["tuples_checked"]
           << " (tuple,ell) pairs=" << payload["pairs_checked"]
           << " failures=" << payload["failures"].size() << '\n';
    } else if (scope == "lemmas") {
        const auto& checks = payload["checks"];
        os << "lemma grids: p_max=" << payload["p_max"]
           << " max_cd=" << payload["max_cd"] << '\n';
        for (const char* name : {"c1", "d1", "lk", "fg"}) {
            os << "  " << name << ": cases=" << checks[name]["cases"]
               << " failures=" << checks[name]["failures"].size() << '\n';
        }
    }
}

void print_verdict_line(std::ostream& os, const std::string& verdict,
                        double wall_seconds) {
    os << "verdict: " << verdict;
    if (wall_seconds > 0.0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", wall_seconds);
        os << buf;
    }
    os << '\n';
}

void print_verify_text(std::ostream& os, const std::string& scope, const json& payload,
                       const std::string& verdict, double wall_seconds) {
    if (scope == "all") {
        print_verify_section_text(os, "theorem", payload["theorem"]);
        print_verify_section_text(os, "rewrites", payload["rewrites"]);
        print_verify_section_text(os, "lemmas", payload["lemmas"]);
    } else {
        print_verify_section_text(os, scope, payload);
    }
    print_verdict_line(os, verdict, wall_seconds);
}

void print_eval_text(std::ostream& os, const json& payload) {
    os << payload["value"].get<std::string>();
    if (payload.contains("residue"))
        os << " (mod " << payload["modulus"] << ": " << payload["residue"] << ")";
    os << '\n';
}

void print_blocks_text(std::ostream& os, const char* label, const json& blocks) {
    os << label << ": ";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << " + ";
        os << 'V' << blocks[i];
    }
    os << '\n';
}

void print_rep_text(std::ostream& os, const Options& opt, const json& payload,
                    const std::string& verdict, double wall_seconds) {
    if (opt.action == "decompose") {
        os << "V(p+" << payload["c"] << ") (x) V(p+" << payload["d"]
           << ") at p=" << payload["p"] << ", total dimension "
           << payload["total_dim"] << '\n';
        if (payload.contains("closed")) print_blocks_text(os, "closed", payload["closed"]);
        if (payload.contains("rank")) print_blocks_text(os, "rank", payload["rank"]);
        if (payload.contains("match"))
            os << "methods " << (payload["match"].get<bool>() ? "match" : "DISAGREE") << '\n';
    } else {
        const auto& pr = payload["params"];
        os << "generator check (p=" << pr["p"] << ", c=" << pr["c"] << ", d=" << pr["d"]
           << ", k=" << pr["k"] << "): lambda_k=" << payload["lambda_k"]
           << " module_dim=" << payload["module_dim"]
           << " f(1)=" << payload["f1_residue"] << '\n'
           << "  top power = f(1) * alternating vector: "
           << payload["top_power_matches_f1_alt"] << '\n'
           << "  next power vanishes: " << payload["next_power_vanishes"]
           << "   top power nonzero: " << payload["top_power_nonzero"] << '\n'
           << "  cyclic span dimension: " << payload["cyclic_span_dim"]
           << " (expected " << payload["module_dim"] << ")\n";
    }
    print_verdict_line(os, verdict, wall_seconds);
}

// ---- run plumbing ----------------------------------------------------------

json command_params(const Options& opt, const std::string& command) {
    json params;
    if (command.rfind("eval", 0) == 0) {
        params["family"] = opt.family;
        if (opt.family != "F" && opt.family != "G" && opt.family != "F_closed" &&
            opt.family != "G_closed")
            params["p"] = opt.p;
        params["c"] = opt.c;
        params["d"] = opt.d;
        params["k"] = opt.k;
        params["ell"] = opt.ell;
        params["exploratory"] = opt.exploratory;
    } else if (command.rfind("verify", 0) == 0) {
        params["p_max"] = opt.p_max;
        if (opt.scope == "lemmas" || opt.scope == "all") params["max_cd"] = opt.max_cd;
    } else if (opt.action == "decompose") {
        params["p"] = opt.p;
        params["c"] = opt.c;
        params["d"] = opt.d;
        params["method"] = opt.method;
    } else {
        params["p"] = opt.p;
        params["c"] = opt.c;
        params["d"] = opt.d;
        params["k"] = opt.k;
    }
    return params;
}

void append_history(const Options& opt, const std::string& command,
                    const json& envelope, double duration_s) {
    if (opt.history_path.empty()) return;
    json record{{"schema_version", 1},
                {"command", command},
                {"parameters", envelope["params"]},
                {"verdict", envelope["verdict"]},
                {"payload", envelope["payload"]},
                {"timestamp", utc_timestamp()},
                {"duration_s", duration_s}};
    std::ofstream out(opt.history_path, std::ios::app);
    if (!out) {
        std::cerr << "warning: cannot append history to " << opt.history_path << '\n';
        return;
    }
    out << record.dump() << '\n';
}

void emit(const Options& opt, const std::string& command, const json& envelope,
          double wall_seconds) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) {
            std::cerr << "error: cannot write " << opt.out_path << '\n';
            std::exit(kExitUsage);
        }
        os = &file;
    }
    const json& payload = envelope["payload"];
    const std::string verdict = envelope["verdict"];
    if (opt.format == "json") {
        *os << envelope.dump() << '\n';
    } else if (opt.format == "csv") {
        if (command.rfind("eval", 0) == 0) {
            *os << "family,p,c,d,k,ell,value,residue\n"
                << payload["family"].get<std::string>() << ','
                << (payload.contains("p") ? payload["p"].dump() : "") << ','
                << payload["c"] << ',' << payload["d"] << ',' << payload["k"] << ','
                << payload["ell"] << ',' << payload["value"].get<std::string>() << ','
                << (payload.contains("residue") ? payload["residue"].dump() : "")
                << '\n';
        } else if (command.rfind("verify", 0) == 0) {
            *os << "scope,check,p,c,d,k,ell,j,detail\n";
            csv_failure_rows(*os, opt.scope, payload);
        } else if (opt.action == "decompose") {
            *os << "dimension,closed,rank\n";
            json closed = payload.contains("closed") ? payload["closed"] : json::array();
            json rank = payload.contains("rank") ? payload["rank"] : json::array();
            for (std::size_t i = 0; i < std::max(closed.size(), rank.size()); ++i) {
                *os << (i < closed.size() || i < rank.size()
                            ? (i < closed.size() ? closed[i].dump() : rank[i].dump())
                            : "")
                    << ',' << (i < closed.size() ? closed[i].dump() : "") << ','
                    << (i < rank.size() ? rank[i].dump() : "") << '\n';
            }
        } else {
            *os << "p,c,d,k,lambda_k,module_dim,f1,top_matches,next_vanishes,"
                   "top_nonzero,span_dim,span_ok\n";
            const auto& pr = payload["params"];
            *os << pr["p"] << ',' << pr["c"] << ',' << pr["d"] << ',' << pr["k"] << ','
                << payload["lambda_k"] << ',' << payload["module_dim"] << ','
                << payload["f1_residue"] << ',' << payload["top_power_matches_f1_alt"]
                << ',' << payload["next_power_vanishes"] << ','
                << payload["top_power_nonzero"] << ',' << payload["cyclic_span_dim"]
                << ',' << payload["span_dim_ok"] << '\n';
        }
    } else {
        if (command.rfind("eval", 0) == 0) print_eval_text(*os, payload);
        else if (command.rfind("verify", 0) == 0)
            print_verify_text(*os, opt.scope, payload, verdict, wall_seconds);
        else print_rep_text(*os, opt, payload, verdict, wall_seconds);
    }
}

int run_command(const Options& opt, const std::string& command) {
    CtxPtr ctx;
    {
        tcl_ctx* raw = nullptr;
        if (tcl_ctx_create(&raw) != TCL_OK) {
            std::cerr << "error: cannot create context\n";
            return kExitInternal;
        }
        ctx.reset(raw);
    }
    tcl_ctx_set_jobs(ctx.get(), opt.jobs == 0 ? 1 : opt.jobs);
    tcl_ctx_set_tuple_budget(ctx.get(), opt.force_budget ? 0 : opt.tuple_budget);
    tcl_ctx_set_dim_budget(ctx.get(), opt.force_budget ? 0 : opt.dim_budget);

    const auto started = std::chrono::steady_clock::now();
    tcl_report* raw_report = nullptr;
    tcl_status status = TCL_EINTERNAL;
    if (command.rfind("eval", 0) == 0) {
        status = tcl_eval(ctx.get(), opt.family.c_str(), opt.p, opt.c, opt.d, opt.k,
                          opt.ell, opt.exploratory ? 1 : 0, &raw_report);
    } else if (command.rfind("verify", 0) == 0) {
        status = tcl_verify(ctx.get(), opt.scope.c_str(), opt.p_max, opt.max_cd,
                            &raw_report);
    } else if (opt.action == "decompose") {
        status = tcl_rep_decompose(ctx.get(), opt.p, opt.c, opt.d, opt.method.c_str(),
                                   &raw_report);
    } else {
        status = tcl_rep_generator(ctx.get(), opt.p, opt.c, opt.d, opt.k, &raw_report);
    }
    ReportPtr report(raw_report);
    const double duration_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();

    if (status != TCL_OK) {
        std::cerr << "error: " << tcl_ctx_last_error(ctx.get()) << '\n';
        return exit_code_for(status, "");
    }

    json envelope{{"schema_version", 1},
                  {"command", command},
                  {"params", command_params(opt, command)},
                  {"verdict", std::string(tcl_report_verdict(report.get()))},
                  {"payload", json::parse(tcl_report_payload(report.get()))}};
    emit(opt, command, envelope, tcl_report_wall_seconds(report.get()));
    append_history(opt, command, envelope, duration_s);
    return exit_code_for(status, envelope["verdict"]);
}

} // namespace

// Settings resolve as: flags > environment (TCL_*) > config file > defaults.
// CLI11 applies config files ahead of the environment, so the file and env
// layers are folded in by hand before the parse.
bool apply_setting(Options& opt, const std::string& key, const std::string& value,
                   std::string& error) {
    try {
        if (key == "jobs") opt.jobs = static_cast<unsigned>(std::stoul(value));
        else if (key == "format") opt.format = value;
        else if (key == "out") opt.out_path = value;
        else if (key == "history") opt.history_path = value;
        else if (key == "tuple-budget" || key == "tuple_budget")
            opt.tuple_budget = std::stoull(value);
        else if (key == "dim-budget" || key == "dim_budget")
            opt.dim_budget = std::stoull(value);
        else if (key == "force-budget" || key == "force_budget")
            opt.force_budget = (value == "1" || value == "true" || value == "yes");
        else return false;  // unknown key
    } catch (const std::exception&) {
        error = "bad value for " + key + ": " + value;
    }
    return true;
}

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int load_config_file(Options& opt, const std::string& path, bool explicit_path) {
    std::ifstream in(path);
    if (!in) {
        if (!explicit_path) return kExitOk;  // default file simply absent
        std::cerr << "error: cannot read config file " << path << '\n';
        return kExitUsage;
    }
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = trimmed(line.substr(0, eq));
        std::string value = trimmed(line.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
            value.back() == value.front())
            value = value.substr(1, value.size() - 2);
        std::string error;
        if (!apply_setting(opt, key, value, error))
            std::cerr << "warning: unknown config key '" << key << "' in " << path << '\n';
        if (!error.empty()) {
            std::cerr << "error: " << error << " (in " << path << ")\n";
            return kExitUsage;
        }
    }
    return kExitOk;
}

int load_environment(Options& opt) {
    const std::pair<const char*, const char*> vars[] = {
        {"TCL_JOBS", "jobs"},
        {"TCL_FORMAT", "format"},
        {"TCL_OUT", "out"},
        {"TCL_HISTORY", "history"},
        {"TCL_TUPLE_BUDGET", "tuple-budget"},
        {"TCL_DIM_BUDGET", "dim-budget"},
        {"TCL_FORCE_BUDGET", "force-budget"},
    };
    for (const auto& [env_name, key] : vars) {
        const char* value = std::getenv(env_name);
        if (value == nullptr) continue;
        std::string error;
        apply_setting(opt, key, value, error);
        if (!error.empty()) {
            std::cerr << "error: " << error << " (from " << env_name << ")\n";
            return kExitUsage;
        }
    }
    return kExitOk;
}

int main(int argc, char** argv) {
    Options opt;

    // Locate the config file before anything else; flags still win because
    // the CLI11 parse runs last and only touches options actually given.
    std::string config_path = "tcl.toml";
    bool config_explicit = false;
    if (const char* env_config = std::getenv("TCL_CONFIG")) {
        config_path = env_config;
        config_explicit = true;
    }
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) {
            config_path = argv[i + 1];
            config_explicit = true;
        } else if (arg.rfind("--config=", 0) == 0) {
            config_path = arg.substr(9);
            config_explicit = true;
        }
    }
    if (int rc = load_config_file(opt, config_path, config_explicit); rc != kExitOk)
        return rc;
    if (int rc = load_environment(opt); rc != kExitOk) return rc;

    std::string config_dummy;
    CLI::App app{"tclab: exact verification of alternating triple-binomial "
                 "congruences and Jordan-block tensor decompositions over GF(p)"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--config", config_dummy, "Configuration file (key = value)");
    app.add_option("--jobs", opt.jobs, "Worker threads for sweeps");
    app.add_option("--format", opt.format, "Output format (json, csv or text)");
    app.add_option("--out", opt.out_path, "Write the report to a file");
    app.add_option("--history", opt.history_path,
                   "Append-only JSONL run history (empty disables)");
    app.add_option("--tuple-budget", opt.tuple_budget,
                   "Refuse sweeps over more tuples than this");
    app.add_option("--dim-budget", opt.dim_budget,
                   "Refuse rank decompositions above this dimension");
    app.add_flag("--force-budget", opt.force_budget, "Lift all resource budgets");

    auto* eval = app.add_subcommand("eval", "Evaluate one sum family at one index");
    eval->add_option("family", opt.family, "C, C_alt, D, D_alt, f, F, G, F_closed, G_closed")
        ->required()
        ->check(CLI::IsMember({"C", "C_alt", "D", "D_alt", "f", "F", "G",
                               "F_closed", "G_closed"}));
    eval->add_option("--p", opt.p, "Prime p (ignored for F/G families)");
    eval->add_option("--c", opt.c)->required();
    eval->add_option("--d", opt.d)->required();
    eval->add_option("--k", opt.k)->required();
    eval->add_option("--ell", opt.ell)->required();
    eval->add_flag("--exploratory", opt.exploratory,
                   "Evaluate outside the strict ell-domain");

    auto* verify = app.add_subcommand("verify", "Exhaustive checks up to a bound");
    verify->add_option("scope", opt.scope, "theorem, rewrites, lemmas or all")
        ->required()
        ->check(CLI::IsMember({"theorem", "rewrites", "lemmas", "all"}));
    verify->add_option("--p-max", opt.p_max, "Largest prime to sweep");
    verify->add_option("--max-cd", opt.max_cd, "Grid bound for lemma checks");

    auto* rep = app.add_subcommand("rep", "Tensor-module decomposition checks");
    rep->add_option("action", opt.action, "decompose or generator")
        ->required()
        ->check(CLI::IsMember({"decompose", "generator"}));
    rep->add_option("--p", opt.p)->required();
    rep->add_option("--c", opt.c)->required();
    rep->add_option("--d", opt.d)->required();
    rep->add_option("--k", opt.k, "Required for generator checks");
    rep->add_option("--method", opt.method, "closed, rank or both")
        ->check(CLI::IsMember({"closed", "rank", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (opt.format != "json" && opt.format != "csv" && opt.format != "text") {
        std::cerr << "error: --format must be json, csv or text (got '" << opt.format
                  << "')\n";
        return kExitUsage;
    }

    std::string command;
    if (eval->parsed()) command = "eval " + opt.family;
    else if (verify->parsed()) command = "verify " + opt.scope;
    else command = "rep " + opt.action;

    if (rep->parsed() && opt.action == "generator" && opt.k == 0) {
        std::cerr << "error: rep generator requires --k\n";
        return kExitUsage;
    }

    try {
        return run_command(opt, command);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}
