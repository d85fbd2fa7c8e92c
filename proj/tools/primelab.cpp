// primelab: command-line front end over the C API.
//
//   primelab verify <identity> --from A --to B [--points N] [--emit csv|json] [--out PATH]
//   primelab scan <estimator> --from A --to B --points N [--emit csv|json] [--out PATH]
//   primelab table --x X1,X2,... [--emit csv|json] [--out PATH]
//
// Exit codes: 0 success, 1 verification failure, 2 usage/configuration
// error, 3 I/O error.

#include "primelab/primelab.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct TablesDeleter {
    void operator()(primelab_tables* t) const { primelab_tables_destroy(t); }
};
struct RunDeleter {
    void operator()(primelab_run* r) const { primelab_run_destroy(r); }
};
using TablesPtr = std::unique_ptr<primelab_tables, TablesDeleter>;
using RunPtr = std::unique_ptr<primelab_run, RunDeleter>;

int report_error(primelab_status st)
{
    std::fprintf(stderr, "primelab: %s: %s\n", primelab_status_string(st), primelab_last_error());
    switch (st) {
    case PRIMELAB_ERR_IO: return kExitIo;
    case PRIMELAB_ERR_CONFIG:
    case PRIMELAB_ERR_INVALID_ARGUMENT:
    case PRIMELAB_ERR_OUT_OF_RANGE: return kExitUsage;
    default: return kExitFailure;
    }
}

struct Options {
    std::string identity;
    uint64_t from = 1;
    uint64_t to = 1;
    uint32_t points = 0;
    std::string filter = "all";
    std::string emit = "csv";
    std::string out;
    uint64_t budget = 0;
    bool allow_large = false;
    std::vector<uint64_t> xs;
};

primelab_format format_of(const Options& o)
{
    return o.emit == "json" ? PRIMELAB_FORMAT_JSON : PRIMELAB_FORMAT_CSV;
}

const char* path_of(const Options& o) { return o.out.empty() ? nullptr : o.out.c_str(); }

int run_mode(primelab_mode mode, const Options& o)
{
    primelab_config cfg;
    primelab_config_init(&cfg);
    cfg.mode = mode;
    cfg.identity = o.identity.c_str();
    cfg.from = o.from;
    cfg.to = o.to;
    cfg.points = o.points;
    cfg.filter = o.filter == "all" ? PRIMELAB_FILTER_ALL : PRIMELAB_FILTER_ODD;
    if (o.budget != 0)
        cfg.sieve_budget = o.budget;
    cfg.allow_large = o.allow_large ? 1 : 0;

    if (auto st = primelab_config_validate(&cfg); st != PRIMELAB_OK)
        return report_error(st);
    int with_omega = 0;
    if (auto st = primelab_identity_needs_omega(cfg.identity, &with_omega); st != PRIMELAB_OK)
        return report_error(st);

    primelab_tables* raw_tables = nullptr;
    if (auto st = primelab_tables_create(cfg.to, with_omega, &raw_tables); st != PRIMELAB_OK)
        return report_error(st);
    const TablesPtr tables(raw_tables);

    primelab_run* raw_run = nullptr;
    if (auto st = primelab_run_execute(&cfg, tables.get(), &raw_run); st != PRIMELAB_OK)
        return report_error(st);
    const RunPtr run(raw_run);

    if (auto st = primelab_run_export(run.get(), format_of(o), path_of(o)); st != PRIMELAB_OK)
        return report_error(st);

    primelab_summary s;
    primelab_run_summary(run.get(), &s);
    std::fprintf(stderr,
                 "%s: rows=%llu mismatches=%llu max_abs_diff=%.12g max_scaled_diff=%.12g wall=%.3fs\n",
                 s.identity, static_cast<unsigned long long>(s.rows_evaluated),
                 static_cast<unsigned long long>(s.mismatches), s.max_abs_diff, s.max_scaled_diff,
                 s.wall_time_seconds);
    return s.mismatches == 0 ? kExitOk : kExitFailure;
}

int run_table(const Options& o)
{
    if (o.xs.empty()) {
        std::fprintf(stderr, "primelab: --x needs at least one point\n");
        return kExitUsage;
    }
    const uint64_t limit = *std::max_element(o.xs.begin(), o.xs.end());
    const uint64_t budget = o.budget != 0 ? o.budget : 10'000'000;
    if (limit > budget && !o.allow_large) {
        std::fprintf(stderr, "primelab: x = %llu exceeds the sieve budget %llu (pass --allow-large)\n",
                     static_cast<unsigned long long>(limit), static_cast<unsigned long long>(budget));
        return kExitUsage;
    }
    primelab_tables* raw_tables = nullptr;
    if (auto st = primelab_tables_create(limit, 1, &raw_tables); st != PRIMELAB_OK)
        return report_error(st);
    const TablesPtr tables(raw_tables);
    if (auto st = primelab_points_export(tables.get(), o.xs.data(), o.xs.size(), format_of(o), path_of(o));
        st != PRIMELAB_OK)
        return report_error(st);
    return kExitOk;
}

void add_output_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out, "Output path (default: standard output)");
    cmd->add_option("--sieve-budget", o.budget, "Largest x sieved without --allow-large (default 10000000)");
    cmd->add_flag("--allow-large", o.allow_large, "Permit ranges beyond the sieve budget");
}

void add_range_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--from", o.from, "First x")->required();
    cmd->add_option("--to", o.to, "Last x")->required();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"primelab: exact and empirical checks of prime-counting identities"};
    app.require_subcommand(1);

    Options o;

    auto* verify = app.add_subcommand("verify", "Check an identity at every grid point");
    verify->add_option("identity", o.identity,
                       "general | pi-formula | frac-sum | integrals | theta-estimate | nu | r | eta | dusart")
        ->required();
    add_range_flags(verify, o);
    verify->add_option("--points", o.points, "Geometric grid size (default: every integer)");
    verify->add_option("--filter", o.filter, "frac-sum filter")->check(CLI::IsMember({"all", "odd"}));
    add_output_flags(verify, o);

    auto* scan = app.add_subcommand("scan", "Measure an estimator's error on a geometric grid");
    scan->add_option("estimator", o.identity, "theta-estimate | nu | r | eta | dusart")->required();
    add_range_flags(scan, o);
    scan->add_option("--points", o.points, "Geometric grid size")->required();
    add_output_flags(scan, o);

    auto* table = app.add_subcommand("table", "Print every quantity at the listed points");
    table->add_option("--x", o.xs, "Comma-separated points, each >= 2")->required()->delimiter(',');
    add_output_flags(table, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (*verify)
        return run_mode(PRIMELAB_MODE_VERIFY, o);
    if (*scan)
        return run_mode(PRIMELAB_MODE_SCAN, o);
    return run_table(o);
}
