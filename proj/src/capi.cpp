#include "primelab/primelab.h"

#include "primelab/driver.hpp"
#include "primelab/exact_math.hpp"
#include "primelab/report.hpp"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <variant>

using namespace primelab;

struct primelab_tables {
    Tables tables;
};

struct primelab_run {
    std::variant<VerifyResult, ScanResult> result;
};

namespace {

thread_local std::string g_last_error;

primelab_status fail(primelab_status status, const char* msg)
{
    g_last_error = msg;
    return status;
}

// Maps the core's exceptions onto status codes.
template <class F>
primelab_status guarded(F&& f)
{
    try {
        f();
        return PRIMELAB_OK;
    } catch (const ConfigError& e) {
        return fail(PRIMELAB_ERR_CONFIG, e.what());
    } catch (const IoError& e) {
        return fail(PRIMELAB_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PRIMELAB_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(PRIMELAB_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PRIMELAB_ERR_NO_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(PRIMELAB_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(PRIMELAB_ERR_INTERNAL, "unknown error");
    }
}

#define PRIMELAB_REQUIRE(cond)                                                   \
    do {                                                                         \
        if (!(cond))                                                             \
            return fail(PRIMELAB_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
    } while (0)

ScanConfig to_scan_config(const primelab_config& c)
{
    if (c.identity == nullptr)
        throw ConfigError("missing identity");
    const auto id = parse_identity(c.identity);
    if (!id)
        throw ConfigError(std::string("unknown identity: ") + c.identity);
    ScanConfig s;
    s.mode = c.mode == PRIMELAB_MODE_SCAN ? Mode::scan : Mode::verify;
    s.identity = *id;
    s.from = c.from;
    s.to = c.to;
    s.points = c.points;
    s.filter = c.filter == PRIMELAB_FILTER_ODD ? FracFilter::odd_only : FracFilter::all;
    s.sieve_budget = c.sieve_budget;
    s.allow_large = c.allow_large != 0;
    return s;
}

Format to_format(primelab_format f) { return f == PRIMELAB_FORMAT_JSON ? Format::json : Format::csv; }

std::string render_run(const primelab_run& run, Format f)
{
    if (const auto* v = std::get_if<VerifyResult>(&run.result))
        return render(v->report, f);
    const auto& s = std::get<ScanResult>(run.result);
    return render(s.summary.identity, s.records, f);
}

} // namespace

extern "C" {

const char* primelab_version(void) { return "1.0.0"; }

const char* primelab_last_error(void) { return g_last_error.c_str(); }

const char* primelab_status_string(primelab_status status)
{
    switch (status) {
    case PRIMELAB_OK: return "ok";
    case PRIMELAB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PRIMELAB_ERR_OUT_OF_RANGE: return "out of range";
    case PRIMELAB_ERR_CONFIG: return "configuration error";
    case PRIMELAB_ERR_IO: return "I/O error";
    case PRIMELAB_ERR_NO_MEMORY: return "out of memory";
    case PRIMELAB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

primelab_status primelab_tables_create(uint64_t limit, int with_omega, primelab_tables** out)
{
    PRIMELAB_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new primelab_tables{build_tables(limit, with_omega != 0)}; });
}

void primelab_tables_destroy(primelab_tables* tables) { delete tables; }

primelab_status primelab_tables_limit(const primelab_tables* tables, uint64_t* out)
{
    PRIMELAB_REQUIRE(tables && out);
    *out = tables->tables.primes.limit();
    return PRIMELAB_OK;
}

primelab_status primelab_pi(const primelab_tables* tables, uint64_t x, uint64_t* out)
{
    PRIMELAB_REQUIRE(tables && out);
    return guarded([&] { *out = pi_of(tables->tables.primes, x); });
}

primelab_status primelab_theta(const primelab_tables* tables, uint64_t x, double* out)
{
    PRIMELAB_REQUIRE(tables && out);
    return guarded([&] { *out = theta_of(tables->tables.primes, x); });
}

primelab_status primelab_omega(const primelab_tables* tables, uint64_t n, unsigned* out)
{
    PRIMELAB_REQUIRE(tables && out);
    if (!tables->tables.omegas)
        return fail(PRIMELAB_ERR_INVALID_ARGUMENT, "tables were created without an Omega table");
    return guarded([&] { *out = omega_of(*tables->tables.omegas, n); });
}

primelab_status primelab_floor_log2_ratio(uint64_t x, uint64_t n, uint32_t* k, int* exact_power_hit)
{
    PRIMELAB_REQUIRE(k);
    return guarded([&] {
        const FloorLogResult r = floor_log2_ratio(x, n);
        *k = r.k;
        if (exact_power_hit)
            *exact_power_hit = r.exact_power_hit ? 1 : 0;
    });
}

primelab_status primelab_frac_log2_ratio(uint64_t x, uint64_t n, double* out)
{
    PRIMELAB_REQUIRE(out);
    return guarded([&] { *out = frac_log2_ratio(x, n); });
}

primelab_status primelab_log_factorial(uint64_t x, double* out)
{
    PRIMELAB_REQUIRE(out);
    return guarded([&] { *out = log_factorial_exact(x); });
}

primelab_status primelab_stirling_main_terms(uint64_t x, double* out)
{
    PRIMELAB_REQUIRE(out);
    return guarded([&] { *out = stirling_main_terms(x); });
}

primelab_status primelab_evaluate_point(const primelab_tables* tables, uint64_t x, primelab_point* out)
{
    PRIMELAB_REQUIRE(tables && out);
    return guarded([&] {
        const PointQuantities q = evaluate_point(x, tables->tables);
        *out = primelab_point{q.x, q.pi, q.theta, q.hgt.h, q.hgt.g, q.hgt.t, q.pi_formula,
                              q.big_theta, q.nu, q.r, q.eta, q.integral_theta, q.integral_pi};
    });
}

primelab_status primelab_points_export(const primelab_tables* tables, const uint64_t* xs, size_t count,
                                       primelab_format format, const char* path)
{
    PRIMELAB_REQUIRE(tables && (xs || count == 0));
    return guarded([&] {
        std::vector<PointQuantities> pts;
        pts.reserve(count);
        for (size_t i = 0; i < count; ++i)
            pts.push_back(evaluate_point(xs[i], tables->tables));
        write_text(render(pts, to_format(format)), path ? path : "");
    });
}

void primelab_config_init(primelab_config* config)
{
    if (!config)
        return;
    *config = primelab_config{PRIMELAB_MODE_VERIFY, "general", 1, 1, 0, PRIMELAB_FILTER_ALL,
                              kDefaultSieveBudget, 0};
}

primelab_status primelab_config_validate(const primelab_config* config)
{
    PRIMELAB_REQUIRE(config);
    return guarded([&] { validate(to_scan_config(*config)); });
}

primelab_status primelab_identity_needs_omega(const char* identity, int* out)
{
    PRIMELAB_REQUIRE(identity && out);
    const auto id = parse_identity(identity);
    if (!id)
        return fail(PRIMELAB_ERR_CONFIG, (std::string("unknown identity: ") + identity).c_str());
    *out = needs_omega_table(*id) ? 1 : 0;
    return PRIMELAB_OK;
}

primelab_status primelab_run_execute(const primelab_config* config, const primelab_tables* tables,
                                     primelab_run** out)
{
    PRIMELAB_REQUIRE(config && tables && out);
    *out = nullptr;
    return guarded([&] {
        const ScanConfig c = to_scan_config(*config);
        if (c.mode == Mode::scan)
            *out = new primelab_run{run_scan(c, tables->tables)};
        else
            *out = new primelab_run{run_verify(c, tables->tables)};
    });
}

void primelab_run_destroy(primelab_run* run) { delete run; }

primelab_status primelab_run_summary(const primelab_run* run, primelab_summary* out)
{
    PRIMELAB_REQUIRE(run && out);
    const RunSummary& s = std::visit([](const auto& r) -> const RunSummary& { return r.summary; }, run->result);
    *out = primelab_summary{};
    std::strncpy(out->identity, s.identity.c_str(), sizeof out->identity - 1);
    out->rows_evaluated = s.rows_evaluated;
    out->mismatches = s.mismatches;
    out->max_abs_diff = s.max_abs_diff;
    out->max_scaled_diff = s.max_scaled_diff;
    out->wall_time_seconds = s.wall_time_seconds;
    return PRIMELAB_OK;
}

primelab_status primelab_run_export(const primelab_run* run, primelab_format format, const char* path)
{
    PRIMELAB_REQUIRE(run);
    return guarded([&] { write_text(render_run(*run, to_format(format)), path ? path : ""); });
}

primelab_status primelab_run_render(const primelab_run* run, primelab_format format, char* buf, size_t capacity,
                                    size_t* needed)
{
    PRIMELAB_REQUIRE(run && needed);
    return guarded([&] {
        const std::string text = render_run(*run, to_format(format));
        *needed = text.size();
        if (buf && capacity > text.size())
            std::memcpy(buf, text.c_str(), text.size() + 1);
    });
}

} // extern "C"
