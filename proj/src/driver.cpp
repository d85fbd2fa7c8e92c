#include "primelab/driver.hpp"

#include "primelab/exact_math.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

namespace primelab {

namespace {

struct Label {
    std::string_view text;
    Identity id;
};

constexpr Label kLabels[] = {
    {"general", Identity::general},
    {"pi-formula", Identity::pi_formula},
    {"frac-sum", Identity::frac_sum},
    {"integrals", Identity::integrals},
    {"theta-estimate", Identity::theta_estimate},
    {"nu", Identity::nu},
    {"r", Identity::r},
    {"eta", Identity::eta},
    {"dusart", Identity::dusart},
};

double ln(std::uint64_t v) { return std::log(static_cast<double>(v)); }

std::uint64_t min_x(Identity id) { return id == Identity::general || id == Identity::frac_sum ? 1 : 2; }

double scale_of(std::initializer_list<double> vs)
{
    double s = 1.0;
    for (double v : vs)
        s = std::max(s, std::abs(v));
    return s;
}

// S2(x) at every x in [0, x_max] from running sums over odd n with
// Omega(n) >= 2: S2(x) = (count * log x - sum log n) / log 2.
std::vector<double> s2_running(std::uint64_t x_max, const OmegaTable& omegas)
{
    std::vector<double> out(x_max + 1, 0.0);
    std::uint64_t count = 0;
    CompensatedSum logs;
    for (std::uint64_t x = 1; x <= x_max; ++x) {
        if (x % 2 == 1 && omegas[x] >= 2) {
            ++count;
            logs += ln(x);
        }
        out[x] = count == 0 ? 0.0 : (static_cast<double>(count) * ln(x) - logs.value()) / kLn2;
    }
    return out;
}

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const OmegaTable& omegas_of(const Tables& tables)
{
    if (!tables.omegas)
        throw ConfigError("this identity needs an Omega table");
    return *tables.omegas;
}

void require_tables_cover(const ScanConfig& config, const Tables& tables)
{
    if (tables.primes.limit() < config.to)
        throw ConfigError("prime table does not cover --to");
    if (needs_omega_table(config.identity) && omegas_of(tables).limit() < config.to)
        throw ConfigError("Omega table does not cover --to");
}

void add_row(VerifyResult& res, IdentityRow row)
{
    RunSummary& s = res.summary;
    ++s.rows_evaluated;
    if (!row.exact_match) {
        ++s.mismatches;
        ++res.report.mismatch_count;
    }
    const double a = std::abs(row.diff);
    s.max_abs_diff = std::max(s.max_abs_diff, a);
    if (row.x >= 2)
        s.max_scaled_diff = std::max(s.max_scaled_diff, a * ln(row.x));
    res.report.rows.push_back(std::move(row));
}

void verify_general(const std::vector<std::uint64_t>& grid, std::uint64_t to, VerifyResult& res)
{
    const auto lhs = odd_floor_sums(to);
    // Third route: count the even integers directly.
    std::vector<std::uint64_t> evens(to + 1, 0);
    for (std::uint64_t x = 1; x <= to; ++x)
        evens[x] = evens[x - 1] + (x % 2 == 0 ? 1 : 0);
    for (std::uint64_t x : grid) {
        const std::uint64_t rhs = rhs_general(x);
        add_row(res, {x, static_cast<std::int64_t>(lhs[x]), static_cast<std::int64_t>(rhs),
                      static_cast<double>(static_cast<std::int64_t>(lhs[x]) - static_cast<std::int64_t>(rhs)),
                      lhs[x] == rhs && rhs == evens[x]});
    }
}

void verify_pi_formula(const std::vector<std::uint64_t>& grid, std::uint64_t to, const Tables& tables,
                       VerifyResult& res)
{
    const HgtSweep sweep(tables.primes, omegas_of(tables), to);
    for (std::uint64_t x : grid) {
        const std::uint64_t pi = tables.primes.pi(x);
        const double raw = sweep.pi_formula(x);
        const double diff = raw - static_cast<double>(pi);
        const bool ok = std::abs(diff) < kPiFormulaTolerance &&
                        std::llround(raw) == static_cast<long long>(pi);
        add_row(res, {x, static_cast<std::int64_t>(pi), raw, diff, ok});
    }
}

void verify_frac_sum(const std::vector<std::uint64_t>& grid, FracFilter filter, VerifyResult& res)
{
    const double bound = filter == FracFilter::all ? kFracResidualBoundAll : kFracResidualBoundOdd;
    FracSumSweep sweep;
    FracSumSweep::Values v{};
    for (std::uint64_t x : grid) {
        while (v.x < x)
            v = sweep.next();
        const double lhs = filter == FracFilter::all ? v.all : v.odd_only;
        const double rhs = filter == FracFilter::all ? frac_sum_main_terms(x) : frac_sum_odd_main_terms(x);
        const double diff = lhs - rhs;
        add_row(res, {x, lhs, rhs, diff, std::abs(diff) <= bound});
    }
}

void verify_integrals(const std::vector<std::uint64_t>& grid, const Tables& tables, VerifyResult& res)
{
    for (std::uint64_t x : grid) {
        const double pi = static_cast<double>(tables.primes.pi(x));
        const double theta = tables.primes.theta(x);
        const double lx = ln(x);
        const double it = integral_theta_closed(x, tables.primes);
        const double ip = integral_pi_closed(x, tables.primes);
        const double it_ref = pi - theta / lx;
        const double ip_ref = pi * lx - theta;
        const double rel_t = std::abs(it - it_ref) / scale_of({it, it_ref});
        const double rel_p = std::abs(ip - ip_ref) / scale_of({ip, ip_ref});
        const double worst = std::max(rel_t, rel_p);
        add_row(res, {x, it, it_ref, worst, worst <= kIntegralRelTolerance});
    }
}

void verify_estimator(Identity id, const std::vector<std::uint64_t>& grid, bool dense, std::uint64_t to,
                      const Tables& tables, VerifyResult& res)
{
    const OmegaTable& omegas = omegas_of(tables);
    std::vector<double> running;
    if (dense)
        running = s2_running(to, omegas);
    for (std::uint64_t x : grid) {
        const double s2 = dense ? running[x] : s2_odd_log_sum(x, omegas);
        const double theta = tables.primes.theta(x);
        const double lx = ln(x);
        const double xd = static_cast<double>(x);
        const double bt = big_theta(x, theta, s2);
        const double r = r_estimate(x, s2);
        double lhs = 0.0;
        double rhs = 0.0;
        double scale = 1.0;
        switch (id) {
        case Identity::theta_estimate:
            lhs = bt - theta / lx;
            rhs = r;
            scale = scale_of({bt, theta / lx, r});
            break;
        case Identity::nu:
            lhs = nu(x, s2);
            rhs = bt - theta / lx + xd / lx;
            scale = scale_of({lhs, bt, theta / lx, xd / lx});
            break;
        case Identity::r:
            lhs = r;
            rhs = nu(x, s2) - xd / lx;
            scale = scale_of({lhs, rhs, xd / lx});
            break;
        case Identity::eta:
            lhs = eta_estimate(x, s2);
            rhs = r * lx;
            scale = scale_of({lhs, rhs});
            break;
        default:
            throw ConfigError("not an estimator");
        }
        const double diff = lhs - rhs;
        add_row(res, {x, lhs, rhs, diff, std::abs(diff) <= kEstimatorTolerance * scale});
    }
}

void verify_dusart(const std::vector<std::uint64_t>& grid, const Tables& tables, VerifyResult& res)
{
    for (std::uint64_t x : grid) {
        const std::uint64_t pi = tables.primes.pi(x);
        const DusartResult d = dusart_check(x, pi);
        const bool ok = d.lower != BoundStatus::fails && d.upper != BoundStatus::fails;
        add_row(res, {x, static_cast<std::int64_t>(pi), d.lower_bound, d.lower_margin, ok});
    }
}

} // namespace

std::optional<Identity> parse_identity(std::string_view label)
{
    for (const Label& l : kLabels)
        if (l.text == label)
            return l.id;
    return std::nullopt;
}

std::string_view to_string(Identity id) noexcept
{
    for (const Label& l : kLabels)
        if (l.id == id)
            return l.text;
    return "unknown";
}

std::optional<Format> parse_format(std::string_view label)
{
    if (label == "csv")
        return Format::csv;
    if (label == "json")
        return Format::json;
    return std::nullopt;
}

std::optional<FracFilter> parse_filter(std::string_view label)
{
    if (label == "all")
        return FracFilter::all;
    if (label == "odd" || label == "odd_only" || label == "odd-only")
        return FracFilter::odd_only;
    return std::nullopt;
}

bool is_estimator(Identity id) noexcept
{
    switch (id) {
    case Identity::theta_estimate:
    case Identity::nu:
    case Identity::r:
    case Identity::eta:
    case Identity::dusart:
        return true;
    default:
        return false;
    }
}

bool needs_omega_table(Identity id) noexcept
{
    switch (id) {
    case Identity::pi_formula:
    case Identity::theta_estimate:
    case Identity::nu:
    case Identity::r:
    case Identity::eta:
        return true;
    default:
        return false;
    }
}

void validate(const ScanConfig& c)
{
    if (c.from < 1 || c.from > c.to)
        throw ConfigError("invalid range: need 1 <= --from <= --to");
    if (c.from < min_x(c.identity))
        throw ConfigError(std::string(to_string(c.identity)) + " needs --from >= 2");
    if (c.points == 1)
        throw ConfigError("a geometric grid needs at least 2 points");
    if (c.mode == Mode::scan) {
        if (!is_estimator(c.identity))
            throw ConfigError(std::string(to_string(c.identity)) + " is not an estimator; use verify");
        if (c.points == 0)
            throw ConfigError("scan needs --points");
    }
    if (c.to > c.sieve_budget && !c.allow_large)
        throw ConfigError("--to " + std::to_string(c.to) + " exceeds the sieve budget " +
                          std::to_string(c.sieve_budget) + " (pass --allow-large to override)");
}

std::vector<std::uint64_t> build_grid(std::uint64_t from, std::uint64_t to, std::uint32_t points)
{
    std::vector<std::uint64_t> grid;
    if (from > to)
        return grid;
    if (points == 0) {
        grid.reserve(to - from + 1);
        for (std::uint64_t x = from; x <= to; ++x)
            grid.push_back(x);
        return grid;
    }
    const double lo = std::log(static_cast<double>(from));
    const double hi = std::log(static_cast<double>(to));
    for (std::uint32_t i = 0; i < points; ++i) {
        std::uint64_t x;
        if (i == 0)
            x = from;
        else if (i + 1 == points)
            x = to;
        else
            x = static_cast<std::uint64_t>(std::llround(std::exp(lo + (hi - lo) * i / (points - 1))));
        x = std::clamp(x, from, to);
        if (grid.empty() || grid.back() != x)
            grid.push_back(x);
    }
    return grid;
}

Tables build_tables(std::uint64_t limit, bool with_omegas)
{
    Tables t{build_prime_table(limit), std::nullopt};
    if (with_omegas)
        t.omegas = build_omega_table(limit);
    return t;
}

VerifyResult run_verify(const ScanConfig& config, const Tables& tables)
{
    validate(config);
    require_tables_cover(config, tables);
    const Stopwatch clock;

    VerifyResult res;
    res.summary.identity = std::string(to_string(config.identity));
    res.report.identity_name = res.summary.identity;
    const auto grid = build_grid(config.from, config.to, config.points);
    res.report.rows.reserve(grid.size());

    switch (config.identity) {
    case Identity::general:
        verify_general(grid, config.to, res);
        break;
    case Identity::pi_formula:
        verify_pi_formula(grid, config.to, tables, res);
        break;
    case Identity::frac_sum:
        verify_frac_sum(grid, config.filter, res);
        break;
    case Identity::integrals:
        verify_integrals(grid, tables, res);
        break;
    case Identity::theta_estimate:
    case Identity::nu:
    case Identity::r:
    case Identity::eta:
        verify_estimator(config.identity, grid, config.points == 0, config.to, tables, res);
        break;
    case Identity::dusart:
        verify_dusart(grid, tables, res);
        break;
    }
    res.summary.wall_time_seconds = clock.seconds();
    return res;
}

ScanResult run_scan(const ScanConfig& config, const Tables& tables)
{
    ScanConfig c = config;
    c.mode = Mode::scan;
    validate(c);
    require_tables_cover(c, tables);
    const Stopwatch clock;

    ScanResult res;
    res.summary.identity = std::string(to_string(c.identity));
    for (std::uint64_t x : build_grid(c.from, c.to, c.points)) {
        EstimateRecord rec;
        rec.x = x;
        rec.pi = tables.primes.pi(x);
        rec.theta = tables.primes.theta(x);
        const double lx = ln(x);
        bool failed = false;
        if (c.identity == Identity::dusart) {
            const DusartResult d = dusart_check(x, rec.pi);
            rec.estimate = d.lower_bound;
            failed = d.lower == BoundStatus::fails || d.upper == BoundStatus::fails;
        } else {
            const double s2 = s2_odd_log_sum(x, omegas_of(tables));
            switch (c.identity) {
            case Identity::theta_estimate: rec.estimate = big_theta(x, rec.theta, s2); break;
            case Identity::nu: rec.estimate = nu(x, s2); break;
            // Integral estimators are reported through the pi estimate they
            // imply via the step-function identities.
            case Identity::r: rec.estimate = rec.theta / lx + r_estimate(x, s2); break;
            case Identity::eta: rec.estimate = (rec.theta + eta_estimate(x, s2)) / lx; break;
            default: throw ConfigError("not an estimator");
            }
        }
        rec.raw_error = static_cast<double>(rec.pi) - rec.estimate;
        rec.scaled_error = rec.raw_error * lx;

        RunSummary& s = res.summary;
        ++s.rows_evaluated;
        if (failed)
            ++s.mismatches;
        s.max_abs_diff = std::max(s.max_abs_diff, std::abs(rec.raw_error));
        s.max_scaled_diff = std::max(s.max_scaled_diff, std::abs(rec.scaled_error));
        res.records.push_back(rec);
    }
    res.summary.wall_time_seconds = clock.seconds();
    return res;
}

PointQuantities evaluate_point(std::uint64_t x, const Tables& tables)
{
    if (x < 2)
        throw ConfigError("table: x must be >= 2");
    const OmegaTable& omegas = omegas_of(tables);
    PointQuantities q;
    q.x = x;
    q.pi = tables.primes.pi(x);
    q.theta = tables.primes.theta(x);
    q.hgt = hgt(x, tables.primes, omegas);
    q.pi_formula = pi_exact_formula(x, q.theta, q.hgt);
    const double s2 = s2_odd_log_sum(x, omegas);
    q.big_theta = big_theta(x, q.theta, s2);
    q.nu = nu(x, s2);
    q.r = r_estimate(x, s2);
    q.eta = eta_estimate(x, s2);
    q.integral_theta = integral_theta_closed(x, tables.primes);
    q.integral_pi = integral_pi_closed(x, tables.primes);
    return q;
}

} // namespace primelab
