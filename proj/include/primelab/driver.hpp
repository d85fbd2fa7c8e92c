// driver.hpp
// Run configuration, grids, and the verify / scan / table drivers behind
// the primelab command line.

#pragma once

#include "primelab/identities.hpp"
#include "primelab/sieve.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace primelab {

// Bad flags, unknown labels, ranges outside the sieve budget.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { verify, scan, table };

enum class Identity { general, pi_formula, frac_sum, integrals, theta_estimate, nu, r, eta, dusart };

enum class Format { csv, json };

std::optional<Identity> parse_identity(std::string_view label);
std::string_view to_string(Identity id) noexcept;
std::optional<Format> parse_format(std::string_view label);
std::optional<FracFilter> parse_filter(std::string_view label);

// Estimators accepted by scan; every identity is accepted by verify.
bool is_estimator(Identity id) noexcept;
bool needs_omega_table(Identity id) noexcept;

inline constexpr std::uint64_t kDefaultSieveBudget = 10'000'000;

// Frozen from a brute-force pass over x <= 10^4 (direct fractional parts,
// integer floors, exact summation): twice the largest |residual| seen.
// all-n:  max 11.674237257620007 at x = 8191
// odd-n:  max  3.321867978386763 at x = 9999
inline constexpr double kFracResidualBoundAll = 23.348474515240014;
inline constexpr double kFracResidualBoundOdd = 6.643735956773526;

inline constexpr double kPiFormulaTolerance = 1e-6;
inline constexpr double kIntegralRelTolerance = 1e-9;
inline constexpr double kEstimatorTolerance = 1e-10;

struct ScanConfig {
    Mode mode = Mode::verify;
    Identity identity = Identity::general;
    std::uint64_t from = 1;
    std::uint64_t to = 1;
    std::uint32_t points = 0;  // 0 = every integer, otherwise a geometric grid
    FracFilter filter = FracFilter::all;
    Format format = Format::csv;
    std::string output_path;   // empty = standard output
    std::uint64_t sieve_budget = kDefaultSieveBudget;
    bool allow_large = false;
};

// Throws ConfigError.
void validate(const ScanConfig& config);

// Every integer in [from, to] when points == 0. Otherwise `points` values
// from * (to/from)^(i/(points-1)), rounded to nearest and deduplicated.
std::vector<std::uint64_t> build_grid(std::uint64_t from, std::uint64_t to, std::uint32_t points);

struct Tables {
    PrimeTable primes;
    std::optional<OmegaTable> omegas;
};

Tables build_tables(std::uint64_t limit, bool with_omegas);

using Value = std::variant<std::int64_t, double>;

struct IdentityRow {
    std::uint64_t x = 0;
    Value lhs;
    Value rhs;
    double diff = 0.0;
    bool exact_match = false;
};

struct IdentityReport {
    std::string identity_name;
    std::vector<IdentityRow> rows;
    std::uint64_t mismatch_count = 0;
};

struct EstimateRecord {
    std::uint64_t x = 0;
    std::uint64_t pi = 0;
    double theta = 0.0;
    double estimate = 0.0;
    double raw_error = 0.0;     // pi - estimate
    double scaled_error = 0.0;  // raw_error * log x
};

struct RunSummary {
    std::string identity;
    std::uint64_t rows_evaluated = 0;
    std::uint64_t mismatches = 0;
    double max_abs_diff = 0.0;
    double max_scaled_diff = 0.0;
    double wall_time_seconds = 0.0;
};

struct VerifyResult {
    RunSummary summary;
    IdentityReport report;
};

struct ScanResult {
    RunSummary summary;
    std::vector<EstimateRecord> records;
};

// Tables must cover config.to (and carry an Omega table when the identity
// needs one). Throws ConfigError on a bad config.
VerifyResult run_verify(const ScanConfig& config, const Tables& tables);
ScanResult run_scan(const ScanConfig& config, const Tables& tables);

// Everything `primelab table` prints for one x >= 2.
struct PointQuantities {
    std::uint64_t x = 0;
    std::uint64_t pi = 0;
    double theta = 0.0;
    HgtTriple hgt;
    double pi_formula = 0.0;
    double big_theta = 0.0;
    double nu = 0.0;
    double r = 0.0;
    double eta = 0.0;
    double integral_theta = 0.0;
    double integral_pi = 0.0;
};

PointQuantities evaluate_point(std::uint64_t x, const Tables& tables);

} // namespace primelab
