// identities.hpp
// Both sides of the odd floor-log identity, the exact prime-counting
// formula built on it, the estimators derived from that formula, the
// closed-form step-function integrals, and the Dusart bounds.
//
// Notation used below:
//   lg(x/n)   = log2(x / n)
//   S2(x)     = sum over odd n <= x with Omega(n) >= 2 of lg(x/n)
//
// Functions taking tables throw std::out_of_range when a table does not
// cover x, and std::invalid_argument when x is below the stated minimum.

#pragma once

#include "primelab/exact_math.hpp"
#include "primelab/sieve.hpp"

#include <cstdint>
#include <vector>

namespace primelab {

enum class FracFilter { all, odd_only };

// sum over odd n <= x of floor(lg(x/n)), one term at a time. O(x).
std::uint64_t odd_floor_sum(std::uint64_t x);

// floor(x / 2): (x-1)/2 for odd x, x/2 for even x.
std::uint64_t rhs_general(std::uint64_t x);

// odd_floor_sum(x) for every x in [0, x_max] (entry 0 is 0) in O(x_max).
// floor(lg(x/n)) counts the j >= 1 with n * 2^j <= x, so each pair (n, j)
// with n odd and n * 2^j <= x_max is dropped into a bucket at n * 2^j and a
// prefix sum over buckets yields the sum for every x at once.
std::vector<std::uint64_t> odd_floor_sums(std::uint64_t x_max);

// Compensated sum of {lg(x/n)} over n <= x (all or odd n only). O(x).
double frac_sum(std::uint64_t x, FracFilter filter);

// x/log 2 - x - log x/log 4
double frac_sum_main_terms(std::uint64_t x);

// x/log 4 - x/2 - log x/log 16, the main terms the odd-only sum is matched
// against in the estimate for H - G + T.
double frac_sum_odd_main_terms(std::uint64_t x);

// Walks x = 1, 2, 3, ... and yields frac_sum for both filters in O(log x)
// per step, by splitting each sum into its real and floor parts:
//   sum {lg(x/n)} = (count * log x - sum log n) / log 2 - sum floor(lg(x/n))
// with the log n sums carried as running compensated sums and the floor sums
// counted as sum_{j>=1} #{n <= x / 2^j} (restricted to odd n where needed).
class FracSumSweep {
public:
    struct Values {
        std::uint64_t x;
        double all;
        double odd_only;
    };

    Values next();

private:
    std::uint64_t x_ = 0;
    CompensatedSum log_all_;
    CompensatedSum log_odd_;
};

struct HgtTriple {
    double h = 0.0;        // sum_{p<=x} {lg(x/p)}
    std::uint64_t g = 0;   // floor(lg x) + sum over odd Omega>=2 n of floor(lg(x/n))
    std::uint64_t t = 0;   // floor(lg(x/2))
};

// Direct evaluation. x >= 2.
HgtTriple hgt(std::uint64_t x, const PrimeTable& primes, const OmegaTable& omegas);

// [(x-1) log sqrt2 + theta(x) + log2 (H - G + T) + (1 + (-1)^x) log2 / 4] / log x
double pi_exact_formula(std::uint64_t x, const PrimeTable& primes, const OmegaTable& omegas);
double pi_exact_formula(std::uint64_t x, double theta, const HgtTriple& hgt);

// Evaluates H, G, T at many x against the same tables.
//  - log p for every prime is computed once and reused for every x.
//  - G's floor sum is sum_{j>=1} C(x >> j), where C(m) counts odd n <= m
//    with Omega(n) >= 2, kept as a prefix table. O(log x) per x instead of
//    O(x).
// H is still summed term by term (pi(x) terms), so a sweep over [2, X]
// costs about X * pi(X) / 2 fractional parts.
class HgtSweep {
public:
    HgtSweep(const PrimeTable& primes, const OmegaTable& omegas, std::uint64_t x_max);

    HgtTriple at(std::uint64_t x) const;
    double pi_formula(std::uint64_t x) const;

private:
    const PrimeTable* primes_;
    std::uint64_t x_max_;
    std::vector<double> log_p_;
    std::vector<std::uint32_t> odd_composite_count_;
};

// S2(x), compensated. x >= 1.
double s2_odd_log_sum(std::uint64_t x, const OmegaTable& omegas);

// theta/log x + x/(2 log x) - 1/4 - (log 2/log x) S2(x)
double big_theta(std::uint64_t x, const PrimeTable& primes, const OmegaTable& omegas);
// 3x/(2 log x) - 1/4 - (log 2/log x) S2(x)
double nu(std::uint64_t x, const OmegaTable& omegas);
// x/(2 log x) - 1/4 - (log 2/log x) S2(x)
double r_estimate(std::uint64_t x, const OmegaTable& omegas);
// x/2 - log x/4 - log 2 S2(x)
double eta_estimate(std::uint64_t x, const OmegaTable& omegas);

// Same estimators from precomputed theta(x) and S2(x).
double big_theta(std::uint64_t x, double theta, double s2);
double nu(std::uint64_t x, double s2);
double r_estimate(std::uint64_t x, double s2);
double eta_estimate(std::uint64_t x, double s2);

// int_2^x theta(t) / (t log^2 t) dt. theta jumps by log p at each prime, so
// the integral is sum_{p<=x} (1 - log p / log x).
double integral_theta_closed(std::uint64_t x, const PrimeTable& primes);

// int_2^x pi(t) / t dt = sum_{p<=x} (log x - log p).
double integral_pi_closed(std::uint64_t x, const PrimeTable& primes);

enum class BoundStatus { holds, fails, not_applicable };

inline constexpr std::uint64_t kDusartLowerThreshold = 88783;
inline constexpr std::uint64_t kDusartUpperThreshold = 2953652287ULL;

struct DusartResult {
    BoundStatus lower = BoundStatus::not_applicable;
    BoundStatus upper = BoundStatus::not_applicable;
    double lower_bound = 0.0;   // x/L + x/L^2 + 2x/L^3
    double upper_bound = 0.0;   // x/L + x/L^2 + 2.334x/L^3
    double lower_margin = 0.0;  // pi - lower_bound
    double upper_margin = 0.0;  // upper_bound - pi
};

DusartResult dusart_check(std::uint64_t x, const PrimeTable& primes);
DusartResult dusart_check(std::uint64_t x, std::uint64_t pi);

const char* to_string(BoundStatus s) noexcept;

} // namespace primelab
