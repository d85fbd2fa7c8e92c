#include "primelab/exact_math.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace primelab {

namespace {

void check_ratio_args(std::uint64_t x, std::uint64_t n)
{
    if (n == 0 || n > x)
        throw std::invalid_argument("floor_log2_ratio: need 1 <= n <= x");
}

// bit_width(n) + k == bit_width(x) <= 64, so the shift never overflows.
FloorLogResult floor_log2_ratio_unchecked(std::uint64_t x, std::uint64_t n) noexcept
{
    auto k = static_cast<std::uint32_t>(std::bit_width(x) - std::bit_width(n));
    if ((n << k) > x)
        --k;
    return {k, (n << k) == x};
}

} // namespace

FloorLogResult floor_log2_ratio(std::uint64_t x, std::uint64_t n)
{
    check_ratio_args(x, n);
    return floor_log2_ratio_unchecked(x, n);
}

double frac_log2_ratio(std::uint64_t x, std::uint64_t n, double log_x, double log_n) noexcept
{
    const FloorLogResult fl = floor_log2_ratio_unchecked(x, n);
    if (fl.exact_power_hit)
        return 0.0;
    double f = (log_x - log_n) / kLn2 - static_cast<double>(fl.k);
    // Rounding can push a value within an ulp of an integer across it.
    if (f < 0.0)
        f = 0.0;
    else if (f >= 1.0)
        f = std::nextafter(1.0, 0.0);
    return f;
}

double frac_log2_ratio(std::uint64_t x, std::uint64_t n)
{
    check_ratio_args(x, n);
    return frac_log2_ratio(x, n, std::log(static_cast<double>(x)),
                           std::log(static_cast<double>(n)));
}

double log_factorial_exact(std::uint64_t x)
{
    if (x == 0)
        throw std::invalid_argument("log_factorial_exact: x must be positive");
    CompensatedSum s;
    for (std::uint64_t n = 2; n <= x; ++n)
        s += std::log(static_cast<double>(n));
    return s.value();
}

double stirling_main_terms(std::uint64_t x)
{
    if (x == 0)
        throw std::invalid_argument("stirling_main_terms: x must be positive");
    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);
    const double log_sqrt_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return xd * lx - xd + 0.5 * lx + log_sqrt_2pi;
}

} // namespace primelab

extern "C" {
#include <quadmath.h>
}

namespace primelab {

namespace {

__float128 stirling_main_terms_q(std::uint64_t x)
{
    const __float128 xq = static_cast<__float128>(x);
    const __float128 lx = logq(xq);
    return xq * lx - xq + 0.5Q * lx + 0.5Q * logq(2.0Q * M_PIq);
}

} // namespace

double stirling_remainder(std::uint64_t x)
{
    if (x == 0)
        throw std::invalid_argument("stirling_remainder: x must be positive");
    __float128 lf = 0;
    for (std::uint64_t n = 2; n <= x; ++n)
        lf += logq(static_cast<__float128>(n));
    return static_cast<double>(lf - stirling_main_terms_q(x));
}

std::vector<double> stirling_remainders(std::uint64_t x_max)
{
    if (x_max == 0)
        throw std::invalid_argument("stirling_remainders: x_max must be positive");
    std::vector<double> out;
    out.reserve(x_max);
    __float128 lf = 0;
    for (std::uint64_t x = 1; x <= x_max; ++x) {
        if (x > 1)
            lf += logq(static_cast<__float128>(x));
        out.push_back(static_cast<double>(lf - stirling_main_terms_q(x)));
    }
    return out;
}

} // namespace primelab
