// exact_math.hpp
// Integer floor-logarithm of ratios, fractional parts, compensated
// summation and the log-factorial / Stirling pair.
//
// Floors are never taken from floating logarithms. floor(log2(x/n)) is the
// largest k with n * 2^k <= x, and is found from bit lengths plus a single
// integer comparison.

#pragma once

#include <cstdint>
#include <vector>

namespace primelab {

// Neumaier's variant of Kahan summation. Keeps the accumulated error near
// one rounding unit of the result regardless of term ordering.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if ((sum_ >= 0 ? sum_ : -sum_) >= (v >= 0 ? v : -v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double v) noexcept { add(v); return *this; }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct FloorLogResult {
    std::uint32_t k = 0;
    bool exact_power_hit = false;  // n * 2^k == x
};

// floor(log2(x / n)) for 1 <= n <= x. Throws std::invalid_argument otherwise.
FloorLogResult floor_log2_ratio(std::uint64_t x, std::uint64_t n);

// {log2(x / n)} in [0, 1), evaluated as (log x - log n)/log 2 - k.
// Exactly 0 when n * 2^k == x.
double frac_log2_ratio(std::uint64_t x, std::uint64_t n);

// Same as above with caller-supplied natural logs of x and n, for hot loops
// that reuse a log table. No argument validation beyond 1 <= n <= x.
double frac_log2_ratio(std::uint64_t x, std::uint64_t n, double log_x, double log_n) noexcept;

// log(x!) = sum_{n<=x} log n, compensated. Throws on x == 0.
double log_factorial_exact(std::uint64_t x);

// x log x - x + (1/2) log x + log sqrt(2 pi). Throws on x == 0.
double stirling_main_terms(std::uint64_t x);

// log(x!) - stirling_main_terms(x), with both sides carried in binary128 so
// the remainder keeps full double accuracy. In plain double the subtraction
// loses everything below ulp(log x!), which exceeds the distance to the
// Robbins upper bound 1/(12x) once x reaches a few thousand.
double stirling_remainder(std::uint64_t x);

// stirling_remainder for every x in [1, x_max]; entry i holds x = i + 1.
// One running binary128 sum, so O(x_max) instead of O(x_max^2).
std::vector<double> stirling_remainders(std::uint64_t x_max);

inline constexpr double kLn2 = 0.693147180559945309417232121458176568;

} // namespace primelab
