#include "primelab/sieve.hpp"

#include "primelab/exact_math.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace primelab {

namespace {

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// Odd primes up to `limit` by a plain sieve; used for the base primes.
std::vector<std::uint32_t> small_odd_primes(std::uint64_t limit)
{
    std::vector<std::uint32_t> out;
    if (limit < 3)
        return out;
    // index i <-> 2i + 1
    std::vector<bool> composite(limit / 2 + 1, false);
    for (std::uint64_t i = 1; 2 * i + 1 <= limit; ++i) {
        if (composite[i])
            continue;
        const std::uint64_t p = 2 * i + 1;
        out.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p)
            composite[m / 2] = true;
    }
    return out;
}

[[noreturn]] void out_of_range(const char* what, std::uint64_t x, std::uint64_t limit)
{
    throw std::out_of_range(std::string(what) + ": argument " + std::to_string(x) +
                            " outside [1, " + std::to_string(limit) + "]");
}

} // namespace

PrimeTable build_prime_table(std::uint64_t limit, std::size_t segment_bytes)
{
    if (limit == 0)
        throw std::invalid_argument("build_prime_table: limit must be positive");
    if (segment_bytes == 0)
        throw std::invalid_argument("build_prime_table: segment size must be positive");

    PrimeTable t;
    t.limit_ = limit;
    if (limit >= 2)
        t.primes_.push_back(2);

    const auto base = small_odd_primes(isqrt(limit));
    // Each segment byte flags one odd number; seg_lo is odd.
    std::vector<std::uint8_t> seg(segment_bytes);
    std::vector<std::uint64_t> next(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        next[i] = std::uint64_t{base[i]} * base[i];

    for (std::uint64_t seg_lo = 3; seg_lo <= limit; seg_lo += 2 * segment_bytes) {
        const std::uint64_t span_odds = std::min<std::uint64_t>(segment_bytes, (limit - seg_lo) / 2 + 1);
        const std::uint64_t seg_hi = seg_lo + 2 * (span_odds - 1);
        std::fill_n(seg.begin(), span_odds, std::uint8_t{1});
        for (std::size_t i = 0; i < base.size(); ++i) {
            const std::uint64_t step = 2 * std::uint64_t{base[i]};
            std::uint64_t m = next[i];
            for (; m <= seg_hi; m += step)
                seg[(m - seg_lo) / 2] = 0;
            next[i] = m;
        }
        for (std::uint64_t j = 0; j < span_odds; ++j)
            if (seg[j])
                t.primes_.push_back(seg_lo + 2 * j);
    }

    t.cumulative_log_.reserve(t.primes_.size());
    CompensatedSum acc;
    for (std::uint64_t p : t.primes_) {
        acc += std::log(static_cast<double>(p));
        t.cumulative_log_.push_back(acc.value());
    }
    return t;
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const
{
    if (x == 0 || x > limit_)
        out_of_range("pi_of", x, limit_);
    return static_cast<std::uint64_t>(
        std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

double PrimeTable::theta(std::uint64_t x) const
{
    const std::uint64_t count = pi(x);
    return count == 0 ? 0.0 : cumulative_log_[count - 1];
}

std::uint64_t pi_of(const PrimeTable& table, std::uint64_t x) { return table.pi(x); }

double theta_of(const PrimeTable& table, std::uint64_t x) { return table.theta(x); }

OmegaTable build_omega_table(std::uint64_t limit)
{
    if (limit == 0)
        throw std::invalid_argument("build_omega_table: limit must be positive");
    if (limit > std::uint64_t{0xFFFFFFFF})
        throw std::invalid_argument("build_omega_table: limit exceeds 32-bit index range");

    OmegaTable t;
    t.limit_ = limit;
    t.omega_.assign(limit + 1, 0);

    // Smallest prime factor for every n; the linear sieve touches each
    // composite exactly once, as i * p with p = lpf(i * p).
    std::vector<std::uint32_t> lpf(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (lpf[i] == 0) {
            lpf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            t.omega_[i] = 1;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t m = i * p;
            if (p > lpf[i] || m > limit)
                break;
            lpf[m] = p;
            t.omega_[m] = static_cast<std::uint8_t>(t.omega_[i] + 1);
        }
    }
    return t;
}

unsigned omega_of(const OmegaTable& table, std::uint64_t n)
{
    if (n == 0 || n > table.limit())
        out_of_range("omega_of", n, table.limit());
    return table[n];
}

} // namespace primelab
