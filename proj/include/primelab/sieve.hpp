// sieve.hpp
// Prime and Omega tables. Both are built once and then immutable, so every
// query is a pure read and safe from any number of threads.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace primelab {

// Sized to sit in L1/L2 alongside the base-prime list.
inline constexpr std::size_t kDefaultSegmentBytes = std::size_t{1} << 18;

class PrimeTable {
public:
    std::uint64_t limit() const noexcept { return limit_; }

    // Ascending primes in [2, limit].
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }

    // Entry i is log(p_0) + ... + log(p_i), accumulated with compensation
    // and rounded once per entry.
    std::span<const double> cumulative_log() const noexcept { return cumulative_log_; }

    std::uint64_t pi(std::uint64_t x) const;
    double theta(std::uint64_t x) const;

    bool operator==(const PrimeTable&) const = default;

private:
    friend PrimeTable build_prime_table(std::uint64_t, std::size_t);

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<double> cumulative_log_;
};

// Segmented sieve of Eratosthenes over odd numbers. limit == 0 throws
// std::invalid_argument.
PrimeTable build_prime_table(std::uint64_t limit,
                             std::size_t segment_bytes = kDefaultSegmentBytes);

// pi(x) and theta(x). Throw std::out_of_range unless 1 <= x <= table.limit().
std::uint64_t pi_of(const PrimeTable& table, std::uint64_t x);
double theta_of(const PrimeTable& table, std::uint64_t x);

class OmegaTable {
public:
    std::uint64_t limit() const noexcept { return limit_; }

    // Omega(n) for n in [0, limit]; index 0 is unused and holds 0.
    std::span<const std::uint8_t> counts() const noexcept { return omega_; }

    std::uint8_t operator[](std::uint64_t n) const noexcept { return omega_[n]; }

    bool operator==(const OmegaTable&) const = default;

private:
    friend OmegaTable build_omega_table(std::uint64_t);

    std::uint64_t limit_ = 0;
    std::vector<std::uint8_t> omega_;
};

// Linear sieve. Omega(n) < 64 for n < 2^64, so 8 bits always suffice.
OmegaTable build_omega_table(std::uint64_t limit);

// Throws std::out_of_range unless 1 <= n <= table.limit().
unsigned omega_of(const OmegaTable& table, std::uint64_t n);

} // namespace primelab
