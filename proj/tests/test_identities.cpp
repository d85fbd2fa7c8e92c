#include "primelab/identities.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace primelab;
using doctest::Approx;

namespace {

const PrimeTable& primes()
{
    static const PrimeTable t = build_prime_table(200'000);
    return t;
}

const OmegaTable& omegas()
{
    static const OmegaTable t = build_omega_table(200'000);
    return t;
}

} // namespace

TEST_CASE("odd_floor_sum and rhs_general examples")
{
    CHECK(odd_floor_sum(1) == 0);
    CHECK(odd_floor_sum(10) == 5);
    CHECK(odd_floor_sum(9) == 4);
    CHECK(rhs_general(1) == 0);
    CHECK(rhs_general(10) == 5);
    CHECK(rhs_general(9) == 4);
    CHECK_THROWS_AS(odd_floor_sum(0), std::invalid_argument);
}

TEST_CASE("odd_floor_sums matches the term-by-term sum")
{
    const auto all = odd_floor_sums(20'000);
    CHECK(all[0] == 0);
    for (std::uint64_t x = 1; x <= 20'000; ++x) {
        REQUIRE(all[x] == odd_floor_sum(x));
        REQUIRE(all[x] == rhs_general(x));
    }
}

TEST_CASE("frac_sum examples")
{
    CHECK(frac_sum(1, FracFilter::all) == 0.0);
    CHECK(frac_sum(10, FracFilter::all) == Approx(3.428220).epsilon(1e-6));
    CHECK(frac_sum(10, FracFilter::odd_only) == Approx(1.725470).epsilon(1e-6));
}

TEST_CASE("frac_sum_main_terms examples")
{
    CHECK(frac_sum_main_terms(1) == Approx(0.442695).epsilon(1e-6));
    CHECK(frac_sum_main_terms(10) == Approx(2.765986).epsilon(1e-6));
    // 2/log 2 - 2 - 1/2 = 0.3853901 (mpmath)
    CHECK(frac_sum_main_terms(2) == Approx(0.3853901).epsilon(1e-6));
    CHECK(frac_sum_main_terms(10) - frac_sum(10, FracFilter::all) == Approx(-0.662233).epsilon(1e-5));
}

TEST_CASE("frac_sum agrees with the long-double oracle")
{
    for (std::uint64_t x : {1ULL, 2ULL, 3ULL, 64ULL, 100ULL, 1023ULL, 1024ULL, 4097ULL, 30000ULL}) {
        CHECK(frac_sum(x, FracFilter::all) == Approx(static_cast<double>(oracle::frac_sum(x, 1))).epsilon(1e-11));
        CHECK(frac_sum(x, FracFilter::odd_only) ==
              Approx(static_cast<double>(oracle::frac_sum(x, 2))).epsilon(1e-11));
    }
}

TEST_CASE("FracSumSweep matches direct frac_sum")
{
    FracSumSweep sweep;
    for (std::uint64_t x = 1; x <= 3000; ++x) {
        const auto v = sweep.next();
        REQUIRE(v.x == x);
        REQUIRE(std::abs(v.all - frac_sum(x, FracFilter::all)) <= 1e-9 * std::max(1.0, v.all));
        REQUIRE(std::abs(v.odd_only - frac_sum(x, FracFilter::odd_only)) <= 1e-9 * std::max(1.0, v.odd_only));
    }
}

TEST_CASE("floor plus frac reconstructs the odd log sum")
{
    for (std::uint64_t x : {1ULL, 7ULL, 100ULL, 4096ULL, 99'999ULL}) {
        CompensatedSum direct;
        for (std::uint64_t n = 1; n <= x; n += 2)
            direct += std::log2(static_cast<double>(x) / static_cast<double>(n));
        const double recon = frac_sum(x, FracFilter::odd_only) + static_cast<double>(odd_floor_sum(x));
        CHECK(std::abs(recon - direct.value()) <= 1e-9 * std::max(1.0, direct.value()));
    }
}

TEST_CASE("hgt examples")
{
    auto t = hgt(2, primes(), omegas());
    CHECK(t.h == 0.0);
    CHECK(t.g == 1);
    CHECK(t.t == 0);

    t = hgt(3, primes(), omegas());
    CHECK(t.h == Approx(0.584963).epsilon(1e-6));
    CHECK(t.g == 1);
    CHECK(t.t == 0);

    t = hgt(10, primes(), omegas());
    CHECK(t.h == Approx(1.573467).epsilon(1e-6));
    CHECK(t.g == 3);
    CHECK(t.t == 2);

    CHECK_THROWS_AS(hgt(1, primes(), omegas()), std::invalid_argument);
    CHECK_THROWS_AS(hgt(300'000, primes(), omegas()), std::out_of_range);
}

TEST_CASE("hgt invariants and the sweep")
{
    const HgtSweep sweep(primes(), omegas(), 5000);
    for (std::uint64_t x = 2; x <= 5000; ++x) {
        const auto d = hgt(x, primes(), omegas());
        const auto s = sweep.at(x);
        REQUIRE(d.g == s.g);
        REQUIRE(d.t == s.t);
        REQUIRE(std::abs(d.h - s.h) <= 1e-12 * std::max(1.0, d.h));
        REQUIRE(d.h >= 0.0);
        REQUIRE(d.h < static_cast<double>(primes().pi(x)));
        REQUIRE(d.g >= d.t);
    }
}

TEST_CASE("pi_exact_formula examples")
{
    CHECK(pi_exact_formula(2, primes(), omegas()) == Approx(1.0).epsilon(1e-12));
    CHECK(pi_exact_formula(3, primes(), omegas()) == Approx(2.0).epsilon(1e-12));
    CHECK(pi_exact_formula(10, primes(), omegas()) == Approx(4.0).epsilon(1e-12));
    CHECK_THROWS_AS(pi_exact_formula(1, primes(), omegas()), std::invalid_argument);
}

TEST_CASE("pi_exact_formula rounds to pi on sampled x")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t x = 2 + rng() % 199'999;
        const double v = pi_exact_formula(x, primes(), omegas());
        REQUIRE(std::abs(v - static_cast<double>(primes().pi(x))) < 1e-9);
    }
}

TEST_CASE("s2_odd_log_sum examples")
{
    CHECK(s2_odd_log_sum(8, omegas()) == 0.0);
    CHECK(s2_odd_log_sum(10, omegas()) == Approx(0.152003).epsilon(1e-6));
    CHECK(s2_odd_log_sum(27, omegas()) == Approx(2.906560).epsilon(1e-6));
}

TEST_CASE("estimator examples")
{
    CHECK(big_theta(2, primes(), omegas()) == Approx(2.192695).epsilon(1e-6));
    // mpmath: 4.1979342
    CHECK(big_theta(10, primes(), omegas()) == Approx(4.1979342).epsilon(1e-7));
    const double l8 = std::log(8.0);
    CHECK(big_theta(8, primes(), omegas()) == Approx(primes().theta(8) / l8 + 8 / (2 * l8) - 0.25));

    CHECK(nu(2, omegas()) == Approx(4.078085).epsilon(1e-6));
    CHECK(nu(10, omegas()) == Approx(6.218659).epsilon(1e-6));
    CHECK(nu(8, omegas()) == Approx(3 * 8 / (2 * l8) - 0.25));

    CHECK(r_estimate(2, omegas()) == Approx(1.192695).epsilon(1e-6));
    CHECK(r_estimate(10, omegas()) == Approx(1.875715).epsilon(1e-6));

    CHECK(eta_estimate(2, omegas()) == Approx(0.826713).epsilon(1e-6));
    CHECK(eta_estimate(10, omegas()) == Approx(4.318993).epsilon(1e-6));

    CHECK_THROWS_AS(big_theta(1, primes(), omegas()), std::invalid_argument);
    CHECK_THROWS_AS(nu(1, omegas()), std::invalid_argument);
    CHECK_THROWS_AS(r_estimate(1, omegas()), std::invalid_argument);
    CHECK_THROWS_AS(eta_estimate(1, omegas()), std::invalid_argument);
}

TEST_CASE("estimators are algebraically consistent")
{
    for (std::uint64_t x : {2ULL, 3ULL, 10ULL, 97ULL, 1000ULL, 65536ULL, 199'999ULL}) {
        const double lx = std::log(static_cast<double>(x));
        const double bt = big_theta(x, primes(), omegas());
        const double r = r_estimate(x, omegas());
        CHECK(bt - primes().theta(x) / lx == Approx(r).epsilon(1e-10).scale(std::max(1.0, bt)));
        CHECK(eta_estimate(x, omegas()) == Approx(r * lx).epsilon(1e-10));
    }
}

TEST_CASE("closed-form integrals")
{
    CHECK(integral_theta_closed(2, primes()) == 0.0);
    CHECK(integral_theta_closed(3, primes()) == Approx(0.369070).epsilon(1e-6));
    CHECK(integral_theta_closed(10, primes()) == Approx(1.677781).epsilon(1e-6));
    CHECK(integral_pi_closed(2, primes()) == 0.0);
    CHECK(integral_pi_closed(3, primes()) == Approx(0.405465).epsilon(1e-6));
    CHECK(integral_pi_closed(10, primes()) == Approx(3.863233).epsilon(1e-6));
    CHECK_THROWS_AS(integral_pi_closed(1, primes()), std::invalid_argument);
}

TEST_CASE("closed-form theta integral against midpoint quadrature")
{
    // Independent route: integrate theta(t)/(t log^2 t) numerically between
    // consecutive integers, where theta is constant.
    const std::uint64_t x = 200;
    double quad = 0;
    for (std::uint64_t a = 2; a < x; ++a) {
        const double th = primes().theta(a);
        // exact antiderivative of 1/(t log^2 t) is -1/log t
        quad += th * (1 / std::log(static_cast<double>(a)) - 1 / std::log(static_cast<double>(a + 1)));
    }
    CHECK(integral_theta_closed(x, primes()) == Approx(quad).epsilon(1e-12));
}

TEST_CASE("dusart_check")
{
    const auto big = build_prime_table(1'000'000);
    const auto d = dusart_check(1'000'000, big);
    CHECK(d.lower == BoundStatus::holds);
    CHECK(d.upper == BoundStatus::not_applicable);
    CHECK(d.lower_bound == Approx(78380.08).epsilon(1e-6));
    CHECK(d.lower_margin == Approx(78498 - 78380.08134).epsilon(1e-6));

    const auto small = dusart_check(100, big);
    CHECK(small.lower == BoundStatus::not_applicable);
    CHECK(small.upper == BoundStatus::not_applicable);
    CHECK(small.lower_margin != 0.0);

    // pi(88783) = 8596 while the lower bound there is 8596.0424: the bound
    // first holds at the prime 88789.
    const auto at = dusart_check(88783, big);
    CHECK(at.lower == BoundStatus::fails);
    CHECK(at.lower_margin == Approx(-0.0424046).epsilon(1e-4));
    CHECK(dusart_check(88789, big).lower == BoundStatus::holds);

    CHECK_THROWS_AS(dusart_check(1'000'001, big), std::out_of_range);
}
