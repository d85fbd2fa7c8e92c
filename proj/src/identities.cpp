#include "primelab/identities.hpp"

#include "primelab/exact_math.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace primelab {

namespace {

void require_at_least(const char* what, std::uint64_t x, std::uint64_t min)
{
    if (x < min)
        throw std::invalid_argument(std::string(what) + ": x must be >= " + std::to_string(min));
}

void require_covered(const char* what, std::uint64_t x, std::uint64_t limit)
{
    if (x > limit)
        throw std::out_of_range(std::string(what) + ": x = " + std::to_string(x) +
                                " exceeds table limit " + std::to_string(limit));
}

double ln(std::uint64_t v) { return std::log(static_cast<double>(v)); }

std::uint32_t floor_log2(std::uint64_t x) { return static_cast<std::uint32_t>(std::bit_width(x) - 1); }

} // namespace

std::uint64_t odd_floor_sum(std::uint64_t x)
{
    require_at_least("odd_floor_sum", x, 1);
    std::uint64_t s = 0;
    for (std::uint64_t n = 1; n <= x; n += 2)
        s += floor_log2_ratio(x, n).k;
    return s;
}

std::uint64_t rhs_general(std::uint64_t x)
{
    require_at_least("rhs_general", x, 1);
    return x / 2;
}

std::vector<std::uint64_t> odd_floor_sums(std::uint64_t x_max)
{
    std::vector<std::uint64_t> out(x_max + 1, 0);
    for (std::uint64_t n = 1; n <= x_max / 2; n += 2)
        for (std::uint64_t m = 2 * n; m <= x_max; m *= 2)
            ++out[m];
    for (std::uint64_t x = 1; x <= x_max; ++x)
        out[x] += out[x - 1];
    return out;
}

double frac_sum(std::uint64_t x, FracFilter filter)
{
    require_at_least("frac_sum", x, 1);
    const double lx = ln(x);
    const std::uint64_t step = filter == FracFilter::odd_only ? 2 : 1;
    CompensatedSum s;
    for (std::uint64_t n = 1; n <= x; n += step)
        s += frac_log2_ratio(x, n, lx, ln(n));
    return s.value();
}

double frac_sum_main_terms(std::uint64_t x)
{
    require_at_least("frac_sum_main_terms", x, 1);
    const double xd = static_cast<double>(x);
    return xd / kLn2 - xd - ln(x) / (2.0 * kLn2);
}

double frac_sum_odd_main_terms(std::uint64_t x)
{
    require_at_least("frac_sum_odd_main_terms", x, 1);
    const double xd = static_cast<double>(x);
    return xd / (2.0 * kLn2) - xd / 2.0 - ln(x) / (4.0 * kLn2);
}

FracSumSweep::Values FracSumSweep::next()
{
    ++x_;
    const double lx = ln(x_);
    log_all_ += lx;
    if (x_ % 2 == 1)
        log_odd_ += lx;

    std::uint64_t floors_all = 0;
    std::uint64_t floors_odd = 0;
    for (std::uint64_t m = x_ >> 1; m > 0; m >>= 1) {
        floors_all += m;
        floors_odd += (m + 1) / 2;
    }
    const double count_all = static_cast<double>(x_);
    const double count_odd = static_cast<double>((x_ + 1) / 2);
    const double all = (count_all * lx - log_all_.value()) / kLn2 - static_cast<double>(floors_all);
    const double odd = (count_odd * lx - log_odd_.value()) / kLn2 - static_cast<double>(floors_odd);
    return {x_, all, odd};
}

HgtTriple hgt(std::uint64_t x, const PrimeTable& primes, const OmegaTable& omegas)
{
    require_at_least("hgt", x, 2);
    require_covered("hgt", x, primes.limit());
    require_covered("hgt", x, omegas.limit());

    const double lx = ln(x);
    HgtTriple r;
    CompensatedSum h;
    for (std::uint64_t p : primes.primes()) {
        if (p > x)
            break;
        h += frac_log2_ratio(x, p, lx, ln(p));
    }
    r.h = h.value();

    r.g = floor_log2_ratio(x, 1).k;
    for (std::uint64_t n = 3; n <= x; n += 2)
        if (omegas[n] >= 2)
            r.g += floor_log2_ratio(x, n).k;
    r.t = floor_log2_ratio(x, 2).k;
    return r;
}

double pi_exact_formula(std::uint64_t x, double theta, const HgtTriple& t)
{
    require_at_least("pi_exact_formula", x, 2);
    const double lx = ln(x);
    // H - G + T with the integer part formed exactly first.
    const double hgt_sum = t.h - static_cast<double>(static_cast<std::int64_t>(t.g) -
                                                     static_cast<std::int64_t>(t.t));
    const double parity = x % 2 == 0 ? kLn2 / 2.0 : 0.0;
    CompensatedSum num;
    num += static_cast<double>(x - 1) * (kLn2 / 2.0);
    num += theta;
    num += kLn2 * hgt_sum;
    num += parity;
    return num.value() / lx;
}

double pi_exact_formula(std::uint64_t x, const PrimeTable& primes, const OmegaTable& omegas)
{
    const HgtTriple t = hgt(x, primes, omegas);
    return pi_exact_formula(x, primes.theta(x), t);
}

HgtSweep::HgtSweep(const PrimeTable& primes, const OmegaTable& omegas, std::uint64_t x_max)
    : primes_(&primes), x_max_(x_max)
{
    require_covered("HgtSweep", x_max, primes.limit());
    require_covered("HgtSweep", x_max, omegas.limit());

    for (std::uint64_t p : primes.primes()) {
        if (p > x_max)
            break;
        log_p_.push_back(ln(p));
    }
    odd_composite_count_.assign(x_max + 1, 0);
    for (std::uint64_t n = 1; n <= x_max; ++n)
        odd_composite_count_[n] = odd_composite_count_[n - 1] + ((n % 2 == 1 && omegas[n] >= 2) ? 1 : 0);
}

HgtTriple HgtSweep::at(std::uint64_t x) const
{
    require_at_least("HgtSweep::at", x, 2);
    require_covered("HgtSweep::at", x, x_max_);

    const auto ps = primes_->primes();
    const double lx = ln(x);
    HgtTriple r;
    CompensatedSum h;
    for (std::size_t i = 0; i < log_p_.size() && ps[i] <= x; ++i)
        h += frac_log2_ratio(x, ps[i], lx, log_p_[i]);
    r.h = h.value();

    r.g = floor_log2(x);
    for (std::uint64_t m = x >> 1; m > 0; m >>= 1)
        r.g += odd_composite_count_[m];
    r.t = floor_log2(x) - 1;
    return r;
}

double HgtSweep::pi_formula(std::uint64_t x) const
{
    return pi_exact_formula(x, primes_->theta(x), at(x));
}

double s2_odd_log_sum(std::uint64_t x, const OmegaTable& omegas)
{
    require_at_least("s2_odd_log_sum", x, 1);
    require_covered("s2_odd_log_sum", x, omegas.limit());
    const double lx = ln(x);
    CompensatedSum s;
    for (std::uint64_t n = 9; n <= x; n += 2)
        if (omegas[n] >= 2)
            s += (lx - ln(n)) / kLn2;
    return s.value();
}

double big_theta(std::uint64_t x, double theta, double s2)
{
    require_at_least("big_theta", x, 2);
    const double lx = ln(x);
    const double xd = static_cast<double>(x);
    return theta / lx + xd / (2.0 * lx) - 0.25 - (kLn2 / lx) * s2;
}

double nu(std::uint64_t x, double s2)
{
    require_at_least("nu", x, 2);
    const double lx = ln(x);
    const double xd = static_cast<double>(x);
    return 3.0 * xd / (2.0 * lx) - 0.25 - (kLn2 / lx) * s2;
}

double r_estimate(std::uint64_t x, double s2)
{
    require_at_least("r_estimate", x, 2);
    const double lx = ln(x);
    const double xd = static_cast<double>(x);
    return xd / (2.0 * lx) - 0.25 - (kLn2 / lx) * s2;
}

double eta_estimate(std::uint64_t x, double s2)
{
    require_at_least("eta_estimate", x, 2);
    const double lx = ln(x);
    return static_cast<double>(x) / 2.0 - lx / 4.0 - kLn2 * s2;
}

double big_theta(std::uint64_t x, const PrimeTable& primes, const OmegaTable& omegas)
{
    require_at_least("big_theta", x, 2);
    require_covered("big_theta", x, primes.limit());
    return big_theta(x, primes.theta(x), s2_odd_log_sum(x, omegas));
}

double nu(std::uint64_t x, const OmegaTable& omegas)
{
    require_at_least("nu", x, 2);
    return nu(x, s2_odd_log_sum(x, omegas));
}

double r_estimate(std::uint64_t x, const OmegaTable& omegas)
{
    require_at_least("r_estimate", x, 2);
    return r_estimate(x, s2_odd_log_sum(x, omegas));
}

double eta_estimate(std::uint64_t x, const OmegaTable& omegas)
{
    require_at_least("eta_estimate", x, 2);
    return eta_estimate(x, s2_odd_log_sum(x, omegas));
}

double integral_theta_closed(std::uint64_t x, const PrimeTable& primes)
{
    require_at_least("integral_theta_closed", x, 2);
    require_covered("integral_theta_closed", x, primes.limit());
    const double lx = ln(x);
    CompensatedSum s;
    for (std::uint64_t p : primes.primes()) {
        if (p > x)
            break;
        s += 1.0 - ln(p) / lx;
    }
    return s.value();
}

double integral_pi_closed(std::uint64_t x, const PrimeTable& primes)
{
    require_at_least("integral_pi_closed", x, 2);
    require_covered("integral_pi_closed", x, primes.limit());
    const double lx = ln(x);
    CompensatedSum s;
    for (std::uint64_t p : primes.primes()) {
        if (p > x)
            break;
        s += lx - ln(p);
    }
    return s.value();
}

DusartResult dusart_check(std::uint64_t x, std::uint64_t pi)
{
    require_at_least("dusart_check", x, 2);
    const double xd = static_cast<double>(x);
    const double l = ln(x);
    const double head = xd / l + xd / (l * l);
    const double cube = xd / (l * l * l);
    const double pd = static_cast<double>(pi);

    DusartResult r;
    r.lower_bound = head + 2.0 * cube;
    r.upper_bound = head + 2.334 * cube;
    r.lower_margin = pd - r.lower_bound;
    r.upper_margin = r.upper_bound - pd;
    if (x >= kDusartLowerThreshold)
        r.lower = r.lower_margin >= 0.0 ? BoundStatus::holds : BoundStatus::fails;
    if (x >= kDusartUpperThreshold)
        r.upper = r.upper_margin >= 0.0 ? BoundStatus::holds : BoundStatus::fails;
    return r;
}

DusartResult dusart_check(std::uint64_t x, const PrimeTable& primes)
{
    require_at_least("dusart_check", x, 2);
    require_covered("dusart_check", x, primes.limit());
    return dusart_check(x, primes.pi(x));
}

const char* to_string(BoundStatus s) noexcept
{
    switch (s) {
    case BoundStatus::holds: return "holds";
    case BoundStatus::fails: return "fails";
    case BoundStatus::not_applicable: return "not_applicable";
    }
    return "unknown";
}

} // namespace primelab
