#include "primelab/driver.hpp"
#include "primelab/report.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace primelab;
using doctest::Approx;

namespace {

ScanConfig verify_config(Identity id, std::uint64_t from, std::uint64_t to, std::uint32_t points = 0)
{
    ScanConfig c;
    c.mode = Mode::verify;
    c.identity = id;
    c.from = from;
    c.to = to;
    c.points = points;
    return c;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("labels round trip")
{
    for (auto label : {"general", "pi-formula", "frac-sum", "integrals", "theta-estimate", "nu", "r", "eta", "dusart"}) {
        const auto id = parse_identity(label);
        REQUIRE(id.has_value());
        CHECK(to_string(*id) == label);
    }
    CHECK_FALSE(parse_identity("zeta").has_value());
    CHECK(parse_format("json") == Format::json);
    CHECK_FALSE(parse_format("xml").has_value());
    CHECK(parse_filter("odd") == FracFilter::odd_only);
}

TEST_CASE("validate rejects bad configurations")
{
    CHECK_THROWS_AS(validate(verify_config(Identity::general, 5, 3)), ConfigError);
    CHECK_THROWS_AS(validate(verify_config(Identity::general, 0, 3)), ConfigError);
    CHECK_THROWS_AS(validate(verify_config(Identity::pi_formula, 1, 3)), ConfigError);
    CHECK_THROWS_AS(validate(verify_config(Identity::general, 1, 100, 1)), ConfigError);
    CHECK_THROWS_AS(validate(verify_config(Identity::general, 1, 20'000'000)), ConfigError);

    auto large = verify_config(Identity::general, 1, 20'000'000);
    large.allow_large = true;
    CHECK_NOTHROW(validate(large));

    auto scan = verify_config(Identity::general, 1, 100, 10);
    scan.mode = Mode::scan;
    CHECK_THROWS_AS(validate(scan), ConfigError);
    scan.identity = Identity::nu;
    scan.from = 2;
    CHECK_NOTHROW(validate(scan));
    scan.points = 0;
    CHECK_THROWS_AS(validate(scan), ConfigError);
}

TEST_CASE("build_grid")
{
    CHECK(build_grid(3, 7, 0) == std::vector<std::uint64_t>{3, 4, 5, 6, 7});
    const auto g = build_grid(10, 1'000'000, 25);
    CHECK(g.size() == 25);
    CHECK(g.front() == 10);
    CHECK(g.back() == 1'000'000);
    CHECK(g[12] == 3162);
    for (std::size_t i = 1; i < g.size(); ++i)
        CHECK(g[i - 1] < g[i]);
    // rounding collapses repeated small values
    const auto small = build_grid(2, 10, 50);
    CHECK(small.size() == 9);
}

TEST_CASE("verify general over 1..1000")
{
    const auto tables = build_tables(1000, false);
    const auto res = run_verify(verify_config(Identity::general, 1, 1000), tables);
    CHECK(res.summary.rows_evaluated == 1000);
    CHECK(res.summary.mismatches == 0);
    CHECK(res.report.mismatch_count == 0);
    CHECK(std::get<std::int64_t>(res.report.rows[9].lhs) == 5);
}

TEST_CASE("verify pi-formula over 2..100")
{
    const auto tables = build_tables(100, true);
    const auto res = run_verify(verify_config(Identity::pi_formula, 2, 100), tables);
    CHECK(res.summary.rows_evaluated == 99);
    CHECK(res.summary.mismatches == 0);
    CHECK(res.summary.max_abs_diff < 1e-9);
}

TEST_CASE("verify of each remaining identity passes on a small range")
{
    const auto tables = build_tables(5000, true);
    for (auto id : {Identity::frac_sum, Identity::integrals, Identity::theta_estimate, Identity::nu, Identity::r,
                    Identity::eta}) {
        const auto from = id == Identity::frac_sum ? 1 : 2;
        const auto dense = run_verify(verify_config(id, from, 5000), tables);
        CHECK(dense.summary.mismatches == 0);
        const auto sparse = run_verify(verify_config(id, from, 5000, 40), tables);
        CHECK(sparse.summary.mismatches == 0);
    }
    auto odd = verify_config(Identity::frac_sum, 1, 5000);
    odd.filter = FracFilter::odd_only;
    CHECK(run_verify(odd, tables).summary.mismatches == 0);
}

TEST_CASE("verify reports mismatch_count consistently")
{
    const auto tables = build_tables(100'000, false);
    const auto res = run_verify(verify_config(Identity::dusart, 88000, 89000), tables);
    std::uint64_t bad = 0;
    for (const auto& r : res.report.rows)
        bad += r.exact_match ? 0 : 1;
    CHECK(bad == res.report.mismatch_count);
    CHECK(bad == 6); // x = 88783 .. 88788
}

TEST_CASE("tables must cover the range")
{
    const auto tables = build_tables(100, false);
    CHECK_THROWS_AS(run_verify(verify_config(Identity::general, 1, 200), tables), ConfigError);
    CHECK_THROWS_AS(run_verify(verify_config(Identity::pi_formula, 2, 50), tables), ConfigError);
}

TEST_CASE("scan theta-estimate spot value at x = 10")
{
    const auto tables = build_tables(1'000'000, true);
    ScanConfig c = verify_config(Identity::theta_estimate, 10, 1'000'000, 25);
    c.mode = Mode::scan;
    const auto res = run_scan(c, tables);
    REQUIRE(res.records.size() == 25);
    const auto& r = res.records.front();
    CHECK(r.x == 10);
    CHECK(r.pi == 4);
    CHECK(r.estimate == Approx(4.1979342).epsilon(1e-7));
    CHECK(r.raw_error == Approx(-0.1979342).epsilon(1e-6));
    for (const auto& rec : res.records) {
        CHECK(rec.raw_error == Approx(static_cast<double>(rec.pi) - rec.estimate).epsilon(1e-12));
        CHECK(rec.scaled_error == Approx(rec.raw_error * std::log(static_cast<double>(rec.x))).epsilon(1e-12));
    }
}

TEST_CASE("scan nu, r, eta and dusart")
{
    const auto tables = build_tables(1'000'000, true);
    ScanConfig c = verify_config(Identity::nu, 10, 10'000, 10);
    c.mode = Mode::scan;
    auto res = run_scan(c, tables);
    CHECK(res.records.size() == 10);
    CHECK(res.records.front().estimate == Approx(6.218659).epsilon(1e-6));

    // r and theta-estimate both measure pi - Theta.
    c.identity = Identity::r;
    const auto r = run_scan(c, tables);
    c.identity = Identity::theta_estimate;
    const auto t = run_scan(c, tables);
    for (std::size_t i = 0; i < r.records.size(); ++i)
        CHECK(r.records[i].raw_error == Approx(t.records[i].raw_error).epsilon(1e-9).scale(1.0));

    // eta's scaled error is int pi(t)/t dt - eta(x).
    c.identity = Identity::eta;
    const auto e = run_scan(c, tables);
    const auto& last = e.records.back();
    const double direct = integral_pi_closed(last.x, tables.primes) - eta_estimate(last.x, *tables.omegas);
    CHECK(last.scaled_error == Approx(direct).epsilon(1e-9).scale(1.0));

    c.identity = Identity::dusart;
    c.from = 88789;
    c.to = 1'000'000;
    c.points = 30;
    res = run_scan(c, tables);
    CHECK(res.summary.mismatches == 0);
    for (const auto& rec : res.records)
        CHECK(rec.raw_error >= 0.0);
}

TEST_CASE("evaluate_point at x = 10")
{
    const auto tables = build_tables(10, true);
    const auto q = evaluate_point(10, tables);
    CHECK(q.pi == 4);
    CHECK(q.hgt.g == 3);
    CHECK(q.pi_formula == Approx(4.0));
    CHECK(q.big_theta == Approx(4.1979342).epsilon(1e-7));
    CHECK(q.integral_pi == Approx(3.863233).epsilon(1e-6));
    CHECK_THROWS_AS(evaluate_point(1, tables), ConfigError);
}

TEST_CASE("CSV export headers and number formatting")
{
    IdentityReport empty;
    empty.identity_name = "general";
    CHECK(render(empty, Format::csv) == "x,lhs,rhs,diff,exact_match\n");
    CHECK(render("theta-estimate", std::span<const EstimateRecord>{}, Format::csv) ==
          "x,pi,theta,estimate,raw_error,scaled_error\n");

    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(123456789012345.0) == "1.23456789012e+14");

    const auto tables = build_tables(20, false);
    const auto res = run_verify(verify_config(Identity::general, 9, 10), tables);
    CHECK(render(res.report, Format::csv) == "x,lhs,rhs,diff,exact_match\n9,4,4,0,true\n10,5,5,0,true\n");
}

TEST_CASE("JSON mirrors CSV fields")
{
    const auto tables = build_tables(20, false);
    const auto res = run_verify(verify_config(Identity::general, 9, 10), tables);
    const std::string j = render(res.report, Format::json);
    CHECK(j.find("\"identity\": \"general\"") != std::string::npos);
    CHECK(j.find("\"mismatch_count\": 0") != std::string::npos);
    CHECK(j.find("\"exact_match\": true") != std::string::npos);

    EstimateRecord rec{10, 4, 5.347107530717468, 4.197934213689503, -0.197934213689503, -0.455760369834948};
    const std::string s = render("theta-estimate", std::span<const EstimateRecord>(&rec, 1), Format::json);
    CHECK(s.find("\"theta\": 5.34710753072") != std::string::npos);
    CHECK(s.find("\"scaled_error\": -0.455760369835") != std::string::npos);
}

TEST_CASE("exports are byte-identical across runs")
{
    const auto dir = std::filesystem::temp_directory_path() / "primelab_test_driver";
    std::filesystem::create_directories(dir);
    std::string first;
    for (int i = 0; i < 2; ++i) {
        const auto tables = build_tables(100'000, true);
        ScanConfig c = verify_config(Identity::theta_estimate, 10, 100'000, 20);
        c.mode = Mode::scan;
        const auto res = run_scan(c, tables);
        const auto path = dir / ("scan" + std::to_string(i) + ".json");
        write_text(render("theta-estimate", res.records, Format::json), path.string());
        if (i == 0)
            first = slurp(path);
        else
            CHECK(slurp(path) == first);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("write_text reports unwritable paths")
{
    CHECK_THROWS_AS(write_text("x", "/nonexistent-dir/for/sure/out.csv"), IoError);
}
