#include "primelab/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace primelab {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON carries the same 12-digit values as the CSV.
double rounded(double v) { return std::strtod(format_real(v).c_str(), nullptr); }

std::string format_value(const Value& v)
{
    if (const auto* i = std::get_if<std::int64_t>(&v))
        return std::to_string(*i);
    return format_real(std::get<double>(v));
}

ordered_json json_value(const Value& v)
{
    if (const auto* i = std::get_if<std::int64_t>(&v))
        return *i;
    return rounded(std::get<double>(v));
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void append_line(std::string& out, std::initializer_list<std::string> fields)
{
    bool first = true;
    for (const auto& f : fields) {
        if (!first)
            out += ',';
        out += f;
        first = false;
    }
    out += '\n';
}

} // namespace

std::string format_real(double v)
{
    if (v == 0.0)
        v = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render(const IdentityReport& report, Format format)
{
    if (format == Format::csv) {
        std::string out = std::string(kIdentityCsvHeader) + "\n";
        for (const auto& r : report.rows)
            append_line(out, {std::to_string(r.x), format_value(r.lhs), format_value(r.rhs),
                              format_real(r.diff), r.exact_match ? "true" : "false"});
        return out;
    }
    ordered_json rows = ordered_json::array();
    for (const auto& r : report.rows)
        rows.push_back({{"x", r.x},
                        {"lhs", json_value(r.lhs)},
                        {"rhs", json_value(r.rhs)},
                        {"diff", rounded(r.diff)},
                        {"exact_match", r.exact_match}});
    ordered_json j;
    j["identity"] = report.identity_name;
    j["mismatch_count"] = report.mismatch_count;
    j["rows"] = std::move(rows);
    return dump(j);
}

std::string render(std::string_view estimator, std::span<const EstimateRecord> records, Format format)
{
    if (format == Format::csv) {
        std::string out = std::string(kEstimateCsvHeader) + "\n";
        for (const auto& r : records)
            append_line(out, {std::to_string(r.x), std::to_string(r.pi), format_real(r.theta),
                              format_real(r.estimate), format_real(r.raw_error), format_real(r.scaled_error)});
        return out;
    }
    ordered_json rows = ordered_json::array();
    for (const auto& r : records)
        rows.push_back({{"x", r.x},
                        {"pi", r.pi},
                        {"theta", rounded(r.theta)},
                        {"estimate", rounded(r.estimate)},
                        {"raw_error", rounded(r.raw_error)},
                        {"scaled_error", rounded(r.scaled_error)}});
    ordered_json j;
    j["estimator"] = std::string(estimator);
    j["records"] = std::move(rows);
    return dump(j);
}

std::string render(std::span<const PointQuantities> points, Format format)
{
    if (format == Format::csv) {
        std::string out = std::string(kPointCsvHeader) + "\n";
        for (const auto& q : points)
            append_line(out, {std::to_string(q.x), std::to_string(q.pi), format_real(q.theta),
                              format_real(q.hgt.h), std::to_string(q.hgt.g), std::to_string(q.hgt.t),
                              format_real(q.pi_formula), format_real(q.big_theta), format_real(q.nu),
                              format_real(q.r), format_real(q.eta), format_real(q.integral_theta),
                              format_real(q.integral_pi)});
        return out;
    }
    ordered_json rows = ordered_json::array();
    for (const auto& q : points)
        rows.push_back({{"x", q.x},
                        {"pi", q.pi},
                        {"theta", rounded(q.theta)},
                        {"H", rounded(q.hgt.h)},
                        {"G", q.hgt.g},
                        {"T", q.hgt.t},
                        {"pi_formula", rounded(q.pi_formula)},
                        {"Theta", rounded(q.big_theta)},
                        {"nu", rounded(q.nu)},
                        {"R", rounded(q.r)},
                        {"eta", rounded(q.eta)},
                        {"integral_theta", rounded(q.integral_theta)},
                        {"integral_pi", rounded(q.integral_pi)}});
    ordered_json j;
    j["points"] = std::move(rows);
    return dump(j);
}

void write_text(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text << std::flush;
        if (!std::cout)
            throw IoError("failed writing to standard output");
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open " + path + " for writing");
    f << text;
    f.close();
    if (!f)
        throw IoError("failed writing " + path);
}

} // namespace primelab
