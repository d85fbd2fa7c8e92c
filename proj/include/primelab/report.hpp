// report.hpp
// CSV and JSON export. Reals are written with 12 significant digits,
// integers verbatim, one '\n' per line, so identical runs give identical
// bytes.

#pragma once

#include "primelab/driver.hpp"

#include <span>
#include <string>

namespace primelab {

inline constexpr const char* kIdentityCsvHeader = "x,lhs,rhs,diff,exact_match";
inline constexpr const char* kEstimateCsvHeader = "x,pi,theta,estimate,raw_error,scaled_error";
inline constexpr const char* kPointCsvHeader =
    "x,pi,theta,H,G,T,pi_formula,Theta,nu,R,eta,integral_theta,integral_pi";

// %.12g, with -0 written as 0.
std::string format_real(double v);

std::string render(const IdentityReport& report, Format format);
std::string render(std::string_view estimator, std::span<const EstimateRecord> records, Format format);
std::string render(std::span<const PointQuantities> points, Format format);

// Empty path writes to standard output. Throws IoError.
void write_text(const std::string& text, const std::string& path);

} // namespace primelab
