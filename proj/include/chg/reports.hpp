#pragma once

#include <cstdint>
#include <string>

#include "chg/detector.hpp"
#include "chg/fixtures.hpp"
#include "chg/io.hpp"

namespace chg::reports {

/// Every report is a deterministic function of the input text and options:
/// identical bytes in, identical bytes out. Wall time and other
/// non-reproducible data never enter a report.
struct DetectOptions {
    int radius = 4;
    std::optional<double> tol_grp;
    std::optional<double> tol_tr;
    std::optional<double> tol_cert;
};

std::string validate_report(const std::string& file_text);
std::string classify_report(const std::string& file_text);
std::string cartan_report(const std::string& points_text);
std::string cross_report(const std::string& points_text);
std::string audit_report(const std::string& file_text, const DetectOptions& opt);
std::string detect_report(const std::string& file_text, const DetectOptions& opt);

/// Generator-file text for the fixture presentations (round-trips through
/// parse_generator_file).
std::string fixtures_file(fixtures::FixtureKind kind, std::uint64_t seed, int count,
                          double near_miss_delta = 1e-3);

/// CSV rows word,Re(z1),Im(z1),Re(z2),Im(z2) for the word-ball orbit of a
/// point; images at infinity render as the token "inf" in each coordinate
/// column. No header row, one row per word.
std::string orbit_csv(const std::string& file_text, const ProjectivePoint& start,
                      int radius);

}  // namespace chg::reports
