#pragma once

#include <string>
#include <vector>

#include "nekrasov/sampling.hpp"
#include "nekrasov/series.hpp"
#include "nekrasov/verifier.hpp"

namespace nekrasov {

/// One report as a JSON object with the fields check, w, k, max_4n, seed,
/// trials, points, grades and pass, in that order.
std::string report_json(const VerificationReport& report);
/// A list of reports as one JSON array.
std::string reports_json(const std::vector<VerificationReport>& reports);

/// Human-readable summary, one line per report plus one line per failing
/// grade and trial.
std::string report_text(const VerificationReport& report);

/// Series dump: every grade with n = grade4n / 4 and its value at each
/// sample point. The points are drawn avoiding the series' own poles.
std::string series_json(const std::string& name, const FrameData& frame, HalfInt k,
                        const QSeries& series, const SampleConfig& cfg);
std::string series_text(const std::string& name, const FrameData& frame, HalfInt k,
                        const QSeries& series, const SampleConfig& cfg);

}  // namespace nekrasov
