#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ensemble/degree_sequence.hpp"
#include "ensemble/entropy.hpp"

namespace ensemble {

// Degree-sequence families swept over n. "regular" takes k_i =
// round(k_frac*(n-1)); "linear_ramp" spaces degrees over [k_min, k_max];
// "dual_of_regular" complements the regular family. When the generated sum is
// odd the last node's degree is decremented by one (logged).
enum class Family { regular, linear_ramp, dual_of_regular, file_list };

struct ScanSpec {
    Family family = Family::regular;
    double k_frac = 0.5;                  // regular / dual_of_regular ...
    std::optional<int> k_fixed;           // ... unless a fixed degree is given
    int k_min = 1;                        // linear_ramp
    int k_max = 1;
    std::vector<int> n_list;
    std::vector<std::string> files;       // file_list
};

struct ScanRow {
    int n = 0;
    EntropyReport report;
    std::string status = "ok";            // "ok" or the failure reason
};

Family family_from_string(const std::string& name);

// The generated sequence for one family point, before the graphicality check.
DegreeSequence make_family_sequence(Family family, int n, const ScanSpec& spec,
                                    const std::function<void(const std::string&)>& warn);

// One row per n, emitted in ascending n order. Non-graphical family points
// and failed pipeline stages are kept as rows with an explanatory status.
std::vector<ScanRow> run_scan(const ScanSpec& spec,
                              const ReportParts& parts,
                              const ExactOptions& opts,
                              const std::function<void(const std::string&)>& warn);

std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_json(const std::vector<ScanRow>& rows);

}  // namespace ensemble
