#include "ensemble/scan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ensemble/errors.hpp"
#include "ensemble/io.hpp"

namespace ensemble {

Family family_from_string(const std::string& name) {
    if (name == "regular") return Family::regular;
    if (name == "linear_ramp") return Family::linear_ramp;
    if (name == "dual_of_regular") return Family::dual_of_regular;
    if (name == "file_list") return Family::file_list;
    throw std::invalid_argument("unknown scan family: " + name);
}

namespace {

std::vector<int> even_sum_adjusted(std::vector<int> k, int n,
                                   const std::function<void(const std::string&)>& warn) {
    long long sum = 0;
    for (int v : k) sum += v;
    if (sum % 2 != 0) {
        warn("n=" + std::to_string(n) + ": odd degree sum, decrementing the last node");
        k.back() -= 1;
    }
    return k;
}

}  // namespace

DegreeSequence make_family_sequence(Family family, int n, const ScanSpec& spec,
                                    const std::function<void(const std::string&)>& warn) {
    switch (family) {
        case Family::regular: {
            const int k = spec.k_fixed ? *spec.k_fixed
                                       : static_cast<int>(std::lround(spec.k_frac * (n - 1)));
            std::vector<int> deg(static_cast<std::size_t>(n), k);
            return DegreeSequence(even_sum_adjusted(std::move(deg), n, warn));
        }
        case Family::dual_of_regular: {
            const DegreeSequence base = make_family_sequence(Family::regular, n, spec, warn);
            return dual_sequence(base);
        }
        case Family::linear_ramp: {
            std::vector<int> deg(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double t = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
                deg[static_cast<std::size_t>(i)] =
                    static_cast<int>(std::lround(spec.k_min + t * (spec.k_max - spec.k_min)));
            }
            return DegreeSequence(even_sum_adjusted(std::move(deg), n, warn));
        }
        case Family::file_list:
            throw std::logic_error("file_list points are read from files, not generated");
    }
    throw std::logic_error("unreachable");
}

std::vector<ScanRow> run_scan(const ScanSpec& spec, const ReportParts& parts,
                              const ExactOptions& opts,
                              const std::function<void(const std::string&)>& warn) {
    std::vector<DegreeSequence> sequences;
    if (spec.family == Family::file_list) {
        if (spec.files.empty()) throw std::invalid_argument("file_list scan needs at least one file");
        for (const auto& f : spec.files) sequences.push_back(read_degree_file(f));
    } else {
        if (spec.n_list.empty()) throw std::invalid_argument("scan needs a non-empty n list");
        std::vector<int> ns = spec.n_list;
        std::sort(ns.begin(), ns.end());
        for (int n : ns) {
            if (n < 3) throw std::invalid_argument("scan needs n >= 3");
            sequences.push_back(make_family_sequence(spec.family, n, spec, warn));
        }
    }

    std::sort(sequences.begin(), sequences.end(),
              [](const DegreeSequence& a, const DegreeSequence& b) { return a.n() < b.n(); });

    std::vector<ScanRow> rows;
    rows.reserve(sequences.size());
    for (const DegreeSequence& d : sequences) {
        ScanRow row;
        row.n = d.n();
        row.report.n = d.n();
        if (!is_graphical(d)) {
            row.status = "skipped: not graphical";
            warn("n=" + std::to_string(d.n()) + ": sequence not graphical, skipped");
            rows.push_back(std::move(row));
            continue;
        }
        try {
            row.report = make_entropy_report(d, parts, opts);
        } catch (const SizeLimitError& e) {
            row.status = std::string("exact skipped: ") + e.what();
        } catch (const NonConvergenceError& e) {
            row.status = std::string("fit failed: ") + e.what();
        } catch (const std::exception& e) {
            row.status = std::string("failed: ") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream ss;
    ss << entropy_report_csv_header() << '\n';
    for (const auto& row : rows) ss << entropy_report_csv_row(row.report, row.status) << '\n';
    return ss.str();
}

std::string scan_json(const std::vector<ScanRow>& rows) {
    nlohmann::json j;
    j["schema"] = "scan/1";
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r = entropy_report_to_json(row.report);
        r["status"] = row.status;
        j["rows"].push_back(std::move(r));
    }
    return j.dump(2);
}

}  // namespace ensemble
