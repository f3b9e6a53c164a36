#pragma once

#include <string>

#include <json.hpp>

#include "ensemble/canonical.hpp"
#include "ensemble/covariance.hpp"
#include "ensemble/distributions.hpp"
#include "ensemble/entropy.hpp"
#include "ensemble/graph.hpp"
#include "ensemble/microcanonical.hpp"
#include "ensemble/sampler.hpp"

namespace ensemble {

// Degree files: plain text (whitespace/comma separated integers) or a JSON
// object {"n": int, "degrees": [int,...]}. Sniffed by the first non-space
// character.
DegreeSequence read_degree_file(const std::string& path);
DegreeSequence parse_degree_text(const std::string& text);

// Model serialization: {"schema","n","theta","residual","iterations"}.
// p is recomputed on load, never stored; the degree targets are recovered by
// rounding the expected degrees.
nlohmann::json model_to_json(const CanonicalModel& m);
CanonicalModel model_from_json(const nlohmann::json& j);

nlohmann::json entropy_report_to_json(const EntropyReport& r);
std::string entropy_report_csv_header();
std::string entropy_report_csv_row(const EntropyReport& r, const std::string& status = "ok");

nlohmann::json covariance_report_to_json(const CovarianceReport& r);
std::string matrix_to_csv(const Eigen::MatrixXd& m);

nlohmann::json count_to_json(const GraphCount& c);   // omega as decimal string
nlohmann::json sample_report_to_json(const SampleReport& r);

std::string pmf_to_csv(const PBDistribution& pb);    // columns k, probability
std::string graph_to_edge_list(const Graph& g);      // "i j" per line, 0-indexed

}  // namespace ensemble
