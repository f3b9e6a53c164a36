#include "ensemble/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ensemble {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open degree file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json opt_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

std::string opt_csv(const std::optional<double>& v) {
    if (!v) return "";
    std::ostringstream ss;
    ss.precision(17);
    ss << *v;
    return ss.str();
}

}  // namespace

DegreeSequence parse_degree_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("degree input is empty");

    if (text[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(text);
        if (!j.contains("degrees") || !j["degrees"].is_array()) {
            throw std::invalid_argument("JSON degree input needs a \"degrees\" array");
        }
        std::vector<int> k = j["degrees"].get<std::vector<int>>();
        if (j.contains("n") && j["n"].get<int>() != static_cast<int>(k.size())) {
            throw std::invalid_argument("JSON field n disagrees with the degrees array length");
        }
        return DegreeSequence(std::move(k));
    }

    std::string cleaned = text;
    for (char& c : cleaned) {
        if (c == ',') c = ' ';
    }
    std::istringstream ss(cleaned);
    std::vector<int> k;
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad token in degree file: \"" + tok + "\"");
        }
        if (used != tok.size()) throw std::invalid_argument("bad token in degree file: \"" + tok + "\"");
        k.push_back(v);
    }
    return DegreeSequence(std::move(k));
}

DegreeSequence read_degree_file(const std::string& path) {
    return parse_degree_text(slurp(path));
}

nlohmann::json model_to_json(const CanonicalModel& m) {
    nlohmann::json j;
    j["schema"] = "canonical-model/1";
    j["n"] = m.n();
    j["theta"] = std::vector<double>(m.theta.data(), m.theta.data() + m.theta.size());
    j["residual"] = m.residual;
    j["iterations"] = m.iterations;
    return j;
}

CanonicalModel model_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    const std::vector<double> t = j.at("theta").get<std::vector<double>>();
    if (static_cast<int>(t.size()) != n) throw std::invalid_argument("theta length differs from n");
    Eigen::VectorXd theta(n);
    for (int i = 0; i < n; ++i) theta(i) = t[static_cast<std::size_t>(i)];

    // Degree targets are not stored; recover them from the expected degrees.
    std::vector<int> k(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            row += 1.0 / (1.0 + std::exp(theta(i) + theta(j)));
        }
        k[static_cast<std::size_t>(i)] = static_cast<int>(std::llround(row));
    }

    CanonicalModel m = model_from_theta(DegreeSequence(std::move(k)), std::move(theta));
    m.iterations = j.value("iterations", 0);
    return m;
}

nlohmann::json entropy_report_to_json(const EntropyReport& r) {
    nlohmann::json j;
    j["schema"] = "entropy-report/1";
    j["n"] = r.n;
    j["S_exact"] = opt_json(r.S_exact);
    j["S_asymptotic"] = opt_json(r.S_asymptotic);
    j["S_sparse"] = opt_json(r.S_sparse);
    j["alpha_n"] = r.alpha_n;
    j["s_alpha_exact"] = opt_json(r.s_alpha_exact);
    j["s_alpha_asymptotic"] = opt_json(r.s_alpha_asymptotic);
    j["ratio_exact_over_asymptotic"] = opt_json(r.ratio_exact_over_asymptotic);
    if (r.omega) {
        j["omega"] = r.omega->str();
        j["log_omega"] = log_big(*r.omega);
    } else {
        j["omega"] = nullptr;
    }
    return j;
}

std::string entropy_report_csv_header() {
    return "n,S_exact,S_asymptotic,S_sparse,alpha_n,s_alpha_exact,s_alpha_asymptotic,ratio,status";
}

std::string entropy_report_csv_row(const EntropyReport& r, const std::string& status) {
    std::ostringstream ss;
    ss.precision(17);
    ss << r.n << ',' << opt_csv(r.S_exact) << ',' << opt_csv(r.S_asymptotic) << ','
       << opt_csv(r.S_sparse) << ',' << r.alpha_n << ',' << opt_csv(r.s_alpha_exact) << ','
       << opt_csv(r.s_alpha_asymptotic) << ',' << opt_csv(r.ratio_exact_over_asymptotic) << ','
       << status;
    return ss.str();
}

nlohmann::json covariance_report_to_json(const CovarianceReport& r) {
    nlohmann::json j;
    j["schema"] = "covariance-report/1";
    j["n"] = r.n;
    j["logdet_Q"] = r.logdet_Q;
    j["logdet_QD"] = r.logdet_QD;
    j["eigenvalues_Q"] =
        std::vector<double>(r.eigenvalues_Q.data(), r.eigenvalues_Q.data() + r.eigenvalues_Q.size());
    j["A_spectrum"] =
        std::vector<double>(r.A_spectrum.data(), r.A_spectrum.data() + r.A_spectrum.size());
    j["rho_A"] = r.rho_A;
    j["lambda_min_A"] = r.lambda_min_A;
    j["ipsen_lee_lower"] = r.ipsen_lee_lower;
    j["ipsen_lee_upper"] = r.ipsen_lee_upper;
    j["zhang_bound"] = r.zhang_bound;
    j["clamped_eigenvalues"] = r.clamped_eigenvalues;
    return j;
}

std::string matrix_to_csv(const Eigen::MatrixXd& m) {
    std::ostringstream ss;
    ss.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) ss << ',';
            ss << m(i, j);
        }
        ss << '\n';
    }
    return ss.str();
}

nlohmann::json count_to_json(const GraphCount& c) {
    nlohmann::json j;
    j["schema"] = "graph-count/1";
    j["omega"] = c.omega.str();
    j["log_omega"] = c.log_omega;
    return j;
}

nlohmann::json sample_report_to_json(const SampleReport& r) {
    nlohmann::json j;
    j["schema"] = "sample-report/1";
    j["num_samples"] = r.num_samples;
    j["seed"] = r.seed;
    j["mean_degrees"] =
        std::vector<double>(r.mean_degrees.data(), r.mean_degrees.data() + r.mean_degrees.size());
    std::vector<std::vector<double>> cov;
    for (Eigen::Index i = 0; i < r.empirical_cov.rows(); ++i) {
        cov.emplace_back(r.empirical_cov.row(i).begin(), r.empirical_cov.row(i).end());
    }
    j["empirical_cov"] = cov;
    j["max_mean_z"] = r.max_mean_z;
    return j;
}

std::string pmf_to_csv(const PBDistribution& pb) {
    std::ostringstream ss;
    ss.precision(17);
    ss << "k,probability\n";
    for (std::size_t k = 0; k < pb.pmf.size(); ++k) ss << k << ',' << pb.pmf[k] << '\n';
    return ss.str();
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream ss;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = i + 1; j < g.n(); ++j) {
            if (g.edge(i, j)) ss << i << ' ' << j << '\n';
        }
    }
    return ss.str();
}

}  // namespace ensemble
