#include "netrank/report.hpp"

#include "netrank/entropy.hpp"
#include "netrank/error.hpp"
#include "netrank/format.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <system_error>

namespace netrank {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kToolName = "netrank";
constexpr const char* kToolVersion = "0.1.0";

ojson num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return round_significant(v);
}

ojson vec(const Eigen::VectorXd& v) {
    ojson a = ojson::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(num(v(i)));
    return a;
}

ojson mat(const Eigen::MatrixXd& m) {
    ojson rows = ojson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vec(m.row(i).transpose()));
    return rows;
}

std::string_view to_string(mcdm::EntropyInput in) {
    return in == mcdm::EntropyInput::raw ? "raw" : "row_normalized";
}

std::string_view to_string(WeightMode mode) {
    return mode == WeightMode::entropy ? "entropy" : "user-supplied";
}

}  // namespace

CriterionEvaluation evaluate_criterion(const FrequencyMatrix& f, const PipelineConfig& cfg) {
    CriterionEvaluation ev;
    ev.trace = cdr::correlation_density_rank(f, cfg);
    const auto h = entropy::renyi_unpredictability(ev.trace.output.densities, cfg.alpha_renyi);
    ev.distribution = event_stats::event_distribution(f, h);
    return ev;
}

std::vector<NetworkEvaluation> evaluate_dataset(const Dataset& ds, const PipelineConfig& cfg) {
    std::vector<NetworkEvaluation> out;
    out.reserve(ds.networks.size());
    for (const auto& net : ds.networks) {
        NetworkEvaluation ne{net.name, net.nodes, {}};
        for (std::size_t k = 0; k < ds.criteria.size(); ++k) {
            try {
                ne.criteria.push_back(evaluate_criterion(net.matrices[k], cfg));
            } catch (const Error& e) {
                throw Error(e.kind(), "(" + net.name + ", " + ds.criteria[k].name + "): " + e.what());
            }
        }
        out.push_back(std::move(ne));
    }
    return out;
}

RankReport build_rank_report(const Dataset& ds, const PipelineConfig& cfg, const RankRequest& request) {
    if (ds.networks.size() < 2) throw Error(ErrorKind::invalid_input, "ranking requires at least 2 networks");
    RankReport r;
    r.config = cfg;
    r.config.weight_mode = request.user_weights ? WeightMode::user_supplied : WeightMode::entropy;
    r.entropy_input = request.entropy_input;
    r.weight_origin = request.user_weights ? request.weight_origin : "entropy";
    r.criteria = ds.criteria;
    r.networks = evaluate_dataset(ds, cfg);

    std::vector<std::string> names;
    std::vector<std::vector<event_stats::EventDistribution>> scores;
    for (const auto& ne : r.networks) {
        names.push_back(ne.name);
        auto& row = scores.emplace_back();
        for (const auto& ce : ne.criteria) row.push_back(ce.distribution);
    }
    mcdm::RankOptions options;
    options.user_weights = request.user_weights;
    options.entropy_input = request.entropy_input;
    options.significant_digits = kReportDigits;
    r.ranking = mcdm::rank_networks(names, ds.criteria, scores, options);
    return r;
}

ojson report_body(const RankReport& report) {
    const auto& cfg = report.config;
    ojson doc;
    doc["schema"] = 1;
    doc["config"] = {
        {"gamma", num(cfg.gamma)},
        {"beta", num(cfg.beta)},
        {"epsilon", num(cfg.epsilon)},
        {"c_max", num(cfg.c_max)},
        {"alpha_renyi", num(cfg.alpha_renyi)},
        {"sigma_cap", num(cdr::kSigmaCap)},
        {"weight_mode", to_string(cfg.weight_mode)},
        {"entropy_input", to_string(report.entropy_input)},
    };

    ojson criteria = ojson::array();
    for (const auto& c : report.criteria) {
        criteria.push_back({{"name", c.name}, {"direction", to_string(c.direction)}});
    }
    doc["criteria"] = std::move(criteria);

    ojson networks = ojson::array();
    for (const auto& ne : report.networks) {
        ojson per = ojson::object();
        for (std::size_t k = 0; k < report.criteria.size(); ++k) {
            const auto& ce = ne.criteria[k];
            const auto& d = ce.distribution;
            per[report.criteria[k].name] = {
                {"mu", num(d.mu)},
                {"H", num(d.h.value)},
                {"delta", num(d.delta)},
                {"p_zero", num(d.p_zero)},
                {"score", num(d.score)},
                {"negative_dissimilarities", ce.trace.rsp.negative_entries()},
                {"cdr", vec(ce.trace.output.densities)},
            };
        }
        networks.push_back({{"name", ne.name}, {"nodes", ne.nodes}, {"criteria", std::move(per)}});
    }
    doc["networks"] = std::move(networks);

    const auto& nr = report.ranking;
    doc["decision_matrix"] = {
        {"alternatives", nr.raw.alternatives},
        {"raw", mat(nr.raw.x)},
        {"row_normalized", mat(nr.normalized.x)},
    };
    doc["weights"] = {
        {"values", vec(nr.weights.w)},
        {"source", nr.weight_source == mcdm::WeightSource::user ? "user" : "entropy"},
        {"origin", report.weight_origin},
    };
    const auto& rk = nr.ranking;
    doc["topsis"] = {
        {"normalized", mat(rk.normalized)},
        {"weighted", mat(rk.weighted)},
        {"ideal", vec(rk.ideal)},
        {"anti_ideal", vec(rk.anti_ideal)},
        {"d_plus", vec(rk.d_plus)},
        {"d_minus", vec(rk.d_minus)},
    };
    doc["closeness"] = vec(rk.closeness);
    ojson order = ojson::array();
    for (auto i : rk.order) order.push_back(nr.raw.alternatives[i]);
    doc["order"] = std::move(order);
    return doc;
}

std::string render_report(const RankReport& report, const std::string& input_path) {
    ojson doc = report_body(report);
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream ts;
    ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    doc["run"] = {{"tool", kToolName}, {"version", kToolVersion}, {"input", input_path}, {"generated_at", ts.str()}};
    return doc.dump(2) + "\n";
}

std::string summary_table(const RankReport& report) {
    std::ostringstream os;
    os << std::left << std::setw(12) << "network" << std::setw(12) << "criterion" << std::right << std::setw(14)
       << "mu" << std::setw(14) << "H" << std::setw(14) << "delta" << std::setw(14) << "p(x=0)" << std::setw(14)
       << "score" << '\n';
    for (const auto& ne : report.networks) {
        for (std::size_t k = 0; k < report.criteria.size(); ++k) {
            const auto& d = ne.criteria[k].distribution;
            os << std::left << std::setw(12) << ne.name << std::setw(12) << report.criteria[k].name << std::right
               << std::setw(14) << format_significant(d.mu, 6) << std::setw(14) << format_significant(d.h.value, 6)
               << std::setw(14) << format_significant(d.delta, 6) << std::setw(14)
               << format_significant(d.p_zero, 6) << std::setw(14) << format_significant(d.score, 6) << '\n';
        }
    }

    const auto& nr = report.ranking;
    os << "\nweights (" << (nr.weight_source == mcdm::WeightSource::user ? report.weight_origin : "entropy")
       << "):";
    for (std::size_t k = 0; k < report.criteria.size(); ++k) {
        os << ' ' << report.criteria[k].name << '=' << format_significant(nr.weights.w(static_cast<Eigen::Index>(k)), 6);
    }
    os << "\n\n" << std::left << std::setw(12) << "network" << "closeness\n";
    for (std::size_t i = 0; i < nr.raw.alternatives.size(); ++i) {
        os << std::left << std::setw(12) << nr.raw.alternatives[i]
           << format_significant(nr.ranking.closeness(static_cast<Eigen::Index>(i)), 6) << '\n';
    }
    os << '\n';
    for (std::size_t r = 0; r < nr.ranking.order.size(); ++r) {
        if (r > 0) os << "  ";
        os << r + 1 << ". " << nr.raw.alternatives[nr.ranking.order[r]];
    }
    os << '\n';
    return os.str();
}

std::string curves_csv(const std::vector<CriterionSpec>& criteria, const std::vector<NetworkEvaluation>& networks,
                       std::size_t samples) {
    std::ostringstream os;
    os << "network,criterion,x,density\n";
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        for (const auto& ne : networks) {
            const auto& d = ne.criteria[k].distribution;
            for (const auto& pt : event_stats::sample_pdf(d.mu, d.delta, samples)) {
                os << ne.name << ',' << criteria[k].name << ',' << format_significant(pt.x) << ','
                   << format_significant(pt.density) << '\n';
            }
        }
    }
    return os.str();
}

std::string cdr_table(const std::vector<std::string>& nodes, const cdr::CdrOutput& out) {
    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.densities(static_cast<Eigen::Index>(a)) > out.densities(static_cast<Eigen::Index>(b));
    });
    std::ostringstream os;
    os << "node,cdr\n";
    for (auto i : order) os << nodes[i] << ',' << format_significant(out.densities(static_cast<Eigen::Index>(i))) << '\n';
    return os.str();
}

std::string cdr_dump_csv(const std::vector<std::string>& nodes, const cdr::CdrTrace& trace) {
    std::ostringstream os;
    os << "node,cdr,sigma,entropy";
    for (const auto& label : nodes) os << ",delta:" << label;
    os << '\n';
    const auto& out = trace.output;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        os << nodes[i] << ',' << format_significant(out.densities(r)) << ',' << format_significant(out.sigma(r))
           << ',' << format_significant(out.column_entropies(r));
        for (Eigen::Index j = 0; j < trace.rsp.delta.cols(); ++j) os << ',' << format_significant(trace.rsp.delta(r, j));
        os << '\n';
    }
    return os.str();
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
        out << content;
        out.flush();
        if (!out) throw Error(ErrorKind::io, "error writing '" + path.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
    }
}

}  // namespace netrank
