#include "netrank/mcdm.hpp"

#include "netrank/error.hpp"
#include "netrank/format.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace netrank::mcdm {

namespace {

[[noreturn]] void invalid(const std::string& message) {
    throw Error(ErrorKind::invalid_input, message);
}

Eigen::MatrixXd rounded(const Eigen::MatrixXd& m, int digits) {
    return m.unaryExpr([digits](double v) { return round_significant(v, digits); });
}

}  // namespace

DecisionMatrix DecisionMatrix::make(std::vector<std::string> alternatives, std::vector<CriterionSpec> criteria,
                                    Eigen::MatrixXd x) {
    if (alternatives.size() < 2) invalid("ranking requires at least 2 networks");
    if (criteria.empty()) invalid("ranking requires at least 1 criterion");
    if (x.rows() != static_cast<Eigen::Index>(alternatives.size()) ||
        x.cols() != static_cast<Eigen::Index>(criteria.size())) {
        invalid("decision matrix shape does not match alternatives x criteria");
    }
    if (!x.allFinite() || (x.array() < 0.0).any()) invalid("decision matrix entries must be finite and >= 0");
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        if (!(x.row(i).array() > 0.0).any()) {
            invalid("alternative " + alternatives[static_cast<std::size_t>(i)] + " has no positive score");
        }
    }
    return {std::move(alternatives), std::move(criteria), std::move(x)};
}

WeightVector WeightVector::make(Eigen::VectorXd w, double tolerance) {
    if (w.size() == 0) invalid("weight vector is empty");
    if (!w.allFinite() || (w.array() < 0.0).any()) invalid("weights must be finite and >= 0");
    const double total = w.sum();
    if (std::abs(total - 1.0) > tolerance) {
        std::ostringstream os;
        os << "weights sum to " << total << ", expected 1";
        invalid(os.str());
    }
    return {w / total};
}

DecisionMatrix row_normalize(const DecisionMatrix& dm) {
    DecisionMatrix out = dm;
    for (Eigen::Index i = 0; i < out.x.rows(); ++i) {
        const double total = out.x.row(i).sum();
        if (!(total > 0.0)) invalid("alternative " + dm.alternatives[static_cast<std::size_t>(i)] + " has a zero row");
        out.x.row(i) /= total;
    }
    return out;
}

WeightVector entropy_weights(const DecisionMatrix& dm) {
    const Eigen::Index m = dm.x.rows();
    const Eigen::Index n = dm.x.cols();
    const double log_m = std::log(static_cast<double>(m));
    Eigen::VectorXd divergence(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double total = dm.x.col(j).sum();
        if (!(total > 0.0)) invalid("criterion " + dm.criteria[static_cast<std::size_t>(j)].name + " has a zero column");
        double h = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            const double p = dm.x(i, j) / total;
            if (p > 0.0) h -= p * std::log(p);
        }
        const double d = 1.0 - h / log_m;
        // rounding noise on a uniform column
        divergence(j) = std::abs(d) < 1e-12 ? 0.0 : d;
    }
    const double total = divergence.sum();
    if (total <= 0.0) {
        return {Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n))};
    }
    return {divergence / total};
}

RankingResult topsis(const DecisionMatrix& dm, const WeightVector& w) {
    const Eigen::Index m = dm.x.rows();
    const Eigen::Index n = dm.x.cols();
    if (w.w.size() != n) invalid("weight count does not match criterion count");

    RankingResult r;
    r.normalized = dm.x;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double norm = dm.x.col(j).norm();
        if (!(norm > 0.0)) invalid("criterion " + dm.criteria[static_cast<std::size_t>(j)].name + " has a zero-norm column");
        r.normalized.col(j) /= norm;
    }
    r.weighted = r.normalized * w.w.asDiagonal();

    r.ideal.resize(n);
    r.anti_ideal.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double hi = r.weighted.col(j).maxCoeff();
        const double lo = r.weighted.col(j).minCoeff();
        const bool benefit = dm.criteria[static_cast<std::size_t>(j)].direction == Direction::benefit;
        r.ideal(j) = benefit ? hi : lo;
        r.anti_ideal(j) = benefit ? lo : hi;
    }

    r.d_plus = (r.weighted.rowwise() - r.ideal.transpose()).rowwise().norm();
    r.d_minus = (r.weighted.rowwise() - r.anti_ideal.transpose()).rowwise().norm();
    r.closeness.resize(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double span = r.d_plus(i) + r.d_minus(i);
        r.closeness(i) = span > 0.0 ? r.d_minus(i) / span : 0.5;
    }

    r.order.resize(static_cast<std::size_t>(m));
    std::iota(r.order.begin(), r.order.end(), std::size_t{0});
    std::stable_sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
        return r.closeness(static_cast<Eigen::Index>(a)) > r.closeness(static_cast<Eigen::Index>(b));
    });
    return r;
}

NetworkRanking rank_networks(const std::vector<std::string>& alternatives,
                             const std::vector<CriterionSpec>& criteria,
                             const std::vector<std::vector<event_stats::EventDistribution>>& scores,
                             const RankOptions& options) {
    if (scores.size() != alternatives.size()) invalid("score table does not match the alternatives");
    Eigen::MatrixXd x(static_cast<Eigen::Index>(alternatives.size()), static_cast<Eigen::Index>(criteria.size()));
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i].size() != criteria.size()) {
            invalid("network " + alternatives[i] + " is not scored on every criterion");
        }
        for (std::size_t k = 0; k < criteria.size(); ++k) {
            x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = scores[i][k].score;
        }
    }

    NetworkRanking out{DecisionMatrix::make(alternatives, criteria, std::move(x)), {}, {}, WeightSource::entropy, {}};
    out.normalized = row_normalize(out.raw);
    if (options.significant_digits > 0) out.normalized.x = rounded(out.normalized.x, options.significant_digits);

    if (options.user_weights) {
        if (options.user_weights->w.size() != static_cast<Eigen::Index>(criteria.size())) {
            invalid("weight count does not match criterion count");
        }
        out.weights = *options.user_weights;
        out.weight_source = WeightSource::user;
    } else {
        out.weights = entropy_weights(options.entropy_input == EntropyInput::raw ? out.raw : out.normalized);
    }
    if (options.significant_digits > 0) out.weights.w = rounded(out.weights.w, options.significant_digits);

    out.ranking = topsis(out.normalized, out.weights);
    return out;
}

WeightVector parse_weights(const std::string& text, std::size_t criteria_count) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        invalid(std::string("weight file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_array()) {
        invalid("weight file must be an object with a 'weights' array");
    }
    const auto& arr = doc["weights"];
    if (arr.size() != criteria_count) {
        invalid("weight file has " + std::to_string(arr.size()) + " weights for " + std::to_string(criteria_count) +
                " criteria");
    }
    Eigen::VectorXd w(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t j = 0; j < arr.size(); ++j) {
        if (!arr[j].is_number()) invalid("weights must be numbers");
        w(static_cast<Eigen::Index>(j)) = arr[j].get<double>();
    }
    return WeightVector::make(std::move(w), 1e-6);
}

WeightVector load_weights(const std::filesystem::path& path, std::size_t criteria_count) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open weight file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_weights(buf.str(), criteria_count);
}

}  // namespace netrank::mcdm
