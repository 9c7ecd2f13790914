#pragma once

// Decision matrix assembly, entropy weighting and TOPSIS ranking.

#include "netrank/event_stats.hpp"
#include "netrank/netmodel.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace netrank::mcdm {

/// m alternatives (rows) scored on n criteria (columns).
struct DecisionMatrix {
    std::vector<std::string> alternatives;
    std::vector<CriterionSpec> criteria;
    Eigen::MatrixXd x;

    /// Requires m >= 2, n >= 1, nonnegative finite scores and a positive
    /// entry in every row.
    static DecisionMatrix make(std::vector<std::string> alternatives, std::vector<CriterionSpec> criteria,
                               Eigen::MatrixXd x);
};

struct WeightVector {
    Eigen::VectorXd w;

    /// Validates nonnegativity and |sum - 1| <= tolerance, then rescales to
    /// unit sum.
    static WeightVector make(Eigen::VectorXd w, double tolerance = 1e-12);
};

struct RankingResult {
    Eigen::VectorXd closeness;
    std::vector<std::size_t> order;  ///< indices, best first; ties keep input order
    Eigen::MatrixXd normalized;      ///< column vector-normalized scores
    Eigen::MatrixXd weighted;
    Eigen::VectorXd ideal;
    Eigen::VectorXd anti_ideal;
    Eigen::VectorXd d_plus;
    Eigen::VectorXd d_minus;
};

/// Divides each row by its sum, turning scores into per-alternative ratios.
DecisionMatrix row_normalize(const DecisionMatrix& dm);

/// Objective weights: criteria whose columns are more dispersed weigh more.
/// Falls back to equal weights when every column is uniform.
WeightVector entropy_weights(const DecisionMatrix& dm);

RankingResult topsis(const DecisionMatrix& dm, const WeightVector& w);

enum class WeightSource { entropy, user };
enum class EntropyInput { row_normalized, raw };

struct RankOptions {
    /// Use these weights instead of entropy weighting.
    std::optional<WeightVector> user_weights;
    EntropyInput entropy_input = EntropyInput::row_normalized;
    /// When positive, the row-normalized matrix and the weights are rounded
    /// to this many significant digits before TOPSIS, so that a report
    /// printing them at that precision is exactly reproducible.
    int significant_digits = 0;
};

struct NetworkRanking {
    DecisionMatrix raw;
    DecisionMatrix normalized;
    WeightVector weights;
    WeightSource weight_source = WeightSource::entropy;
    RankingResult ranking;
};

/// scores[i][k] is the event distribution of alternative i on criterion k.
NetworkRanking rank_networks(const std::vector<std::string>& alternatives,
                             const std::vector<CriterionSpec>& criteria,
                             const std::vector<std::vector<event_stats::EventDistribution>>& scores,
                             const RankOptions& options = {});

/// JSON weight file {"weights": [...]}, one weight per criterion, summing to
/// 1 within 1e-6. Missing/unreadable file raises ErrorKind::io.
WeightVector load_weights(const std::filesystem::path& path, std::size_t criteria_count);
WeightVector parse_weights(const std::string& text, std::size_t criteria_count);

}  // namespace netrank::mcdm
