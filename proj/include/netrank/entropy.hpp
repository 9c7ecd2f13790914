#pragma once

#include <Eigen/Dense>

namespace netrank::entropy {

/// Renyi unpredictability of a node density, in bits.
struct Unpredictability {
    double value = 0.0;
    double alpha = 3.0;
    Eigen::Index n = 0;
};

/// Tolerance on sum(p) == 1 for probability-vector inputs.
inline constexpr double kNormalizationTolerance = 1e-9;

/// -sum p log_base p, with 0 log 0 = 0. Throws on negative entries or when
/// p does not sum to 1.
double shannon(const Eigen::Ref<const Eigen::VectorXd>& p, double base);

/// (1 / (1 - alpha)) log2(sum p^alpha / sum p). The denominator is kept even
/// though it is 1 for a normalized vector.
Unpredictability renyi_unpredictability(const Eigen::Ref<const Eigen::VectorXd>& p, double alpha);

}  // namespace netrank::entropy
