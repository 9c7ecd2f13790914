#include "netrank/entropy.hpp"

#include "netrank/error.hpp"

#include <cmath>
#include <string>

namespace netrank::entropy {

namespace {

void require_distribution(const Eigen::Ref<const Eigen::VectorXd>& p) {
    if (p.size() == 0) throw Error(ErrorKind::invalid_input, "empty probability vector");
    if ((p.array() < 0.0).any() || !p.allFinite()) {
        throw Error(ErrorKind::invalid_input, "probability vector has negative or non-finite entries");
    }
    const double total = p.sum();
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw Error(ErrorKind::invalid_input,
                    "probability vector sums to " + std::to_string(total) + ", not 1");
    }
}

}  // namespace

double shannon(const Eigen::Ref<const Eigen::VectorXd>& p, double base) {
    require_distribution(p);
    if (!(base > 1.0)) throw Error(ErrorKind::invalid_input, "logarithm base must exceed 1");
    double h = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) > 0.0) h -= p(i) * std::log(p(i));
    }
    return h / std::log(base);
}

Unpredictability renyi_unpredictability(const Eigen::Ref<const Eigen::VectorXd>& p, double alpha) {
    if (alpha == 1.0) {
        throw Error(ErrorKind::invalid_config, "Rényi order must differ from 1 (use Shannon entropy)");
    }
    if (!(alpha > 0.0)) throw Error(ErrorKind::invalid_config, "Rényi order must be positive");
    require_distribution(p);
    double power_sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) > 0.0) power_sum += std::pow(p(i), alpha);
    }
    const double value = std::log2(power_sum / p.sum()) / (1.0 - alpha);
    // log2(1) can come out as -0.0
    return {value == 0.0 ? 0.0 : value, alpha, p.size()};
}

}  // namespace netrank::entropy
