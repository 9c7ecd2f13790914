#include "netrank/event_stats.hpp"

#include "netrank/error.hpp"

#include <cmath>
#include <numbers>

namespace netrank::event_stats {

namespace {

double standard_normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double standard_normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

void require_positive_delta(double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw Error(ErrorKind::invalid_input, "dispersion must be positive and finite");
    }
}

}  // namespace

GaussianParams gaussian_params(double total_events, Eigen::Index nodes, double h) {
    if (nodes <= 0) throw Error(ErrorKind::invalid_input, "node count must be positive");
    if (h == 0.0) {
        throw Error(ErrorKind::numeric, "degenerate density concentration: dispersion undefined (H = 0)");
    }
    if (!(h > 0.0)) throw Error(ErrorKind::invalid_input, "unpredictability must be positive");
    const double mu = total_events / static_cast<double>(nodes);
    return {mu, mu / h};
}

GaussianParams gaussian_params(const FrequencyMatrix& f, const entropy::Unpredictability& h) {
    return gaussian_params(f.total(), f.size(), h.value);
}

double pdf(double x, double mu, double delta) {
    const double z = (x - mu) / delta;
    return std::exp(-0.5 * z * z) / (delta * std::sqrt(2.0 * std::numbers::pi));
}

double prob_zero(double mu, double delta) {
    require_positive_delta(delta);
    return pdf(0.0, mu, delta);
}

double expected_score(double mu, double delta) {
    require_positive_delta(delta);
    const double z = mu / delta;
    return mu * standard_normal_cdf(z) + delta * standard_normal_pdf(z);
}

EventDistribution event_distribution(const FrequencyMatrix& f, const entropy::Unpredictability& h) {
    const auto g = gaussian_params(f, h);
    EventDistribution d;
    d.mu = g.mu;
    d.h = h;
    d.delta = g.delta;
    d.p_zero = prob_zero(g.mu, g.delta);
    d.score = expected_score(g.mu, g.delta);
    return d;
}

std::vector<CurvePoint> sample_pdf(double mu, double delta, std::size_t samples) {
    require_positive_delta(delta);
    if (samples == 0) throw Error(ErrorKind::invalid_input, "curve needs at least one sample");
    std::vector<CurvePoint> out;
    out.reserve(samples);
    const double upper = mu + 4.0 * delta;
    for (std::size_t k = 0; k < samples; ++k) {
        const double x = samples == 1 ? 0.0
                                      : upper * (static_cast<double>(k) / static_cast<double>(samples - 1));
        out.push_back({x, pdf(x, mu, delta)});
    }
    return out;
}

}  // namespace netrank::event_stats
