#pragma once

// Gaussian event model for one (network, criterion) pair.
//
// The mean is the average event count per node; the dispersion is the mean
// divided by the Renyi unpredictability of the node density, so networks
// whose events concentrate on a few nodes get a wide distribution. The score
// is the first moment of the raw Gaussian over x >= 0 (not renormalized to
// the half-line).

#include "netrank/entropy.hpp"
#include "netrank/netmodel.hpp"

#include <vector>

namespace netrank::event_stats {

struct GaussianParams {
    double mu = 0.0;
    double delta = 0.0;
};

struct EventDistribution {
    double mu = 0.0;
    entropy::Unpredictability h;
    double delta = 0.0;
    double p_zero = 0.0;
    double score = 0.0;
};

/// mu = total / nodes, delta = mu / h. Throws when h is zero.
GaussianParams gaussian_params(double total_events, Eigen::Index nodes, double h);
GaussianParams gaussian_params(const FrequencyMatrix& f, const entropy::Unpredictability& h);

double pdf(double x, double mu, double delta);

/// Density (not probability mass) at x = 0.
double prob_zero(double mu, double delta);

/// Integral of x * pdf(x) over [0, inf):
///   mu * Phi(mu / delta) + delta * phi(mu / delta).
double expected_score(double mu, double delta);

EventDistribution event_distribution(const FrequencyMatrix& f, const entropy::Unpredictability& h);

struct CurvePoint {
    double x = 0.0;
    double density = 0.0;
};

/// `samples` evenly spaced points on [0, mu + 4 delta]. The first point is
/// exactly prob_zero(mu, delta).
std::vector<CurvePoint> sample_pdf(double mu, double delta, std::size_t samples);

}  // namespace netrank::event_stats
