#pragma once

// Test-only generators and oracles shared by the unit and acceptance suites.

#include "netrank/netmodel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace netrank::testing {

/// Random valid frequency matrix. With `connected`, a bidirectional ring is
/// laid down first so that every node both sends and receives events.
inline Eigen::MatrixXd random_frequencies(std::mt19937_64& rng, int n, double density, bool connected) {
    std::uniform_int_distribution<int> count(1, 9);
    std::bernoulli_distribution present(density);
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && present(rng)) f(i, j) = count(rng);
        }
    }
    if (connected) {
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            if (f(i, j) == 0.0) f(i, j) = count(rng);
            if (f(j, i) == 0.0) f(j, i) = count(rng);
        }
    }
    if (f.sum() == 0.0) f(0, 1) = 1.0;
    return f;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// g(perm[i], perm[j]) = f(i, j): node i is relabeled perm[i].
inline Eigen::MatrixXd permute(const Eigen::MatrixXd& f, const std::vector<int>& perm) {
    Eigen::MatrixXd g(f.rows(), f.cols());
    for (Eigen::Index i = 0; i < f.rows(); ++i)
        for (Eigen::Index j = 0; j < f.cols(); ++j) g(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = f(i, j);
    return g;
}

inline Eigen::VectorXd permute(const Eigen::VectorXd& v, const std::vector<int>& perm) {
    Eigen::VectorXd out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(perm[static_cast<std::size_t>(i)]) = v(i);
    return out;
}

/// Circulant graph: i -> i + s (mod n) with weight w for every offset s.
/// Every rotation is an automorphism, so the graph is vertex-transitive.
inline Eigen::MatrixXd circulant(int n, const std::vector<int>& offsets, double w) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int s : offsets) f(i, (i + s) % n) = w;
    return f;
}

struct NeumannResult {
    Eigen::MatrixXd inverse;
    int terms = 0;
    bool converged = false;
};

/// (I - W)^-1 as the Neumann series sum_{t>=0} W^t, summed in doubling
/// blocks: S_2m = S_m (I + W^m). The rest of the series is S_m sum_{k>=1} W^mk,
/// so summation stops once q / (1 - q) < `tail` with q = ||W^m||_inf. Plain
/// term-by-term summation is hopeless here: ||W||_inf is often 1 - 1e-5 even
/// when the spectral radius is well below 1.
inline NeumannResult neumann_inverse(const Eigen::MatrixXd& w, double tail = 1e-12, int max_doublings = 64) {
    const Eigen::Index n = w.rows();
    NeumannResult r;
    r.inverse = Eigen::MatrixXd::Identity(n, n);
    r.inverse += w;  // S_2
    Eigen::MatrixXd power = w * w;
    long long m = 2;
    for (int k = 0; k < max_doublings; ++k) {
        const double q = power.cwiseAbs().rowwise().sum().maxCoeff();
        if (q < 1.0 && q / (1.0 - q) < tail) {
            r.converged = true;
            break;
        }
        r.inverse += r.inverse * power;
        power = power * power;
        m *= 2;
    }
    r.terms = static_cast<int>(std::min<long long>(m, std::numeric_limits<int>::max()));
    return r;
}

}  // namespace netrank::testing
