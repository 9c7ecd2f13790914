#include "netrank/cdr.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace netrank::cdr {

namespace {

// Popularity ratio numerator / sum over the reference list. A ratio of 1
// (the reference list is effectively {j}) is pulled strictly below 1 by
// padding the denominator with epsilon.
double popularity(double numerator, double reference_sum, double epsilon) {
    const double w = numerator / reference_sum;
    return w >= 1.0 ? numerator / (reference_sum + epsilon) : w;
}

}  // namespace

LinkWeights link_weights(const FrequencyMatrix& f, double epsilon) {
    const auto& counts = f.counts();
    const Eigen::Index n = f.size();
    const Eigen::VectorXd in_volume = counts.colwise().sum().transpose();
    const Eigen::VectorXd out_volume = counts.rowwise().sum();

    LinkWeights lw{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        double in_sum = 0.0;
        double out_sum = 0.0;
        for (Eigen::Index p = 0; p < n; ++p) {
            if (counts(i, p) > 0.0) {
                in_sum += in_volume(p);
                out_sum += out_volume(p);
            }
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            if (counts(i, j) <= 0.0) continue;
            lw.w_in(i, j) = popularity(in_volume(j), in_sum, epsilon);
            // dead-end target
            lw.w_out(i, j) = out_volume(j) == 0.0 ? epsilon : popularity(out_volume(j), out_sum, epsilon);
        }
    }
    return lw;
}

CostMatrix cost_matrix(const FrequencyMatrix& f, const LinkWeights& lw, double gamma, double c_max) {
    const Eigen::Index n = f.size();
    CostMatrix c{Eigen::MatrixXd::Constant(n, n, c_max)};
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double fij = f(i, j);
            if (fij <= 0.0) continue;
            const double product = lw.w_in(i, j) * lw.w_out(i, j);
            if (!(product < 1.0) || !(product > 0.0)) {
                std::ostringstream os;
                os << "link weight product " << product << " at (" << i + 1 << ", " << j + 1
                   << ") is outside (0, 1)";
                throw Error(ErrorKind::numeric, os.str());
            }
            // log base (1 - w_in w_out) of (1 - exp(-gamma f))
            const double numerator = std::log(-std::expm1(-gamma * fij));
            const double denominator = std::log1p(-product);
            const double cost = numerator / denominator;
            if (!std::isfinite(cost)) {
                std::ostringstream os;
                os << "cost at (" << i + 1 << ", " << j + 1 << ") is not finite";
                throw Error(ErrorKind::numeric, os.str());
            }
            c.entries(i, j) = std::max(cost, std::numeric_limits<double>::min());
        }
    }
    return c;
}

Eigen::MatrixXd transition_matrix(const FrequencyMatrix& f) {
    Eigen::MatrixXd p = f.counts();
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        const double out = p.row(i).sum();
        if (out > 0.0) p.row(i) /= out;
    }
    return p;
}

namespace {

// True when some submultiplicative norm of W^(2^k) certifies rho(W) < 1.
bool neumann_series_converges(const Eigen::MatrixXd& w) {
    auto inf_norm = [](const Eigen::MatrixXd& a) { return a.cwiseAbs().rowwise().sum().maxCoeff(); };
    auto one_norm = [](const Eigen::MatrixXd& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); };
    if (inf_norm(w) < 1.0 || one_norm(w) < 1.0) return true;
    Eigen::MatrixXd power = w;
    for (int k = 1; k <= 12; ++k) {
        power = power * power;
        const double norm = std::min(inf_norm(power), one_norm(power));
        if (norm < 1.0) return true;
        if (!std::isfinite(norm)) return false;
    }
    return false;
}

}  // namespace

Eigen::Index RspDissimilarity::negative_entries() const {
    return (delta.array() < 0.0).count();
}

double RspDissimilarity::min_entry() const {
    return delta.minCoeff();
}

RspDissimilarity rsp_dissimilarity(const CostMatrix& c, const Eigen::MatrixXd& p_ref, double beta,
                                   double epsilon) {
    const Eigen::Index n = p_ref.rows();
    RspDissimilarity r;
    r.w = p_ref.array() * (-beta * c.entries.array()).exp();
    if (!neumann_series_converges(r.w)) {
        std::ostringstream os;
        os << "beta too small / graph too dense: spectral radius >= 1 (beta = " << beta << ")";
        throw Error(ErrorKind::numeric, os.str());
    }
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
    r.z = (identity - r.w).partialPivLu().solve(identity);

    const Eigen::MatrixXd cost_flow = c.entries.cwiseProduct(r.w);
    r.s = (r.z * cost_flow * r.z).array() / (r.z.array() + epsilon);
    r.c_tilde = r.s.rowwise() - r.s.diagonal().transpose();
    r.delta = 0.5 * (r.c_tilde + r.c_tilde.transpose());
    return r;
}

KernelScales kernel_scales(const RspDissimilarity& rsp, double sigma_cap) {
    const Eigen::Index n = rsp.delta.rows();
    const double log_n = std::log(static_cast<double>(n));
    KernelScales k;
    // Column distributions are built from |delta| so that stray negative
    // dissimilarities cannot produce negative "probabilities".
    k.m = rsp.delta.cwiseAbs();
    k.column_entropies = Eigen::VectorXd::Zero(n);
    k.sigma = Eigen::VectorXd::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double sum = k.m.col(j).sum();
        // An all-zero column (isolated node) stays zero: entropy 0, sigma at the cap.
        if (sum > 0.0) k.m.col(j) /= sum;
        double h = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double p = k.m(i, j);
            if (p > 0.0) h -= p * std::log(p);
        }
        const double e = h / log_n;
        k.column_entropies(j) = e;
        k.sigma(j) = e < 1.0 / sigma_cap ? sigma_cap : 1.0 / e;
    }
    return k;
}

CdrOutput cdr(const RspDissimilarity& rsp, const KernelScales& scales) {
    const Eigen::Index n = rsp.delta.rows();
    CdrOutput out;
    out.raw = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const double d = rsp.delta(i, j);
            const double s = scales.sigma(j);
            acc += std::exp(-(d * d) / (2.0 * s * s));
        }
        out.raw(i) = acc;
    }
    out.densities = out.raw / out.raw.sum();
    out.sigma = scales.sigma;
    out.column_entropies = scales.column_entropies;
    return out;
}

CdrTrace correlation_density_rank(const FrequencyMatrix& f, const PipelineConfig& cfg) {
    CdrTrace t;
    t.weights = link_weights(f, cfg.epsilon);
    t.cost = cost_matrix(f, t.weights, cfg.gamma, cfg.c_max);
    t.transition = transition_matrix(f);
    t.rsp = rsp_dissimilarity(t.cost, t.transition, cfg.beta, cfg.epsilon);
    t.scales = kernel_scales(t.rsp);
    t.output = cdr(t.rsp, t.scales);
    return t;
}

}  // namespace netrank::cdr
