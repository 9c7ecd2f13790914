#pragma once

// Correlation Density Rank.
//
// Turns a frequency matrix into a probability density over nodes:
//
//   1. popularity link weights from in/out event volumes,
//   2. a cost matrix mixing event frequency and popularity,
//   3. randomized-shortest-path (RSP) dissimilarities under inverse
//      temperature beta,
//   4. per-node Gaussian kernel scales from the entropy of each
//      dissimilarity column,
//   5. a Gaussian influence sum per node, normalized to unit mass.

#include "netrank/netmodel.hpp"

#include <Eigen/Dense>

namespace netrank::cdr {

/// Kernel scale used when a column entropy is (numerically) zero.
inline constexpr double kSigmaCap = 1e12;

/// Entries are only meaningful where the frequency is positive; elsewhere
/// both matrices hold 0.
struct LinkWeights {
    Eigen::MatrixXd w_in;
    Eigen::MatrixXd w_out;
};

struct CostMatrix {
    Eigen::MatrixXd entries;
};

struct RspDissimilarity {
    Eigen::MatrixXd delta;    ///< symmetric, zero diagonal
    Eigen::MatrixXd w;        ///< P_ref o exp(-beta C)
    Eigen::MatrixXd z;        ///< (I - W)^-1
    Eigen::MatrixXd s;        ///< expected path costs
    Eigen::MatrixXd c_tilde;  ///< S minus its diagonal, column-wise

    /// Count and minimum of negative dissimilarities. The construction does
    /// not guarantee nonnegativity, so callers report these as diagnostics.
    Eigen::Index negative_entries() const;
    double min_entry() const;
};

struct KernelScales {
    Eigen::MatrixXd m;                  ///< |delta| with unit column sums
    Eigen::VectorXd column_entropies;   ///< normalized to [0, 1] by ln N
    Eigen::VectorXd sigma;
};

struct CdrOutput {
    Eigen::VectorXd densities;  ///< sums to 1
    Eigen::VectorXd raw;        ///< unnormalized influence sums, each >= 1
    Eigen::VectorXd sigma;
    Eigen::VectorXd column_entropies;
};

/// Every intermediate of one run, for reports and diagnostic dumps.
struct CdrTrace {
    LinkWeights weights;
    CostMatrix cost;
    Eigen::MatrixXd transition;
    RspDissimilarity rsp;
    KernelScales scales;
    CdrOutput output;
};

LinkWeights link_weights(const FrequencyMatrix& f, double epsilon);

CostMatrix cost_matrix(const FrequencyMatrix& f, const LinkWeights& lw, double gamma, double c_max);

/// Row-normalized frequencies; rows of dead-end nodes stay zero (absorbing).
Eigen::MatrixXd transition_matrix(const FrequencyMatrix& f);

/// Throws ErrorKind::numeric when the spectral radius of W cannot be shown
/// to be below 1.
RspDissimilarity rsp_dissimilarity(const CostMatrix& c, const Eigen::MatrixXd& p_ref, double beta,
                                   double epsilon);

KernelScales kernel_scales(const RspDissimilarity& rsp, double sigma_cap = kSigmaCap);

CdrOutput cdr(const RspDissimilarity& rsp, const KernelScales& scales);

/// Runs the whole chain with the parameters from `cfg`.
CdrTrace correlation_density_rank(const FrequencyMatrix& f, const PipelineConfig& cfg);

}  // namespace netrank::cdr
