#pragma once

// Full-pipeline evaluation and its serialized forms: the JSON rank report,
// the console summary, pdf curve CSVs and CDR diagnostic dumps.

#include "netrank/cdr.hpp"
#include "netrank/event_stats.hpp"
#include "netrank/mcdm.hpp"
#include "netrank/netmodel.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace netrank {

struct CriterionEvaluation {
    cdr::CdrTrace trace;
    event_stats::EventDistribution distribution;
};

struct NetworkEvaluation {
    std::string name;
    std::vector<std::string> nodes;
    std::vector<CriterionEvaluation> criteria;  ///< dataset criterion order
};

/// CDR -> Renyi unpredictability -> Gaussian event model for one matrix.
CriterionEvaluation evaluate_criterion(const FrequencyMatrix& f, const PipelineConfig& cfg);

/// Every (network, criterion) pair, in declaration order.
std::vector<NetworkEvaluation> evaluate_dataset(const Dataset& ds, const PipelineConfig& cfg);

struct RankRequest {
    std::optional<mcdm::WeightVector> user_weights;
    std::string weight_origin = "entropy";  ///< "entropy" or the weight file path
    mcdm::EntropyInput entropy_input = mcdm::EntropyInput::row_normalized;
};

struct RankReport {
    PipelineConfig config;
    mcdm::EntropyInput entropy_input = mcdm::EntropyInput::row_normalized;
    std::string weight_origin;
    std::vector<CriterionSpec> criteria;
    std::vector<NetworkEvaluation> networks;
    mcdm::NetworkRanking ranking;
};

RankReport build_rank_report(const Dataset& ds, const PipelineConfig& cfg, const RankRequest& request);

/// Report without run metadata; identical inputs give identical bodies.
nlohmann::ordered_json report_body(const RankReport& report);

/// Body plus a trailing "run" object (tool, version, timestamp).
std::string render_report(const RankReport& report, const std::string& input_path);

std::string summary_table(const RankReport& report);

/// CSV network,criterion,x,density with `samples` points per curve.
std::string curves_csv(const std::vector<CriterionSpec>& criteria, const std::vector<NetworkEvaluation>& networks,
                       std::size_t samples);

/// node,cdr rows sorted by density, highest first (ties by node order).
std::string cdr_table(const std::vector<std::string>& nodes, const cdr::CdrOutput& out);

/// node,cdr,sigma,entropy followed by the node's dissimilarity row.
std::string cdr_dump_csv(const std::vector<std::string>& nodes, const cdr::CdrTrace& trace);

/// Writes to a temporary sibling and renames over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace netrank
