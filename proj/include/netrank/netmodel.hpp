#pragma once

// Dataset schema and ingestion.
//
// A dataset is a list of criteria (event types, each a benefit or a cost)
// and a list of networks. Every network carries one N x N frequency matrix
// per criterion: entry (i, j) counts events from node i to node j during the
// observation window. Node order is the order of declaration in the input
// file and every vector or matrix downstream is indexed by it.

#include "netrank/error.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netrank {

enum class Direction { benefit, cost };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view s);

struct CriterionSpec {
    std::string name;
    Direction direction = Direction::benefit;

    bool operator==(const CriterionSpec&) const = default;
};

/// Square nonnegative event-count matrix with zero diagonal and at least one
/// positive entry. Only constructible through `make`, which validates.
class FrequencyMatrix {
public:
    /// Throws DatasetError naming `network`/`criterion` and the cell.
    static FrequencyMatrix make(Eigen::MatrixXd counts,
                                const std::string& network = {},
                                const std::string& criterion = {});

    const Eigen::MatrixXd& counts() const noexcept { return counts_; }
    Eigen::Index size() const noexcept { return counts_.rows(); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return counts_(i, j); }
    double total() const { return counts_.sum(); }

    bool operator==(const FrequencyMatrix& o) const { return counts_ == o.counts_; }

private:
    explicit FrequencyMatrix(Eigen::MatrixXd counts) : counts_(std::move(counts)) {}
    Eigen::MatrixXd counts_;
};

struct NetworkDataset {
    std::string name;
    std::vector<std::string> nodes;
    /// One matrix per criterion, in the dataset's criterion order.
    std::vector<FrequencyMatrix> matrices;

    std::size_t node_count() const noexcept { return nodes.size(); }
    bool operator==(const NetworkDataset&) const = default;
};

struct Dataset {
    std::vector<CriterionSpec> criteria;
    std::vector<NetworkDataset> networks;

    const NetworkDataset& network(std::string_view name) const;
    std::size_t criterion_index(std::string_view name) const;

    bool operator==(const Dataset&) const = default;
};

enum class InputFormat { json, csv };

/// Criterion directions for CSV input, which has no place to declare them.
using DirectionMap = std::map<std::string, Direction, std::less<>>;

Dataset parse_dataset_json(std::string_view text);
Dataset parse_dataset_csv(std::string_view text, const DirectionMap& directions);

/// Reads and validates a dataset file. Missing/unreadable files raise an
/// ErrorKind::io error; every other problem is ErrorKind::invalid_input.
Dataset load_dataset(const std::filesystem::path& path, InputFormat format,
                     const DirectionMap& directions = {});

std::string serialize_dataset_json(const Dataset& ds);
/// Dense edge list: every off-diagonal pair is written (zeros included) so
/// that node declaration order survives a reload.
std::string serialize_dataset_csv(const Dataset& ds);

/// Throws DatasetError on any structural violation.
void validate_dataset(const Dataset& ds);

enum class WeightMode { entropy, user_supplied };

struct PipelineConfig {
    double gamma = 1.0;        ///< frequency effect in the cost function
    double beta = 1.0;         ///< cost influence on the random walker
    double epsilon = 1e-6;     ///< small positive padding, < 1
    double c_max = 1e6;        ///< finite stand-in for infinite cost
    double alpha_renyi = 3.0;  ///< Renyi order, > 0 and != 1
    WeightMode weight_mode = WeightMode::entropy;

    bool operator==(const PipelineConfig&) const = default;
};

/// Partially specified configuration, e.g. from command-line flags.
struct ConfigOverrides {
    std::optional<double> gamma;
    std::optional<double> beta;
    std::optional<double> epsilon;
    std::optional<double> c_max;
    std::optional<double> alpha_renyi;
    std::optional<WeightMode> weight_mode;
};

/// Fills defaults for missing fields and checks every bound. Throws
/// ErrorKind::invalid_config naming the parameter.
PipelineConfig validate_config(const ConfigOverrides& overrides);
PipelineConfig validate_config(const PipelineConfig& cfg);

}  // namespace netrank
