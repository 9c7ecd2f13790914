// netrank: rank complex networks by event performance.
//
//   netrank rank   DATASET [--weights entropy|FILE] [--output report.json] ...
//   netrank cdr    DATASET --network A --criterion success [--dump file.csv]
//   netrank curves DATASET [--samples 200] [--output curves.csv]

#include "netrank/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

struct RawInput {
    std::string path;
    std::string format = "json";
    std::vector<std::string> directions;
    netrank::ConfigOverrides config;
};

void add_input_options(CLI::App& cmd, RawInput& in) {
    cmd.add_option("input", in.path, "Dataset file")->required();
    cmd.add_option("--format", in.format, "Dataset format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd.add_option("--direction", in.directions,
                   "Criterion direction for CSV input, NAME=benefit|cost (repeatable)");
    cmd.add_option("--gamma", in.config.gamma, "Frequency effect in the cost function (default 1)");
    cmd.add_option("--beta", in.config.beta, "Cost influence on path selection (default 1)");
    cmd.add_option("--epsilon", in.config.epsilon, "Small padding constant, < 1 (default 1e-6)");
    cmd.add_option("--cmax", in.config.c_max, "Cost assigned to absent links (default 1e6)");
    cmd.add_option("--alpha", in.config.alpha_renyi, "Renyi entropy order (default 3)");
}

netrank::InputOptions resolve(const RawInput& raw) {
    netrank::InputOptions in;
    in.path = raw.path;
    in.format = raw.format == "csv" ? netrank::InputFormat::csv : netrank::InputFormat::json;
    in.config = raw.config;
    for (const auto& spec : raw.directions) {
        const auto eq = spec.find('=');
        const auto dir = eq == std::string::npos ? std::nullopt : netrank::parse_direction(spec.substr(eq + 1));
        if (!dir) throw CLI::ValidationError("--direction", "expected NAME=benefit|cost, got '" + spec + "'");
        in.directions[spec.substr(0, eq)] = *dir;
    }
    return in;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank complex networks by the expected value of their events"};
    app.require_subcommand(1);

    RawInput rank_in;
    netrank::RankCommand rank;
    std::string output;
    std::string dump_dir;
    std::string entropy_input = "row_normalized";
    auto* rank_cmd = app.add_subcommand("rank", "Score every network and rank them with TOPSIS");
    add_input_options(*rank_cmd, rank_in);
    rank_cmd->add_option("--weights", rank.weights, "'entropy' or a JSON weight file")->capture_default_str();
    rank_cmd->add_option("--entropy-input", entropy_input, "Matrix used for entropy weighting")
        ->check(CLI::IsMember({"row_normalized", "raw"}))
        ->capture_default_str();
    rank_cmd->add_option("--output", output, "Write the JSON report here");
    rank_cmd->add_option("--dump-intermediates", dump_dir, "Directory for per-(network, criterion) CDR dumps");

    RawInput cdr_in;
    netrank::CdrCommand cdr;
    std::string cdr_dump;
    auto* cdr_cmd = app.add_subcommand("cdr", "Print the node density ranking of one network and criterion");
    add_input_options(*cdr_cmd, cdr_in);
    cdr_cmd->add_option("--network", cdr.network)->required();
    cdr_cmd->add_option("--criterion", cdr.criterion)->required();
    cdr_cmd->add_option("--dump", cdr_dump, "Write dissimilarities, kernel scales and densities as CSV");

    RawInput curves_in;
    netrank::CurvesCommand curves;
    std::string curves_out;
    auto* curves_cmd = app.add_subcommand("curves", "Emit sampled event density curves as CSV");
    add_input_options(*curves_cmd, curves_in);
    curves_cmd->add_option("--samples", curves.samples, "Points per curve")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    curves_cmd->add_option("--output", curves_out, "CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
        if (rank_cmd->parsed()) {
            rank.input = resolve(rank_in);
            rank.entropy_input =
                entropy_input == "raw" ? netrank::mcdm::EntropyInput::raw : netrank::mcdm::EntropyInput::row_normalized;
            if (!output.empty()) rank.output = output;
            if (!dump_dir.empty()) rank.dump_dir = dump_dir;
            return netrank::cmd_rank(rank, std::cout, std::cerr);
        }
        if (cdr_cmd->parsed()) {
            cdr.input = resolve(cdr_in);
            if (!cdr_dump.empty()) cdr.dump = cdr_dump;
            return netrank::cmd_cdr(cdr, std::cout, std::cerr);
        }
        curves.input = resolve(curves_in);
        if (!curves_out.empty()) curves.output = curves_out;
        return netrank::cmd_curves(curves, std::cout, std::cerr);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
}
