#pragma once

// Command implementations behind the `netrank` executable. Each returns the
// process exit code: 0 on success, 1 for invalid input/config or numeric
// failures, 2 for I/O failures. Diagnostics go to `err`.

#include "netrank/mcdm.hpp"
#include "netrank/netmodel.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace netrank {

struct InputOptions {
    std::filesystem::path path;
    InputFormat format = InputFormat::json;
    DirectionMap directions;  ///< CSV only
    ConfigOverrides config;
};

struct RankCommand {
    InputOptions input;
    std::string weights = "entropy";  ///< "entropy" or a weight file path
    mcdm::EntropyInput entropy_input = mcdm::EntropyInput::row_normalized;
    std::optional<std::filesystem::path> output;
    std::optional<std::filesystem::path> dump_dir;
};

struct CdrCommand {
    InputOptions input;
    std::string network;
    std::string criterion;
    std::optional<std::filesystem::path> dump;
};

struct CurvesCommand {
    InputOptions input;
    std::optional<std::filesystem::path> output;  ///< stdout when absent
    std::size_t samples = 200;
};

int cmd_rank(const RankCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_cdr(const CdrCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_curves(const CurvesCommand& cmd, std::ostream& out, std::ostream& err);

int exit_code(ErrorKind kind);

}  // namespace netrank
