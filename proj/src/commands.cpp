#include "netrank/commands.hpp"

#include "netrank/error.hpp"
#include "netrank/report.hpp"

#include <filesystem>

namespace netrank {

int exit_code(ErrorKind kind) {
    return kind == ErrorKind::io ? 2 : 1;
}

namespace {

struct Loaded {
    Dataset dataset;
    PipelineConfig config;
};

Loaded load(const InputOptions& in) {
    return {load_dataset(in.path, in.format, in.directions), validate_config(in.config)};
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

void warn_negative(std::ostream& err, const std::string& network, const std::string& criterion,
                   const cdr::CdrTrace& trace) {
    const auto count = trace.rsp.negative_entries();
    if (count > 0) {
        err << "warning: (" << network << ", " << criterion << "): " << count
            << " negative RSP dissimilarities (min " << trace.rsp.min_entry() << ")\n";
    }
}

std::string dump_name(const std::string& network, const std::string& criterion) {
    return network + "__" + criterion + ".csv";
}

}  // namespace

int cmd_rank(const RankCommand& cmd, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto [ds, cfg] = load(cmd.input);
        RankRequest request;
        request.entropy_input = cmd.entropy_input;
        if (cmd.weights != "entropy") {
            request.user_weights = mcdm::load_weights(cmd.weights, ds.criteria.size());
            request.weight_origin = cmd.weights;
        }
        const RankReport report = build_rank_report(ds, cfg, request);

        for (const auto& ne : report.networks) {
            for (std::size_t k = 0; k < ds.criteria.size(); ++k) {
                warn_negative(err, ne.name, ds.criteria[k].name, ne.criteria[k].trace);
            }
        }
        if (cmd.dump_dir) {
            std::filesystem::create_directories(*cmd.dump_dir);
            for (const auto& ne : report.networks) {
                for (std::size_t k = 0; k < ds.criteria.size(); ++k) {
                    write_file_atomically(*cmd.dump_dir / dump_name(ne.name, ds.criteria[k].name),
                                          cdr_dump_csv(ne.nodes, ne.criteria[k].trace));
                }
            }
        }
        if (cmd.output) write_file_atomically(*cmd.output, render_report(report, cmd.input.path.string()));
        out << summary_table(report);
        return 0;
    });
}

int cmd_cdr(const CdrCommand& cmd, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto [ds, cfg] = load(cmd.input);
        const auto& net = ds.network(cmd.network);
        const auto k = ds.criterion_index(cmd.criterion);
        const auto trace = cdr::correlation_density_rank(net.matrices[k], cfg);
        warn_negative(err, net.name, cmd.criterion, trace);
        if (cmd.dump) write_file_atomically(*cmd.dump, cdr_dump_csv(net.nodes, trace));
        out << cdr_table(net.nodes, trace.output);
        return 0;
    });
}

int cmd_curves(const CurvesCommand& cmd, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (cmd.samples == 0) throw Error(ErrorKind::invalid_input, "samples must be a positive integer");
        auto [ds, cfg] = load(cmd.input);
        const auto evaluations = evaluate_dataset(ds, cfg);
        const auto csv = curves_csv(ds.criteria, evaluations, cmd.samples);
        if (cmd.output) {
            write_file_atomically(*cmd.output, csv);
        } else {
            out << csv;
        }
        return 0;
    });
}

}  // namespace netrank
