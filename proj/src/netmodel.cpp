#include "netrank/netmodel.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace netrank {

using json = nlohmann::json;

std::string_view to_string(Direction d) {
    return d == Direction::benefit ? "benefit" : "cost";
}

std::optional<Direction> parse_direction(std::string_view s) {
    if (s == "benefit") return Direction::benefit;
    if (s == "cost") return Direction::cost;
    return std::nullopt;
}

namespace {

std::string cell(const std::string& network, const std::string& criterion,
                 Eigen::Index i, Eigen::Index j) {
    std::ostringstream os;
    os << "(" << network << ", " << criterion << ", node " << i + 1;
    if (j != i) os << " -> node " << j + 1;
    os << ")";
    return os.str();
}

[[noreturn]] void fail(const std::string& message, const std::string& network = {},
                       const std::string& criterion = {},
                       std::optional<std::size_t> row = std::nullopt,
                       std::optional<std::size_t> col = std::nullopt) {
    throw DatasetError(message, {network, criterion, row, col});
}

}  // namespace

FrequencyMatrix FrequencyMatrix::make(Eigen::MatrixXd counts, const std::string& network,
                                      const std::string& criterion) {
    if (counts.rows() != counts.cols()) {
        fail("frequency matrix is not square for (" + network + ", " + criterion + ")",
             network, criterion);
    }
    if (counts.rows() < 2) {
        fail("frequency matrix for (" + network + ", " + criterion + ") needs at least 2 nodes",
             network, criterion);
    }
    bool any_positive = false;
    for (Eigen::Index i = 0; i < counts.rows(); ++i) {
        for (Eigen::Index j = 0; j < counts.cols(); ++j) {
            const double v = counts(i, j);
            const auto r = static_cast<std::size_t>(i + 1);
            const auto c = static_cast<std::size_t>(j + 1);
            if (!std::isfinite(v)) {
                fail("non-finite entry at " + cell(network, criterion, i, j), network, criterion, r, c);
            }
            if (v < 0.0) {
                fail("negative entry at " + cell(network, criterion, i, j), network, criterion, r, c);
            }
            if (i == j && v != 0.0) {
                fail("nonzero diagonal at " + cell(network, criterion, i, j), network, criterion, r, c);
            }
            any_positive = any_positive || v > 0.0;
        }
    }
    if (!any_positive) {
        fail("no events recorded for (" + network + ", " + criterion + ")", network, criterion);
    }
    return FrequencyMatrix(std::move(counts));
}

const NetworkDataset& Dataset::network(std::string_view name) const {
    for (const auto& n : networks) {
        if (n.name == name) return n;
    }
    throw Error(ErrorKind::invalid_input, "unknown network '" + std::string(name) + "'");
}

std::size_t Dataset::criterion_index(std::string_view name) const {
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (criteria[k].name == name) return k;
    }
    throw Error(ErrorKind::invalid_input, "unknown criterion '" + std::string(name) + "'");
}

void validate_dataset(const Dataset& ds) {
    if (ds.criteria.empty()) fail("dataset declares no criteria");
    std::unordered_set<std::string> seen;
    for (const auto& c : ds.criteria) {
        if (c.name.empty()) fail("criterion with empty name");
        if (!seen.insert(c.name).second) fail("duplicate criterion '" + c.name + "'", {}, c.name);
    }
    if (ds.networks.empty()) fail("dataset declares no networks");
    seen.clear();
    for (const auto& net : ds.networks) {
        if (net.name.empty()) fail("network with empty name");
        if (!seen.insert(net.name).second) fail("duplicate network '" + net.name + "'", net.name);
        std::unordered_set<std::string> labels;
        for (std::size_t i = 0; i < net.nodes.size(); ++i) {
            if (!labels.insert(net.nodes[i]).second) {
                fail("duplicate node label '" + net.nodes[i] + "' in network " + net.name, net.name,
                     {}, i + 1);
            }
        }
        if (net.matrices.size() != ds.criteria.size()) {
            fail("network " + net.name + " has " + std::to_string(net.matrices.size()) +
                     " matrices for " + std::to_string(ds.criteria.size()) + " criteria",
                 net.name);
        }
        for (std::size_t k = 0; k < net.matrices.size(); ++k) {
            if (static_cast<std::size_t>(net.matrices[k].size()) != net.nodes.size()) {
                fail("matrix size mismatch for (" + net.name + ", " + ds.criteria[k].name +
                         "): expected " + std::to_string(net.nodes.size()) + " nodes",
                     net.name, ds.criteria[k].name);
            }
        }
    }
}

// --- JSON -----------------------------------------------------------------

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail("missing field '" + std::string(key) + "' in " + where);
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) fail("field '" + std::string(key) + "' in " + where + " must be a string");
    return v.get<std::string>();
}

Eigen::MatrixXd parse_matrix(const json& rows, std::size_t n, const std::string& network,
                             const std::string& criterion) {
    if (!rows.is_array() || rows.size() != n) {
        fail("matrix for (" + network + ", " + criterion + ") must have " + std::to_string(n) +
                 " rows",
             network, criterion);
    }
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.size() != n) {
            fail("row " + std::to_string(i + 1) + " of (" + network + ", " + criterion +
                     ") must have " + std::to_string(n) + " entries",
                 network, criterion, i + 1);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!row[j].is_number()) {
                fail("non-numeric entry at " + cell(network, criterion, i, j), network, criterion,
                     i + 1, j + 1);
            }
            m(i, j) = row[j].get<double>();
        }
    }
    return m;
}

}  // namespace

Dataset parse_dataset_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) fail("dataset must be a JSON object");

    Dataset ds;
    const json& criteria = require(doc, "criteria", "dataset");
    if (!criteria.is_array()) fail("'criteria' must be an array");
    for (const auto& c : criteria) {
        if (!c.is_object()) fail("criterion entries must be objects");
        CriterionSpec spec;
        spec.name = require_string(c, "name", "criterion");
        const std::string dir = require_string(c, "direction", "criterion " + spec.name);
        auto parsed = parse_direction(dir);
        if (!parsed) {
            fail("criterion " + spec.name + " has direction '" + dir +
                     "' (expected benefit or cost)",
                 {}, spec.name);
        }
        spec.direction = *parsed;
        ds.criteria.push_back(std::move(spec));
    }

    const json& networks = require(doc, "networks", "dataset");
    if (!networks.is_array()) fail("'networks' must be an array");
    for (const auto& n : networks) {
        if (!n.is_object()) fail("network entries must be objects");
        NetworkDataset net;
        net.name = require_string(n, "name", "network");
        const json& nodes = require(n, "nodes", "network " + net.name);
        if (!nodes.is_array()) fail("'nodes' of network " + net.name + " must be an array", net.name);
        for (const auto& label : nodes) {
            if (!label.is_string()) fail("node labels of network " + net.name + " must be strings", net.name);
            net.nodes.push_back(label.get<std::string>());
        }
        const json& events = require(n, "events", "network " + net.name);
        if (!events.is_object()) fail("'events' of network " + net.name + " must be an object", net.name);
        for (const auto& [key, _] : events.items()) {
            bool known = false;
            for (const auto& c : ds.criteria) known = known || c.name == key;
            if (!known) {
                fail("network " + net.name + " has events for undeclared criterion '" + key + "'",
                     net.name, key);
            }
        }
        for (const auto& c : ds.criteria) {
            auto it = events.find(c.name);
            if (it == events.end()) {
                fail("network " + net.name + " has no matrix for criterion '" + c.name + "'",
                     net.name, c.name);
            }
            net.matrices.push_back(FrequencyMatrix::make(
                parse_matrix(*it, net.nodes.size(), net.name, c.name), net.name, c.name));
        }
        ds.networks.push_back(std::move(net));
    }
    validate_dataset(ds);
    return ds;
}

std::string serialize_dataset_json(const Dataset& ds) {
    json doc;
    doc["criteria"] = json::array();
    for (const auto& c : ds.criteria) {
        doc["criteria"].push_back({{"name", c.name}, {"direction", std::string(to_string(c.direction))}});
    }
    doc["networks"] = json::array();
    for (const auto& net : ds.networks) {
        json events = json::object();
        for (std::size_t k = 0; k < ds.criteria.size(); ++k) {
            const auto& m = net.matrices[k].counts();
            json rows = json::array();
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                json row = json::array();
                for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
                rows.push_back(std::move(row));
            }
            events[ds.criteria[k].name] = std::move(rows);
        }
        doc["networks"].push_back({{"name", net.name}, {"nodes", net.nodes}, {"events", std::move(events)}});
    }
    return doc.dump(2) + "\n";
}

// --- CSV ------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

struct CsvNetwork {
    std::string name;
    std::vector<std::string> nodes;
    std::unordered_map<std::string, std::size_t> index;
    // criterion index -> (src, dst) -> count
    std::map<std::size_t, std::map<std::pair<std::size_t, std::size_t>, double>> edges;

    std::size_t node(std::string_view label) {
        auto [it, inserted] = index.emplace(std::string(label), nodes.size());
        if (inserted) nodes.emplace_back(label);
        return it->second;
    }
};

std::string format_number(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

Dataset parse_dataset_csv(std::string_view text, const DirectionMap& directions) {
    std::vector<CsvNetwork> nets;
    std::vector<std::string> criteria;
    std::size_t line_no = 0;
    bool header_seen = false;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        auto fields = split(line);
        const std::string at = "line " + std::to_string(line_no);
        if (!header_seen) {
            if (fields != std::vector<std::string_view>{"network", "criterion", "src", "dst", "count"}) {
                fail("CSV header must be 'network,criterion,src,dst,count'");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 5) fail(at + ": expected 5 fields, got " + std::to_string(fields.size()));
        for (const auto& f : fields) {
            if (f.empty()) fail(at + ": empty field");
        }

        const std::string network(fields[0]);
        const std::string criterion(fields[1]);
        double count = 0.0;
        auto [p, ec] = std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(), count);
        if (ec != std::errc{} || p != fields[4].data() + fields[4].size()) {
            fail(at + ": count '" + std::string(fields[4]) + "' is not a number", network, criterion);
        }

        std::size_t k = 0;
        while (k < criteria.size() && criteria[k] != criterion) ++k;
        if (k == criteria.size()) criteria.push_back(criterion);

        auto net_it = std::find_if(nets.begin(), nets.end(), [&](const CsvNetwork& n) { return n.name == network; });
        if (net_it == nets.end()) {
            nets.push_back(CsvNetwork{network, {}, {}, {}});
            net_it = std::prev(nets.end());
        }
        const std::size_t src = net_it->node(fields[2]);
        const std::size_t dst = net_it->node(fields[3]);
        auto [slot, inserted] = net_it->edges[k].emplace(std::make_pair(src, dst), count);
        if (!inserted) {
            fail(at + ": duplicate entry for (" + network + ", " + criterion + ", " +
                     std::string(fields[2]) + " -> " + std::string(fields[3]) + ")",
                 network, criterion, src + 1, dst + 1);
        }
    }
    if (!header_seen) fail("CSV input is empty");

    Dataset ds;
    for (const auto& name : criteria) {
        auto it = directions.find(name);
        if (it == directions.end()) {
            fail("no direction declared for criterion '" + name + "' (benefit or cost)", {}, name);
        }
        ds.criteria.push_back({name, it->second});
    }
    for (auto& cn : nets) {
        NetworkDataset net;
        net.name = cn.name;
        net.nodes = cn.nodes;
        const auto n = static_cast<Eigen::Index>(cn.nodes.size());
        for (std::size_t k = 0; k < criteria.size(); ++k) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
            for (const auto& [ij, v] : cn.edges[k]) {
                m(static_cast<Eigen::Index>(ij.first), static_cast<Eigen::Index>(ij.second)) = v;
            }
            net.matrices.push_back(FrequencyMatrix::make(std::move(m), net.name, criteria[k]));
        }
        ds.networks.push_back(std::move(net));
    }
    validate_dataset(ds);
    return ds;
}

std::string serialize_dataset_csv(const Dataset& ds) {
    std::ostringstream os;
    os << "network,criterion,src,dst,count\n";
    for (const auto& net : ds.networks) {
        for (std::size_t k = 0; k < ds.criteria.size(); ++k) {
            const auto& m = net.matrices[k].counts();
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                for (Eigen::Index j = 0; j < m.cols(); ++j) {
                    if (i == j) continue;
                    os << net.name << ',' << ds.criteria[k].name << ','
                       << net.nodes[static_cast<std::size_t>(i)] << ','
                       << net.nodes[static_cast<std::size_t>(j)] << ',' << format_number(m(i, j)) << '\n';
                }
            }
        }
    }
    return os.str();
}

Dataset load_dataset(const std::filesystem::path& path, InputFormat format,
                     const DirectionMap& directions) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open dataset file '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorKind::io, "error reading dataset file '" + path.string() + "'");
    const std::string text = buf.str();
    return format == InputFormat::json ? parse_dataset_json(text) : parse_dataset_csv(text, directions);
}

// --- configuration -------------------------------------------------------

namespace {

[[noreturn]] void bad_config(const std::string& message) {
    throw Error(ErrorKind::invalid_config, message);
}

}  // namespace

PipelineConfig validate_config(const PipelineConfig& cfg) {
    if (!(cfg.gamma > 0.0) || !std::isfinite(cfg.gamma)) bad_config("gamma must be a positive number");
    if (!(cfg.beta > 0.0) || !std::isfinite(cfg.beta)) bad_config("beta must be a positive number");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) {
        bad_config("epsilon must be a very small number less than 1");
    }
    if (!(cfg.c_max > 0.0) || !std::isfinite(cfg.c_max)) bad_config("c_max must be a positive finite number");
    if (!(cfg.alpha_renyi > 0.0) || !std::isfinite(cfg.alpha_renyi)) {
        bad_config("Rényi order must be positive");
    }
    if (cfg.alpha_renyi == 1.0) bad_config("Rényi order must differ from 1");
    return cfg;
}

PipelineConfig validate_config(const ConfigOverrides& overrides) {
    PipelineConfig cfg;
    if (overrides.gamma) cfg.gamma = *overrides.gamma;
    if (overrides.beta) cfg.beta = *overrides.beta;
    if (overrides.epsilon) cfg.epsilon = *overrides.epsilon;
    if (overrides.c_max) cfg.c_max = *overrides.c_max;
    if (overrides.alpha_renyi) cfg.alpha_renyi = *overrides.alpha_renyi;
    if (overrides.weight_mode) cfg.weight_mode = *overrides.weight_mode;
    return validate_config(cfg);
}

}  // namespace netrank
