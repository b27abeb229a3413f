#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pebbling/pebbling.hpp"

namespace {

using namespace pebbling;

enum ExitCode { kOk = 0, kUsage = 2, kBudget = 3, kMismatch = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Graph load_graph(const std::string& path, const std::string& format) {
    GraphFormat f = format.empty() ? (ends_with(path, ".dot") || ends_with(path, ".gv") ? GraphFormat::dot : GraphFormat::json)
                                   : graph_format_from_string(format);
    return import_graph(read_input(path), f);
}

/// "C5", "P3", "K4", "Q3" shorthand, or a graph file.
Graph graph_operand(const std::string& token, const std::string& format) {
    static const std::regex shorthand(R"(^([CPKQ])(\d+)$)");
    std::smatch m;
    if (std::regex_match(token, m, shorthand)) {
        const int size = std::stoi(m[2].str());
        switch (m[1].str()[0]) {
            case 'C': return make_cycle(size);
            case 'P': return make_path(size);
            case 'K': return make_complete(size);
            default: return make_hypercube(size);
        }
    }
    return load_graph(token, format);
}

Vertex resolve_root(const Graph& g, const std::string& text) {
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
        const Vertex v = std::stoi(text);
        if (!g.contains(v)) throw UsageError("root " + text + " is not a vertex");
        return v;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.label(v) == text) return v;
    throw UsageError("no vertex is labeled '" + text + "'");
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(what + " must be an integer, got '" + s + "'");
}

void write_output(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out + "'");
    file << text;
}

Json result_json(const InvariantResult& r) {
    Json doc;
    doc["value"] = r.value;
    doc["witness"] = r.witness.counts();
    doc["witness_weight"] = r.witness.weight();
    if (r.root) doc["root"] = *r.root;
    doc["exhaustive"] = r.exhaustive;
    doc["lower"] = r.lower;
    doc["upper"] = r.upper;
    doc["nodes"] = r.nodes;
    return doc;
}

struct Report {
    std::string command;
    std::string fingerprint;
    std::uint64_t budget = 0;
    Json results = Json::object();
    bool exhaustive = true;
    double seconds = 0;

    Json to_json() const {
        Json doc;
        doc["command"] = command;
        doc["input"] = fingerprint;
        doc["budget"] = budget;
        doc["results"] = results;
        doc["exhaustive"] = exhaustive;
        doc["timing_ms"] = static_cast<std::int64_t>(seconds * 1000.0);
        return doc;
    }
};

std::string echo(int argc, char** argv) {
    std::string out;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) out += ' ';
        out += argv[i];
    }
    return out;
}

void print_report(const Report& report, bool json) {
    if (json) {
        std::cout << report.to_json().dump(2) << "\n";
        return;
    }
    std::cout << "command:  " << report.command << "\n"
              << "input:    " << report.fingerprint << "\n"
              << "budget:   " << report.budget << "\n";
    for (const auto& [key, value] : report.results.items()) {
        std::cout << key << ":\n";
        for (const auto& [field, v] : value.items()) std::cout << "  " << field << ": " << v.dump() << "\n";
    }
    std::cout << "exhaustive: " << (report.exhaustive ? "yes" : "no") << "\n"
              << "time:     " << static_cast<std::int64_t>(report.seconds * 1000.0) << " ms\n";
}

std::optional<std::vector<Strategy>> default_strategies(const Graph& g) {
    if (g.order() < 4 || (g.order() - 1) % 3 != 0) return std::nullopt;
    const int n = (g.order() - 1) / 3;
    if (g.same_structure(make_square_chain(n, SquareKind::para))) return para_chain_strategies(n);
    if (n >= 2 && g.same_structure(make_square_chain(n, SquareKind::ortho))) return ortho_chain_strategies(n);
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph pebbling invariants, certificates and reproduction tables"};
    app.require_subcommand(1);
    std::string format;
    bool json = false;
    std::uint64_t budget = 10'000'000;

    auto* family = app.add_subcommand("family", "Build a graph family and write it as JSON or DOT");
    std::string family_name, kind = "para", out;
    std::vector<std::string> params;
    bool pendant = false, bridges = false;
    family->add_option("name", family_name, "cycle|path|complete|hypercube|friendship|tchain|sqchain|corona|qnm|polymer")
        ->required();
    family->add_option("params", params, "Family parameters");
    family->add_option("--kind", kind, "Square chain kind: para or ortho");
    family->add_flag("--pendant", pendant, "Append the pendant vertex (tchain, sqchain)");
    family->add_flag("--bridges", bridges, "Join squares by bridge edges (sqchain)");
    family->add_option("--format", format, "Output format: json or dot");
    family->add_option("--out", out, "Output file (default stdout)");

    auto* pi = app.add_subcommand("pi", "Pebbling number pi_t(G) or pi_t(G, r)");
    std::string graph_path, root_text;
    int t = 1;
    pi->add_option("graph", graph_path, "Graph file (JSON or DOT), '-' for stdin, or C5/P4/K3/Q3")->required();
    pi->add_option("--root", root_text, "Target vertex id or label");
    pi->add_option("--t", t, "Number of pebbles to deliver")->check(CLI::PositiveNumber);
    pi->add_option("--budget", budget, "Search node budget");
    pi->add_option("--format", format, "Input format: json or dot");
    pi->add_flag("--json", json, "Machine-readable report");

    auto* opt = app.add_subcommand("opt", "Optimal pebbling number pi* or pi*_t");
    std::optional<int> cap;
    opt->add_option("graph", graph_path, "Graph file, '-' for stdin, or shorthand")->required();
    opt->add_option("--cap", cap, "Pebbles allowed per vertex")->check(CLI::PositiveNumber);
    opt->add_option("--budget", budget, "Search node budget");
    opt->add_option("--format", format, "Input format: json or dot");
    opt->add_flag("--json", json, "Machine-readable report");

    auto* certify = app.add_subcommand("certify", "Sandwich pi(G, r) between a witness and a strategy LP bound");
    std::string strategies_path;
    bool family_default = false;
    certify->add_option("graph", graph_path, "Graph file, '-' for stdin, or shorthand")->required();
    certify->add_option("--root", root_text, "Target vertex id or label")->required();
    auto* strat_opt = certify->add_option("--strategies", strategies_path, "Strategy JSON file");
    certify->add_flag("--family-default", family_default, "Use the built-in square chain strategies")
        ->excludes(strat_opt);
    certify->add_option("--budget", budget, "Search node budget");
    certify->add_option("--format", format, "Input format: json or dot");

    auto* repro = app.add_subcommand("reproduce", "Recompute every closed form and bound as CSV");
    std::string section = "all";
    int max_n = 3;
    unsigned jobs = 1;
    repro->add_option("--section", section, "1, 2, 3, 4 or all")->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
    repro->add_option("--max-n", max_n, "Largest family parameter")->check(CLI::PositiveNumber);
    repro->add_option("--budget", budget, "Search node budget per row");
    repro->add_option("--jobs", jobs, "Rows computed concurrently")->check(CLI::PositiveNumber);
    repro->add_option("--out", out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count(); };
    try {
        if (family->parsed()) {
            auto need = [&](std::size_t k) {
                if (params.size() != k)
                    throw UsageError(family_name + " takes " + std::to_string(k) + " parameter(s), got " +
                                     std::to_string(params.size()));
            };
            auto p = [&](std::size_t i) { return parse_int(params.at(i), family_name + " parameter"); };
            Graph g;
            if (family_name == "cycle") need(1), g = make_cycle(p(0));
            else if (family_name == "path") need(1), g = make_path(p(0));
            else if (family_name == "complete") need(1), g = make_complete(p(0));
            else if (family_name == "hypercube") need(1), g = make_hypercube(p(0));
            else if (family_name == "friendship") need(2), g = make_friendship(p(0), p(1));
            else if (family_name == "tchain") need(1), g = make_triangular_chain(p(0), pendant);
            else if (family_name == "sqchain") need(1), g = make_square_chain(p(0), square_kind_from_string(kind), pendant, bridges);
            else if (family_name == "corona") need(2), g = make_corona(graph_operand(params[0], ""), graph_operand(params[1], ""));
            else if (family_name == "qnm") need(2), g = make_qnm(p(0), p(1));
            else if (family_name == "polymer") {
                need(1);
                Json doc;
                try {
                    doc = Json::parse(read_input(params[0]));
                } catch (const Json::parse_error& err) {
                    throw GraphFormatError(std::string("malformed polymer spec: ") + err.what(), err.byte);
                }
                g = compose_polymer(polymer_spec_from_json(doc));
            } else {
                throw UsageError("unknown family '" + family_name + "'");
            }
            std::string text = export_graph(g, format.empty() ? GraphFormat::json : graph_format_from_string(format));
            if (text.empty() || text.back() != '\n') text += '\n';
            write_output(text, out);
            return kOk;
        }

        if (pi->parsed() || opt->parsed()) {
            const Graph g = graph_operand(graph_path, format);
            SearchOptions options;
            options.budget = budget;
            Report report{echo(argc, argv), graph_fingerprint(g), budget};
            InvariantResult r;
            std::string key;
            if (pi->parsed()) {
                if (root_text.empty()) {
                    r = pebbling_number(g, t, options);
                    key = t == 1 ? "pi" : "pi_" + std::to_string(t);
                } else {
                    r = pebbling_number_rooted(g, resolve_root(g, root_text), t, options);
                    key = t == 1 ? "pi(G,r)" : "pi_" + std::to_string(t) + "(G,r)";
                }
            } else {
                r = optimal_pebbling(g, cap, options);
                key = cap ? "pi*_" + std::to_string(*cap) : "pi*";
            }
            report.results[key] = result_json(r);
            report.exhaustive = r.exhaustive;
            report.seconds = elapsed();
            print_report(report, json);
            return r.exhaustive ? kOk : kBudget;
        }

        if (certify->parsed()) {
            const Graph g = graph_operand(graph_path, format);
            const Vertex root = resolve_root(g, root_text);
            std::vector<Strategy> strategies;
            if (!strategies_path.empty()) {
                Json doc;
                try {
                    doc = Json::parse(read_input(strategies_path));
                } catch (const Json::parse_error& err) {
                    throw UsageError(std::string("malformed strategy file: ") + err.what());
                }
                strategies = strategies_from_json(doc, g.order(), root);
            } else {
                auto found = default_strategies(g);
                if (!found) throw UsageError("no built-in strategies for this graph; pass --strategies");
                if (root != 0) throw UsageError("built-in strategies are rooted at the terminal vertex 0");
                strategies = std::move(*found);
            }
            SearchOptions options;
            options.budget = budget;
            const BoundCertificate cert = certify_rooted(g, root, strategies, std::nullopt, options);
            std::cout << certificate_to_json(cert).dump(2) << "\n";
            return kOk;
        }

        if (repro->parsed()) {
            ReproOptions options;
            if (section != "all") options.sections = {std::stoi(section)};
            options.max_n = max_n;
            options.budget = budget;
            options.jobs = jobs;
            const auto rows = reproduce(options);
            std::ostringstream csv;
            csv << repro_csv_header() << "\n";
            bool mismatch = false, exhausted = false;
            for (const auto& row : rows) {
                csv << to_csv(row) << "\n";
                mismatch = mismatch || row.agree == Agreement::no;
                exhausted = exhausted || row.method == "budget-exhausted" || row.agree == Agreement::unknown;
            }
            write_output(csv.str(), out);
            std::cerr << rows.size() << " rows, budget " << budget << " per row, " << elapsed() << " s\n";
            return mismatch ? kMismatch : exhausted ? kBudget : kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const LpUnbounded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kOk;
}
