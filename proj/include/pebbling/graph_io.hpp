#ifndef PEBBLING_GRAPH_IO_HPP
#define PEBBLING_GRAPH_IO_HPP

#include <cstdint>
#include <cstdio>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pebbling/families.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

using Json = nlohmann::ordered_json;

enum class GraphFormat { json, dot };

inline GraphFormat graph_format_from_string(const std::string& name) {
    if (name == "json") return GraphFormat::json;
    if (name == "dot") return GraphFormat::dot;
    throw GraphError("unknown graph format '" + name + "' (expected json or dot)");
}

/// Raised for unreadable graph files; `position` is a byte offset for JSON
/// and a 1-based line number for DOT.
class GraphFormatError : public GraphError {
public:
    GraphFormatError(const std::string& what, std::size_t position)
        : GraphError(what + " (at " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

inline Json graph_to_json(const Graph& g) {
    Json doc;
    doc["order"] = g.order();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        Json labels = Json::object();
        for (const auto& [v, tag] : g.labels()) labels[std::to_string(v)] = tag;
        doc["labels"] = std::move(labels);
    }
    return doc;
}

inline Graph graph_from_json(const Json& doc) {
    auto fail = [](const std::string& msg) -> GraphFormatError { return GraphFormatError(msg, 0); };
    if (!doc.is_object()) throw fail("graph JSON must be an object");
    if (!doc.contains("order") || !doc["order"].is_number_integer())
        throw fail("graph JSON needs an integer \"order\"");
    const auto order = doc["order"].get<std::int64_t>();
    if (order < 0 || order > 1'000'000) throw fail("graph order out of range");
    Graph g(static_cast<int>(order));
    if (doc.contains("edges")) {
        const Json& edges = doc["edges"];
        if (!edges.is_array()) throw fail("\"edges\" must be an array");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Json& e = edges[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw fail("/edges/" + std::to_string(i) + " must be a pair of integers");
            try {
                g.add_edge(e[0].get<int>(), e[1].get<int>());
            } catch (const GraphError& err) {
                throw fail("/edges/" + std::to_string(i) + ": " + err.what());
            }
        }
    }
    if (doc.contains("labels")) {
        const Json& labels = doc["labels"];
        if (!labels.is_object()) throw fail("\"labels\" must be an object");
        for (const auto& [key, value] : labels.items()) {
            if (!value.is_string()) throw fail("/labels/" + key + " must be a string");
            int v = -1;
            try {
                std::size_t used = 0;
                v = std::stoi(key, &used);
                if (used != key.size()) v = -1;
            } catch (const std::exception&) {
                v = -1;
            }
            if (!g.contains(v)) throw fail("/labels/" + key + " is not a vertex id");
            g.set_label(v, value.get<std::string>());
        }
    }
    return g;
}

inline std::string export_graph(const Graph& g, GraphFormat format = GraphFormat::json) {
    if (format == GraphFormat::json) return graph_to_json(g).dump();
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (!g.label(v).empty()) out << " [label=\"" << v << ":" << g.label(v) << "\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

namespace detail {

inline Graph import_dot(const std::string& text) {
    static const std::regex header(R"(^\s*(strict\s+)?graph(\s+\w+)?\s*\{\s*$)");
    static const std::regex node(R"re(^\s*(\d+)\s*(\[\s*label\s*=\s*"(\d+):([^"]*)"\s*\])?\s*;?\s*$)re");
    static const std::regex edge(R"(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)");
    static const std::regex closing(R"(^\s*\}\s*$)");

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool opened = false;
    bool closed = false;
    std::vector<std::pair<Vertex, std::string>> labels;
    std::vector<std::pair<Edge, std::size_t>> edges;
    int order = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::smatch m;
        if (!opened) {
            if (!std::regex_match(line, header)) throw GraphFormatError("expected 'graph {' header", lineno);
            opened = true;
        } else if (closed) {
            throw GraphFormatError("content after closing brace", lineno);
        } else if (std::regex_match(line, closing)) {
            closed = true;
        } else if (std::regex_match(line, m, edge)) {
            Vertex u = std::stoi(m[1].str());
            Vertex v = std::stoi(m[2].str());
            order = std::max({order, u + 1, v + 1});
            edges.push_back({{u, v}, lineno});
        } else if (std::regex_match(line, m, node)) {
            Vertex v = std::stoi(m[1].str());
            order = std::max(order, v + 1);
            if (m[2].matched) {
                if (std::stoi(m[3].str()) != v) throw GraphFormatError("label prefix does not match vertex id", lineno);
                labels.emplace_back(v, m[4].str());
            }
        } else {
            throw GraphFormatError("unrecognized DOT statement", lineno);
        }
    }
    if (!opened) throw GraphFormatError("empty DOT input", lineno);
    if (!closed) throw GraphFormatError("missing closing brace", lineno);
    Graph g(order);
    for (const auto& [e, where] : edges) {
        try {
            g.add_edge(e.first, e.second);
        } catch (const GraphError& err) {
            throw GraphFormatError(err.what(), where);
        }
    }
    for (auto& [v, tag] : labels) g.set_label(v, std::move(tag));
    return g;
}

}  // namespace detail

inline Graph import_graph(const std::string& text, GraphFormat format = GraphFormat::json) {
    if (format == GraphFormat::dot) return detail::import_dot(text);
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw GraphFormatError(std::string("malformed JSON: ") + err.what(), err.byte);
    }
    return graph_from_json(doc);
}

/// {"shape": "chain", "monomers": [graph, ...], "attachments": [[a, u, b, v], ...]}
/// where each monomer is either graph JSON or a family string such as "C4",
/// "P3" or "K3".
inline PolymerSpec polymer_spec_from_json(const Json& doc) {
    auto fail = [](const std::string& msg) { return GraphFormatError(msg, 0); };
    if (!doc.is_object()) throw fail("polymer spec must be an object");
    PolymerSpec spec;
    if (doc.contains("shape")) {
        if (!doc["shape"].is_string()) throw fail("polymer \"shape\" must be a string");
        spec.shape = polymer_shape_from_string(doc["shape"].get<std::string>());
    }
    if (!doc.contains("monomers") || !doc["monomers"].is_array()) throw fail("polymer spec needs a \"monomers\" array");
    for (const auto& m : doc["monomers"]) {
        if (m.is_string()) {
            const std::string name = m.get<std::string>();
            static const std::regex family(R"(^([CPK])(\d+)$)");
            std::smatch match;
            if (!std::regex_match(name, match, family)) throw fail("unknown monomer '" + name + "'");
            const int size = std::stoi(match[2].str());
            const char kind = match[1].str()[0];
            spec.monomers.push_back(kind == 'C' ? make_cycle(size) : kind == 'P' ? make_path(size) : make_complete(size));
        } else {
            spec.monomers.push_back(graph_from_json(m));
        }
    }
    if (doc.contains("attachments")) {
        if (!doc["attachments"].is_array()) throw fail("polymer \"attachments\" must be an array");
        for (const auto& a : doc["attachments"]) {
            if (!a.is_array() || a.size() != 4) throw fail("each attachment is [monomer_a, vertex_a, monomer_b, vertex_b]");
            for (const auto& x : a)
                if (!x.is_number_integer()) throw fail("attachment entries must be integers");
            spec.attachments.push_back({a[0].get<int>(), a[1].get<Vertex>(), a[2].get<int>(), a[3].get<Vertex>()});
        }
    }
    return spec;
}

/// FNV-1a over the canonical JSON; stable across runs and platforms.
inline std::string graph_fingerprint(const Graph& g) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : export_graph(g, GraphFormat::json)) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace pebbling

#endif  // PEBBLING_GRAPH_IO_HPP
