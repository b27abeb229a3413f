#ifndef PEBBLING_CERTIFICATE_HPP
#define PEBBLING_CERTIFICATE_HPP

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "pebbling/configuration.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/graph_io.hpp"
#include "pebbling/invariants.hpp"
#include "pebbling/rational.hpp"
#include "pebbling/simplex.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/strategy.hpp"

namespace pebbling {

enum class Verdict { exact, gap };

inline std::string to_string(Verdict v) { return v == Verdict::exact ? "exact" : "gap"; }

/// Sandwich lower <= pi(G, r) <= upper. The upper bound comes from the
/// strategy LP, the lower bound from a verified r-unsolvable witness.
struct BoundCertificate {
    Vertex root = 0;
    std::vector<Strategy> strategies;
    Rational lp_optimum;
    std::vector<Rational> primal;  // optimal f(v), v != root, in vertex order
    std::vector<Rational> dual;    // one multiplier per strategy
    std::int64_t upper = 0;
    std::optional<Configuration> lower_witness;
    std::int64_t lower = 0;
    Verdict verdict = Verdict::gap;
};

/// Upper bound floor(z) + 1, where z maximizes sum_{v != r} f(v) subject to
/// w_T(f) <= w(T) for every strategy and f >= 0.
inline BoundCertificate lp_bound(const Graph& g, Vertex r, const std::vector<Strategy>& strategies) {
    if (!g.contains(r)) throw GraphError("root out of range");
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        if (strategies[i].root != r)
            throw StrategyError("strategy " + std::to_string(i) + " is rooted at " + std::to_string(strategies[i].root) +
                                ", not " + std::to_string(r));
        const auto check = validate_strategy(g, strategies[i]);
        if (!check) throw StrategyError("strategy " + std::to_string(i) + ": " + check.reason);
    }
    std::vector<Vertex> vars;
    for (Vertex v = 0; v < g.order(); ++v)
        if (v != r) vars.push_back(v);

    LinearProgram lp;
    lp.c.assign(vars.size(), Rational(1));
    for (const auto& s : strategies) {
        std::vector<Rational> row;
        for (Vertex v : vars) row.push_back(s[v]);
        lp.a.push_back(std::move(row));
        lp.b.push_back(strategy_total(s));
    }
    for (std::size_t j = 0; j < vars.size(); ++j) {
        bool covered = false;
        for (const auto& row : lp.a) covered = covered || row[j] > 0;
        if (!covered)
            throw LpUnbounded(j, "no strategy puts positive weight on vertex " + std::to_string(vars[j]) +
                                     ", so the bound is unbounded");
    }
    const LpSolution sol = solve_lp(lp);

    BoundCertificate cert;
    cert.root = r;
    cert.strategies = strategies;
    cert.lp_optimum = sol.optimum;
    cert.primal = sol.x;
    cert.dual = sol.y;
    cert.upper = to_int64(floor(sol.optimum)) + 1;
    return cert;
}

/// Adds a lower bound to the LP certificate. With no witness supplied the
/// max-unsolvable search runs with the LP bound as its ceiling.
inline BoundCertificate certify_rooted(const Graph& g, Vertex r, const std::vector<Strategy>& strategies,
                                       std::optional<Configuration> witness = std::nullopt,
                                       SearchOptions options = {}) {
    BoundCertificate cert = lp_bound(g, r, strategies);
    if (witness) {
        check_configuration(g, *witness);
        if (is_solvable(g, *witness, r, 1))
            throw std::invalid_argument("witness " + witness->to_string() + " reaches the root");
    } else {
        options.unsolvable_weight_bound = cert.upper - 1;
        witness = pebbling_number_rooted(g, r, 1, options).witness;
    }
    cert.lower = witness->weight() + 1;
    cert.lower_witness = std::move(witness);
    cert.verdict = cert.lower == cert.upper ? Verdict::exact : Verdict::gap;
    return cert;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline Json strategy_to_json(const Strategy& s) {
    Json doc;
    doc["root"] = s.root;
    Json edges = Json::array();
    for (const auto& [p, c] : s.edges()) edges.push_back({p, c});
    doc["edges"] = std::move(edges);
    Json weights = Json::object();
    for (Vertex v = 0; v < s.order(); ++v)
        if (s[v] != 0) weights[std::to_string(v)] = to_string(s[v]);
    doc["weights"] = std::move(weights);
    return doc;
}

/// Reads {"root"?, "edges": [[u, v], ...], "weights": {"v": "p/q"}}. Tree
/// edges may be given in either orientation; parents are found from the root.
inline Strategy strategy_from_json(const Json& doc, int order, std::optional<Vertex> default_root = std::nullopt) {
    if (!doc.is_object()) throw StrategyError("strategy must be a JSON object");
    Vertex root = 0;
    if (doc.contains("root")) {
        if (!doc["root"].is_number_integer()) throw StrategyError("strategy root must be an integer");
        root = doc["root"].get<Vertex>();
    } else if (default_root) {
        root = *default_root;
    } else {
        throw StrategyError("strategy has no root");
    }
    if (root < 0 || root >= order) throw StrategyError("strategy root out of range");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw StrategyError("strategy needs an \"edges\" array");

    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(order));
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw StrategyError("strategy edges must be pairs of integers");
        const Vertex u = e[0].get<Vertex>(), v = e[1].get<Vertex>();
        if (u < 0 || v < 0 || u >= order || v >= order) throw StrategyError("strategy edge endpoint out of range");
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    Strategy s(order, root);
    std::deque<Vertex> queue{root};
    std::size_t reached = 1;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : adj[static_cast<std::size_t>(u)])
            if (!s.in_tree(w)) {
                s.parent[static_cast<std::size_t>(w)] = u;
                queue.push_back(w);
                ++reached;
            }
    }
    if (reached != doc["edges"].size() + 1) throw StrategyError("strategy edges do not form a tree containing the root");

    if (doc.contains("weights")) {
        const Json& weights = doc["weights"];
        if (!weights.is_object()) throw StrategyError("strategy weights must be an object");
        for (const auto& [key, value] : weights.items()) {
            Vertex v = 0;
            try {
                v = std::stoi(key);
            } catch (const std::exception&) {
                throw StrategyError("weight key '" + key + "' is not a vertex id");
            }
            if (v < 0 || v >= order) throw StrategyError("weight key '" + key + "' out of range");
            if (value.is_number_integer())
                s.weight[static_cast<std::size_t>(v)] = Rational(value.get<long long>());
            else if (value.is_string())
                s.weight[static_cast<std::size_t>(v)] = parse_rational(value.get<std::string>());
            else
                throw StrategyError("weight of vertex " + key + " must be an integer or a \"p/q\" string");
        }
    }
    return s;
}

/// Accepts either an array of strategies or an object with a "strategies" array.
inline std::vector<Strategy> strategies_from_json(const Json& doc, int order, std::optional<Vertex> default_root) {
    const Json& list = doc.is_object() && doc.contains("strategies") ? doc["strategies"] : doc;
    if (!list.is_array()) throw StrategyError("expected a list of strategies");
    std::vector<Strategy> out;
    for (const auto& item : list) out.push_back(strategy_from_json(item, order, default_root));
    return out;
}

inline Json certificate_to_json(const BoundCertificate& cert) {
    Json doc;
    doc["root"] = cert.root;
    Json strategies = Json::array();
    for (const auto& s : cert.strategies) {
        Json item = strategy_to_json(s);
        item.erase("root");
        strategies.push_back(std::move(item));
    }
    doc["strategies"] = std::move(strategies);
    doc["lp_optimum"] = to_string(cert.lp_optimum);
    Json dual = Json::array();
    for (const auto& y : cert.dual) dual.push_back(to_string(y));
    doc["dual"] = std::move(dual);
    doc["upper"] = cert.upper;
    if (cert.lower_witness) {
        doc["lower_witness"] = {{"counts", cert.lower_witness->counts()}, {"weight", cert.lower_witness->weight()}};
        doc["lower"] = cert.lower;
    } else {
        doc["lower_witness"] = nullptr;
        doc["lower"] = nullptr;
    }
    doc["verdict"] = to_string(cert.verdict);
    return doc;
}

}  // namespace pebbling

#endif  // PEBBLING_CERTIFICATE_HPP
