#ifndef PEBBLING_CONFIGURATION_HPP
#define PEBBLING_CONFIGURATION_HPP

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

class ConfigurationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Pebble counts per vertex.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(int order) : counts_(static_cast<std::size_t>(order), 0) {}
    explicit Configuration(std::vector<int> counts) : counts_(std::move(counts)) {
        for (int c : counts_)
            if (c < 0) throw ConfigurationError("pebble counts must be nonnegative");
    }
    Configuration(std::initializer_list<int> counts) : Configuration(std::vector<int>(counts)) {}

    /// All pebbles on one vertex.
    static Configuration single(int order, Vertex v, int pebbles) {
        Configuration f(order);
        f.set(v, pebbles);
        return f;
    }

    int order() const { return static_cast<int>(counts_.size()); }
    int operator[](Vertex v) const { return counts_.at(static_cast<std::size_t>(v)); }
    void set(Vertex v, int pebbles) {
        if (pebbles < 0) throw ConfigurationError("pebble counts must be nonnegative");
        counts_.at(static_cast<std::size_t>(v)) = pebbles;
    }
    const std::vector<int>& counts() const { return counts_; }

    /// |f|
    std::int64_t weight() const {
        return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
    }

    /// Pointwise f <= other.
    bool dominated_by(const Configuration& other) const {
        if (other.order() != order()) return false;
        for (std::size_t i = 0; i < counts_.size(); ++i)
            if (counts_[i] > other.counts_[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(counts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;

private:
    std::vector<int> counts_;
};

/// One pebbling step: two pebbles leave `from`, one arrives at `to`.
struct Move {
    Vertex from = 0;
    Vertex to = 0;
    friend bool operator==(const Move&, const Move&) = default;
};

using MoveSequence = std::vector<Move>;

/// Replays `moves` from `f`; nullopt if a step is not an edge or would
/// drive a count negative.
inline std::optional<Configuration> replay(const Graph& g, Configuration f, const MoveSequence& moves) {
    if (f.order() != g.order()) return std::nullopt;
    for (const Move& m : moves) {
        if (!g.has_edge(m.from, m.to) || f[m.from] < 2) return std::nullopt;
        f.set(m.from, f[m.from] - 2);
        f.set(m.to, f[m.to] + 1);
    }
    return f;
}

inline void check_configuration(const Graph& g, const Configuration& f) {
    if (f.order() != g.order())
        throw ConfigurationError("configuration has " + std::to_string(f.order()) +
                                 " entries but the graph has " + std::to_string(g.order()) + " vertices");
}

}  // namespace pebbling

#endif  // PEBBLING_CONFIGURATION_HPP
