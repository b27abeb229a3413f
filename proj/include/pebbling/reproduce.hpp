#ifndef PEBBLING_REPRODUCE_HPP
#define PEBBLING_REPRODUCE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pebbling/certificate.hpp"
#include "pebbling/families.hpp"
#include "pebbling/formulas.hpp"
#include "pebbling/invariants.hpp"
#include "pebbling/path_partition.hpp"
#include "pebbling/strategy.hpp"

namespace pebbling {

enum class Agreement { yes, no, unknown };

inline std::string to_string(Agreement a) {
    switch (a) {
        case Agreement::yes: return "yes";
        case Agreement::no: return "no";
        case Agreement::unknown: return "unknown";
    }
    return "unknown";
}

/// One line of the reproduction table. `formula` is the closed form or
/// bound, `computed` what the solver or certificate produced.
struct ReproRow {
    int section = 0;
    std::string family;
    std::string params;
    std::string quantity;
    std::string formula;
    std::string computed;
    std::string method;
    Agreement agree = Agreement::unknown;
};

struct ReproOptions {
    std::set<int> sections{1, 2, 3, 4};
    int max_n = 3;
    std::uint64_t budget = 10'000'000;
    unsigned jobs = 1;
};

inline const std::string& repro_csv_header() {
    static const std::string header = "section,family,params,quantity,formula,computed,method,agree";
    return header;
}

inline std::string to_csv(const ReproRow& row) {
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << row.section << ',' << quote(row.family) << ',' << quote(row.params) << ',' << quote(row.quantity) << ','
        << quote(row.formula) << ',' << quote(row.computed) << ',' << quote(row.method) << ',' << to_string(row.agree);
    return out.str();
}

namespace detail {

using RowTask = std::function<ReproRow()>;

inline std::string method_of(const InvariantResult& r) { return r.exhaustive ? "exhaustive" : "budget-exhausted"; }

inline std::string computed_of(const InvariantResult& r) {
    if (r.exhaustive) return std::to_string(r.value);
    return "[" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
}

inline ReproRow equality_row(int section, std::string family, std::string params, std::string quantity,
                             std::int64_t formula, const InvariantResult& r) {
    Agreement agree = !r.exhaustive ? (formula >= r.lower && formula <= r.upper ? Agreement::unknown : Agreement::no)
                                    : (r.value == formula ? Agreement::yes : Agreement::no);
    return {section, std::move(family), std::move(params), std::move(quantity), std::to_string(formula),
            computed_of(r), method_of(r), agree};
}

/// pi <= bound; when `sharp` also pi == bound.
inline ReproRow bound_row(int section, std::string family, std::string params, const BoundValue& bound,
                          const InvariantResult& r, bool sharp) {
    Agreement agree = Agreement::unknown;
    if (r.exhaustive)
        agree = (sharp ? r.value == bound.value : r.value <= bound.value) ? Agreement::yes : Agreement::no;
    else if (r.lower > bound.value)
        agree = Agreement::no;
    return {section, std::move(family), std::move(params), std::string(sharp ? "pi=" : "pi<=") + bound.source,
            std::to_string(bound.value), computed_of(r), method_of(r), agree};
}

inline ReproRow certificate_row(int section, std::string family, std::string params, std::int64_t formula,
                                const BoundCertificate& cert) {
    const bool exact = cert.verdict == Verdict::exact;
    return {section,
            std::move(family),
            std::move(params),
            "pi(G,r)",
            std::to_string(formula),
            exact ? std::to_string(cert.upper)
                  : "[" + std::to_string(cert.lower) + "," + std::to_string(cert.upper) + "]",
            "certificate",
            exact ? (cert.upper == formula ? Agreement::yes : Agreement::no)
                  : (formula >= cert.lower && formula <= cert.upper ? Agreement::unknown : Agreement::no)};
}

inline std::string pstr(std::initializer_list<std::pair<const char*, int>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ' ';
        out += std::string(k) + "=" + std::to_string(v);
    }
    return out;
}

inline Graph make_spider(const std::vector<int>& legs) {
    int order = 1;
    for (int l : legs) order += l;
    Graph g(order);
    Vertex next = 1;
    for (int l : legs) {
        Vertex prev = 0;
        for (int i = 0; i < l; ++i, ++next) {
            g.add_edge(prev, next);
            prev = next;
        }
    }
    return g;
}

inline void section1_rows(const ReproOptions& o, std::vector<RowTask>& tasks) {
    SearchOptions s;
    s.budget = o.budget;
    for (int d = 1; d <= std::min(o.max_n, 3); ++d)
        tasks.push_back([=] {
            Graph g = make_hypercube(d);
            auto r = pebbling_number(g, 1, s);
            auto row = equality_row(1, "hypercube", pstr({{"d", d}}), "pi", detail::pow2(d), r);
            return row;
        });
    auto class_row = [s](std::string family, std::string params, Graph g, PebblingClass expected) {
        return [=] {
            auto r = pebbling_number(g, 1, s);
            const PebblingClass got = r.value == g.order()       ? PebblingClass::class0
                                      : r.value == g.order() + 1 ? PebblingClass::class1
                                                                 : PebblingClass::neither;
            return ReproRow{1, family, params, "class", to_string(expected), to_string(got), method_of(r),
                            !r.exhaustive ? Agreement::unknown : got == expected ? Agreement::yes : Agreement::no};
        };
    };
    tasks.push_back(class_row("hypercube", "d=3", make_hypercube(3), PebblingClass::class0));
    for (int n = 2; n <= o.max_n; ++n)
        tasks.push_back(class_row("friendship", pstr({{"n", n}, {"m", 3}}), make_friendship(n, 3), PebblingClass::class1));
    tasks.push_back(class_row("path", "n=4", make_path(4), PebblingClass::neither));
}

inline void section2_rows(const ReproOptions& o, std::vector<RowTask>& tasks) {
    SearchOptions s;
    s.budget = o.budget;
    for (int t = 1; t <= 2; ++t)
        for (int m = 3; m <= 2 * o.max_n + 2; ++m)
            tasks.push_back([=] {
                return equality_row(2, "cycle", pstr({{"m", m}, {"t", t}}), "pi_t", cycle_pi(m, t).value,
                                    pebbling_number(make_cycle(m), t, s));
            });
    for (int n = 2; n <= o.max_n; ++n) {
        tasks.push_back([=] {
            return equality_row(2, "friendship", pstr({{"n", n}, {"m", 3}}), "pi", friendship3_pi(n).value,
                                pebbling_number(make_friendship(n, 3), 1, s));
        });
        tasks.push_back([=] {
            return equality_row(2, "friendship", pstr({{"n", n}, {"m", 3}}), "pi*", 2,
                                optimal_pebbling(make_friendship(n, 3), std::nullopt, s));
        });
        tasks.push_back([=] {
            return equality_row(2, "friendship", pstr({{"n", n}, {"m", 3}}), "pi*_2", 2,
                                optimal_pebbling(make_friendship(n, 3), 2, s));
        });
    }
    for (int n = 2; n <= o.max_n + 1; ++n) {
        tasks.push_back([=] {
            return equality_row(2, "friendship", pstr({{"n", n}, {"m", 4}}), "pi", fn4_suite(n).pi,
                                pebbling_number(make_friendship(n, 4), 1, s));
        });
        tasks.push_back([=] {
            return equality_row(2, "friendship", pstr({{"n", n}, {"m", 4}}), "pi(G,hub)", friendship_hub_pi(n, 2).value,
                                pebbling_number_rooted(make_friendship(n, 4), 0, 1, s));
        });
        tasks.push_back([=] {
            return equality_row(2, "friendship", pstr({{"n", n}, {"m", 4}}), "pi*", fn4_suite(n).pi_star,
                                optimal_pebbling(make_friendship(n, 4), std::nullopt, s));
        });
        tasks.push_back([=] {
            return equality_row(2, "friendship", pstr({{"n", n}, {"m", 4}}), "pi*_2", fn4_suite(n).pi_star_2,
                                optimal_pebbling(make_friendship(n, 4), 2, s));
        });
    }
    for (int n = 2; n <= o.max_n - 1; ++n)
        tasks.push_back([=] {
            return equality_row(2, "friendship", pstr({{"n", n}, {"m", 6}}), "pi", friendship_even_pi(n, 3).value,
                                pebbling_number(make_friendship(n, 6), 1, s));
        });
}

inline void section3_rows(const ReproOptions& o, std::vector<RowTask>& tasks) {
    SearchOptions s;
    s.budget = o.budget;
    for (int n = 1; n <= o.max_n; ++n)
        for (bool pendant : {false, true})
            tasks.push_back([=] {
                return equality_row(3, pendant ? "tchain+e" : "tchain", pstr({{"n", n}}), "pi",
                                    triangular_chain_pi(n, pendant).value,
                                    pebbling_number(make_triangular_chain(n, pendant), 1, s));
            });

    const std::vector<std::pair<std::string, std::vector<int>>> spiders{
        {"legs=3", {3}}, {"legs=1,1,1", {1, 1, 1}}, {"legs=3,2,2", {3, 2, 2}}, {"legs=2,2,1,1", {2, 2, 1, 1}}};
    for (const auto& [name, legs] : spiders)
        for (int t = 1; t <= 2; ++t)
            tasks.push_back([=, name = name, legs = legs] {
                Graph tree = make_spider(legs);
                const Vertex leaf = static_cast<Vertex>(legs.front());
                return equality_row(3, "spider", name + " root=" + std::to_string(leaf) + " t=" + std::to_string(t),
                                    "pi_t(T,r)", tree_pi(tree, leaf, t).value, pebbling_number_rooted(tree, leaf, t, s));
            });

    const int exhaustive_max = std::min(o.max_n, 2);
    for (int n = 1; n <= exhaustive_max; ++n) {
        tasks.push_back([=] {
            return equality_row(3, "sqchain-para", pstr({{"n", n}}), "pi", square_chain_pi(n, SquareKind::para).value,
                                pebbling_number(make_square_chain(n, SquareKind::para), 1, s));
        });
        tasks.push_back([=] {
            return equality_row(3, "sqchain-para+e", pstr({{"n", n}}), "pi",
                                square_chain_pi(n, SquareKind::para, true).value,
                                pebbling_number(make_square_chain(n, SquareKind::para, true), 1, s));
        });
    }
    for (int n = 2; n <= exhaustive_max; ++n)
        tasks.push_back([=] {
            return equality_row(3, "sqchain-ortho", pstr({{"n", n}}), "pi", square_chain_pi(n, SquareKind::ortho).value,
                                pebbling_number(make_square_chain(n, SquareKind::ortho), 1, s));
        });
    for (int n = 1; n <= o.max_n; ++n) {
        tasks.push_back([=] {
            return certificate_row(3, "sqchain-para", pstr({{"n", n}, {"root", 0}}),
                                   square_chain_pi(n, SquareKind::para).value,
                                   certify_rooted(make_square_chain(n, SquareKind::para), 0, para_chain_strategies(n),
                                                  std::nullopt, s));
        });
        if (n >= 2)
            tasks.push_back([=] {
                return certificate_row(3, "sqchain-ortho", pstr({{"n", n}, {"root", 0}}),
                                       square_chain_pi(n, SquareKind::ortho).value,
                                       certify_rooted(make_square_chain(n, SquareKind::ortho), 0,
                                                      ortho_chain_strategies(n), std::nullopt, s));
            });
    }
    // Beyond exhaustive reach only the LP side of the sandwich is computed.
    for (const auto& [kind, n] : {std::pair{SquareKind::para, 10}, std::pair{SquareKind::ortho, 10}})
        tasks.push_back([kind = kind, n = n] {
            Graph g = make_square_chain(n, kind);
            auto cert = lp_bound(g, 0, kind == SquareKind::para ? para_chain_strategies(n) : ortho_chain_strategies(n));
            const auto formula = square_chain_pi(n, kind).value;
            return ReproRow{3, "sqchain-" + to_string(kind), pstr({{"n", n}, {"root", 0}}), "pi(G,r)<=",
                            std::to_string(formula), std::to_string(cert.upper), "lp-bound",
                            cert.upper == formula ? Agreement::yes : Agreement::no};
        });
}

inline void section4_rows(const ReproOptions& o, std::vector<RowTask>& tasks) {
    SearchOptions s;
    s.budget = o.budget;
    tasks.push_back([=] {
        return equality_row(4, "qnm", "n=3 m=3", "pi", qnm_pi(3, 3).pi, pebbling_number(make_qnm(3, 3), 1, s));
    });
    tasks.push_back([=] {
        return equality_row(4, "qnm", "n=3 m=3", "pi*", qnm_pi(3, 3).pi_star,
                            optimal_pebbling(make_qnm(3, 3), std::nullopt, s));
    });
    for (int h = 1; h <= std::min(o.max_n, 2); ++h)
        tasks.push_back([=] {
            return equality_row(4, "corona", pstr({{"n", 3}, {"h", h}}), "pi", corona_complete_pi(3, h).pi,
                                pebbling_number(make_corona(make_complete(3), make_complete(h)), 1, s));
        });
    if (o.max_n >= 3)
        tasks.push_back([=] {
            return equality_row(4, "qnm", "n=3 m=4", "pi", qnm_pi(3, 4).pi, pebbling_number(make_qnm(3, 4), 1, s));
        });

    for (int n = 1; n <= std::min(o.max_n, 2); ++n) {
        tasks.push_back([=] {
            std::vector<std::int64_t> pis(static_cast<std::size_t>(n), 4);
            return bound_row(4, "sqchain-para", pstr({{"n", n}}), product_bound(pis),
                             pebbling_number(make_square_chain(n, SquareKind::para), 1, s), true);
        });
        tasks.push_back([=] {
            std::vector<std::int64_t> pis(static_cast<std::size_t>(n), 4);
            return bound_row(4, "sqchain-link", pstr({{"n", n}}), link_bound(pis),
                             pebbling_number(make_square_chain(n, SquareKind::para, false, true), 1, s), true);
        });
    }
    for (int n = 2; n <= o.max_n; ++n) {
        tasks.push_back([=] {
            std::vector<std::int64_t> pis(static_cast<std::size_t>(n), 3);
            return bound_row(4, "friendship", pstr({{"n", n}, {"m", 3}}), bouquet_bound(pis),
                             pebbling_number(make_friendship(n, 3), 1, s), false);
        });
        tasks.push_back([=] {
            std::vector<std::int64_t> pis(static_cast<std::size_t>(n), 3);
            return bound_row(4, "friendship", pstr({{"n", n}, {"m", 3}}), product_bound(pis),
                             pebbling_number(make_friendship(n, 3), 1, s), false);
        });
    }
    for (int n = 2; n <= o.max_n + 1; ++n)
        tasks.push_back([=] {
            std::vector<std::int64_t> pis(static_cast<std::size_t>(n), 4);
            const auto bound = bouquet_bound(pis);
            const auto formula = fn4_suite(n).pi;
            return ReproRow{4, "friendship", pstr({{"n", n}, {"m", 4}}), "pi=" + bound.source, std::to_string(bound.value),
                            std::to_string(formula), "formula", bound.value == formula ? Agreement::yes : Agreement::no};
        });
}

}  // namespace detail

/// Runs every selected row. Rows come back in a fixed order regardless of
/// how many run concurrently.
inline std::vector<ReproRow> reproduce(const ReproOptions& options) {
    if (options.max_n < 1) throw std::invalid_argument("max-n must be at least 1");
    std::vector<detail::RowTask> tasks;
    if (options.sections.count(1)) detail::section1_rows(options, tasks);
    if (options.sections.count(2)) detail::section2_rows(options, tasks);
    if (options.sections.count(3)) detail::section3_rows(options, tasks);
    if (options.sections.count(4)) detail::section4_rows(options, tasks);

    std::vector<ReproRow> rows(tasks.size());
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    for (std::size_t start = 0; start < tasks.size(); start += jobs) {
        std::vector<std::future<ReproRow>> batch;
        const std::size_t end = std::min(tasks.size(), start + jobs);
        for (std::size_t i = start; i < end; ++i)
            batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, tasks[i]));
        for (std::size_t i = start; i < end; ++i) rows[i] = batch[i - start].get();
    }
    return rows;
}

}  // namespace pebbling

#endif  // PEBBLING_REPRODUCE_HPP
