#ifndef PEBBLING_FORMULAS_HPP
#define PEBBLING_FORMULAS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pebbling/families.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

/// Raised when a closed form is asked for outside the range it is proven on.
class FormulaDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class BoundKind { exact, upper, lower };

inline std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::exact: return "exact";
        case BoundKind::upper: return "upper";
        case BoundKind::lower: return "lower";
    }
    return "exact";
}

struct BoundValue {
    std::int64_t value = 0;
    BoundKind kind = BoundKind::exact;
    std::string source;
    friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

namespace detail {

inline std::int64_t pow2(int k) {
    if (k < 0 || k > 61) throw std::overflow_error("2^" + std::to_string(k) + " out of range");
    return std::int64_t{1} << k;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("pebbling bound overflows 64 bits");
    return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("pebbling bound overflows 64 bits");
    return out;
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw FormulaDomainError(what);
}

}  // namespace detail

/// pi_t(C_m): t 2^n for m = 2n; (2^(n+2) - (-1)^n)/3 + 2^n (t-1) for m = 2n+1.
inline BoundValue cycle_pi(int m, int t = 1) {
    detail::require(m >= 3, "cycle_pi needs m >= 3");
    detail::require(t >= 1, "cycle_pi needs t >= 1");
    const int n = m / 2;
    if (m % 2 == 0) return {detail::checked_mul(t, detail::pow2(n)), BoundKind::exact, "cycle-even"};
    const std::int64_t sign = n % 2 == 0 ? 1 : -1;
    const std::int64_t base = (detail::pow2(n + 2) - sign) / 3;
    return {detail::checked_add(base, detail::checked_mul(detail::pow2(n), t - 1)), BoundKind::exact, "cycle-odd"};
}

/// pi(F_{n,2k}) = 2^(2k) + (2^k - 1)(n - 2), n, k >= 2.
inline BoundValue friendship_even_pi(int n, int k) {
    detail::require(n >= 2 && k >= 2, "friendship_even_pi needs n >= 2 and k >= 2");
    return {detail::checked_add(detail::pow2(2 * k), detail::checked_mul(detail::pow2(k) - 1, n - 2)),
            BoundKind::exact, "friendship-even"};
}

/// pi(F_{n,2k}, hub) = n (2^k - 1) + 1.
inline BoundValue friendship_hub_pi(int n, int k) {
    detail::require(n >= 2 && k >= 2, "friendship_hub_pi needs n >= 2 and k >= 2");
    return {detail::checked_add(detail::checked_mul(n, detail::pow2(k) - 1), 1), BoundKind::exact, "friendship-even-hub"};
}

/// pi(F_{n,3}) = 2n + 2.
inline BoundValue friendship3_pi(int n) {
    detail::require(n >= 2, "friendship3_pi needs n >= 2");
    return {2 * static_cast<std::int64_t>(n) + 2, BoundKind::exact, "friendship-3"};
}

struct Fn4Suite {
    std::int64_t pi = 0;
    std::int64_t pi_star = 0;
    std::int64_t pi_star_2 = 0;
    friend bool operator==(const Fn4Suite&, const Fn4Suite&) = default;
};

/// pi, pi* and pi*_2 of F_{n,4}.
inline Fn4Suite fn4_suite(int n) {
    detail::require(n >= 2, "fn4_suite needs n >= 2");
    return {3 * static_cast<std::int64_t>(n) + 10, 4, n == 2 ? 4 : n == 3 ? 5 : 6};
}

/// pi(T_n) = 2^n + n; with the pendant vertex 2^(n+1) + n.
inline BoundValue triangular_chain_pi(int n, bool pendant = false) {
    detail::require(n >= 1, "triangular_chain_pi needs n >= 1");
    return {detail::checked_add(detail::pow2(pendant ? n + 1 : n), n), BoundKind::exact,
            pendant ? "triangular-chain-pendant" : "triangular-chain"};
}

/// Rooted at the chain's terminal vertex 0 (the eccentricity-maximizing
/// root): para 2^(2n), para with pendant 2^(2n+1), ortho 2^(n+2) + 2n - 4.
inline BoundValue square_chain_pi(int n, SquareKind kind, bool pendant = false) {
    detail::require(n >= 1, "square_chain_pi needs n >= 1");
    if (kind == SquareKind::para)
        return {detail::pow2(pendant ? 2 * n + 1 : 2 * n), BoundKind::exact, pendant ? "para-chain-pendant" : "para-chain"};
    detail::require(n >= 2, "square_chain_pi(ortho) needs n >= 2");
    detail::require(!pendant, "square_chain_pi has no closed form for ortho chains with a pendant");
    return {detail::checked_add(detail::pow2(n + 2), 2 * static_cast<std::int64_t>(n) - 4), BoundKind::exact, "ortho-chain"};
}

struct CoronaValues {
    std::int64_t pi = 0;
    std::int64_t pi_star = 0;
    friend bool operator==(const CoronaValues&, const CoronaValues&) = default;
};

/// K_n o H with |H| = h, n > 2: pi = nh + 2n + 2, pi* = 4.
inline CoronaValues corona_complete_pi(int n, int h) {
    detail::require(n > 2, "corona_complete_pi needs n > 2");
    detail::require(h >= 1, "corona_complete_pi needs h >= 1");
    return {detail::checked_add(detail::checked_mul(n, h), 2 * static_cast<std::int64_t>(n) + 2), 4};
}

/// Q(n, m) = K_n o K_(m-1), n > 2: pi = mn + n + 2, pi* = 4.
inline CoronaValues qnm_pi(int n, int m) {
    detail::require(n > 2, "qnm_pi needs n > 2");
    detail::require(m >= 2, "qnm_pi needs m >= 2");
    return {detail::checked_add(detail::checked_mul(m, n), static_cast<std::int64_t>(n) + 2), 4};
}

namespace detail {
inline void require_pi_list(const std::vector<std::int64_t>& pis, const std::string& who) {
    require(!pis.empty(), who + " needs at least one monomer");
    for (auto p : pis) require(p >= 1, who + " needs positive pebbling numbers");
}
}  // namespace detail

/// Point-attached polymer: pi(G) <= prod pi(G_i).
inline BoundValue product_bound(const std::vector<std::int64_t>& pis) {
    detail::require_pi_list(pis, "product_bound");
    std::int64_t out = 1;
    for (auto p : pis) out = detail::checked_mul(out, p);
    return {out, BoundKind::upper, "polymer-product"};
}

/// Link of n graphs: pi(G) <= 2^(n-1) prod pi(G_i).
inline BoundValue link_bound(const std::vector<std::int64_t>& pis) {
    detail::require_pi_list(pis, "link_bound");
    std::int64_t out = detail::pow2(static_cast<int>(pis.size()) - 1);
    for (auto p : pis) out = detail::checked_mul(out, p);
    return {out, BoundKind::upper, "polymer-link"};
}

/// Bouquet: pi(G) <= pi_1 pi_2 + sum_{i>=3} (pi_i - 1) with pi_1 >= pi_2 >= ...
/// (the input is sorted here). A single monomer bounds itself.
inline BoundValue bouquet_bound(std::vector<std::int64_t> pis) {
    detail::require_pi_list(pis, "bouquet_bound");
    std::sort(pis.begin(), pis.end(), std::greater<>());
    if (pis.size() == 1) return {pis.front(), BoundKind::upper, "polymer-bouquet"};
    std::int64_t out = detail::checked_mul(pis[0], pis[1]);
    for (std::size_t i = 2; i < pis.size(); ++i) out = detail::checked_add(out, pis[i] - 1);
    return {out, BoundKind::upper, "polymer-bouquet"};
}

/// pi(G) >= max(|V|, 2^diam(G)).
inline BoundValue lower_bounds(const Graph& g) {
    return {std::max<std::int64_t>(g.order(), detail::pow2(diameter(g))), BoundKind::lower, "order-diameter"};
}

}  // namespace pebbling

#endif  // PEBBLING_FORMULAS_HPP
