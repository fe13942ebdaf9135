#pragma once

#include "aalpha/digraph.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aalpha {

/// Largest order for unrestricted enumeration (2^{n(n-1)} masks) and for the
/// arc-count-pinned tree/unicyclic streams.
inline constexpr int enumeration_cap_full = 5;
inline constexpr int enumeration_cap_pinned = 6;

struct EnumerationFilter {
    int n = 0;
    bool connected = false;
    bool strongly_connected = false;
    bool directed_tree = false; // pins arc count to n-1
    bool unicyclic = false;     // pins arc count to n
    bool no_symmetric_arcs = false;
};

namespace detail {

/// Ordered pairs (u,v), u != v, in tail-major lexicographic order; bit k of a
/// mask is pair k.
inline std::vector<std::pair<int, int>> pair_table(int n) {
    std::vector<std::pair<int, int>> t;
    t.reserve(static_cast<size_t>(n) * (n - 1));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) t.emplace_back(u, v);
    return t;
}

inline Digraph mask_to_digraph(int n, uint64_t mask,
                               const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(std::popcount(mask)));
    for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        const auto& [u, v] = pairs[static_cast<size_t>(std::countr_zero(rest))];
        arcs.push_back({u, v});
    }
    return Digraph(n, std::move(arcs));
}

inline bool mask_has_symmetric_pair(uint64_t mask, int n) {
    // pair index of (u,v): u*(n-1) + v - (v > u)
    auto idx = [n](int u, int v) { return u * (n - 1) + v - (v > u ? 1 : 0); };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((mask >> idx(u, v) & 1) && (mask >> idx(v, u) & 1)) return true;
    return false;
}

} // namespace detail

/// Streams every labeled digraph on filter.n vertices passing the filter, in
/// ascending arc-mask order, each exactly once.  Deterministic.
template <class Fn>
void enumerate(const EnumerationFilter& filter, Fn&& fn) {
    const int n = filter.n;
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    const bool pinned = filter.directed_tree || filter.unicyclic;
    if (filter.directed_tree && filter.unicyclic)
        throw std::invalid_argument("directed-tree and unicyclic filters are exclusive");
    if (!pinned && n > enumeration_cap_full)
        throw std::invalid_argument("unrestricted enumeration supported only for n <= " +
                                    std::to_string(enumeration_cap_full));
    if (pinned && n > enumeration_cap_pinned)
        throw std::invalid_argument("filtered enumeration supported only for n <= " +
                                    std::to_string(enumeration_cap_pinned));

    const int bits = n * (n - 1);
    const auto pairs = detail::pair_table(n);

    auto emit = [&](uint64_t mask) {
        if (filter.no_symmetric_arcs && detail::mask_has_symmetric_pair(mask, n)) return;
        Digraph g = detail::mask_to_digraph(n, mask, pairs);
        if (filter.connected && !is_connected(g)) return;
        if (filter.strongly_connected && !is_strongly_connected(g)) return;
        if (filter.directed_tree && !is_connected(g)) return;
        if (filter.unicyclic && !(is_connected(g) && count_directed_cycles(g, 2) == 1)) return;
        fn(g);
    };

    if (!pinned) {
        const uint64_t total = bits >= 64 ? 0 : (uint64_t{1} << bits);
        for (uint64_t mask = 0; mask < total; ++mask) emit(mask);
        return;
    }

    // Gosper's hack: all masks of fixed popcount in ascending value order.
    const int k = filter.directed_tree ? n - 1 : n;
    if (k == 0) {
        emit(0);
        return;
    }
    if (k > bits) return;
    const uint64_t limit = uint64_t{1} << bits;
    uint64_t mask = (uint64_t{1} << k) - 1;
    while (mask < limit) {
        emit(mask);
        uint64_t c = mask & -mask;
        uint64_t r = mask + c;
        if (r >= limit || c == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

} // namespace aalpha
