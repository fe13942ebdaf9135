#pragma once

#include "aalpha/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace aalpha {

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Digraph make_directed_cycle(int n) {
    if (n < 2) throw std::invalid_argument("directed cycle needs n >= 2");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    return Digraph(n, std::move(arcs));
}

/// parent[i] = -1 marks the unique root; every other vertex points to its
/// parent.  The assignment must be acyclic.
inline Digraph make_intree(const std::vector<int>& parent) {
    const int n = static_cast<int>(parent.size());
    if (n < 1) throw std::invalid_argument("intree needs at least one vertex");
    int roots = 0;
    for (int i = 0; i < n; ++i) {
        if (parent[static_cast<size_t>(i)] == -1) {
            ++roots;
            continue;
        }
        if (parent[static_cast<size_t>(i)] < 0 || parent[static_cast<size_t>(i)] >= n ||
            parent[static_cast<size_t>(i)] == i)
            throw std::invalid_argument("parent index out of range");
    }
    if (roots != 1) throw std::invalid_argument("intree needs exactly one root");
    for (int i = 0; i < n; ++i) {
        int v = i, steps = 0;
        while (parent[static_cast<size_t>(v)] != -1) {
            v = parent[static_cast<size_t>(v)];
            if (++steps > n) throw std::invalid_argument("parent assignment contains a cycle");
        }
    }
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n) - 1);
    for (int i = 0; i < n; ++i)
        if (parent[static_cast<size_t>(i)] != -1) arcs.push_back({i, parent[static_cast<size_t>(i)]});
    return Digraph(n, std::move(arcs));
}

/// Path intree 0 -> 1 -> ... -> n-1 with root n-1.
inline Digraph make_intree_path(int n) {
    if (n < 1) throw std::invalid_argument("intree needs at least one vertex");
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i + 1 < n; ++i) parent[static_cast<size_t>(i)] = i + 1;
    parent[static_cast<size_t>(n) - 1] = -1;
    return make_intree(parent);
}

inline Digraph make_outstar(int n) {
    if (n < 2) throw std::invalid_argument("outstar needs n >= 2");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n) - 1);
    for (int j = 1; j < n; ++j) arcs.push_back({0, j});
    return Digraph(n, std::move(arcs));
}

inline Digraph make_symmetric_complete(int n) {
    if (n < 2) throw std::invalid_argument("symmetric complete digraph needs n >= 2");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n) * (n - 1));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.push_back({u, v});
    return Digraph(n, std::move(arcs));
}

/// Directed a-cycle on 0..a-1 plus the outstar arcs (0, j) for j = a..n-1.
inline Digraph make_C_a_k(int n, int a) {
    if (a < 2 || a > n) throw std::invalid_argument("cycle length must satisfy 2 <= a <= n");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < a; ++i) arcs.push_back({i, (i + 1) % a});
    for (int j = a; j < n; ++j) arcs.push_back({0, j});
    return Digraph(n, std::move(arcs));
}

/// Directed a-cycle on 0..a-1 with intrees hanging from it: every vertex
/// i >= a points to parent[i - a], and each parent chain must reach the
/// cycle.  All outdegrees are exactly 1.
inline Digraph make_D_member(int n, int a, const std::vector<int>& parent) {
    if (a < 3) throw std::invalid_argument("D-family cycle length must be at least 3");
    if (a > n) throw std::invalid_argument("cycle length exceeds vertex count");
    if (static_cast<int>(parent.size()) != n - a)
        throw std::invalid_argument("parent list must cover vertices a..n-1");
    for (int i = a; i < n; ++i) {
        int p = parent[static_cast<size_t>(i - a)];
        if (p < 0 || p >= n || p == i) throw std::invalid_argument("parent index out of range");
    }
    for (int i = a; i < n; ++i) {
        int v = i, steps = 0;
        while (v >= a) {
            v = parent[static_cast<size_t>(v - a)];
            if (++steps > n) throw std::invalid_argument("parent chain does not reach the cycle");
        }
    }
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n));
    for (int i = 0; i < a; ++i) arcs.push_back({i, (i + 1) % a});
    for (int i = a; i < n; ++i) arcs.push_back({i, parent[static_cast<size_t>(i - a)]});
    return Digraph(n, std::move(arcs));
}

/// D-family member with a single path intree hanging off cycle vertex 0.
inline Digraph make_D_member_path(int n, int a) {
    if (a > n) throw std::invalid_argument("cycle length exceeds vertex count");
    std::vector<int> parent(static_cast<size_t>(n - a));
    for (int i = a; i < n; ++i) parent[static_cast<size_t>(i - a)] = (i == a) ? 0 : i - 1;
    return make_D_member(n, a, parent);
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class Family {
    DirectedCycle,
    DirectedPath,
    Intree,
    Outstar,
    DirectedTree,
    SymmetricComplete,
    CompleteUnderlying,
    Regular,
    OutdegreeRegular,
    OutdegreeSemiregular,
    SymmetricDigraph,
    Unicyclic,
    UnicyclicCaK,
    UnicyclicC2K,
    DFamilyMember,
    General,
};

struct FamilyTag {
    Family kind = Family::General;
    int n = 0;
    int a = 0; // cycle length for the cycle-based families, else 0

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
    friend auto operator<=>(const FamilyTag&, const FamilyTag&) = default;
};

inline std::string to_string(Family f) {
    switch (f) {
        case Family::DirectedCycle: return "directed-cycle";
        case Family::DirectedPath: return "directed-path";
        case Family::Intree: return "intree";
        case Family::Outstar: return "outstar";
        case Family::DirectedTree: return "directed-tree";
        case Family::SymmetricComplete: return "symmetric-complete";
        case Family::CompleteUnderlying: return "complete-underlying";
        case Family::Regular: return "regular";
        case Family::OutdegreeRegular: return "outdegree-regular";
        case Family::OutdegreeSemiregular: return "outdegree-semiregular";
        case Family::SymmetricDigraph: return "symmetric";
        case Family::Unicyclic: return "unicyclic";
        case Family::UnicyclicCaK: return "unicyclic-c-a-k";
        case Family::UnicyclicC2K: return "unicyclic-c-2-k";
        case Family::DFamilyMember: return "d-family";
        case Family::General: return "general";
    }
    return "general";
}

inline std::string to_string(const FamilyTag& t) {
    std::string s = to_string(t.kind);
    if (t.a > 0) s += "(a=" + std::to_string(t.a) + ")";
    return s;
}

inline bool is_directed_tree(const Digraph& g) {
    return g.arc_count() == g.order() - 1 && is_connected(g);
}

inline bool is_intree(const Digraph& g) {
    if (!is_directed_tree(g)) return false;
    return degree_profile(g).max_out <= 1;
}

inline bool is_outstar(const Digraph& g) {
    if (g.order() < 2 || g.arc_count() != g.order() - 1) return false;
    DegreeProfile p = degree_profile(g);
    return p.max_out == g.order() - 1;
}

inline bool is_directed_cycle_graph(const Digraph& g) {
    if (g.order() < 2 || g.arc_count() != g.order()) return false;
    DegreeProfile p = degree_profile(g);
    return p.max_out == 1 && p.min_out == 1 && p.max_in == 1 && p.min_in == 1 &&
           is_connected(g);
}

inline bool is_directed_path_graph(const Digraph& g) {
    if (g.order() < 2 || g.arc_count() != g.order() - 1) return false;
    DegreeProfile p = degree_profile(g);
    return p.max_out <= 1 && p.max_in <= 1 && is_connected(g);
}

/// Unicyclic with a directed a-cycle and all remaining vertices fed by
/// out-arcs of a single cycle vertex (outstar centred on the cycle).
inline bool is_C_a_k(const Digraph& g, int& a_out) {
    if (!is_unicyclic(g)) return false;
    std::vector<int> cycle = unique_directed_cycle(g);
    const int a = static_cast<int>(cycle.size());
    std::vector<char> on_cycle(static_cast<size_t>(g.order()), 0);
    for (int v : cycle) on_cycle[static_cast<size_t>(v)] = 1;
    DegreeProfile p = degree_profile(g);
    int center = -1;
    for (const Arc& arc : g.arcs()) {
        bool cycle_arc = on_cycle[static_cast<size_t>(arc.tail)] &&
                         on_cycle[static_cast<size_t>(arc.head)];
        if (cycle_arc) continue;
        if (!on_cycle[static_cast<size_t>(arc.tail)]) return false; // arcs leave the cycle only
        if (center == -1) center = arc.tail;
        if (arc.tail != center) return false;
        if (p.outdeg[static_cast<size_t>(arc.head)] != 0) return false;
    }
    a_out = a;
    return true;
}

/// Unicyclic with every outdegree 1 and cycle length >= 3: a directed cycle
/// with intrees rooted on it.
inline bool is_D_member(const Digraph& g, int& a_out) {
    if (!is_unicyclic(g)) return false;
    DegreeProfile p = degree_profile(g);
    if (p.max_out != 1 || p.min_out != 1) return false;
    std::vector<int> cycle = unique_directed_cycle(g);
    if (static_cast<int>(cycle.size()) < 3) return false;
    a_out = static_cast<int>(cycle.size());
    return true;
}

/// Every structurally matching family tag, most specific first.
inline std::vector<FamilyTag> classify(const Digraph& g) {
    const int n = g.order();
    DegreeProfile p = degree_profile(g);
    std::vector<FamilyTag> tags;
    auto add = [&](Family f, int a = 0) { tags.push_back({f, n, a}); };

    if (is_directed_cycle_graph(g)) add(Family::DirectedCycle, n);
    if (is_directed_path_graph(g)) add(Family::DirectedPath);
    if (is_intree(g)) add(Family::Intree);
    if (is_outstar(g)) add(Family::Outstar);
    if (is_directed_tree(g)) add(Family::DirectedTree);
    if (n >= 2 && is_symmetric_complete(g)) add(Family::SymmetricComplete);
    if (n >= 2 && is_complete_underlying(g)) add(Family::CompleteUnderlying);
    if (is_regular(g)) add(Family::Regular);
    if (is_outdegree_regular(g)) add(Family::OutdegreeRegular);
    if (is_outdegree_semiregular(g)) add(Family::OutdegreeSemiregular);
    if (g.arc_count() >= 1 && is_symmetric_digraph(g)) add(Family::SymmetricDigraph);
    if (is_unicyclic(g)) {
        add(Family::Unicyclic);
        int a = 0;
        if (is_C_a_k(g, a)) {
            add(Family::UnicyclicCaK, a);
            if (a == 2) add(Family::UnicyclicC2K, a);
        }
        if (is_D_member(g, a)) add(Family::DFamilyMember, a);
    }
    if (tags.empty()) add(Family::General);
    return tags;
}

inline bool has_tag(const std::vector<FamilyTag>& tags, Family f) {
    return std::any_of(tags.begin(), tags.end(),
                       [&](const FamilyTag& t) { return t.kind == f; });
}

} // namespace aalpha
