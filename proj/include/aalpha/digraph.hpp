#pragma once

#include "aalpha/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aalpha {

/// Ordered pair (tail, head), 0-based.
struct Arc {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// A loop-free digraph on vertices 0..n-1.  Arcs are a set of ordered pairs;
/// a pair (u,v) and its reverse (v,u) may coexist (symmetric arc).
/// Immutable after construction.
class Digraph {
public:
    Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
        if (n_ < 1) throw std::invalid_argument("vertex count must be positive");
        std::sort(arcs_.begin(), arcs_.end());
        for (size_t i = 0; i < arcs_.size(); ++i) {
            const Arc& a = arcs_[i];
            if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
                throw std::invalid_argument("vertex index out of range");
            if (a.tail == a.head)
                throw std::invalid_argument("loop arcs are not allowed");
            if (i > 0 && arcs_[i - 1] == a)
                throw std::invalid_argument("duplicate arc");
        }
    }

    explicit Digraph(int n) : Digraph(n, {}) {}

    int order() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_arc(int u, int v) const {
        return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
    }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_;
    std::vector<Arc> arcs_; // sorted, unique
};

/// Out- and in-neighbor lists, built once where repeated traversal is needed.
struct Adjacency {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;

    explicit Adjacency(const Digraph& g) : out(g.order()), in(g.order()) {
        for (const Arc& a : g.arcs()) {
            out[a.tail].push_back(a.head);
            in[a.head].push_back(a.tail);
        }
    }
};

// ---------------------------------------------------------------------------
// Edge-list format
//
//   # comment to end of line
//   n            first significant line: vertex count
//   u v          one arc per significant line, 0-based
// ---------------------------------------------------------------------------

inline Digraph parse_digraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_n = false;
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<int> arc_lines;

    auto parse_int = [](const std::string& tok, int lineno_) {
        try {
            size_t pos = 0;
            long v = std::stol(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("");
            if (v < 0 || v > 1'000'000'000) throw std::out_of_range("");
            return static_cast<int>(v);
        } catch (const std::exception&) {
            throw ParseError(lineno_, "malformed integer '" + tok + "'");
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        if (!have_n) {
            if (toks.size() != 1) throw ParseError(lineno, "expected a single vertex count");
            n = parse_int(toks[0], lineno);
            if (n < 1) throw ParseError(lineno, "vertex count must be positive");
            have_n = true;
            continue;
        }
        if (toks.size() != 2) throw ParseError(lineno, "expected 'tail head'");
        int u = parse_int(toks[0], lineno);
        int v = parse_int(toks[1], lineno);
        if (u >= n || v >= n) throw ParseError(lineno, "vertex index out of range");
        if (u == v) throw ParseError(lineno, "loop arc");
        arcs.push_back({u, v});
        arc_lines.push_back(lineno);
    }
    if (!have_n) throw ParseError(std::max(lineno, 1), "missing vertex count");

    // Report duplicates with the line of the second occurrence.
    std::vector<size_t> idx(arcs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return arcs[a] < arcs[b]; });
    for (size_t i = 1; i < idx.size(); ++i)
        if (arcs[idx[i - 1]] == arcs[idx[i]])
            throw ParseError(std::max(arc_lines[idx[i - 1]], arc_lines[idx[i]]), "duplicate arc");

    return Digraph(n, std::move(arcs));
}

/// Emits the canonical edge list: n, then arcs in lexicographic order.
inline std::string serialize(const Digraph& g) {
    std::string out = std::to_string(g.order());
    out.push_back('\n');
    for (const Arc& a : g.arcs()) {
        out += std::to_string(a.tail);
        out.push_back(' ');
        out += std::to_string(a.head);
        out.push_back('\n');
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degree statistics
// ---------------------------------------------------------------------------

/// All degree quantities consumed by the spectral bounds.  two_out[i] is the
/// sum of outdegrees over the out-neighbors of i; avg_two_out[i] is
/// two_out[i]/outdeg[i] as an exact rational, absent when outdeg[i] = 0.
struct DegreeProfile {
    std::vector<int> outdeg;
    std::vector<int> indeg;
    int m = 0;
    int max_out = 0;
    int min_out = 0;
    int max_in = 0;
    int min_in = 0;
    std::vector<long long> two_out;
    std::vector<std::optional<Rational>> avg_two_out;
};

inline DegreeProfile degree_profile(const Digraph& g) {
    const int n = g.order();
    DegreeProfile p;
    p.outdeg.assign(n, 0);
    p.indeg.assign(n, 0);
    for (const Arc& a : g.arcs()) {
        ++p.outdeg[a.tail];
        ++p.indeg[a.head];
    }
    p.m = g.arc_count();
    p.max_out = *std::max_element(p.outdeg.begin(), p.outdeg.end());
    p.min_out = *std::min_element(p.outdeg.begin(), p.outdeg.end());
    p.max_in = *std::max_element(p.indeg.begin(), p.indeg.end());
    p.min_in = *std::min_element(p.indeg.begin(), p.indeg.end());
    p.two_out.assign(n, 0);
    for (const Arc& a : g.arcs()) p.two_out[a.tail] += p.outdeg[a.head];
    p.avg_two_out.assign(n, std::nullopt);
    for (int i = 0; i < n; ++i)
        if (p.outdeg[i] > 0) p.avg_two_out[i] = Rational(p.two_out[i], p.outdeg[i]);
    return p;
}

// ---------------------------------------------------------------------------
// Connectivity
// ---------------------------------------------------------------------------

/// Strongly connected components in condensation-topological order (sources
/// first), vertices ascending within each component.
struct ConnectivityReport {
    std::vector<std::vector<int>> components;
    bool strongly_connected = false;
    bool connected = false; // underlying undirected graph
};

namespace detail {

// Iterative Tarjan; component ids are assigned in completion order, which is
// reverse topological on the condensation.
inline std::vector<int> scc_ids(const Digraph& g, int& count) {
    const int n = g.order();
    Adjacency adj(g);
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0;
    count = 0;

    struct Frame {
        int v;
        size_t child;
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            if (child < adj.out[v].size()) {
                int w = adj.out[v][child++];
                if (index[w] == -1) {
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = count;
                    if (w == v) break;
                }
                ++count;
            }
            int finished = v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[finished]);
        }
    }
    return comp;
}

} // namespace detail

inline ConnectivityReport connectivity(const Digraph& g) {
    const int n = g.order();
    int count = 0;
    std::vector<int> comp = detail::scc_ids(g, count);

    ConnectivityReport r;
    r.components.assign(count, {});
    // Tarjan ids are reverse topological; flip so sources come first.
    for (int v = 0; v < n; ++v) r.components[count - 1 - comp[v]].push_back(v);
    r.strongly_connected = (count == 1);

    std::vector<std::vector<int>> und(n);
    for (const Arc& a : g.arcs()) {
        und[a.tail].push_back(a.head);
        und[a.head].push_back(a.tail);
    }
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : und[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    r.connected = (reached == n);
    return r;
}

inline bool is_strongly_connected(const Digraph& g) {
    int count = 0;
    detail::scc_ids(g, count);
    return count == 1;
}

inline bool is_connected(const Digraph& g) { return connectivity(g).connected; }

// ---------------------------------------------------------------------------
// Complement and structural predicates
// ---------------------------------------------------------------------------

/// Arc present exactly when absent in g, over ordered pairs of distinct
/// vertices.
inline Digraph complement(const Digraph& g) {
    const int n = g.order();
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n) * (n - 1) - g.arcs().size());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.has_arc(u, v)) arcs.push_back({u, v});
    return Digraph(n, std::move(arcs));
}

inline bool is_outdegree_regular(const Digraph& g) {
    DegreeProfile p = degree_profile(g);
    return p.max_out == p.min_out;
}

/// Equal outdegree and equal indegree everywhere (the common value then
/// matches, since arc count fixes both sums).
inline bool is_regular(const Digraph& g) {
    DegreeProfile p = degree_profile(g);
    return p.max_out == p.min_out && p.max_in == p.min_in && p.max_out == p.max_in;
}

inline bool is_symmetric_digraph(const Digraph& g) {
    for (const Arc& a : g.arcs())
        if (!g.has_arc(a.head, a.tail)) return false;
    return true;
}

inline bool is_symmetric_complete(const Digraph& g) {
    return g.arc_count() == g.order() * (g.order() - 1);
}

/// Underlying undirected graph complete.
inline bool is_complete_underlying(const Digraph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_arc(u, v) && !g.has_arc(v, u)) return false;
    return true;
}

namespace detail {

// 2-coloring of the underlying graph per component; empty on odd cycles.
inline std::vector<int> bipartition_colors(const Digraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> und(n);
    for (const Arc& a : g.arcs()) {
        und[a.tail].push_back(a.head);
        und[a.head].push_back(a.tail);
    }
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : und[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return {};
                }
            }
        }
    }
    return color;
}

} // namespace detail

/// Bipartite with constant outdegree on each side.  The bipartition of every
/// component is fixed up to a swap, so all side assignments are searched;
/// arcless vertices may join either side.
inline bool is_outdegree_semiregular(const Digraph& g) {
    const int n = g.order();
    std::vector<int> color = detail::bipartition_colors(g);
    if (color.empty()) return false;

    // Component index for swap enumeration; isolated vertices handled apart.
    std::vector<std::vector<int>> und(n);
    for (const Arc& a : g.arcs()) {
        und[a.tail].push_back(a.head);
        und[a.head].push_back(a.tail);
    }
    std::vector<int> comp(n, -1);
    std::vector<int> comp_of_nontrivial;
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1 || und[s].empty()) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = ncomp;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : und[v])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    q.push(w);
                }
        }
        ++ncomp;
    }
    DegreeProfile p = degree_profile(g);
    if (ncomp == 0) return true; // no arcs at all

    if (ncomp > 20) return false; // beyond any sensible instance

    for (uint32_t swaps = 0; swaps < (1u << ncomp); ++swaps) {
        int side_deg[2] = {-1, -1};
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (und[v].empty()) continue;
            int side = color[v] ^ ((swaps >> comp[v]) & 1u);
            if (side_deg[side] == -1)
                side_deg[side] = p.outdeg[v];
            else if (side_deg[side] != p.outdeg[v])
                ok = false;
        }
        if (!ok) continue;
        // Isolated vertices (outdegree 0) need a side whose constant is 0.
        bool any_isolated = false;
        for (int v = 0; v < n; ++v)
            if (und[v].empty()) any_isolated = true;
        if (any_isolated && side_deg[0] != 0 && side_deg[0] != -1 && side_deg[1] != 0 &&
            side_deg[1] != -1)
            continue;
        return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Directed cycle counting
// ---------------------------------------------------------------------------

/// Number of distinct simple directed cycles (a digon counts as one cycle of
/// length 2), counted up to `cap` then truncated.
inline long long count_directed_cycles(const Digraph& g, long long cap = -1) {
    const int n = g.order();
    Adjacency adj(g);
    long long count = 0;
    std::vector<char> on_path(n, 0);
    // Each cycle is counted once, from its smallest vertex.
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        stack.clear();
        stack.push_back({s, 0});
        on_path[s] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj.out[v].size()) {
                int w = adj.out[v][next++];
                if (w == s) {
                    ++count;
                    if (cap >= 0 && count >= cap) {
                        for (auto& [u, _] : stack) on_path[u] = 0;
                        return count;
                    }
                } else if (w > s && !on_path[w]) {
                    on_path[w] = 1;
                    stack.push_back({w, 0});
                }
                continue;
            }
            on_path[v] = 0;
            stack.pop_back();
        }
    }
    return count;
}

/// Vertices of the unique directed cycle in cycle order, starting from its
/// smallest vertex; empty when the cycle count differs from one.
inline std::vector<int> unique_directed_cycle(const Digraph& g) {
    if (count_directed_cycles(g, 2) != 1) return {};
    const int n = g.order();
    Adjacency adj(g);
    std::vector<char> on_path(n, 0);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        stack.clear();
        stack.push_back({s, 0});
        on_path[s] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj.out[v].size()) {
                int w = adj.out[v][next++];
                if (w == s) {
                    std::vector<int> cycle;
                    cycle.reserve(stack.size());
                    for (auto& [u, _] : stack) cycle.push_back(u);
                    for (auto& [u, _] : stack) on_path[u] = 0;
                    return cycle;
                }
                if (w > s && !on_path[w]) {
                    on_path[w] = 1;
                    stack.push_back({w, 0});
                }
                continue;
            }
            on_path[v] = 0;
            stack.pop_back();
        }
    }
    return {};
}

/// Connected, n arcs, exactly one directed cycle.
inline bool is_unicyclic(const Digraph& g) {
    if (g.arc_count() != g.order()) return false;
    if (!is_connected(g)) return false;
    return count_directed_cycles(g, 2) == 1;
}

} // namespace aalpha
