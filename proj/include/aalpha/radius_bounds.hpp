#pragma once

#include "aalpha/digraph.hpp"
#include "aalpha/spectral.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace aalpha {

/// Tolerance separating "bound attained" from "bound slack" in floating
/// comparisons.  Structural predicates stay authoritative for iff claims.
inline constexpr double tightness_tol = 1e-9;

namespace detail {

inline void require_strongly_connected(const Digraph& g) {
    if (!is_strongly_connected(g))
        throw std::invalid_argument("digraph is not strongly connected");
}

} // namespace detail

/// alpha * maxOutdegree; a strict lower bound on the spectral radius of a
/// strongly connected digraph.
inline double lower_lemma(const Digraph& g, double alpha) {
    detail::require_strongly_connected(g);
    return alpha * degree_profile(g).max_out;
}

/// alpha*maxOut + (1-alpha)*sqrt(maxOut*maxIn); tight exactly on regular
/// digraphs.
inline double bound_degrees(const Digraph& g, double alpha) {
    detail::require_strongly_connected(g);
    DegreeProfile p = degree_profile(g);
    return alpha * p.max_out +
           (1.0 - alpha) * std::sqrt(static_cast<double>(static_cast<long long>(p.max_out) *
                                                         p.max_in));
}

/// alpha*maxOut + (1-alpha)*sqrt(m - minOut*(n - maxIn)); tight exactly on
/// regular digraphs.
inline double bound_arcs_count(const Digraph& g, double alpha) {
    detail::require_strongly_connected(g);
    DegreeProfile p = degree_profile(g);
    long long inner = p.m - static_cast<long long>(p.min_out) * (g.order() - p.max_in);
    return alpha * p.max_out + (1.0 - alpha) * std::sqrt(static_cast<double>(inner));
}

/// Arc-wise bound: max over arcs (i,j) of
///   [alpha(d_i+d_j) + sqrt(alpha^2(d_i-d_j)^2 + 4(1-alpha)^2 m_i m_j)] / 2,
/// with the average 2-outdegrees m_i multiplied exactly as rationals.
/// Attained when the digraph is outdegree regular or outdegree semiregular.
inline double bound_arcwise(const Digraph& g, double alpha) {
    detail::require_strongly_connected(g);
    DegreeProfile p = degree_profile(g);
    double best = 0.0;
    for (const Arc& a : g.arcs()) {
        long long di = p.outdeg[static_cast<size_t>(a.tail)];
        long long dj = p.outdeg[static_cast<size_t>(a.head)];
        Rational mm = *p.avg_two_out[static_cast<size_t>(a.tail)] *
                      *p.avg_two_out[static_cast<size_t>(a.head)];
        double disc = alpha * alpha * static_cast<double>((di - dj) * (di - dj)) +
                      4.0 * (1.0 - alpha) * (1.0 - alpha) * to_double(mm);
        double val = 0.5 * (alpha * static_cast<double>(di + dj) + std::sqrt(disc));
        best = std::max(best, val);
    }
    return best;
}

/// Per-vertex expressions alpha*d_i + (1-alpha)*sqrt(sum over in-neighbors j
/// of s_j), where s_j = (sum over out-neighbors k of b_k^2) / b_j^2.  The
/// weighted bound is their maximum; equality forces them constant.
inline std::vector<double> weighted_vertex_values(const Digraph& g, double alpha,
                                                  const std::vector<double>& b) {
    detail::require_strongly_connected(g);
    const int n = g.order();
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("weight vector length must equal the vertex count");
    for (double w : b)
        if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");

    DegreeProfile p = degree_profile(g);
    Adjacency adj(g);
    std::vector<double> s(static_cast<size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int k : adj.out[static_cast<size_t>(j)])
            acc += b[static_cast<size_t>(k)] * b[static_cast<size_t>(k)];
        s[static_cast<size_t>(j)] = acc / (b[static_cast<size_t>(j)] * b[static_cast<size_t>(j)]);
    }
    std::vector<double> vals(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j : adj.in[static_cast<size_t>(i)]) acc += s[static_cast<size_t>(j)];
        vals[static_cast<size_t>(i)] =
            alpha * p.outdeg[static_cast<size_t>(i)] + (1.0 - alpha) * std::sqrt(acc);
    }
    return vals;
}

inline double bound_weighted(const Digraph& g, double alpha, const std::vector<double>& b) {
    std::vector<double> vals = weighted_vertex_values(g, alpha, b);
    double best = vals[0];
    for (double v : vals) best = std::max(best, v);
    return best;
}

/// Weighted bound with unit weights: max over vertices of
/// alpha*d_i + (1-alpha)*sqrt(sum of in-neighbor outdegrees).
inline double bound_corollary(const Digraph& g, double alpha) {
    return bound_weighted(g, alpha, std::vector<double>(static_cast<size_t>(g.order()), 1.0));
}

struct RadiusBounds {
    double alpha = 0.0;
    double spectral_radius = 0.0;
    double lower_lemma = 0.0;
    double bound_degrees = 0.0;
    double bound_arcs_count = 0.0;
    double bound_arcwise = 0.0;
    double bound_weighted = 0.0;
    double bound_corollary = 0.0;
    std::vector<double> weights;

    // Numeric tightness against the spectral radius.
    bool tight_degrees = false;
    bool tight_arcs_count = false;
    bool tight_arcwise = false;
    bool tight_weighted = false;
    bool tight_corollary = false;

    // Structural predicates; these, not the flags above, decide the
    // equality characterizations.
    bool regular = false;
    bool outdegree_regular = false;
    bool outdegree_semiregular = false;
};

inline RadiusBounds bounds_report(const Digraph& g, double alpha,
                                  const std::optional<std::vector<double>>& b = std::nullopt) {
    detail::require_strongly_connected(g);
    RadiusBounds r;
    r.alpha = alpha;
    r.weights = b.value_or(std::vector<double>(static_cast<size_t>(g.order()), 1.0));
    r.spectral_radius = spectral_radius(g, alpha).lambda;
    r.lower_lemma = lower_lemma(g, alpha);
    r.bound_degrees = bound_degrees(g, alpha);
    r.bound_arcs_count = bound_arcs_count(g, alpha);
    r.bound_arcwise = bound_arcwise(g, alpha);
    r.bound_weighted = bound_weighted(g, alpha, r.weights);
    r.bound_corollary = bound_corollary(g, alpha);

    auto tight = [&](double bound) { return std::abs(bound - r.spectral_radius) <= tightness_tol; };
    r.tight_degrees = tight(r.bound_degrees);
    r.tight_arcs_count = tight(r.bound_arcs_count);
    r.tight_arcwise = tight(r.bound_arcwise);
    r.tight_weighted = tight(r.bound_weighted);
    r.tight_corollary = tight(r.bound_corollary);

    r.regular = is_regular(g);
    r.outdegree_regular = is_outdegree_regular(g);
    r.outdegree_semiregular = is_outdegree_semiregular(g);
    return r;
}

} // namespace aalpha
