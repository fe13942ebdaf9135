#pragma once

#include "aalpha/digraph.hpp"
#include "aalpha/rational.hpp"
#include "aalpha/spectral.hpp"

#include <optional>
#include <stdexcept>

namespace aalpha {

/// Number of closed directed walks of length 2: ordered pairs (i,j) with both
/// (i,j) and (j,i) arcs.  Always even.
inline long long closed_walks_2(const Digraph& g) {
    long long c = 0;
    for (const Arc& a : g.arcs())
        if (g.has_arc(a.head, a.tail)) ++c;
    return c;
}

inline long long sum_outdeg_squares(const Digraph& g) {
    DegreeProfile p = degree_profile(g);
    long long s = 0;
    for (int d : p.outdeg) s += static_cast<long long>(d) * d;
    return s;
}

/// alpha^2 * sum of squared outdegrees + (1-alpha)^2 * c2, exactly.
inline Rational energy_exact(const Digraph& g, const Rational& alpha) {
    Rational one_minus = Rational(1) - alpha;
    return alpha * alpha * Rational(sum_outdeg_squares(g)) +
           one_minus * one_minus * Rational(closed_walks_2(g));
}

/// Trace-formula energy without the spectral cross-check; the cheap path for
/// exhaustive sweeps.
inline double energy_double(const Digraph& g, double alpha) {
    double om = 1.0 - alpha;
    return alpha * alpha * static_cast<double>(sum_outdeg_squares(g)) +
           om * om * static_cast<double>(closed_walks_2(g));
}

struct EnergyReport {
    double alpha = 0.0;
    long long c2 = 0;
    long long sum_outdeg_squares = 0;
    double energy = 0.0;
    std::optional<double> energy_via_eigenvalues; // present when n <= small_n_limit
    std::optional<Rational> energy_rational;      // present when alpha was exact
};

/// Energy by the trace formula; for small orders the eigenvalue sum is
/// recorded alongside as a cross-check.
inline EnergyReport energy(const Digraph& g, const Alpha& alpha) {
    EnergyReport r;
    r.alpha = alpha.value;
    r.c2 = closed_walks_2(g);
    r.sum_outdeg_squares = sum_outdeg_squares(g);
    double om = 1.0 - alpha.value;
    r.energy = alpha.value * alpha.value * static_cast<double>(r.sum_outdeg_squares) +
               om * om * static_cast<double>(r.c2);
    if (alpha.has_exact) r.energy_rational = energy_exact(g, alpha.exact);
    if (g.order() <= small_n_limit) {
        Spectrum s = eigenvalues_small(g, alpha.value);
        std::complex<double> acc = 0.0;
        for (const auto& ev : s.eigenvalues) acc += ev * ev;
        r.energy_via_eigenvalues = acc.real();
    }
    return r;
}

inline EnergyReport energy(const Digraph& g, double alpha) { return energy(g, Alpha(alpha)); }

// ---------------------------------------------------------------------------
// Energy bounds
// ---------------------------------------------------------------------------

/// One lower/upper pair; inapplicable pairs keep applicable = false and zero
/// values.
struct BoundPair {
    bool applicable = false;
    double lower = 0.0;
    double upper = 0.0;
};

/// All §-style energy brackets for one digraph.  "complement" brackets the
/// energy of the complement digraph, not of g itself.
struct EnergyBounds {
    BoundPair connected;  // alpha^2(n-1) .. (alpha^2 n + 1 - 2 alpha) n(n-1)
    BoundPair window;     // alpha^2 m^2/n .. [alpha^2(maxOut+minOut)+(1-alpha)^2]m - alpha^2 n maxOut minOut
    BoundPair complement; // alpha^2(n-1-maxOut)(n(n-1)-m) .. [alpha^2(n-1-minOut)+(1-alpha)^2](n(n-1)-m)
    BoundPair tree;       // alpha^2(n-1) .. alpha^2(n-1)^2
    BoundPair unicyclic;  // alpha^2 n .. alpha^2(n^2-2n+2) + 2(1-alpha)^2
};

inline std::pair<double, double> complement_energy_bounds(const Digraph& g, double alpha) {
    DegreeProfile p = degree_profile(g);
    const double n = g.order();
    const double mbar = n * (n - 1.0) - p.m;
    const double a2 = alpha * alpha;
    const double om2 = (1.0 - alpha) * (1.0 - alpha);
    return {a2 * (n - 1.0 - p.max_out) * mbar, (a2 * (n - 1.0 - p.min_out) + om2) * mbar};
}

inline EnergyBounds energy_bounds(const Digraph& g, double alpha) {
    DegreeProfile p = degree_profile(g);
    const double n = g.order();
    const double m = p.m;
    const double a2 = alpha * alpha;
    const double om2 = (1.0 - alpha) * (1.0 - alpha);
    const bool conn = is_connected(g);

    EnergyBounds b;
    b.window.applicable = true;
    b.window.lower = a2 * m * m / n;
    b.window.upper = (a2 * (p.max_out + p.min_out) + om2) * m - a2 * n * p.max_out * p.min_out;

    if (conn) {
        b.connected.applicable = true;
        b.connected.lower = a2 * (n - 1.0);
        b.connected.upper = (a2 * n + 1.0 - 2.0 * alpha) * n * (n - 1.0);
        b.complement.applicable = true;
        std::tie(b.complement.lower, b.complement.upper) = complement_energy_bounds(g, alpha);
        if (p.m == g.order() - 1) {
            b.tree.applicable = true;
            b.tree.lower = a2 * (n - 1.0);
            b.tree.upper = a2 * (n - 1.0) * (n - 1.0);
        }
        if (is_unicyclic(g)) {
            b.unicyclic.applicable = true;
            b.unicyclic.lower = a2 * n;
            b.unicyclic.upper = a2 * (n * n - 2.0 * n + 2.0) + 2.0 * om2;
        }
    }
    return b;
}

/// The same brackets in exact arithmetic for a rational alpha.
struct ExactBoundPair {
    bool applicable = false;
    Rational lower{0};
    Rational upper{0};
};

struct EnergyBoundsExact {
    ExactBoundPair connected;
    ExactBoundPair window;
    ExactBoundPair complement;
    ExactBoundPair tree;
    ExactBoundPair unicyclic;
};

inline EnergyBoundsExact energy_bounds_exact(const Digraph& g, const Rational& alpha) {
    DegreeProfile p = degree_profile(g);
    const long long n = g.order();
    const long long m = p.m;
    const Rational a2 = alpha * alpha;
    const Rational om = Rational(1) - alpha;
    const Rational om2 = om * om;
    const bool conn = is_connected(g);

    EnergyBoundsExact b;
    b.window.applicable = true;
    b.window.lower = a2 * Rational(m * m, n);
    b.window.upper =
        (a2 * Rational(p.max_out + p.min_out) + om2) * Rational(m) -
        a2 * Rational(n * p.max_out * p.min_out);

    if (conn) {
        b.connected.applicable = true;
        b.connected.lower = a2 * Rational(n - 1);
        b.connected.upper = (a2 * Rational(n) + Rational(1) - Rational(2) * alpha) *
                            Rational(n * (n - 1));
        b.complement.applicable = true;
        const long long mbar = n * (n - 1) - m;
        b.complement.lower = a2 * Rational((n - 1 - p.max_out) * mbar);
        b.complement.upper = (a2 * Rational(n - 1 - p.min_out) + om2) * Rational(mbar);
        if (m == n - 1) {
            b.tree.applicable = true;
            b.tree.lower = a2 * Rational(n - 1);
            b.tree.upper = a2 * Rational((n - 1) * (n - 1));
        }
        if (is_unicyclic(g)) {
            b.unicyclic.applicable = true;
            b.unicyclic.lower = a2 * Rational(n);
            b.unicyclic.upper = a2 * Rational(n * n - 2 * n + 2) + Rational(2) * om2;
        }
    }
    return b;
}

/// Strict energy monotonicity under proper subdigraphs.  h must reuse g's
/// vertex indexing.  Guaranteed true for alpha > 0; at alpha = 0 deleting a
/// non-symmetric arc leaves the energy unchanged.
inline bool subdigraph_monotonicity_check(const Digraph& g, const Digraph& h,
                                          const Alpha& alpha) {
    if (h.order() > g.order()) throw std::invalid_argument("not a subdigraph: more vertices");
    for (const Arc& a : h.arcs())
        if (!g.has_arc(a.tail, a.head))
            throw std::invalid_argument("not a subdigraph: extra arc");
    if (h.arc_count() >= g.arc_count())
        throw std::invalid_argument("not a proper subdigraph: needs at least one arc fewer");
    if (alpha.has_exact)
        return energy_exact(h, alpha.exact) < energy_exact(g, alpha.exact);
    return energy(h, alpha).energy < energy(g, alpha).energy;
}

} // namespace aalpha
