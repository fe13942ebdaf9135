#pragma once

#include "aalpha/digraph.hpp"

#include <cmath>
#include <complex>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace aalpha {

/// Largest order for which the full spectrum is computed.
inline constexpr int small_n_limit = 8;

/// Dense row-major square matrix.
struct Matrix {
    int n = 0;
    std::vector<double> v;

    explicit Matrix(int n_) : n(n_), v(static_cast<size_t>(n_) * n_, 0.0) {}
    double& operator()(int i, int j) { return v[static_cast<size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return v[static_cast<size_t>(i) * n + j]; }
};

/// alpha * D + (1 - alpha) * A, with D the diagonal of outdegrees.
inline Matrix alpha_matrix(const Digraph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in [0,1)");
    Matrix m(g.order());
    for (const Arc& a : g.arcs()) {
        m(a.tail, a.head) += 1.0 - alpha;
        m(a.tail, a.tail) += alpha;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial (Faddeev-LeVerrier)
// ---------------------------------------------------------------------------

/// Monic coefficients c[0..n] of det(xI - M), c[0] = 1.  Internal arithmetic
/// in long double; exact for integer and dyadic-rational entries at small n.
inline std::vector<double> characteristic_polynomial(const Matrix& mat) {
    const int n = mat.n;
    std::vector<long double> a(mat.v.begin(), mat.v.end());
    std::vector<long double> work(a.size()), prod(a.size());
    // work starts as the identity (M_1).
    std::fill(work.begin(), work.end(), 0.0L);
    for (int i = 0; i < n; ++i) work[static_cast<size_t>(i) * n + i] = 1.0L;

    std::vector<double> coef(static_cast<size_t>(n) + 1, 0.0);
    coef[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        // prod = A * work
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long double s = 0.0L;
                for (int t = 0; t < n; ++t)
                    s += a[static_cast<size_t>(i) * n + t] * work[static_cast<size_t>(t) * n + j];
                prod[static_cast<size_t>(i) * n + j] = s;
            }
        long double tr = 0.0L;
        for (int i = 0; i < n; ++i) tr += prod[static_cast<size_t>(i) * n + i];
        long double c = -tr / k;
        coef[static_cast<size_t>(k)] = static_cast<double>(c);
        work = prod;
        for (int i = 0; i < n; ++i) work[static_cast<size_t>(i) * n + i] += c;
    }
    return coef;
}

// ---------------------------------------------------------------------------
// Polynomial roots (Durand-Kerner)
// ---------------------------------------------------------------------------

namespace detail {

inline std::complex<double> horner(const std::vector<double>& c, std::complex<double> x) {
    std::complex<double> r = c[0];
    for (size_t k = 1; k < c.size(); ++k) r = r * x + c[k];
    return r;
}

// Relative backward error: |p(z)| over the same Horner sum with absolute
// values.  A root is acceptable when this is at machine-noise level.
inline double backward_error(const std::vector<double>& c, std::complex<double> z) {
    double num = std::abs(horner(c, z));
    double den = std::abs(c[0]);
    double az = std::abs(z);
    for (size_t k = 1; k < c.size(); ++k) den = den * az + std::abs(c[k]);
    return den > 0.0 ? num / den : num;
}

// Coefficients of the derivative (descending powers, not monic).
inline std::vector<double> derivative(const std::vector<double>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    if (d <= 0) return {0.0};
    std::vector<double> out(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) out[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] * (d - k);
    return out;
}

// Group iterates within the given relative radius, refine each group of size
// m through Newton on the (m-1)-th derivative (where an m-fold root is simple
// again; m = 1 is a plain Newton polish), then snap near-real roots and
// restore exact conjugate symmetry.
inline std::vector<std::complex<double>> refine_roots(const std::vector<double>& c,
                                                      std::vector<std::complex<double>> z,
                                                      double radius) {
    const int n = static_cast<int>(z.size());
    std::vector<int> group(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) group[static_cast<size_t>(k)] = k;
    auto find = [&](int k) {
        while (group[static_cast<size_t>(k)] != k) k = group[static_cast<size_t>(k)];
        return k;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double scale = std::max(
                {1.0, std::abs(z[static_cast<size_t>(i)]), std::abs(z[static_cast<size_t>(j)])});
            if (std::abs(z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]) <= radius * scale)
                group[static_cast<size_t>(find(i))] = find(j);
        }

    for (int r = 0; r < n; ++r) {
        if (find(r) != r) continue;
        std::vector<int> members;
        for (int k = 0; k < n; ++k)
            if (find(k) == r) members.push_back(k);
        const int m = static_cast<int>(members.size());

        std::complex<double> center = 0.0;
        for (int k : members) center += z[static_cast<size_t>(k)];
        center /= static_cast<double>(m);
        double diam = 0.0;
        for (int k : members) diam = std::max(diam, std::abs(z[static_cast<size_t>(k)] - center));

        std::vector<double> d = c;
        for (int t = 1; t < m; ++t) d = derivative(d);
        const std::vector<double> dd = derivative(d);

        std::complex<double> w = center;
        bool ok = true;
        for (int it = 0; it < 100; ++it) {
            std::complex<double> den = horner(dd, w);
            if (std::abs(den) < 1e-300) {
                ok = false;
                break;
            }
            std::complex<double> step = horner(d, w) / den;
            w -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) break;
        }
        const double leash = std::max(100.0 * diam, 1e-2 * std::max(1.0, std::abs(center)));
        if (ok && std::abs(w - center) <= leash)
            for (int k : members) z[static_cast<size_t>(k)] = w;
    }

    for (auto& root : z)
        if (std::abs(root.imag()) < 5e-12 * std::max(1.0, std::abs(root.real())))
            root = {root.real(), 0.0};

    std::vector<int> open;
    for (int k = 0; k < n; ++k)
        if (z[static_cast<size_t>(k)].imag() != 0.0) open.push_back(k);
    while (open.size() >= 2) {
        const int i = open.front();
        open.erase(open.begin());
        const std::complex<double> want = std::conj(z[static_cast<size_t>(i)]);
        size_t best = 0;
        for (size_t t = 1; t < open.size(); ++t)
            if (std::abs(z[static_cast<size_t>(open[t])] - want) <
                std::abs(z[static_cast<size_t>(open[best])] - want))
                best = t;
        const int j = open[best];
        if (std::abs(z[static_cast<size_t>(j)] - want) <= 1e-5 * std::max(1.0, std::abs(want))) {
            const std::complex<double> mean =
                0.5 * (z[static_cast<size_t>(i)] + std::conj(z[static_cast<size_t>(j)]));
            z[static_cast<size_t>(i)] = mean;
            z[static_cast<size_t>(j)] = std::conj(mean);
            open.erase(open.begin() + static_cast<long>(best));
        }
    }
    return z;
}

// Largest coefficient mismatch between prod (x - z_k) and c.
inline double vieta_error(const std::vector<double>& c,
                          const std::vector<std::complex<double>>& z) {
    std::vector<std::complex<double>> q{1.0};
    for (const std::complex<double>& root : z) {
        q.push_back(0.0);
        for (size_t t = q.size() - 1; t > 0; --t) q[t] -= root * q[t - 1];
    }
    double err = 0.0;
    for (size_t k = 0; k < c.size(); ++k) err = std::max(err, std::abs(q[k] - c[k]));
    return err;
}

} // namespace detail

/// Simultaneous root iteration for a monic real polynomial (c[0] = 1).
/// Exact zero roots are deflated first (a trailing zero coefficient is exact
/// for these matrices), the rest start on a spiral scaled to the Fujiwara
/// root bound.  Throws when some iterate never passes the backward-error
/// acceptance test.
inline std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coef,
                                                          int max_iter = 2000,
                                                          double accept = 1e-10) {
    const int full = static_cast<int>(coef.size()) - 1;
    if (full <= 0) return {};

    int zeros = 0;
    while (zeros < full && coef[static_cast<size_t>(full - zeros)] == 0.0) ++zeros;
    std::vector<double> c(coef.begin(), coef.end() - zeros);
    const int n = full - zeros;

    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    if (n > 0) {
        double bound = 0.0;
        for (int k = 1; k <= n; ++k) {
            double t = std::pow(std::abs(c[static_cast<size_t>(k)]), 1.0 / k);
            bound = std::max(bound, t);
        }
        bound = std::max(2.0 * bound, 0.5);

        const std::complex<double> seed(0.4, 0.9);
        std::complex<double> p = seed;
        for (int k = 0; k < n; ++k) {
            z[static_cast<size_t>(k)] = bound * p;
            p *= seed;
        }

        auto sweep = [&]() {
            for (int k = 0; k < n; ++k) {
                std::complex<double> denom = 1.0;
                for (int j = 0; j < n; ++j)
                    if (j != k) denom *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
                if (denom == std::complex<double>(0.0, 0.0)) denom = 1e-30;
                z[static_cast<size_t>(k)] -= detail::horner(c, z[static_cast<size_t>(k)]) / denom;
            }
        };
        auto all_accepted = [&]() {
            for (int k = 0; k < n; ++k)
                if (detail::backward_error(c, z[static_cast<size_t>(k)]) > accept) return false;
            return true;
        };

        // Near a multiple root the step size stalls at the cluster radius, so
        // the backward error is the convergence test.
        bool accepted = false;
        for (int iter = 0; iter < max_iter && !accepted; ++iter) {
            sweep();
            accepted = all_accepted();
        }
        if (!accepted)
            throw std::runtime_error("root iteration did not reach the acceptance tolerance");

        // An m-fold root leaves the accepted iterates on a wide polygon whose
        // radius grows with m, so the right grouping radius is not known in
        // advance.  Try radii from tight to loose and keep the first refined
        // multiset that reproduces the coefficients.
        double cscale = 1.0;
        for (double t : c) cscale = std::max(cscale, std::abs(t));
        bool resolved = false;
        for (double radius : {1e-8, 1e-6, 1e-4, 3e-3, 3e-2}) {
            std::vector<std::complex<double>> w = detail::refine_roots(c, z, radius);
            if (detail::vieta_error(c, w) <= 1e-11 * cscale) {
                z = std::move(w);
                resolved = true;
                break;
            }
        }
        if (!resolved)
            throw std::runtime_error("root multiset failed the coefficient cross-check");
    }

    z.insert(z.end(), static_cast<size_t>(zeros), std::complex<double>(0.0, 0.0));
    return z;
}

// ---------------------------------------------------------------------------
// Full spectrum (small orders)
// ---------------------------------------------------------------------------

struct Spectrum {
    std::vector<std::complex<double>> eigenvalues; // real desc, then imag desc
    std::vector<double> char_poly;                 // monic, degree n
};

inline Spectrum eigenvalues_small(const Digraph& g, double alpha) {
    if (g.order() > small_n_limit)
        throw std::invalid_argument("full spectrum supported only for n <= " +
                                    std::to_string(small_n_limit));
    Spectrum s;
    s.char_poly = characteristic_polynomial(alpha_matrix(g, alpha));
    s.eigenvalues = polynomial_roots(s.char_poly);
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.real() != b.real()) return a.real() > b.real();
                  return a.imag() > b.imag();
              });
    return s;
}

// ---------------------------------------------------------------------------
// Spectral radius (power iteration with Collatz-Wielandt sandwich)
// ---------------------------------------------------------------------------

struct RadiusResult {
    double lambda = 0.0;
    int iterations = 0;
    double residual = 0.0;
    bool strongly_connected = false;
    std::vector<double> perron; // empty unless strongly connected
};

namespace detail {

struct BlockRadius {
    double lambda;
    int iterations;
    double residual;
    std::vector<double> vec;
};

// Perron root of one strongly connected diagonal block of the alpha matrix.
// The diagonal keeps the whole-graph outdegrees.  Iterates on block + I,
// which is primitive, so the Collatz-Wielandt ratios close monotonically.
inline BlockRadius block_radius(const Digraph& g, const std::vector<int>& outdeg,
                                const std::vector<int>& verts, double alpha, int iter_cap) {
    const int k = static_cast<int>(verts.size());
    Matrix b(k);
    for (int i = 0; i < k; ++i) b(i, i) = alpha * outdeg[static_cast<size_t>(verts[i])] + 1.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.has_arc(verts[i], verts[j])) b(i, j) = 1.0 - alpha;

    std::vector<double> x(static_cast<size_t>(k), 1.0), y(static_cast<size_t>(k));
    double rmin = 0.0, rmax = 0.0;
    int iters = 0;
    for (;;) {
        for (int i = 0; i < k; ++i) {
            double s = 0.0;
            for (int j = 0; j < k; ++j) s += b(i, j) * x[static_cast<size_t>(j)];
            y[static_cast<size_t>(i)] = s;
        }
        rmin = y[0] / x[0];
        rmax = rmin;
        for (int i = 1; i < k; ++i) {
            double r = y[static_cast<size_t>(i)] / x[static_cast<size_t>(i)];
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
        ++iters;
        double norm = 0.0;
        for (double t : y) norm = std::max(norm, t);
        for (int i = 0; i < k; ++i) x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / norm;
        if (rmax - rmin <= 1e-12) break;
        if (iters >= iter_cap) {
            std::ostringstream os;
            os << "power iteration did not converge: sandwich gap " << std::scientific
               << std::setprecision(3) << (rmax - rmin) << " after " << iters << " iterations";
            throw std::runtime_error(os.str());
        }
    }

    BlockRadius out;
    out.lambda = 0.5 * (rmin + rmax) - 1.0;
    out.iterations = iters;
    double res = 0.0;
    for (int i = 0; i < k; ++i) {
        double s = 0.0;
        for (int j = 0; j < k; ++j) s += b(i, j) * x[static_cast<size_t>(j)];
        s -= (out.lambda + 1.0) * x[static_cast<size_t>(i)];
        res = std::max(res, std::abs(s));
    }
    out.residual = res;
    out.vec = std::move(x);
    return out;
}

} // namespace detail

/// Spectral radius of the alpha matrix.  For a strongly connected digraph the
/// Perron vector (sup norm 1) is returned as well; otherwise the radius is
/// the maximum over the strongly connected blocks and no eigenvector exists
/// in general.
inline RadiusResult spectral_radius(const Digraph& g, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in [0,1)");
    DegreeProfile p = degree_profile(g);
    ConnectivityReport conn = connectivity(g);
    // The Collatz-Wielandt ratios close linearly at the block's eigenvalue
    // gap, which shrinks as alpha * maxOut dominates the off-diagonal mass;
    // near-degenerate blocks can need tens of thousands of sweeps.
    const int iter_cap = 1000000;

    RadiusResult r;
    r.strongly_connected = conn.strongly_connected;
    bool first = true;
    detail::BlockRadius best{};
    for (const std::vector<int>& verts : conn.components) {
        detail::BlockRadius br = detail::block_radius(g, p.outdeg, verts, alpha, iter_cap);
        r.iterations += br.iterations;
        if (first || br.lambda > best.lambda) {
            best = std::move(br);
            first = false;
        }
    }
    r.lambda = best.lambda;
    r.residual = best.residual;
    if (conn.strongly_connected) {
        r.perron = std::move(best.vec);
        double norm = 0.0;
        for (double t : r.perron) norm += t * t;
        norm = std::sqrt(norm);
        for (double& t : r.perron) t /= norm;
    }
    return r;
}

inline double lambda_alpha(const Digraph& g, double alpha) {
    return spectral_radius(g, alpha).lambda;
}

} // namespace aalpha
