#include "aalpha/spectral.hpp"

#include "aalpha/enumerate.hpp"
#include "aalpha/families.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <complex>
#include <random>

using namespace aalpha;

namespace {

Digraph relabel(const Digraph& g, const std::vector<int>& perm) {
    std::vector<Arc> arcs;
    for (const Arc& a : g.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
    return Digraph(g.order(), std::move(arcs));
}

} // namespace

TEST_CASE("alpha matrix layout") {
    Digraph c4 = make_directed_cycle(4);
    Matrix m = alpha_matrix(c4, 0.5);
    for (int i = 0; i < 4; ++i) {
        CHECK(m(i, i) == 0.5);
        CHECK(m(i, (i + 1) % 4) == 0.5);
    }
    CHECK(m(0, 2) == 0.0);
    CHECK(m(2, 1) == 0.0);

    CHECK_THROWS_AS(alpha_matrix(c4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(alpha_matrix(c4, -0.1), std::invalid_argument);
}

TEST_CASE("characteristic polynomial on closed forms") {
    // det(xI - A_{1/2}(C4)) = x^4 - 2x^3 + 1.5x^2 - 0.5x
    auto c = characteristic_polynomial(alpha_matrix(make_directed_cycle(4), 0.5));
    REQUIRE(c.size() == 5);
    CHECK(c[0] == 1.0);
    CHECK(c[1] == -2.0);
    CHECK(c[2] == 1.5);
    CHECK(c[3] == -0.5);
    CHECK(c[4] == 0.0);

    // Symmetric complete on 3 vertices at alpha 0: x^3 - 3x - 2.
    auto k = characteristic_polynomial(alpha_matrix(make_symmetric_complete(3), 0.0));
    REQUIRE(k.size() == 4);
    CHECK(k[0] == 1.0);
    CHECK(k[1] == 0.0);
    CHECK(k[2] == -3.0);
    CHECK(k[3] == -2.0);
}

TEST_CASE("polynomial roots on known factorizations") {
    SECTION("distinct real roots") {
        // (x-1)(x-2)(x-3)
        auto r = polynomial_roots({1.0, -6.0, 11.0, -6.0});
        std::vector<double> re;
        for (auto z : r) {
            CHECK(z.imag() == 0.0);
            re.push_back(z.real());
        }
        std::sort(re.begin(), re.end());
        CHECK_THAT(re[0], Catch::Matchers::WithinAbs(1.0, 1e-12));
        CHECK_THAT(re[1], Catch::Matchers::WithinAbs(2.0, 1e-12));
        CHECK_THAT(re[2], Catch::Matchers::WithinAbs(3.0, 1e-12));
    }
    SECTION("triple root") {
        // (x - 1/4)^3
        auto r = polynomial_roots({1.0, -0.75, 0.1875, -0.015625});
        REQUIRE(r.size() == 3);
        for (auto z : r) {
            CHECK_THAT(z.real(), Catch::Matchers::WithinAbs(0.25, 1e-10));
            CHECK(z.imag() == 0.0);
        }
    }
    SECTION("all roots zero") {
        auto r = polynomial_roots({1.0, 0.0, 0.0, 0.0, 0.0});
        REQUIRE(r.size() == 4);
        for (auto z : r) CHECK(z == std::complex<double>(0.0, 0.0));
    }
    SECTION("conjugate pair is exactly symmetric") {
        // (x^2 + x + 1)(x - 2)
        auto r = polynomial_roots({1.0, -1.0, -1.0, -2.0});
        REQUIRE(r.size() == 3);
        std::sort(r.begin(), r.end(),
                  [](auto a, auto b) { return a.imag() < b.imag(); });
        CHECK(r[0] == std::conj(r[2]));
        CHECK_THAT(r[1].real(), Catch::Matchers::WithinAbs(2.0, 1e-12));
    }
}

TEST_CASE("C4 spectrum matches the closed form at grid alphas") {
    Digraph c4 = make_directed_cycle(4);
    for (double a : {0.0, 0.25, 0.5, 0.75}) {
        Spectrum s = eigenvalues_small(c4, a);
        REQUIRE(s.eigenvalues.size() == 4);
        // Sorted by real part descending, imaginary descending: 1 first, the
        // conjugate pair in the middle, 2a-1 last.
        CHECK(std::abs(s.eigenvalues[0] - std::complex<double>(1.0, 0.0)) < 1e-10);
        CHECK(std::abs(s.eigenvalues[1] - std::complex<double>(a, 1.0 - a)) < 1e-10);
        CHECK(std::abs(s.eigenvalues[2] - std::complex<double>(a, a - 1.0)) < 1e-10);
        CHECK(std::abs(s.eigenvalues[3] - std::complex<double>(2.0 * a - 1.0, 0.0)) < 1e-10);
    }
}

TEST_CASE("trace identities across all digraphs on three vertices") {
    EnumerationFilter f;
    f.n = 3;
    enumerate(f, [&](const Digraph& g) {
        DegreeProfile p = degree_profile(g);
        long long c2 = 0;
        for (const Arc& a : g.arcs())
            if (g.has_arc(a.head, a.tail)) ++c2;
        long long s2 = 0;
        for (int d : p.outdeg) s2 += static_cast<long long>(d) * d;

        for (double a : {0.0, 1.0 / 3.0, 0.6}) {
            Spectrum s = eigenvalues_small(g, a);
            std::complex<double> sum1 = 0.0, sum2 = 0.0;
            for (auto ev : s.eigenvalues) {
                sum1 += ev;
                sum2 += ev * ev;
            }
            REQUIRE(std::abs(sum1 - std::complex<double>(a * p.m, 0.0)) < 1e-9);
            double want = a * a * static_cast<double>(s2) +
                          (1.0 - a) * (1.0 - a) * static_cast<double>(c2);
            REQUIRE(std::abs(sum2 - std::complex<double>(want, 0.0)) < 1e-9);
        }
    });
}

TEST_CASE("full spectrum is refused above the order limit") {
    Digraph big(9, {{0, 1}});
    CHECK_THROWS_AS(eigenvalues_small(big, 0.5), std::invalid_argument);
    CHECK_NOTHROW(eigenvalues_small(make_directed_cycle(8), 0.5));
}

TEST_CASE("spectral radius of regular digraphs is the degree") {
    for (int n = 2; n <= 8; ++n) {
        for (double a : {0.0, 0.25, 0.5, 0.75}) {
            RadiusResult r = spectral_radius(make_directed_cycle(n), a);
            CHECK(r.strongly_connected);
            CHECK_THAT(r.lambda, Catch::Matchers::WithinAbs(1.0, 1e-10));
        }
    }
    for (int n : {3, 4, 5}) {
        Digraph k = make_symmetric_complete(n);
        for (double a : {0.0, 0.5}) {
            CHECK_THAT(spectral_radius(k, a).lambda,
                       Catch::Matchers::WithinAbs(static_cast<double>(n - 1), 1e-10));
        }
    }
    // Circulant with jumps {1,2,3} on 8 vertices: 3-regular.
    std::vector<Arc> arcs;
    for (int i = 0; i < 8; ++i)
        for (int j : {1, 2, 3}) arcs.push_back({i, (i + j) % 8});
    Digraph circ(8, std::move(arcs));
    CHECK_THAT(spectral_radius(circ, 0.3).lambda, Catch::Matchers::WithinAbs(3.0, 1e-10));
}

TEST_CASE("spectral radius of a non-strongly-connected digraph") {
    // Outstar: every block is a single vertex; radius alpha*(n-1) from the hub.
    Digraph star = make_outstar(4);
    RadiusResult r = spectral_radius(star, 0.5);
    CHECK_FALSE(r.strongly_connected);
    CHECK(r.perron.empty());
    CHECK_THAT(r.lambda, Catch::Matchers::WithinAbs(1.5, 1e-12));

    // Two triangles joined by a one-way arc 2 -> 3.  The diagonal keeps the
    // whole-graph outdegrees, so the source triangle's block is
    // diag(a, a, 2a) + (1-a) * cycle and its radius is the largest root of
    // (x - a)^2 (x - 2a) = (1-a)^3, strictly above the sink triangle's 1.
    Digraph two(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
    const double a = 0.25;
    auto cubic = [&](double x) {
        return (x - a) * (x - a) * (x - 2.0 * a) - (1.0 - a) * (1.0 - a) * (1.0 - a);
    };
    double lo = 2.0 * a, hi = 3.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (cubic(mid) < 0.0 ? lo : hi) = mid;
    }
    const double expected = 0.5 * (lo + hi);
    CHECK(expected > 1.0);
    CHECK_THAT(spectral_radius(two, a).lambda, Catch::Matchers::WithinAbs(expected, 1e-9));
}

TEST_CASE("perron vector has unit euclidean norm and positive entries") {
    Digraph g(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}});
    RadiusResult r = spectral_radius(g, 0.5);
    REQUIRE(r.perron.size() == 3);
    double norm = 0.0;
    for (double t : r.perron) {
        CHECK(t > 0.0);
        norm += t * t;
    }
    CHECK_THAT(norm, Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK(r.iterations > 0);
    CHECK(r.residual < 1e-9);

    // The vector satisfies A_alpha x = lambda x.
    Matrix m = alpha_matrix(g, 0.5);
    for (int i = 0; i < 3; ++i) {
        double s = 0.0;
        for (int j = 0; j < 3; ++j) s += m(i, j) * r.perron[j];
        CHECK_THAT(s, Catch::Matchers::WithinAbs(r.lambda * r.perron[i], 1e-9));
    }
}

TEST_CASE("spectral radius is invariant under relabeling") {
    Digraph g(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {1, 4}});
    std::vector<int> perm{3, 0, 4, 1, 2};
    Digraph h = relabel(g, perm);
    for (double a : {0.0, 0.4, 0.75})
        CHECK_THAT(spectral_radius(g, a).lambda,
                   Catch::Matchers::WithinAbs(spectral_radius(h, a).lambda, 1e-11));
}

TEST_CASE("collatz-wielandt sandwich converges on an irregular digraph") {
    // Strongly connected, outdegrees 2,1,1,1: forces a non-trivial Perron pair.
    Digraph g(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 0}});
    for (double a : {0.0, 0.5, 0.9}) {
        RadiusResult r = spectral_radius(g, a);
        Spectrum s = eigenvalues_small(g, a);
        double rho = 0.0;
        for (auto ev : s.eigenvalues) rho = std::max(rho, std::abs(ev));
        CHECK_THAT(r.lambda, Catch::Matchers::WithinAbs(rho, 1e-9));
    }
}
