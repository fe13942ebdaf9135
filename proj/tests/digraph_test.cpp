#include "aalpha/digraph.hpp"
#include "aalpha/enumerate.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace aalpha;

namespace {

// Reachability closure by repeated boolean squaring; the independent oracle
// for the Tarjan-based connectivity report.
std::vector<std::vector<bool>> closure(const Digraph& g, bool undirected) {
    const int n = g.order();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (const Arc& a : g.arcs()) {
        r[a.tail][a.head] = true;
        if (undirected) r[a.head][a.tail] = true;
    }
    for (int rep = 0; rep < n; ++rep)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!r[i][j])
                    for (int k = 0; k < n; ++k)
                        if (r[i][k] && r[k][j]) {
                            r[i][j] = true;
                            break;
                        }
    return r;
}

} // namespace

TEST_CASE("digraph construction validates input") {
    CHECK_NOTHROW(Digraph(1));
    CHECK_NOTHROW(Digraph(3, {{0, 1}, {2, 1}}));
    CHECK_THROWS_AS(Digraph(0), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("arc queries") {
    Digraph g(4, {{2, 0}, {0, 1}, {1, 2}});
    CHECK(g.order() == 4);
    CHECK(g.arc_count() == 3);
    CHECK(g.has_arc(0, 1));
    CHECK(g.has_arc(2, 0));
    CHECK_FALSE(g.has_arc(1, 0));
    CHECK_FALSE(g.has_arc(3, 0));
    CHECK(std::is_sorted(g.arcs().begin(), g.arcs().end()));
}

TEST_CASE("parse and serialize round-trip") {
    const std::string text = "# a comment\n\n4\n0 1\n1 2\n2 3\n3 0\n";
    Digraph g = parse_digraph(text);
    CHECK(g.order() == 4);
    CHECK(g.arc_count() == 4);
    CHECK(serialize(g) == "4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(parse_digraph(serialize(g)) == g);

    Digraph shuffled = parse_digraph("3\n2 0\n0 1\n1 2\n");
    CHECK(serialize(shuffled) == "3\n0 1\n1 2\n2 0\n");
}

TEST_CASE("parse errors carry line numbers") {
    auto message = [](const std::string& text) {
        try {
            parse_digraph(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("") == "line 1: missing vertex count");
    CHECK_THAT(message("zero\n"), Catch::Matchers::StartsWith("line 1:"));
    CHECK_THAT(message("3\n0\n"), Catch::Matchers::StartsWith("line 2:"));
    CHECK_THAT(message("3\n0 1\n0 1\n"), Catch::Matchers::StartsWith("line 3: duplicate arc"));
    CHECK_THAT(message("3\n1 1\n"), Catch::Matchers::ContainsSubstring("loop"));
    CHECK_THAT(message("2\n0 5\n"), Catch::Matchers::StartsWith("line 2:"));
    CHECK_THAT(message("# only comments\n"), Catch::Matchers::ContainsSubstring("missing vertex count"));
}

TEST_CASE("degree profile matches direct recount") {
    Digraph g = parse_digraph("5\n0 1\n0 2\n1 2\n2 3\n3 0\n3 4\n4 0\n");
    DegreeProfile p = degree_profile(g);
    const int n = g.order();
    std::vector<int> out(n, 0), in(n, 0);
    for (const Arc& a : g.arcs()) {
        ++out[a.tail];
        ++in[a.head];
    }
    CHECK(p.outdeg == out);
    CHECK(p.indeg == in);
    CHECK(p.m == g.arc_count());
    CHECK(p.max_out == *std::max_element(out.begin(), out.end()));
    CHECK(p.min_out == *std::min_element(out.begin(), out.end()));
    CHECK(p.max_in == *std::max_element(in.begin(), in.end()));
    CHECK(p.min_in == *std::min_element(in.begin(), in.end()));

    for (int i = 0; i < n; ++i) {
        long long t = 0;
        for (const Arc& a : g.arcs())
            if (a.tail == i) t += out[a.head];
        CHECK(p.two_out[i] == t);
        if (out[i] == 0) {
            CHECK_FALSE(p.avg_two_out[i].has_value());
        } else {
            REQUIRE(p.avg_two_out[i].has_value());
            CHECK(*p.avg_two_out[i] == Rational(t, out[i]));
        }
    }
}

TEST_CASE("average two-step outdegree on the triangle with chord") {
    Digraph g(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}});
    DegreeProfile p = degree_profile(g);
    REQUIRE(p.avg_two_out[0].has_value());
    CHECK(*p.avg_two_out[0] == Rational(1));
    CHECK(*p.avg_two_out[1] == Rational(1));
    CHECK(*p.avg_two_out[2] == Rational(2));
}

TEST_CASE("connectivity agrees with the reachability oracle") {
    for (int n : {2, 3, 4}) {
        EnumerationFilter f;
        f.n = n;
        enumerate(f, [&](const Digraph& g) {
            auto reach = closure(g, false);
            auto ureach = closure(g, true);
            ConnectivityReport c = connectivity(g);

            bool sc = true, conn = true;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    sc = sc && reach[i][j];
                    conn = conn && ureach[i][j];
                }
            REQUIRE(c.strongly_connected == sc);
            REQUIRE(c.connected == conn);
            REQUIRE(is_strongly_connected(g) == sc);
            REQUIRE(is_connected(g) == conn);

            // Components partition the vertex set and are maximal: two
            // vertices share one iff mutually reachable.
            std::vector<int> comp_of(n, -1);
            int total = 0;
            for (size_t ci = 0; ci < c.components.size(); ++ci)
                for (int v : c.components[ci]) {
                    REQUIRE(comp_of[v] == -1);
                    comp_of[v] = static_cast<int>(ci);
                    ++total;
                }
            REQUIRE(total == n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    REQUIRE((comp_of[i] == comp_of[j]) == (reach[i][j] && reach[j][i]));

            // Condensation order: arcs never point back to an earlier block.
            for (const Arc& a : g.arcs()) REQUIRE(comp_of[a.tail] <= comp_of[a.head]);
        });
    }
}

TEST_CASE("complement is an involution and splits the arc pairs") {
    EnumerationFilter f;
    f.n = 3;
    enumerate(f, [&](const Digraph& g) {
        Digraph cg = complement(g);
        REQUIRE(cg.arc_count() + g.arc_count() == 3 * 2);
        REQUIRE(complement(cg) == g);
        for (const Arc& a : g.arcs()) REQUIRE_FALSE(cg.has_arc(a.tail, a.head));
    });
}

TEST_CASE("structure predicates") {
    Digraph c4 = parse_digraph("4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(is_outdegree_regular(c4));
    CHECK(is_regular(c4));
    CHECK_FALSE(is_symmetric_digraph(c4));
    CHECK_FALSE(is_complete_underlying(c4));

    Digraph k3(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    CHECK(is_symmetric_digraph(k3));
    CHECK(is_symmetric_complete(k3));
    CHECK(is_complete_underlying(k3));
    CHECK(is_regular(k3));

    Digraph tri_chord(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}});
    CHECK(is_complete_underlying(tri_chord));
    CHECK_FALSE(is_symmetric_digraph(tri_chord));
    CHECK_FALSE(is_outdegree_regular(tri_chord));

    // Bipartite sides {0,1} and {2,3} with per-side outdegrees 2 and 1.
    Digraph semi(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 0}, {3, 1}});
    CHECK(is_outdegree_semiregular(semi));
    CHECK_FALSE(is_outdegree_regular(semi));
    CHECK_FALSE(is_outdegree_semiregular(tri_chord));
    CHECK(is_outdegree_semiregular(c4));
}

TEST_CASE("cycle counting and unicyclic detection") {
    Digraph c5 = parse_digraph("5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(count_directed_cycles(c5) == 1);
    CHECK(unique_directed_cycle(c5) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(is_unicyclic(c5));

    Digraph digon(2, {{0, 1}, {1, 0}});
    CHECK(count_directed_cycles(digon) == 1);
    CHECK(is_unicyclic(digon));

    Digraph two_cycles(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    CHECK(count_directed_cycles(two_cycles) == 2);
    CHECK_FALSE(is_unicyclic(two_cycles));

    Digraph tri_chord(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}});
    CHECK(count_directed_cycles(tri_chord) == 2);

    Digraph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(count_directed_cycles(path) == 0);
    CHECK(unique_directed_cycle(path).empty());
    CHECK_FALSE(is_unicyclic(path));

    // m = n and connected is not enough: a digon plus a pendant arc into it
    // keeps m = n but a second vertex pair stays acyclic.
    Digraph digon_tail(3, {{0, 1}, {1, 0}, {2, 0}});
    CHECK(is_unicyclic(digon_tail));
    CHECK(count_directed_cycles(digon_tail) == 1);
}
