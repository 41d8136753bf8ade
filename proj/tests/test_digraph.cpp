#include <doctest.h>

#include <pultr/digraph.hpp>
#include <pultr/iso.hpp>

#include "support.hpp"

#include <random>

using namespace pultr;

TEST_CASE("parse_digraph reads the native format")
{
    Digraph g = parse_digraph("n 2\na 0 1");
    CHECK(g.n() == 2);
    CHECK(g.arcs() == std::vector<Arc>{{0, 1}});

    Digraph point = parse_digraph("n 1\n");
    CHECK(point.n() == 1);
    CHECK(point.arc_count() == 0);

    Digraph dedup = parse_digraph("n 2\na 0 1\na 0 1");
    CHECK(dedup.arcs() == std::vector<Arc>{{0, 1}});

    Digraph commented = parse_digraph("# header\nn 2\n# and a note\na 1 0");
    CHECK(commented.has_arc(1, 0));
}

TEST_CASE("parse_digraph reports malformed input with line numbers")
{
    CHECK_THROWS_AS(parse_digraph("n 2\na 0 5"), parse_error);
    CHECK_THROWS_AS(parse_digraph("n -1"), parse_error);
    CHECK_THROWS_AS(parse_digraph("a 0 1\nn 2"), parse_error);
    CHECK_THROWS_AS(parse_digraph("n 2\na 0"), parse_error);
    CHECK_THROWS_AS(parse_digraph("n 2\nx 0 1"), parse_error);
    CHECK_THROWS_AS(parse_digraph("n 2\nl 0 only one labelled"), parse_error);

    try {
        parse_digraph("n 2\na 0 two");
    } catch (const parse_error & e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("emit round-trips and dot output has the arc")
{
    Digraph g(2, {{0, 1}});
    CHECK(emit_digraph(g) == "n 2\na 0 1\n");
    CHECK(emit_digraph(Digraph(1, {})) == "n 1\n");
    CHECK(emit_digraph(g, EmitFormat::dot).find("0 -> 1") != std::string::npos);
}

TEST_CASE("parse after emit is the identity on random digraphs")
{
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        Digraph g = testing::random_digraph(rng, 7);
        if (trial % 3 == 0 && g.n() > 0) {
            std::vector<std::string> labels;
            for (int v = 0; v < g.n(); ++v)
                labels.push_back("label " + std::to_string(v));
            g.labels = labels;
        }
        Digraph back = parse_digraph(emit_digraph(g));
        CHECK(back == g);
        CHECK(back.labels == g.labels);
    }
}

TEST_CASE("disjoint_union translates arcs and reports offsets")
{
    auto [graph, offsets] = disjoint_union({path_digraph(1), path_digraph(1)});
    CHECK(graph.n() == 4);
    CHECK(graph.arcs() == std::vector<Arc>{{0, 1}, {2, 3}});
    CHECK(offsets == std::vector<int>{0, 2});

    CHECK(disjoint_union({}).graph.n() == 0);

    auto mixed = disjoint_union({path_digraph(0), path_digraph(2)});
    CHECK(mixed.graph.n() == 4);
    CHECK(mixed.graph.arcs() == std::vector<Arc>{{1, 2}, {2, 3}});
}

TEST_CASE("disjoint_union offsets are increasing and bijective")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Digraph> parts;
        int count = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int i = 0; i < count; ++i)
            parts.push_back(testing::random_digraph(rng, 5));
        auto [graph, offsets] = disjoint_union(parts);
        int total = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            CHECK(offsets[i] == total);
            total += parts[i].n();
        }
        CHECK(graph.n() == total);
    }
}

TEST_CASE("quotient collapses blocks deterministically")
{
    Digraph arc(2, {{0, 1}});

    auto identity = quotient(arc, {{{0}, {1}}});
    CHECK(identity.graph == arc);

    auto collapsed = quotient(arc, {{{0, 1}}});
    CHECK(collapsed.graph == Digraph(1, {{0, 0}}));

    Digraph two_arcs(4, {{0, 1}, {2, 3}});
    auto merged = quotient(two_arcs, {{{0}, {1, 2}, {3}}});
    CHECK(merged.graph == path_digraph(2));
    CHECK(merged.projection == std::vector<int>{0, 1, 1, 2});

    CHECK_THROWS_AS(quotient(arc, {{{0}}}), std::invalid_argument);
    CHECK_THROWS_AS(quotient(arc, {{{0, 1}, {1}}}), std::invalid_argument);
}

TEST_CASE("quotient by the identity partition is isomorphic to the input")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Digraph g = testing::random_digraph(rng, 6);
        VertexPartition p;
        for (int v = 0; v < g.n(); ++v)
            p.classes.push_back({v});
        CHECK(quotient(g, p).graph == g);
    }
}

TEST_CASE("is_oriented_tree recognizers")
{
    CHECK(is_oriented_tree(path_digraph(2)));
    CHECK(is_oriented_tree(path_digraph(0)));
    CHECK(! is_oriented_tree(Digraph(1, {{0, 0}})));
    CHECK(! is_oriented_tree(Digraph(0, {})));
    CHECK(! is_oriented_tree(Digraph(2, {{0, 1}, {1, 0}})));
    // The four-vertex Q with an underlying 4-cycle.
    CHECK(! is_oriented_tree(Digraph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}})));
    // Disconnected forest.
    CHECK(! is_oriented_tree(Digraph(4, {{0, 1}})));
}

TEST_CASE("oriented trees have one arc less than vertices")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Digraph g = testing::random_digraph(rng, 6);
        if (is_oriented_tree(g))
            CHECK(g.arc_count() == g.n() - 1);
    }
}

TEST_CASE("isomorphic detects relabelings and rejects others")
{
    Digraph a(3, {{0, 1}, {1, 2}});
    Digraph b(3, {{2, 0}, {0, 1}});
    CHECK(isomorphic(a, b));
    CHECK(! isomorphic(a, Digraph(3, {{0, 1}, {2, 1}})));
    CHECK(isomorphic(Digraph(0, {}), Digraph(0, {})));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Digraph g = testing::random_digraph(rng, 6);
        std::vector<int> perm(g.n());
        for (int i = 0; i < g.n(); ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Arc> arcs;
        for (auto & [u, v] : g.arcs())
            arcs.emplace_back(perm[u], perm[v]);
        Digraph h(g.n(), std::move(arcs));
        CHECK(isomorphic(g, h));
        CHECK(canonical_string(g) == canonical_string(h));
    }
}
