#include <doctest.h>

#include <pultr/audit.hpp>
#include <pultr/fixtures.hpp>
#include <pultr/functors.hpp>
#include <pultr/hom.hpp>
#include <pultr/iso.hpp>
#include <pultr/pultr_template.hpp>

#include "support.hpp"

#include <random>

using namespace pultr;

TEST_CASE("validate_template classifies the fixtures")
{
    auto arc = validate_template(fixtures::arc_template());
    CHECK(arc.valid());
    CHECK(arc.p_is_arc);
    CHECK(arc.q_is_tree);
    CHECK(arc.tree_construction_applies);

    auto c4 = validate_template(fixtures::c4_template());
    CHECK(c4.valid());
    CHECK(! c4.q_is_tree);
    CHECK(! c4.tree_construction_applies);

    PultrTemplate backwards;
    backwards.p = path_digraph(1);
    backwards.q = path_digraph(2);
    backwards.eps1 = {1, 0}; // maps the arc against the orientation
    backwards.eps2 = {1, 2};
    CHECK(! validate_template(backwards).valid());
    CHECK_THROWS_AS(require_valid(backwards), precondition_error);
}

TEST_CASE("template serialization round-trips the fixtures")
{
    for (auto & [name, t] : fixtures::all_templates()) {
        CAPTURE(name);
        PultrTemplate back = parse_template(emit_template(t));
        CHECK(back.p == t.p);
        CHECK(back.q == t.q);
        CHECK(back.eps1 == t.eps1);
        CHECK(back.eps2 == t.eps2);
    }
    CHECK_THROWS_AS(parse_template("P\nn 1\nQ\nn 1\ne1 0 0\n"), parse_error); // e2 missing
}

TEST_CASE("lambda_apply on the worked examples")
{
    // Arc template on the single arc gives the two-arc path, exactly.
    auto lam = lambda_apply(fixtures::arc_template(), path_digraph(1));
    CHECK(lam.graph.n() == 3);
    CHECK(lam.graph.arcs() == std::vector<Arc>{{0, 1}, {1, 2}});

    // No arcs: one P-copy per vertex.
    auto lone = lambda_apply(fixtures::c4_template(), Digraph(1, {}));
    CHECK(isomorphic(lone.graph, path_digraph(1)));

    // Path template on the single arc collapses to Q itself.
    auto pt = lambda_apply(fixtures::path_template(), path_digraph(1));
    Digraph no_labels = pt.graph;
    no_labels.labels.reset();
    CHECK(isomorphic(no_labels, fixtures::path_template().q));
}

TEST_CASE("lambda provenance maps cover the quotient")
{
    auto t = fixtures::glued_paths_template();
    Digraph g(3, {{0, 1}, {1, 2}, {2, 0}});
    auto lam = lambda_apply(t, g);
    for (int u = 0; u < g.n(); ++u)
        for (int p = 0; p < t.p.n(); ++p)
            CHECK(lam.p_vertex(u, p) < lam.graph.n());
    for (int a = 0; a < g.arc_count(); ++a)
        for (int p = 0; p < t.p.n(); ++p) {
            auto [u, v] = lam.g_arcs[a];
            CHECK(lam.q_vertex(a, t.eps1[p]) == lam.p_vertex(u, p));
            CHECK(lam.q_vertex(a, t.eps2[p]) == lam.p_vertex(v, p));
        }
}

TEST_CASE("gamma_apply matches the direct arc graph")
{
    auto arc = fixtures::arc_template();

    Digraph g1 = gamma_apply(arc, path_digraph(2));
    CHECK(isomorphic(g1, path_digraph(1)));

    for (int k = 1; k <= 6; ++k)
        CHECK(isomorphic(gamma_apply(arc, path_digraph(k + 1)), path_digraph(k)));

    // Direct construction: vertices are arcs, arcs are consecutive pairs.
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        Digraph h = testing::random_digraph(rng, 4, 0.4);
        Digraph gamma = gamma_apply(arc, h);
        auto arcs = h.arcs();
        std::vector<Arc> direct;
        for (size_t i = 0; i < arcs.size(); ++i)
            for (size_t j = 0; j < arcs.size(); ++j)
                if (arcs[i].second == arcs[j].first)
                    direct.emplace_back(static_cast<int>(i), static_cast<int>(j));
        Digraph delta(static_cast<int>(arcs.size()), std::move(direct));
        CHECK(isomorphic(gamma, delta));
    }
}

TEST_CASE("the four-arc template extends the arc graph")
{
    // Its central functor always contains the arc graph, and equals it on
    // digraphs without a x->y->z<-w<-x square.
    auto arc = fixtures::arc_template();
    auto c4 = fixtures::c4_template();
    std::mt19937 rng(90);
    for (int trial = 0; trial < 60; ++trial) {
        Digraph g = testing::random_digraph(rng, 3, 0.4);
        Digraph small = gamma_apply(arc, g);
        Digraph big = gamma_apply(c4, g);
        REQUIRE(small.n() == big.n());
        for (auto & a : small.arcs())
            CHECK(big.has_arc(a.first, a.second));

        bool has_square = false;
        for (int x = 0; x < g.n(); ++x)
            for (int y = 0; y < g.n(); ++y)
                for (int z = 0; z < g.n(); ++z)
                    for (int w = 0; w < g.n(); ++w)
                        if (g.has_arc(x, y) && g.has_arc(y, z) && g.has_arc(w, z) && g.has_arc(x, w))
                            has_square = true;
        if (! has_square)
            CHECK(small == big);
    }
}

TEST_CASE("gamma_apply on the path template")
{
    Digraph gamma = gamma_apply(fixtures::path_template(), path_digraph(1));
    CHECK(gamma.n() == 2);
    CHECK(gamma.arc_count() == 0);
}

TEST_CASE("gamma labels record the homomorphism maps")
{
    Digraph gamma = gamma_apply(fixtures::arc_template(), path_digraph(2));
    REQUIRE(gamma.labels);
    CHECK((*gamma.labels)[0] == "(0,1)");
    CHECK((*gamma.labels)[1] == "(1,2)");
}

TEST_CASE("gamma is functorial on witnessed homs")
{
    std::mt19937 rng(77);
    auto arc = fixtures::arc_template();
    auto path = fixtures::path_template();
    int tested = 0;
    while (tested < 25) {
        Digraph h1 = testing::random_digraph(rng, 3, 0.4);
        Digraph h2 = testing::random_digraph(rng, 3, 0.5);
        if (! hom_exists_bool(h1, h2))
            continue;
        ++tested;
        CHECK(hom_exists_bool(gamma_apply(arc, h1), gamma_apply(arc, h2)));
        CHECK(hom_exists_bool(gamma_apply(path, h1), gamma_apply(path, h2)));
    }
}

TEST_CASE("compose_templates reproduces the iterated arc template")
{
    auto arc = fixtures::arc_template();
    auto squared = compose_templates(arc, arc, 2);
    CHECK(squared.composed.p == path_digraph(2));
    CHECK(squared.composed.q == path_digraph(3));
    CHECK(squared.composed.eps1 == std::vector<int>{0, 1, 2});
    CHECK(squared.composed.eps2 == std::vector<int>{1, 2, 3});
}

TEST_CASE("composed templates match the worked compositions")
{
    auto u = fixtures::arc_after_path_template();
    CHECK(u.p.n() == 4);
    CHECK(isomorphic(u.p, fixtures::path_template().q));
    CHECK(u.q.n() == 7);

    auto v = fixtures::path_after_arc_template();
    CHECK(v.p.n() == 2);
    CHECK(isomorphic(v.p, path_digraph(1)));
    CHECK(isomorphic(v.q, fixtures::path_after_arc_expected_q()));
    CHECK(v.q.n() == 5);
}

TEST_CASE("lambda-gamma adjunction holds for every fixture on a spot universe")
{
    for (auto & [name, t] : fixtures::all_templates()) {
        CAPTURE(name);
        auto report = audit_lambda_gamma(t, 2, 1, 2);
        CHECK(report.pass());
    }
}
