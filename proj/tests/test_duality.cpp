#include <doctest.h>

#include <pultr/audit.hpp>
#include <pultr/duality.hpp>
#include <pultr/fixtures.hpp>
#include <pultr/functors.hpp>
#include <pultr/hom.hpp>
#include <pultr/iso.hpp>
#include <pultr/right_adjoints.hpp>

#include "support.hpp"

#include <algorithm>
#include <random>

using namespace pultr;

TEST_CASE("enumerate_oriented_trees counts and canonicity")
{
    CHECK(enumerate_oriented_trees(1).size() == 1);
    CHECK(enumerate_oriented_trees(2).size() == 1);
    // Orientations of the 3-path up to isomorphism: ->->, ->(<-), (<-)->.
    CHECK(enumerate_oriented_trees(3).size() == 3);

    for (int n = 1; n <= 5; ++n) {
        auto trees = enumerate_oriented_trees(n);
        for (size_t i = 0; i < trees.size(); ++i) {
            CHECK(is_oriented_tree(trees[i]));
            for (size_t j = i + 1; j < trees.size(); ++j)
                CHECK(! isomorphic(trees[i], trees[j]));
        }
    }

    // Every random oriented tree is isomorphic to a listed one.
    std::mt19937 rng(321);
    for (int trial = 0; trial < 30; ++trial) {
        Digraph g = testing::random_digraph(rng, 5, 0.35);
        if (! is_oriented_tree(g))
            continue;
        auto trees = enumerate_oriented_trees(g.n());
        CHECK(std::any_of(trees.begin(), trees.end(),
            [&](const Digraph & t) { return isomorphic(g, t); }));
    }
}

TEST_CASE("verify_duality on the known pairs")
{
    // Arcless target: G maps iff G has no arcs iff the single arc avoids G.
    DualityCandidate arcless{{path_digraph(1)}, path_digraph(0)};
    CHECK(verify_duality(arcless, 3).holds);

    DualityCandidate two_path{{path_digraph(2)}, path_digraph(1)};
    auto verdict = verify_duality(two_path, 4);
    CHECK(verdict.holds);
    CHECK(verdict.graphs_checked == 1 + 2 + 16 + 512 + 65536);

    // Negative control: the single arc breaks this candidate.
    DualityCandidate wrong{{path_digraph(2)}, path_digraph(0)};
    auto fail = verify_duality(wrong, 2);
    CHECK(! fail.holds);
    REQUIRE(fail.witness);
    CHECK(isomorphic(*fail.witness, path_digraph(1)));
    CHECK(fail.broken_direction == "no-obstruction-but-no-hom");

    CHECK_THROWS_AS(verify_duality(two_path, 5), resource_error);
}

TEST_CASE("verify_duality verdict is enumeration-order independent")
{
    // Same candidate presented with the obstruction list reversed and with a
    // relabeled target; the verdict must not change.
    Digraph target = path_digraph(1);
    Digraph relabeled(2, {{1, 0}});
    DualityCandidate a{{path_digraph(2), path_digraph(3)}, target};
    DualityCandidate b{{path_digraph(3), path_digraph(2)}, relabeled};
    CHECK(verify_duality(a, 3).holds == verify_duality(b, 3).holds);
}

TEST_CASE("transfer_obstructions through the arc template")
{
    auto arc = fixtures::arc_template();

    DualityCandidate base{{path_digraph(1)}, path_digraph(0)};
    auto v1 = transfer_obstructions(arc, base, delta_r(path_digraph(0)), 3);
    CHECK(v1.holds);

    DualityCandidate two{{path_digraph(2)}, path_digraph(1)};
    auto v2 = transfer_obstructions(arc, two, delta_r(path_digraph(1)), 3);
    CHECK(v2.holds);

    // Negative control: a deliberately wrong K fails with a witness.
    auto v3 = transfer_obstructions(arc, base, path_digraph(0), 3);
    CHECK(! v3.holds);
    CHECK(v3.stage == "candidate-equation");
    CHECK(v3.equation_witness.has_value());
}

TEST_CASE("transfer succeeds with the matching adjoint as candidate")
{
    // For each implemented adjoint and each verified duality whose target
    // fits its functor, K = Omega(H) satisfies the candidate equation and
    // receives the transferred obstruction set.
    std::vector<std::pair<DualityCandidate, int>> dualities = {
        {{{path_digraph(1)}, path_digraph(0)}, 3},
        {{{path_digraph(2)}, path_digraph(1)}, 3},
    };
    std::vector<OmegaRequest> adjoints = {
        {OmegaKind::delta_r, fixtures::arc_template(), {}, 1ull << 21},
        {OmegaKind::path, fixtures::path_template(), {}, 1ull << 21},
        {OmegaKind::path_triple, fixtures::path_template(), {}, 1ull << 21},
        {OmegaKind::rpath, fixtures::single_arc_path_template(), {}, 1ull << 21},
        {OmegaKind::tree, fixtures::example_tree_template(), {}, 1ull << 21},
    };
    for (auto & [candidate, n_max] : dualities)
        for (auto & request : adjoints) {
            CAPTURE(omega_kind_name(request.kind));
            Digraph k = omega_folded(request, candidate.target);
            k.labels.reset();
            auto verdict = transfer_obstructions(request.t, candidate, k, n_max);
            CHECK(verdict.holds);
        }
}

TEST_CASE("check_necessary_conditions accepts the arc template")
{
    auto report = check_necessary_conditions(fixtures::arc_template(), 5);
    CHECK(report.p_equiv_tree);
    CHECK(report.q_equiv_tree);
    CHECK(report.failing_trees.empty());
    CHECK(report.verdict);
    CHECK(report.trees_checked > 0);
}

TEST_CASE("check_necessary_conditions rejects the four-cycle template")
{
    auto report = check_necessary_conditions(fixtures::c4_template(), 6);
    CHECK(report.p_equiv_tree);
    CHECK(report.q_equiv_tree); // Q itself is hom-equivalent to a tree
    CHECK(! report.failing_trees.empty());
    CHECK(! report.verdict);

    // The listed witness tree fails directly.
    Digraph witness = fixtures::c4_witness_tree();
    Digraph image = lambda_apply(fixtures::c4_template(), witness).graph;
    image.labels.reset();
    CHECK(! equiv_to_tree(image));
    bool witness_found = false;
    for (auto & tree : report.failing_trees)
        if (isomorphic(tree, witness))
            witness_found = true;
    CHECK(witness_found);
}

TEST_CASE("check_necessary_conditions accepts the worked tree template")
{
    auto report = check_necessary_conditions(fixtures::example_tree_template(), 5);
    CHECK(report.verdict);
}

TEST_CASE("budget caps throw")
{
    CHECK_THROWS_AS(check_necessary_conditions(fixtures::arc_template(), 9), resource_error);
}
