#include <pultr/fixtures.hpp>
#include <pultr/functors.hpp>

namespace pultr {
namespace fixtures {

PultrTemplate arc_template()
{
    PultrTemplate t;
    t.p = path_digraph(1);
    t.q = path_digraph(2);
    t.eps1 = {0, 1};
    t.eps2 = {1, 2};
    return t;
}

PultrTemplate c4_template()
{
    PultrTemplate t;
    t.p = path_digraph(1);
    t.q = Digraph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
    t.eps1 = {0, 1};
    t.eps2 = {2, 3};
    return t;
}

PultrTemplate path_template()
{
    PultrTemplate t;
    t.p = path_digraph(0);
    t.q = Digraph(4, {{1, 0}, {1, 2}, {2, 3}});
    t.eps1 = {0};
    t.eps2 = {3};
    return t;
}

PultrTemplate single_arc_path_template()
{
    PultrTemplate t;
    t.p = path_digraph(0);
    t.q = path_digraph(1);
    t.eps1 = {0};
    t.eps2 = {1};
    return t;
}

PultrTemplate glued_paths_template()
{
    PultrTemplate t;
    t.p = path_digraph(2);
    t.q = Digraph(6, {{0, 1}, {1, 2}, {3, 2}, {3, 4}, {4, 5}});
    t.eps1 = {0, 1, 2};
    t.eps2 = {3, 4, 5};
    return t;
}

PultrTemplate example_tree_template()
{
    PultrTemplate t;
    t.p = path_digraph(1);
    t.q = Digraph(11,
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {7, 5}, {5, 3}});
    t.eps1 = {0, 1};
    t.eps2 = {9, 10};
    return t;
}

PultrTemplate arc_after_path_template()
{
    return compose_templates(arc_template(), path_template(), 0).composed;
}

PultrTemplate path_after_arc_template()
{
    return compose_templates(path_template(), arc_template(), 0).composed;
}

Digraph c4_witness_tree()
{
    return Digraph(6, {{0, 1}, {1, 2}, {3, 2}, {3, 4}, {4, 5}});
}

Digraph path_after_arc_expected_q()
{
    return Digraph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
}

std::vector<std::pair<std::string, PultrTemplate>> all_templates()
{
    return {
        {"arc", arc_template()},
        {"c4", c4_template()},
        {"path", path_template()},
        {"rpath1", single_arc_path_template()},
        {"glued", glued_paths_template()},
        {"tree11", example_tree_template()},
        {"arc-after-path", arc_after_path_template()},
        {"path-after-arc", path_after_arc_template()},
    };
}

} // namespace fixtures
} // namespace pultr
