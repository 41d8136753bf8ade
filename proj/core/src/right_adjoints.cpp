#include <pultr/right_adjoints.hpp>

#include <algorithm>

namespace pultr {

namespace {

Operand src_vset(int c) { return {Operand::vset, Side::src, c}; }
Operand tgt_vset(int c) { return {Operand::vset, Side::tgt, c}; }
Operand src_bullet(int c) { return {Operand::bullet, Side::src, c}; }
Operand tgt_bullet(int c) { return {Operand::bullet, Side::tgt, c}; }
Operand bullet_set(Side s, int c) { return {Operand::bullet_as_set, s, c}; }
Operand fam(Side s, int c) { return {Operand::family, s, c}; }
Operand fam_union(Side s, int c) { return {Operand::family_union, s, c}; }

Rule unconditional(Atom concl) { return Rule{{}, concl}; }

} // namespace

TupleConstruction delta_r_construction(const Digraph & h)
{
    TupleConstruction tc;
    tc.name = "delta_r";
    tc.h = h;
    tc.coords = {{CoordType::vset, "R-"}, {CoordType::vset, "R+"}};
    tc.validity.push_back(unconditional({Atom::rr, src_vset(0), src_vset(1)}));
    tc.arc_rules.push_back(unconditional({Atom::intersects, src_vset(1), tgt_vset(0)}));
    return tc;
}

Digraph delta_r(const Digraph & h, const ConstructionOptions & options)
{
    return materialize(delta_r_construction(h), options);
}

TupleConstruction omega_path_construction(const Digraph & h)
{
    TupleConstruction tc;
    tc.name = "omega_path";
    tc.h = h;
    tc.coords = {{CoordType::bullet, "a"}, {CoordType::vset, "A"}};
    tc.arc_rules.push_back(unconditional({Atom::member, tgt_bullet(0), src_vset(1)}));
    tc.arc_rules.push_back(unconditional({Atom::rr, src_vset(1), tgt_vset(1)}));
    return tc;
}

Digraph omega_path(const Digraph & h, const ConstructionOptions & options)
{
    return materialize(omega_path_construction(h), options);
}

TupleConstruction omega_path_triple_construction(const Digraph & h)
{
    TupleConstruction tc;
    tc.name = "omega_path_triple";
    tc.h = h;
    tc.coords = {{CoordType::bullet, "a"}, {CoordType::vset, "A1"}, {CoordType::vset, "A2"}};
    tc.validity.push_back(unconditional({Atom::rr, src_vset(1), src_vset(2)}));
    tc.arc_rules.push_back(unconditional({Atom::member, tgt_bullet(0), src_vset(1)}));
    tc.arc_rules.push_back(unconditional({Atom::subset, tgt_vset(1), src_vset(2)}));
    return tc;
}

Digraph omega_path_triple(const Digraph & h, const ConstructionOptions & options)
{
    return materialize(omega_path_triple_construction(h), options);
}

namespace {

// Path order of Q from the eps1 endpoint to the eps2 endpoint.
std::vector<int> path_order(const PultrTemplate & t)
{
    const Digraph & q = t.q;
    if (! (t.p.n() == 1 && t.p.arc_count() == 0))
        throw precondition_error("omega_rpath: P must be the one-vertex arcless digraph");
    if (! is_oriented_tree(q))
        throw precondition_error("omega_rpath: Q must be an oriented path");
    std::vector<int> degree(q.n(), 0);
    for (auto & [u, v] : q.arcs()) {
        ++degree[u];
        ++degree[v];
    }
    for (int v = 0; v < q.n(); ++v)
        if (degree[v] > 2)
            throw precondition_error("omega_rpath: Q must be an oriented path");
    int start = t.eps1[0], finish = t.eps2[0];
    if (start == finish)
        throw precondition_error("omega_rpath: eps images must be the two distinct endpoints");
    if (q.n() >= 2 && (degree[start] != 1 || degree[finish] != 1))
        throw precondition_error("omega_rpath: eps images must be the path endpoints");

    std::vector<std::vector<int>> adj(q.n());
    for (auto & [u, v] : q.arcs()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (cur != finish) {
        int next = -1;
        for (int w : adj[cur])
            if (w != prev)
                next = w;
        if (next == -1)
            throw precondition_error("omega_rpath: eps2 image is not reachable along the path");
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    if (static_cast<int>(order.size()) != q.n())
        throw precondition_error("omega_rpath: Q is not a single path between the eps images");
    return order;
}

} // namespace

TupleConstruction omega_rpath_construction(const PultrTemplate & t, const Digraph & h)
{
    require_valid(t);
    auto order = path_order(t);
    int m = static_cast<int>(order.size()) - 1;

    TupleConstruction tc;
    tc.name = "omega_rpath";
    tc.h = h;
    tc.coords.push_back({CoordType::bullet, "x"});
    for (int i = 1; i <= m; ++i)
        tc.coords.push_back({CoordType::vset, "X" + std::to_string(i)});

    // X_m =>> {x}
    tc.validity.push_back(unconditional({Atom::rr, src_vset(m), bullet_set(Side::src, 0)}));

    if (m >= 1) {
        if (t.q.has_arc(order[0], order[1]))
            tc.arc_rules.push_back(unconditional({Atom::member, src_bullet(0), tgt_vset(1)}));
        else
            tc.arc_rules.push_back(unconditional({Atom::member, tgt_bullet(0), src_vset(1)}));
    }
    for (int i = 1; i < m; ++i) {
        if (t.q.has_arc(order[i], order[i + 1]))
            tc.arc_rules.push_back(unconditional({Atom::subset, src_vset(i), tgt_vset(i + 1)}));
        else
            tc.arc_rules.push_back(unconditional({Atom::subset, tgt_vset(i), src_vset(i + 1)}));
    }
    return tc;
}

Digraph omega_rpath(const PultrTemplate & t, const Digraph & h, const ConstructionOptions & options)
{
    return materialize(omega_rpath_construction(t, h), options);
}

TupleConstruction omega_glued_paths_construction(const Digraph & h)
{
    TupleConstruction tc;
    tc.name = "omega_glued_paths";
    tc.h = h;
    tc.coords = {{CoordType::family, "R--"}, {CoordType::family, "R-+"},
        {CoordType::family, "R+-"}, {CoordType::family, "R++"}};
    tc.validity.push_back(unconditional({Atom::allpairs_intersect, fam(Side::src, 1), fam(Side::src, 2)}));
    tc.arc_rules.push_back(unconditional({Atom::rr, fam_union(Side::src, 3), fam_union(Side::tgt, 0)}));
    tc.arc_rules.push_back(unconditional({Atom::intersects, fam(Side::src, 2), fam(Side::tgt, 0)}));
    tc.arc_rules.push_back(unconditional({Atom::intersects, fam(Side::src, 3), fam(Side::tgt, 1)}));
    return tc;
}

Digraph omega_glued_paths(const Digraph & h, const ConstructionOptions & options)
{
    return materialize(omega_glued_paths_construction(h), options);
}

TupleConstruction omega_example_tree_construction(const Digraph & h)
{
    TupleConstruction tc;
    tc.name = "omega_example_tree";
    tc.h = h;
    tc.coords = {{CoordType::vset, "S-"}, {CoordType::vset, "S+"},
        {CoordType::vset, "S--"}, {CoordType::vset, "S++"},
        {CoordType::vset, "S---"}, {CoordType::vset, "S+++"},
        {CoordType::vset, "S-*+++"}, {CoordType::vset, "S--*+++"}};

    // If S+ is nonempty then S--- =>> S--*+++.
    tc.validity.push_back({{{Atom::nonempty, src_vset(1), src_vset(1)}},
        {Atom::rr, src_vset(4), src_vset(7)}});

    tc.arc_rules.push_back(unconditional({Atom::intersects, src_vset(1), tgt_vset(0)}));
    tc.arc_rules.push_back(unconditional({Atom::subset, src_vset(0), tgt_vset(2)}));
    tc.arc_rules.push_back(unconditional({Atom::subset, src_vset(2), tgt_vset(4)}));
    tc.arc_rules.push_back(unconditional({Atom::subset, tgt_vset(1), src_vset(3)}));
    tc.arc_rules.push_back(unconditional({Atom::subset, tgt_vset(3), src_vset(5)}));
    tc.arc_rules.push_back(unconditional({Atom::subset, src_vset(6), tgt_vset(7)}));
    // S- empty, or S+++ contained in T-*+++.
    tc.arc_rules.push_back({{{Atom::nonempty, src_vset(0), src_vset(0)}},
        {Atom::subset, src_vset(5), tgt_vset(6)}});
    return tc;
}

Digraph omega_example_tree(const Digraph & h, const ConstructionOptions & options)
{
    return materialize(omega_example_tree_construction(h), options);
}

} // namespace pultr
