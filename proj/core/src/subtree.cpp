#include <pultr/subtree.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace pultr {

namespace {

std::vector<std::vector<int>> underlying_adjacency(const Digraph & q)
{
    std::vector<std::vector<int>> adj(q.n());
    for (auto & [u, v] : q.arcs()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

// Unique tree path between two vertex sets, entering each set exactly once.
std::vector<int> tree_path(const Digraph & q, const std::vector<int> & from, const std::vector<int> & to)
{
    auto adj = underlying_adjacency(q);
    std::vector<int> parent(q.n(), -2);
    std::vector<int> queue;
    for (int v : from) {
        if (parent[v] != -2)
            continue;
        parent[v] = -1;
        queue.push_back(v);
    }
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int w : adj[v])
            if (parent[w] == -2) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    int hit = -1;
    for (size_t i = 0; i < queue.size() && hit == -1; ++i)
        for (int v : to)
            if (queue[i] == v) {
                hit = v;
                break;
            }
    if (hit == -1)
        throw precondition_error("eps images are not connected in Q");
    std::vector<int> path;
    for (int v = hit; v != -1; v = parent[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// Component of Q - u containing seed.
std::vector<int> component_without(const std::vector<std::vector<int>> & adj, int u, int seed)
{
    std::vector<int> comp{seed};
    std::vector<bool> seen(adj.size(), false);
    seen[seed] = true;
    seen[u] = true;
    for (size_t i = 0; i < comp.size(); ++i)
        for (int w : adj[comp[i]])
            if (! seen[w]) {
                seen[w] = true;
                comp.push_back(w);
            }
    return comp;
}

// Canonical encoding of a rooted subtree with arc directions and image
// marks, so duplicates are folded up to the isomorphisms that preserve the
// root and the P-vertex or P-arc.
std::string encode_subtree(const Digraph & q, const RootedSubtree & t)
{
    std::vector<bool> inside(q.n(), false);
    for (int v : t.vertices)
        inside[v] = true;
    auto adj = underlying_adjacency(q);

    auto mark = [&](int v) -> char {
        if (! t.pendent) {
            if (t.p_vertex == v)
                return 'p';
            if (t.p_arc.first == v)
                return 't';
            if (t.p_arc.second == v)
                return 'h';
        }
        return '.';
    };

    auto rec = [&](auto && self, int v, int parent) -> std::string {
        std::vector<std::string> parts;
        for (int w : adj[v]) {
            if (w == parent || ! inside[w])
                continue;
            parts.push_back((q.has_arc(v, w) ? ">" : "<") + self(self, w, v));
        }
        std::sort(parts.begin(), parts.end());
        std::string out = "(";
        out += mark(v);
        for (auto & p : parts)
            out += p;
        out += ")";
        return out;
    };
    return rec(rec, t.root, -1);
}

} // namespace

SubtreeDecomposition build_subtree_decomposition(const PultrTemplate & t, std::optional<int> middle_override)
{
    require_valid(t);
    auto report = validate_template(t);
    if (report.degenerate_equal_eps)
        throw precondition_error("tree construction: eps1 == eps2 is the degenerate case and is rejected");
    if (! report.q_is_tree)
        throw precondition_error("tree construction: Q must be an oriented tree");
    if (! report.p_is_point && ! report.p_is_arc)
        throw precondition_error("tree construction: P must be the one-vertex digraph or the single arc");

    SubtreeDecomposition d;
    d.t = t;
    d.p_is_point = report.p_is_point;

    std::vector<int> image1, image2;
    if (d.p_is_point) {
        image1 = {t.eps1[0]};
        image2 = {t.eps2[0]};
    }
    else {
        image1 = {t.eps1[0], t.eps1[1]};
        image2 = {t.eps2[0], t.eps2[1]};
    }

    d.tilde_q = tree_path(t.q, image1, image2);

    int L = static_cast<int>(d.tilde_q.size()) - 1;
    d.middle = d.tilde_q[L / 2];
    if (middle_override) {
        if (std::find(d.tilde_q.begin(), d.tilde_q.end(), *middle_override) == d.tilde_q.end())
            throw precondition_error("middle vertex override must lie on the connecting path");
        d.middle = *middle_override;
    }

    auto adj = underlying_adjacency(t.q);
    auto in_set = [](const std::vector<int> & xs, int v) {
        return std::find(xs.begin(), xs.end(), v) != xs.end();
    };

    d.families.assign(t.q.n(), {});
    for (int u = 0; u < t.q.n(); ++u) {
        for (int w : adj[u]) {
            // One component per neighbour; skip duplicates when w sits in an
            // already-collected component (cannot happen in a tree).
            auto comp = component_without(adj, u, w);
            if (u != d.middle && in_set(comp, d.middle))
                continue;
            RootedSubtree sub;
            sub.root = u;
            sub.vertices = comp;
            sub.vertices.push_back(u);
            std::sort(sub.vertices.begin(), sub.vertices.end());

            if (d.p_is_point) {
                for (int i = 1; i <= 2; ++i) {
                    int qi = (i == 1 ? t.eps1 : t.eps2)[0];
                    if (qi != u && in_set(sub.vertices, qi)) {
                        sub.pendent = false;
                        sub.eps_index = i;
                        sub.p_vertex = qi;
                    }
                }
            }
            else {
                for (int i = 1; i <= 2; ++i) {
                    const auto & eps = (i == 1 ? t.eps1 : t.eps2);
                    if (in_set(sub.vertices, eps[0]) && in_set(sub.vertices, eps[1])) {
                        sub.pendent = false;
                        sub.eps_index = i;
                        sub.p_arc = {eps[0], eps[1]};
                    }
                }
            }

            d.families[u].push_back(static_cast<int>(d.subtrees.size()));
            d.subtrees.push_back(std::move(sub));
        }
    }

    // Deduplicate up to isomorphism preserving root and image. Coordinate
    // order: position of the root's attachment on the path, distance of the
    // root from the path, then the canonical form.
    std::vector<int> path_pos(t.q.n(), -1), path_dist(t.q.n(), -1);
    {
        std::vector<int> queue;
        for (int i = 0; i < static_cast<int>(d.tilde_q.size()); ++i) {
            path_pos[d.tilde_q[i]] = i;
            path_dist[d.tilde_q[i]] = 0;
            queue.push_back(d.tilde_q[i]);
        }
        for (size_t i = 0; i < queue.size(); ++i)
            for (int w : adj[queue[i]])
                if (path_dist[w] == -1) {
                    path_dist[w] = path_dist[queue[i]] + 1;
                    path_pos[w] = path_pos[queue[i]];
                    queue.push_back(w);
                }
    }

    std::vector<std::string> encodings(d.subtrees.size());
    for (size_t i = 0; i < d.subtrees.size(); ++i)
        encodings[i] = encode_subtree(t.q, d.subtrees[i]);

    std::vector<int> order(d.subtrees.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    auto key = [&](int i) {
        const auto & sub = d.subtrees[i];
        return std::make_tuple(path_pos[sub.root], path_dist[sub.root], encodings[i]);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });

    d.class_of.assign(d.subtrees.size(), -1);
    std::map<std::string, int> by_encoding;
    for (int i : order) {
        auto it = by_encoding.find(encodings[i]);
        if (it == by_encoding.end()) {
            int cls = static_cast<int>(d.class_example.size());
            by_encoding.emplace(encodings[i], cls);
            d.class_example.push_back(i);
            d.class_pendent.push_back(d.subtrees[i].pendent);
            d.class_of[i] = cls;
        }
        else {
            d.class_of[i] = it->second;
        }
    }

    // Distinguished trees at the middle vertex.
    for (int id : d.families[d.middle]) {
        const auto & sub = d.subtrees[id];
        if (sub.pendent)
            continue;
        if (sub.eps_index == 1)
            d.tm1_class = d.class_of[id];
        else
            d.tm2_class = d.class_of[id];
    }
    if (d.tm1_class == -1) {
        if (! d.p_is_point)
            throw std::logic_error("tree construction: missing non-pendent tree for eps1 at the middle vertex");
        d.tm1_degenerate = true; // m is the eps1 image; coordinate is {bullet}
    }
    if (d.tm2_class == -1) {
        if (! d.p_is_point)
            throw std::logic_error("tree construction: missing non-pendent tree for eps2 at the middle vertex");
        d.tm2_degenerate = true;
    }
    return d;
}

std::string SubtreeDecomposition::describe() const
{
    std::ostringstream out;
    out << "P: " << (p_is_point ? "point" : "arc") << "\n";
    out << "connecting path:";
    for (int v : tilde_q)
        out << " " << v;
    out << "\nmiddle vertex: " << middle << "\n";
    out << "coordinate classes:\n";
    for (size_t c = 0; c < class_example.size(); ++c) {
        const auto & sub = subtrees[class_example[c]];
        out << "  T" << c << ": root " << sub.root << ", vertices {";
        for (size_t i = 0; i < sub.vertices.size(); ++i)
            out << (i ? "," : "") << sub.vertices[i];
        out << "}, " << (sub.pendent ? "pendent" : "non-pendent");
        if (! sub.pendent) {
            if (sub.p_vertex != -1)
                out << ", image vertex " << sub.p_vertex << " (eps" << sub.eps_index << ")";
            else
                out << ", image arc (" << sub.p_arc.first << "," << sub.p_arc.second << ") (eps" << sub.eps_index << ")";
        }
        out << "\n";
    }
    out << "families:\n";
    for (size_t u = 0; u < families.size(); ++u) {
        if (families[u].empty())
            continue;
        out << "  S_" << u << ":";
        for (int id : families[u])
            out << " T" << class_of[id];
        out << "\n";
    }
    out << "Tm1: " << (tm1_degenerate ? std::string("degenerate (bullet)") : "T" + std::to_string(tm1_class)) << "\n";
    out << "Tm2: " << (tm2_degenerate ? std::string("degenerate (bullet)") : "T" + std::to_string(tm2_class)) << "\n";
    return out.str();
}

namespace {

struct CoordMap {
    bool p_is_point;
    // class -> coordinate index in the tuple construction
    std::vector<int> coord_of_class;

    Operand class_as_set(Side side, int cls) const
    {
        return {Operand::vset, side, coord_of_class[cls]};
    }

    Operand bullet_as_set(Side side) const { return {Operand::bullet_as_set, side, 0}; }
};

} // namespace

TupleConstruction omega_tree_construction(const SubtreeDecomposition & d, const Digraph & h)
{
    const Digraph & q = d.t.q;

    TupleConstruction tc;
    tc.name = "omega_tree";
    tc.h = h;

    CoordMap cm;
    cm.p_is_point = d.p_is_point;
    if (d.p_is_point)
        tc.coords.push_back({CoordType::bullet, "R*"});
    cm.coord_of_class.resize(d.class_example.size());
    for (size_t c = 0; c < d.class_example.size(); ++c) {
        cm.coord_of_class[c] = static_cast<int>(tc.coords.size());
        tc.coords.push_back({d.class_pendent[c] ? CoordType::bit : CoordType::vset, "T" + std::to_string(c)});
    }

    auto bit_atom = [&](Side side, int cls) {
        // Bit coordinates are read raw; the vset kind passes values through.
        return Atom{Atom::bit_set, {Operand::vset, side, cm.coord_of_class[cls]}, {}};
    };
    auto set_op = [&](Side side, int cls, bool degenerate) {
        return degenerate ? cm.bullet_as_set(side) : cm.class_as_set(side, cls);
    };

    // Vertex condition: if every pendent bit at the middle vertex is set,
    // the first distinguished coordinate =>> the second.
    {
        Rule vert;
        for (int id : d.families[d.middle])
            if (d.subtrees[id].pendent)
                vert.hyps.push_back(bit_atom(Side::src, d.class_of[id]));
        vert.concl = {Atom::rr, set_op(Side::src, d.tm1_class, d.tm1_degenerate),
            set_op(Side::src, d.tm2_class, d.tm2_degenerate)};
        tc.validity.push_back(vert);
    }

    auto adj = underlying_adjacency(q);
    std::vector<int> dist_m(q.n(), -1);
    {
        std::vector<int> queue{d.middle};
        dist_m[d.middle] = 0;
        for (size_t i = 0; i < queue.size(); ++i)
            for (int w : adj[queue[i]])
                if (dist_m[w] == -1) {
                    dist_m[w] = dist_m[queue[i]] + 1;
                    queue.push_back(w);
                }
    }

    auto subtree_through = [&](int b, int a) -> int { // subtree rooted at b containing a
        for (int id : d.families[b]) {
            const auto & sub = d.subtrees[id];
            if (std::binary_search(sub.vertices.begin(), sub.vertices.end(), a))
                return id;
        }
        return -1;
    };
    auto nonpendent_at = [&](int a) -> int {
        for (int id : d.families[a])
            if (! d.subtrees[id].pendent)
                return id;
        return -1;
    };

    Arc image_arcs[2] = {{-1, -1}, {-1, -1}};
    if (! d.p_is_point) {
        image_arcs[0] = {d.t.eps1[0], d.t.eps1[1]};
        image_arcs[1] = {d.t.eps2[0], d.t.eps2[1]};
    }

    for (auto & [x, y] : q.arcs()) {
        if (! d.p_is_point && (Arc{x, y} == image_arcs[0] || Arc{x, y} == image_arcs[1]))
            continue; // handled by the combined image-arc conditions below

        int a = dist_m[x] > dist_m[y] ? x : y; // farther from the middle
        int b = a == x ? y : x;
        int through_id = subtree_through(b, a);
        if (through_id == -1)
            throw std::logic_error("tree construction: no subtree through an arc");
        int through_cls = d.class_of[through_id];

        bool a_to_b = (x == a); // the Q arc runs from the far side towards the middle
        Side hyp_side = a_to_b ? Side::src : Side::tgt;
        Side other_side = a_to_b ? Side::tgt : Side::src;

        Rule rule;
        if (d.class_pendent[through_cls]) {
            // Conditions on arcs inside pendent regions: all of S_a forces
            // the through bit.
            for (int id : d.families[a]) {
                if (! d.subtrees[id].pendent)
                    throw std::logic_error("tree construction: non-pendent tree inside a pendent region");
                rule.hyps.push_back(bit_atom(hyp_side, d.class_of[id]));
            }
            rule.concl = bit_atom(other_side, through_cls);
        }
        else {
            for (int id : d.families[a])
                if (d.subtrees[id].pendent)
                    rule.hyps.push_back(bit_atom(hyp_side, d.class_of[id]));
            bool a_is_image = d.p_is_point && (a == d.t.eps1[0] || a == d.t.eps2[0]);
            if (a_is_image) {
                // Boundary arc of the path: the bullet enters the through
                // coordinate.
                rule.concl = {Atom::member, {Operand::bullet, hyp_side, 0},
                    cm.class_as_set(other_side, through_cls)};
            }
            else {
                int ta = nonpendent_at(a);
                if (ta == -1)
                    continue; // middle on an image: the vertex condition carries this arc
                rule.concl = {Atom::subset, cm.class_as_set(hyp_side, d.class_of[ta]),
                    cm.class_as_set(other_side, through_cls)};
            }
        }
        tc.arc_rules.push_back(std::move(rule));
    }

    if (! d.p_is_point) {
        // The two image arcs yield the combined conditions. Endpoints: a/d
        // off the path, b/c on it.
        auto on_path = [&](int v) {
            return std::find(d.tilde_q.begin(), d.tilde_q.end(), v) != d.tilde_q.end();
        };
        auto [e1t, e1h] = image_arcs[0];
        auto [e2t, e2h] = image_arcs[1];
        int b = on_path(e1h) ? e1h : e1t;
        int a = b == e1h ? e1t : e1h;
        int c = on_path(e2h) ? e2h : e2t;
        int dd = c == e2h ? e2t : e2h;

        Side A = q.has_arc(a, b) ? Side::src : Side::tgt;
        Side B = A == Side::src ? Side::tgt : Side::src;
        Side C = q.has_arc(c, dd) ? Side::src : Side::tgt;
        Side D = C == Side::src ? Side::tgt : Side::src;

        int tb = subtree_through(b, a);
        int tcc = subtree_through(c, dd);
        if (tb == -1 || tcc == -1)
            throw std::logic_error("tree construction: missing image subtree");

        Rule r5, r6, r7;
        for (int id : d.families[a]) {
            if (! d.subtrees[id].pendent)
                throw std::logic_error("tree construction: non-pendent tree at an outer image endpoint");
            r5.hyps.push_back(bit_atom(A, d.class_of[id]));
            r7.hyps.push_back(bit_atom(A, d.class_of[id]));
        }
        for (int id : d.families[dd]) {
            if (! d.subtrees[id].pendent)
                throw std::logic_error("tree construction: non-pendent tree at an outer image endpoint");
            r6.hyps.push_back(bit_atom(D, d.class_of[id]));
            r7.hyps.push_back(bit_atom(D, d.class_of[id]));
        }
        Operand tb_op = cm.class_as_set(B, d.class_of[tb]);
        Operand tc_op = cm.class_as_set(C, d.class_of[tcc]);
        r5.concl = {Atom::nonempty, tb_op, tb_op};
        r6.concl = {Atom::nonempty, tc_op, tc_op};
        r7.concl = {Atom::intersects, tb_op, tc_op};
        tc.arc_rules.push_back(std::move(r5));
        tc.arc_rules.push_back(std::move(r6));
        tc.arc_rules.push_back(std::move(r7));
    }

    return tc;
}

Digraph omega_tree(const PultrTemplate & t, const Digraph & h, const OmegaTreeOptions & options)
{
    auto d = build_subtree_decomposition(t, options.middle_override);
    return materialize(omega_tree_construction(d, h), options.construction);
}

} // namespace pultr
