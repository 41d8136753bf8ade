#include <pultr/functors.hpp>
#include <pultr/hom.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pultr {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void merge(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

LambdaResult lambda_apply(const PultrTemplate & t, const Digraph & g)
{
    require_valid(t);

    LambdaResult result;
    result.p_size = t.p.n();
    result.q_size = t.q.n();
    result.g_n = g.n();
    result.g_arcs = g.arcs();

    int slots = g.n() * t.p.n() + g.arc_count() * t.q.n();
    UnionFind uf(slots);

    for (int a = 0; a < g.arc_count(); ++a) {
        auto [u, v] = result.g_arcs[a];
        for (int p = 0; p < t.p.n(); ++p) {
            uf.merge(result.q_slot(a, t.eps1[p]), result.p_slot(u, p));
            uf.merge(result.q_slot(a, t.eps2[p]), result.p_slot(v, p));
        }
    }

    // Number classes by least slot.
    std::vector<int> class_id(slots, -1);
    int classes = 0;
    for (int s = 0; s < slots; ++s)
        if (uf.find(s) == s)
            class_id[s] = classes++;
    result.slot_class.resize(slots);
    for (int s = 0; s < slots; ++s)
        result.slot_class[s] = class_id[uf.find(s)];

    std::vector<Arc> arcs;
    for (int u = 0; u < g.n(); ++u)
        for (auto & [x, y] : t.p.arcs())
            arcs.emplace_back(result.p_vertex(u, x), result.p_vertex(u, y));
    for (int a = 0; a < g.arc_count(); ++a)
        for (auto & [x, y] : t.q.arcs())
            arcs.emplace_back(result.q_vertex(a, x), result.q_vertex(a, y));

    result.graph = Digraph(classes, std::move(arcs));

    std::vector<std::string> labels(classes);
    for (int u = 0; u < g.n(); ++u)
        for (int p = 0; p < t.p.n(); ++p) {
            auto & label = labels[result.p_vertex(u, p)];
            if (! label.empty())
                label += "=";
            label += "P" + std::to_string(u) + "." + std::to_string(p);
        }
    for (int a = 0; a < g.arc_count(); ++a)
        for (int q = 0; q < t.q.n(); ++q) {
            // Classes holding a P-slot keep their P names; interior Q slots
            // get Q names.
            auto & label = labels[result.q_vertex(a, q)];
            if (label.empty())
                label = "Q" + std::to_string(a) + "." + std::to_string(q);
            else if (label[0] == 'Q')
                label += "=Q" + std::to_string(a) + "." + std::to_string(q);
        }
    result.graph.labels = std::move(labels);
    return result;
}

namespace {

std::string render_map(const std::vector<int> & map)
{
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < map.size(); ++i) {
        if (i)
            out << ",";
        out << map[i];
    }
    out << ")";
    return out.str();
}

} // namespace

Digraph gamma_apply(const PultrTemplate & t, const Digraph & h)
{
    require_valid(t);

    auto homs = enumerate_homs(t.p, h);
    int n = static_cast<int>(homs.size());

    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PinSet pins;
            pins.reserve(2 * t.p.n());
            for (int p = 0; p < t.p.n(); ++p) {
                pins.emplace_back(t.eps1[p], homs[i].map[p]);
                pins.emplace_back(t.eps2[p], homs[j].map[p]);
            }
            if (hom_exists_bool(t.q, h, pins))
                arcs.emplace_back(i, j);
        }

    Digraph result(n, std::move(arcs));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto & hom : homs)
        labels.push_back(render_map(hom.map));
    result.labels = std::move(labels);
    return result;
}

CompositionResult compose_templates(const PultrTemplate & outer, const PultrTemplate & inner,
    int certify_up_to_n)
{
    require_valid(outer);
    require_valid(inner);

    LambdaResult lam_p = lambda_apply(inner, outer.p);
    LambdaResult lam_q = lambda_apply(inner, outer.q);

    auto arc_index = [&](int u, int v) {
        auto it = std::lower_bound(lam_q.g_arcs.begin(), lam_q.g_arcs.end(), Arc{u, v});
        if (it == lam_q.g_arcs.end() || *it != Arc{u, v})
            throw construction_error("compose: eps image of an arc is not an arc of Q");
        return static_cast<int>(it - lam_q.g_arcs.begin());
    };

    auto induced = [&](const std::vector<int> & eps) {
        std::vector<int> map(lam_p.graph.n(), -1);
        auto record = [&](int from, int to) {
            if (map[from] == -1)
                map[from] = to;
            else if (map[from] != to)
                throw construction_error("compose: induced eps map is inconsistent across identified copies");
        };
        for (int u = 0; u < lam_p.g_n; ++u)
            for (int p = 0; p < lam_p.p_size; ++p)
                record(lam_p.p_vertex(u, p), lam_q.p_vertex(eps[u], p));
        for (int a = 0; a < static_cast<int>(lam_p.g_arcs.size()); ++a) {
            auto [u, v] = lam_p.g_arcs[a];
            int target = arc_index(eps[u], eps[v]);
            for (int q = 0; q < lam_p.q_size; ++q)
                record(lam_p.q_vertex(a, q), lam_q.q_vertex(target, q));
        }
        for (int v = 0; v < lam_p.graph.n(); ++v)
            if (map[v] == -1)
                throw construction_error("compose: induced eps map left a vertex unmapped");
        return map;
    };

    PultrTemplate composed;
    composed.p = lam_p.graph;
    composed.q = lam_q.graph;
    composed.p.labels.reset();
    composed.q.labels.reset();
    composed.eps1 = induced(outer.eps1);
    composed.eps2 = induced(outer.eps2);

    if (! is_arc_preserving(composed.p, composed.q, composed.eps1) ||
        ! is_arc_preserving(composed.p, composed.q, composed.eps2))
        throw construction_error("compose: induced eps map is not a homomorphism");

    CompositionResult result{std::move(composed), 0};

    // Empirical certificate: Gamma_composed agrees with the functor
    // composition up to hom-equivalence on every small digraph.
    for (int n = 0; n <= certify_up_to_n; ++n) {
        long long masks = 1ll << (n * n);
        for (long long mask = 0; mask < masks; ++mask) {
            std::vector<Arc> arcs;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (mask >> (u * n + v) & 1)
                        arcs.emplace_back(u, v);
            Digraph g(n, std::move(arcs));
            Digraph lhs = gamma_apply(result.composed, g);
            Digraph rhs = gamma_apply(outer, gamma_apply(inner, g));
            if (! hom_equivalent(lhs, rhs))
                throw construction_error("compose: certificate failed on a digraph with " + std::to_string(n) + " vertices");
            ++result.certified_graphs;
        }
    }
    return result;
}

} // namespace pultr
