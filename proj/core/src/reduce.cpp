#include <pultr/reduce.hpp>
#include <pultr/hom.hpp>

#include <cstdint>

namespace pultr {

namespace {

struct Rows {
    int n;
    int words;
    std::vector<std::uint64_t> out, in, alive;

    explicit Rows(const Digraph & g)
        : n(g.n()), words((g.n() + 63) / 64),
          out(static_cast<size_t>(n) * words, 0), in(static_cast<size_t>(n) * words, 0),
          alive(words, 0)
    {
        for (int v = 0; v < n; ++v)
            alive[v / 64] |= 1ull << (v % 64);
        for (auto & [u, v] : g.arcs()) {
            out[static_cast<size_t>(u) * words + v / 64] |= 1ull << (v % 64);
            in[static_cast<size_t>(v) * words + u / 64] |= 1ull << (u % 64);
        }
    }

    const std::uint64_t * row(const std::vector<std::uint64_t> & m, int v) const
    {
        return m.data() + static_cast<size_t>(v) * words;
    }

    bool loop(int v) const { return row(out, v)[v / 64] >> (v % 64) & 1; }

    void kill(int v) { alive[v / 64] &= ~(1ull << (v % 64)); }
    bool is_alive(int v) const { return alive[v / 64] >> (v % 64) & 1; }

    // (row_u minus {u}) restricted to alive vertices is contained in row_w.
    bool dominated_row(const std::vector<std::uint64_t> & m, int u, int w) const
    {
        const std::uint64_t * ru = row(m, u);
        const std::uint64_t * rw = row(m, w);
        for (int k = 0; k < words; ++k) {
            std::uint64_t bits = ru[k] & alive[k] & ~rw[k];
            if (k == u / 64)
                bits &= ~(1ull << (u % 64));
            if (bits)
                return false;
        }
        return true;
    }
};

} // namespace

FoldResult fold_retract(const Digraph & g, int max_vertices)
{
    if (g.n() > max_vertices)
        throw resource_error("fold_retract: graph has " + std::to_string(g.n()) + " vertices, cap is " + std::to_string(max_vertices));

    Rows rows(g);
    std::vector<int> map(g.n());
    for (int v = 0; v < g.n(); ++v)
        map[v] = v;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < g.n(); ++u) {
            if (! rows.is_alive(u))
                continue;
            for (int w = 0; w < g.n(); ++w) {
                if (w == u || ! rows.is_alive(w))
                    continue;
                if (rows.loop(u) && ! rows.loop(w))
                    continue;
                if (! rows.dominated_row(rows.out, u, w) || ! rows.dominated_row(rows.in, u, w))
                    continue;
                rows.kill(u);
                map[u] = w;
                changed = true;
                break;
            }
        }
    }

    FoldResult result;
    for (int v = 0; v < g.n(); ++v)
        if (rows.is_alive(v))
            result.kept.push_back(v);

    // Resolve fold chains.
    for (int v = 0; v < g.n(); ++v) {
        int w = v;
        while (map[w] != w)
            w = map[w];
        map[v] = w;
    }
    result.map = std::move(map);
    result.graph = induced_subgraph(g, result.kept);
    return result;
}

Digraph fold_core(const Digraph & g, int max_vertices)
{
    Digraph current = fold_retract(g, max_vertices).graph;
    bool changed = true;
    while (changed && current.n() > 1) {
        changed = false;
        for (int v = 0; v < current.n(); ++v) {
            std::vector<int> keep;
            keep.reserve(current.n() - 1);
            for (int u = 0; u < current.n(); ++u)
                if (u != v)
                    keep.push_back(u);
            Digraph smaller = induced_subgraph(current, keep);
            if (hom_exists_bool(current, smaller)) {
                current = std::move(smaller);
                changed = true;
                break;
            }
        }
    }
    return current;
}

bool equiv_to_tree(const Digraph & g, const TreeEquivOptions & options)
{
    if (g.n() > options.max_vertices)
        throw resource_error("equiv_to_tree: graph has " + std::to_string(g.n()) + " vertices, cap is " + std::to_string(options.max_vertices));
    if (g.n() == 0)
        return false;
    return is_oriented_tree(fold_core(g));
}

} // namespace pultr
