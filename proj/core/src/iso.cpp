#include <pultr/iso.hpp>

#include <algorithm>
#include <array>
#include <sstream>
#include <tuple>

namespace pultr {

namespace {

using Profile = std::tuple<int, int, bool>; // (outdeg, indeg, loop)

std::vector<Profile> profiles(const Digraph & g)
{
    std::vector<Profile> p(g.n(), {0, 0, false});
    for (auto & [u, v] : g.arcs()) {
        ++std::get<0>(p[u]);
        ++std::get<1>(p[v]);
        if (u == v)
            std::get<2>(p[u]) = true;
    }
    return p;
}

bool extend(const Digraph & g, const Digraph & h, const std::vector<Profile> & pg,
    const std::vector<Profile> & ph, std::vector<int> & map, std::vector<bool> & used, int v)
{
    if (v == g.n())
        return true;
    for (int w = 0; w < h.n(); ++w) {
        if (used[w] || pg[v] != ph[w])
            continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            if (g.has_arc(u, v) != h.has_arc(map[u], w))
                ok = false;
            if (ok && g.has_arc(v, u) != h.has_arc(w, map[u]))
                ok = false;
        }
        if (ok && g.has_arc(v, v) != h.has_arc(w, w))
            ok = false;
        if (! ok)
            continue;
        map[v] = w;
        used[w] = true;
        if (extend(g, h, pg, ph, map, used, v + 1))
            return true;
        used[w] = false;
    }
    return false;
}

} // namespace

bool isomorphic(const Digraph & g, const Digraph & h)
{
    if (g.n() != h.n() || g.arc_count() != h.arc_count())
        return false;
    auto pg = profiles(g), ph = profiles(h);
    auto sg = pg, sh = ph;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh)
        return false;
    std::vector<int> map(g.n(), -1);
    std::vector<bool> used(h.n(), false);
    return extend(g, h, pg, ph, map, used, 0);
}

namespace {

void canonical_search(const Digraph & g, std::vector<int> & perm, std::vector<bool> & used,
    int v, std::string & current, std::string & best)
{
    if (v == g.n()) {
        if (best.empty() || current < best)
            best = current;
        return;
    }
    for (int w = 0; w < g.n(); ++w) {
        if (used[w])
            continue;
        // Append the adjacency bits of the new vertex against the prefix.
        size_t mark = current.size();
        for (int u = 0; u <= v; ++u) {
            int pu = (u == v) ? w : perm[u];
            current += g.has_arc(pu, w) ? '1' : '0';
            current += g.has_arc(w, pu) ? '1' : '0';
        }
        if (! best.empty() && current.compare(0, current.size(), best, 0, current.size()) > 0) {
            current.resize(mark);
            continue;
        }
        perm[v] = w;
        used[w] = true;
        canonical_search(g, perm, used, v + 1, current, best);
        used[w] = false;
        current.resize(mark);
    }
}

} // namespace

std::string canonical_string(const Digraph & g, int max_n)
{
    if (g.n() > max_n)
        throw resource_error("canonical_string: graph too large (" + std::to_string(g.n()) + " vertices, cap " + std::to_string(max_n) + ")");
    std::string best, current;
    std::vector<int> perm(g.n(), -1);
    std::vector<bool> used(g.n(), false);
    canonical_search(g, perm, used, 0, current, best);
    std::ostringstream out;
    out << g.n() << ":" << best;
    return out.str();
}

} // namespace pultr
