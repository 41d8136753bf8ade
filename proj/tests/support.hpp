#ifndef PULTR_TESTS_SUPPORT_HPP
#define PULTR_TESTS_SUPPORT_HPP

#include <pultr/digraph.hpp>

#include <random>
#include <vector>

namespace pultr::testing {

// Independent homomorphism oracle: tries every one of |V(h)|^|V(g)| maps.
// Deliberately kept apart from the search-based engine it checks.
inline bool naive_hom_exists(const Digraph & g, const Digraph & h)
{
    int n = g.n(), m = h.n();
    if (n == 0)
        return true;
    if (m == 0)
        return false;
    std::vector<int> map(n, 0);
    while (true) {
        bool ok = true;
        for (auto & [u, v] : g.arcs())
            if (! h.has_arc(map[u], map[v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        int i = n - 1;
        while (i >= 0 && map[i] == m - 1)
            map[i--] = 0;
        if (i < 0)
            return false;
        ++map[i];
    }
}

inline long long naive_hom_count(const Digraph & g, const Digraph & h)
{
    int n = g.n(), m = h.n();
    if (n == 0)
        return 1;
    if (m == 0)
        return 0;
    long long count = 0;
    std::vector<int> map(n, 0);
    while (true) {
        bool ok = true;
        for (auto & [u, v] : g.arcs())
            if (! h.has_arc(map[u], map[v])) {
                ok = false;
                break;
            }
        if (ok)
            ++count;
        int i = n - 1;
        while (i >= 0 && map[i] == m - 1)
            map[i--] = 0;
        if (i < 0)
            return count;
        ++map[i];
    }
}

inline Digraph random_digraph(std::mt19937 & rng, int max_n, double arc_probability = 0.3)
{
    std::uniform_int_distribution<int> size(0, max_n);
    std::bernoulli_distribution arc(arc_probability);
    int n = size(rng);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (arc(rng))
                arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

} // namespace pultr::testing

#endif
