#include <pultr/hom.hpp>

#include <algorithm>
#include <cstdint>

namespace pultr {

bool is_arc_preserving(const Digraph & source, const Digraph & target, const std::vector<int> & map)
{
    if (static_cast<int>(map.size()) != source.n())
        return false;
    for (int image : map)
        if (image < 0 || image >= target.n())
            return false;
    for (auto & [u, v] : source.arcs())
        if (! target.has_arc(map[u], map[v]))
            return false;
    return true;
}

bool Homomorphism::valid() const
{
    return is_arc_preserving(source, target, map);
}

namespace {

struct Bitset {
    std::vector<std::uint64_t> words;

    explicit Bitset(int bits = 0, bool full = false)
        : words((bits + 63) / 64, full ? ~0ull : 0ull)
    {
        if (full && bits % 64 != 0 && ! words.empty())
            words.back() = (1ull << (bits % 64)) - 1;
    }

    void set(int i) { words[i / 64] |= 1ull << (i % 64); }
    bool test(int i) const { return words[i / 64] >> (i % 64) & 1; }

    void intersect(const Bitset & other)
    {
        for (size_t w = 0; w < words.size(); ++w)
            words[w] &= other.words[w];
    }

    bool empty() const
    {
        for (auto w : words)
            if (w)
                return false;
        return true;
    }

    int count() const
    {
        int c = 0;
        for (auto w : words)
            c += __builtin_popcountll(w);
        return c;
    }

    int first() const
    {
        for (size_t w = 0; w < words.size(); ++w)
            if (words[w])
                return static_cast<int>(w * 64 + __builtin_ctzll(words[w]));
        return -1;
    }

    int next(int after) const
    {
        for (int i = after + 1; i < static_cast<int>(words.size()) * 64; ) {
            std::uint64_t w = words[i / 64] >> (i % 64);
            if (w)
                return i + __builtin_ctzll(w);
            i = (i / 64 + 1) * 64;
        }
        return -1;
    }
};

struct Searcher {
    const Digraph & g;
    const Digraph & h;
    std::vector<std::vector<int>> g_out, g_in;
    std::vector<Bitset> h_out, h_in; // adjacency rows of the target
    Bitset h_loops;

    std::vector<int> assignment;
    std::vector<Bitset> domains;
    bool enumerate_all = false;
    std::vector<std::vector<int>> solutions;
    bool found = false;
    std::vector<int> witness;

    Searcher(const Digraph & g_, const Digraph & h_)
        : g(g_), h(h_), g_out(g_.out_neighbours()), g_in(g_.in_neighbours()),
          h_loops(h_.n())
    {
        h_out.assign(h.n(), Bitset(h.n()));
        h_in.assign(h.n(), Bitset(h.n()));
        for (auto & [u, v] : h.arcs()) {
            h_out[u].set(v);
            h_in[v].set(u);
            if (u == v)
                h_loops.set(u);
        }
        assignment.assign(g.n(), -1);
        domains.assign(g.n(), Bitset(h.n(), true));
        for (int v = 0; v < g.n(); ++v)
            if (g.has_arc(v, v))
                domains[v].intersect(h_loops);
    }

    bool apply_pins(const PinSet & pins)
    {
        for (auto & [u, w] : pins) {
            if (u < 0 || u >= g.n())
                throw precondition_error("pin source vertex out of range");
            if (w < 0 || w >= h.n())
                throw precondition_error("pin target vertex out of range");
            Bitset single(h.n());
            single.set(w);
            domains[u].intersect(single);
            if (domains[u].empty())
                return false; // conflicting or unsatisfiable pin
        }
        return true;
    }

    bool bind(int x, int y, std::vector<std::pair<int, Bitset>> & trail, std::vector<int> & queue)
    {
        trail.emplace_back(~x, Bitset());
        assignment[x] = y;
        for (int u : g_out[x]) {
            if (u == x)
                continue;
            if (assignment[u] != -1) {
                if (! h_out[y].test(assignment[u]))
                    return false;
                continue;
            }
            trail.emplace_back(u, domains[u]);
            domains[u].intersect(h_out[y]);
            if (domains[u].empty())
                return false;
            if (domains[u].count() == 1)
                queue.push_back(u);
        }
        for (int u : g_in[x]) {
            if (u == x)
                continue;
            if (assignment[u] != -1) {
                if (! h_in[y].test(assignment[u]))
                    return false;
                continue;
            }
            trail.emplace_back(u, domains[u]);
            domains[u].intersect(h_in[y]);
            if (domains[u].empty())
                return false;
            if (domains[u].count() == 1)
                queue.push_back(u);
        }
        return true;
    }

    // Assign v -> w, shrink neighbour domains, and propagate forced
    // singletons. Domains are re-read when a queued vertex is popped, since
    // they may have shrunk further in the meantime.
    bool assign(int v, int w, std::vector<std::pair<int, Bitset>> & trail)
    {
        std::vector<int> queue;
        if (! bind(v, w, trail, queue))
            return false;
        while (! queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            if (assignment[x] != -1)
                continue;
            if (domains[x].empty())
                return false;
            if (domains[x].count() != 1)
                continue;
            if (! bind(x, domains[x].first(), trail, queue))
                return false;
        }
        return true;
    }

    void undo(std::vector<std::pair<int, Bitset>> & trail)
    {
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            if (it->first < 0)
                assignment[~it->first] = -1;
            else
                domains[it->first] = std::move(it->second);
        }
        trail.clear();
    }

    void search()
    {
        int v = -1;
        for (int i = 0; i < g.n(); ++i)
            if (assignment[i] == -1) {
                v = i;
                break;
            }
        if (v == -1) {
            if (enumerate_all) {
                solutions.push_back(assignment);
            }
            else {
                found = true;
                witness = assignment;
            }
            return;
        }
        for (int w = domains[v].first(); w != -1; w = domains[v].next(w)) {
            std::vector<std::pair<int, Bitset>> trail;
            if (assign(v, w, trail))
                search();
            undo(trail);
            if (found && ! enumerate_all)
                return;
        }
    }
};

} // namespace

std::optional<Homomorphism> hom_exists(const Digraph & g, const Digraph & h, const PinSet & pins)
{
    Searcher s(g, h);
    if (s.apply_pins(pins))
        s.search();
    if (! s.found)
        return std::nullopt;
    Homomorphism result{g, h, s.witness};
    if (! result.valid())
        throw std::logic_error("hom_exists produced an invalid witness");
    return result;
}

bool hom_exists_bool(const Digraph & g, const Digraph & h, const PinSet & pins)
{
    Searcher s(g, h);
    if (s.apply_pins(pins))
        s.search();
    return s.found;
}

std::vector<Homomorphism> enumerate_homs(const Digraph & g, const Digraph & h, const PinSet & pins)
{
    Searcher s(g, h);
    s.enumerate_all = true;
    if (s.apply_pins(pins))
        s.search();
    std::sort(s.solutions.begin(), s.solutions.end());
    std::vector<Homomorphism> result;
    result.reserve(s.solutions.size());
    for (auto & map : s.solutions) {
        Homomorphism hom{g, h, std::move(map)};
        if (! hom.valid())
            throw std::logic_error("enumerate_homs produced an invalid witness");
        result.push_back(std::move(hom));
    }
    return result;
}

bool rrightarrow(const Digraph & h, const std::vector<int> & xs, const std::vector<int> & ys)
{
    for (int x : xs)
        if (x < 0 || x >= h.n())
            throw precondition_error("rrightarrow: vertex out of range");
    for (int y : ys)
        if (y < 0 || y >= h.n())
            throw precondition_error("rrightarrow: vertex out of range");
    for (int x : xs)
        for (int y : ys)
            if (! h.has_arc(x, y))
                return false;
    return true;
}

bool hom_equivalent(const Digraph & g, const Digraph & h)
{
    return hom_exists_bool(g, h) && hom_exists_bool(h, g);
}

Digraph induced_subgraph(const Digraph & g, const std::vector<int> & keep)
{
    std::vector<int> index(g.n(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        index[keep[i]] = i;
    std::vector<Arc> arcs;
    for (auto & [u, v] : g.arcs())
        if (index[u] != -1 && index[v] != -1)
            arcs.emplace_back(index[u], index[v]);
    Digraph sub(static_cast<int>(keep.size()), std::move(arcs));
    if (g.labels) {
        std::vector<std::string> labels;
        labels.reserve(keep.size());
        for (int v : keep)
            labels.push_back((*g.labels)[v]);
        sub.labels = std::move(labels);
    }
    return sub;
}

namespace {

// Smallest k with a hom g -> g[S], |S| = k, found by greedy single-vertex
// deletion. Greedy suffices for the size: a graph with no removable vertex
// has no non-surjective endomorphism, hence is a core.
std::vector<int> greedy_core_vertices(const Digraph & g)
{
    std::vector<int> alive(g.n());
    for (int v = 0; v < g.n(); ++v)
        alive[v] = v;
    Digraph current = g;
    bool changed = true;
    while (changed && ! alive.empty()) {
        changed = false;
        for (size_t i = 0; i < alive.size(); ++i) {
            std::vector<int> keep;
            keep.reserve(alive.size() - 1);
            for (size_t j = 0; j < alive.size(); ++j)
                if (j != i)
                    keep.push_back(static_cast<int>(j));
            Digraph smaller = induced_subgraph(current, keep);
            if (hom_exists_bool(current, smaller)) {
                std::vector<int> next_alive;
                for (size_t j = 0; j < alive.size(); ++j)
                    if (j != i)
                        next_alive.push_back(alive[j]);
                alive = std::move(next_alive);
                current = std::move(smaller);
                changed = true;
                break;
            }
        }
    }
    return alive;
}

bool next_combination(std::vector<int> & comb, int n)
{
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - (k - i)) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

CoreResult core(const Digraph & g, const CoreOptions & options)
{
    if (g.n() > options.max_vertices)
        throw resource_error("core: graph has " + std::to_string(g.n()) + " vertices, cap is " + std::to_string(options.max_vertices));
    if (g.n() == 0)
        return {g, {}};

    int k = static_cast<int>(greedy_core_vertices(g).size());

    // Lexicographically least subset of the minimum size.
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i)
        comb[i] = i;
    do {
        Digraph candidate = induced_subgraph(g, comb);
        if (hom_exists_bool(g, candidate)) {
            if (! hom_exists_bool(candidate, g))
                throw std::logic_error("core: candidate not hom-equivalent to input");
            return {candidate, comb};
        }
    } while (next_combination(comb, g.n()));
    throw std::logic_error("core: no subset of the greedy size admits a retraction");
}

} // namespace pultr
