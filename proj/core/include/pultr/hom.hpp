#ifndef PULTR_HOM_HPP
#define PULTR_HOM_HPP

#include <pultr/digraph.hpp>

#include <optional>
#include <vector>

namespace pultr {

/// Arc-preserving vertex map between digraphs.
struct Homomorphism {
    Digraph source;
    Digraph target;
    std::vector<int> map;

    bool valid() const;
};

bool is_arc_preserving(const Digraph & source, const Digraph & target, const std::vector<int> & map);

/// Partial assignment V(source) -> V(target). Pinning a vertex twice to
/// different targets makes the pin set unsatisfiable (no extension exists).
using PinSet = std::vector<std::pair<int, int>>;

/// Lexicographically least homomorphism extending pins, if any.
std::optional<Homomorphism> hom_exists(const Digraph & g, const Digraph & h, const PinSet & pins = {});

bool hom_exists_bool(const Digraph & g, const Digraph & h, const PinSet & pins = {});

/// All homomorphisms extending pins, in lexicographic order of the map tuple.
std::vector<Homomorphism> enumerate_homs(const Digraph & g, const Digraph & h, const PinSet & pins = {});

/// X =>> Y: every x in X has an arc to every y in Y. Vacuously true when
/// either set is empty.
bool rrightarrow(const Digraph & h, const std::vector<int> & xs, const std::vector<int> & ys);

bool hom_equivalent(const Digraph & g, const Digraph & h);

struct CoreOptions {
    int max_vertices = 12;
};

struct CoreResult {
    Digraph graph;
    std::vector<int> vertices; // lexicographically least subset of minimum size
};

/// Minimum induced subgraph K with g -> K and K -> g, as the lexicographically
/// least vertex subset of that size. Exhaustive; guarded by max_vertices.
CoreResult core(const Digraph & g, const CoreOptions & options = {});

struct TreeEquivOptions {
    int max_vertices = 256;
};

/// True iff g is homomorphically equivalent to an oriented tree, i.e. iff the
/// core of g is a tree. Decided on a folded retract, so it scales past the
/// exhaustive core() guard.
bool equiv_to_tree(const Digraph & g, const TreeEquivOptions & options = {});

Digraph induced_subgraph(const Digraph & g, const std::vector<int> & keep);

} // namespace pultr

#endif
