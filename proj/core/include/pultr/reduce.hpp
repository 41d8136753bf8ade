#ifndef PULTR_REDUCE_HPP
#define PULTR_REDUCE_HPP

#include <pultr/digraph.hpp>

#include <vector>

namespace pultr {

struct FoldResult {
    Digraph graph;
    std::vector<int> kept; // original indices of surviving vertices
    std::vector<int> map;  // original vertex -> surviving original vertex
};

/// Folds away vertices whose in- and out-neighbourhoods are dominated by
/// another vertex. The result is an induced subgraph hom-equivalent to g;
/// map composes the folds into a retraction witness.
FoldResult fold_retract(const Digraph & g, int max_vertices = 20000);

/// fold_retract followed by greedy single-vertex deletions; the result is a
/// core of g (minimum hom-equivalent induced subgraph), though not the
/// lexicographically canonical one that core() returns.
Digraph fold_core(const Digraph & g, int max_vertices = 20000);

} // namespace pultr

#endif
