#ifndef PULTR_SUBTREE_HPP
#define PULTR_SUBTREE_HPP

#include <pultr/digraph.hpp>
#include <pultr/pultr_template.hpp>
#include <pultr/tuple_construction.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pultr {

/// A subtree of Q rooted at a cut vertex, spanning the root and one
/// component of Q minus the root.
struct RootedSubtree {
    std::vector<int> vertices; // sorted, includes the root
    int root = -1;
    bool pendent = true;
    int eps_index = 0;   // 1 or 2 when the subtree carries an eps image
    int p_vertex = -1;   // P a point: the image vertex (never the root)
    Arc p_arc{-1, -1};   // P an arc: the image arc
};

struct SubtreeDecomposition {
    PultrTemplate t;
    bool p_is_point = false;

    std::vector<int> tilde_q; // connecting path, eps1 side first
    int middle = -1;

    std::vector<RootedSubtree> subtrees;     // concrete subtrees, all roots
    std::vector<std::vector<int>> families;  // Q vertex -> subtree ids rooted there
    std::vector<int> class_of;               // subtree id -> coordinate class
    std::vector<int> class_example;          // class -> representative subtree id
    std::vector<bool> class_pendent;

    // Distinguished classes at the middle vertex; -1 with the degenerate
    // flag set means the coordinate collapses to the bullet singleton.
    int tm1_class = -1, tm2_class = -1;
    bool tm1_degenerate = false, tm2_degenerate = false;

    std::string describe() const;
};

/// Decomposes Q around the connecting path and a middle vertex. Preconditions:
/// P is a point or a single arc, Q an oriented tree, eps1 != eps2. The default
/// middle vertex sits at floor(L/2) along the path from the eps1 side.
SubtreeDecomposition build_subtree_decomposition(const PultrTemplate & t,
    std::optional<int> middle_override = std::nullopt);

/// The tree-template right adjoint assembled from a decomposition.
TupleConstruction omega_tree_construction(const SubtreeDecomposition & d, const Digraph & h);

struct OmegaTreeOptions {
    std::optional<int> middle_override;
    ConstructionOptions construction;
};

Digraph omega_tree(const PultrTemplate & t, const Digraph & h, const OmegaTreeOptions & options = {});

} // namespace pultr

#endif
