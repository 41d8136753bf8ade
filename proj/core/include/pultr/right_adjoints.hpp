#ifndef PULTR_RIGHT_ADJOINTS_HPP
#define PULTR_RIGHT_ADJOINTS_HPP

#include <pultr/digraph.hpp>
#include <pultr/pultr_template.hpp>
#include <pultr/tuple_construction.hpp>

namespace pultr {

// Builders expose the underlying tuple constructions so callers can choose
// between the full materialization and a folded hom-equivalent retract.

/// Right adjoint of the arc graph functor: pairs (R-, R+) with R- =>> R+,
/// arcs where R+ meets S-.
TupleConstruction delta_r_construction(const Digraph & h);
Digraph delta_r(const Digraph & h, const ConstructionOptions & options = {});

/// Right adjoint for the four-vertex path template: pairs (a, A), arcs
/// (a,A) -> (b,B) when b lies in A and A =>> B.
TupleConstruction omega_path_construction(const Digraph & h);
Digraph omega_path(const Digraph & h, const ConstructionOptions & options = {});

/// Triple variant of the same adjoint: (a, A1, A2) with A1 =>> A2, arcs when
/// b is in A1 and B1 is contained in A2.
TupleConstruction omega_path_triple_construction(const Digraph & h);
Digraph omega_path_triple(const Digraph & h, const ConstructionOptions & options = {});

/// Right adjoint for an arbitrary endpoint path template: Q an oriented path
/// with m arcs, P a point mapped to the two endpoints.
TupleConstruction omega_rpath_construction(const PultrTemplate & t, const Digraph & h);
Digraph omega_rpath(const PultrTemplate & t, const Digraph & h, const ConstructionOptions & options = {});

/// Doubly exponential adjoint for the glued-paths template (P the 2-arc path,
/// Q two such paths glued head-to-head): quadruples of subset families. Both
/// intersection shapes occur here: the arcs ask whether two families share a
/// member, while the vertex condition asks that every member of one family
/// meet every member of the other.
TupleConstruction omega_glued_paths_construction(const Digraph & h);
Digraph omega_glued_paths(const Digraph & h, const ConstructionOptions & options = {});

/// The worked 11-vertex tree-template adjoint with its eight subset
/// coordinates, transcribed literally.
TupleConstruction omega_example_tree_construction(const Digraph & h);
Digraph omega_example_tree(const Digraph & h, const ConstructionOptions & options = {});

} // namespace pultr

#endif
