#ifndef PULTR_FUNCTORS_HPP
#define PULTR_FUNCTORS_HPP

#include <pultr/digraph.hpp>
#include <pultr/pultr_template.hpp>

#include <vector>

namespace pultr {

struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Result of the left functor: the glued digraph plus the projection from
/// copy slots to result vertices (needed to build induced maps).
struct LambdaResult {
    Digraph graph;
    int p_size = 0;
    int q_size = 0;
    int g_n = 0;
    std::vector<Arc> g_arcs;     // arcs of the argument, in canonical order
    std::vector<int> slot_class; // slot -> result vertex

    int p_slot(int u, int p) const { return u * p_size + p; }
    int q_slot(int arc_index, int q) const { return g_n * p_size + arc_index * q_size + q; }

    int p_vertex(int u, int p) const { return slot_class[p_slot(u, p)]; }
    int q_vertex(int arc_index, int q) const { return slot_class[q_slot(arc_index, q)]; }
};

/// One P-copy per vertex of g, one Q-copy per arc, glued along the eps
/// images vertex-wise.
LambdaResult lambda_apply(const PultrTemplate & t, const Digraph & g);

/// Vertices are the homomorphisms P -> h in canonical order; arcs are the
/// pairs extendable to a Q -> h homomorphism through eps1/eps2.
Digraph gamma_apply(const PultrTemplate & t, const Digraph & h);

struct CompositionResult {
    PultrTemplate composed;
    int certified_graphs = 0; // size of the universe the certificate swept
};

/// Template U with Gamma_U hom-equivalent to Gamma_outer after Gamma_inner.
/// The induced eps maps are certified empirically on all digraphs with at
/// most certify_up_to_n vertices; a failed certificate throws.
CompositionResult compose_templates(const PultrTemplate & outer, const PultrTemplate & inner,
    int certify_up_to_n = 3);

} // namespace pultr

#endif
