#ifndef PULTR_DUALITY_HPP
#define PULTR_DUALITY_HPP

#include <pultr/digraph.hpp>
#include <pultr/pultr_template.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pultr {

struct DualityCandidate {
    std::vector<Digraph> obstructions;
    Digraph target;
};

struct DualityVerdict {
    bool holds = false;
    long long graphs_checked = 0;
    std::optional<Digraph> witness;
    // For a failing witness G: "no-obstruction-but-no-hom" when every
    // obstruction avoids G yet G does not map to the target, otherwise
    // "hom-despite-obstruction".
    std::string broken_direction;

    std::string render() const;
};

/// Tests G -> H  <=>  no F in the obstruction set maps to G, over every
/// labeled digraph G with at most n_max vertices.
DualityVerdict verify_duality(const DualityCandidate & c, int n_max, int n_max_cap = 4);

struct TransferVerdict {
    bool holds = false;
    std::string stage; // "candidate-equation" or "transferred-duality"
    DualityVerdict duality;
    long long equation_checked = 0;
    std::optional<Digraph> equation_witness;

    std::string render() const;
};

/// Obstruction transfer, checked empirically: K must
/// satisfy Gamma_T(G) -> H <=> G -> K on the swept universe, and then
/// {Lambda_T(F)} is a complete obstruction set for K.
TransferVerdict transfer_obstructions(const PultrTemplate & t, const DualityCandidate & c,
    const Digraph & k, int n_max, int n_max_cap = 4);

struct NecessaryReport {
    bool p_equiv_tree = false;
    bool q_equiv_tree = false;
    long long trees_checked = 0;
    std::vector<Digraph> failing_trees;
    bool verdict = false;

    std::string render() const;
};

/// Necessary conditions for a right adjoint: P and Q hom-equivalent to trees
/// and Lambda_T of every small tree hom-equivalent to a tree. A failure
/// witnesses that no right adjoint exists.
NecessaryReport check_necessary_conditions(const PultrTemplate & t, int tree_budget = 6,
    int tree_budget_cap = 8);

/// All oriented trees on exactly n vertices, up to isomorphism, in a
/// deterministic order.
std::vector<Digraph> enumerate_oriented_trees(int n);

} // namespace pultr

#endif
