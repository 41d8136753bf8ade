#ifndef PULTR_AUDIT_HPP
#define PULTR_AUDIT_HPP

#include <pultr/digraph.hpp>
#include <pultr/pultr_template.hpp>
#include <pultr/tuple_construction.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pultr {

/// All labeled digraphs on exactly n vertices (2^(n^2) of them).
std::vector<Digraph> all_digraphs(int n);

/// Concatenation of all_digraphs(0..n).
std::vector<Digraph> all_digraphs_up_to(int n);

enum class OmegaKind {
    delta_r,
    path,
    path_triple,
    rpath,
    glued_paths,
    example_tree,
    tree,
};

const char * omega_kind_name(OmegaKind kind);
std::optional<OmegaKind> omega_kind_from_name(const std::string & name);

struct OmegaRequest {
    OmegaKind kind;
    PultrTemplate t; // consulted by the rpath and tree constructions
    std::optional<int> middle_override;
    unsigned long long candidate_cap = 1ull << 21;
};

/// The construction behind a request, for a given ground digraph.
TupleConstruction omega_construction(const OmegaRequest & request, const Digraph & h);

/// Folded hom-equivalent form, sized for repeated hom queries.
Digraph omega_folded(const OmegaRequest & request, const Digraph & h);

struct Violation {
    Digraph g, h;
    bool lhs = false, rhs = false;
};

struct AdjunctionReport {
    std::string description;
    long long pairs_checked = 0;
    std::vector<long long> g_universe_sizes, h_universe_sizes; // per vertex count
    std::vector<Violation> violations;                         // capped
    bool sampled = false;
    unsigned seed = 0;
    bool pass() const { return violations.empty(); }
    std::string render() const;
};

/// hom(Lambda_T(G), H) <=> hom(G, Gamma_T(H)) over the full labeled universe.
AdjunctionReport audit_lambda_gamma(const PultrTemplate & t, int g_max, int h_max, int jobs = 1);

/// hom(Gamma_T(G), H) <=> hom(G, Omega(H)) over the full labeled universe,
/// with Omega queried through its folded form.
AdjunctionReport audit_gamma_omega(const OmegaRequest & request, int g_max, int h_max, int jobs = 1);

/// Sampled variant for universes too big to sweep: checks the biconditional
/// on `samples` seeded random pairs instead.
AdjunctionReport audit_gamma_omega_sampled(const OmegaRequest & request, int g_max, int h_max,
    int samples, unsigned seed);

struct EquivalenceReport {
    std::string description;
    long long graphs_checked = 0;
    std::vector<Digraph> failures; // ground digraphs where the two differ
    bool pass() const { return failures.empty(); }
    std::string render() const;
};

/// Mutual homomorphisms between two adjoint constructions for every labeled
/// ground digraph with at most h_max vertices.
EquivalenceReport audit_omega_equivalence(const OmegaRequest & a, const OmegaRequest & b, int h_max);

int run_parallel(int jobs, int tasks, const std::function<void(int)> & task);

} // namespace pultr

#endif
