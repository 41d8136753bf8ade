#ifndef PULTR_ISO_HPP
#define PULTR_ISO_HPP

#include <pultr/digraph.hpp>

#include <string>

namespace pultr {

/// Brute-force digraph isomorphism with degree-profile pruning.
/// Intended for small graphs (a dozen vertices or so).
bool isomorphic(const Digraph & g, const Digraph & h);

/// Canonical arc-set encoding, equal for isomorphic digraphs. Exponential;
/// guarded by max_n.
std::string canonical_string(const Digraph & g, int max_n = 10);

} // namespace pultr

#endif
