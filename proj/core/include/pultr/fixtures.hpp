#ifndef PULTR_FIXTURES_HPP
#define PULTR_FIXTURES_HPP

#include <pultr/digraph.hpp>
#include <pultr/pultr_template.hpp>

#include <string>
#include <vector>

namespace pultr {
namespace fixtures {

/// Arc graph template: P the single arc, Q the two-arc path, eps mapping P
/// to the first and second arc.
PultrTemplate arc_template();

/// The four-arc template on {0,1,2,3} whose central functor extends the arc
/// graph but has no right adjoint.
PultrTemplate c4_template();

/// Path template: P a point, Q = 0 <- 1 -> 2 -> 3, eps to the endpoints.
PultrTemplate path_template();

/// Endpoint path template with Q the single arc; the smallest instance of
/// the general path construction.
PultrTemplate single_arc_path_template();

/// Glued paths: P the 2-arc path, Q two such paths glued head-to-head.
PultrTemplate glued_paths_template();

/// The 11-vertex tree template with the eight-coordinate worked adjoint.
PultrTemplate example_tree_template();

/// The two composed templates: the arc template after the path template
/// and the other way round.
PultrTemplate arc_after_path_template();
PultrTemplate path_after_arc_template();

/// The six-vertex tree witnessing that the c4 template has no right adjoint.
Digraph c4_witness_tree();

/// The five-vertex tree that is the Q of the path-after-arc composition.
Digraph path_after_arc_expected_q();

std::vector<std::pair<std::string, PultrTemplate>> all_templates();

} // namespace fixtures
} // namespace pultr

#endif
