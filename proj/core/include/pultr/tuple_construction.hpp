#ifndef PULTR_TUPLE_CONSTRUCTION_HPP
#define PULTR_TUPLE_CONSTRUCTION_HPP

#include <pultr/digraph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pultr {

// The right-adjoint constructions all share one shape: a vertex is a tuple
// of coordinates (a vertex of H, a bit, a vertex subset, or a family of
// subsets) subject to per-vertex conditions, and an arc R -> S is a
// conjunction of conditions, each reading one coordinate of R and one of S.
// This engine enumerates, materializes, and folds such constructions.

enum class CoordType { bullet, bit, vset, family };

struct Coord {
    CoordType type;
    std::string name;
};

enum class Side { src, tgt };

struct Operand {
    enum Kind {
        vset,           // subset coordinate as a vertex mask
        bullet_as_set,  // singleton {bullet}
        bullet,         // bullet as a vertex id
        family,         // family coordinate as a mask over subsets
        family_union,   // union of the family's members, as a vertex mask
    } kind;
    Side side;
    int coord;
};

struct Atom {
    enum Pred {
        rr,                 // a =>> b (vertex-set operands)
        member,             // bullet operand a lies in set operand b
        subset,             // set a is contained in set b
        intersects,         // raw masks a and b share a bit
        allpairs_intersect, // families a, b: every member of a meets every member of b
        nonempty,           // operand a is a nonzero mask
        bit_set,            // bit coordinate a equals 1
    } pred;
    Operand a;
    Operand b; // ignored for nonempty / bit_set
};

struct Rule {
    std::vector<Atom> hyps; // conjunction; empty = unconditional
    Atom concl;
};

struct TupleConstruction {
    std::string name;
    Digraph h;
    std::vector<Coord> coords;
    std::vector<Rule> validity;  // every operand side is src (one vertex)
    std::vector<Rule> arc_rules; // relate a source and a target tuple

    unsigned long long candidate_estimate() const;
};

struct ConstructionOptions {
    unsigned long long candidate_cap = 1ull << 16;
};

/// Full construction: all valid tuples, arcs by the rules, labels rendering
/// the tuples. Refuses (resource_error) when the candidate estimate exceeds
/// the cap.
Digraph materialize(const TupleConstruction & tc, const ConstructionOptions & options = {});

struct FoldedConstruction {
    Digraph graph;
    std::vector<int> tuple_to_vertex; // enumeration index -> folded vertex
};

/// Hom-equivalent retract of the full construction, built without
/// materializing the quadratic arc set: tuples are grouped by the coordinate
/// projections the arc rules read, dominated groups are folded onto a Pareto
/// front, and the remainder goes through the generic row fold. The map
/// witnesses the retraction from the full vertex set.
FoldedConstruction materialize_folded_with_map(const TupleConstruction & tc,
    const ConstructionOptions & options = {});
Digraph materialize_folded(const TupleConstruction & tc, const ConstructionOptions & options = {});

/// Exposed for tests: valid tuples in enumeration order (coordinatewise
/// odometer, least significant coordinate last).
std::vector<std::vector<std::uint32_t>> enumerate_valid_tuples(const TupleConstruction & tc,
    const ConstructionOptions & options = {});

bool tuple_arc(const TupleConstruction & tc, const std::vector<std::uint32_t> & src,
    const std::vector<std::uint32_t> & tgt);

std::string render_tuple(const TupleConstruction & tc, const std::vector<std::uint32_t> & tuple);

} // namespace pultr

#endif
