#ifndef PULTR_DIGRAPH_HPP
#define PULTR_DIGRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pultr {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string & what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Arc = std::pair<int, int>;

/// Finite digraph on vertices 0..n-1. Arcs form a set; loops allowed.
/// Immutable once built; all operations below are pure.
class Digraph
{
public:
    Digraph() = default;

    Digraph(int n, std::vector<Arc> arcs);

    int n() const { return n_; }
    const std::vector<Arc> & arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    bool has_arc(int u, int v) const;

    bool operator==(const Digraph & other) const
    {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

    // Optional display labels; when present they cover every vertex.
    std::optional<std::vector<std::string>> labels;

    std::vector<std::vector<int>> out_neighbours() const;
    std::vector<std::vector<int>> in_neighbours() const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_; // sorted, deduplicated
};

struct VertexPartition {
    std::vector<std::vector<int>> classes;
};

enum class EmitFormat { native, dot };

Digraph parse_digraph(const std::string & text);
std::string emit_digraph(const Digraph & g, EmitFormat format = EmitFormat::native);

struct DisjointUnionResult {
    Digraph graph;
    std::vector<int> offsets; // offsets[i] + v = global index of part i's vertex v
};

DisjointUnionResult disjoint_union(const std::vector<Digraph> & parts);

struct QuotientResult {
    Digraph graph;
    std::vector<int> projection; // original vertex -> class vertex
};

QuotientResult quotient(const Digraph & g, const VertexPartition & p);

/// True iff the underlying undirected graph is a tree (n >= 1, connected,
/// acyclic; loops and antiparallel pairs count as cycles).
bool is_oriented_tree(const Digraph & g);

bool weakly_connected(const Digraph & g);

/// Directed path with k arcs on k+1 vertices; path_digraph(0) is the
/// one-vertex arcless digraph.
Digraph path_digraph(int k);

} // namespace pultr

#endif
