#pragma once

#include <gammahom/vertex_set.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace gammahom {

using Arc = std::pair<Vertex, Vertex>;

/// A finite digraph on vertices 0..n-1, loops allowed. Arcs are kept as one
/// out-row and one in-row bitset per vertex. Values are immutable once built.
class Digraph {
public:
    /// The arcless digraph on n vertices. n must lie in [1, 64].
    explicit Digraph(std::size_t n);
    Digraph(std::size_t n, std::span<const Arc> arcs);
    Digraph(std::size_t n, std::initializer_list<Arc> arcs);

    /// Builds from out-rows; row v holds the heads of the arcs leaving v.
    static auto from_out_rows(std::span<const std::uint64_t> rows) -> Digraph;

    auto size() const -> std::size_t { return _out.size(); }
    auto vertices() const -> VertexSet { return VertexSet::first_n(size()); }

    auto has_arc(Vertex from, Vertex to) const -> bool { return _out[from].contains(to); }
    auto has_loop(Vertex v) const -> bool { return _out[v].contains(v); }

    /// Heads of arcs leaving v (v itself included when v carries a loop).
    auto out_row(Vertex v) const -> VertexSet { return _out[v]; }
    /// Tails of arcs entering v (v itself included when v carries a loop).
    auto in_row(Vertex v) const -> VertexSet { return _in[v]; }

    /// N_G(v): vertices other than v adjacent to v in either direction.
    auto neighbors(Vertex v) const -> VertexSet { return (_out[v] | _in[v]) - VertexSet::single(v); }
    auto out_neighbors(Vertex v) const -> VertexSet { return _out[v] - VertexSet::single(v); }
    auto in_neighbors(Vertex v) const -> VertexSet { return _in[v] - VertexSet::single(v); }

    auto loops() const -> VertexSet;
    auto arc_count() const -> std::size_t;
    auto degree(Vertex v) const -> std::size_t { return _out[v].size() + _in[v].size(); }

    /// All arcs in lexicographic order.
    auto arcs() const -> std::vector<Arc>;
    auto out_rows() const -> std::vector<std::uint64_t>;

    auto is_reflexive() const -> bool { return loops() == vertices(); }
    auto is_irreflexive() const -> bool { return loops().empty(); }
    auto is_symmetric() const -> bool;
    auto is_antisymmetric() const -> bool;
    auto is_transitive() const -> bool;

    auto operator==(const Digraph & other) const -> bool { return _out == other._out; }

private:
    Digraph() = default;
    auto fill_in_rows() -> void;

    std::vector<VertexSet> _out;
    std::vector<VertexSet> _in;
};

/// G*: the digraph with all loops dropped.
auto loops_removed(const Digraph & g) -> Digraph;
auto reflexive_closure(const Digraph & g) -> Digraph;

/// Smallest transitive arc set containing A(G): uv is present iff a walk of
/// length at least one leads from u to v.
auto transitive_hull(const Digraph & g) -> Digraph;

/// Vertices reachable from v by walks of length at least one.
auto reachable_from(const Digraph & g, Vertex v) -> VertexSet;

/// True iff the digraph contains no closed walk (a loop counts as one).
auto is_acyclic(const Digraph & g) -> bool;

/// G restricted to x, vertices renumbered by increasing original index.
auto induced(const Digraph & g, VertexSet x) -> Digraph;

/// Relabels v to perm[v]; perm must be a permutation of 0..n-1.
auto relabeled(const Digraph & g, std::span<const Vertex> perm) -> Digraph;

auto direct_sum(const Digraph & g, const Digraph & h) -> Digraph;

/// P followed by Q with every vertex of P below every vertex of Q.
/// Throws NotAPoset unless both arguments are posets.
auto ordinal_sum(const Digraph & p, const Digraph & q) -> Digraph;

/// Adds the reverse of every arc.
auto symmetric_closure_view(const Digraph & g) -> Digraph;

/// An undirected graph, carried as a symmetric digraph: edge {v,w} is the arc
/// pair vw, wv, and the loop edge {v} is the arc vv.
class UndirectedGraph {
public:
    static auto from_edges(std::size_t n, std::span<const Arc> edges) -> UndirectedGraph;
    static auto from_edges(std::size_t n, std::initializer_list<Arc> edges) -> UndirectedGraph;

    auto as_digraph() const -> const Digraph & { return _graph; }
    auto size() const -> std::size_t { return _graph.size(); }
    /// Edges as pairs v <= w in lexicographic order.
    auto edges() const -> std::vector<Arc>;

private:
    friend auto underlying(const Digraph & g) -> UndirectedGraph;
    explicit UndirectedGraph(Digraph g) : _graph(std::move(g)) {}

    Digraph _graph;
};

/// The underlying undirected graph of a symmetric digraph; throws NotSymmetric.
auto underlying(const Digraph & g) -> UndirectedGraph;

enum class ClassKind {
    AllDigraphs,
    Ta,
    Posets,
    StrictPosets,
    Undirected,
    OddCycleFree,
};

auto to_string(ClassKind kind) -> std::string_view;
auto parse_class_kind(std::string_view name) -> std::optional<ClassKind>;
auto all_class_kinds() -> std::span<const ClassKind>;

/// A bounded digraph class: the kind's predicate plus size limits.
struct ClassSpec {
    ClassKind kind = ClassKind::AllDigraphs;
    std::size_t max_vertices = 1;
    std::optional<std::size_t> max_arcs{};

    auto operator==(const ClassSpec &) const -> bool = default;
};

/// The kind predicate alone, without size bounds.
auto satisfies(const Digraph & g, ClassKind kind) -> bool;
auto is_member(const Digraph & g, const ClassSpec & spec) -> bool;

auto is_poset(const Digraph & g) -> bool;
auto is_strict_poset(const Digraph & g) -> bool;
auto is_ta(const Digraph & g) -> bool;
auto is_odd_cycle_free(const Digraph & g) -> bool;

}
