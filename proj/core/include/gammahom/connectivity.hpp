#pragma once

#include <gammahom/digraph.hpp>
#include <gammahom/vertex_map.hpp>

#include <vector>

namespace gammahom {

/// γ_X(v): the vertices joined to v by a line running inside X. Adjacency
/// ignores arc direction and loops. Throws VertexNotInSubset unless v ∈ X.
auto gamma(const Digraph & g, VertexSet x, Vertex v) -> VertexSet;

/// The partition {γ_X(x) : x ∈ X} of X into "connected in X" classes.
class ComponentMap {
public:
    ComponentMap(const Digraph & g, VertexSet x);

    auto subset() const -> VertexSet { return _subset; }
    /// Blocks ordered by their minimal vertex.
    auto blocks() const -> const std::vector<VertexSet> & { return _blocks; }
    auto block_index(Vertex v) const -> std::size_t;
    auto component(Vertex v) const -> VertexSet { return _blocks[block_index(v)]; }

private:
    VertexSet _subset;
    std::vector<VertexSet> _blocks;
};

/// The connectivity components of G, ordered by minimal vertex.
auto connected_components(const Digraph & g) -> std::vector<VertexSet>;

/// Γ_ξ(v) = γ over the pre-image ξ⁻¹(ξ(v)).
auto gamma_component(const Digraph & g, const VertexMap & xi, Vertex v) -> VertexSet;

/// The partition {Γ_ξ(v) : v ∈ V(G)} ordered by minimal vertex. ξ may be any
/// total map on V(G); no homomorphism check is made.
auto gamma_partition(const Digraph & g, const VertexMap & xi) -> std::vector<VertexSet>;

/// Order-theoretic convexity: every walk that starts and ends in X stays in X.
auto is_convex(const Digraph & g, VertexSet x) -> bool;

/// Checks Γ_ξ(v) ⊆ Γ_{σ∘ξ}(v) for all v, with equality everywhere when σ is
/// strict on ξ[V(G)]. Throws NotAHomomorphism when ξ ∉ ℋ(G,H) or σ ∉ ℋ(H,H′).
auto gamma_monotone_check(const Digraph & g, const Digraph & h, const Digraph & h2, const VertexMap & xi,
    const VertexMap & sigma) -> bool;

}
