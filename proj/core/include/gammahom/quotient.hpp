#pragma once

#include <gammahom/digraph.hpp>
#include <gammahom/vertex_map.hpp>

#include <vector>

namespace gammahom {

/// The factorisation ξ = ι_ξ ∘ π_ξ of a map through its quotient digraph
/// 𝒢(ξ). Blocks are the sets Γ_ξ(v), numbered by increasing minimal vertex;
/// block i becomes vertex i of digraph(). Block (a, b) is an arc iff some
/// arc of G runs from a vertex of a to a vertex of b.
class QuotientDigraph {
public:
    auto base() const -> const Digraph & { return _base; }
    auto blocks() const -> const std::vector<VertexSet> & { return _blocks; }
    auto block_count() const -> std::size_t { return _blocks.size(); }
    auto block_of(Vertex v) const -> Vertex { return _block_of[v]; }

    /// 𝒢(ξ) as a first-class digraph on 0..block_count()-1.
    auto digraph() const -> const Digraph & { return _digraph; }

    /// π_ξ : V(G) → V(𝒢(ξ)).
    auto pi() const -> VertexMap { return VertexMap{_block_of, _blocks.size()}; }
    /// ι_ξ : V(𝒢(ξ)) → V(H).
    auto iota() const -> VertexMap { return VertexMap{_iota, _target_size}; }
    auto target_size() const -> std::size_t { return _target_size; }

    /// π as a vector. Two quotients of the same G are equal iff their keys are.
    auto partition_key() const -> const std::vector<Vertex> & { return _block_of; }

    auto same_quotient(const QuotientDigraph & other) const -> bool { return _block_of == other._block_of; }

private:
    friend auto quotient_of_map(const Digraph & g, const VertexMap & xi) -> QuotientDigraph;

    QuotientDigraph(Digraph base, Digraph quotient) : _base(std::move(base)), _digraph(std::move(quotient)) {}

    Digraph _base;
    Digraph _digraph;
    std::vector<VertexSet> _blocks;
    std::vector<Vertex> _block_of;
    std::vector<Vertex> _iota;
    std::size_t _target_size = 0;
};

/// 𝒢(ξ) for ξ ∈ ℋ(G,H); throws NotAHomomorphism otherwise.
auto quotient_of(const Digraph & g, const Digraph & h, const VertexMap & xi) -> QuotientDigraph;

/// The same construction for any total map, without the homomorphism check.
auto quotient_of_map(const Digraph & g, const VertexMap & xi) -> QuotientDigraph;

/// π_ξ as a partition key, without building the quotient digraph.
auto partition_key(const Digraph & g, const VertexMap & xi) -> std::vector<Vertex>;

/// Θ_{G,H′}(ξ): every ζ ∈ ℋ(G,H′) with 𝒢(ζ) = 𝒢(ξ), lexicographically sorted.
auto theta_class(const Digraph & g, const Digraph & h2, const QuotientDigraph & reference) -> std::vector<VertexMap>;

/// 𝒯(ξ): the transitive hull of 𝒢(ξ).
auto transitive_quotient(const QuotientDigraph & q) -> Digraph;

/// True iff 𝒢(ξ) has a non-trivial walk whose end blocks share their ι-image.
/// Decided exactly over walks of every length via reachability.
auto has_nontrivial_equal_iota_walk(const QuotientDigraph & q) -> bool;

/// True iff 𝒢(ξ)* has an odd-length walk whose end blocks share their ι-image.
auto has_odd_equal_iota_walk(const QuotientDigraph & q) -> bool;

}
