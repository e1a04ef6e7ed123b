#pragma once

#include <gammahom/vertex_set.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gammahom {

/// A total function from {0..n-1} to {0..codomain_size-1}.
class VertexMap {
public:
    /// Throws ArityMismatch when an image falls outside the codomain.
    VertexMap(std::vector<Vertex> images, std::size_t codomain_size);
    VertexMap(std::initializer_list<Vertex> images, std::size_t codomain_size);

    static auto identity(std::size_t n) -> VertexMap;
    static auto constant(std::size_t n, Vertex value, std::size_t codomain_size) -> VertexMap;

    auto size() const -> std::size_t { return _images.size(); }
    auto codomain_size() const -> std::size_t { return _codomain; }
    auto operator()(Vertex v) const -> Vertex { return _images[v]; }
    auto operator[](Vertex v) const -> Vertex { return _images[v]; }
    auto images() const -> std::span<const Vertex> { return _images; }

    /// ξ[V]: the set of image vertices.
    auto image_set() const -> VertexSet;
    /// ξ⁻¹(w).
    auto preimage(Vertex w) const -> VertexSet;

    /// Lexicographic on the image sequence, then on the codomain size.
    auto operator<=>(const VertexMap &) const = default;

private:
    std::vector<Vertex> _images;
    std::size_t _codomain;
};

/// outer ∘ inner.
auto compose(const VertexMap & outer, const VertexMap & inner) -> VertexMap;

}
