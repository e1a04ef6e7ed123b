#include <gammahom/error.hpp>
#include <gammahom/vertex_map.hpp>

#include <string>

namespace gammahom {

VertexMap::VertexMap(std::vector<Vertex> images, std::size_t codomain_size) :
    _images(std::move(images)),
    _codomain(codomain_size)
{
    for (auto w : _images)
        if (w >= _codomain)
            throw Error{Errc::ArityMismatch,
                "image " + std::to_string(w) + " outside codomain of size " + std::to_string(_codomain)};
}

VertexMap::VertexMap(std::initializer_list<Vertex> images, std::size_t codomain_size) :
    VertexMap(std::vector<Vertex>(images), codomain_size)
{
}

auto VertexMap::identity(std::size_t n) -> VertexMap
{
    std::vector<Vertex> images(n);
    for (std::size_t v = 0; v < n; ++v)
        images[v] = static_cast<Vertex>(v);
    return VertexMap{std::move(images), n};
}

auto VertexMap::constant(std::size_t n, Vertex value, std::size_t codomain_size) -> VertexMap
{
    return VertexMap{std::vector<Vertex>(n, value), codomain_size};
}

auto VertexMap::image_set() const -> VertexSet
{
    VertexSet result;
    for (auto w : _images)
        result.insert(w);
    return result;
}

auto VertexMap::preimage(Vertex w) const -> VertexSet
{
    VertexSet result;
    for (Vertex v = 0; v < _images.size(); ++v)
        if (_images[v] == w)
            result.insert(v);
    return result;
}

auto compose(const VertexMap & outer, const VertexMap & inner) -> VertexMap
{
    if (inner.codomain_size() != outer.size())
        throw Error{Errc::ArityMismatch, "cannot compose: inner codomain differs from outer domain"};
    std::vector<Vertex> images(inner.size());
    for (Vertex v = 0; v < inner.size(); ++v)
        images[v] = outer(inner(v));
    return VertexMap{std::move(images), outer.codomain_size()};
}

}
