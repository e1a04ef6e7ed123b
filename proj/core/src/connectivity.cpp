#include <gammahom/connectivity.hpp>
#include <gammahom/error.hpp>
#include <gammahom/hom.hpp>

#include <algorithm>

namespace gammahom {

auto gamma(const Digraph & g, VertexSet x, Vertex v) -> VertexSet
{
    if (! x.contains(v))
        throw Error{Errc::VertexNotInSubset, "vertex " + std::to_string(v) + " is not in the subset"};

    auto component = VertexSet::single(v);
    auto frontier = component;
    while (! frontier.empty()) {
        VertexSet next;
        for (auto w : frontier)
            next |= g.neighbors(w);
        frontier = (next & x) - component;
        component |= frontier;
    }
    return component;
}

ComponentMap::ComponentMap(const Digraph & g, VertexSet x) : _subset(x)
{
    auto rest = x;
    while (! rest.empty()) {
        auto block = gamma(g, x, rest.front());
        _blocks.push_back(block);
        rest -= block;
    }
}

auto ComponentMap::block_index(Vertex v) const -> std::size_t
{
    for (std::size_t i = 0; i < _blocks.size(); ++i)
        if (_blocks[i].contains(v))
            return i;
    throw Error{Errc::VertexNotInSubset, "vertex " + std::to_string(v) + " is not in the subset"};
}

auto connected_components(const Digraph & g) -> std::vector<VertexSet>
{
    return ComponentMap{g, g.vertices()}.blocks();
}

auto gamma_component(const Digraph & g, const VertexMap & xi, Vertex v) -> VertexSet
{
    if (xi.size() != g.size())
        throw Error{Errc::ArityMismatch, "map is not total on V(G)"};
    return gamma(g, xi.preimage(xi(v)), v);
}

auto gamma_partition(const Digraph & g, const VertexMap & xi) -> std::vector<VertexSet>
{
    if (xi.size() != g.size())
        throw Error{Errc::ArityMismatch, "map is not total on V(G)"};
    std::vector<VertexSet> blocks;
    auto rest = g.vertices();
    while (! rest.empty()) {
        auto v = rest.front();
        auto block = gamma(g, xi.preimage(xi(v)), v);
        blocks.push_back(block);
        rest -= block;
    }
    return blocks;
}

auto is_convex(const Digraph & g, VertexSet x) -> bool
{
    // A walk leaves X and comes back iff some z outside X is reachable from X
    // and reaches X.
    auto hull = transitive_hull(g);
    VertexSet from_x;
    for (auto v : x)
        from_x |= hull.out_row(v);
    for (auto z : from_x - x)
        if (hull.out_row(z).intersects(x))
            return false;
    return true;
}

auto gamma_monotone_check(const Digraph & g, const Digraph & h, const Digraph & h2, const VertexMap & xi,
    const VertexMap & sigma) -> bool
{
    if (! is_homomorphism(g, h, xi) || ! is_homomorphism(h, h2, sigma))
        throw Error{Errc::NotAHomomorphism, "gamma_monotone_check needs ξ ∈ ℋ(G,H) and σ ∈ ℋ(H,H′)"};

    auto composed = compose(sigma, xi);
    bool equality_expected = is_strict_on(h, sigma, xi.image_set());
    for (Vertex v = 0; v < g.size(); ++v) {
        auto inner = gamma_component(g, xi, v);
        auto outer = gamma_component(g, composed, v);
        if (! inner.subset_of(outer))
            return false;
        if (equality_expected && inner != outer)
            return false;
    }
    return true;
}

}
