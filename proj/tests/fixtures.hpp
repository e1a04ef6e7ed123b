#pragma once

#include <gammahom/digraph.hpp>
#include <gammahom/rearrange.hpp>

namespace fixtures {

using gammahom::Digraph;
using gammahom::RearrangementSpec;
using gammahom::VertexSet;

/// One point with a loop.
inline auto a1() -> Digraph { return Digraph{1, {{0, 0}}}; }

/// The two-element chain 0 < 1.
inline auto c2() -> Digraph { return Digraph{2, {{0, 0}, {1, 1}, {0, 1}}}; }

/// Two incomparable points.
inline auto a2r() -> Digraph { return Digraph{2, {{0, 0}, {1, 1}}}; }

/// The three-element chain 0 < 1 < 2.
inline auto chain3() -> Digraph { return Digraph{3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}}; }

/// R = D(3; 00,11,22,01), X = {1}, M = {0}, Y = {2}, β(1) = 2.
inline auto three_vertex_spec() -> RearrangementSpec
{
    return {Digraph{3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}}}, VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({0}),
        {{1, 2}}};
}

/// Vertices (m, x, y, w, z) = (0, 1, 2, 3, 4); order m<x<w, y<w, y<z.
inline auto pentagon_r() -> Digraph
{
    return Digraph{5, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {0, 1}, {1, 3}, {0, 3}, {2, 3}, {2, 4}}};
}

inline auto pentagon_spec() -> RearrangementSpec
{
    return {pentagon_r(), VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({0}), {{1, 2}}};
}

/// The single edge {m, x} plus an isolated y, as a symmetric digraph on (m, x, y).
inline auto undirected_path_spec() -> RearrangementSpec
{
    return {Digraph{3, {{0, 1}, {1, 0}}}, VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({0}), {{1, 2}}};
}

}
