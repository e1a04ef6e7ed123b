#include <gammahom/connectivity.hpp>
#include <gammahom/error.hpp>
#include <gammahom/hom.hpp>
#include <gammahom/quotient.hpp>

#include <algorithm>
#include <array>

namespace gammahom {

auto partition_key(const Digraph & g, const VertexMap & xi) -> std::vector<Vertex>
{
    auto blocks = gamma_partition(g, xi);
    std::vector<Vertex> key(g.size());
    for (Vertex b = 0; b < blocks.size(); ++b)
        for (auto v : blocks[b])
            key[v] = b;
    return key;
}

auto quotient_of_map(const Digraph & g, const VertexMap & xi) -> QuotientDigraph
{
    auto blocks = gamma_partition(g, xi);
    std::vector<Vertex> block_of(g.size());
    for (Vertex b = 0; b < blocks.size(); ++b)
        for (auto v : blocks[b])
            block_of[v] = b;

    std::vector<std::uint64_t> rows(blocks.size());
    for (Vertex b = 0; b < blocks.size(); ++b)
        for (auto v : blocks[b])
            for (auto w : g.out_row(v))
                rows[b] |= std::uint64_t{1} << block_of[w];

    QuotientDigraph q{g, Digraph::from_out_rows(rows)};
    q._iota.reserve(blocks.size());
    for (auto block : blocks)
        q._iota.push_back(xi(block.front()));
    q._blocks = std::move(blocks);
    q._block_of = std::move(block_of);
    q._target_size = xi.codomain_size();
    return q;
}

auto quotient_of(const Digraph & g, const Digraph & h, const VertexMap & xi) -> QuotientDigraph
{
    if (! is_homomorphism(g, h, xi))
        throw Error{Errc::NotAHomomorphism, "quotient_of needs ξ ∈ ℋ(G,H)"};
    return quotient_of_map(g, xi);
}

auto theta_class(const Digraph & g, const Digraph & h2, const QuotientDigraph & reference) -> std::vector<VertexMap>
{
    if (reference.base().size() != g.size())
        throw Error{Errc::ArityMismatch, "reference quotient belongs to a different digraph"};
    std::vector<VertexMap> result;
    for_each_hom(g, h2, HomMode::All, [&](const VertexMap & zeta) {
        if (partition_key(g, zeta) == reference.partition_key())
            result.push_back(zeta);
        return true;
    });
    std::sort(result.begin(), result.end());
    return result;
}

auto transitive_quotient(const QuotientDigraph & q) -> Digraph
{
    return transitive_hull(q.digraph());
}

auto has_nontrivial_equal_iota_walk(const QuotientDigraph & q) -> bool
{
    // A walk is non-trivial iff it uses a proper arc (a, b). Such a walk from
    // c to d exists iff c reaches a and b reaches d, with zero-length legs
    // allowed.
    const auto & d = q.digraph();
    auto reach = reflexive_closure(transitive_hull(d));
    auto iota = q.iota();
    for (auto [a, b] : d.arcs()) {
        if (a == b)
            continue;
        for (Vertex c = 0; c < d.size(); ++c) {
            if (! reach.has_arc(c, a))
                continue;
            for (auto end : reach.out_row(b))
                if (iota(c) == iota(end))
                    return true;
        }
    }
    return false;
}

auto has_odd_equal_iota_walk(const QuotientDigraph & q) -> bool
{
    auto d = loops_removed(q.digraph());
    auto iota = q.iota();
    for (Vertex start = 0; start < d.size(); ++start) {
        // Breadth-first search over (block, parity of walk length).
        std::array<VertexSet, 2> seen{VertexSet::single(start), VertexSet{}};
        std::array<VertexSet, 2> frontier = seen;
        while (! frontier[0].empty() || ! frontier[1].empty()) {
            std::array<VertexSet, 2> next{};
            for (int parity = 0; parity < 2; ++parity)
                for (auto v : frontier[parity])
                    next[1 - parity] |= d.out_row(v);
            for (int parity = 0; parity < 2; ++parity) {
                next[parity] -= seen[parity];
                seen[parity] |= next[parity];
            }
            frontier = next;
        }
        for (auto end : seen[1])
            if (iota(end) == iota(start))
                return true;
    }
    return false;
}

}
