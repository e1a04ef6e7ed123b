#include <gammahom/digraph.hpp>
#include <gammahom/error.hpp>

#include <algorithm>
#include <array>
#include <string>

namespace gammahom {

namespace {
    auto check_size(std::size_t n) -> void
    {
        if (n == 0)
            throw Error{Errc::EmptyDigraph, "a digraph needs at least one vertex"};
        if (n > max_vertices)
            throw Error{Errc::TooLarge, "at most 64 vertices are supported, got " + std::to_string(n)};
    }

    // One composition step: row u of R∘R is the union of the rows of R's heads.
    auto square(const std::vector<std::uint64_t> & rows) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result(rows.size());
        for (std::size_t u = 0; u < rows.size(); ++u) {
            std::uint64_t acc = 0;
            for (auto v : VertexSet{rows[u]})
                acc |= rows[v];
            result[u] = acc;
        }
        return result;
    }
}

Digraph::Digraph(std::size_t n)
{
    check_size(n);
    _out.resize(n);
    _in.resize(n);
}

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs) : Digraph(n)
{
    for (auto [from, to] : arcs) {
        if (from >= n || to >= n)
            throw Error{Errc::VertexOutOfRange,
                "arc " + std::to_string(from) + "->" + std::to_string(to) + " outside 0.." + std::to_string(n - 1)};
        _out[from].insert(to);
    }
    fill_in_rows();
}

Digraph::Digraph(std::size_t n, std::initializer_list<Arc> arcs) :
    Digraph(n, std::span<const Arc>{arcs.begin(), arcs.size()})
{
}

auto Digraph::from_out_rows(std::span<const std::uint64_t> rows) -> Digraph
{
    check_size(rows.size());
    auto mask = VertexSet::first_n(rows.size());
    Digraph g;
    g._out.reserve(rows.size());
    for (auto row : rows) {
        if (! VertexSet{row}.subset_of(mask))
            throw Error{Errc::VertexOutOfRange, "row refers to a vertex beyond the digraph"};
        g._out.emplace_back(row);
    }
    g._in.resize(rows.size());
    g.fill_in_rows();
    return g;
}

auto Digraph::fill_in_rows() -> void
{
    for (auto & row : _in)
        row = VertexSet{};
    for (Vertex u = 0; u < _out.size(); ++u)
        for (auto v : _out[u])
            _in[v].insert(u);
}

auto Digraph::loops() const -> VertexSet
{
    VertexSet result;
    for (Vertex v = 0; v < size(); ++v)
        if (has_loop(v))
            result.insert(v);
    return result;
}

auto Digraph::arc_count() const -> std::size_t
{
    std::size_t total = 0;
    for (auto row : _out)
        total += row.size();
    return total;
}

auto Digraph::arcs() const -> std::vector<Arc>
{
    std::vector<Arc> result;
    result.reserve(arc_count());
    for (Vertex u = 0; u < size(); ++u)
        for (auto v : _out[u])
            result.emplace_back(u, v);
    return result;
}

auto Digraph::out_rows() const -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> rows;
    rows.reserve(size());
    for (auto row : _out)
        rows.push_back(row.bits());
    return rows;
}

auto Digraph::is_symmetric() const -> bool { return _out == _in; }

auto Digraph::is_antisymmetric() const -> bool
{
    for (Vertex v = 0; v < size(); ++v)
        if (out_neighbors(v).intersects(in_neighbors(v)))
            return false;
    return true;
}

auto Digraph::is_transitive() const -> bool
{
    for (Vertex u = 0; u < size(); ++u)
        for (auto v : _out[u])
            if (! _out[v].subset_of(_out[u]))
                return false;
    return true;
}

auto loops_removed(const Digraph & g) -> Digraph
{
    auto rows = g.out_rows();
    for (std::size_t v = 0; v < rows.size(); ++v)
        rows[v] &= ~(std::uint64_t{1} << v);
    return Digraph::from_out_rows(rows);
}

auto reflexive_closure(const Digraph & g) -> Digraph
{
    auto rows = g.out_rows();
    for (std::size_t v = 0; v < rows.size(); ++v)
        rows[v] |= std::uint64_t{1} << v;
    return Digraph::from_out_rows(rows);
}

auto transitive_hull(const Digraph & g) -> Digraph
{
    // R ← R ∪ R∘R doubles the covered walk length each round.
    auto rows = g.out_rows();
    while (true) {
        auto sq = square(rows);
        bool changed = false;
        for (std::size_t v = 0; v < rows.size(); ++v) {
            auto next = rows[v] | sq[v];
            changed = changed || next != rows[v];
            rows[v] = next;
        }
        if (! changed)
            break;
    }
    return Digraph::from_out_rows(rows);
}

auto reachable_from(const Digraph & g, Vertex v) -> VertexSet
{
    VertexSet seen;
    auto frontier = g.out_row(v);
    while (! (frontier - seen).empty()) {
        auto fresh = frontier - seen;
        seen |= fresh;
        frontier = VertexSet{};
        for (auto w : fresh)
            frontier |= g.out_row(w);
    }
    return seen;
}

auto is_acyclic(const Digraph & g) -> bool
{
    return transitive_hull(g).is_irreflexive();
}

auto induced(const Digraph & g, VertexSet x) -> Digraph
{
    if (x.empty())
        throw Error{Errc::EmptyInducedSet, "cannot induce on the empty set"};
    if (! x.subset_of(g.vertices()))
        throw Error{Errc::VertexOutOfRange, "induced set is not a subset of V(G)"};

    std::array<Vertex, max_vertices> index{};
    Vertex next = 0;
    for (auto v : x)
        index[v] = next++;

    std::vector<std::uint64_t> rows;
    rows.reserve(x.size());
    for (auto u : x) {
        std::uint64_t row = 0;
        for (auto v : g.out_row(u) & x)
            row |= std::uint64_t{1} << index[v];
        rows.push_back(row);
    }
    return Digraph::from_out_rows(rows);
}

auto relabeled(const Digraph & g, std::span<const Vertex> perm) -> Digraph
{
    if (perm.size() != g.size())
        throw Error{Errc::ArityMismatch, "permutation size differs from vertex count"};
    std::vector<std::uint64_t> rows(g.size());
    for (Vertex u = 0; u < g.size(); ++u) {
        std::uint64_t row = 0;
        for (auto v : g.out_row(u))
            row |= std::uint64_t{1} << perm[v];
        rows[perm[u]] = row;
    }
    return Digraph::from_out_rows(rows);
}

auto direct_sum(const Digraph & g, const Digraph & h) -> Digraph
{
    auto n = g.size();
    check_size(n + h.size());
    auto rows = g.out_rows();
    for (auto row : h.out_rows())
        rows.push_back(row << n);
    return Digraph::from_out_rows(rows);
}

auto ordinal_sum(const Digraph & p, const Digraph & q) -> Digraph
{
    if (! is_poset(p) || ! is_poset(q))
        throw Error{Errc::NotAPoset, "ordinal sum is defined for posets only"};
    auto n = p.size();
    check_size(n + q.size());
    auto upper = VertexSet::first_n(n + q.size()) - VertexSet::first_n(n);
    auto rows = p.out_rows();
    for (auto & row : rows)
        row |= upper.bits();
    for (auto row : q.out_rows())
        rows.push_back(row << n);
    return Digraph::from_out_rows(rows);
}

auto symmetric_closure_view(const Digraph & g) -> Digraph
{
    std::vector<std::uint64_t> rows(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        rows[v] = (g.out_row(v) | g.in_row(v)).bits();
    return Digraph::from_out_rows(rows);
}

auto UndirectedGraph::from_edges(std::size_t n, std::span<const Arc> edges) -> UndirectedGraph
{
    std::vector<Arc> arcs;
    arcs.reserve(2 * edges.size());
    for (auto [v, w] : edges) {
        arcs.emplace_back(v, w);
        arcs.emplace_back(w, v);
    }
    return UndirectedGraph{Digraph{n, arcs}};
}

auto UndirectedGraph::from_edges(std::size_t n, std::initializer_list<Arc> edges) -> UndirectedGraph
{
    return from_edges(n, std::span<const Arc>{edges.begin(), edges.size()});
}

auto UndirectedGraph::edges() const -> std::vector<Arc>
{
    std::vector<Arc> result;
    for (auto [v, w] : _graph.arcs())
        if (v <= w)
            result.emplace_back(v, w);
    return result;
}

auto underlying(const Digraph & g) -> UndirectedGraph
{
    if (! g.is_symmetric())
        throw Error{Errc::NotSymmetric, "only symmetric digraphs have an underlying undirected graph"};
    return UndirectedGraph{g};
}

namespace {
    constexpr std::array class_kinds{
        ClassKind::AllDigraphs,
        ClassKind::Ta,
        ClassKind::Posets,
        ClassKind::StrictPosets,
        ClassKind::Undirected,
        ClassKind::OddCycleFree,
    };
}

auto to_string(ClassKind kind) -> std::string_view
{
    switch (kind) {
    case ClassKind::AllDigraphs: return "digraphs";
    case ClassKind::Ta: return "ta";
    case ClassKind::Posets: return "posets";
    case ClassKind::StrictPosets: return "strict-posets";
    case ClassKind::Undirected: return "undirected";
    case ClassKind::OddCycleFree: return "odd-cycle-free";
    }
    return "unknown";
}

auto parse_class_kind(std::string_view name) -> std::optional<ClassKind>
{
    for (auto kind : class_kinds)
        if (to_string(kind) == name)
            return kind;
    return std::nullopt;
}

auto all_class_kinds() -> std::span<const ClassKind> { return class_kinds; }

auto is_poset(const Digraph & g) -> bool
{
    return g.is_reflexive() && g.is_antisymmetric() && g.is_transitive();
}

auto is_strict_poset(const Digraph & g) -> bool
{
    return g.is_irreflexive() && g.is_antisymmetric() && g.is_transitive();
}

auto is_ta(const Digraph & g) -> bool
{
    return is_acyclic(loops_removed(g));
}

auto is_odd_cycle_free(const Digraph & g) -> bool
{
    if (! g.is_symmetric())
        return false;
    // Two-colour every component of G*; a clash is an odd closed walk.
    std::vector<int> colour(g.size(), -1);
    for (Vertex start = 0; start < g.size(); ++start) {
        if (colour[start] != -1)
            continue;
        colour[start] = 0;
        std::vector<Vertex> stack{start};
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                }
                else if (colour[w] == colour[v])
                    return false;
            }
        }
    }
    return true;
}

auto satisfies(const Digraph & g, ClassKind kind) -> bool
{
    switch (kind) {
    case ClassKind::AllDigraphs: return true;
    case ClassKind::Ta: return is_ta(g);
    case ClassKind::Posets: return is_poset(g);
    case ClassKind::StrictPosets: return is_strict_poset(g);
    case ClassKind::Undirected: return g.is_symmetric();
    case ClassKind::OddCycleFree: return is_odd_cycle_free(g);
    }
    return false;
}

auto is_member(const Digraph & g, const ClassSpec & spec) -> bool
{
    if (g.size() > spec.max_vertices)
        return false;
    if (spec.max_arcs && g.arc_count() > *spec.max_arcs)
        return false;
    return satisfies(g, spec.kind);
}

}
