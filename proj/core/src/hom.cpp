#include <gammahom/connectivity.hpp>
#include <gammahom/error.hpp>
#include <gammahom/hom.hpp>
#include <gammahom/parallel.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

namespace gammahom {

namespace {
    struct Constraint {
        std::uint32_t position;
        bool forward;  // arc from the earlier vertex to the current one
        bool backward; // arc from the current vertex to the earlier one
    };

    // Sums machine-word partial counts and spills into the big integer only
    // when a word would overflow.
    class Accumulator {
    public:
        auto add(std::uint64_t c) -> void
        {
            if (_small > std::numeric_limits<std::uint64_t>::max() - c) {
                _big += _small;
                _small = 0;
            }
            _small += c;
        }

        auto add(const Count & c) -> void { _big += c; }

        auto total() const -> Count { return _big + _small; }

    private:
        std::uint64_t _small = 0;
        Count _big = 0;
    };

    // Static-order backtracking over V(G). Vertices are assigned by descending
    // (in + out) degree, ties broken by index; every arc to an already
    // assigned vertex narrows the candidate set by one row of H.
    class Search {
    public:
        Search(const Digraph & g, const Digraph & h, HomMode mode) :
            _h(h),
            _mode(mode),
            _all(VertexSet::first_n(h.size()).bits())
        {
            auto n = g.size();
            _order.resize(n);
            std::iota(_order.begin(), _order.end(), Vertex{0});
            std::stable_sort(_order.begin(), _order.end(),
                [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

            std::array<std::uint32_t, max_vertices> position_of{};
            for (std::uint32_t p = 0; p < n; ++p)
                position_of[_order[p]] = p;

            _constraints.resize(n);
            _needs_loop.resize(n);
            for (std::uint32_t p = 0; p < n; ++p) {
                auto v = _order[p];
                _needs_loop[p] = g.has_loop(v) && mode != HomMode::LoopsRemoved;
                for (auto u : g.neighbors(v)) {
                    auto q = position_of[u];
                    if (q < p)
                        _constraints[p].push_back({q, g.has_arc(u, v), g.has_arc(v, u)});
                }
            }

            for (Vertex w = 0; w < h.size(); ++w) {
                _h_out[w] = h.out_row(w).bits();
                _h_in[w] = h.in_row(w).bits();
            }
            _h_loops = h.loops().bits();
            _assigned.resize(n);
        }

        auto size() const -> std::size_t { return _order.size(); }

        auto candidates(std::size_t p) const -> std::uint64_t
        {
            auto c = _all;
            if (_needs_loop[p])
                c &= _h_loops;
            for (const auto & con : _constraints[p]) {
                auto w = _assigned[con.position];
                if (con.forward)
                    c &= _h_out[w];
                if (con.backward)
                    c &= _h_in[w];
                if (_mode != HomMode::All)
                    c &= ~(std::uint64_t{1} << w);
            }
            return c;
        }

        auto assign(std::size_t p, Vertex w) -> void { _assigned[p] = w; }

        auto count_from(std::size_t p, Accumulator & acc) -> void
        {
            auto c = candidates(p);
            if (p + 1 == size()) {
                acc.add(static_cast<std::uint64_t>(std::popcount(c)));
                return;
            }
            for (auto w : VertexSet{c}) {
                _assigned[p] = w;
                count_from(p + 1, acc);
            }
        }

        // Returns false once the visitor asked to stop.
        auto visit_from(std::size_t p, std::vector<Vertex> & images,
            const std::function<bool(const VertexMap &)> & visit) -> bool
        {
            if (p == size()) {
                for (std::size_t q = 0; q < size(); ++q)
                    images[_order[q]] = _assigned[q];
                return visit(VertexMap{images, _h.size()});
            }
            for (auto w : VertexSet{candidates(p)}) {
                _assigned[p] = w;
                if (! visit_from(p + 1, images, visit))
                    return false;
            }
            return true;
        }

    private:
        const Digraph & _h;
        HomMode _mode;
        std::uint64_t _all;
        std::vector<Vertex> _order;
        std::vector<std::vector<Constraint>> _constraints;
        std::vector<bool> _needs_loop;
        std::array<std::uint64_t, max_vertices> _h_out{};
        std::array<std::uint64_t, max_vertices> _h_in{};
        std::uint64_t _h_loops = 0;
        std::vector<Vertex> _assigned;
    };
}

auto to_string(HomMode mode) -> std::string_view
{
    switch (mode) {
    case HomMode::All: return "all";
    case HomMode::Strict: return "strict";
    case HomMode::LoopsRemoved: return "loops-removed";
    }
    return "unknown";
}

auto parse_hom_mode(std::string_view name) -> std::optional<HomMode>
{
    for (auto mode : {HomMode::All, HomMode::Strict, HomMode::LoopsRemoved})
        if (to_string(mode) == name)
            return mode;
    return std::nullopt;
}

auto is_homomorphism(const Digraph & g, const Digraph & h, const VertexMap & f, HomMode mode) -> bool
{
    if (f.size() != g.size() || f.codomain_size() != h.size())
        throw Error{Errc::ArityMismatch, "map does not go from V(G) to V(H)"};
    for (auto [u, v] : g.arcs()) {
        if (u == v) {
            if (mode != HomMode::LoopsRemoved && ! h.has_loop(f(u)))
                return false;
            continue;
        }
        if (! h.has_arc(f(u), f(v)))
            return false;
        if (mode != HomMode::All && f(u) == f(v))
            return false;
    }
    return true;
}

auto for_each_hom(const Digraph & g, const Digraph & h, HomMode mode,
    const std::function<bool(const VertexMap &)> & visit) -> void
{
    Search search{g, h, mode};
    std::vector<Vertex> images(g.size());
    search.visit_from(0, images, visit);
}

namespace {
    auto count_connected(const Digraph & g, const Digraph & h, HomMode mode, unsigned workers) -> Count
    {
        Search search{g, h, mode};
        if (workers <= 1 || search.size() == 1) {
            Accumulator acc;
            search.count_from(0, acc);
            return acc.total();
        }

        auto top = VertexSet{search.candidates(0)}.to_vector();
        std::vector<Count> partial(top.size());
        parallel_for(top.size(), workers, [&](std::size_t i) {
            Search local = search;
            local.assign(0, top[i]);
            Accumulator acc;
            local.count_from(1, acc);
            partial[i] = acc.total();
        });

        Count total = 0;
        for (const auto & c : partial)
            total += c;
        return total;
    }
}

// Every mode constrains arcs only, so the count factors over the connected
// components of G.
auto count_homs(const Digraph & g, const Digraph & h, HomMode mode, unsigned workers) -> Count
{
    auto components = connected_components(g);
    if (components.size() == 1)
        return count_connected(g, h, mode, workers);
    Count product = 1;
    for (auto component : components) {
        product *= count_connected(induced(g, component), h, mode, workers);
        if (product == 0)
            break;
    }
    return product;
}

HomSet::HomSet(Digraph g, Digraph h, HomMode mode) :
    _g(std::move(g)),
    _h(std::move(h)),
    _mode(mode)
{
}

auto HomSet::count() const -> const Count &
{
    if (! _count) {
        if (_maps)
            _count = Count{_maps->size()};
        else
            _count = count_homs(_g, _h, _mode);
    }
    return *_count;
}

auto HomSet::maps() const -> const std::vector<VertexMap> &
{
    if (! _maps)
        _maps = list_homs(_g, _h, _mode);
    return *_maps;
}

auto HomSet::contains(const VertexMap & f) const -> bool
{
    return f.size() == _g.size() && f.codomain_size() == _h.size() && is_homomorphism(_g, _h, f, _mode);
}

auto enumerate_homs(const Digraph & g, const Digraph & h, HomMode mode) -> HomSet
{
    return HomSet{g, h, mode};
}

auto list_homs(const Digraph & g, const Digraph & h, HomMode mode) -> std::vector<VertexMap>
{
    std::vector<VertexMap> result;
    for_each_hom(g, h, mode, [&](const VertexMap & f) {
        result.push_back(f);
        return true;
    });
    std::sort(result.begin(), result.end());
    return result;
}

auto is_strict_on(const Digraph & h, const VertexMap & sigma, VertexSet on) -> bool
{
    for (auto a : on)
        for (auto b : h.out_neighbors(a) & on)
            if (sigma(a) == sigma(b))
                return false;
    return true;
}

}
