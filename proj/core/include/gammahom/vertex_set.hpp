#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace gammahom {

using Vertex = std::uint32_t;

/// Upper bound on the vertex count of any digraph; one machine word per row.
inline constexpr std::size_t max_vertices = 64;

/// A subset of {0, ..., 63}, stored as a single word. Iteration is in
/// increasing vertex order.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : _rest(rest) {}

        constexpr auto operator*() const -> Vertex { return static_cast<Vertex>(std::countr_zero(_rest)); }
        constexpr auto operator++() -> iterator &
        {
            _rest &= _rest - 1;
            return *this;
        }
        constexpr auto operator++(int) -> iterator
        {
            auto old = *this;
            ++*this;
            return old;
        }
        constexpr auto operator==(const iterator &) const -> bool = default;

    private:
        std::uint64_t _rest = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}
    static constexpr auto of(std::initializer_list<Vertex> vs) -> VertexSet
    {
        VertexSet set;
        for (auto v : vs)
            set.insert(v);
        return set;
    }

    /// {0, ..., n-1}.
    static constexpr auto first_n(std::size_t n) -> VertexSet
    {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
    }

    static constexpr auto single(Vertex v) -> VertexSet { return VertexSet{std::uint64_t{1} << v}; }

    constexpr auto bits() const -> std::uint64_t { return _bits; }
    constexpr auto contains(Vertex v) const -> bool { return v < 64 && ((_bits >> v) & 1U); }
    constexpr auto insert(Vertex v) -> void { _bits |= std::uint64_t{1} << v; }
    constexpr auto erase(Vertex v) -> void { _bits &= ~(std::uint64_t{1} << v); }
    constexpr auto size() const -> std::size_t { return static_cast<std::size_t>(std::popcount(_bits)); }
    constexpr auto empty() const -> bool { return _bits == 0; }
    constexpr auto front() const -> Vertex { return static_cast<Vertex>(std::countr_zero(_bits)); }
    constexpr auto subset_of(VertexSet other) const -> bool { return (_bits & ~other._bits) == 0; }
    constexpr auto intersects(VertexSet other) const -> bool { return (_bits & other._bits) != 0; }

    constexpr auto begin() const -> iterator { return iterator{_bits}; }
    constexpr auto end() const -> iterator { return iterator{0}; }

    auto to_vector() const -> std::vector<Vertex> { return {begin(), end()}; }

    friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits | b._bits}; }
    friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & b._bits}; }
    friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & ~b._bits}; }
    constexpr auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
    constexpr auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
    constexpr auto operator-=(VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }

    /// Orders by the underlying word, which is the order used for every
    /// "sorted canonical" list of vertex sets in the library.
    constexpr auto operator<=>(const VertexSet &) const = default;

private:
    std::uint64_t _bits = 0;
};

}
