#pragma once

#include <gammahom/digraph.hpp>
#include <gammahom/vertex_map.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace gammahom {

/// Exact, unbounded homomorphism counts.
using Count = boost::multiprecision::cpp_int;

enum class HomMode {
    /// ℋ(G,H): arcs go to arcs.
    All,
    /// 𝒮(G,H): additionally, proper arcs go to proper arcs.
    Strict,
    /// ℋ(G*,H*): loops are dropped on both sides first.
    LoopsRemoved,
};

auto to_string(HomMode mode) -> std::string_view;
auto parse_hom_mode(std::string_view name) -> std::optional<HomMode>;

/// Throws ArityMismatch if f's domain is not V(G) or its codomain is not V(H).
auto is_homomorphism(const Digraph & g, const Digraph & h, const VertexMap & f, HomMode mode = HomMode::All) -> bool;

/// Calls visit for every member of the mode's homomorphism set. Visiting
/// order follows the search, not lexicographic order. Returning false from
/// visit stops the search.
auto for_each_hom(const Digraph & g, const Digraph & h, HomMode mode,
    const std::function<bool(const VertexMap &)> & visit) -> void;

/// Counts without materialising. With workers > 1 the top level of the search
/// tree is split across threads; the total does not depend on the split.
auto count_homs(const Digraph & g, const Digraph & h, HomMode mode, unsigned workers = 1) -> Count;

/// The homomorphism set of (G, H, mode). Counting and materialisation are
/// both lazy and cached; materialised maps are in lexicographic order. Not
/// safe for concurrent first use.
class HomSet {
public:
    HomSet(Digraph g, Digraph h, HomMode mode);

    auto source() const -> const Digraph & { return _g; }
    auto target() const -> const Digraph & { return _h; }
    auto mode() const -> HomMode { return _mode; }

    auto count() const -> const Count &;
    auto maps() const -> const std::vector<VertexMap> &;
    auto contains(const VertexMap & f) const -> bool;

    auto begin() const { return maps().begin(); }
    auto end() const { return maps().end(); }

private:
    Digraph _g;
    Digraph _h;
    HomMode _mode;
    mutable std::optional<Count> _count;
    mutable std::optional<std::vector<VertexMap>> _maps;
};

auto enumerate_homs(const Digraph & g, const Digraph & h, HomMode mode) -> HomSet;

/// Materialised, lexicographically sorted member list.
auto list_homs(const Digraph & g, const Digraph & h, HomMode mode) -> std::vector<VertexMap>;

/// True iff no proper arc of H with both ends in `on` collapses under sigma.
/// For a homomorphism sigma this is strictness of sigma restricted to H|on.
auto is_strict_on(const Digraph & h, const VertexMap & sigma, VertexSet on) -> bool;

}
