#pragma once

#include <gammahom/digraph.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gammahom {

/// Largest vertex count for which canonical forms are computed (by trying
/// every vertex permutation).
inline constexpr std::size_t canonical_max_vertices = 8;

/// The lexicographically minimal adjacency-matrix bit string over all vertex
/// permutations. Bit (i, j) of the row-major matrix sits at position
/// n*n - 1 - (i*n + j) of code, so numeric order on code is lexicographic
/// order on the bit string.
struct CanonicalForm {
    std::size_t n = 0;
    std::uint64_t code = 0;

    auto operator<=>(const CanonicalForm &) const = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// perm[v] is the canonical label of v.
    std::vector<Vertex> perm;
};

/// Throws TooLarge beyond canonical_max_vertices.
auto canonical_form(const Digraph & g) -> CanonicalForm;
auto canonical_labeling(const Digraph & g) -> CanonicalLabeling;
/// G relabelled so that its matrix is the canonical bit string.
auto canonical_relabel(const Digraph & g) -> Digraph;
auto is_isomorphic(const Digraph & g, const Digraph & h) -> bool;

/// Per-kind vertex caps for catalog generation. Exceeding a cap is an error.
class CatalogBudget {
public:
    /// posets 5, strict posets 5, everything else 4.
    static auto defaults() -> CatalogBudget;
    /// The defaults, with every cap replaced by GAMMAHOM_MAX_N when set.
    static auto from_env() -> CatalogBudget;

    auto cap(ClassKind kind) const -> std::size_t;
    auto with_cap(ClassKind kind, std::size_t max_n) const -> CatalogBudget;
    auto with_all_caps(std::size_t max_n) const -> CatalogBudget;

private:
    std::array<std::size_t, 6> _caps{};
};

/// One canonical representative per isomorphism class of the bounded class,
/// ordered by canonical form (vertex count first). Representatives are
/// canonically relabelled. Throws BoundTooLarge when spec exceeds the budget.
/// Results are memoized per class spec.
auto generate(const ClassSpec & spec, const CatalogBudget & budget = CatalogBudget::from_env(), unsigned workers = 1)
    -> std::vector<Digraph>;

/// Drops every memoized catalog, so the next generate() call rebuilds it.
auto clear_catalog_cache() -> void;

/// One compact JSON digraph per line.
auto export_catalog(const std::vector<Digraph> & catalog) -> std::string;

/// Parses JSON lines and checks that every entry is a canonical member of the
/// class and that entries appear in strictly increasing canonical order.
/// Throws ParseError on any violation.
auto import_catalog(std::istream & in, const ClassSpec & spec) -> std::vector<Digraph>;

}
