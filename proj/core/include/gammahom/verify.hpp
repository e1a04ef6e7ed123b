#pragma once

#include <gammahom/catalog.hpp>
#include <gammahom/digraph.hpp>
#include <gammahom/hom.hpp>
#include <gammahom/vertex_map.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace gammahom {

// Every verdict in this module is relative to an explicit bounded ClassSpec:
// it certifies (or refutes) the inequality family over that finite catalog
// only, never over the unbounded class.

struct VerifyOptions {
    unsigned workers = 1;
    /// Record the per-test count table in reports.
    bool with_table = false;
    CatalogBudget budget = CatalogBudget::from_env();
};

enum class DominanceMode {
    /// #𝒮(G,R) ≤ #𝒮(G,S) for every catalog G.
    StrictDominance,
    /// #ℋ(G,R) ≤ #ℋ(G,S) for every catalog G.
    HomDominance,
    /// #Θ_{G,R}(ξ) ≤ #Θ_{G,S}(ξ) for every catalog G and ξ ∈ ℋ(G,R).
    GammaLeq,
};

auto to_string(DominanceMode mode) -> std::string_view;
auto parse_dominance_mode(std::string_view name) -> std::optional<DominanceMode>;

struct CountRow {
    Digraph g;
    Count r_count;
    Count s_count;
};

struct DominanceWitness {
    Digraph g;
    Count r_count;
    Count s_count;
    /// GammaLeq only: the lexicographically first ξ whose Θ-class is too large.
    std::optional<VertexMap> xi;
};

struct DominanceReport {
    Digraph r;
    Digraph s;
    ClassSpec spec;
    DominanceMode mode = DominanceMode::StrictDominance;
    bool holds = true;
    /// Number of catalog digraphs examined.
    std::size_t tests = 0;
    /// Earliest failing catalog entry in canonical order.
    std::optional<DominanceWitness> witness{};
    /// Count modes: one row per catalog G. GammaLeq: one row per quotient
    /// shape 𝔤 with #𝒮(𝔤,R) and #𝒮(𝔤,S).
    std::vector<CountRow> table{};
};

/// 𝔊(R) over the catalog of c, up to isomorphism and in canonical order. For
/// poset kinds with R inside the kind the shapes are the transitive hulls
/// 𝒯(ξ); otherwise they are the quotients 𝒢(ξ).
auto quotient_closure(const Digraph & r, const ClassSpec & c, const VerifyOptions & options = {})
    -> std::vector<Digraph>;

auto check_strict_dominance(const Digraph & r, const Digraph & s, const ClassSpec & c,
    const VerifyOptions & options = {}) -> DominanceReport;

auto check_hom_dominance(const Digraph & r, const Digraph & s, const ClassSpec & c,
    const VerifyOptions & options = {}) -> DominanceReport;

/// Decides R ⊑_Γ S over the catalog of c by comparing Θ-class sizes. The
/// class must be closed under the quotient construction: digraphs and
/// undirected graphs with any bound; ta, posets, strict posets and
/// odd-cycle-free graphs with a vertex bound only and R inside the kind.
/// Throws ClassNotQuotientClosed otherwise.
auto check_gamma_leq(const Digraph & r, const Digraph & s, const ClassSpec & c,
    const VerifyOptions & options = {}) -> DominanceReport;

auto check_dominance(DominanceMode mode, const Digraph & r, const Digraph & s, const ClassSpec & c,
    const VerifyOptions & options = {}) -> DominanceReport;

/// A strong Γ-scheme assembled from one injection σ_𝔤 : 𝒮(𝔤,R) → 𝒮(𝔤,S)
/// per quotient shape: ρ_G(ξ) = σ_{𝒢(ξ)}(ι_ξ) ∘ π_ξ. σ_𝔤 pairs the i-th
/// member of 𝒮(𝔤,R) with the i-th member of 𝒮(𝔤,S), both in lexicographic
/// order.
class SchemeAssembly {
public:
    struct Table {
        Digraph shape;
        std::vector<VertexMap> domain;
        std::vector<VertexMap> image;
    };

    auto source() const -> const Digraph & { return _r; }
    auto target() const -> const Digraph & { return _s; }
    auto spec() const -> const ClassSpec & { return _spec; }
    auto uses_transitive_shapes() const -> bool { return _transitive; }
    auto tables() const -> const std::vector<Table> & { return _tables; }

    /// ρ_G(ξ). Throws NotAHomomorphism unless ξ ∈ ℋ(G,R) and
    /// ClassNotQuotientClosed if ξ's shape has no table.
    auto apply(const Digraph & g, const VertexMap & xi) const -> VertexMap;

private:
    friend auto assemble_scheme(const Digraph & r, const Digraph & s, const ClassSpec & c,
        const VerifyOptions & options) -> SchemeAssembly;

    SchemeAssembly(Digraph r, Digraph s, ClassSpec spec) : _r(std::move(r)), _s(std::move(s)), _spec(spec) {}

    Digraph _r;
    Digraph _s;
    ClassSpec _spec;
    bool _transitive = false;
    std::vector<CanonicalForm> _forms;
    std::vector<Table> _tables;
};

/// Throws DominanceFails when some shape has #𝒮(𝔤,R) > #𝒮(𝔤,S).
auto assemble_scheme(const Digraph & r, const Digraph & s, const ClassSpec & c, const VerifyOptions & options = {})
    -> SchemeAssembly;

/// The truncated Lovász vector (#mode(G,H)) over the catalog of c.
auto hom_vector(const Digraph & h, const ClassSpec & c, HomMode mode, const VerifyOptions & options = {})
    -> std::vector<Count>;

struct PairDistinction {
    std::size_t first = 0;
    std::size_t second = 0;
    /// Index into the test catalog of the earliest G separating the pair.
    std::optional<std::size_t> test_index;
};

struct DistinguishReport {
    ClassSpec objects;
    ClassSpec tests;
    HomMode mode = HomMode::All;
    std::vector<Digraph> object_catalog{};
    std::vector<Digraph> test_catalog{};
    /// Every unordered pair of object representatives, in (first, second) order.
    std::vector<PairDistinction> pairs{};
    bool all_distinguished = true;
};

auto lovasz_distinguish(const ClassSpec & objects, const ClassSpec & tests, HomMode mode,
    const VerifyOptions & options = {}) -> DistinguishReport;

/// Retries with the test bound raised by one until every pair is separated
/// or max_test_vertices is reached; returns the last report.
auto lovasz_distinguish_escalating(const ClassSpec & objects, const ClassSpec & tests, HomMode mode,
    std::size_t max_test_vertices, const VerifyOptions & options = {}) -> DistinguishReport;

/// Checks R₁ ⊑ S₁ and R₂ ⊑ S₂ (as strict dominance over c), then verifies the
/// sum conclusion over c by counting, for both strict and hom dominance. Poset
/// classes use the ordinal sum, all other kinds the direct sum. Throws
/// PremiseFails when a premise does not hold.
auto sum_compatibility_check(const Digraph & r1, const Digraph & s1, const Digraph & r2, const Digraph & s2,
    const ClassSpec & c, const VerifyOptions & options = {}) -> bool;

/// #𝒮(G, H₁+H₂) as ∏ over components G′ of G of #𝒮(G′,H₁) + #𝒮(G′,H₂).
auto strict_count_by_components(const Digraph & g, const Digraph & h1, const Digraph & h2) -> Count;

/// Upsets of a poset (U with u ∈ U, u ≤ w ⇒ w ∈ U), empty set and V(P)
/// included, sorted by bit pattern.
auto upsets(const Digraph & p) -> std::vector<VertexSet>;

/// #𝒮(P, Q₁⊕Q₂) as Σ over upsets U of #𝒮(P|V∖U, Q₁) · #𝒮(P|U, Q₂), where a
/// restriction to the empty set contributes a factor of one.
auto strict_count_by_upsets(const Digraph & p, const Digraph & q1, const Digraph & q2) -> Count;

}
