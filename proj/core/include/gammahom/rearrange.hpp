#pragma once

#include <gammahom/digraph.hpp>
#include <gammahom/vertex_map.hpp>

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace gammahom {

/// Input of the rearrangement construction: the arcs between M and X are
/// replaced by their β-translates between M and Y.
struct RearrangementSpec {
    Digraph r{1};
    VertexSet x;
    VertexSet y;
    VertexSet m;
    /// β as (x, β(x)) pairs, sorted by x.
    std::vector<std::pair<Vertex, Vertex>> beta;

    /// β(v). Throws VertexNotInSubset when v has no image.
    auto beta_of(Vertex v) const -> Vertex;
    /// β⁻¹(w). Throws VertexNotInSubset when w has no unique pre-image.
    auto beta_inverse(Vertex w) const -> Vertex;

    auto operator==(const RearrangementSpec &) const -> bool = default;
};

enum class Violation {
    VertexOutOfRange,
    /// X ∩ M ≠ ∅.
    XMeetsM,
    /// M ∩ Y ≠ ∅.
    MMeetsY,
    /// Some m ∈ M is adjacent to some y ∈ Y.
    MAdjacentToY,
    /// β does not assign exactly one image in Y to each x ∈ X.
    BetaNotAMap,
    /// β is not a bijection X → Y.
    BetaNotBijective,
    /// β is not a homomorphism R|X → R|Y.
    BetaNotHomomorphism,
    /// N^in(x)∖M ⊄ N^in(β(x)) or N^out(x)∖M ⊄ N^out(β(x)) for some x.
    NeighborhoodNotInherited,
    /// Poset mode: some walk leaves X and comes back.
    XNotConvex,
    /// Poset mode: a walk runs from M to Y.
    WalkFromMToY,
    /// Poset mode: a walk runs from Y to M.
    WalkFromYToM,
};

auto to_string(Violation violation) -> std::string_view;

struct ValidationReport {
    bool poset_mode = false;
    /// Every violated condition, in enum order.
    std::vector<Violation> violations;

    auto valid() const -> bool { return violations.empty(); }
    auto has(Violation v) const -> bool;
};

/// Never throws; violations are reported as data. Poset mode adds the
/// convexity and walk conditions.
auto validate_spec(const RearrangementSpec & spec, bool poset_mode = false) -> ValidationReport;

struct RearrangementResult {
    Digraph s{1};
    /// A(S) = A_r ∪ A_d ∪ A_u, each sorted.
    std::vector<Arc> a_r;
    std::vector<Arc> a_d;
    std::vector<Arc> a_u;
    /// The transitive hull of S, set by poset_rearrange.
    std::optional<Digraph> t;
};

/// Builds S. Throws InvalidSpec listing the violations when the spec fails
/// validation (without the poset conditions).
auto build_S(const RearrangementSpec & spec) -> RearrangementResult;

enum class Side { R, S };

/// U_ξ (side R: ξ ∈ 𝒮(G,R), image in X) or U′_ζ (side S: ζ ∈ 𝒮(G,S),
/// image in Y), in both cases with a neighbour mapped into M. Throws
/// NotStrictHom when the map is not strict into the side's digraph.
auto exceptional_set(const Digraph & g, const VertexMap & map, Side side, const RearrangementSpec & spec,
    const RearrangementResult & result) -> VertexSet;

/// ρ_G(ξ): β∘ξ on U_ξ, ξ elsewhere. Throws InvalidSpec for an invalid spec
/// and NotStrictHom unless ξ ∈ 𝒮(G,R).
auto rho_apply(const Digraph & g, const VertexMap & xi, const RearrangementSpec & spec,
    const RearrangementResult & result) -> VertexMap;

/// The inverse of rho_apply: β⁻¹∘ζ on U′_ζ, ζ elsewhere. Throws
/// NotStrictHom unless ζ ∈ 𝒮(G,S).
auto rho_invert(const Digraph & g, const VertexMap & zeta, const RearrangementSpec & spec,
    const RearrangementResult & result) -> VertexMap;

/// build_S for a poset R under the poset-mode conditions, with T filled in.
/// Throws InvalidSpec otherwise.
auto poset_rearrange(const RearrangementSpec & spec) -> RearrangementResult;

enum class ArcClass { Retained, Down, Up };

auto to_string(ArcClass c) -> std::string_view;

struct KReport {
    /// Positions i (1-based) with z_{i-1}z_i ∉ A_r.
    std::vector<std::size_t> k;
    /// The class of each of those arcs.
    std::vector<ArcClass> classes;

    /// #K ≤ 2, and for #K = 2 the first arc lies in A_d and the second in A_u.
    auto conforms() const -> bool;
};

/// Throws NotAWalk if the sequence is empty or some step is not an arc of S.
auto walk_K_analysis(const RearrangementResult & result, std::span<const Vertex> walk) -> KReport;

/// The undirected construction on a symmetric R: every edge meeting both M
/// and X becomes (e ∩ M) ∪ β[e ∩ X]. Throws NotSymmetric and InvalidSpec.
auto undirected_rearrange(const RearrangementSpec & spec) -> Digraph;

/// Every spec over the given digraphs with 1 ≤ |X| ≤ max_x, |Y| = |X|, each
/// bijection β and each non-empty M disjoint from X ∪ Y that passes
/// validation in the chosen mode. Deterministic order.
auto sweep_specs(std::span<const Digraph> catalog, std::size_t max_x = 2, bool poset_mode = false)
    -> std::vector<RearrangementSpec>;

}
