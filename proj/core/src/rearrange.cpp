#include <gammahom/connectivity.hpp>
#include <gammahom/error.hpp>
#include <gammahom/hom.hpp>
#include <gammahom/rearrange.hpp>

#include <algorithm>

namespace gammahom {

namespace {
    auto describe(const ValidationReport & report) -> std::string
    {
        std::string text = "invalid rearrangement spec:";
        for (auto v : report.violations) {
            text += ' ';
            text += to_string(v);
        }
        return text;
    }

    auto require_valid(const RearrangementSpec & spec, bool poset_mode) -> void
    {
        auto report = validate_spec(spec, poset_mode);
        if (! report.valid())
            throw Error{Errc::InvalidSpec, describe(report)};
    }

    auto contains(const std::vector<Arc> & sorted, Arc arc) -> bool
    {
        return std::binary_search(sorted.begin(), sorted.end(), arc);
    }
}

auto RearrangementSpec::beta_of(Vertex v) const -> Vertex
{
    for (auto [from, to] : beta)
        if (from == v)
            return to;
    throw Error{Errc::VertexNotInSubset, "β is undefined at " + std::to_string(v)};
}

auto RearrangementSpec::beta_inverse(Vertex w) const -> Vertex
{
    std::optional<Vertex> found;
    for (auto [from, to] : beta)
        if (to == w) {
            if (found)
                throw Error{Errc::VertexNotInSubset, "β has several pre-images of " + std::to_string(w)};
            found = from;
        }
    if (! found)
        throw Error{Errc::VertexNotInSubset, "β has no pre-image of " + std::to_string(w)};
    return *found;
}

auto to_string(Violation violation) -> std::string_view
{
    switch (violation) {
    case Violation::VertexOutOfRange:
        return "vertex-out-of-range";
    case Violation::XMeetsM:
        return "x-meets-m";
    case Violation::MMeetsY:
        return "m-meets-y";
    case Violation::MAdjacentToY:
        return "m-adjacent-to-y";
    case Violation::BetaNotAMap:
        return "beta-not-a-map";
    case Violation::BetaNotBijective:
        return "beta-not-bijective";
    case Violation::BetaNotHomomorphism:
        return "beta-not-homomorphism";
    case Violation::NeighborhoodNotInherited:
        return "neighborhood-not-inherited";
    case Violation::XNotConvex:
        return "x-not-convex";
    case Violation::WalkFromMToY:
        return "walk-from-m-to-y";
    case Violation::WalkFromYToM:
        return "walk-from-y-to-m";
    }
    return "?";
}

auto ValidationReport::has(Violation v) const -> bool
{
    return std::find(violations.begin(), violations.end(), v) != violations.end();
}

auto validate_spec(const RearrangementSpec & spec, bool poset_mode) -> ValidationReport
{
    ValidationReport report{poset_mode, {}};
    auto & out = report.violations;
    const auto & r = spec.r;
    auto all = r.vertices();

    bool in_range = spec.x.subset_of(all) && spec.y.subset_of(all) && spec.m.subset_of(all);
    for (auto [from, to] : spec.beta)
        in_range = in_range && from < r.size() && to < r.size();
    if (! in_range) {
        out.push_back(Violation::VertexOutOfRange);
        return report;
    }

    if (spec.x.intersects(spec.m))
        out.push_back(Violation::XMeetsM);
    if (spec.m.intersects(spec.y))
        out.push_back(Violation::MMeetsY);
    for (auto y : spec.y)
        if (r.neighbors(y).intersects(spec.m)) {
            out.push_back(Violation::MAdjacentToY);
            break;
        }

    bool is_map = true;
    for (auto [from, to] : spec.beta)
        is_map = is_map && spec.x.contains(from) && spec.y.contains(to);
    for (auto x : spec.x) {
        auto images = std::count_if(spec.beta.begin(), spec.beta.end(), [x](Arc p) { return p.first == x; });
        is_map = is_map && images == 1;
    }
    if (! is_map) {
        out.push_back(Violation::BetaNotAMap);
    } else {
        VertexSet image;
        for (auto [from, to] : spec.beta)
            image.insert(to);
        if (image != spec.y || image.size() != spec.x.size())
            out.push_back(Violation::BetaNotBijective);

        bool hom = true;
        for (auto a : spec.x)
            for (auto b : r.out_row(a) & spec.x)
                hom = hom && r.has_arc(spec.beta_of(a), spec.beta_of(b));
        if (! hom)
            out.push_back(Violation::BetaNotHomomorphism);

        bool inherited = true;
        for (auto x : spec.x) {
            auto b = spec.beta_of(x);
            inherited = inherited && (r.in_neighbors(x) - spec.m).subset_of(r.in_neighbors(b))
                && (r.out_neighbors(x) - spec.m).subset_of(r.out_neighbors(b));
        }
        if (! inherited)
            out.push_back(Violation::NeighborhoodNotInherited);
    }

    if (poset_mode) {
        if (! is_convex(r, spec.x))
            out.push_back(Violation::XNotConvex);
        auto hull = transitive_hull(r);
        bool m_to_y = false;
        bool y_to_m = false;
        for (auto m : spec.m) {
            m_to_y = m_to_y || hull.out_row(m).intersects(spec.y);
            y_to_m = y_to_m || hull.in_row(m).intersects(spec.y);
        }
        if (m_to_y)
            out.push_back(Violation::WalkFromMToY);
        if (y_to_m)
            out.push_back(Violation::WalkFromYToM);
    }
    return report;
}

auto build_S(const RearrangementSpec & spec) -> RearrangementResult
{
    require_valid(spec, false);
    RearrangementResult result;
    for (auto [u, v] : spec.r.arcs()) {
        if (spec.m.contains(u) && spec.x.contains(v))
            result.a_d.emplace_back(u, spec.beta_of(v));
        else if (spec.x.contains(u) && spec.m.contains(v))
            result.a_u.emplace_back(spec.beta_of(u), v);
        else
            result.a_r.emplace_back(u, v);
    }
    for (auto * part : {&result.a_d, &result.a_u}) {
        std::sort(part->begin(), part->end());
        part->erase(std::unique(part->begin(), part->end()), part->end());
    }

    std::vector<Arc> arcs = result.a_r;
    arcs.insert(arcs.end(), result.a_d.begin(), result.a_d.end());
    arcs.insert(arcs.end(), result.a_u.begin(), result.a_u.end());
    result.s = Digraph{spec.r.size(), arcs};
    return result;
}

auto exceptional_set(const Digraph & g, const VertexMap & map, Side side, const RearrangementSpec & spec,
    const RearrangementResult & result) -> VertexSet
{
    const auto & target = side == Side::R ? spec.r : result.s;
    if (map.size() != g.size() || map.codomain_size() != target.size()
        || ! is_homomorphism(g, target, map, HomMode::Strict))
        throw Error{Errc::NotStrictHom, side == Side::R ? "map is not in 𝒮(G,R)" : "map is not in 𝒮(G,S)"};

    auto anchor = side == Side::R ? spec.x : spec.y;
    VertexSet u;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (! anchor.contains(map(v)))
            continue;
        for (auto w : g.neighbors(v))
            if (spec.m.contains(map(w))) {
                u.insert(v);
                break;
            }
    }
    return u;
}

auto rho_apply(const Digraph & g, const VertexMap & xi, const RearrangementSpec & spec,
    const RearrangementResult & result) -> VertexMap
{
    require_valid(spec, false);
    auto u = exceptional_set(g, xi, Side::R, spec, result);
    std::vector<Vertex> images(xi.images().begin(), xi.images().end());
    for (auto v : u)
        images[v] = spec.beta_of(images[v]);
    return VertexMap{std::move(images), spec.r.size()};
}

auto rho_invert(const Digraph & g, const VertexMap & zeta, const RearrangementSpec & spec,
    const RearrangementResult & result) -> VertexMap
{
    auto u = exceptional_set(g, zeta, Side::S, spec, result);
    std::vector<Vertex> images(zeta.images().begin(), zeta.images().end());
    for (auto v : u)
        images[v] = spec.beta_inverse(images[v]);
    return VertexMap{std::move(images), spec.r.size()};
}

auto poset_rearrange(const RearrangementSpec & spec) -> RearrangementResult
{
    if (! is_poset(spec.r))
        throw Error{Errc::InvalidSpec, "poset rearrangement needs R to be a poset"};
    require_valid(spec, true);
    auto result = build_S(spec);
    result.t = transitive_hull(result.s);
    return result;
}

auto to_string(ArcClass c) -> std::string_view
{
    switch (c) {
    case ArcClass::Retained:
        return "A_r";
    case ArcClass::Down:
        return "A_d";
    case ArcClass::Up:
        return "A_u";
    }
    return "?";
}

auto KReport::conforms() const -> bool
{
    if (k.size() > 2)
        return false;
    return k.size() < 2 || (classes[0] == ArcClass::Down && classes[1] == ArcClass::Up);
}

auto walk_K_analysis(const RearrangementResult & result, std::span<const Vertex> walk) -> KReport
{
    if (walk.empty())
        throw Error{Errc::NotAWalk, "a walk needs at least one vertex"};
    for (auto v : walk)
        if (v >= result.s.size())
            throw Error{Errc::NotAWalk, "walk vertex " + std::to_string(v) + " is out of range"};

    KReport report;
    for (std::size_t i = 1; i < walk.size(); ++i) {
        Arc arc{walk[i - 1], walk[i]};
        if (! result.s.has_arc(arc.first, arc.second))
            throw Error{Errc::NotAWalk,
                "step " + std::to_string(i) + " (" + std::to_string(arc.first) + "," + std::to_string(arc.second)
                    + ") is not an arc of S"};
        if (contains(result.a_r, arc))
            continue;
        report.k.push_back(i);
        report.classes.push_back(contains(result.a_d, arc) ? ArcClass::Down : ArcClass::Up);
    }
    return report;
}

auto undirected_rearrange(const RearrangementSpec & spec) -> Digraph
{
    if (! spec.r.is_symmetric())
        throw Error{Errc::NotSymmetric, "undirected rearrangement needs a symmetric R"};
    require_valid(spec, false);

    std::vector<Arc> edges;
    for (auto [a, b] : underlying(spec.r).edges()) {
        if (spec.m.contains(a) && spec.x.contains(b))
            edges.emplace_back(a, spec.beta_of(b));
        else if (spec.x.contains(a) && spec.m.contains(b))
            edges.emplace_back(spec.beta_of(a), b);
        else
            edges.emplace_back(a, b);
    }
    return UndirectedGraph::from_edges(spec.r.size(), edges).as_digraph();
}

auto sweep_specs(std::span<const Digraph> catalog, std::size_t max_x, bool poset_mode) -> std::vector<RearrangementSpec>
{
    std::vector<RearrangementSpec> found;
    for (const auto & r : catalog) {
        auto n = r.size();
        auto limit = std::uint64_t{1} << n;
        for (std::uint64_t xb = 1; xb < limit; ++xb) {
            VertexSet x{xb};
            if (x.size() > max_x)
                continue;
            auto xs = x.to_vector();
            for (std::uint64_t yb = 1; yb < limit; ++yb) {
                VertexSet y{yb};
                if (y.size() != x.size())
                    continue;
                auto ys = y.to_vector();
                do {
                    auto free = r.vertices() - x - y;
                    for (std::uint64_t mb = 1; mb < limit; ++mb) {
                        VertexSet m{mb};
                        if (! m.subset_of(free))
                            continue;
                        RearrangementSpec spec{r, x, y, m, {}};
                        for (std::size_t i = 0; i < xs.size(); ++i)
                            spec.beta.emplace_back(xs[i], ys[i]);
                        if (validate_spec(spec, poset_mode).valid())
                            found.push_back(std::move(spec));
                    }
                } while (std::next_permutation(ys.begin(), ys.end()));
            }
        }
    }
    return found;
}

}
