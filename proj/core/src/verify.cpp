#include <gammahom/connectivity.hpp>
#include <gammahom/error.hpp>
#include <gammahom/parallel.hpp>
#include <gammahom/quotient.hpp>
#include <gammahom/verify.hpp>

#include <algorithm>
#include <map>

namespace gammahom {

namespace {
    auto is_poset_kind(ClassKind kind) -> bool { return kind == ClassKind::Posets || kind == ClassKind::StrictPosets; }

    auto uses_hulls(const Digraph & r, const ClassSpec & c) -> bool { return is_poset_kind(c.kind) && satisfies(r, c.kind); }

    auto shape_of(const QuotientDigraph & q, bool hull) -> Digraph { return hull ? transitive_quotient(q) : q.digraph(); }

    auto count_report(DominanceMode mode, const Digraph & r, const Digraph & s, const ClassSpec & c,
        const VerifyOptions & options) -> DominanceReport
    {
        auto hom_mode = mode == DominanceMode::StrictDominance ? HomMode::Strict : HomMode::All;
        auto catalog = generate(c, options.budget, options.workers);

        std::vector<std::pair<Count, Count>> counts(catalog.size());
        parallel_for(catalog.size(), options.workers, [&](std::size_t i) {
            counts[i] = {count_homs(catalog[i], r, hom_mode), count_homs(catalog[i], s, hom_mode)};
        });

        DominanceReport report{r, s, c, mode};
        report.tests = catalog.size();
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            auto & [rc, sc] = counts[i];
            if (report.holds && rc > sc) {
                report.holds = false;
                report.witness = DominanceWitness{catalog[i], rc, sc, std::nullopt};
            }
            if (options.with_table)
                report.table.push_back({catalog[i], rc, sc});
        }
        return report;
    }

    auto require_quotient_closed(const Digraph & r, const ClassSpec & c) -> void
    {
        switch (c.kind) {
        case ClassKind::AllDigraphs:
        case ClassKind::Undirected:
            return;
        case ClassKind::Ta:
        case ClassKind::Posets:
        case ClassKind::StrictPosets:
        case ClassKind::OddCycleFree:
            if (c.max_arcs)
                throw Error{Errc::ClassNotQuotientClosed,
                    std::string{to_string(c.kind)} + " is not closed under quotients with an arc bound"};
            if (! satisfies(r, c.kind))
                throw Error{Errc::ClassNotQuotientClosed,
                    std::string{to_string(c.kind)} + " is closed under quotients only for R inside the class"};
            return;
        }
    }

    struct GammaOutcome {
        bool holds = true;
        VertexMap xi = VertexMap::identity(1);
        std::size_t r_theta = 0;
        std::size_t s_theta = 0;
    };

    auto gamma_check_one(const Digraph & g, const Digraph & r, const Digraph & s) -> GammaOutcome
    {
        std::map<std::vector<Vertex>, std::size_t> s_classes;
        for_each_hom(g, s, HomMode::All, [&](const VertexMap & zeta) {
            ++s_classes[partition_key(g, zeta)];
            return true;
        });

        auto r_maps = list_homs(g, r, HomMode::All);
        std::vector<std::vector<Vertex>> keys;
        keys.reserve(r_maps.size());
        std::map<std::vector<Vertex>, std::size_t> r_classes;
        for (const auto & xi : r_maps) {
            keys.push_back(partition_key(g, xi));
            ++r_classes[keys.back()];
        }

        for (std::size_t i = 0; i < r_maps.size(); ++i) {
            auto rc = r_classes[keys[i]];
            auto it = s_classes.find(keys[i]);
            auto sc = it == s_classes.end() ? std::size_t{0} : it->second;
            if (rc > sc)
                return {false, r_maps[i], rc, sc};
        }
        return {};
    }
}

auto to_string(DominanceMode mode) -> std::string_view
{
    switch (mode) {
    case DominanceMode::StrictDominance:
        return "strict-dominance";
    case DominanceMode::HomDominance:
        return "hom-dominance";
    case DominanceMode::GammaLeq:
        return "gamma-leq";
    }
    return "?";
}

auto parse_dominance_mode(std::string_view name) -> std::optional<DominanceMode>
{
    for (auto mode : {DominanceMode::StrictDominance, DominanceMode::HomDominance, DominanceMode::GammaLeq})
        if (to_string(mode) == name)
            return mode;
    return std::nullopt;
}

auto quotient_closure(const Digraph & r, const ClassSpec & c, const VerifyOptions & options) -> std::vector<Digraph>
{
    auto catalog = generate(c, options.budget, options.workers);
    bool hull = uses_hulls(r, c);

    std::vector<std::map<CanonicalForm, Digraph>> found(catalog.size());
    parallel_for(catalog.size(), options.workers, [&](std::size_t i) {
        for_each_hom(catalog[i], r, HomMode::All, [&](const VertexMap & xi) {
            auto shape = shape_of(quotient_of_map(catalog[i], xi), hull);
            auto labeling = canonical_labeling(shape);
            if (! found[i].contains(labeling.form))
                found[i].emplace(labeling.form, relabeled(shape, labeling.perm));
            return true;
        });
    });

    std::map<CanonicalForm, Digraph> merged;
    for (auto & shapes : found)
        merged.merge(shapes);
    std::vector<Digraph> result;
    result.reserve(merged.size());
    for (auto & [form, g] : merged)
        result.push_back(std::move(g));
    return result;
}

auto check_strict_dominance(const Digraph & r, const Digraph & s, const ClassSpec & c, const VerifyOptions & options)
    -> DominanceReport
{
    return count_report(DominanceMode::StrictDominance, r, s, c, options);
}

auto check_hom_dominance(const Digraph & r, const Digraph & s, const ClassSpec & c, const VerifyOptions & options)
    -> DominanceReport
{
    return count_report(DominanceMode::HomDominance, r, s, c, options);
}

auto check_gamma_leq(const Digraph & r, const Digraph & s, const ClassSpec & c, const VerifyOptions & options)
    -> DominanceReport
{
    require_quotient_closed(r, c);
    auto catalog = generate(c, options.budget, options.workers);

    std::vector<GammaOutcome> outcomes(catalog.size());
    parallel_for(catalog.size(), options.workers,
        [&](std::size_t i) { outcomes[i] = gamma_check_one(catalog[i], r, s); });

    DominanceReport report{r, s, c, DominanceMode::GammaLeq};
    report.tests = catalog.size();
    for (std::size_t i = 0; i < catalog.size(); ++i)
        if (! outcomes[i].holds) {
            report.holds = false;
            report.witness = DominanceWitness{catalog[i], outcomes[i].r_theta, outcomes[i].s_theta, outcomes[i].xi};
            break;
        }

    if (options.with_table) {
        auto shapes = quotient_closure(r, c, options);
        report.table.resize(shapes.size(), CountRow{Digraph{1}, 0, 0});
        parallel_for(shapes.size(), options.workers, [&](std::size_t i) {
            report.table[i] = {shapes[i], count_homs(shapes[i], r, HomMode::Strict), count_homs(shapes[i], s, HomMode::Strict)};
        });
    }
    return report;
}

auto check_dominance(DominanceMode mode, const Digraph & r, const Digraph & s, const ClassSpec & c,
    const VerifyOptions & options) -> DominanceReport
{
    switch (mode) {
    case DominanceMode::StrictDominance:
        return check_strict_dominance(r, s, c, options);
    case DominanceMode::HomDominance:
        return check_hom_dominance(r, s, c, options);
    case DominanceMode::GammaLeq:
        return check_gamma_leq(r, s, c, options);
    }
    throw Error{Errc::InvalidSpec, "unknown dominance mode"};
}

auto assemble_scheme(const Digraph & r, const Digraph & s, const ClassSpec & c, const VerifyOptions & options)
    -> SchemeAssembly
{
    SchemeAssembly scheme{r, s, c};
    scheme._transitive = uses_hulls(r, c);
    auto shapes = quotient_closure(r, c, options);

    scheme._tables.resize(shapes.size(), SchemeAssembly::Table{Digraph{1}, {}, {}});
    parallel_for(shapes.size(), options.workers, [&](std::size_t i) {
        scheme._tables[i] = {shapes[i], list_homs(shapes[i], r, HomMode::Strict), list_homs(shapes[i], s, HomMode::Strict)};
    });
    for (auto & table : scheme._tables) {
        if (table.domain.size() > table.image.size())
            throw Error{Errc::DominanceFails,
                "shape with " + std::to_string(table.shape.size()) + " vertices has "
                    + std::to_string(table.domain.size()) + " strict maps into R but only "
                    + std::to_string(table.image.size()) + " into S"};
        table.image.resize(table.domain.size(), VertexMap::identity(1));
        scheme._forms.push_back(canonical_form(table.shape));
    }
    return scheme;
}

auto SchemeAssembly::apply(const Digraph & g, const VertexMap & xi) const -> VertexMap
{
    if (! is_homomorphism(g, _r, xi))
        throw Error{Errc::NotAHomomorphism, "apply needs ξ ∈ ℋ(G,R)"};
    auto q = quotient_of_map(g, xi);
    auto labeling = canonical_labeling(shape_of(q, _transitive));

    auto at = std::lower_bound(_forms.begin(), _forms.end(), labeling.form);
    if (at == _forms.end() || *at != labeling.form)
        throw Error{Errc::ClassNotQuotientClosed, "the quotient of ξ lies outside the assembled class"};
    const auto & table = _tables[static_cast<std::size_t>(at - _forms.begin())];

    auto iota = q.iota();
    std::vector<Vertex> moved(iota.size());
    for (Vertex b = 0; b < iota.size(); ++b)
        moved[labeling.perm[b]] = iota(b);
    VertexMap canonical_iota{std::move(moved), _r.size()};

    auto entry = std::lower_bound(table.domain.begin(), table.domain.end(), canonical_iota);
    if (entry == table.domain.end() || *entry != canonical_iota)
        throw Error{Errc::NotStrictHom, "ι_ξ is not strict"};
    const auto & sigma = table.image[static_cast<std::size_t>(entry - table.domain.begin())];

    std::vector<Vertex> images(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        images[v] = sigma(labeling.perm[q.block_of(v)]);
    return VertexMap{std::move(images), _s.size()};
}

auto hom_vector(const Digraph & h, const ClassSpec & c, HomMode mode, const VerifyOptions & options)
    -> std::vector<Count>
{
    auto catalog = generate(c, options.budget, options.workers);
    std::vector<Count> result(catalog.size());
    parallel_for(catalog.size(), options.workers, [&](std::size_t i) { result[i] = count_homs(catalog[i], h, mode); });
    return result;
}

auto lovasz_distinguish(const ClassSpec & objects, const ClassSpec & tests, HomMode mode,
    const VerifyOptions & options) -> DistinguishReport
{
    DistinguishReport report{objects, tests, mode};
    report.object_catalog = generate(objects, options.budget, options.workers);
    report.test_catalog = generate(tests, options.budget, options.workers);

    const auto & objs = report.object_catalog;
    const auto & probes = report.test_catalog;
    std::vector<std::vector<Count>> vectors(objs.size(), std::vector<Count>(probes.size()));
    parallel_for(objs.size() * probes.size(), options.workers, [&](std::size_t k) {
        auto i = k / probes.size();
        auto j = k % probes.size();
        vectors[i][j] = count_homs(probes[j], objs[i], mode);
    });

    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j) {
            PairDistinction pair{i, j, std::nullopt};
            for (std::size_t t = 0; t < probes.size(); ++t)
                if (vectors[i][t] != vectors[j][t]) {
                    pair.test_index = t;
                    break;
                }
            report.all_distinguished = report.all_distinguished && pair.test_index.has_value();
            report.pairs.push_back(pair);
        }
    return report;
}

auto lovasz_distinguish_escalating(const ClassSpec & objects, const ClassSpec & tests, HomMode mode,
    std::size_t max_test_vertices, const VerifyOptions & options) -> DistinguishReport
{
    auto probe = tests;
    auto report = lovasz_distinguish(objects, probe, mode, options);
    while (! report.all_distinguished && probe.max_vertices < max_test_vertices) {
        ++probe.max_vertices;
        report = lovasz_distinguish(objects, probe, mode, options);
    }
    return report;
}

auto sum_compatibility_check(const Digraph & r1, const Digraph & s1, const Digraph & r2, const Digraph & s2,
    const ClassSpec & c, const VerifyOptions & options) -> bool
{
    auto plain = options;
    plain.with_table = false;
    if (! check_strict_dominance(r1, s1, c, plain).holds || ! check_strict_dominance(r2, s2, c, plain).holds)
        throw Error{Errc::PremiseFails, "the summands are not dominated over the class"};

    bool ordinal = c.kind == ClassKind::Posets;
    auto r = ordinal ? ordinal_sum(r1, r2) : direct_sum(r1, r2);
    auto s = ordinal ? ordinal_sum(s1, s2) : direct_sum(s1, s2);
    return check_strict_dominance(r, s, c, plain).holds && check_hom_dominance(r, s, c, plain).holds;
}

auto strict_count_by_components(const Digraph & g, const Digraph & h1, const Digraph & h2) -> Count
{
    Count product = 1;
    for (auto component : connected_components(g)) {
        auto part = induced(g, component);
        product *= count_homs(part, h1, HomMode::Strict) + count_homs(part, h2, HomMode::Strict);
    }
    return product;
}

auto upsets(const Digraph & p) -> std::vector<VertexSet>
{
    auto n = p.size();
    if (n > 24)
        throw Error{Errc::TooLarge, "upset enumeration is limited to 24 vertices"};
    std::vector<VertexSet> result;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet u{bits};
        bool closed = true;
        for (auto v : u)
            if (! p.out_row(v).subset_of(u)) {
                closed = false;
                break;
            }
        if (closed)
            result.push_back(u);
    }
    return result;
}

auto strict_count_by_upsets(const Digraph & p, const Digraph & q1, const Digraph & q2) -> Count
{
    Count total = 0;
    for (auto up : upsets(p)) {
        auto down = p.vertices() - up;
        Count lower = down.empty() ? Count{1} : count_homs(induced(p, down), q1, HomMode::Strict);
        Count upper = up.empty() ? Count{1} : count_homs(induced(p, up), q2, HomMode::Strict);
        total += lower * upper;
    }
    return total;
}

}
