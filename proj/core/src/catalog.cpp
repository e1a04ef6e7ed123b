#include <gammahom/catalog.hpp>
#include <gammahom/error.hpp>
#include <gammahom/io.hpp>
#include <gammahom/parallel.hpp>

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace gammahom {

namespace {
    auto kind_index(ClassKind kind) -> std::size_t { return static_cast<std::size_t>(kind); }

    auto encode(const Digraph & g, std::span<const Vertex> perm) -> std::uint64_t
    {
        auto n = g.size();
        auto top = n * n - 1;
        std::uint64_t code = 0;
        for (Vertex u = 0; u < n; ++u)
            for (auto v : g.out_row(u))
                code |= std::uint64_t{1} << (top - (perm[u] * n + perm[v]));
        return code;
    }

    using Key = std::tuple<ClassKind, std::size_t, std::size_t>;

    std::mutex cache_mutex;
    std::map<Key, std::vector<Digraph>> cache;

    auto extend(const Digraph & parent, ClassKind kind, std::optional<std::size_t> max_arcs)
        -> std::vector<std::pair<CanonicalForm, Digraph>>
    {
        auto k = parent.size();
        auto base_rows = parent.out_rows();
        bool symmetric = kind == ClassKind::Undirected || kind == ClassKind::OddCycleFree;
        std::uint64_t pattern_count = std::uint64_t{1} << k;
        auto new_bit = std::uint64_t{1} << k;

        std::vector<std::pair<CanonicalForm, Digraph>> found;
        std::vector<std::uint64_t> rows(k + 1);
        for (int loop = 0; loop < 2; ++loop)
            for (std::uint64_t out = 0; out < pattern_count; ++out)
                for (std::uint64_t in = 0; in < pattern_count; ++in) {
                    if (symmetric && in != out)
                        continue;
                    for (std::size_t v = 0; v < k; ++v)
                        rows[v] = base_rows[v] | (((in >> v) & 1U) ? new_bit : 0);
                    rows[k] = out | (loop ? new_bit : 0);
                    auto g = Digraph::from_out_rows(rows);
                    if (max_arcs && g.arc_count() > *max_arcs)
                        continue;
                    if (! satisfies(g, kind))
                        continue;
                    auto labeling = canonical_labeling(g);
                    found.emplace_back(labeling.form, relabeled(g, labeling.perm));
                }
        return found;
    }

    auto build(const ClassSpec & spec, unsigned workers) -> std::vector<Digraph>
    {
        std::map<CanonicalForm, Digraph> level;
        for (int loop = 0; loop < 2; ++loop) {
            auto g = loop ? Digraph{1, {{0, 0}}} : Digraph{1};
            if (is_member(g, spec))
                level.emplace(canonical_form(g), g);
        }

        std::vector<Digraph> result;
        for (std::size_t n = 1; n <= spec.max_vertices; ++n) {
            for (auto & [form, g] : level)
                result.push_back(g);
            if (n == spec.max_vertices)
                break;

            std::vector<Digraph> parents;
            for (auto & [form, g] : level)
                parents.push_back(g);
            std::vector<std::vector<std::pair<CanonicalForm, Digraph>>> found(parents.size());
            parallel_for(parents.size(), workers,
                [&](std::size_t i) { found[i] = extend(parents[i], spec.kind, spec.max_arcs); });

            level.clear();
            for (auto & batch : found)
                for (auto & [form, g] : batch)
                    level.try_emplace(form, std::move(g));
        }
        return result;
    }
}

auto canonical_labeling(const Digraph & g) -> CanonicalLabeling
{
    auto n = g.size();
    if (n > canonical_max_vertices)
        throw Error{Errc::TooLarge, "canonical forms are limited to " + std::to_string(canonical_max_vertices)
                + " vertices, got " + std::to_string(n)};

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    CanonicalLabeling best{{n, encode(g, perm)}, perm};
    while (std::next_permutation(perm.begin(), perm.end())) {
        auto code = encode(g, perm);
        if (code < best.form.code) {
            best.form.code = code;
            best.perm = perm;
        }
    }
    return best;
}

auto canonical_form(const Digraph & g) -> CanonicalForm { return canonical_labeling(g).form; }

auto canonical_relabel(const Digraph & g) -> Digraph { return relabeled(g, canonical_labeling(g).perm); }

auto is_isomorphic(const Digraph & g, const Digraph & h) -> bool
{
    if (g.size() != h.size() || g.arc_count() != h.arc_count())
        return false;
    return canonical_form(g) == canonical_form(h);
}

auto CatalogBudget::defaults() -> CatalogBudget
{
    CatalogBudget budget;
    budget._caps.fill(4);
    budget._caps[kind_index(ClassKind::Posets)] = 5;
    budget._caps[kind_index(ClassKind::StrictPosets)] = 5;
    return budget;
}

auto CatalogBudget::from_env() -> CatalogBudget
{
    auto budget = defaults();
    if (const char * value = std::getenv("GAMMAHOM_MAX_N")) {
        char * end = nullptr;
        auto parsed = std::strtoul(value, &end, 10);
        if (end == value || *end != '\0' || parsed == 0 || parsed > canonical_max_vertices)
            throw Error{Errc::BoundTooLarge, std::string{"GAMMAHOM_MAX_N must be an integer in [1, "}
                    + std::to_string(canonical_max_vertices) + "], got '" + value + "'"};
        budget = budget.with_all_caps(parsed);
    }
    return budget;
}

auto CatalogBudget::cap(ClassKind kind) const -> std::size_t { return _caps[kind_index(kind)]; }

auto CatalogBudget::with_cap(ClassKind kind, std::size_t max_n) const -> CatalogBudget
{
    auto copy = *this;
    copy._caps[kind_index(kind)] = std::min(max_n, canonical_max_vertices);
    return copy;
}

auto CatalogBudget::with_all_caps(std::size_t max_n) const -> CatalogBudget
{
    auto copy = *this;
    copy._caps.fill(std::min(max_n, canonical_max_vertices));
    return copy;
}

auto generate(const ClassSpec & spec, const CatalogBudget & budget, unsigned workers) -> std::vector<Digraph>
{
    if (spec.max_vertices == 0)
        throw Error{Errc::BoundTooLarge, "max_vertices must be at least 1"};
    if (spec.max_vertices > budget.cap(spec.kind))
        throw Error{Errc::BoundTooLarge, "catalog of " + std::string{to_string(spec.kind)} + " up to "
                + std::to_string(spec.max_vertices) + " vertices exceeds the cap of "
                + std::to_string(budget.cap(spec.kind))};

    Key key{spec.kind, spec.max_vertices, spec.max_arcs.value_or(SIZE_MAX)};
    {
        std::lock_guard lock{cache_mutex};
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    auto result = build(spec, workers);
    std::lock_guard lock{cache_mutex};
    return cache.try_emplace(key, std::move(result)).first->second;
}

auto clear_catalog_cache() -> void
{
    std::lock_guard lock{cache_mutex};
    cache.clear();
}

auto export_catalog(const std::vector<Digraph> & catalog) -> std::string
{
    std::string out;
    for (const auto & g : catalog) {
        out += to_json_string(g);
        out += '\n';
    }
    return out;
}

auto import_catalog(std::istream & in, const ClassSpec & spec) -> std::vector<Digraph>
{
    std::vector<Digraph> result;
    std::optional<CanonicalForm> previous;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        auto where = "catalog line " + std::to_string(line_number) + ": ";
        auto g = digraph_from_json_string(line);
        if (! is_member(g, spec))
            throw Error{Errc::ParseError, where + "not a member of the requested class"};
        auto labeling = canonical_labeling(g);
        if (relabeled(g, labeling.perm) != g)
            throw Error{Errc::ParseError, where + "digraph is not canonically labelled"};
        if (previous && ! (*previous < labeling.form))
            throw Error{Errc::ParseError, where + "entries are not in strictly increasing canonical order"};
        previous = labeling.form;
        result.push_back(std::move(g));
    }
    return result;
}

}
