#include "fixtures.hpp"
#include "oracles.hpp"

#include <gammahom/catalog.hpp>
#include <gammahom/error.hpp>
#include <gammahom/io.hpp>

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace gammahom;
using namespace fixtures;

namespace {
auto of_size(const std::vector<Digraph> & catalog, std::size_t n) -> std::vector<Digraph>
{
    std::vector<Digraph> out;
    for (const auto & g : catalog)
        if (g.size() == n)
            out.push_back(g);
    return out;
}
}

TEST_CASE("canonical forms")
{
    CHECK(canonical_form(c2()) == canonical_form(Digraph(2, {{0, 0}, {1, 1}, {1, 0}})));
    CHECK(canonical_form(c2()) != canonical_form(a2r()));
    auto g = Digraph(4, {{0, 1}, {1, 2}, {3, 3}, {2, 0}});
    CHECK(canonical_form(canonical_relabel(g)) == canonical_form(g));
    CHECK(canonical_relabel(canonical_relabel(g)) == canonical_relabel(g));
    CHECK_FALSE(is_isomorphic(chain3(), Digraph(3, {{0, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 2}})));
    CHECK_THROWS_AS(canonical_form(Digraph{9}), Error);
}

TEST_CASE("isomorphism agrees with brute force")
{
    auto catalog = generate({ClassKind::AllDigraphs, 3});
    for (const auto & g : catalog)
        for (const auto & h : catalog)
            CHECK(is_isomorphic(g, h) == oracle::isomorphic(g, h));
}

TEST_CASE("catalog sizes")
{
    CHECK(generate({ClassKind::Posets, 3}).size() == 8);
    CHECK(of_size(generate({ClassKind::Posets, 4}), 4).size() == 16);
    CHECK(generate({ClassKind::AllDigraphs, 1}).size() == 2);
    CHECK(of_size(generate({ClassKind::StrictPosets, 2}), 2).size() == 2);
}

TEST_CASE("catalogs are complete and irredundant by the orbit-counting oracle")
{
    // Σ over representatives of n!/|Aut| must equal the number of labelled
    // members, counted by brute force over all relations on n points.
    for (auto kind : all_class_kinds())
        for (std::size_t n = 1; n <= 4; ++n) {
            auto reps = of_size(generate({kind, 4}), n);
            std::uint64_t orbit_total = 0;
            for (const auto & g : reps) {
                CHECK(satisfies(g, kind));
                orbit_total += oracle::factorial(n) / oracle::automorphisms(g);
            }
            CAPTURE(to_string(kind));
            CAPTURE(n);
            CHECK(orbit_total == oracle::labelled_count(n, oracle::predicate(kind)));
            if (reps.size() > 200)
                continue;
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i + 1; j < reps.size(); ++j)
                    CHECK_FALSE(oracle::isomorphic(reps[i], reps[j]));
        }
}

TEST_CASE("known sequence values")
{
    CHECK(oracle::labelled_count(3, oracle::is_poset) == 19);
    CHECK(oracle::labelled_count(4, oracle::is_poset) == 219);
    CHECK(generate({ClassKind::AllDigraphs, 3}).size() == 2 + 10 + 104);
    CHECK(generate({ClassKind::Posets, 5}).size() == 1 + 2 + 5 + 16 + 63);
}

TEST_CASE("catalog order and labelling are canonical")
{
    auto catalog = generate({ClassKind::Posets, 4});
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        CHECK(canonical_relabel(catalog[i]) == catalog[i]);
        if (i > 0)
            CHECK(canonical_form(catalog[i - 1]) < canonical_form(catalog[i]));
    }
    clear_catalog_cache();
    CHECK(generate({ClassKind::Posets, 4}, CatalogBudget::defaults(), 4) == catalog);
}

TEST_CASE("strict posets are posets with loops removed")
{
    auto posets = generate({ClassKind::Posets, 4});
    auto strict = generate({ClassKind::StrictPosets, 4});
    REQUIRE(posets.size() == strict.size());
    for (std::size_t i = 0; i < posets.size(); ++i) {
        auto stripped = loops_removed(posets[i]);
        CHECK(std::any_of(strict.begin(), strict.end(), [&](const Digraph & s) { return is_isomorphic(s, stripped); }));
        CHECK(is_ta(posets[i]));
        CHECK(is_ta(strict[i]));
    }
}

TEST_CASE("arc bounds")
{
    auto bounded = generate({ClassKind::AllDigraphs, 3, 1});
    for (const auto & g : bounded)
        CHECK(g.arc_count() <= 1);
    CHECK(bounded.size() == 2 + 3 + 3);
}

TEST_CASE("budget")
{
    auto budget = CatalogBudget::defaults();
    CHECK(budget.cap(ClassKind::Posets) == 5);
    CHECK(budget.cap(ClassKind::AllDigraphs) == 4);
    CHECK_THROWS_AS(generate({ClassKind::AllDigraphs, 5}, budget), Error);
    CHECK_THROWS_AS(generate({ClassKind::AllDigraphs, 0}, budget), Error);
    CHECK(budget.with_cap(ClassKind::AllDigraphs, 2).cap(ClassKind::AllDigraphs) == 2);
    CHECK(budget.with_all_caps(20).cap(ClassKind::Ta) == canonical_max_vertices);

    ::setenv("GAMMAHOM_MAX_N", "3", 1);
    CHECK(CatalogBudget::from_env().cap(ClassKind::Posets) == 3);
    ::setenv("GAMMAHOM_MAX_N", "9", 1);
    CHECK_THROWS_AS(CatalogBudget::from_env(), Error);
    ::setenv("GAMMAHOM_MAX_N", "x", 1);
    CHECK_THROWS_AS(CatalogBudget::from_env(), Error);
    ::unsetenv("GAMMAHOM_MAX_N");
}

TEST_CASE("export and import")
{
    ClassSpec spec{ClassKind::Posets, 3};
    auto catalog = generate(spec);
    auto text = export_catalog(catalog);
    CHECK(text.starts_with(R"({"n":1,"arcs":[[0,0]]})"
                           "\n"));
    std::istringstream in{text};
    CHECK(import_catalog(in, spec) == catalog);

    auto expect_parse_error = [&](const std::string & body) {
        std::istringstream bad{body};
        try {
            import_catalog(bad, spec);
        }
        catch (const Error & e) {
            return e.code() == Errc::ParseError;
        }
        return false;
    };
    CHECK(expect_parse_error(R"({"n":1,"arcs":[]})"));
    CHECK(expect_parse_error(to_json_string(catalog[2]) + "\n" + to_json_string(catalog[1])));
    std::vector<Vertex> swap{1, 0};
    auto flipped = relabeled(catalog[2], swap);
    REQUIRE(flipped != catalog[2]);
    CHECK(expect_parse_error(to_json_string(flipped)));
    CHECK(expect_parse_error("not json"));
}
