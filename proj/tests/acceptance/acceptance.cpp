// Acceptance suite: one exhaustive, exact check per criterion. Each criterion
// produces a JSON report; the last criterion reruns all others with a
// different worker count and compares the reports byte for byte.

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gammahom/catalog.hpp>
#include <gammahom/connectivity.hpp>
#include <gammahom/error.hpp>
#include <gammahom/hom.hpp>
#include <gammahom/io.hpp>
#include <gammahom/parallel.hpp>
#include <gammahom/quotient.hpp>
#include <gammahom/rearrange.hpp>
#include <gammahom/verify.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace gammahom;
using namespace fixtures;

namespace {

const CatalogBudget budget = CatalogBudget::defaults();

auto catalog(ClassKind kind, std::size_t n, unsigned workers) -> std::vector<Digraph>
{
    return generate({kind, n}, budget, workers);
}

auto options(unsigned workers) -> VerifyOptions { return {workers, false, budget}; }

/// Collects check results; keeps the first few failure messages.
class Tally {
public:
    auto check(bool ok, const std::function<std::string()> & describe) -> void
    {
        ++_checks;
        if (ok)
            return;
        ++_failures;
        if (_messages.size() < 5)
            _messages.push_back(describe());
    }

    auto merge(const Tally & other) -> void
    {
        _checks += other._checks;
        _failures += other._failures;
        for (const auto & m : other._messages)
            if (_messages.size() < 5)
                _messages.push_back(m);
    }

    auto passed() const -> bool { return _failures == 0; }
    auto checks() const -> std::uint64_t { return _checks; }
    auto failures() const -> std::uint64_t { return _failures; }
    auto messages() const -> const std::vector<std::string> & { return _messages; }

private:
    std::uint64_t _checks = 0;
    std::uint64_t _failures = 0;
    std::vector<std::string> _messages;
};

struct Outcome {
    Tally tally;
    Json report;
};

auto seal(Outcome & outcome) -> Outcome &
{
    outcome.report["checks"] = outcome.tally.checks();
    outcome.report["failures"] = outcome.tally.failures();
    return outcome;
}

auto str(const Digraph & g) -> std::string { return to_json_string(g); }
auto str(const VertexMap & f) -> std::string { return to_json(f).dump(); }

auto images(const VertexMap & f) -> oracle::Map { return {f.images().begin(), f.images().end()}; }

// 1. Every homomorphism between small posets factors through its quotient.
auto factorisation(unsigned workers) -> Outcome
{
    auto posets = catalog(ClassKind::Posets, 3, workers);
    auto pairs = posets.size() * posets.size();
    std::vector<Tally> tallies(pairs);
    std::vector<std::size_t> hom_counts(pairs);
    parallel_for(pairs, workers, [&](std::size_t slot) {
        const auto & g = posets[slot / posets.size()];
        const auto & h = posets[slot % posets.size()];
        auto & t = tallies[slot];
        for (const auto & xi : list_homs(g, h, HomMode::All)) {
            ++hom_counts[slot];
            auto q = quotient_of(g, h, xi);
            auto what = [&](const char * property) {
                return [&, property] { return std::string{property} + " fails for G=" + str(g) + " xi=" + str(xi); };
            };
            VertexSet covered;
            bool disjoint = true;
            bool connected = true;
            for (auto block : q.blocks()) {
                disjoint = disjoint && ! block.intersects(covered);
                covered |= block;
                connected = connected && connected_components(induced(g, block)).size() == 1;
            }
            t.check(disjoint && covered == g.vertices(), what("partition"));
            t.check(connected, what("block connectivity"));
            t.check(q.partition_key() == oracle::fibre_partition(g, images(xi)), what("oracle partition"));
            t.check(compose(q.iota(), q.pi()) == xi, what("xi = iota . pi"));
            t.check(is_homomorphism(q.digraph(), h, q.iota(), HomMode::Strict), what("iota strict"));
        }
    });
    Outcome out;
    Json counts = Json::array();
    for (std::size_t slot = 0; slot < pairs; ++slot) {
        out.tally.merge(tallies[slot]);
        counts.push_back(hom_counts[slot]);
    }
    out.report["pairs"] = pairs;
    out.report["hom_counts"] = counts;
    return seal(out);
}

// 2. Θ-class sizes equal strict counts out of the quotient, and a brute-force
// fibre-partition count.
auto theta_equivalence(unsigned workers) -> Outcome
{
    auto posets = catalog(ClassKind::Posets, 3, workers);
    auto k = posets.size();
    std::vector<Tally> tallies(k * k);
    std::vector<Json> rows(k * k);
    parallel_for(k * k, workers, [&](std::size_t slot) {
        const auto & g = posets[slot / k];
        const auto & h = posets[slot % k];
        auto & t = tallies[slot];
        // Brute-force Θ-class sizes per target, keyed by fibre partition.
        std::vector<std::map<std::vector<Vertex>, std::uint64_t>> brute(k);
        for (std::size_t i = 0; i < k; ++i)
            for (const auto & zeta : oracle::homs(g, posets[i], oracle::Mode::All))
                ++brute[i][oracle::fibre_partition(g, zeta)];
        Json sizes = Json::array();
        for (const auto & xi : list_homs(g, h, HomMode::All)) {
            auto q = quotient_of(g, h, xi);
            for (std::size_t i = 0; i < k; ++i) {
                const auto & h2 = posets[i];
                auto theta = theta_class(g, h2, q).size();
                auto strict = count_homs(q.digraph(), h2, HomMode::Strict);
                auto it = brute[i].find(q.partition_key());
                std::uint64_t expected = it == brute[i].end() ? 0 : it->second;
                t.check(strict == theta && theta == expected, [&] {
                    return "G=" + str(g) + " xi=" + str(xi) + " H'=" + str(h2) + ": theta " + std::to_string(theta)
                        + ", strict " + strict.str() + ", brute force " + std::to_string(expected);
                });
                sizes.push_back(theta);
            }
        }
        rows[slot] = sizes;
    });
    Outcome out;
    for (const auto & t : tallies)
        out.tally.merge(t);
    out.report["theta_sizes"] = rows;
    return seal(out);
}

// 3. Strict dominance implies hom dominance and agrees with the Θ criterion.
auto truncated_equivalence(unsigned workers) -> Outcome
{
    ClassSpec c{ClassKind::Posets, 4};
    auto posets = generate(c, budget, workers);
    auto k = posets.size();
    std::vector<std::string> verdicts(k * k);
    std::vector<Tally> tallies(k * k);
    parallel_for(k * k, workers, [&](std::size_t slot) {
        const auto & r = posets[slot / k];
        const auto & s = posets[slot % k];
        auto strict = check_strict_dominance(r, s, c, options(1)).holds;
        auto hom = check_hom_dominance(r, s, c, options(1)).holds;
        auto gamma = check_gamma_leq(r, s, c, options(1)).holds;
        auto describe = [&] { return "R=" + str(r) + " S=" + str(s); };
        tallies[slot].check(! strict || hom, describe);
        tallies[slot].check(strict == gamma, describe);
        verdicts[slot] = std::string{strict ? "S" : "-"} + (hom ? "H" : "-") + (gamma ? "G" : "-");
    });
    Outcome out;
    for (const auto & t : tallies)
        out.tally.merge(t);
    std::size_t holding = 0;
    for (const auto & v : verdicts)
        holding += v[0] == 'S';
    out.report["objects"] = k;
    out.report["strict_dominance_pairs"] = holding;
    out.report["verdicts"] = verdicts;
    return seal(out);
}

auto construction_specs(unsigned workers) -> std::vector<RearrangementSpec>
{
    std::vector<RearrangementSpec> specs{three_vertex_spec(), pentagon_spec()};
    auto posets = catalog(ClassKind::Posets, 4, workers);
    for (auto & spec : sweep_specs(posets, 2))
        specs.push_back(std::move(spec));
    return specs;
}

// 4. ρ is injective into 𝒮(G,S), inverts exactly and relocates the same set.
auto construction(unsigned workers) -> Outcome
{
    auto specs = construction_specs(workers);
    auto tests = catalog(ClassKind::AllDigraphs, 3, workers);
    std::vector<Tally> tallies(specs.size());
    std::vector<std::uint64_t> maps(specs.size());
    parallel_for(specs.size(), workers, [&](std::size_t i) {
        const auto & spec = specs[i];
        auto & t = tallies[i];
        auto result = build_S(spec);
        for (const auto & g : tests) {
            std::vector<VertexMap> seen;
            for (const auto & xi : list_homs(g, spec.r, HomMode::Strict)) {
                ++maps[i];
                auto rho = rho_apply(g, xi, spec, result);
                auto describe = [&] { return "spec " + to_json(spec).dump() + " G=" + str(g) + " xi=" + str(xi); };
                t.check(is_homomorphism(g, result.s, rho, HomMode::Strict), describe);
                t.check(rho_invert(g, rho, spec, result) == xi, describe);
                t.check(exceptional_set(g, xi, Side::R, spec, result)
                        == exceptional_set(g, rho, Side::S, spec, result),
                    describe);
                seen.push_back(rho);
            }
            std::sort(seen.begin(), seen.end());
            t.check(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                [&] { return "rho not injective for spec " + to_json(spec).dump() + " G=" + str(g); });
        }
    });
    Outcome out;
    for (const auto & t : tallies)
        out.tally.merge(t);
    out.report["specs"] = specs.size();
    out.report["maps_per_spec"] = maps;
    return seal(out);
}

// 5. Poset-mode specs: S stays in 𝔗ₐ, walks leave A_r in the allowed shape,
// T is a poset and strictly dominates R.
auto poset_closure(unsigned workers) -> Outcome
{
    std::vector<RearrangementSpec> specs;
    for (auto & spec : construction_specs(workers))
        if (is_poset(spec.r) && validate_spec(spec, true).valid())
            specs.push_back(std::move(spec));
    ClassSpec c{ClassKind::Posets, 4};
    std::vector<Tally> tallies(specs.size());
    std::vector<std::uint64_t> walks(specs.size());
    parallel_for(specs.size(), workers, [&](std::size_t i) {
        const auto & spec = specs[i];
        auto & t = tallies[i];
        auto result = poset_rearrange(spec);
        auto describe = [&](const char * what) {
            return [&, what] { return std::string{what} + " fails for spec " + to_json(spec).dump(); };
        };
        t.check(is_ta(result.s), describe("S in Ta"));
        t.check(result.t && is_poset(*result.t), describe("T poset"));
        oracle::any_walk(result.s, 5, [&](const std::vector<Vertex> & w) {
            ++walks[i];
            t.check(walk_K_analysis(result, w).conforms(), describe("K shape"));
            return false;
        });
        t.check(result.t && check_strict_dominance(spec.r, *result.t, c, options(1)).holds,
            describe("strict dominance of R by T"));
    });
    Outcome out;
    for (const auto & t : tallies)
        out.tally.merge(t);
    out.report["poset_specs"] = specs.size();
    out.report["walks_per_spec"] = walks;
    return seal(out);
}

// 6. Quotients into 𝔗ₐ targets have only trivial equal-ι walks; quotients of
// undirected graphs into odd-cycle-free targets have no odd ones.
auto walk_properties(unsigned workers) -> Outcome
{
    struct Job {
        Digraph g;
        Digraph r;
        bool odd;
    };
    std::vector<Job> jobs;
    auto ta = catalog(ClassKind::Ta, 3, workers);
    auto digraphs = catalog(ClassKind::AllDigraphs, 3, workers);
    for (const auto & r : ta)
        for (const auto & g : digraphs)
            jobs.push_back({g, r, false});
    auto co = catalog(ClassKind::OddCycleFree, 4, workers);
    auto undirected = catalog(ClassKind::Undirected, 4, workers);
    for (const auto & r : co)
        for (const auto & g : undirected)
            jobs.push_back({g, r, true});

    std::vector<Tally> tallies(jobs.size());
    std::vector<std::uint64_t> homs(jobs.size());
    parallel_for(jobs.size(), workers, [&](std::size_t i) {
        const auto & [g, r, odd] = jobs[i];
        for (const auto & xi : list_homs(g, r, HomMode::All)) {
            ++homs[i];
            auto q = quotient_of(g, r, xi);
            auto describe = [&] { return "G=" + str(g) + " R=" + str(r) + " xi=" + str(xi); };
            if (odd) {
                tallies[i].check(! has_odd_equal_iota_walk(q), describe);
                tallies[i].check(is_odd_cycle_free(q.digraph()), describe);
            }
            else {
                tallies[i].check(! has_nontrivial_equal_iota_walk(q), describe);
                tallies[i].check(is_ta(q.digraph()), describe);
            }
        }
    });
    Outcome out;
    std::uint64_t ta_homs = 0, co_homs = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        out.tally.merge(tallies[i]);
        (jobs[i].odd ? co_homs : ta_homs) += homs[i];
    }
    out.report["ta_homomorphisms"] = ta_homs;
    out.report["odd_cycle_free_homomorphisms"] = co_homs;
    return seal(out);
}

// 7. Homomorphism vectors over small posets separate small posets.
auto lovasz(unsigned workers) -> Outcome
{
    ClassSpec objects{ClassKind::Posets, 3};
    Outcome out;
    for (auto mode : {HomMode::All, HomMode::Strict}) {
        auto report = lovasz_distinguish(objects, objects, mode, options(workers));
        if (! report.all_distinguished)
            report = lovasz_distinguish(objects, {ClassKind::Posets, 4}, mode, options(workers));
        out.tally.check(report.all_distinguished,
            [&] { return std::string{"undistinguished pair in mode "} + std::string{to_string(mode)}; });
        out.report[std::string{to_string(mode)}] = to_json(report);
    }
    return seal(out);
}

// 8. Dominance survives direct and ordinal sums, and both sum formulas match
// brute-force counts.
auto sums(unsigned workers) -> Outcome
{
    Outcome out;
    auto pentagon = poset_rearrange(pentagon_spec());
    auto three = build_S(three_vertex_spec());
    std::vector<std::pair<Digraph, Digraph>> direct{
        {c2(), c2()}, {pentagon_r(), pentagon.s}, {three_vertex_spec().r, three.s}};
    std::vector<std::pair<Digraph, Digraph>> ordinal{
        {c2(), c2()}, {pentagon_r(), *pentagon.t}, {three_vertex_spec().r, three.s}};

    auto run = [&](const std::vector<std::pair<Digraph, Digraph>> & premises, const ClassSpec & c, const char * key) {
        Json results = Json::array();
        for (const auto & [r1, s1] : premises)
            for (const auto & [r2, s2] : premises) {
                bool holds = false;
                try {
                    holds = sum_compatibility_check(r1, s1, r2, s2, c, options(workers));
                }
                catch (const Error & e) {
                    out.tally.check(false, [&] { return std::string{key} + ": " + e.what(); });
                    continue;
                }
                out.tally.check(holds, [&] {
                    return std::string{key} + " conclusion fails for R1=" + str(r1) + " R2=" + str(r2);
                });
                results.push_back(holds);
            }
        out.report[key] = results;
    };
    run(direct, {ClassKind::AllDigraphs, 4}, "direct_sum");
    run(ordinal, {ClassKind::Posets, 4}, "ordinal_sum");

    auto digraphs = catalog(ClassKind::AllDigraphs, 3, workers);
    auto small = catalog(ClassKind::AllDigraphs, 2, workers);
    std::vector<Tally> component_tallies(digraphs.size());
    parallel_for(digraphs.size(), workers, [&](std::size_t i) {
        const auto & g = digraphs[i];
        for (const auto & h1 : small)
            for (const auto & h2 : small) {
                auto formula = strict_count_by_components(g, h1, h2);
                auto brute = oracle::count(g, direct_sum(h1, h2), oracle::Mode::Strict);
                component_tallies[i].check(formula == brute, [&] {
                    return "component product for G=" + str(g) + " H1=" + str(h1) + " H2=" + str(h2);
                });
            }
    });
    auto posets = catalog(ClassKind::Posets, 3, workers);
    std::vector<Tally> upset_tallies(posets.size());
    parallel_for(posets.size(), workers, [&](std::size_t i) {
        const auto & p = posets[i];
        for (const auto & q1 : posets)
            for (const auto & q2 : posets) {
                auto formula = strict_count_by_upsets(p, q1, q2);
                auto brute = oracle::count(p, ordinal_sum(q1, q2), oracle::Mode::Strict);
                upset_tallies[i].check(formula == brute, [&] {
                    return "upset sum for P=" + str(p) + " Q1=" + str(q1) + " Q2=" + str(q2);
                });
            }
    });
    for (const auto & t : component_tallies)
        out.tally.merge(t);
    for (const auto & t : upset_tallies)
        out.tally.merge(t);
    return seal(out);
}

struct Criterion {
    int number;
    const char * title;
    Outcome (*run)(unsigned);
};

const std::vector<Criterion> criteria{
    {1, "factorisation through quotients on posets <= 3", factorisation},
    {2, "theta-class sizes equal strict quotient counts on posets <= 3", theta_equivalence},
    {3, "strict dominance implies hom dominance and matches the theta criterion on posets <= 4",
        truncated_equivalence},
    {4, "rearrangement map is an injective invertible strict scheme", construction},
    {5, "poset rearrangement closure, walk shape and dominance by T", poset_closure},
    {6, "equal-iota walk properties of quotients", walk_properties},
    {7, "homomorphism vectors separate posets <= 3", lovasz},
    {8, "sum compatibility and sum counting formulas", sums},
};

auto print(int number, bool pass, const std::string & title, double seconds, const std::string & detail) -> void
{
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << title << " (" << detail;
    line.precision(2);
    line << std::fixed << ", " << seconds << " s)";
    std::cout << line.str() << std::endl;
}

}

/// With a path argument, the worker-1 reports are also written there as one JSON document.
auto main(int argc, char ** argv) -> int
{
    using clock = std::chrono::steady_clock;
    bool all = true;
    std::vector<std::string> first_reports;

    for (const auto & criterion : criteria) {
        auto start = clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run(1);
        }
        catch (const std::exception & e) {
            outcome.tally.check(false, [&] { return std::string{"exception: "} + e.what(); });
        }
        std::chrono::duration<double> elapsed = clock::now() - start;
        all = all && outcome.tally.passed();
        print(criterion.number, outcome.tally.passed(), criterion.title, elapsed.count(),
            std::to_string(outcome.tally.checks()) + " checks");
        for (const auto & m : outcome.tally.messages())
            std::cout << "       " << m << '\n';
        first_reports.push_back(outcome.report.dump());
    }

    auto start = clock::now();
    clear_catalog_cache();
    std::vector<int> differing;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string again;
        try {
            again = criteria[i].run(8).report.dump();
        }
        catch (const std::exception & e) {
            again = e.what();
        }
        if (again != first_reports[i])
            differing.push_back(criteria[i].number);
    }
    std::chrono::duration<double> elapsed = clock::now() - start;
    std::string detail = "criteria 1-8 rerun with 8 workers";
    for (auto n : differing)
        detail += ", report " + std::to_string(n) + " differs";
    print(9, differing.empty(), "reports are byte-identical for 1 and 8 workers", elapsed.count(), detail);
    all = all && differing.empty();

    if (argc > 1) {
        Json doc;
        for (std::size_t i = 0; i < criteria.size(); ++i)
            doc[std::to_string(criteria[i].number)] = Json::parse(first_reports[i]);
        std::ofstream{argv[1]} << doc.dump(1) << '\n';
    }

    return all ? 0 : 1;
}
