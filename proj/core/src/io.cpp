#include <gammahom/error.hpp>
#include <gammahom/io.hpp>
#include <gammahom/quotient.hpp>
#include <gammahom/rearrange.hpp>
#include <gammahom/verify.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace gammahom {

namespace {
    [[noreturn]] auto parse_error(const std::string & message) -> void { throw Error{Errc::ParseError, message}; }

    auto as_index(const Json & value, const char * what) -> std::uint64_t
    {
        if (! value.is_number_unsigned() && ! (value.is_number_integer() && value.get<std::int64_t>() >= 0))
            parse_error(std::string{what} + " must be a non-negative integer");
        return value.get<std::uint64_t>();
    }

    auto as_vertex(const Json & value, const char * what) -> Vertex
    {
        auto v = as_index(value, what);
        if (v >= max_vertices)
            parse_error(std::string{what} + " " + std::to_string(v) + " is out of range");
        return static_cast<Vertex>(v);
    }

    auto as_pair(const Json & value, const char * what) -> Arc
    {
        if (! value.is_array() || value.size() != 2)
            parse_error(std::string{what} + " must be a two-element array");
        return {as_vertex(value[0], what), as_vertex(value[1], what)};
    }

    auto member(const Json & doc, const char * key) -> const Json &
    {
        if (! doc.is_object())
            parse_error("expected a JSON object");
        auto it = doc.find(key);
        if (it == doc.end())
            parse_error(std::string{"missing key \""} + key + "\"");
        return *it;
    }

    auto to_json(VertexSet set) -> Json
    {
        auto out = Json::array();
        for (auto v : set)
            out.push_back(v);
        return out;
    }

    auto vertex_set_from_json(const Json & doc, const char * what) -> VertexSet
    {
        if (! doc.is_array())
            parse_error(std::string{what} + " must be an array of vertices");
        VertexSet set;
        for (const auto & v : doc)
            set.insert(as_vertex(v, what));
        return set;
    }

    auto to_json(const std::vector<Arc> & arcs) -> Json
    {
        auto out = Json::array();
        for (auto [u, v] : arcs)
            out.push_back(Json::array({u, v}));
        return out;
    }

    auto to_json(const Count & c) -> Json
    {
        if (c <= std::numeric_limits<std::uint64_t>::max())
            return Json(c.convert_to<std::uint64_t>());
        return Json(c.str());
    }

}

auto to_json(const ClassSpec & spec) -> Json
{
    Json out;
    out["kind"] = to_string(spec.kind);
    out["max_vertices"] = spec.max_vertices;
    if (spec.max_arcs)
        out["max_arcs"] = *spec.max_arcs;
    return out;
}

auto count_to_json(const Count & c) -> Json { return to_json(c); }

auto to_json(const Digraph & g) -> Json
{
    Json out;
    out["n"] = g.size();
    out["arcs"] = to_json(g.arcs());
    return out;
}

auto digraph_from_json(const Json & doc) -> Digraph
{
    auto n = as_index(member(doc, "n"), "n");
    if (n == 0)
        parse_error("a digraph needs at least one vertex");
    if (n > max_vertices)
        throw Error{Errc::TooLarge, "digraphs are limited to 64 vertices, got " + std::to_string(n)};
    const auto & arcs_doc = member(doc, "arcs");
    if (! arcs_doc.is_array())
        parse_error("\"arcs\" must be an array");
    std::vector<Arc> arcs;
    arcs.reserve(arcs_doc.size());
    for (const auto & a : arcs_doc) {
        auto arc = as_pair(a, "arc endpoint");
        if (arc.first >= n || arc.second >= n)
            parse_error("arc endpoint out of range for n = " + std::to_string(n));
        arcs.push_back(arc);
    }
    return Digraph{n, arcs};
}

auto to_json_string(const Digraph & g) -> std::string { return to_json(g).dump(); }

auto digraph_from_json_string(std::string_view text) -> Digraph
{
    Json doc = Json::parse(text.begin(), text.end(), nullptr, false);
    if (doc.is_discarded())
        parse_error("malformed JSON");
    return digraph_from_json(doc);
}

auto read_json_file(const std::filesystem::path & path) -> Json
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>{std::cin}, {});
    } else {
        std::ifstream in{path};
        if (! in)
            parse_error("cannot open " + path.string());
        text.assign(std::istreambuf_iterator<char>{in}, {});
    }
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded())
        parse_error("malformed JSON in " + path.string());
    return doc;
}

auto read_digraph_file(const std::filesystem::path & path) -> Digraph { return digraph_from_json(read_json_file(path)); }

auto hasse_arcs(const Digraph & g) -> std::vector<Arc>
{
    auto star = loops_removed(g);
    std::vector<Arc> result;
    for (auto [u, v] : star.arcs()) {
        bool covered = true;
        for (auto w : star.out_row(u))
            if (w != v && star.has_arc(w, v)) {
                covered = false;
                break;
            }
        if (covered)
            result.emplace_back(u, v);
    }
    return result;
}

auto to_dot(const Digraph & g, bool hasse, std::string_view name) -> std::string
{
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    if (hasse)
        out << "  rankdir=BT;\n";
    for (Vertex v = 0; v < g.size(); ++v)
        out << "  " << v << ";\n";
    for (auto [u, v] : hasse ? hasse_arcs(g) : g.arcs())
        out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

auto to_json(const VertexMap & f) -> Json
{
    auto out = Json::array();
    for (auto v : f.images())
        out.push_back(v);
    return out;
}

auto vertex_map_from_json(const Json & doc, std::size_t codomain_size) -> VertexMap
{
    if (! doc.is_array() || doc.empty())
        parse_error("a vertex map must be a non-empty array of images");
    std::vector<Vertex> images;
    for (const auto & v : doc) {
        auto image = as_vertex(v, "image");
        if (image >= codomain_size)
            parse_error("image " + std::to_string(image) + " is outside the codomain");
        images.push_back(image);
    }
    return VertexMap{std::move(images), codomain_size};
}

auto to_json(const QuotientDigraph & q) -> Json
{
    Json out;
    out["digraph"] = to_json(q.digraph());
    auto blocks = Json::array();
    for (auto block : q.blocks())
        blocks.push_back(to_json(block));
    out["blocks"] = std::move(blocks);
    out["iota"] = to_json(q.iota());
    return out;
}

auto to_json(const DominanceReport & report) -> Json
{
    Json out;
    out["R"] = to_json(report.r);
    out["S"] = to_json(report.s);
    out["class"] = to_json(report.spec);
    out["mode"] = to_string(report.mode);
    out["verdict"] = report.holds ? "holds" : "fails";
    out["tests"] = report.tests;
    if (report.witness) {
        Json w;
        w["G"] = to_json(report.witness->g);
        w["R_count"] = to_json(report.witness->r_count);
        w["S_count"] = to_json(report.witness->s_count);
        if (report.witness->xi)
            w["xi"] = to_json(*report.witness->xi);
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    if (! report.table.empty()) {
        auto rows = Json::array();
        for (const auto & row : report.table) {
            Json r;
            r["G"] = to_json(row.g);
            r["R_count"] = to_json(row.r_count);
            r["S_count"] = to_json(row.s_count);
            rows.push_back(std::move(r));
        }
        out["table"] = std::move(rows);
    }
    return out;
}

auto to_json(const DistinguishReport & report) -> Json
{
    Json out;
    out["objects"] = to_json(report.objects);
    out["tests"] = to_json(report.tests);
    out["mode"] = to_string(report.mode);
    auto objects = Json::array();
    for (const auto & g : report.object_catalog)
        objects.push_back(to_json(g));
    out["object_catalog"] = std::move(objects);
    out["test_count"] = report.test_catalog.size();
    auto pairs = Json::array();
    for (const auto & p : report.pairs) {
        Json entry;
        entry["first"] = p.first;
        entry["second"] = p.second;
        entry["distinguished"] = p.test_index.has_value();
        if (p.test_index) {
            entry["test_index"] = *p.test_index;
            entry["G"] = to_json(report.test_catalog[*p.test_index]);
        }
        pairs.push_back(std::move(entry));
    }
    out["pairs"] = std::move(pairs);
    out["all_distinguished"] = report.all_distinguished;
    return out;
}

auto to_json(const RearrangementSpec & spec) -> Json
{
    Json out;
    out["R"] = to_json(spec.r);
    out["X"] = to_json(spec.x);
    out["Y"] = to_json(spec.y);
    out["M"] = to_json(spec.m);
    auto beta = Json::array();
    for (auto [x, y] : spec.beta)
        beta.push_back(Json::array({x, y}));
    out["beta"] = std::move(beta);
    return out;
}

auto spec_from_json(const Json & doc) -> RearrangementSpec
{
    RearrangementSpec spec;
    spec.r = digraph_from_json(member(doc, "R"));
    spec.x = vertex_set_from_json(member(doc, "X"), "X");
    spec.y = vertex_set_from_json(member(doc, "Y"), "Y");
    spec.m = vertex_set_from_json(member(doc, "M"), "M");
    const auto & beta = member(doc, "beta");
    if (! beta.is_array())
        parse_error("\"beta\" must be an array of [x, y] pairs");
    for (const auto & pair : beta)
        spec.beta.push_back(as_pair(pair, "beta entry"));
    std::sort(spec.beta.begin(), spec.beta.end());
    return spec;
}

auto to_json(const RearrangementResult & result) -> Json
{
    Json out;
    out["S"] = to_json(result.s);
    out["A_r"] = to_json(result.a_r);
    out["A_d"] = to_json(result.a_d);
    out["A_u"] = to_json(result.a_u);
    if (result.t)
        out["T"] = to_json(*result.t);
    return out;
}

auto to_json(const ValidationReport & report) -> Json
{
    Json out;
    out["poset_mode"] = report.poset_mode;
    out["valid"] = report.valid();
    auto violations = Json::array();
    for (auto v : report.violations)
        violations.push_back(to_string(v));
    out["violations"] = std::move(violations);
    return out;
}

}
