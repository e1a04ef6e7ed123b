#pragma once

#include <gammahom/digraph.hpp>
#include <gammahom/hom.hpp>
#include <gammahom/vertex_map.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gammahom {

class QuotientDigraph;
struct DominanceReport;
struct DistinguishReport;
struct RearrangementSpec;
struct RearrangementResult;
struct ValidationReport;

/// Key order is preserved so that emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// {"n": n, "arcs": [[u,v], ...]} with arcs in lexicographic order.
auto to_json(const Digraph & g) -> Json;
/// Throws ParseError on malformed input and TooLarge beyond 64 vertices.
auto digraph_from_json(const Json & doc) -> Digraph;

/// The compact single-line form, e.g. {"n":2,"arcs":[[0,1]]}.
auto to_json_string(const Digraph & g) -> std::string;
auto digraph_from_json_string(std::string_view text) -> Digraph;

/// Reads a digraph from a file, or from standard input when path is "-".
auto read_digraph_file(const std::filesystem::path & path) -> Digraph;
auto read_json_file(const std::filesystem::path & path) -> Json;

/// Covering arcs of the loop-removed digraph: uv with no w between u and v.
auto hasse_arcs(const Digraph & g) -> std::vector<Arc>;

/// Graphviz source. With hasse set, only covering arcs are drawn (intended
/// for posets); otherwise every arc, loops included.
auto to_dot(const Digraph & g, bool hasse = false, std::string_view name = "G") -> std::string;

/// {"kind": ..., "max_vertices": k[, "max_arcs": a]}.
auto to_json(const ClassSpec & spec) -> Json;
/// A JSON number when the count fits in 64 bits, a decimal string otherwise.
auto count_to_json(const Count & c) -> Json;

auto to_json(const VertexMap & f) -> Json;
/// Parses a JSON array of images into a map with the given codomain size.
auto vertex_map_from_json(const Json & doc, std::size_t codomain_size) -> VertexMap;

/// {"digraph": 𝒢(ξ), "blocks": [[...], ...], "iota": [...]}.
auto to_json(const QuotientDigraph & q) -> Json;

auto to_json(const DominanceReport & report) -> Json;
auto to_json(const DistinguishReport & report) -> Json;

/// {"R": digraph, "X": [...], "Y": [...], "M": [...], "beta": [[x,y], ...]}.
auto to_json(const RearrangementSpec & spec) -> Json;
auto spec_from_json(const Json & doc) -> RearrangementSpec;
auto to_json(const RearrangementResult & result) -> Json;
auto to_json(const ValidationReport & report) -> Json;

}
