#include "fixtures.hpp"

#include <gammahom/error.hpp>
#include <gammahom/io.hpp>
#include <gammahom/quotient.hpp>
#include <gammahom/rearrange.hpp>

#include <doctest.h>

using namespace gammahom;
using namespace fixtures;

TEST_CASE("digraph JSON is compact with sorted arcs")
{
    Digraph g{3, {{2, 0}, {0, 1}, {0, 0}}};
    CHECK(to_json_string(g) == R"({"n":3,"arcs":[[0,0],[0,1],[2,0]]})");
    CHECK(digraph_from_json_string(to_json_string(g)) == g);
    CHECK(digraph_from_json_string(R"({"arcs":[[1,0]],"n":2})") == Digraph(2, {{1, 0}}));
}

TEST_CASE("digraph JSON errors")
{
    auto code_of = [](std::string_view text) {
        try {
            digraph_from_json_string(text);
        }
        catch (const Error & e) {
            return e.code();
        }
        return Errc::InvalidSpec;
    };
    CHECK(code_of("{") == Errc::ParseError);
    CHECK(code_of(R"({"n":2})") == Errc::ParseError);
    CHECK(code_of(R"({"n":0,"arcs":[]})") == Errc::ParseError);
    CHECK(code_of(R"({"n":-1,"arcs":[]})") == Errc::ParseError);
    CHECK(code_of(R"({"n":2,"arcs":[[0,2]]})") == Errc::ParseError);
    CHECK(code_of(R"({"n":2,"arcs":[[0]]})") == Errc::ParseError);
    CHECK(code_of(R"({"n":2,"arcs":[["a",1]]})") == Errc::ParseError);
    CHECK(code_of(R"([1,2])") == Errc::ParseError);
    CHECK(code_of(R"({"n":65,"arcs":[]})") == Errc::TooLarge);
}

TEST_CASE("Hasse arcs are the covering arcs of the loop-free part")
{
    CHECK(hasse_arcs(chain3()) == std::vector<Arc>{{0, 1}, {1, 2}});
    auto dot = to_dot(chain3(), true, "P");
    CHECK(dot.find("0 -> 2") == std::string::npos);
    CHECK(dot.find("0 -> 1") != std::string::npos);
    auto full = to_dot(a1());
    CHECK(full.find("0 -> 0") != std::string::npos);
}

TEST_CASE("quotient JSON")
{
    auto q = quotient_of(c2(), c2(), VertexMap::constant(2, 0, 2));
    CHECK(to_json(q).dump() == R"({"digraph":{"n":1,"arcs":[[0,0]]},"blocks":[[0,1]],"iota":[0]})");
}

TEST_CASE("spec JSON round trip")
{
    auto spec = pentagon_spec();
    auto doc = to_json(spec);
    CHECK(doc.dump().starts_with(R"({"R":{"n":5,)"));
    CHECK(spec_from_json(doc) == spec);
    auto result = build_S(spec);
    auto out = to_json(result);
    CHECK(out["A_d"].dump() == "[[0,2]]");
    CHECK(out["A_u"].dump() == "[]");
    CHECK(to_json(validate_spec(spec, true)).dump() == R"({"poset_mode":true,"valid":true,"violations":[]})");
}

TEST_CASE("vertex maps")
{
    auto f = vertex_map_from_json(Json::parse("[1,0,1]"), 2);
    CHECK(f.images()[0] == 1);
    CHECK(to_json(f).dump() == "[1,0,1]");
    CHECK_THROWS_AS(vertex_map_from_json(Json::parse("[2]"), 2), Error);
}
