#include "../support.hpp"

#include "twd/emit.hpp"
#include "twd/json_io.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace twd;
using namespace twd::testing;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("polytope JSON round-trip")
{
    std::mt19937 rng(61);
    for (int k = 0; k < 30; ++k) {
        bool mono = false;
        HalfSpacePolytope p = random_polytope(rng, mono);
        CHECK(polytope_from_json(polytope_to_json(p)) == p);
    }
    HalfSpacePolytope q = polytope_from_json(R"({"facets":[{"normal":[1,0],"offset":0},
        {"normal":[0,1],"offset":"-1/2"},{"normal":[-1,-1],"offset":-3}]})");
    CHECK(q.facets[1].offset == Rational(-1, 2));
}

TEST_CASE("malformed polytope JSON")
{
    CHECK_THROWS_AS(polytope_from_json("{"), ParseError);
    CHECK_THROWS_AS(polytope_from_json(R"({"facets":[{"normal":[1],"offset":0}]})"), ParseError);
    CHECK_THROWS_AS(polytope_from_json(R"({"facets":[{"normal":[1,0],"offset":"a/b"}]})"), ParseError);
    CHECK_THROWS_AS(polytope_from_json(R"({"facets":[{"normal":[1,0],"offset":true}]})"), ParseError);
    CHECK_THROWS_AS(polytope_from_json(R"({"faces":[]})"), ParseError);
}

TEST_CASE("slope and index lists")
{
    CHECK(parse_slopes("1,0; -3,2 ;0,-1") == std::vector<IntVec2>{{1, 0}, {-3, 2}, {0, -1}});
    CHECK(parse_slopes("").empty());
    CHECK_THROWS_AS(parse_slopes("1,0;2"), ParseError);
    CHECK_THROWS_AS(parse_slopes("1,x"), ParseError);
    CHECK(parse_indices("0, 2,1") == std::vector<std::size_t>{0, 2, 1});
    CHECK_THROWS_AS(parse_indices("-1"), ParseError);
}

TEST_CASE("T2 base matches the golden file")
{
    CHECK(diagram_to_json(gompf_base({1, true})) == slurp(TWD_GOLDEN_DIR "/t2_base.json"));
    CHECK(emit(generate_diagram(SlopeSet{}), Format::Json) == slurp(TWD_GOLDEN_DIR "/t2_base.json"));
}

TEST_CASE("diagram JSON round-trip")
{
    FrontDiagram d = generate_diagram({{1, 0}});
    std::string j = diagram_to_json(d);
    CHECK(diagram_from_json(j) == d);
    CHECK(diagram_to_json(diagram_from_json(j)) == j);
    std::mt19937 rng(62);
    for (int k = 0; k < 20; ++k) {
        FrontDiagram e = generate_diagram(random_slopes(rng, 3, 4));
        CHECK(diagram_from_json(diagram_to_json(e)) == e);
    }
}

TEST_CASE("diagram JSON rejects bad input")
{
    std::string j = diagram_to_json(gompf_base({1, true}));
    std::string bad_kind = j;
    bad_kind.replace(bad_kind.find("\"crossing\""), 10, "\"twist\"");
    CHECK_THROWS_AS(diagram_from_json(bad_kind), ParseError);
    std::string bad_version = j;
    bad_version.replace(bad_version.find("\"version\": 1"), 12, "\"version\": 2");
    CHECK_THROWS_AS(diagram_from_json(bad_version), ParseError);
    std::string bad_pos = j;
    bad_pos.replace(bad_pos.find("\"handles\": 2"), 12, "\"handles\": 3");
    CHECK_THROWS_AS(diagram_from_json(bad_pos), DomainError);
}

TEST_CASE("closed diagram JSON carries framings")
{
    std::string j = closed_diagram_to_json(canonical_closure(generate_diagram({{0, 1}})));
    CHECK(j.find("\"framings\"") != std::string::npos);
    CHECK(j.find("\"original_components\": 2") != std::string::npos);
}

TEST_CASE("emission is deterministic")
{
    FrontDiagram d = generate_diagram({{0, -1}, {-3, 2}, {3, -1}});
    CHECK(emit(d, Format::Svg) == emit(generate_diagram({{0, -1}, {-3, 2}, {3, -1}}), Format::Svg));
    CHECK(emit(d, Format::Json) == diagram_to_json(d));
}
