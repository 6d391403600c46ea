#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hgenergy/error.hpp"
#include "hgenergy/hg_format.hpp"
#include "support/corpus.hpp"

using namespace hgenergy;

namespace {

std::string parse_error(std::string_view text)
{
    try {
        parse_hg(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        return e.what();
    }
    FAIL("expected a parse error");
    return {};
}

} // namespace

TEST_CASE("parse a well-formed file with comments and blank lines")
{
    const auto h = parse_hg("# three triples\n3 5 3\n\n0 1 2  # first\n0 3 4\n2 3 4\n");
    CHECK(h == Hypergraph::from_edges(5, 3, {{0, 1, 2}, {0, 3, 4}, {2, 3, 4}}));
}

TEST_CASE("parser canonicalizes unordered edges")
{
    CHECK(parse_hg("2 3 2\n2 1\n1 0\n").edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("edgeless file")
{
    const auto h = parse_hg("3 4 0\n");
    CHECK(h.num_edges() == 0);
    CHECK(h.num_vertices() == 4);
}

TEST_CASE("parse errors name the offending line")
{
    CHECK(parse_error("").find("header") != std::string::npos);
    CHECK(parse_error("3 4\n").find("line 1") != std::string::npos);
    CHECK(parse_error("1 4 0\n").find("line 1") != std::string::npos);
    CHECK(parse_error("3 0 0\n").find("line 1") != std::string::npos);
    CHECK(parse_error("3 4 1\n0 1\n").find("line 2") != std::string::npos);
    CHECK(parse_error("3 4 1\n0 1 2 3\n").find("line 2") != std::string::npos);
    CHECK(parse_error("3 4 1\n0 1 4\n").find("line 2") != std::string::npos);
    CHECK(parse_error("3 4 1\n0 1 1\n").find("line 2") != std::string::npos);
    CHECK(parse_error("3 4 1\n0 1 x\n").find("line 2") != std::string::npos);
    CHECK(parse_error("3 4 1\n0 -1 2\n").find("line 2") != std::string::npos);
    CHECK(parse_error("3 4 2\n0 1 2\n# c\n2 1 0\n").find("line 4") != std::string::npos);
    CHECK(parse_error("3 4 2\n0 1 2\n").find("declared 2 edges") != std::string::npos);
    CHECK(parse_error("3 4 1\n0 1 2\n1 2 3\n").find("line 3") != std::string::npos);
}

TEST_CASE("writer emits the canonical format")
{
    const auto h = Hypergraph::from_edges(4, 3, {{3, 2, 1}, {0, 1, 2}});
    CHECK(to_hg_string(h) == "3 4 2\n0 1 2\n1 2 3\n");
    CHECK(to_hg_string(edgeless(5, 2)) == "2 5 0\n");
}

TEST_CASE("read_hg_file")
{
    const auto path = std::string(HGENERGY_TEST_DATA_DIR) + "/golden/random_n6_k3_p0.5_s42.hg";
    const auto h = read_hg_file(path);
    CHECK(h == random_uniform(6, 3, 0.5, 42));
    CHECK_THROWS_AS(read_hg_file("/nonexistent/file.hg"), Error);
}

TEST_CASE("golden file for random n=6 k=3 p=0.5 seed=42")
{
    std::ifstream in(std::string(HGENERGY_TEST_DATA_DIR) + "/golden/random_n6_k3_p0.5_s42.hg", std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(to_hg_string(random_uniform(6, 3, 0.5, 42)) == buffer.str());
}

TEST_CASE("property: parse(serialize(H)) == H on the random corpus")
{
    for (const auto& inst : corpus::random_instances()) {
        CAPTURE(inst.label);
        const auto text = to_hg_string(inst.h);
        const auto back = parse_hg(text);
        CHECK(back == inst.h);
        CHECK(to_hg_string(back) == text);
    }
}
