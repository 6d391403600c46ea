#include <doctest.h>

#include <numeric>

#include "hgenergy/error.hpp"
#include "hgenergy/hypergraph.hpp"
#include "support/corpus.hpp"

using namespace hgenergy;

namespace {

Hypergraph three_triples() { return Hypergraph::from_edges(5, 3, {{0, 1, 2}, {0, 3, 4}, {2, 3, 4}}); }
Hypergraph two_triples() { return Hypergraph::from_edges(4, 3, {{0, 1, 2}, {1, 2, 3}}); }

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an hgenergy::Error");
    return ErrorCode::ParseError;
}

} // namespace

TEST_CASE("from_edges canonicalizes edge order and vertex order")
{
    const auto h = Hypergraph::from_edges(5, 3, {{4, 3, 2}, {2, 1, 0}, {0, 4, 3}});
    CHECK(h == three_triples());
    CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {0, 3, 4}, {2, 3, 4}});
    CHECK(h.num_vertices() == 5);
    CHECK(h.num_edges() == 3);
    CHECK(h.uniformity() == 3);
    CHECK(h.contains({0, 3, 4}));
    CHECK_FALSE(h.contains({0, 1, 3}));
}

TEST_CASE("from_edges rejects malformed input")
{
    CHECK(code_of([] { Hypergraph::from_edges(2, 2, {{0, 0}}); }) == ErrorCode::EdgeWrongSize);
    CHECK(code_of([] { Hypergraph::from_edges(4, 3, {{0, 1}}); }) == ErrorCode::EdgeWrongSize);
    CHECK(code_of([] { Hypergraph::from_edges(4, 3, {{0, 1, 2}, {1, 2, 3}, {0, 1, 2}}); }) ==
          ErrorCode::DuplicateEdge);
    CHECK(code_of([] { Hypergraph::from_edges(4, 3, {{2, 1, 0}, {0, 1, 2}}); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([] { Hypergraph::from_edges(4, 3, {{0, 1, 4}}); }) == ErrorCode::VertexOutOfRange);
    CHECK(code_of([] { Hypergraph::from_edges(0, 2, {}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { Hypergraph::from_edges(3, 1, {}); }) == ErrorCode::InvalidParams);
}

TEST_CASE("degree summary")
{
    SUBCASE("three triples")
    {
        const auto d = degree_summary(three_triples());
        CHECK(d.degrees == std::vector<std::uint64_t>{2, 1, 2, 2, 2});
        CHECK(d.max_degree == 2);
        CHECK(d.min_degree == 1);
        CHECK(d.avg_degree == doctest::Approx(9.0 / 5.0).epsilon(1e-15));
        CHECK(d.zagreb == 17);
        CHECK(zagreb_index(three_triples()) == 17);
    }
    SUBCASE("complete K4")
    {
        const auto d = degree_summary(complete_k_graph(4, 2));
        CHECK(d.degrees == std::vector<std::uint64_t>(4, 3));
        CHECK(d.zagreb == 36);
    }
    SUBCASE("edgeless")
    {
        const auto d = degree_summary(edgeless(5, 3));
        CHECK(d.degrees == std::vector<std::uint64_t>(5, 0));
        CHECK(d.avg_degree == 0.0);
        CHECK(d.zagreb == 0);
    }
    SUBCASE("single edge has Zagreb index k")
    {
        for (std::size_t k = 2; k <= 6; ++k) CHECK(zagreb_index(disjoint_edges(k, 1)) == k);
    }
    SUBCASE("complete k-graph Zagreb index")
    {
        for (std::size_t n = 3; n <= 9; ++n)
            for (std::size_t k = 2; k <= n; ++k) {
                const auto c = binomial(n - 1, k - 1);
                CHECK(zagreb_index(complete_k_graph(n, k)) == n * c * c);
            }
    }
}

TEST_CASE("binomial coefficients")
{
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
    CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("k-subset enumeration is lexicographic and complete")
{
    std::vector<std::vector<Vertex>> seen;
    for_each_k_subset(5, 3, [&](std::span<const Vertex> s) { seen.emplace_back(s.begin(), s.end()); });
    REQUIRE(seen.size() == 10);
    CHECK(seen.front() == std::vector<Vertex>{0, 1, 2});
    CHECK(seen.back() == std::vector<Vertex>{2, 3, 4});
    CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("complete k-graphs")
{
    CHECK(complete_k_graph(4, 2).num_edges() == 6);
    CHECK(complete_k_graph(5, 3).num_edges() == 10);
    const auto h = complete_k_graph(4, 3);
    CHECK(h.num_edges() == 4);
    CHECK(degree_summary(h).degrees == std::vector<std::uint64_t>(4, 3));
    CHECK(is_regular(complete_k_graph(5, 3)));
    CHECK(is_complete(complete_k_graph(6, 4)));
    CHECK(code_of([] { complete_k_graph(3, 4); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { complete_k_graph(40, 20); }) == ErrorCode::TooManyEdges);
    CHECK(code_of([] { complete_k_graph(6, 3, Limits{19}); }) == ErrorCode::TooManyEdges);
    CHECK(complete_k_graph(6, 3, Limits{20}).num_edges() == 20);
}

TEST_CASE("complement")
{
    CHECK(complement(complete_k_graph(5, 3)) == edgeless(5, 3));
    CHECK(complement(edgeless(4, 2)) == complete_k_graph(4, 2));
    CHECK(complement(two_triples()).edges() == std::vector<Edge>{{0, 1, 3}, {0, 2, 3}});
    CHECK(code_of([] { complement(edgeless(40, 20)); }) == ErrorCode::TooManyEdges);
}

TEST_CASE("edge removal and insertion")
{
    const auto h = three_triples();
    CHECK(remove_edge(h, {0, 1, 2}).num_edges() == 2);
    CHECK(remove_edge(h, {2, 1, 0}).num_edges() == 2);
    CHECK(remove_edge(add_edge(h, {1, 3, 4}), {1, 3, 4}) == h);
    CHECK(add_edge(h, {4, 3, 1}).contains({1, 3, 4}));
    CHECK(code_of([&] { add_edge(h, {0, 1, 2}); }) == ErrorCode::DuplicateEdge);
    CHECK(code_of([&] { add_edge(h, {0, 1}); }) == ErrorCode::EdgeWrongSize);
    CHECK(code_of([&] { add_edge(h, {0, 1, 9}); }) == ErrorCode::VertexOutOfRange);
    CHECK(code_of([&] { remove_edge(h, {0, 1, 3}); }) == ErrorCode::EdgeNotFound);
}

TEST_CASE("first absent edge")
{
    CHECK(first_absent_edge(three_triples()) == Edge{0, 1, 3});
    CHECK(first_absent_edge(edgeless(4, 2)) == Edge{0, 1});
    CHECK_FALSE(first_absent_edge(complete_k_graph(5, 3)).has_value());
}

TEST_CASE("structural predicates")
{
    CHECK_FALSE(is_linear(three_triples()));
    CHECK_FALSE(is_linear(two_triples()));
    CHECK(is_linear(disjoint_edges(3, 4)));
    CHECK(is_linear(Hypergraph::from_edges(5, 3, {{0, 1, 2}, {2, 3, 4}})));

    CHECK(is_regular(complete_k_graph(5, 3)));
    CHECK_FALSE(is_regular(three_triples()));
    CHECK(is_regular(edgeless(4, 3)));
    CHECK_FALSE(is_regular(disjoint_edges(2, 2, 1)));

    CHECK(has_disjoint_edges(disjoint_edges(3, 2, 1)));
    CHECK(has_disjoint_edges(edgeless(3, 2)));
    CHECK_FALSE(has_disjoint_edges(two_triples()));

    CHECK(has_isolated_vertices(disjoint_edges(2, 1, 3)));
    CHECK_FALSE(has_isolated_vertices(three_triples()));

    CHECK(is_complete(disjoint_edges(3, 1)));
    CHECK_FALSE(is_complete(edgeless(3, 3)));
}

TEST_CASE("disjoint edges")
{
    const auto a = disjoint_edges(3, 2, 0);
    CHECK(a.num_vertices() == 6);
    CHECK(a.edges() == std::vector<Edge>{{0, 1, 2}, {3, 4, 5}});
    const auto b = disjoint_edges(2, 1, 3);
    CHECK(b.num_vertices() == 5);
    CHECK(b.num_edges() == 1);
}

TEST_CASE("SplitMix64 reference outputs")
{
    // Reference values of the published SplitMix64 generator for seed 0.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafULL);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(rng.next() == 0x06c45d188009454fULL);
    SplitMix64 unit(7);
    for (int i = 0; i < 1000; ++i) {
        const double u = unit.next_unit();
        CHECK((u >= 0.0 && u < 1.0));
    }
}

TEST_CASE("random_uniform")
{
    CHECK(random_uniform(6, 3, 0.0, 5) == edgeless(6, 3));
    CHECK(random_uniform(6, 3, 1.0, 5) == complete_k_graph(6, 3));
    CHECK(random_uniform(9, 4, 0.4, 123) == random_uniform(9, 4, 0.4, 123));
    CHECK_FALSE(random_uniform(9, 4, 0.4, 123) == random_uniform(9, 4, 0.4, 124));
    CHECK(code_of([] { random_uniform(5, 2, 1.5, 1); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { random_uniform(5, 2, -0.1, 1); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { random_uniform(40, 20, 0.5, 1); }) == ErrorCode::TooManyEdges);
}

TEST_CASE("property: degree sum and degree bounds on the random corpus")
{
    for (const auto& inst : corpus::random_instances()) {
        CAPTURE(inst.label);
        const auto d = degree_summary(inst.h);
        const auto sum = std::accumulate(d.degrees.begin(), d.degrees.end(), std::uint64_t{0});
        CHECK(sum == inst.h.uniformity() * inst.h.num_edges());
        CHECK(static_cast<double>(d.max_degree) >= d.avg_degree);
        CHECK(d.avg_degree >= static_cast<double>(d.min_degree));
        std::uint64_t z = 0;
        for (auto deg : d.degrees) z += deg * deg;
        CHECK(z == d.zagreb);
        CHECK(complement(complement(inst.h)) == inst.h);
        CHECK(complement(inst.h).num_edges() + inst.h.num_edges() ==
              binomial(inst.h.num_vertices(), inst.h.uniformity()));
    }
}
