#include <doctest.h>

#include "hgenergy/constructions.hpp"
#include "hgenergy/error.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace hgenergy;

namespace {

Hypergraph three_triples() { return Hypergraph::from_edges(5, 3, {{0, 1, 2}, {0, 3, 4}, {2, 3, 4}}); }
Hypergraph two_triples() { return Hypergraph::from_edges(4, 3, {{0, 1, 2}, {1, 2, 3}}); }
Hypergraph path4() { return Hypergraph::from_edges(4, 2, {{0, 1}, {1, 2}, {2, 3}}); }

bool is_integral(const SymMatrix& m)
{
    for (double v : m.data())
        if (v != std::round(v)) return false;
    return true;
}

SymMatrix from_eigen(const Eigen::MatrixXd& e)
{
    SymMatrix m(static_cast<std::size_t>(e.rows()));
    for (Eigen::Index i = 0; i < e.rows(); ++i)
        for (Eigen::Index j = i; j < e.cols(); ++j) m.set(i, j, e(i, j));
    return m;
}

} // namespace

TEST_CASE("incidence matrix")
{
    const auto b = incidence_matrix(two_triples());
    REQUIRE(b.rows() == 4);
    REQUIRE(b.cols() == 2);
    CHECK(b(0, 0) == 1.0);
    CHECK(b(1, 0) == 1.0);
    CHECK(b(2, 0) == 1.0);
    CHECK(b(3, 0) == 0.0);
    CHECK(b(0, 1) == 0.0);
    CHECK(b(3, 1) == 1.0);

    const auto single = incidence_matrix(disjoint_edges(4, 1));
    CHECK(single.rows() == 4);
    CHECK(single.cols() == 1);
    for (std::size_t i = 0; i < 4; ++i) CHECK(single(i, 0) == 1.0);

    const auto b1 = incidence_matrix(three_triples());
    CHECK(b1.rows() == 5);
    for (std::size_t j = 0; j < 3; ++j) {
        double col = 0;
        for (std::size_t i = 0; i < 5; ++i) col += b1(i, j);
        CHECK(col == 3.0);
    }
    CHECK_THROWS_AS(incidence_matrix(edgeless(3, 2)), Error);
}

TEST_CASE("signless Laplacian")
{
    CHECK(signless_laplacian(disjoint_edges(3, 1)) == SymMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    const auto q = signless_laplacian(two_triples());
    CHECK(q == SymMatrix::from_rows({{1, 1, 1, 0}, {1, 2, 2, 1}, {1, 2, 2, 1}, {0, 1, 1, 1}}));
    const auto k4 = signless_laplacian(complete_k_graph(4, 2));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(k4(i, j) == (i == j ? 3.0 : 1.0));
    CHECK(signless_laplacian(edgeless(3, 2)) == SymMatrix(3));
}

TEST_CASE("degree and clique multigraph matrices")
{
    const auto c = clique_multigraph(three_triples());
    CHECK(c(3, 4) == 2.0);
    CHECK(c(0, 1) == 1.0);
    CHECK(c(1, 3) == 0.0);
    CHECK(c(0, 0) == 0.0);
    CHECK(degree_matrix(three_triples()) == [] {
        SymMatrix d(5);
        const double deg[] = {2, 1, 2, 2, 2};
        for (std::size_t i = 0; i < 5; ++i) d.set(i, i, deg[i]);
        return d;
    }());
    CHECK(clique_multigraph(disjoint_edges(3, 1)) == SymMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(clique_multigraph(edgeless(4, 3)) == SymMatrix(4));
}

TEST_CASE("line multigraph")
{
    CHECK(line_multigraph(three_triples()) == SymMatrix::from_rows({{0, 1, 1}, {1, 0, 2}, {1, 2, 0}}));
    CHECK(line_multigraph(two_triples()) == SymMatrix::from_rows({{0, 2}, {2, 0}}));
    CHECK(line_multigraph(disjoint_edges(3, 4)) == SymMatrix(4));
    CHECK_THROWS_AS(line_multigraph(edgeless(3, 2)), Error);

    CHECK(line_multigraph_edge_count(three_triples()) == 4);
    CHECK(line_multigraph_edge_count(two_triples()) == 2);
    CHECK(line_multigraph_edge_count(disjoint_edges(2, 5)) == 0);
    CHECK(line_multigraph_edge_count(edgeless(3, 2)) == 0);
}

TEST_CASE("subdivision adjacency")
{
    const auto a = subdivision_adjacency(two_triples());
    REQUIRE(a.order() == 6);
    const auto b = incidence_matrix(two_triples());
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            double expected = 0.0;
            if (i < 4 && j >= 4) expected = b(i, j - 4);
            if (i >= 4 && j < 4) expected = b(j, i - 4);
            CHECK(a(i, j) == expected);
        }
    const auto s1 = subdivision_adjacency(three_triples());
    CHECK(s1.order() == 8);
    double total = 0.0;
    for (double v : s1.data()) total += v;
    CHECK(total == 2.0 * 9.0);
    CHECK_THROWS_AS(subdivision_adjacency(edgeless(3, 2)), Error);
}

TEST_CASE("power hypergraphs")
{
    const auto p = power_hypergraph(path4(), {2, 5});
    CHECK(p.uniformity() == 5);
    CHECK(p.num_vertices() == 11);
    CHECK(p.num_edges() == 3);
    // Copies of v sit at 2v, 2v+1; the private vertex of edge j is 8 + j.
    CHECK(p.edges() == std::vector<Edge>{{0, 1, 2, 3, 8}, {2, 3, 4, 5, 9}, {4, 5, 6, 7, 10}});

    CHECK(power_hypergraph(three_triples(), {1, 3}) == three_triples());

    const auto single = power_hypergraph(disjoint_edges(2, 1), {1, 5});
    CHECK(single.num_vertices() == 5);
    CHECK(single.edges() == std::vector<Edge>{{0, 1, 2, 3, 4}});

    CHECK_THROWS_AS(power_hypergraph(path4(), {2, 3}), Error);
    CHECK_THROWS_AS(power_hypergraph(path4(), {0, 3}), Error);
    CHECK_NOTHROW(validate_power_params(path4(), {2, 4}, false));
    try {
        validate_power_params(path4(), {2, 4}, true);
        FAIL("expected InvalidPowerParams");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidPowerParams);
    }
}

TEST_CASE("property: exact Gram identities and counting laws on the random corpus")
{
    for (const auto& inst : corpus::random_instances()) {
        CAPTURE(inst.label);
        const auto& h = inst.h;
        const auto k = static_cast<double>(h.uniformity());
        const auto b = oracle::incidence(h);
        const auto line = line_multigraph(h);
        const auto clique = clique_multigraph(h);
        REQUIRE(is_integral(line));
        REQUIRE(is_integral(clique));

        Eigen::MatrixXd btb = b.transpose() * b;
        btb.diagonal().array() -= k;
        CHECK(from_eigen(btb) == line);

        Eigen::MatrixXd bbt = b * b.transpose();
        CHECK(from_eigen(bbt) == signless_laplacian(h));
        const auto deg = degree_summary(h);
        for (std::size_t v = 0; v < h.num_vertices(); ++v) bbt(v, v) -= static_cast<double>(deg.degrees[v]);
        CHECK(from_eigen(bbt) == clique);

        CHECK(2 * line_multigraph_edge_count(h) == deg.zagreb - h.uniformity() * h.num_edges());

        for (std::size_t j = 0; j < h.num_edges(); ++j) {
            double row = 0.0;
            for (std::size_t i = 0; i < h.num_edges(); ++i) row += line(j, i);
            double law = 0.0;
            for (auto v : h.edge(j)) law += static_cast<double>(deg.degrees[v]) - 1.0;
            CHECK(row == law);
        }

        const auto s = subdivision_adjacency(h);
        const auto n = h.num_vertices();
        for (std::size_t i = 0; i < s.order(); ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < s.order(); ++j) row += s(i, j);
            CHECK(row == (i < n ? static_cast<double>(deg.degrees[i]) : k));
        }
    }
}

TEST_CASE("property: power hypergraph shape and line multigraph scaling")
{
    for (const auto& inst : corpus::power_instances(20)) {
        CAPTURE(inst.label);
        const auto& h = inst.h;
        const auto [s, r] = inst.params;
        const auto p = power_hypergraph(h, inst.params);
        CHECK(p.uniformity() == r);
        CHECK(p.num_edges() == h.num_edges());
        CHECK(p.num_vertices() == h.num_vertices() * s + (r - h.uniformity() * s) * h.num_edges());
        CHECK(line_multigraph(p) == line_multigraph(h).scaled(static_cast<double>(s)));
        if (s == 1) {
            CHECK(is_linear(p) == is_linear(h));
            CHECK(line_multigraph(p) == line_multigraph(h));
        }
    }
}
