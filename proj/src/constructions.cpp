#include "hgenergy/constructions.hpp"

#include <fmt/format.h>

#include "hgenergy/error.hpp"

namespace hgenergy {

namespace {

void require_edges(const Hypergraph& h, const char* what)
{
    if (h.num_edges() == 0) throw Error(ErrorCode::EmptyHypergraph, fmt::format("{} needs at least one edge", what));
}

std::size_t intersection_size(const Edge& a, const Edge& b)
{
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else { ++common; ++i; ++j; }
    }
    return common;
}

} // namespace

RectMatrix incidence_matrix(const Hypergraph& h)
{
    require_edges(h, "incidence matrix");
    RectMatrix b(h.num_vertices(), h.num_edges());
    for (std::size_t j = 0; j < h.num_edges(); ++j)
        for (auto v : h.edge(j)) b(v, j) = 1.0;
    return b;
}

SymMatrix signless_laplacian(const Hypergraph& h)
{
    SymMatrix q(h.num_vertices());
    for (const auto& e : h.edges())
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a; b < e.size(); ++b) q.add(e[a], e[b], 1.0);
    return q;
}

SymMatrix degree_matrix(const Hypergraph& h)
{
    SymMatrix d(h.num_vertices());
    for (const auto& e : h.edges())
        for (auto v : e) d.add(v, v, 1.0);
    return d;
}

SymMatrix clique_multigraph(const Hypergraph& h)
{
    SymMatrix c(h.num_vertices());
    for (const auto& e : h.edges())
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) c.add(e[a], e[b], 1.0);
    return c;
}

SymMatrix line_multigraph(const Hypergraph& h)
{
    require_edges(h, "line multigraph");
    const auto m = h.num_edges();
    SymMatrix l(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            l.set(i, j, static_cast<double>(intersection_size(h.edge(i), h.edge(j))));
    return l;
}

std::uint64_t line_multigraph_edge_count(const Hypergraph& h)
{
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < h.num_edges(); ++i)
        for (std::size_t j = i + 1; j < h.num_edges(); ++j) total += intersection_size(h.edge(i), h.edge(j));
    return total;
}

SymMatrix subdivision_adjacency(const Hypergraph& h)
{
    require_edges(h, "subdivision graph");
    const auto n = h.num_vertices();
    SymMatrix a(n + h.num_edges());
    for (std::size_t j = 0; j < h.num_edges(); ++j)
        for (auto v : h.edge(j)) a.set(v, n + j, 1.0);
    return a;
}

void validate_power_params(const Hypergraph& h, PowerParams params, bool strict)
{
    const auto k = h.uniformity();
    if (params.s < 1) throw Error(ErrorCode::InvalidPowerParams, "s must be at least 1");
    const auto ks = k * params.s;
    if (params.r < ks || (strict && params.r == ks)) {
        throw Error(ErrorCode::InvalidPowerParams,
                    fmt::format("need r {} k*s = {}, got r = {}", strict ? ">" : ">=", ks, params.r));
    }
}

Hypergraph power_hypergraph(const Hypergraph& h, PowerParams params)
{
    validate_power_params(h, params, false);
    const auto s = params.s;
    const auto pad = params.r - h.uniformity() * s;
    const auto base = h.num_vertices() * s;

    std::vector<Edge> edges;
    edges.reserve(h.num_edges());
    for (std::size_t j = 0; j < h.num_edges(); ++j) {
        Edge e;
        e.reserve(params.r);
        for (auto v : h.edge(j))
            for (std::size_t c = 0; c < s; ++c) e.push_back(static_cast<Vertex>(v * s + c));
        for (std::size_t t = 0; t < pad; ++t) e.push_back(static_cast<Vertex>(base + j * pad + t));
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(base + pad * h.num_edges(), params.r, std::move(edges));
}

} // namespace hgenergy
