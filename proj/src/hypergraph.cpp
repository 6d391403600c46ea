#include "hgenergy/hypergraph.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <limits>
#include <numeric>

#include "hgenergy/error.hpp"

namespace hgenergy {

namespace {

Edge canonical_edge(std::size_t n, std::size_t k, Edge e)
{
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() != k) {
        throw Error(ErrorCode::EdgeWrongSize,
                    fmt::format("edge has {} distinct vertices, expected {}", e.size(), k));
    }
    if (e.back() >= n) {
        throw Error(ErrorCode::VertexOutOfRange, fmt::format("vertex {} not below n = {}", e.back(), n));
    }
    return e;
}

void check_shape(std::size_t n, std::size_t k)
{
    if (n < 1) throw Error(ErrorCode::InvalidParams, "hypergraph needs at least one vertex");
    if (k < 2) throw Error(ErrorCode::InvalidParams, "uniformity k must be at least 2");
    if (n > std::numeric_limits<Vertex>::max()) throw Error(ErrorCode::InvalidParams, "too many vertices");
}

void check_edge_budget(std::size_t n, std::size_t k, const Limits& limits)
{
    const auto count = binomial(n, k);
    if (count > limits.max_edges) {
        throw Error(ErrorCode::TooManyEdges,
                    fmt::format("C({}, {}) exceeds the edge limit {}", n, k, limits.max_edges));
    }
}

} // namespace

Hypergraph Hypergraph::from_edges(std::size_t n, std::size_t k, std::vector<Edge> edges)
{
    check_shape(n, k);
    for (auto& e : edges) e = canonical_edge(n, k, std::move(e));
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw Error(ErrorCode::DuplicateEdge, fmt::format("edge {{{}}} appears twice", fmt::join(*dup, ",")));
    }
    return Hypergraph(n, k, std::move(edges));
}

bool Hypergraph::contains(const Edge& canonical) const
{
    return std::binary_search(edges_.begin(), edges_.end(), canonical);
}

DegreeSummary degree_summary(const Hypergraph& h)
{
    DegreeSummary s;
    s.degrees.assign(h.num_vertices(), 0);
    for (const auto& e : h.edges())
        for (auto v : e) ++s.degrees[v];
    auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
    s.avg_degree = static_cast<double>(h.uniformity() * h.num_edges()) / static_cast<double>(h.num_vertices());
    for (auto d : s.degrees) s.zagreb += d * d;
    return s;
}

std::uint64_t zagreb_index(const Hypergraph& h) { return degree_summary(h).zagreb; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step.
        const std::uint64_t factor = n - k + i;
        const std::uint64_t g = std::gcd(result, i);
        const std::uint64_t reduced = result / g;
        const std::uint64_t denom = i / g;
        if (factor / denom > std::numeric_limits<std::uint64_t>::max() / reduced) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result = reduced * (factor / denom);
    }
    return result;
}

bool next_k_subset(std::vector<Vertex>& subset, std::size_t n)
{
    const std::size_t k = subset.size();
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    return true;
}

void for_each_k_subset(std::size_t n, std::size_t k, const std::function<void(std::span<const Vertex>)>& visit)
{
    if (k == 0 || k > n) return;
    std::vector<Vertex> idx(k);
    std::iota(idx.begin(), idx.end(), Vertex{0});
    do {
        visit(idx);
    } while (next_k_subset(idx, n));
}

std::optional<Edge> first_absent_edge(const Hypergraph& h)
{
    const auto k = h.uniformity();
    const auto n = h.num_vertices();
    if (k > n) return std::nullopt;
    Edge idx(k);
    std::iota(idx.begin(), idx.end(), Vertex{0});
    // Edges are sorted, so walk them in step with the subset enumeration.
    for (const auto& e : h.edges()) {
        if (e != idx) return idx;
        if (!next_k_subset(idx, n)) return std::nullopt;
    }
    return idx;
}

Hypergraph complete_k_graph(std::size_t n, std::size_t k, const Limits& limits)
{
    check_shape(n, k);
    if (k > n) throw Error(ErrorCode::InvalidParams, fmt::format("complete k-graph needs k <= n, got k={} n={}", k, n));
    check_edge_budget(n, k, limits);
    std::vector<Edge> edges;
    edges.reserve(binomial(n, k));
    for_each_k_subset(n, k, [&](std::span<const Vertex> s) { edges.emplace_back(s.begin(), s.end()); });
    return Hypergraph::from_edges(n, k, std::move(edges));
}

Hypergraph complement(const Hypergraph& h, const Limits& limits)
{
    const auto n = h.num_vertices();
    const auto k = h.uniformity();
    check_edge_budget(n, k, limits);
    std::vector<Edge> edges;
    for_each_k_subset(n, k, [&](std::span<const Vertex> s) {
        Edge e(s.begin(), s.end());
        if (!h.contains(e)) edges.push_back(std::move(e));
    });
    return Hypergraph::from_edges(n, k, std::move(edges));
}

Hypergraph edgeless(std::size_t n, std::size_t k) { return Hypergraph::from_edges(n, k, {}); }

Hypergraph remove_edge(const Hypergraph& h, Edge e)
{
    e = canonical_edge(h.num_vertices(), h.uniformity(), std::move(e));
    auto edges = h.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) {
        throw Error(ErrorCode::EdgeNotFound, fmt::format("edge {{{}}} not present", fmt::join(e, ",")));
    }
    edges.erase(it);
    return Hypergraph::from_edges(h.num_vertices(), h.uniformity(), std::move(edges));
}

Hypergraph add_edge(const Hypergraph& h, Edge e)
{
    auto edges = h.edges();
    edges.push_back(std::move(e));
    return Hypergraph::from_edges(h.num_vertices(), h.uniformity(), std::move(edges));
}

bool is_linear(const Hypergraph& h)
{
    const auto& edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            std::size_t common = 0;
            auto a = edges[i].begin();
            auto b = edges[j].begin();
            while (a != edges[i].end() && b != edges[j].end()) {
                if (*a < *b) ++a;
                else if (*b < *a) ++b;
                else { ++common; ++a; ++b; }
            }
            if (common > 1) return false;
        }
    }
    return true;
}

bool is_regular(const Hypergraph& h)
{
    const auto s = degree_summary(h);
    return s.max_degree == s.min_degree;
}

bool is_complete(const Hypergraph& h)
{
    return h.num_edges() == binomial(h.num_vertices(), h.uniformity());
}

bool has_disjoint_edges(const Hypergraph& h) { return degree_summary(h).max_degree <= 1; }

bool has_isolated_vertices(const Hypergraph& h) { return degree_summary(h).min_degree == 0; }

Hypergraph random_uniform(std::size_t n, std::size_t k, double p, std::uint64_t seed, const Limits& limits)
{
    check_shape(n, k);
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidParams, "probability must lie in [0, 1]");
    check_edge_budget(n, k, limits);
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for_each_k_subset(n, k, [&](std::span<const Vertex> s) {
        if (rng.next_unit() < p) edges.emplace_back(s.begin(), s.end());
    });
    return Hypergraph::from_edges(n, k, std::move(edges));
}

Hypergraph disjoint_edges(std::size_t k, std::size_t m, std::size_t isolated)
{
    std::vector<Edge> edges(m);
    for (std::size_t j = 0; j < m; ++j) {
        edges[j].resize(k);
        std::iota(edges[j].begin(), edges[j].end(), static_cast<Vertex>(j * k));
    }
    return Hypergraph::from_edges(k * m + isolated, k, std::move(edges));
}

} // namespace hgenergy
