#ifndef HGENERGY_HYPERGRAPH_HPP
#define HGENERGY_HYPERGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hgenergy/config.hpp"

namespace hgenergy {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// A k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are strictly ascending vertex lists, stored in lexicographic order
/// without duplicates, so two equal hypergraphs compare (and serialize)
/// identically. Immutable once built.
class Hypergraph {
public:
    /// Validates and canonicalizes. Repeated vertices inside an edge are
    /// collapsed before the size check, so {0,0} with k = 2 is EdgeWrongSize.
    static Hypergraph from_edges(std::size_t n, std::size_t k, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    std::size_t uniformity() const noexcept { return k_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    bool contains(const Edge& canonical_edge) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    Hypergraph(std::size_t n, std::size_t k, std::vector<Edge> edges)
        : n_(n), k_(k), edges_(std::move(edges)) {}

    std::size_t n_;
    std::size_t k_;
    std::vector<Edge> edges_;
};

struct DegreeSummary {
    std::vector<std::uint64_t> degrees;
    std::uint64_t max_degree = 0;
    std::uint64_t min_degree = 0;
    double avg_degree = 0.0;
    std::uint64_t zagreb = 0;
};

DegreeSummary degree_summary(const Hypergraph& h);

/// Sum of squared vertex degrees.
std::uint64_t zagreb_index(const Hypergraph& h);

/// C(n, k), saturating at UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Advances `subset` (ascending, values < n) to its lexicographic successor.
/// Returns false when it was already the last k-subset.
bool next_k_subset(std::vector<Vertex>& subset, std::size_t n);

/// Visits every k-subset of {0..n-1} in lexicographic order.
void for_each_k_subset(std::size_t n, std::size_t k, const std::function<void(std::span<const Vertex>)>& visit);

Hypergraph complete_k_graph(std::size_t n, std::size_t k, const Limits& limits = {});
Hypergraph complement(const Hypergraph& h, const Limits& limits = {});
Hypergraph edgeless(std::size_t n, std::size_t k);

Hypergraph remove_edge(const Hypergraph& h, Edge e);
Hypergraph add_edge(const Hypergraph& h, Edge e);

/// Lexicographically first k-subset that is not an edge, if any.
std::optional<Edge> first_absent_edge(const Hypergraph& h);

bool is_linear(const Hypergraph& h);
bool is_regular(const Hypergraph& h);
bool is_complete(const Hypergraph& h);
// Every vertex lies in at most one edge (isolated vertices allowed).
bool has_disjoint_edges(const Hypergraph& h);
bool has_isolated_vertices(const Hypergraph& h);

/// SplitMix64. Fixed so generated instances are identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Each k-subset, visited in lexicographic order, is kept when the next
/// SplitMix64 draw is below p.
Hypergraph random_uniform(std::size_t n, std::size_t k, double p, std::uint64_t seed, const Limits& limits = {});

/// m pairwise disjoint edges {0..k-1}, {k..2k-1}, ... plus isolated vertices.
Hypergraph disjoint_edges(std::size_t k, std::size_t m, std::size_t isolated = 0);

} // namespace hgenergy

#endif // HGENERGY_HYPERGRAPH_HPP
