#ifndef HGENERGY_CONSTRUCTIONS_HPP
#define HGENERGY_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>

#include "hgenergy/hypergraph.hpp"
#include "hgenergy/spectra.hpp"

namespace hgenergy {

// Matrices derived from a k-graph H with n vertices and m edges. Every
// multigraph adjacency is filled from exact integer counts.

/// n x m 0/1 matrix, columns in canonical edge order. EmptyHypergraph if m = 0.
RectMatrix incidence_matrix(const Hypergraph& h);

/// Q = B B^T: degrees on the diagonal, co-membership counts off it.
SymMatrix signless_laplacian(const Hypergraph& h);

SymMatrix degree_matrix(const Hypergraph& h);

/// A_C = Q - D: number of edges containing both u and v.
SymMatrix clique_multigraph(const Hypergraph& h);

/// A_L = B^T B - kI: entry (e, f) is |e ∩ f|. EmptyHypergraph if m = 0.
SymMatrix line_multigraph(const Hypergraph& h);

/// Edge count of the line multigraph, summing |e ∩ f| over pairs.
std::uint64_t line_multigraph_edge_count(const Hypergraph& h);

/// Adjacency of the subdivision graph, [[0, B], [B^T, 0]] with the vertex
/// block first. EmptyHypergraph if m = 0.
SymMatrix subdivision_adjacency(const Hypergraph& h);

struct PowerParams {
    std::size_t s = 1;  // copies per original vertex
    std::size_t r = 2;  // uniformity of the result, r >= k * s
};

/// Generalized power hypergraph: every vertex v is blown up into s copies
/// (indices v*s .. v*s+s-1) and every edge j gains r - k*s private vertices
/// (indices n*s + j*(r-k*s) onward). InvalidPowerParams unless s >= 1 and
/// r >= k*s.
Hypergraph power_hypergraph(const Hypergraph& h, PowerParams params);

/// Throws InvalidPowerParams unless s >= 1 and r >= k*s (or r > k*s when strict).
void validate_power_params(const Hypergraph& h, PowerParams params, bool strict);

} // namespace hgenergy

#endif // HGENERGY_CONSTRUCTIONS_HPP
