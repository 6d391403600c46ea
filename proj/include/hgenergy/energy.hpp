#ifndef HGENERGY_ENERGY_HPP
#define HGENERGY_ENERGY_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "hgenergy/config.hpp"
#include "hgenergy/constructions.hpp"
#include "hgenergy/hypergraph.hpp"
#include "hgenergy/spectra.hpp"

namespace hgenergy {

/// Eigenvalues of the signless Laplacian Q = B B^T (descending, unclamped).
Spectrum q_spectrum(const Hypergraph& h, const Tolerances& tol = {});

/// BE(H): energy of the incidence matrix, sum of sqrt(lambda_i(Q)).
/// Zero for an edgeless hypergraph.
double incidence_energy(const Hypergraph& h, const Tolerances& tol = {});

/// BE(H) computed as sum of sqrt(k + lambda_i(A_L)) over the m line eigenvalues.
double incidence_energy_via_line(const Hypergraph& h, const Tolerances& tol = {});

/// Closed form BE of the complete k-graph on n vertices, with
/// rho = k (n-1)! / ((k-1)! (n-k)!) and lambda = (n-2)! / ((k-1)! (n-k-1)!)
/// of multiplicity n-1. Factorial ratios go through log-gamma sums.
double complete_be_closed_form(std::size_t n, std::size_t k);

/// QE(H) = E(Q - d(H) I).
double signless_laplacian_energy(const Hypergraph& h, const Tolerances& tol = {});

struct OmegaCount {
    std::size_t omega = 0;
    // Some eigenvalue lies within the tie tolerance of d(H).
    bool boundary = false;
};

/// Number of Q eigenvalues >= d(H), counted with the omega_tie slack.
OmegaCount omega_count(const Hypergraph& h, const Tolerances& tol = {});
std::size_t omega(const Hypergraph& h, const Tolerances& tol = {});

/// QE through 2 * sum_{i <= omega} lambda_i - 2 * omega * d(H).
double qe_via_omega(const Hypergraph& h, const Tolerances& tol = {});

/// k * sqrt(Z(H) / n), a lower bound on rho(Q).
double zfrak(const Hypergraph& h);

/// rho(Q), the largest Q eigenvalue.
double q_spectral_radius(const Hypergraph& h, const Tolerances& tol = {});

/// E(A_L). EmptyHypergraph when m = 0.
double line_energy(const Hypergraph& h, const Tolerances& tol = {});

/// Q(H^r_s) spectrum assembled from the Q spectrum of the base.
struct PowerSpectrumClosedForm {
    // (value, multiplicity); zero multiplicities are kept so the three groups
    // stay visible.
    std::vector<std::pair<double, std::size_t>> values_with_multiplicity;
    // Number of positive base eigenvalues.
    std::size_t t = 0;

    std::size_t total_multiplicity() const;
    /// All eigenvalues, descending.
    std::vector<double> expanded() const;
};

/// Requires r > k*s.
PowerSpectrumClosedForm power_q_spectrum_closed_form(const Hypergraph& h, PowerParams params,
                                                     const Tolerances& tol = {});

enum class PowerQeCase { A, B, C };
std::string_view to_string(PowerQeCase c);

struct PowerQeClosedForm {
    PowerQeCase which = PowerQeCase::A;
    // Exact QE(H^r_s) in cases A and B; the strict upper bound 2ksm in case C.
    double value = 0.0;
    bool is_upper_bound = false;
    std::size_t power_vertices = 0;  // ns + (r - ks)m
    double power_avg_degree = 0.0;   // rm / (ns + (r - ks)m)
};

/// Classifies by comparing r - ks with d(H^r_s) in exact integer arithmetic.
/// Requires r > k*s.
PowerQeClosedForm power_qe_closed_form(const Hypergraph& h, PowerParams params);

enum class Parity { EvenInteger, OddInteger, IrrationalOrUndetected };
std::string_view to_string(Parity p);

/// Integral BE values must be even for even k and share the parity of m for
/// odd k. A detected integer that breaks this throws ParityViolation.
Parity parity_classification(const Hypergraph& h, const Tolerances& tol = {});
Parity classify_parity(double be, std::size_t k, std::size_t m, const Tolerances& tol = {});

struct EnergyReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    double be = 0.0;
    double qe = 0.0;
    double line_energy = 0.0;
    std::size_t omega = 0;
    bool omega_boundary = false;
    double avg_degree = 0.0;
    double spectral_radius_q = 0.0;
    std::uint64_t max_degree = 0;
    std::uint64_t min_degree = 0;
    std::uint64_t zagreb = 0;
    double zfrak = 0.0;
    Parity parity = Parity::IrrationalOrUndetected;
};

EnergyReport energy_report(const Hypergraph& h, const Tolerances& tol = {});

} // namespace hgenergy

#endif // HGENERGY_ENERGY_HPP
