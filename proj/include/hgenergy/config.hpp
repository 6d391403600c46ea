#ifndef HGENERGY_CONFIG_HPP
#define HGENERGY_CONFIG_HPP

#include <cstdint>

namespace hgenergy {

/// Every numeric threshold used by the library. One instance is threaded
/// through the spectra, energy and certify layers; the CLI overrides fields.
struct Tolerances {
    // Cyclic Jacobi: stop when off(M) <= jacobi_rel * ||M||_F.
    double jacobi_rel = 1e-12;
    // Absolute floor used when ||M||_F == 0.
    double jacobi_abs = 1e-300;
    int max_sweeps = 100;

    // Gram eigenvalues in (-clamp, clamp) are zeroed,
    // clamp = psd_clamp_rel * max(1, largest eigenvalue).
    double psd_clamp_rel = 1e-10;

    // numeric_rank counts |lambda| > rank_rel * max(1, max|lambda|).
    double rank_rel = 1e-9;

    // |BE - round(BE)| below this is treated as an integer.
    double integer_window = 1e-9;

    // lambda >= d(H) - omega_tie counts towards omega.
    double omega_tie = 1e-9;

    // Default relative tolerance for certified (in)equalities.
    double check_rel = 1e-8;

    // Absolute tolerance for eigenvalue-by-eigenvalue spectrum matching.
    double spectrum_abs = 1e-7;
};

struct Limits {
    // Upper bound on C(n, k) for complete/complement/random generation.
    std::uint64_t max_edges = 1'000'000;
};

} // namespace hgenergy

#endif // HGENERGY_CONFIG_HPP
