#include "hgenergy/energy.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <functional>

#include "hgenergy/error.hpp"

namespace hgenergy {

namespace {

double avg_degree(const Hypergraph& h)
{
    return static_cast<double>(h.uniformity() * h.num_edges()) / static_cast<double>(h.num_vertices());
}

double sum_of_roots(std::vector<double> gram_eigenvalues, const Tolerances& tol)
{
    double total = 0.0;
    for (double v : clamp_psd(std::move(gram_eigenvalues), tol)) total += std::sqrt(v);
    return total;
}

double qe_from(const std::vector<double>& q, double d)
{
    double total = 0.0;
    for (double v : q) total += std::abs(v - d);
    return total;
}

OmegaCount omega_from(const std::vector<double>& q, double d, const Tolerances& tol)
{
    OmegaCount c;
    for (double v : q) {
        if (v >= d - tol.omega_tie) ++c.omega;
        if (std::abs(v - d) <= tol.omega_tie) c.boundary = true;
    }
    return c;
}

} // namespace

Spectrum q_spectrum(const Hypergraph& h, const Tolerances& tol) { return sym_eigenvalues(signless_laplacian(h), tol); }

double incidence_energy(const Hypergraph& h, const Tolerances& tol)
{
    if (h.num_edges() == 0) return 0.0;
    return sum_of_roots(q_spectrum(h, tol).values, tol);
}

double incidence_energy_via_line(const Hypergraph& h, const Tolerances& tol)
{
    auto values = sym_eigenvalues(line_multigraph(h), tol).values;
    const auto k = static_cast<double>(h.uniformity());
    for (double& v : values) v += k;
    return sum_of_roots(std::move(values), tol);
}

double complete_be_closed_form(std::size_t n, std::size_t k)
{
    if (k < 2 || k > n) {
        throw Error(ErrorCode::InvalidParams, fmt::format("closed form needs 2 <= k <= n, got n={} k={}", n, k));
    }
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    // log of k (n-1)! / ((k-1)! (n-k)!)
    const double log_rho = std::log(kd) + std::lgamma(nd) - std::lgamma(kd) - std::lgamma(nd - kd + 1.0);
    double lambda = 0.0;
    if (n > k) {
        // log of (n-2)! / ((k-1)! (n-k-1)!)
        lambda = std::exp(std::lgamma(nd - 1.0) - std::lgamma(kd) - std::lgamma(nd - kd));
    }
    return std::sqrt(std::exp(log_rho)) + (nd - 1.0) * std::sqrt(lambda);
}

double signless_laplacian_energy(const Hypergraph& h, const Tolerances& tol)
{
    if (h.num_edges() == 0) return 0.0;
    return qe_from(q_spectrum(h, tol).values, avg_degree(h));
}

OmegaCount omega_count(const Hypergraph& h, const Tolerances& tol)
{
    return omega_from(q_spectrum(h, tol).values, avg_degree(h), tol);
}

std::size_t omega(const Hypergraph& h, const Tolerances& tol) { return omega_count(h, tol).omega; }

double qe_via_omega(const Hypergraph& h, const Tolerances& tol)
{
    const auto q = q_spectrum(h, tol).values;
    const double d = avg_degree(h);
    const auto w = omega_from(q, d, tol).omega;
    double top = 0.0;
    for (std::size_t i = 0; i < w; ++i) top += q[i];
    return 2.0 * top - 2.0 * static_cast<double>(w) * d;
}

double zfrak(const Hypergraph& h)
{
    return static_cast<double>(h.uniformity()) *
           std::sqrt(static_cast<double>(zagreb_index(h)) / static_cast<double>(h.num_vertices()));
}

double q_spectral_radius(const Hypergraph& h, const Tolerances& tol)
{
    return spectral_radius(signless_laplacian(h), tol);
}

double line_energy(const Hypergraph& h, const Tolerances& tol) { return matrix_energy(line_multigraph(h), tol); }

std::size_t PowerSpectrumClosedForm::total_multiplicity() const
{
    std::size_t total = 0;
    for (const auto& [value, mult] : values_with_multiplicity) total += mult;
    return total;
}

std::vector<double> PowerSpectrumClosedForm::expanded() const
{
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& [value, mult] : values_with_multiplicity) out.insert(out.end(), mult, value);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

PowerSpectrumClosedForm power_q_spectrum_closed_form(const Hypergraph& h, PowerParams params, const Tolerances& tol)
{
    validate_power_params(h, params, true);
    const auto n = h.num_vertices();
    const auto m = h.num_edges();
    const auto pad = params.r - h.uniformity() * params.s;
    const auto s = static_cast<double>(params.s);

    const auto base = clamp_psd(q_spectrum(h, tol).values, tol);
    PowerSpectrumClosedForm out;
    for (double v : base) {
        if (v <= 0.0) break;
        out.values_with_multiplicity.emplace_back(s * v + static_cast<double>(pad), 1);
        ++out.t;
    }
    out.values_with_multiplicity.emplace_back(static_cast<double>(pad), m - out.t);
    out.values_with_multiplicity.emplace_back(0.0, (pad - 1) * m + params.s * n);
    return out;
}

std::string_view to_string(PowerQeCase c)
{
    switch (c) {
    case PowerQeCase::A: return "a";
    case PowerQeCase::B: return "b";
    case PowerQeCase::C: return "c";
    }
    return "?";
}

PowerQeClosedForm power_qe_closed_form(const Hypergraph& h, PowerParams params)
{
    validate_power_params(h, params, true);
    const auto n = h.num_vertices();
    const auto m = h.num_edges();
    const auto ks = h.uniformity() * params.s;
    const auto pad = params.r - ks;

    PowerQeClosedForm out;
    out.power_vertices = n * params.s + pad * m;
    const double verts = static_cast<double>(out.power_vertices);
    const double md = static_cast<double>(m);
    const double rd = static_cast<double>(params.r);
    out.power_avg_degree = rd * md / verts;

    // r - ks versus rm / |V|, cross-multiplied.
    const auto lhs = static_cast<std::uint64_t>(pad) * out.power_vertices;
    const auto rhs = static_cast<std::uint64_t>(params.r) * m;
    const double two_ksm = 2.0 * static_cast<double>(ks) * md;
    if (lhs > rhs) {
        out.which = PowerQeCase::A;
        out.value = 2.0 * rd * md * (1.0 - md / verts);
    } else if (lhs == rhs) {
        out.which = PowerQeCase::B;
        out.value = two_ksm;
    } else {
        out.which = PowerQeCase::C;
        out.value = two_ksm;
        out.is_upper_bound = true;
    }
    return out;
}

std::string_view to_string(Parity p)
{
    switch (p) {
    case Parity::EvenInteger: return "even-integer";
    case Parity::OddInteger: return "odd-integer";
    case Parity::IrrationalOrUndetected: return "irrational-or-undetected";
    }
    return "?";
}

Parity classify_parity(double be, std::size_t k, std::size_t m, const Tolerances& tol)
{
    const double nearest = std::round(be);
    if (std::abs(be - nearest) >= tol.integer_window) return Parity::IrrationalOrUndetected;

    const auto value = static_cast<std::uint64_t>(nearest);
    const bool even = value % 2 == 0;
    const bool expect_even = (k % 2 == 0) || (m % 2 == 0);
    if (even != expect_even) {
        throw Error(ErrorCode::ParityViolation,
                    fmt::format("BE = {:.17g} rounds to {}, but k = {} and m = {} force {} parity", be, value, k, m,
                                expect_even ? "even" : "odd"));
    }
    return even ? Parity::EvenInteger : Parity::OddInteger;
}

Parity parity_classification(const Hypergraph& h, const Tolerances& tol)
{
    return classify_parity(incidence_energy(h, tol), h.uniformity(), h.num_edges(), tol);
}

EnergyReport energy_report(const Hypergraph& h, const Tolerances& tol)
{
    EnergyReport r;
    r.n = h.num_vertices();
    r.m = h.num_edges();
    r.k = h.uniformity();

    const auto degrees = degree_summary(h);
    r.avg_degree = degrees.avg_degree;
    r.max_degree = degrees.max_degree;
    r.min_degree = degrees.min_degree;
    r.zagreb = degrees.zagreb;
    r.zfrak = zfrak(h);

    const auto q = q_spectrum(h, tol).values;
    r.spectral_radius_q = std::max(std::abs(q.front()), std::abs(q.back()));
    const auto w = omega_from(q, r.avg_degree, tol);
    r.omega = w.omega;
    r.omega_boundary = w.boundary;
    if (r.m > 0) {
        r.be = sum_of_roots(q, tol);
        r.qe = qe_from(q, r.avg_degree);
        r.line_energy = line_energy(h, tol);
    }
    r.parity = classify_parity(r.be, r.k, r.m, tol);
    return r;
}

} // namespace hgenergy
