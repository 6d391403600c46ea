#include "hgenergy/certify.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <functional>

#include "hgenergy/energy.hpp"
#include "hgenergy/error.hpp"

namespace hgenergy {

namespace {

[[noreturn]] void precondition(const std::string& what) { throw Error(ErrorCode::PreconditionFailed, what); }

void require_edges(const Hypergraph& h)
{
    if (h.num_edges() == 0) precondition("needs at least one edge");
}

double to_d(std::uint64_t v) { return static_cast<double>(v); }

double root(double x) { return std::sqrt(std::max(0.0, x)); }

double max_abs_diff(const SymMatrix& a, const SymMatrix& b)
{
    if (a.order() != b.order()) return INFINITY;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size()) return INFINITY;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::size_t incidence_rank(const Hypergraph& h, const Tolerances& tol)
{
    if (h.num_edges() == 0) return 0;
    return singular_values(incidence_matrix(h), tol).numeric_rank;
}

} // namespace

std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Eq: return "=";
    case Relation::Ge: return ">=";
    case Relation::Gt: return ">";
    }
    return "?";
}

CheckResult make_check(std::string name, double lhs, Relation relation, double rhs, bool equality_expected,
                       const Tolerances& tol, std::optional<double> tolerance)
{
    CheckResult c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.relation = relation;
    c.equality_expected = equality_expected;
    c.tolerance = tolerance.value_or(tol.check_rel * std::max({1.0, std::abs(lhs), std::abs(rhs)}));

    const bool greater = relation == Relation::Ge || relation == Relation::Gt;
    c.slack = greater ? lhs - rhs : rhs - lhs;
    switch (relation) {
    case Relation::Le:
    case Relation::Ge: c.holds = c.slack >= -c.tolerance; break;
    case Relation::Lt:
    case Relation::Gt: c.holds = c.slack > c.tolerance; break;
    case Relation::Eq: c.holds = std::abs(c.slack) <= c.tolerance; break;
    }
    if (equality_expected) c.holds = c.holds && std::abs(c.slack) <= c.tolerance;
    // NaN slack never certifies anything.
    if (std::isnan(c.slack)) c.holds = false;
    return c;
}

CheckResult make_skipped(std::string name, std::string reason)
{
    CheckResult c;
    c.name = std::move(name);
    c.lhs = NAN;
    c.rhs = NAN;
    c.slack = NAN;
    c.relation = Relation::Le;
    c.holds = true;
    c.skipped_reason = std::move(reason);
    return c;
}

Checks check_subdivision_identity(const Hypergraph& h, const Tolerances& tol)
{
    require_edges(h);
    const double be = incidence_energy(h, tol);
    const double half = 0.5 * matrix_energy(subdivision_adjacency(h), tol);
    return {make_check("subdivision_identity", be, Relation::Eq, half, true, tol)};
}

Checks check_subdivision_spectrum(const Hypergraph& h, const Tolerances& tol)
{
    require_edges(h);
    const auto q = clamp_psd(q_spectrum(h, tol).values, tol);
    std::vector<double> expected;
    for (double v : q)
        if (v > 0.0) {
            expected.push_back(std::sqrt(v));
            expected.push_back(-std::sqrt(v));
        }
    expected.resize(h.num_vertices() + h.num_edges(), 0.0);
    std::sort(expected.begin(), expected.end(), std::greater<>());
    const auto actual = sym_eigenvalues(subdivision_adjacency(h), tol).values;
    return {make_check("subdivision_spectrum", max_abs_diff(actual, expected), Relation::Eq, 0.0, true, tol,
                       tol.spectrum_abs)};
}

Checks check_be_dual_route(const Hypergraph& h, const Tolerances& tol)
{
    require_edges(h);
    return {make_check("be_dual_route", incidence_energy(h, tol), Relation::Eq, incidence_energy_via_line(h, tol),
                       true, tol)};
}

Checks check_qe_omega_identity(const Hypergraph& h, const Tolerances& tol)
{
    return {make_check("qe_omega_identity", signless_laplacian_energy(h, tol), Relation::Eq, qe_via_omega(h, tol),
                       true, tol)};
}

Checks check_be_parity(const Hypergraph& h, const Tolerances& tol)
{
    const double be = incidence_energy(h, tol);
    const double nearest = std::round(be);
    if (std::abs(be - nearest) >= tol.integer_window) precondition("BE is not integral within the detection window");
    const double observed = std::fmod(nearest, 2.0);
    try {
        const auto parity = classify_parity(be, h.uniformity(), h.num_edges(), tol);
        const double expected = parity == Parity::EvenInteger ? 0.0 : 1.0;
        return {make_check("be_parity", observed, Relation::Eq, expected, true, tol, 0.0)};
    } catch (const Error& err) {
        if (err.code() != ErrorCode::ParityViolation) throw;
        return {make_check("be_parity", observed, Relation::Eq, 1.0 - observed, true, tol, 0.0)};
    }
}

Checks check_be_range(const Hypergraph& h, const Tolerances& tol)
{
    const double k = to_d(h.uniformity());
    const double m = to_d(h.num_edges());
    const double n = to_d(h.num_vertices());
    const double be = incidence_energy(h, tol);
    return {
        make_check("be_range.lower", std::sqrt(k * m), Relation::Le, be, h.num_edges() <= 1, tol),
        make_check("be_range.upper", be, Relation::Le, std::sqrt(k * m * n), h.num_edges() == 0, tol),
    };
}

Checks check_rank_bound(const Hypergraph& h, const Tolerances& tol)
{
    const double k = to_d(h.uniformity());
    const double m = to_d(h.num_edges());
    const auto rank = incidence_rank(h, tol);
    const double mid = std::sqrt(k * m * to_d(rank));
    return {
        make_check("rank_bound", incidence_energy(h, tol), Relation::Le, mid, has_disjoint_edges(h), tol),
        make_check("rank_bound.chain", mid, Relation::Le, std::sqrt(k) * m, rank == h.num_edges(), tol),
    };
}

Checks check_rho_index_bound(const Hypergraph& h, const Tolerances& tol)
{
    const double km = to_d(h.uniformity() * h.num_edges());
    const double n = to_d(h.num_vertices());
    const double rho = q_spectral_radius(h, tol);
    const double bound = std::sqrt(rho) + root((n - 1.0) * (km - rho));
    return {make_check("rho_index_bound", incidence_energy(h, tol), Relation::Le, bound, is_complete(h), tol)};
}

Checks check_zagreb_index_bound(const Hypergraph& h, const Tolerances& tol)
{
    const double km = to_d(h.uniformity() * h.num_edges());
    const double n = to_d(h.num_vertices());
    const double z = zfrak(h);
    const double rho = q_spectral_radius(h, tol);
    const double zagreb_bound = std::sqrt(z) + root((n - 1.0) * (km - z));
    const double rho_bound = std::sqrt(rho) + root((n - 1.0) * (km - rho));
    return {
        make_check("zagreb_index_bound", incidence_energy(h, tol), Relation::Le, zagreb_bound, is_complete(h), tol),
        // sqrt(x) + sqrt((n-1)(km-x)) decreases past km/n and zfrak <= rho, so
        // the spectrum-free bound sits above the rho bound.
        make_check("zagreb_index_bound.vs_rho", rho_bound, Relation::Le, zagreb_bound, is_regular(h), tol),
    };
}

Checks check_rho_geq_zfrak(const Hypergraph& h, const Tolerances& tol)
{
    return {make_check("rho_geq_zfrak", zfrak(h), Relation::Le, q_spectral_radius(h, tol), is_regular(h), tol)};
}

Checks check_trace_bound(const Hypergraph& h, const Tolerances& tol)
{
    double sum_sq = 0.0;
    for (double v : q_spectrum(h, tol).values) sum_sq += v * v;
    const double bound = to_d(h.uniformity()) * to_d(zagreb_index(h));
    return {make_check("trace_bound", sum_sq, Relation::Le, bound, has_disjoint_edges(h), tol)};
}

Checks check_lower_bound_zagreb(const Hypergraph& h, const Tolerances& tol)
{
    const auto deg = degree_summary(h);
    const double k = to_d(h.uniformity());
    const double m = to_d(h.num_edges());
    const double be = incidence_energy(h, tol);
    double zagreb_bound = 0.0;
    double delta_bound = 0.0;
    if (h.num_edges() > 0) {
        zagreb_bound = std::sqrt(std::pow(k * m, 3.0) / (k * to_d(deg.zagreb)));
        delta_bound = std::sqrt(k) * m / std::sqrt(to_d(deg.max_degree));
    }
    const bool disjoint = deg.max_degree <= 1;
    const bool delta_equality = h.num_edges() == 0 || (disjoint && deg.min_degree == 1);
    return {
        make_check("lower_bound_zagreb", zagreb_bound, Relation::Le, be, disjoint, tol),
        make_check("lower_bound_zagreb.delta", delta_bound, Relation::Le, zagreb_bound, delta_equality, tol),
    };
}

Checks check_avg_degree_rho(const Hypergraph& h, const Tolerances& tol)
{
    const double kd = to_d(h.uniformity()) * degree_summary(h).avg_degree;
    return {make_check("avg_degree_rho", kd, Relation::Le, q_spectral_radius(h, tol), is_regular(h), tol)};
}

Checks check_nordhaus_gaddum(const Hypergraph& h, const Tolerances& tol, const Limits& limits)
{
    const auto n = h.num_vertices();
    const auto k = h.uniformity();
    const auto total = binomial(n, k);
    if (total > limits.max_edges) precondition(fmt::format("complement needs C({}, {}) edges, over the limit", n, k));
    if (total == 0) precondition("k exceeds n, no k-subsets");

    const double sum = incidence_energy(h, tol) + incidence_energy(complement(h, limits), tol);
    const double nd = to_d(n);
    const double kd = to_d(k);
    const double c = to_d(total);
    const double lower = std::sqrt(kd) * c / std::sqrt(to_d(binomial(n - 1, k - 1)));
    const double upper = kd * std::sqrt(2.0 / nd * c) + std::sqrt(2.0 * kd * (nd - 1.0) * (nd - kd) / nd * c);
    return {
        make_check("nordhaus_gaddum.lower", lower, Relation::Le, sum, n == k, tol),
        make_check("nordhaus_gaddum.upper", sum, Relation::Le, upper, false, tol),
    };
}

Checks check_edge_monotonicity(const Hypergraph& h, const Edge& e, const Tolerances& tol)
{
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (!h.contains(sorted)) precondition("edge is not in the hypergraph");
    const double without = incidence_energy(remove_edge(h, sorted), tol);
    return {make_check("edge_monotonicity", without, Relation::Lt, incidence_energy(h, tol), false, tol)};
}

Checks check_qe_edge_perturbation(const Hypergraph& h, const Edge& e, const Tolerances& tol)
{
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (h.contains(sorted)) precondition("edge is already in the hypergraph");
    const auto bigger = add_edge(h, sorted);
    const double delta =
        std::abs(signless_laplacian_energy(bigger, tol) - signless_laplacian_energy(h, tol));
    const double k = to_d(h.uniformity());
    const double n = to_d(h.num_vertices());
    const bool boundary = h.num_vertices() == h.uniformity() && h.num_edges() == 0;
    return {make_check("qe_edge_perturbation", delta, Relation::Le, 2.0 * k - 2.0 * k / n, boundary, tol)};
}

Checks check_qe_line_trichotomy(const Hypergraph& h, const Tolerances& tol)
{
    require_edges(h);
    const auto n = h.num_vertices();
    const auto m = h.num_edges();
    const double qe = signless_laplacian_energy(h, tol);
    const double el = line_energy(h, tol);
    const double k = to_d(h.uniformity());
    if (m == n) return {make_check("qe_line_trichotomy.equal", qe, Relation::Eq, el, true, tol)};
    if (m < n) {
        const double gap = 2.0 * k * to_d(m) * to_d(n - m) / to_d(n);
        return {
            make_check("qe_line_trichotomy.lower", qe - gap, Relation::Le, el, has_disjoint_edges(h), tol),
            make_check("qe_line_trichotomy.upper", el, Relation::Lt, qe, false, tol),
        };
    }
    return {
        make_check("qe_line_trichotomy.lower", qe, Relation::Lt, el, false, tol),
        make_check("qe_line_trichotomy.upper", el, Relation::Lt, qe + 2.0 * k * to_d(m - n), false, tol),
    };
}

Checks check_gram_identities(const Hypergraph& h, const Tolerances& tol)
{
    require_edges(h);
    const auto b = incidence_matrix(h);
    const auto line = b.gram_cols().shifted(to_d(h.uniformity()));
    const auto clique = b.gram_rows();
    auto degree_plus_clique = clique_multigraph(h);
    const auto d = degree_matrix(h);
    for (std::size_t v = 0; v < h.num_vertices(); ++v) degree_plus_clique.add(v, v, d(v, v));
    return {
        make_check("gram_identity.line", max_abs_diff(line, line_multigraph(h)), Relation::Eq, 0.0, true, tol, 0.0),
        make_check("gram_identity.clique", max_abs_diff(clique, degree_plus_clique), Relation::Eq, 0.0, true, tol,
                   0.0),
        make_check("gram_identity.signless", max_abs_diff(clique, signless_laplacian(h)), Relation::Eq, 0.0, true,
                   tol, 0.0),
    };
}

Checks check_ml_formula(const Hypergraph& h, const Tolerances& tol)
{
    const auto z = zagreb_index(h);
    const auto km = h.uniformity() * h.num_edges();
    const double half = 0.5 * (to_d(z) - to_d(km));
    return {make_check("ml_formula", to_d(line_multigraph_edge_count(h)), Relation::Eq, half, true, tol, 0.0)};
}

Checks check_line_degree_law(const Hypergraph& h, const Tolerances& tol)
{
    require_edges(h);
    const auto deg = degree_summary(h).degrees;
    const auto line = line_multigraph(h);
    double worst = 0.0;
    for (std::size_t j = 0; j < h.num_edges(); ++j) {
        double row = 0.0;
        for (std::size_t i = 0; i < line.order(); ++i) row += line(j, i);
        double expected = 0.0;
        for (auto v : h.edge(j)) expected += to_d(deg[v]) - 1.0;
        worst = std::max(worst, std::abs(row - expected));
    }
    return {make_check("line_degree_law", worst, Relation::Eq, 0.0, true, tol, 0.0)};
}

Checks check_power_spectrum(const Hypergraph& h, PowerParams params, const Tolerances& tol)
{
    try {
        validate_power_params(h, params, true);
    } catch (const Error& err) {
        precondition(err.what());
    }
    const auto closed = power_q_spectrum_closed_form(h, params, tol).expanded();
    const auto direct = q_spectrum(power_hypergraph(h, params), tol).values;
    return {make_check("power_spectrum", max_abs_diff(direct, closed), Relation::Eq, 0.0, true, tol,
                       tol.spectrum_abs)};
}

Checks check_power_qe(const Hypergraph& h, PowerParams params, const Tolerances& tol)
{
    try {
        validate_power_params(h, params, true);
    } catch (const Error& err) {
        precondition(err.what());
    }
    const auto closed = power_qe_closed_form(h, params);
    const double direct = signless_laplacian_energy(power_hypergraph(h, params), tol);
    const auto name = fmt::format("power_qe.case_{}", to_string(closed.which));
    if (closed.is_upper_bound) return {make_check(name, direct, Relation::Lt, closed.value, false, tol)};
    return {make_check(name, direct, Relation::Eq, closed.value, true, tol)};
}

Checks check_line_scaling(const Hypergraph& h, PowerParams params, const Tolerances& tol)
{
    require_edges(h);
    try {
        validate_power_params(h, params, false);
    } catch (const Error& err) {
        precondition(err.what());
    }
    const double s = to_d(params.s);
    const auto base = line_multigraph(h);
    const auto power = line_multigraph(power_hypergraph(h, params));
    auto scaled = sym_eigenvalues(base, tol).values;
    for (double& v : scaled) v *= s;
    const auto power_values = sym_eigenvalues(power, tol).values;
    return {
        make_check("line_scaling.matrix", max_abs_diff(power, base.scaled(s)), Relation::Eq, 0.0, true, tol, 0.0),
        make_check("line_scaling.spectrum", max_abs_diff(power_values, scaled), Relation::Eq, 0.0, true, tol,
                   tol.spectrum_abs),
        make_check("line_scaling.energy", matrix_energy(Spectrum{power_values, 0, 0.0}), Relation::Eq,
                   s * line_energy(h, tol), true, tol),
    };
}

Checks check_linear_line_bounds(const Hypergraph& h, PowerParams params, const Tolerances& tol)
{
    if (!is_linear(h)) precondition("hypergraph is not linear");
    const auto ml = line_multigraph_edge_count(h);
    if (ml == 0) precondition("line multigraph has no edges");
    try {
        validate_power_params(h, params, false);
    } catch (const Error& err) {
        precondition(err.what());
    }
    const double s = to_d(params.s);
    const double excess = to_d(zagreb_index(h)) - to_d(h.uniformity() * h.num_edges());
    const double energy = line_energy(power_hypergraph(h, params), tol);
    return {
        make_check("linear_line_bounds.lower", std::sqrt(2.0 * s * s * excess), Relation::Le, energy, ml == 1, tol),
        make_check("linear_line_bounds.upper", energy, Relation::Le, s * excess, ml == 1, tol),
    };
}

CertificationReport run_all(const Hypergraph& h, std::optional<PowerParams> power, const Tolerances& tol,
                            const Limits& limits, std::string instance)
{
    CertificationReport report;
    report.instance = instance.empty() ? fmt::format("n={} k={} m={}", h.num_vertices(), h.uniformity(),
                                                     h.num_edges())
                                       : std::move(instance);

    const auto run = [&](const char* name, const std::function<Checks()>& check) {
        try {
            for (auto& c : check()) report.checks.push_back(std::move(c));
        } catch (const Error& err) {
            if (err.code() != ErrorCode::PreconditionFailed) throw;
            const std::string what = err.what();
            const auto colon = what.find(": ");
            report.checks.push_back(make_skipped(name, colon == std::string::npos ? what : what.substr(colon + 2)));
        }
    };

    run("subdivision_identity", [&] { return check_subdivision_identity(h, tol); });
    run("subdivision_spectrum", [&] { return check_subdivision_spectrum(h, tol); });
    run("be_dual_route", [&] { return check_be_dual_route(h, tol); });
    run("qe_omega_identity", [&] { return check_qe_omega_identity(h, tol); });
    run("be_parity", [&] { return check_be_parity(h, tol); });
    run("be_range", [&] { return check_be_range(h, tol); });
    run("rank_bound", [&] { return check_rank_bound(h, tol); });
    run("rho_index_bound", [&] { return check_rho_index_bound(h, tol); });
    run("zagreb_index_bound", [&] { return check_zagreb_index_bound(h, tol); });
    run("rho_geq_zfrak", [&] { return check_rho_geq_zfrak(h, tol); });
    run("trace_bound", [&] { return check_trace_bound(h, tol); });
    run("lower_bound_zagreb", [&] { return check_lower_bound_zagreb(h, tol); });
    run("avg_degree_rho", [&] { return check_avg_degree_rho(h, tol); });
    run("nordhaus_gaddum", [&] { return check_nordhaus_gaddum(h, tol, limits); });
    run("edge_monotonicity", [&] {
        if (h.num_edges() == 0) precondition("needs at least one edge");
        return check_edge_monotonicity(h, h.edge(0), tol);
    });
    run("qe_edge_perturbation", [&] {
        auto absent = first_absent_edge(h);
        if (!absent) precondition("hypergraph is complete");
        return check_qe_edge_perturbation(h, *absent, tol);
    });
    run("qe_line_trichotomy", [&] { return check_qe_line_trichotomy(h, tol); });
    run("gram_identity", [&] { return check_gram_identities(h, tol); });
    run("ml_formula", [&] { return check_ml_formula(h, tol); });
    run("line_degree_law", [&] { return check_line_degree_law(h, tol); });
    if (power) {
        run("power_spectrum", [&] { return check_power_spectrum(h, *power, tol); });
        run("power_qe", [&] { return check_power_qe(h, *power, tol); });
        run("line_scaling", [&] { return check_line_scaling(h, *power, tol); });
    }
    const PowerParams line_params = power.value_or(PowerParams{1, h.uniformity()});
    run("linear_line_bounds", [&] { return check_linear_line_bounds(h, line_params, tol); });

    for (const auto& c : report.checks) report.pass = report.pass && c.holds;
    return report;
}

} // namespace hgenergy
