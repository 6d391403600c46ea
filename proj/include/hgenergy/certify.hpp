#ifndef HGENERGY_CERTIFY_HPP
#define HGENERGY_CERTIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgenergy/config.hpp"
#include "hgenergy/constructions.hpp"
#include "hgenergy/hypergraph.hpp"

namespace hgenergy {

enum class Relation { Le, Lt, Eq, Ge, Gt };
std::string_view to_string(Relation r);

/// One certified (in)equality `lhs relation rhs`.
///
/// slack is rhs - lhs for <, <= and =, and lhs - rhs for >, >=. Non-strict
/// relations hold when slack >= -tolerance, strict ones when slack > tolerance,
/// equalities when |slack| <= tolerance. When equality_expected is set the
/// instance meets a proven equality condition and |slack| <= tolerance is
/// required as well.
struct CheckResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    Relation relation = Relation::Le;
    double slack = 0.0;
    bool holds = true;
    bool equality_expected = false;
    double tolerance = 0.0;
    std::optional<std::string> skipped_reason;

    bool skipped() const { return skipped_reason.has_value(); }
};

/// Tolerance defaults to check_rel * max(1, |lhs|, |rhs|) when not given.
CheckResult make_check(std::string name, double lhs, Relation relation, double rhs, bool equality_expected,
                       const Tolerances& tol, std::optional<double> tolerance = std::nullopt);
CheckResult make_skipped(std::string name, std::string reason);

using Checks = std::vector<CheckResult>;

// Each check composes public energy/constructions operations. Unmet
// preconditions throw Error(PreconditionFailed); run_all turns those into
// skipped results.

Checks check_subdivision_identity(const Hypergraph& h, const Tolerances& tol = {});
Checks check_subdivision_spectrum(const Hypergraph& h, const Tolerances& tol = {});
Checks check_be_dual_route(const Hypergraph& h, const Tolerances& tol = {});
Checks check_qe_omega_identity(const Hypergraph& h, const Tolerances& tol = {});
Checks check_be_parity(const Hypergraph& h, const Tolerances& tol = {});
Checks check_be_range(const Hypergraph& h, const Tolerances& tol = {});
Checks check_rank_bound(const Hypergraph& h, const Tolerances& tol = {});
Checks check_rho_index_bound(const Hypergraph& h, const Tolerances& tol = {});
Checks check_zagreb_index_bound(const Hypergraph& h, const Tolerances& tol = {});
Checks check_rho_geq_zfrak(const Hypergraph& h, const Tolerances& tol = {});
Checks check_trace_bound(const Hypergraph& h, const Tolerances& tol = {});
Checks check_lower_bound_zagreb(const Hypergraph& h, const Tolerances& tol = {});
Checks check_avg_degree_rho(const Hypergraph& h, const Tolerances& tol = {});
Checks check_nordhaus_gaddum(const Hypergraph& h, const Tolerances& tol = {}, const Limits& limits = {});
/// BE(H - e) < BE(H); e must be an edge of H.
Checks check_edge_monotonicity(const Hypergraph& h, const Edge& e, const Tolerances& tol = {});
/// |QE(H + e) - QE(H)| <= 2k - 2k/n; e must not be an edge of H.
Checks check_qe_edge_perturbation(const Hypergraph& h, const Edge& e, const Tolerances& tol = {});
Checks check_qe_line_trichotomy(const Hypergraph& h, const Tolerances& tol = {});
Checks check_gram_identities(const Hypergraph& h, const Tolerances& tol = {});
Checks check_ml_formula(const Hypergraph& h, const Tolerances& tol = {});
Checks check_line_degree_law(const Hypergraph& h, const Tolerances& tol = {});
Checks check_power_spectrum(const Hypergraph& h, PowerParams params, const Tolerances& tol = {});
Checks check_power_qe(const Hypergraph& h, PowerParams params, const Tolerances& tol = {});
Checks check_line_scaling(const Hypergraph& h, PowerParams params, const Tolerances& tol = {});
/// Requires a linear H whose line multigraph has at least one edge.
Checks check_linear_line_bounds(const Hypergraph& h, PowerParams params, const Tolerances& tol = {});

struct CertificationReport {
    std::string instance;
    std::vector<CheckResult> checks;
    // Every non-skipped check holds.
    bool pass = true;
};

/// Runs every applicable check in a fixed order. Power checks run only when
/// `power` is given; the linear line-energy bounds fall back to s = 1, r = k.
CertificationReport run_all(const Hypergraph& h, std::optional<PowerParams> power = std::nullopt,
                            const Tolerances& tol = {}, const Limits& limits = {}, std::string instance = {});

} // namespace hgenergy

#endif // HGENERGY_CERTIFY_HPP
