#ifndef HGENERGY_REPORT_HPP
#define HGENERGY_REPORT_HPP

#include <iosfwd>
#include <span>
#include <string>

#include "hgenergy/certify.hpp"
#include "hgenergy/energy.hpp"

namespace hgenergy {

enum class OutputFormat { Json, Csv, Text };

/// 17 significant digits, so the text round-trips to the same double.
std::string format_exact(double value);
/// 6 significant digits for people.
std::string format_human(double value);

// EnergyReport: a flat JSON object, or a header + single-row CSV.
void write_energy_report(std::ostream& out, const EnergyReport& report, OutputFormat format);

// CertificationReport: JSON object {"instance", "pass", "checks": [...]}, or a
// CSV with columns
// name,lhs,rhs,relation,slack,holds,equality_expected,tolerance,skipped_reason
void write_certification_report(std::ostream& out, const CertificationReport& report, OutputFormat format);

/// Eigenvalues one per line (text/csv) or {"matrix": ..., "values": [...]} (json).
void write_spectrum(std::ostream& out, std::string_view matrix, std::span<const double> values, OutputFormat format);

} // namespace hgenergy

#endif // HGENERGY_REPORT_HPP
