#include "hgenergy/report.hpp"

#include <cmath>
#include <fmt/format.h>
#include <json.hpp>
#include <ostream>

namespace hgenergy {

namespace {

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string json_number(double v) { return std::isfinite(v) ? format_exact(v) : "null"; }

std::string csv_number(double v) { return std::isfinite(v) ? format_exact(v) : ""; }

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

const char* boolean(bool b) { return b ? "true" : "false"; }

} // namespace

std::string format_exact(double value) { return fmt::format("{:.17g}", value); }

std::string format_human(double value) { return fmt::format("{:.6g}", value); }

void write_energy_report(std::ostream& out, const EnergyReport& r, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json:
        out << "{\"n\":" << r.n << ",\"m\":" << r.m << ",\"k\":" << r.k << ",\"be\":" << json_number(r.be)
            << ",\"qe\":" << json_number(r.qe) << ",\"line_energy\":" << json_number(r.line_energy)
            << ",\"omega\":" << r.omega << ",\"omega_boundary\":" << boolean(r.omega_boundary)
            << ",\"avg_degree\":" << json_number(r.avg_degree)
            << ",\"spectral_radius_q\":" << json_number(r.spectral_radius_q) << ",\"max_degree\":" << r.max_degree
            << ",\"min_degree\":" << r.min_degree << ",\"zagreb\":" << r.zagreb
            << ",\"zfrak\":" << json_number(r.zfrak) << ",\"parity\":" << json_string(to_string(r.parity)) << "}\n";
        break;
    case OutputFormat::Csv:
        out << "n,m,k,be,qe,line_energy,omega,omega_boundary,avg_degree,spectral_radius_q,max_degree,min_degree,"
               "zagreb,zfrak,parity\n";
        out << r.n << ',' << r.m << ',' << r.k << ',' << csv_number(r.be) << ',' << csv_number(r.qe) << ','
            << csv_number(r.line_energy) << ',' << r.omega << ',' << boolean(r.omega_boundary) << ','
            << csv_number(r.avg_degree) << ',' << csv_number(r.spectral_radius_q) << ',' << r.max_degree << ','
            << r.min_degree << ',' << r.zagreb << ',' << csv_number(r.zfrak) << ',' << to_string(r.parity) << '\n';
        break;
    case OutputFormat::Text:
        out << fmt::format("n = {}, m = {}, k = {}\n", r.n, r.m, r.k);
        out << "incidence energy BE      " << format_human(r.be) << '\n';
        out << "signless Lapl. energy QE " << format_human(r.qe) << '\n';
        out << "line energy E(A_L)       " << format_human(r.line_energy) << '\n';
        out << "omega                    " << r.omega << (r.omega_boundary ? " (boundary)" : "") << '\n';
        out << "average degree           " << format_human(r.avg_degree) << '\n';
        out << "max / min degree         " << r.max_degree << " / " << r.min_degree << '\n';
        out << "spectral radius of Q     " << format_human(r.spectral_radius_q) << '\n';
        out << "Zagreb index             " << r.zagreb << '\n';
        out << "zfrak                    " << format_human(r.zfrak) << '\n';
        out << "BE parity                " << to_string(r.parity) << '\n';
        break;
    }
}

void write_certification_report(std::ostream& out, const CertificationReport& report, OutputFormat format)
{
    switch (format) {
    case OutputFormat::Json:
        out << "{\"instance\":" << json_string(report.instance) << ",\"pass\":" << boolean(report.pass)
            << ",\"checks\":[";
        for (std::size_t i = 0; i < report.checks.size(); ++i) {
            const auto& c = report.checks[i];
            out << (i ? ",\n" : "\n") << "{\"name\":" << json_string(c.name) << ",\"lhs\":" << json_number(c.lhs)
                << ",\"rhs\":" << json_number(c.rhs) << ",\"relation\":" << json_string(to_string(c.relation))
                << ",\"slack\":" << json_number(c.slack) << ",\"holds\":" << boolean(c.holds)
                << ",\"equality_expected\":" << boolean(c.equality_expected)
                << ",\"tolerance\":" << json_number(c.tolerance) << ",\"skipped_reason\":"
                << (c.skipped_reason ? json_string(*c.skipped_reason) : "null") << '}';
        }
        out << "\n]}\n";
        break;
    case OutputFormat::Csv:
        out << "name,lhs,rhs,relation,slack,holds,equality_expected,tolerance,skipped_reason\n";
        for (const auto& c : report.checks) {
            out << csv_field(c.name) << ',' << csv_number(c.lhs) << ',' << csv_number(c.rhs) << ','
                << to_string(c.relation) << ',' << csv_number(c.slack) << ',' << boolean(c.holds) << ','
                << boolean(c.equality_expected) << ',' << csv_number(c.tolerance) << ','
                << csv_field(c.skipped_reason.value_or("")) << '\n';
        }
        break;
    case OutputFormat::Text:
        out << report.instance << '\n';
        for (const auto& c : report.checks) {
            if (c.skipped()) {
                out << fmt::format("  SKIP {:<30} {}\n", c.name, *c.skipped_reason);
                continue;
            }
            out << fmt::format("  {} {:<30} {} {} {}  (slack {}{})\n", c.holds ? "ok  " : "FAIL", c.name,
                               format_human(c.lhs), to_string(c.relation), format_human(c.rhs),
                               format_human(c.slack), c.equality_expected ? ", equality expected" : "");
        }
        out << (report.pass ? "PASS\n" : "FAIL\n");
        break;
    }
}

void write_spectrum(std::ostream& out, std::string_view matrix, std::span<const double> values, OutputFormat format)
{
    if (format == OutputFormat::Json) {
        out << "{\"matrix\":" << json_string(matrix) << ",\"values\":[";
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << json_number(values[i]);
        out << "]}\n";
        return;
    }
    for (double v : values) out << (format == OutputFormat::Text ? format_human(v) : format_exact(v)) << '\n';
}

} // namespace hgenergy
