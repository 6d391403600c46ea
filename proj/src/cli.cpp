#include "hgenergy/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "hgenergy/certify.hpp"
#include "hgenergy/constructions.hpp"
#include "hgenergy/energy.hpp"
#include "hgenergy/error.hpp"
#include "hgenergy/hg_format.hpp"
#include "hgenergy/report.hpp"

namespace hgenergy {

namespace {

struct Options {
    std::string input = "-";
    std::string out;
    std::optional<OutputFormat> format;
    Tolerances tol;
    Limits limits;
    std::string which = "Q";
    std::string kind;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t isolated = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::optional<std::size_t> s;
    std::optional<std::size_t> r;
};

const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};

Hypergraph load(const Options& opt, std::istream& in)
{
    if (opt.input == "-") return parse_hg(in);
    return read_hg_file(opt.input);
}

// Writes to --out when given, otherwise to the default stream.
template <typename Fn>
void emit(const Options& opt, std::ostream& fallback, Fn&& write)
{
    if (opt.out.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidParams, fmt::format("cannot write '{}'", opt.out));
    write(file);
}

int cmd_energy(const Options& opt, std::istream& in, std::ostream& out)
{
    const auto report = energy_report(load(opt, in), opt.tol);
    emit(opt, out, [&](std::ostream& o) { write_energy_report(o, report, opt.format.value_or(OutputFormat::Json)); });
    return kExitOk;
}

int cmd_spectrum(const Options& opt, std::istream& in, std::ostream& out)
{
    const auto h = load(opt, in);
    SymMatrix m;
    if (opt.which == "Q") m = signless_laplacian(h);
    else if (opt.which == "AL") m = line_multigraph(h);
    else if (opt.which == "AC") m = clique_multigraph(h);
    else m = subdivision_adjacency(h);

    auto spectrum = sym_eigenvalues(m, opt.tol);
    // Roundoff below the rank tolerance prints as an exact zero.
    for (double& v : spectrum.values)
        if (std::abs(v) <= spectrum.tol_used) v = 0.0;
    emit(opt, out, [&](std::ostream& o) {
        write_spectrum(o, opt.which, spectrum.values, opt.format.value_or(OutputFormat::Csv));
    });
    return kExitOk;
}

std::optional<PowerParams> power_params(const Options& opt)
{
    if (!opt.s && !opt.r) return std::nullopt;
    if (!opt.s || !opt.r) throw Error(ErrorCode::InvalidPowerParams, "--s and --r must be given together");
    return PowerParams{*opt.s, *opt.r};
}

int cmd_certify(const Options& opt, std::istream& in, std::ostream& out)
{
    const auto h = load(opt, in);
    const auto power = power_params(opt);
    if (power) validate_power_params(h, *power, false);
    std::string instance = opt.input == "-" ? std::string("<stdin>") : opt.input;
    if (power) instance += fmt::format(" s={} r={}", power->s, power->r);
    const auto report = run_all(h, power, opt.tol, opt.limits, instance);
    emit(opt, out, [&](std::ostream& o) {
        write_certification_report(o, report, opt.format.value_or(OutputFormat::Json));
    });
    return report.pass ? kExitOk : kExitCertificationFailed;
}

int cmd_generate(const Options& opt, std::ostream& out)
{
    Hypergraph h = [&] {
        if (opt.kind == "random") return random_uniform(opt.n, opt.k, opt.p, opt.seed, opt.limits);
        if (opt.kind == "complete") return complete_k_graph(opt.n, opt.k, opt.limits);
        return disjoint_edges(opt.k, opt.m, opt.isolated);
    }();
    emit(opt, out, [&](std::ostream& o) { write_hg(o, h); });
    return kExitOk;
}

int cmd_power(const Options& opt, std::istream& in, std::ostream& out)
{
    const auto params = power_params(opt);
    if (!params) throw Error(ErrorCode::InvalidPowerParams, "power needs --s and --r");
    const auto h = power_hypergraph(load(opt, in), *params);
    emit(opt, out, [&](std::ostream& o) { write_hg(o, h); });
    return kExitOk;
}

int cmd_complement(const Options& opt, std::istream& in, std::ostream& out)
{
    const auto h = complement(load(opt, in), opt.limits);
    emit(opt, out, [&](std::ostream& o) { write_hg(o, h); });
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Incidence and signless Laplacian energies of uniform hypergraphs"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
            ->option_text("json|csv|text");
    };
    auto add_tolerances = [&](CLI::App* sub) {
        sub->add_option("--tol", opt.tol.check_rel, "Relative tolerance for certified (in)equalities");
        sub->add_option("--spectrum-tol", opt.tol.spectrum_abs, "Absolute tolerance for spectrum matching");
        sub->add_option("--psd-clamp", opt.tol.psd_clamp_rel, "Relative clamp for Gram eigenvalues");
        sub->add_option("--jacobi-tol", opt.tol.jacobi_rel, "Relative Jacobi convergence threshold");
        sub->add_option("--max-edges", opt.limits.max_edges, "Edge limit for complete/complement generation");
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "Input .hg file, '-' for stdin")->required();
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "Write output to this file"); };

    auto* energy = app.add_subcommand("energy", "Energy report of a hypergraph");
    add_input(energy);
    add_format(energy);
    add_tolerances(energy);
    add_out(energy);

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of Q, A_L, A_C or A_S");
    add_input(spectrum);
    spectrum->add_option("--which", opt.which, "Matrix")->check(CLI::IsMember({"Q", "AL", "AC", "AS"}));
    add_format(spectrum);
    add_tolerances(spectrum);
    add_out(spectrum);

    auto* certify = app.add_subcommand("certify", "Check every bound and identity on a hypergraph");
    add_input(certify);
    certify->add_option("--s", opt.s, "Power hypergraph blow-up s");
    certify->add_option("--r", opt.r, "Power hypergraph uniformity r");
    add_format(certify);
    add_tolerances(certify);
    add_out(certify);

    auto* generate = app.add_subcommand("generate", "Write a generated hypergraph in .hg format");
    generate->add_option("kind", opt.kind, "Generator")->required()->check(
        CLI::IsMember({"random", "complete", "disjoint"}));
    generate->add_option("--n", opt.n, "Vertices (random, complete)");
    generate->add_option("--k", opt.k, "Uniformity")->required();
    generate->add_option("--p", opt.p, "Edge probability (random)");
    generate->add_option("--m", opt.m, "Edges (disjoint)");
    generate->add_option("--isolated", opt.isolated, "Isolated vertices (disjoint)");
    generate->add_option("--seed", opt.seed, "PRNG seed (random)");
    generate->add_option("--max-edges", opt.limits.max_edges, "Edge limit");
    add_out(generate);

    auto* power = app.add_subcommand("power", "Write the power hypergraph H^r_s");
    add_input(power);
    power->add_option("--s", opt.s, "Copies per vertex")->required();
    power->add_option("--r", opt.r, "Target uniformity")->required();
    add_out(power);

    auto* complement_cmd = app.add_subcommand("complement", "Write the complement hypergraph");
    add_input(complement_cmd);
    complement_cmd->add_option("--max-edges", opt.limits.max_edges, "Edge limit");
    add_out(complement_cmd);

    auto* version = app.add_subcommand("version", "Print the version");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*energy) return cmd_energy(opt, in, out);
        if (*spectrum) return cmd_spectrum(opt, in, out);
        if (*certify) return cmd_certify(opt, in, out);
        if (*generate) return cmd_generate(opt, out);
        if (*power) return cmd_power(opt, in, out);
        if (*complement_cmd) return cmd_complement(opt, in, out);
        if (*version) {
            out << "hgenergy 0.1.0\n";
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.code()) ? kExitInputError : kExitNumericError;
    }
    return kExitInputError;
}

} // namespace hgenergy
