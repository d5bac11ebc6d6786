#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "tricolor/closed_form.hpp"
#include "tricolor/errors.hpp"
#include "tricolor/sampling.hpp"
#include "tricolor/serialize.hpp"
#include "tricolor/suites.hpp"
#include "tricolor/transforms.hpp"
#include "tricolor/version.hpp"

namespace {

using namespace tricolor;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

std::string rational_latex(const Rational& r) {
    const std::string num = r.numerator().get_str();
    const std::string den = r.denominator().get_str();
    if (den == "1") return num;
    if (!num.empty() && num[0] == '-')
        return "-\\frac{" + num.substr(1) + "}{" + den + "}";
    return "\\frac{" + num + "}{" + den + "}";
}

std::string cyc_latex(const CycScalar& c) {
    if (c.is_zero()) return "0";
    std::string out;
    if (!c.c0().is_zero()) out = rational_latex(c.c0());
    if (!c.c1().is_zero()) {
        std::string term = rational_latex(c.c1()) + "\\,a";
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

void emit_latex_table(std::ostream& os, int n, const EvaluationPoint& pt) {
    const std::vector<CycScalar> us = pt.us();
    os << "\\begin{tabular}{ll}\n";
    os << "$\\mathcal{P}_" << n << "$ & $" << cyc_latex(script_alternant(AlternantKind::P, us)) << "$\\\\\n";
    os << "$\\mathcal{Q}_" << n << "$ & $" << cyc_latex(script_alternant(AlternantKind::Q, us)) << "$\\\\\n";
    for (Color r : Color::all()) {
        const CoefficientTriple c = closed_form_coefficients(n, r, pt.b());
        os << "$A^{" << r.value() << "}_" << n << "$ & $" << cyc_latex(c.A) << "$\\\\\n";
        os << "$B^{" << r.value() << "}_" << n << "$ & $" << cyc_latex(c.B) << "$\\\\\n";
        os << "$C^{" << r.value() << "}_" << n << "$ & $" << cyc_latex(c.C) << "$\\\\\n";
    }
    os << "\\end{tabular}\n";
}

int cmd_enumerate(int n, int corner, const std::string& out_path) {
    std::vector<Color> corners;
    if (corner >= 0) corners.push_back(Color(corner));
    else corners = {Color(0), Color(1), Color(2)};

    std::ofstream out;
    if (!out_path.empty()) {
        out.open(out_path);
        if (!out) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return kExitUsage;
        }
    }

    for (Color r : corners) {
        const auto states = enumerate_states(n, r);
        std::cout << "n=" << n << " corner=" << r.value() << " states=" << states.size() << "\n";
        if (out.is_open()) write_state_cache(out, states);
    }
    return kExitPass;
}

int cmd_z(int n, int corner, std::uint64_t seed, std::uint64_t index, const std::string& point_file,
          const std::string& method, bool json, bool emit_latex) {
    const EvaluationPoint pt =
        point_file.empty() ? sample_point(n, seed, index) : load_point_file(point_file);
    if (pt.n() != n) {
        std::cerr << "error: point file has n=" << pt.n() << ", expected " << n << "\n";
        return kExitUsage;
    }
    const Color r(corner);

    const bool want_brute = method == "bruteforce" || method == "both";
    const bool want_det = method == "determinant" || method == "both";

    std::optional<AlgebraElement> z;
    std::optional<AlgebraElement> z_prime;
    std::optional<CycScalar> closed;
    if (want_brute) {
        z = partial_partition(n, r, pt);
        z_prime = scaled_partition(n, r, pt);
    }
    if (want_det) closed = scaled_partition_closed_form(n, r, pt);

    bool match = true;
    if (want_brute && want_det)
        match = z_prime->is_scalar() && z_prime->scalar_part() == *closed;

    if (json) {
        std::cout << "{\"n\": " << n << ", \"r\": " << r.value() << ", \"point\": " << point_to_json(pt);
        if (z) std::cout << ", \"z\": " << algebra_to_json(*z);
        if (z_prime) std::cout << ", \"z_prime\": " << algebra_to_json(*z_prime);
        if (closed) std::cout << ", \"closed_form\": " << cyc_to_json(*closed);
        if (want_brute && want_det) std::cout << ", \"match\": " << (match ? "true" : "false");
        std::cout << "}\n";
    } else {
        std::cout << "n=" << n << " r=" << r.value() << " point=" << point_to_json(pt) << "\n";
        if (z) std::cout << "Z        = " << algebra_to_json(*z) << "\n";
        if (z_prime) std::cout << "Z'       = " << algebra_to_json(*z_prime) << "\n";
        if (closed) std::cout << "det form = " << closed->str() << "\n";
        if (want_brute && want_det)
            std::cout << (match ? "routes agree exactly" : "ROUTES DISAGREE") << "\n";
    }
    if (emit_latex) emit_latex_table(std::cout, n, pt);
    return match ? kExitPass : kExitCheckFailure;
}

int cmd_verify(const SuiteConfig& cfg) {
    const CheckReport report = run_suite(cfg);
    if (cfg.json_output) {
        std::cout << report_to_canonical_json(report, cfg) << "\n";
    } else {
        print_report_text(std::cout, report, cfg);
    }
    return report.pass ? kExitPass : kExitCheckFailure;
}

int cmd_bench(int n_max, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    std::cout << "n  enumerate_ms  bruteforce_ms  closed_form_ms\n";
    for (int n = 1; n <= n_max; ++n) {
        auto t0 = clock::now();
        std::size_t total = 0;
        for (Color r : Color::all()) total += enumerate_states(n, r).size();
        const double enum_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();

        const EvaluationPoint pt = sample_point(n, seed, 0);
        const FormulaComparison cmp = formula_vs_bruteforce(n, pt);
        std::cout << n << "  " << enum_ms << "  " << cmp.bruteforce_ms << "  " << cmp.closed_form_ms
                  << "    (" << total << " states)\n";
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the three-coloring model with domain-wall boundaries"};
    app.set_version_flag("--version", tricolor::kVersion);
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate states; optionally write a JSONL cache");
    int en_n = 1;
    int en_corner = -1;
    std::string en_out;
    enumerate->add_option("--n", en_n, "Lattice size")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--corner", en_corner, "Corner color (default: all three)")
        ->check(CLI::Range(0, 2));
    enumerate->add_option("--out", en_out, "Write states as JSON lines to this file");

    // z
    auto* zcmd = app.add_subcommand("z", "Evaluate a partial partition function at one point");
    int z_n = 1;
    int z_corner = 0;
    std::uint64_t z_seed = 1;
    std::uint64_t z_index = 0;
    std::string z_point, z_method = "both";
    bool z_json = false, z_latex = false;
    zcmd->add_option("--n", z_n, "Lattice size")->required()->check(CLI::PositiveNumber);
    zcmd->add_option("--corner", z_corner, "Corner color")->required()->check(CLI::Range(0, 2));
    zcmd->add_option("--seed", z_seed, "Sample the point from this seed");
    zcmd->add_option("--index", z_index, "Point index within the seed's stream");
    zcmd->add_option("--point", z_point, "Load the point from a JSON file instead of sampling");
    zcmd->add_option("--method", z_method, "bruteforce | determinant | both")
        ->check(CLI::IsMember({"bruteforce", "determinant", "both"}));
    zcmd->add_flag("--json", z_json, "JSON output");
    zcmd->add_flag("--emit-latex", z_latex, "Append a LaTeX table of script-P/script-Q/A/B/C values");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    tricolor::SuiteConfig cfg;
    cfg.trials = 0; // per-suite default unless set
    verify->add_option("--suite", cfg.suite,
                       "states | gamma-balance | funceq | parity | support | proportionality | "
                       "schur | recursions | closed-form | all")
        ->required();
    verify->add_option("--n-min", cfg.n_min, "Lower end of the n range")->check(CLI::PositiveNumber);
    verify->add_option("--n-max", cfg.n_max, "Upper end of the n range")->check(CLI::PositiveNumber);
    verify->add_option("--trials", cfg.trials, "Points per identity")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "Base seed for point sampling");
    verify->add_option("--point", cfg.point_file, "Fixed evaluation point (JSON file)");
    verify->add_option("--cache", cfg.cache_path, "State cache consumed by the states suite");
    verify->add_flag("--json", cfg.json_output, "Canonical JSON report on stdout");
    verify->add_flag("--perturb", cfg.perturb,
                     "Negative control: perturb a vertex weight and expect failures");

    // bench
    auto* bench = app.add_subcommand("bench", "Time enumeration and both evaluation routes");
    int bench_n_max = 4;
    std::uint64_t bench_seed = 1;
    bench->add_option("--n-max", bench_n_max, "Largest lattice size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "Point seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(en_n, en_corner, en_out);
        if (*zcmd) return cmd_z(z_n, z_corner, z_seed, z_index, z_point, z_method, z_json, z_latex);
        if (*verify) return cmd_verify(cfg);
        if (*bench) return cmd_bench(bench_n_max, bench_seed);
    } catch (const tricolor::DegeneratePointError& e) {
        std::cerr << "degenerate point: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const tricolor::SamplingError& e) {
        std::cerr << "sampling error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
