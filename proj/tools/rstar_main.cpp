// rstar: generate R-Bonacci polynomials and their derivatives in exact
// arithmetic, verify the symmetric-function identities satisfied by their
// zeros, compute zeros numerically or in closed form, and emit root
// scatter data as CSV/JSON/SVG.

#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rstar/rbonacci.hpp"
#include "rstar/roots.hpp"
#include "rstar/svg.hpp"
#include "rstar/vieta.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string format_complex(std::complex<double> z) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << z.real();
    os << (z.imag() < 0 ? "-" : "+");
    os << std::fixed << std::abs(z.imag()) << "i";
    return os.str();
}

nlohmann::json polynomial_json(const rstar::Polynomial& poly) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : poly.coefficients()) coeffs.push_back(c.get_str());
    return {{"degree", poly.degree()},
            {"coefficients", coeffs},
            {"human", rstar::to_human(poly)}};
}

int run_gen(int r, std::int64_t n, const std::string& mode,
            const std::string& format, const std::string& out_path) {
    rstar::Polynomial poly;
    bool equal = true;
    if (mode == "recurrence") {
        poly = rstar::build_recurrence({r, n});
    } else if (mode == "closed") {
        poly = rstar::build_closed_form({r, n});
    } else {
        const rstar::Polynomial a = rstar::build_recurrence({r, n});
        const rstar::Polynomial b = rstar::build_closed_form({r, n});
        equal = a == b;
        poly = a;
    }
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j = polynomial_json(poly);
        j["r"] = r;
        j["n"] = n;
        j["mode"] = mode;
        if (mode == "both") j["equal"] = equal;
        os << j.dump(2) << "\n";
    } else {
        os << rstar::to_human(poly) << "\n";
        if (mode == "both") {
            os << "recurrence == closed-form: " << (equal ? "OK" : "MISMATCH")
               << "\n";
        }
    }
    emit(os.str(), out_path);
    return equal ? kExitPass : kExitFail;
}

int run_deriv(int r, std::int64_t n, std::int64_t t, const std::string& mode,
              const std::string& format, const std::string& out_path) {
    rstar::Polynomial poly;
    bool equal = true;
    if (mode == "closed") {
        poly = rstar::build_derivative_closed_form({r, n}, t);
    } else if (mode == "formal") {
        poly = rstar::derivative(rstar::build_recurrence({r, n}), t);
    } else {
        const rstar::Polynomial a = rstar::build_derivative_closed_form({r, n}, t);
        const rstar::Polynomial b =
            rstar::derivative(rstar::build_recurrence({r, n}), t);
        equal = a == b;
        poly = a;
    }
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j = polynomial_json(poly);
        j["r"] = r;
        j["n"] = n;
        j["t"] = t;
        j["mode"] = mode;
        if (mode == "both") j["equal"] = equal;
        os << j.dump(2) << "\n";
    } else {
        os << rstar::to_human(poly) << "\n";
        if (mode == "both") {
            os << "closed-form == formal: " << (equal ? "OK" : "MISMATCH")
               << "\n";
        }
    }
    emit(os.str(), out_path);
    return equal ? kExitPass : kExitFail;
}

int run_verify(const std::string& theorem, int r, std::int64_t n, int p,
               std::int64_t k, std::int64_t t, const std::string& format,
               const std::string& out_path) {
    rstar::VerificationReport report;
    if (theorem == "t1") {
        report = rstar::verify_theorem12(r, n, 0);
    } else if (theorem == "t2") {
        report = rstar::verify_theorem12(r, n, 1);
    } else if (theorem == "t4") {
        report = rstar::verify_theorem4(r, n, p, k);
    } else if (theorem == "t8") {
        report = rstar::verify_theorem8(r);
    } else if (theorem == "lucas") {
        report = rstar::lucas_identity_check(n, t);
    } else {
        throw rstar::InvalidParams("unknown theorem tag: " + theorem);
    }
    emit(format == "json" ? report.to_json() + "\n" : report.to_table(),
         out_path);
    return report.pass ? kExitPass : kExitFail;
}

int run_spec(int r, std::int64_t n, int p, std::int64_t k,
             const std::string& format, const std::string& out_path) {
    const rstar::DerivativeSpec spec = rstar::derivative_spec(r, n, p, k);
    const auto [upsilon, psi] = rstar::upsilon_psi(spec);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j;
        j["r"] = spec.r;
        j["n"] = spec.n;
        j["p"] = spec.p;
        j["k"] = spec.k;
        j["t"] = spec.t;
        j["eta"] = spec.eta;
        j["mu"] = spec.mu.get_str();
        j["upsilon"] = upsilon.get_str();
        j["psi"] = psi.get_str();
        os << j.dump(2) << "\n";
    } else {
        os << "t=" << spec.t << " eta=" << spec.eta << " mu="
           << spec.mu.get_str() << " upsilon=" << upsilon.get_str()
           << " psi=" << psi.get_str() << "\n";
    }
    emit(os.str(), out_path);
    return kExitPass;
}

int run_probe(int r, std::int64_t n, int p, const std::string& format,
              const std::string& out_path) {
    const rstar::StarProbeReport report = rstar::star_probe(r, n, p);
    emit(format == "json" ? report.to_json() + "\n" : report.to_human(),
         out_path);
    return kExitPass;
}

int run_roots(int r, std::int64_t n, std::int64_t t, int p, std::int64_t k,
              bool closed_form, double precision, const std::string& format,
              const std::string& out_path, const std::string& title) {
    rstar::Polynomial poly;
    bool have_spec = false;
    rstar::DerivativeSpec spec;
    if (p >= 0 || k >= 0) {
        if (p < 0 || k < 0) {
            throw rstar::InvalidParams("--p and --k must be given together");
        }
        if (t >= 0) {
            throw rstar::InvalidParams("--t conflicts with --p/--k");
        }
        spec = rstar::derivative_spec(r, n, p, k);
        have_spec = true;
        poly = rstar::build_derivative_closed_form({r, spec.poly_index()}, spec.t);
    } else if (t >= 0) {
        poly = rstar::build_derivative_closed_form({r, n}, t);
    } else {
        poly = rstar::build_recurrence({r, n});
    }
    if (closed_form && !have_spec) {
        throw rstar::InvalidParams("--closed-form requires --p and --k");
    }

    const rstar::ComplexRootSet set = rstar::find_roots(poly, r, precision);

    double match_distance = -1.0;
    rstar::QuadraticOrbitRoots closed;
    if (closed_form) {
        if (spec.eta != 2) {
            throw rstar::InvalidSpec("--closed-form needs eta = 2 (k = (r-1)n - 2)");
        }
        closed = rstar::quadratic_orbit_roots(r, n, p);
        std::vector<std::complex<double>> numeric;
        for (const auto& entry : set.roots) numeric.push_back(entry.value);
        match_distance = rstar::max_matching_distance(closed.values, numeric);
    }

    std::ostringstream os;
    if (format == "csv") {
        os << rstar::roots_to_csv(set);
        if (closed_form) {
            os << "# max distance closed-form vs numeric: " << match_distance
               << "\n";
        }
    } else if (format == "json") {
        nlohmann::json j = nlohmann::json::parse(rstar::roots_to_json(set));
        j["polynomial"] = rstar::to_human(poly);
        if (closed_form) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& z : closed.values) {
                arr.push_back({{"re", z.real()},
                               {"im", z.imag()},
                               {"human", format_complex(z)}});
            }
            j["closed_form_roots"] = arr;
            j["upsilon"] = closed.upsilon.get_str();
            j["psi"] = closed.psi.get_str();
            j["max_match_distance"] = match_distance;
        }
        os << j.dump(2) << "\n";
    } else {  // svg
        os << rstar::render_root_scatter(set, title);
    }
    emit(os.str(), out_path);
    if (closed_form) {
        std::cerr << "max distance closed-form vs numeric: " << match_distance
                  << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"R-Bonacci polynomial zero toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "build R_n(x) exactly");
    int gen_r = 2;
    std::int64_t gen_n = 1;
    std::string gen_mode = "recurrence";
    std::string gen_format = "text";
    std::string gen_out;
    gen->add_option("--r", gen_r, "order of the recursion (>= 2)")->required();
    gen->add_option("--n", gen_n, "sequence index (>= 1)")->required();
    gen->add_option("--mode", gen_mode, "recurrence|closed|both")
        ->check(CLI::IsMember({"recurrence", "closed", "both"}));
    gen->add_option("--format", gen_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    gen->add_option("--out", gen_out, "write to file instead of stdout");

    // deriv
    auto* deriv = app.add_subcommand("deriv", "build R_n^(t)(x) exactly");
    int deriv_r = 2;
    std::int64_t deriv_n = 1;
    std::int64_t deriv_t = 1;
    std::string deriv_mode = "closed";
    std::string deriv_format = "text";
    std::string deriv_out;
    deriv->add_option("--r", deriv_r, "order of the recursion (>= 2)")->required();
    deriv->add_option("--n", deriv_n, "sequence index (>= 1)")->required();
    deriv->add_option("--t", deriv_t, "derivative order (>= 0)")->required();
    deriv->add_option("--mode", deriv_mode, "closed|formal|both")
        ->check(CLI::IsMember({"closed", "formal", "both"}));
    deriv->add_option("--format", deriv_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    deriv->add_option("--out", deriv_out, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "check a zero identity exactly");
    std::string verify_theorem;
    int verify_r = 2;
    std::int64_t verify_n = 1;
    int verify_p = 0;
    std::int64_t verify_k = 1;
    std::int64_t verify_t = 1;
    std::string verify_format = "table";
    std::string verify_out;
    verify->add_option("--theorem", verify_theorem, "t1|t2|t4|t8|lucas")
        ->required()
        ->check(CLI::IsMember({"t1", "t2", "t4", "t8", "lucas"}));
    verify->add_option("--r", verify_r, "order of the recursion");
    verify->add_option("--n", verify_n, "index parameter");
    verify->add_option("--p", verify_p, "offset p");
    verify->add_option("--k", verify_k, "derivative family parameter k");
    verify->add_option("--t", verify_t, "derivative order (lucas)");
    verify->add_option("--format", verify_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    verify->add_option("--out", verify_out, "write to file instead of stdout");

    // roots
    auto* roots = app.add_subcommand("roots", "compute zeros and emit artifacts");
    int roots_r = 2;
    std::int64_t roots_n = 1;
    std::int64_t roots_t = -1;
    int roots_p = -1;
    std::int64_t roots_k = -1;
    bool roots_closed = false;
    double roots_precision = 1e-10;
    std::string roots_format = "csv";
    std::string roots_out;
    std::string roots_title;
    roots->add_option("--r", roots_r, "order of the recursion")->required();
    roots->add_option("--n", roots_n,
                      "sequence index; with --p/--k the derivative family n")
        ->required();
    roots->add_option("--t", roots_t, "derivative order applied to R_n");
    roots->add_option("--p", roots_p, "derivative family offset p");
    roots->add_option("--k", roots_k, "derivative family parameter k");
    roots->add_flag("--closed-form", roots_closed,
                    "also evaluate the quadratic closed form and report the "
                    "max distance to the numeric roots");
    roots->add_option("--precision", roots_precision,
                      "residual target for every root");
    roots->add_option("--format", roots_format, "csv|json|svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    roots->add_option("--out", roots_out, "write to file instead of stdout");
    roots->add_option("--title", roots_title, "svg title text");

    // spec
    auto* spec_cmd = app.add_subcommand(
        "spec", "derive (t, eta, mu, upsilon, psi) from (r, n, p, k)");
    int spec_r = 2;
    std::int64_t spec_n = 1;
    int spec_p = 0;
    std::int64_t spec_k = 1;
    std::string spec_format = "text";
    std::string spec_out;
    spec_cmd->add_option("--r", spec_r, "order of the recursion")->required();
    spec_cmd->add_option("--n", spec_n, "index parameter")->required();
    spec_cmd->add_option("--p", spec_p, "offset p")->required();
    spec_cmd->add_option("--k", spec_k, "family parameter k")->required();
    spec_cmd->add_option("--format", spec_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    spec_cmd->add_option("--out", spec_out, "write to file instead of stdout");

    // probe
    auto* probe = app.add_subcommand(
        "probe", "branch geometry of the r-star of R_{rn+p}");
    int probe_r = 2;
    std::int64_t probe_n = 1;
    int probe_p = 0;
    std::string probe_format = "text";
    std::string probe_out;
    probe->add_option("--r", probe_r, "order of the recursion")->required();
    probe->add_option("--n", probe_n, "index parameter")->required();
    probe->add_option("--p", probe_p, "offset p")->required();
    probe->add_option("--format", probe_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    probe->add_option("--out", probe_out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            return run_gen(gen_r, gen_n, gen_mode, gen_format, gen_out);
        }
        if (deriv->parsed()) {
            return run_deriv(deriv_r, deriv_n, deriv_t, deriv_mode,
                             deriv_format, deriv_out);
        }
        if (verify->parsed()) {
            return run_verify(verify_theorem, verify_r, verify_n, verify_p,
                              verify_k, verify_t, verify_format, verify_out);
        }
        if (roots->parsed()) {
            return run_roots(roots_r, roots_n, roots_t, roots_p, roots_k,
                             roots_closed, roots_precision, roots_format,
                             roots_out, roots_title);
        }
        if (spec_cmd->parsed()) {
            return run_spec(spec_r, spec_n, spec_p, spec_k, spec_format,
                            spec_out);
        }
        if (probe->parsed()) {
            return run_probe(probe_r, probe_n, probe_p, probe_format,
                             probe_out);
        }
    } catch (const rstar::NonConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const rstar::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rstar::InvalidSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const rstar::MixedResidueError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
