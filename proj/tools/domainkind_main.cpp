#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "domainkind/classifier.hpp"
#include "domainkind/deformations.hpp"
#include "domainkind/errors.hpp"
#include "domainkind/greens.hpp"
#include "domainkind/report.hpp"

namespace dk = domainkind;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitAccuracy = 3;
constexpr int kExitHadamard = 4;

int exit_code_for(const dk::Error& e) {
    switch (e.kind()) {
    case dk::ErrorKind::Accuracy:
        return kExitAccuracy;
    case dk::ErrorKind::Input:
    case dk::ErrorKind::OutOfDomain:
    case dk::ErrorKind::Precondition:
    case dk::ErrorKind::Indeterminate:
    case dk::ErrorKind::Bracket:
    default:
        return kExitInput;
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw dk::Error(dk::ErrorKind::Input, "cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw dk::Error(dk::ErrorKind::Input,
                        "malformed JSON in " + path + ": " + e.what());
    }
}

struct CommonFlags {
    bool as_json = false;
    int samples = 0;       // 0: keep config/default
    std::string config_path;
};

dk::RunConfig resolve_config(const CommonFlags& flags) {
    dk::RunConfig cfg;
    if (!flags.config_path.empty())
        cfg = dk::apply_run_config(load_json_file(flags.config_path), cfg);
    if (flags.samples != 0) {
        if (!dk::is_power_of_two(flags.samples))
            throw dk::Error(dk::ErrorKind::Input,
                            "--samples must be a power of two");
        cfg.boundary_samples = flags.samples;
    }
    return cfg;
}

void add_common(CLI::App* cmd, CommonFlags* flags) {
    cmd->add_flag("--json", flags->as_json, "emit a JSON report on stdout");
    cmd->add_option("--samples", flags->samples,
                    "boundary samples (power of two)");
    cmd->add_option("--config", flags->config_path,
                    "JSON run-config overlay file");
}

// Family selection shared by sweep / hadamard / bisect: a builtin name, or a
// path family derived from a base map file.
struct FamilyFlags {
    std::string name;
    std::string base_path;
    std::string path_kind = "scaling"; // scaling | coefficients
};

dk::DeformationFamily resolve_family(const FamilyFlags& ff) {
    if (!ff.name.empty() && !ff.base_path.empty())
        throw dk::Error(dk::ErrorKind::Input,
                        "give either --family or --base, not both");
    if (!ff.name.empty()) return dk::builtin_family(ff.name);
    if (!ff.base_path.empty()) {
        dk::CoefficientMap base = dk::parse_domain_spec(load_json_file(ff.base_path));
        if (ff.path_kind == "scaling") return dk::scaling_path(base, 0.0, 1.0);
        if (ff.path_kind == "coefficients")
            return dk::coefficient_path(base, 0.0, 1.0);
        throw dk::Error(dk::ErrorKind::Input,
                        "unknown --path kind: " + ff.path_kind);
    }
    throw dk::Error(dk::ErrorKind::Input, "need --family <name> or --base <file>");
}

void add_family(CLI::App* cmd, FamilyFlags* ff) {
    cmd->add_option("--family", ff->name,
                    "builtin family: appendix3 | nonunivalent | disk-dilation");
    cmd->add_option("--base", ff->base_path, "domain spec file for a path family");
    cmd->add_option("--path", ff->path_kind,
                    "path kind for --base: scaling | coefficients");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"power-series domain classifier (first/second kind)"};
    app.require_subcommand(1);

    // ---- classify ----
    auto* c_cmd = app.add_subcommand("classify", "classify one domain");
    std::string spec_path;
    std::string builtin;
    double opt_t = std::numeric_limits<double>::quiet_NaN();
    double opt_radius = 1.0;
    bool cross_check = false;
    CommonFlags c_flags;
    c_cmd->add_option("spec", spec_path, "domain spec JSON file");
    c_cmd->add_option("--builtin", builtin, "disk | f3 | appendix3 | nonunivalent");
    c_cmd->add_option("--t", opt_t, "builtin family parameter");
    c_cmd->add_option("--radius", opt_radius, "disk radius");
    c_cmd->add_flag("--cross-check", cross_check,
                    "also run the independent area-route computation of D");
    add_common(c_cmd, &c_flags);

    // ---- sweep ----
    auto* s_cmd = app.add_subcommand("sweep", "classify a family on a t grid");
    FamilyFlags s_family;
    double s_tmin = 0.0, s_tmax = 1.0;
    int s_steps = 11;
    std::string s_csv;
    CommonFlags s_flags;
    add_family(s_cmd, &s_family);
    s_cmd->add_option("--t-min", s_tmin, "grid start");
    s_cmd->add_option("--t-max", s_tmax, "grid end");
    s_cmd->add_option("--steps", s_steps, "number of grid points");
    s_cmd->add_option("--csv", s_csv, "write the table to this file");
    add_common(s_cmd, &s_flags);

    // ---- hadamard ----
    auto* h_cmd = app.add_subcommand(
        "hadamard", "variational check of the Green's function");
    FamilyFlags h_family;
    double h_t = 0.5;
    std::string h_x = "0.1", h_y = "0.2i";
    CommonFlags h_flags;
    add_family(h_cmd, &h_family);
    h_cmd->add_option("--t", h_t, "family parameter");
    h_cmd->add_option("--x", h_x, "first point (complex, e.g. 0.1 or 0.2-0.3i)");
    h_cmd->add_option("--y", h_y, "second point (complex)");
    add_common(h_cmd, &h_flags);

    // ---- bisect ----
    auto* b_cmd = app.add_subcommand("bisect", "locate a threshold parameter");
    FamilyFlags b_family;
    std::string b_witness = "D";
    double b_lo = 0.0, b_hi = 1.0, b_tol = 1e-8;
    CommonFlags b_flags;
    add_family(b_cmd, &b_family);
    b_cmd->add_option("--witness", b_witness,
                      "D | starlike | simple | maxima");
    b_cmd->add_option("--t-lo", b_lo, "bracket start");
    b_cmd->add_option("--t-hi", b_hi, "bracket end");
    b_cmd->add_option("--tol", b_tol, "bracket width target");
    add_common(b_cmd, &b_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_cmd->parsed()) {
            dk::RunConfig cfg = resolve_config(c_flags);
            cfg.cross_check = cfg.cross_check || cross_check;

            dk::CoefficientMap map({0.0, 1.0});
            if (!spec_path.empty() && !builtin.empty())
                throw dk::Error(dk::ErrorKind::Input,
                                "give either a spec file or --builtin, not both");
            if (!spec_path.empty()) {
                map = dk::parse_domain_spec(load_json_file(spec_path));
            } else if (!builtin.empty()) {
                json spec;
                json params = json::object();
                if (!std::isnan(opt_t)) params["t"] = opt_t;
                params["radius"] = opt_radius;
                spec["builtin"] = {{"name", builtin}, {"params", params}};
                map = dk::parse_domain_spec(spec);
            } else {
                throw dk::Error(dk::ErrorKind::Input,
                                "need a spec file or --builtin");
            }

            dk::ClassificationResult res = dk::classify(map, cfg);
            if (c_flags.as_json)
                std::cout << dk::to_json(res).dump(2) << "\n";
            else
                std::cout << dk::classification_text(res);
            return kExitOk;
        }

        if (s_cmd->parsed()) {
            dk::RunConfig cfg = resolve_config(s_flags);
            dk::DeformationFamily fam = resolve_family(s_family);
            std::vector<double> grid = dk::uniform_grid(s_tmin, s_tmax, s_steps);
            std::vector<dk::SweepRow> rows = dk::sweep(fam, grid, {}, cfg);
            std::string csv = dk::sweep_csv(rows);
            if (!s_csv.empty()) {
                std::ofstream out(s_csv, std::ios::binary);
                if (!out)
                    throw dk::Error(dk::ErrorKind::Input,
                                    "cannot write file: " + s_csv);
                out << csv;
                std::cout << "wrote " << rows.size() << " rows to " << s_csv
                          << "\n";
            }
            if (s_flags.as_json) {
                json arr = json::array();
                for (const dk::SweepRow& r : rows) arr.push_back(dk::to_json(r));
                std::cout << arr.dump(2) << "\n";
            } else if (s_csv.empty()) {
                std::cout << csv;
            }
            return kExitOk;
        }

        if (h_cmd->parsed()) {
            dk::RunConfig cfg = resolve_config(h_flags);
            dk::DeformationFamily fam = resolve_family(h_family);
            dk::Complex x = dk::parse_complex(h_x);
            dk::Complex y = dk::parse_complex(h_y);
            if (std::abs(x - y) < 1e-14)
                throw dk::Error(dk::ErrorKind::Input,
                                "x and y must be distinct (diagonal refused)");
            auto at = [&fam](double tt) { return dk::family_at(fam, tt); };
            dk::HadamardReport rep = dk::hadamard_check(at, h_t, x, y, cfg);
            if (h_flags.as_json)
                std::cout << dk::to_json(rep).dump(2) << "\n";
            else
                std::cout << "lhs_fd       = " << dk::format_number(rep.lhs_fd)
                          << "\nrhs_integral = "
                          << dk::format_number(rep.rhs_integral)
                          << "\nrel_err      = " << dk::format_number(rep.rel_err)
                          << "\n"
                          << (rep.ok ? "agreement within tolerance"
                                     : "MISMATCH beyond tolerance")
                          << "\n";
            return rep.ok ? kExitOk : kExitHadamard;
        }

        if (b_cmd->parsed()) {
            dk::RunConfig cfg = resolve_config(b_flags);
            dk::DeformationFamily fam = resolve_family(b_family);
            dk::Witness w;
            if (b_witness == "D")
                w = dk::Witness::DSign;
            else if (b_witness == "starlike")
                w = dk::Witness::StarlikeMargin;
            else if (b_witness == "simple")
                w = dk::Witness::BoundarySimplicity;
            else if (b_witness == "maxima")
                w = dk::Witness::MaximaCount;
            else
                throw dk::Error(dk::ErrorKind::Input,
                                "unknown witness: " + b_witness);
            dk::BisectResult res =
                dk::threshold_bisect(fam, w, b_lo, b_hi, b_tol, cfg);
            if (b_flags.as_json)
                std::cout << dk::to_json(res).dump(2) << "\n";
            else
                std::cout << "t* = " << dk::format_number(res.t_star)
                          << "  bracket [" << dk::format_number(res.lo) << ", "
                          << dk::format_number(res.hi) << "]"
                          << "  witness(lo) = " << dk::format_number(res.witness_lo)
                          << "  witness(hi) = " << dk::format_number(res.witness_hi)
                          << "\n";
            return kExitOk;
        }
    } catch (const dk::Error& e) {
        std::cerr << "error (" << dk::to_string(e.kind()) << "): " << e.what()
                  << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
