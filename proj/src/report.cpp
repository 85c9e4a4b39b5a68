#include "domainkind/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "domainkind/errors.hpp"

namespace domainkind {

namespace {

using nlohmann::json;

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

double require_positive(const json& v, const char* key) {
    if (!v.is_number())
        throw Error(ErrorKind::Input, std::string("config key ") + key +
                                          " must be a number");
    double d = v.get<double>();
    if (!(d > 0.0))
        throw Error(ErrorKind::Input, std::string("config key ") + key +
                                          " must be positive");
    return d;
}

} // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw Error(ErrorKind::Input, "empty number");

    auto parse_real = [](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(part, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Input, "cannot parse number: " + part);
        }
        if (pos != part.size())
            throw Error(ErrorKind::Input, "cannot parse number: " + part);
        return v;
    };

    bool has_i = (s.back() == 'i' || s.back() == 'I');
    if (!has_i) return Complex(parse_real(s), 0.0);

    s.pop_back();
    // Find the split between real and imaginary parts: the last +/- that is
    // not the leading sign and not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        char c = s[k];
        if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return Complex(0.0, parse_real(s));
    return Complex(parse_real(s.substr(0, split)),
                   parse_real(s.substr(split)));
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string classification_text(const ClassificationResult& res) {
    std::ostringstream out;
    char head[96];
    if (res.kind == DomainKind::FirstKind || res.kind == DomainKind::SecondKind) {
        std::snprintf(head, sizeof(head), "%s, D = %.6f", to_string(res.kind),
                      res.D_value);
    } else {
        std::snprintf(head, sizeof(head), "%s (%s)", to_string(res.kind),
                      res.diagnostics.c_str());
    }
    out << head << "\n";
    out << "univalent:        " << (res.univalent ? "true" : "false") << "\n";
    out << "regular boundary: " << (res.regular_boundary ? "true" : "false")
        << "\n";
    out << "D (series):       " << format_number(res.D_value) << "\n";
    if (res.A_value)
        out << "A (area route):   " << format_number(*res.A_value) << "\n";
    out << "maxima:           " << res.maxima_count << "\n";
    out << "sector margin:    " << format_number(res.sector.margin) << "\n";
    out << "starlike:         " << (res.starlike.starlike ? "true" : "false")
        << " (margin " << format_number(res.starlike.min_margin) << ")\n";
    out << "area:             " << format_number(res.area_series) << "\n";
    if (!res.critical_points.empty()) {
        out << "critical points (gamma descending):\n";
        for (const CriticalPoint& p : res.critical_points) {
            std::string im = format_number(p.location.imag());
            if (!im.empty() && im[0] != '-') im = "+" + im;
            char line[176];
            std::snprintf(line, sizeof(line),
                          "  %-10s z = %s%si  gamma = %s  eigs = [%s, %s]",
                          to_string(p.kind),
                          format_number(p.location.real()).c_str(), im.c_str(),
                          format_number(p.robin_value).c_str(),
                          format_number(p.hessian_eigs[0]).c_str(),
                          format_number(p.hessian_eigs[1]).c_str());
            out << line << "\n";
        }
    }
    for (const std::string& w : res.warnings) out << "warning: " << w << "\n";
    return out.str();
}

json to_json(const ClassificationResult& res) {
    json j;
    j["kind"] = to_string(res.kind);
    j["D"] = res.D_value;
    if (res.A_value)
        j["A"] = *res.A_value;
    else
        j["A"] = nullptr;
    j["maxima"] = res.maxima_count;
    j["univalent"] = res.univalent;
    j["regular_boundary"] = res.regular_boundary;
    j["diagnostics"] = res.diagnostics;
    j["center"] = complex_json(res.normalized.center);
    j["rotation"] = res.normalized.rotation;
    j["recentered_tail"] = res.normalized.tail;
    j["sector"] = {{"status", res.sector.status == SIStatus::Interior
                                  ? "interior"
                                  : (res.sector.status == SIStatus::Boundary
                                         ? "boundary"
                                         : "outside")},
                   {"margin", res.sector.margin}};
    j["starlike"] = {{"starlike", res.starlike.starlike},
                     {"min_margin", res.starlike.min_margin},
                     {"angle_at_min", res.starlike.angle_at_min}};
    j["area"] = {{"series", res.area_series}, {"boundary", res.area_boundary}};
    json pts = json::array();
    for (const CriticalPoint& p : res.critical_points) {
        pts.push_back({{"location", complex_json(p.location)},
                       {"robin_value", p.robin_value},
                       {"kind", to_string(p.kind)},
                       {"hessian_eigs",
                        json::array({p.hessian_eigs[0], p.hessian_eigs[1]})},
                       {"newton_residual", p.newton_residual}});
    }
    j["critical_points"] = pts;
    j["warnings"] = res.warnings;
    return j;
}

json to_json(const SweepRow& row) {
    json j;
    j["t"] = row.t;
    j["D"] = row.D;
    j["kind"] = to_string(row.kind);
    j["maxima"] = row.maxima;
    j["starlike"] = row.starlike;
    j["univalent"] = row.univalent;
    j["s_i_margin"] = row.s_i_margin;
    j["area"] = row.area;
    j["status"] = row.status;
    return j;
}

json to_json(const BisectResult& res) {
    json j;
    j["t_star"] = res.t_star;
    j["bracket"] = json::array({res.lo, res.hi});
    j["witness_lo"] = res.witness_lo;
    j["witness_hi"] = res.witness_hi;
    j["iterations"] = res.iterations;
    return j;
}

json to_json(const HadamardReport& rep) {
    json j;
    j["lhs_fd"] = rep.lhs_fd;
    j["rhs_integral"] = rep.rhs_integral;
    j["rel_err"] = rep.rel_err;
    j["ok"] = rep.ok;
    return j;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "t,D,kind,maxima,starlike,univalent,s_i_margin,area,status\n";
    for (const SweepRow& r : rows) {
        out += format_number(r.t);
        out += ",";
        out += format_number(r.D);
        out += ",";
        out += to_string(r.kind);
        out += ",";
        out += std::to_string(r.maxima);
        out += ",";
        out += r.starlike ? "true" : "false";
        out += ",";
        out += r.univalent ? "true" : "false";
        out += ",";
        out += format_number(r.s_i_margin);
        out += ",";
        out += format_number(r.area);
        out += ",";
        out += csv_field(r.status);
        out += "\n";
    }
    return out;
}

CoefficientMap parse_domain_spec(const nlohmann::json& spec) {
    if (!spec.is_object())
        throw Error(ErrorKind::Input, "domain spec must be a JSON object");

    const bool has_coeffs = spec.contains("coefficients");
    const bool has_builtin = spec.contains("builtin");
    if (has_coeffs == has_builtin)
        throw Error(ErrorKind::Input,
                    "domain spec needs exactly one of coefficients / builtin");

    std::string label = spec.value("label", std::string());
    for (const auto& [key, _] : spec.items())
        if (key != "coefficients" && key != "builtin" && key != "label")
            throw Error(ErrorKind::Input, "unknown domain spec key: " + key);

    if (has_coeffs) {
        const json& arr = spec["coefficients"];
        if (!arr.is_array() || arr.size() < 2)
            throw Error(ErrorKind::Input,
                        "coefficients must be an array with at least a0, a1");
        std::vector<Complex> a;
        for (const json& e : arr) {
            if (e.is_number())
                a.emplace_back(e.get<double>(), 0.0);
            else if (e.is_string())
                a.push_back(parse_complex(e.get<std::string>()));
            else if (e.is_array() && e.size() == 2 && e[0].is_number() &&
                     e[1].is_number())
                a.emplace_back(e[0].get<double>(), e[1].get<double>());
            else
                throw Error(ErrorKind::Input,
                            "coefficient entries must be number, [re, im] or "
                            "a complex string");
        }
        if (std::abs(a[1]) == 0.0)
            throw Error(ErrorKind::Input, "coefficient a1 must be nonzero");
        return CoefficientMap(std::move(a), std::move(label));
    }

    const json& b = spec["builtin"];
    std::string name;
    double t = std::numeric_limits<double>::quiet_NaN();
    double radius = 1.0;
    bool has_t = false;
    if (b.is_string()) {
        name = b.get<std::string>();
    } else if (b.is_object()) {
        if (!b.contains("name") || !b["name"].is_string())
            throw Error(ErrorKind::Input, "builtin needs a name");
        name = b["name"].get<std::string>();
        if (b.contains("params")) {
            const json& p = b["params"];
            if (p.contains("t")) {
                t = p["t"].get<double>();
                has_t = true;
            }
            if (p.contains("radius")) radius = p["radius"].get<double>();
        }
    } else {
        throw Error(ErrorKind::Input, "builtin must be a string or object");
    }

    if (name == "disk") {
        if (!(radius > 0.0))
            throw Error(ErrorKind::Input, "disk radius must be positive");
        return CoefficientMap({0.0, radius}, label.empty() ? "disk" : label);
    }
    if (name == "f3")
        return CoefficientMap({0.0, 1.0, 0.0, 1.0 / 3.0},
                              label.empty() ? "f3" : label);
    if (name == "appendix3" || name == "nonunivalent") {
        if (!has_t)
            throw Error(ErrorKind::Input, "builtin " + name + " needs params.t");
        CoefficientMap m = family_at(builtin_family(name), t);
        if (!label.empty()) m.label = label;
        return m;
    }
    throw Error(ErrorKind::Input, "unknown builtin: " + name);
}

RunConfig apply_run_config(const nlohmann::json& doc, RunConfig base) {
    if (!doc.is_object())
        throw Error(ErrorKind::Input, "run config must be a JSON object");
    for (const auto& [key, val] : doc.items()) {
        if (key == "boundary_samples") {
            if (!val.is_number_integer())
                throw Error(ErrorKind::Input, "boundary_samples must be an integer");
            base.boundary_samples = val.get<int>();
            if (!is_power_of_two(base.boundary_samples))
                throw Error(ErrorKind::Input,
                            "boundary_samples must be a power of two");
        } else if (key == "newton_tol") {
            base.newton_tol = require_positive(val, "newton_tol");
        } else if (key == "recenter_tol") {
            base.recenter_tol = require_positive(val, "recenter_tol");
        } else if (key == "sign_tol") {
            base.sign_tol = require_positive(val, "sign_tol");
        } else if (key == "quad_levels") {
            if (!val.is_number_integer() || val.get<int>() < 2)
                throw Error(ErrorKind::Input, "quad_levels must be an integer >= 2");
            base.quad_levels = val.get<int>();
        } else if (key == "cross_check") {
            if (!val.is_boolean())
                throw Error(ErrorKind::Input, "cross_check must be a boolean");
            base.cross_check = val.get<bool>();
        } else if (key == "seed_grid") {
            if (!val.is_object())
                throw Error(ErrorKind::Input, "seed_grid must be an object");
            for (const auto& [k2, v2] : val.items()) {
                if (k2 == "radii")
                    base.seed_grid.radii = v2.get<int>();
                else if (k2 == "angles")
                    base.seed_grid.angles = v2.get<int>();
                else
                    throw Error(ErrorKind::Input, "unknown seed_grid key: " + k2);
            }
            if (base.seed_grid.radii < 1 || base.seed_grid.angles < 4)
                throw Error(ErrorKind::Input, "seed_grid too small");
        } else if (key == "advanced") {
            if (!val.is_object())
                throw Error(ErrorKind::Input, "advanced must be an object");
            for (const auto& [k2, v2] : val.items()) {
                if (k2 == "cross_check_tol")
                    base.cross_check_tol = require_positive(v2, "cross_check_tol");
                else if (k2 == "quad_tol")
                    base.quad_tol = require_positive(v2, "quad_tol");
                else if (k2 == "recenter_margin")
                    base.recenter_margin = require_positive(v2, "recenter_margin");
                else if (k2 == "boundary_band")
                    base.boundary_band = require_positive(v2, "boundary_band");
                else if (k2 == "hessian_tol")
                    base.hessian_tol = require_positive(v2, "hessian_tol");
                else if (k2 == "cluster_radius")
                    base.cluster_radius = require_positive(v2, "cluster_radius");
                else if (k2 == "hessian_step")
                    base.hessian_step = require_positive(v2, "hessian_step");
                else if (k2 == "inverse_tol")
                    base.inverse_tol = require_positive(v2, "inverse_tol");
                else if (k2 == "hadamard_step")
                    base.hadamard_step = require_positive(v2, "hadamard_step");
                else if (k2 == "hadamard_tol")
                    base.hadamard_tol = require_positive(v2, "hadamard_tol");
                else if (k2 == "exterior_rays")
                    base.exterior_rays = v2.get<int>();
                else if (k2 == "exterior_scan")
                    base.exterior_scan = v2.get<int>();
                else
                    throw Error(ErrorKind::Input, "unknown advanced key: " + k2);
            }
            if (base.exterior_rays < 64 || base.exterior_scan < 64)
                throw Error(ErrorKind::Input, "exterior grids too small");
        } else {
            throw Error(ErrorKind::Input, "unknown config key: " + key);
        }
    }
    return base;
}

} // namespace domainkind
