#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "domainkind/classifier.hpp"
#include "domainkind/config.hpp"
#include "domainkind/deformations.hpp"
#include "domainkind/greens.hpp"
#include "domainkind/series.hpp"

namespace domainkind {

// "0.2", "-0.3", "1.5i", "0.2-0.3i", "1e-3+2i" -> complex value.
Complex parse_complex(const std::string& text);

// Fixed-width-free formatting used everywhere numbers reach the user:
// 12 significant digits.
std::string format_number(double v);

// Human-readable classification block; the first line is the verdict
// headline ("FirstKind, D = -1.000000" or "Kind (diagnostics)").
std::string classification_text(const ClassificationResult& res);

nlohmann::json to_json(const ClassificationResult& res);
nlohmann::json to_json(const SweepRow& row);
nlohmann::json to_json(const BisectResult& res);
nlohmann::json to_json(const HadamardReport& rep);

// CSV table with the exact header
// t,D,kind,maxima,starlike,univalent,s_i_margin,area,status
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Domain description: {"coefficients": [[re, im] | re, ...], "label"?: str}
// or {"builtin": "disk" | "f3" | "appendix3" | "nonunivalent",
//     "t"?: real, "radius"?: real}.
CoefficientMap parse_domain_spec(const nlohmann::json& spec);

// Overlay a JSON config file onto defaults; unknown keys are rejected.
// Recognized keys: boundary_samples, newton_tol, recenter_tol, sign_tol,
// quad_levels, cross_check, seed_grid{radii, angles} and an optional
// "advanced" object for the secondary knobs.
RunConfig apply_run_config(const nlohmann::json& doc, RunConfig base = {});

} // namespace domainkind
