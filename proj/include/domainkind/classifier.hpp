#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domainkind/config.hpp"
#include "domainkind/geometry.hpp"
#include "domainkind/robin.hpp"
#include "domainkind/series.hpp"

namespace domainkind {

enum class DomainKind { FirstKind, SecondKind, BoundaryCase, Inapplicable };

const char* to_string(DomainKind k);

// The coefficient functional -|a1|^2 + sum_{n>=3} n^2/(n-2) |a_n|^2 for a map
// centered at a critical point of the Robin function (a2 must vanish up to
// recenter_tol, relative to |a1|).
double D_series(const CoefficientMap& map, const RunConfig& cfg = {});
double D_series(const NormalizedMap& map, const RunConfig& cfg = {});

// The same quantity by a completely separate route: an area-type integral of
// the difference between the pulled-back metric and the exact hyperbolic
// metric, plus the integral of 1/|w|^4 over the exterior of the image.
// Normalized for a1 = 1; pass a unit-rescaled map when cross-checking.
// Preconditions: univalent, centered (a2 = 0), a1 != 0.
double A_integral(const CoefficientMap& map, const RunConfig& cfg = {});
double A_integral(const NormalizedMap& map, const RunConfig& cfg = {});

struct ClassificationResult {
    DomainKind kind = DomainKind::Inapplicable;
    double D_value = 0.0;                  // NaN when not defined
    std::optional<double> A_value;         // present when cross_check ran
    std::vector<CriticalPoint> critical_points;
    int maxima_count = 0;
    bool univalent = false;
    bool regular_boundary = false;
    NormalizedMap normalized{CoefficientMap({0.0, 1.0}), 0.0, 0.0, 0.0, true};
    SICondition sector;                    // evaluated on the recentered map
    StarlikeReport starlike;               // about f(0)
    double area_series = 0.0;
    double area_boundary = 0.0;
    std::string diagnostics;
    std::vector<std::string> warnings;
};

// Full pipeline: univalence and boundary checks, critical point search,
// recentering at the global maximum, D (and optionally the independent area
// route), and the first/second kind verdict.
ClassificationResult classify(const CoefficientMap& map,
                              const RunConfig& cfg = {});

} // namespace domainkind
