#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domainkind/config.hpp"
#include "domainkind/numerics.hpp"
#include "domainkind/series.hpp"

namespace domainkind {

struct UnivalenceReport {
    bool univalent = false;
    bool boundary_simple = false;
    int winding_degree = 0;
    // Zeros of f' strictly inside the open disk (these force a fold).
    std::vector<Complex> interior_critical_points;
    // Pairs of boundary parameters (s, s') where the image curve meets
    // itself; empty when the curve is simple. At most a few are recorded.
    std::vector<std::pair<double, double>> self_intersections;
};

struct BoundaryRegularity {
    bool regular = false;
    double min_abs_fprime = 0.0;
    // Angles t (principal value) with f'(e^{it}) = 0, ascending.
    std::vector<double> cusp_angles;
    // The corresponding zeros e^{it}.
    std::vector<Complex> boundary_zeros;
};

struct StarlikeReport {
    bool starlike = false;
    double min_margin = 0.0; // min over the boundary of Re(z f' / (f - q))
    double angle_at_min = 0.0;
    std::string note;
};

enum class SIStatus { Interior, Boundary, Outside };

struct SICondition {
    SIStatus status = SIStatus::Outside;
    // |a1| - sum_{n>=2} n |a_n|; positive inside the sector condition.
    double margin = 0.0;
};

// Does f map the disk one-to-one onto its image? Combines three tests:
// no zeros of f' inside, a simple boundary curve (certified segment scan
// with curvature-based refinement), and winding degree one about f(0).
UnivalenceReport check_univalent(const CoefficientMap& map,
                                 const RunConfig& cfg = {});

// Zeros of f' within a thin band around the unit circle; regular means none.
BoundaryRegularity boundary_regularity(const CoefficientMap& map,
                                       const RunConfig& cfg = {});

// Starlikeness of the image with respect to q: Re(z f'(z) / (f(z) - q)) > 0
// on |z| = 1. If f hits q on the grid the report comes back not starlike
// with an explanatory note. The one-argument form uses q = f(0).
StarlikeReport check_starlike(const CoefficientMap& map, Complex q,
                              const RunConfig& cfg = {});
StarlikeReport check_starlike(const CoefficientMap& map,
                              const RunConfig& cfg = {});

// The coefficient sector condition |a1| > sum_{n>=2} n |a_n| for a map
// centered at a critical point (|a2| must be negligible).
SICondition check_S_I(const CoefficientMap& map, const RunConfig& cfg = {});
SICondition check_S_I(const NormalizedMap& map, const RunConfig& cfg = {});

} // namespace domainkind
