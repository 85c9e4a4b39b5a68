#pragma once

#include <functional>
#include <string>
#include <vector>

#include "domainkind/classifier.hpp"
#include "domainkind/config.hpp"
#include "domainkind/series.hpp"

namespace domainkind {

// A one-parameter family of coefficient maps t -> f_t.
struct DeformationFamily {
    std::string name;
    double t_min = 0.0;
    double t_max = 1.0;
    std::function<CoefficientMap(double)> at;
    // Exact t-derivative of the coefficients (used for boundary velocity).
    std::function<std::vector<Complex>(double)> coeff_velocity;
};

// f_t(z) = sum a_n t^{n-1} z^n for n >= 1 (a0 scales linearly): the image
// of f under a dilation of the source disk by t, rescaled back.
DeformationFamily scaling_path(const CoefficientMap& base, double t_min = 0.0,
                               double t_max = 1.0);

// Linear interpolation of the tail: a1 fixed, a_n -> t * a_n for n >= 2.
DeformationFamily coefficient_path(const CoefficientMap& base,
                                   double t_min = 0.0, double t_max = 1.0);

// Named families used throughout the tests and the command line:
//   "appendix3"     z + (2t/9) z^3 + (t/15) z^5,   t in [0, 2.5]
//   "nonunivalent"  z + (t/3) z^3 + (t/4) z^4,     t in [0, 1]
//   "disk-dilation" (1 + t) z,                     t in [0, 1]
DeformationFamily builtin_family(const std::string& name);

CoefficientMap family_at(const DeformationFamily& family, double t);

// Coefficient derivative d a_n / dt at t (exact, not finite-difference).
std::vector<Complex> family_velocity(const DeformationFamily& family, double t);

// sup_{|z|=1} |f(z) - z| + sup_{|z|=1} |f'(z) - 1|, the C^1 distance to the
// identity on the boundary circle (coarse grid plus local refinement).
double d_infty(const CoefficientMap& map, const RunConfig& cfg = {});

struct SweepRow {
    double t = 0.0;
    double D = 0.0;
    DomainKind kind = DomainKind::Inapplicable;
    int maxima = 0;
    bool starlike = false;
    bool univalent = false;
    double s_i_margin = 0.0;
    double area = 0.0;
    std::string status; // "ok", "irregular-boundary", "non-univalent" or "error: ..."
};

// Which columns of a sweep row are actually computed; skipped ones keep
// their defaults (NaN for D and the sector margin).
struct SweepChecks {
    bool classify = true;
    bool starlike = true;
    bool univalent = true;
    bool maxima = true;
    bool s_i = true;
};

// Run the checks at every grid parameter; failures become rows with an
// error status instead of aborting the sweep.
std::vector<SweepRow> sweep(const DeformationFamily& family,
                            const std::vector<double>& t_grid,
                            SweepChecks checks = {},
                            const RunConfig& cfg = {});

// Equispaced convenience grid over [family.t_min, family.t_max].
std::vector<double> uniform_grid(double lo, double hi, int points);

enum class Witness { DSign, StarlikeMargin, BoundarySimplicity, MaximaCount };

struct BisectResult {
    double t_star = 0.0;
    double lo = 0.0, hi = 0.0;       // final bracket
    double witness_lo = 0.0, witness_hi = 0.0;
    int iterations = 0;
};

// Locate the parameter where the witness changes: sign change for the scalar
// witnesses (D at the top maximum, the starlike margin, the boundary
// simplicity margin) or a count change for MaximaCount. Throws Bracket when
// the endpoints do not differ.
BisectResult threshold_bisect(const DeformationFamily& family, Witness witness,
                              double t_lo, double t_hi, double tol = 1e-8,
                              const RunConfig& cfg = {});

// Scalar value the bisection tracks; exposed for tests and the CLI.
double witness_value(const DeformationFamily& family, Witness witness, double t,
                     const RunConfig& cfg = {});

} // namespace domainkind
