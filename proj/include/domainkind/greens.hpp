#pragma once

#include <functional>

#include "domainkind/config.hpp"
#include "domainkind/numerics.hpp"
#include "domainkind/series.hpp"

namespace domainkind {

// Preimage of w under f, found by Newton from a coarse interior seed grid.
// Requires w strictly inside the image (winding test); throws OutOfDomain
// otherwise.
Complex inverse_map(const CoefficientMap& map, Complex w,
                    const RunConfig& cfg = {});

struct GreensEvaluation {
    Complex x, y;    // the two points, in image coordinates
    Complex zx, zy;  // their disk preimages
    double G = 0.0;  // Green's function of the image domain
    double R = 0.0;  // regular part: G + (1/2pi) log|x - y|
};

// Green's function via the disk pullback:
// G(x, y) = -(1/2pi) log | (zx - zy) / (1 - conj(zy) zx) |.
GreensEvaluation green(const CoefficientMap& map, Complex x, Complex y,
                       const RunConfig& cfg = {});

// Outward normal derivative of G(., y) at the boundary point f(e^{i t}):
// -P(t, zy) / (2 pi |f'(e^{i t})|) with P the Poisson kernel.
double green_normal_derivative(const CoefficientMap& map, double t, Complex zy,
                               const RunConfig& cfg = {});

struct HadamardReport {
    double lhs_fd = 0.0;       // dG/dt by centered differences across the family
    double rhs_integral = 0.0; // boundary integral of the variational formula
    double rel_err = 0.0;
    bool ok = false;
};

// Variational (Hadamard-type) check for a one-parameter family t -> f_t:
// compares the t-derivative of G_t(x, y) at fixed image points x, y with the
// boundary integral of (dG/dnu_x)(dG/dnu_y) <V, nu> where V is the boundary
// velocity of the family. Throws Precondition when the boundary is cusped.
HadamardReport hadamard_check(const std::function<CoefficientMap(double)>& family,
                              double t, Complex x, Complex y,
                              const RunConfig& cfg = {});

} // namespace domainkind
