#pragma once

#include <string>
#include <vector>

#include "domainkind/config.hpp"
#include "domainkind/numerics.hpp"

namespace domainkind {

// A holomorphic map on the closed unit disk, stored as the coefficients of
// its power series f(z) = sum a[n] z^n (truncated; a[0] is the image of the
// origin). Coefficients are accepted as-is; operations that need a
// nondegenerate derivative at 0 check a[1] themselves.
struct CoefficientMap {
    std::vector<Complex> a;
    std::string label;

    explicit CoefficientMap(std::vector<Complex> coeffs, std::string name = "");

    int degree() const { return static_cast<int>(a.size()) - 1; }
    Complex coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(a.size())) ? a[n] : Complex(0.0);
    }
};

// f, f', f'' and f''' at one point, from a single Horner pass.
struct Jet {
    Complex f;
    Complex fp;
    Complex fpp;
    Complex fppp;
};

Jet eval_jet(const CoefficientMap& map, Complex z);

// Value of the order-th derivative (order in {0, 1, 2}) at z, |z| <= 1.
Complex eval(const CoefficientMap& map, Complex z, int order = 0);

// Uniform dilation of the image: z -> delta * f(z), i.e. every coefficient
// multiplied by delta.
CoefficientMap scale(const CoefficientMap& map, double delta);

// Rotation of the source disk: coefficients a[n] * e^{i n alpha}, so the new
// map is z -> f(e^{i alpha} z).
CoefficientMap rotate(const CoefficientMap& map, double alpha);

// Area of the image counted with multiplicity: pi * sum n |a_n|^2.
double series_area(const CoefficientMap& map);

// Area enclosed by the boundary curve f(e^{i t}) via the shoelace integral
// (1/2) Im integral conj(w) dw. Exact for trigonometric polynomials once the
// grid resolves the degree.
double boundary_area(const CoefficientMap& map, int samples = 4096);

// A map re-expanded around an interior point z* and rotated so the new first
// coefficient is real positive; records where the new origin sits in the old
// coordinates.
struct NormalizedMap {
    CoefficientMap map;      // the recentered series
    Complex center;          // z* in the original disk coordinates
    double rotation;         // alpha applied on the source side
    double tail;             // |last retained coefficient| of the re-expansion
    bool tail_ok;            // tail below the truncation warning threshold
};

// Precompose with the disk automorphism taking 0 to zstar, rotate so
// f'(0) > 0, and re-expand as a series of degree 4x the input degree.
// Requires |zstar| < 1 - margin.
NormalizedMap recenter(const CoefficientMap& map, Complex zstar,
                       const RunConfig& cfg = {});

} // namespace domainkind
