#include "domainkind/series.hpp"

#include <algorithm>
#include <cmath>

#include "domainkind/errors.hpp"

namespace domainkind {

CoefficientMap::CoefficientMap(std::vector<Complex> coeffs, std::string name)
    : a(std::move(coeffs)), label(std::move(name)) {
    if (a.size() < 2)
        throw Error(ErrorKind::Input,
                    "coefficient list needs at least a0 and a1");
    for (const Complex& c : a)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw Error(ErrorKind::Input, "non-finite coefficient");
}

Jet eval_jet(const CoefficientMap& map, Complex z) {
    // Horner evaluation of f and its first three derivatives in one pass:
    // d3 accumulates f'''/6, d2 f''/2, d1 f', d0 f.
    Complex d0 = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;
    for (int n = map.degree(); n >= 0; --n) {
        d3 = d3 * z + d2;
        d2 = d2 * z + d1;
        d1 = d1 * z + d0;
        d0 = d0 * z + map.a[static_cast<std::size_t>(n)];
    }
    return Jet{d0, d1, 2.0 * d2, 6.0 * d3};
}

Complex eval(const CoefficientMap& map, Complex z, int order) {
    if (order < 0 || order > 2)
        throw Error(ErrorKind::Input, "derivative order must be 0, 1 or 2");
    if (std::abs(z) > 1.0 + 1e-12)
        throw Error(ErrorKind::OutOfDomain, "point outside the closed unit disk");
    Jet j = eval_jet(map, z);
    switch (order) {
    case 0: return j.f;
    case 1: return j.fp;
    default: return j.fpp;
    }
}

CoefficientMap scale(const CoefficientMap& map, double delta) {
    if (!(delta > 0.0))
        throw Error(ErrorKind::Input, "scale factor must be positive");
    std::vector<Complex> out = map.a;
    for (Complex& c : out) c *= delta;
    return CoefficientMap(std::move(out), map.label);
}

CoefficientMap rotate(const CoefficientMap& map, double alpha) {
    std::vector<Complex> out(map.a.size());
    for (std::size_t n = 0; n < map.a.size(); ++n)
        out[n] = map.a[n] * std::polar(1.0, alpha * static_cast<double>(n));
    return CoefficientMap(std::move(out), map.label);
}

double series_area(const CoefficientMap& map) {
    std::vector<double> terms;
    terms.reserve(map.a.size());
    for (std::size_t n = 1; n < map.a.size(); ++n)
        terms.push_back(static_cast<double>(n) * std::norm(map.a[n]));
    return kPi * pairwise_sum(terms);
}

double boundary_area(const CoefficientMap& map, int samples) {
    if (samples < 4 * (map.degree() + 1)) samples = 4 * (map.degree() + 1);
    // Trapezoid rule for (1/2) Im \oint conj(w) w' dt; the integrand is a
    // trigonometric polynomial of degree < samples, so this is exact up to
    // rounding.
    std::vector<double> vals(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        double t = 2.0 * kPi * j / samples;
        Complex z = std::polar(1.0, t);
        Jet jet = eval_jet(map, z);
        Complex wp = jet.fp * Complex(0.0, 1.0) * z; // d/dt f(e^{it})
        vals[static_cast<std::size_t>(j)] =
            0.5 * (std::conj(jet.f) * wp).imag();
    }
    return pairwise_sum(vals) * (2.0 * kPi / samples);
}

NormalizedMap recenter(const CoefficientMap& map, Complex zstar,
                       const RunConfig& cfg) {
    if (!is_power_of_two(cfg.boundary_samples))
        throw Error(ErrorKind::Input, "boundary_samples must be a power of two");
    double r = std::abs(zstar);
    if (r >= 1.0 - cfg.recenter_margin)
        throw Error(ErrorKind::Precondition,
                    "recentering point too close to the unit circle");

    Jet at_star = eval_jet(map, zstar);
    if (std::abs(at_star.fp) == 0.0)
        throw Error(ErrorKind::Precondition,
                    "derivative vanishes at the recentering point");
    double alpha = -std::arg(at_star.fp * (1.0 - r * r));

    NormalizedMap out{CoefficientMap({0.0, 1.0}), zstar, alpha, 0.0, true};

    if (r < 1e-13) {
        // Pure rotation: exact coefficient transform, no resampling.
        CoefficientMap rotated = rotate(map, alpha);
        // Force the first coefficient onto the positive real axis exactly.
        rotated.a[1] = Complex(std::abs(rotated.a[1]), 0.0);
        out.map = std::move(rotated);
        out.rotation = alpha;
        return out;
    }

    // Composite g(z) = f(phi(e^{i alpha} z)) with phi the automorphism
    // sending 0 to z*. Sample on |z| = rho and divide out rho^k after the
    // FFT; rho = 1/2 balances truncation decay against noise amplification.
    const int degree_out = 4 * std::max(map.degree(), 8);
    int M = cfg.boundary_samples;
    while (M < 4 * degree_out) M *= 2;
    const double rho = 0.5;

    std::vector<Complex> samples(static_cast<std::size_t>(M));
    Complex rot = std::polar(1.0, alpha);
    for (int j = 0; j < M; ++j) {
        Complex z = std::polar(rho, 2.0 * kPi * j / M) * rot;
        Complex w = (z + zstar) / (1.0 + std::conj(zstar) * z);
        samples[static_cast<std::size_t>(j)] = eval_jet(map, w).f;
    }
    fft_inplace(samples, -1);

    std::vector<Complex> coeffs(static_cast<std::size_t>(degree_out) + 1);
    double scale_pow = 1.0;
    for (int k = 0; k <= degree_out; ++k) {
        coeffs[static_cast<std::size_t>(k)] =
            samples[static_cast<std::size_t>(k)] / (static_cast<double>(M) * scale_pow);
        scale_pow *= rho;
    }

    out.tail = std::abs(coeffs.back());
    out.tail_ok = out.tail < 1e-10;
    // The rotation was chosen to make the new a1 real positive; snap away
    // the residual phase so downstream sign tests see an exact real value.
    Complex a1 = coeffs[1];
    coeffs[1] = Complex(std::abs(a1), 0.0);
    out.map = CoefficientMap(std::move(coeffs), map.label);
    out.rotation = alpha;
    return out;
}

} // namespace domainkind
