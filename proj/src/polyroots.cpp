#include "domainkind/polyroots.hpp"

#include <algorithm>
#include <cmath>

#include "domainkind/errors.hpp"

namespace domainkind {

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
    return v;
}

Complex horner_deriv(const std::vector<Complex>& c, Complex z) {
    Complex v = 0.0;
    for (int n = static_cast<int>(c.size()) - 1; n >= 1; --n)
        v = v * z + static_cast<double>(n) * c[static_cast<std::size_t>(n)];
    return v;
}

} // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1)
        throw Error(ErrorKind::Input, "root finding needs degree >= 1");

    const int d = static_cast<int>(c.size()) - 1;
    // Monic normalization keeps the iteration scale-free.
    const Complex lead = c.back();
    for (Complex& v : c) v /= lead;

    std::vector<Complex> w(static_cast<std::size_t>(d));
    const Complex g(0.4, 0.9); // non-symmetric seed ratio
    Complex p = g;
    for (int k = 0; k < d; ++k) {
        w[static_cast<std::size_t>(k)] = p;
        p *= g;
    }

    for (int iter = 0; iter < 1000; ++iter) {
        double max_step = 0.0, max_w = 0.0;
        for (int k = 0; k < d; ++k) {
            Complex denom = 1.0;
            for (int j = 0; j < d; ++j)
                if (j != k) denom *= w[static_cast<std::size_t>(k)] - w[static_cast<std::size_t>(j)];
            if (std::abs(denom) < 1e-300) denom = Complex(1e-300, 0.0);
            Complex step = horner(c, w[static_cast<std::size_t>(k)]) / denom;
            w[static_cast<std::size_t>(k)] -= step;
            max_step = std::max(max_step, std::abs(step));
            max_w = std::max(max_w, std::abs(w[static_cast<std::size_t>(k)]));
        }
        if (max_step < 1e-14 * (1.0 + max_w)) break;
    }

    // One or two Newton steps sharpen isolated roots to full precision.
    for (Complex& r : w) {
        for (int it = 0; it < 3; ++it) {
            Complex fp = horner_deriv(c, r);
            if (std::abs(fp) < 1e-30) break;
            Complex step = horner(c, r) / fp;
            r -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
        }
    }

    std::sort(w.begin(), w.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return w;
}

} // namespace domainkind
