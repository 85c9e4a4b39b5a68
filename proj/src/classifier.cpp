#include "domainkind/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "domainkind/errors.hpp"

namespace domainkind {

namespace {

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// ---- interior part of the area route ----
//
// Integrand: the density of the pulled-back metric minus the hyperbolic
// density of the disk itself, weighted by 1/|f|^4 versus 1/|z|^4. Writing
// f(z) = a1 z (1 + u(z)) with u = sum_{n>=2} (a_n/a1) z^{n-1}, the
// difference of the two singular terms collapses to an expression in u and
// B = |1 + u|^2 with no catastrophic cancellation near z = 0:
//
//   g(z) - s(z) = [ |f'|^2 (B - 1)(B + 1) / (a1^2 B^2) - 4 Re u ] / (a1^2 r^4)
//
// where B - 1 is accumulated as 2 Re u + |u|^2 exactly. For the identity
// map u = 0 and the integrand vanishes identically.
double interior_integral(const CoefficientMap& map, const RunConfig& cfg,
                         double* level_gap) {
    const double a1 = std::abs(map.coeff(1));
    const int M = 1024; // angular grid: resolves every harmonic we keep
    const int deg = map.degree();

    // Tail coefficients of u relative to a1.
    std::vector<Complex> ucoef;
    for (int n = 2; n <= deg; ++n) ucoef.push_back(map.coeff(n) / map.coeff(1));

    auto radial_value = [&](double r) {
        std::vector<double> vals(static_cast<std::size_t>(M));
        for (int j = 0; j < M; ++j) {
            Complex z = std::polar(r, 2.0 * kPi * j / M);
            Complex u = 0.0;
            for (auto it = ucoef.rbegin(); it != ucoef.rend(); ++it)
                u = (u + *it) * z;
            Jet jet = eval_jet(map, z);
            double re_u = u.real();
            double b_minus_1 = 2.0 * re_u + std::norm(u);
            double b = 1.0 + b_minus_1;
            double fp2 = std::norm(jet.fp);
            double r2 = r * r;
            double core =
                fp2 * b_minus_1 * (b + 1.0) / (a1 * a1 * b * b) - 4.0 * re_u;
            vals[static_cast<std::size_t>(j)] = core / (a1 * a1 * r2 * r2);
        }
        return pairwise_sum(vals) * (2.0 * kPi / M);
    };

    // Radial direction: composite Gauss-Legendre panels, dyadically refined
    // until two consecutive levels agree.
    const GaussRule rule = gauss_legendre(16);
    auto level_value = [&](int panels) {
        std::vector<double> acc;
        acc.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
        for (int p = 0; p < panels; ++p) {
            double lo = static_cast<double>(p) / panels;
            double hi = static_cast<double>(p + 1) / panels;
            double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                double r = mid + half * rule.nodes[q];
                acc.push_back(half * rule.weights[q] * r * radial_value(r));
            }
        }
        return pairwise_sum(acc);
    };

    double prev = nan_value(), last = nan_value();
    int panels = 8;
    for (int level = 0; level < std::max(2, cfg.quad_levels); ++level) {
        prev = last;
        last = level_value(panels);
        panels *= 2;
    }
    *level_gap = std::abs(last - prev);
    if (!(*level_gap <= cfg.quad_tol * std::max(1.0, std::abs(last))))
        throw Error(ErrorKind::Accuracy,
                    "interior quadrature not converged: " + format_double(prev) +
                        " vs " + format_double(last));
    return last;
}

// ---- exterior part ----
//
// integral over C \ Omega of |w - q|^{-4}, computed per ray from q: the
// boundary crossings r_1 < ... < r_k split the ray into alternating
// inside/outside intervals, each contributing in closed form.
struct RayCrossings {
    std::vector<double> r;
};

double exterior_integral(const CoefficientMap& map, Complex q,
                         const RunConfig& cfg) {
    const int scan = cfg.exterior_scan;
    std::vector<Complex> bvals(static_cast<std::size_t>(scan));
    double rmax = 0.0;
    for (int j = 0; j < scan; ++j) {
        Complex w = eval_jet(map, std::polar(1.0, 2.0 * kPi * j / scan)).f - q;
        bvals[static_cast<std::size_t>(j)] = w;
        rmax = std::max(rmax, std::abs(w));
    }
    const double r_out = 2.0 * rmax;

    const int rays = cfg.exterior_rays;
    std::vector<double> ray_vals(static_cast<std::size_t>(rays));
    for (int k = 0; k < rays; ++k) {
        double theta = 2.0 * kPi * k / rays;
        Complex dir = std::polar(1.0, -theta);

        // signed distance of boundary points from the ray's line
        auto psi = [&](Complex w) { return (dir * w).imag(); };
        auto chi = [&](Complex w) { return (dir * w).real(); };

        std::vector<double> crossings;
        for (int j = 0; j < scan; ++j) {
            int jn = (j + 1) % scan;
            double p0 = psi(bvals[static_cast<std::size_t>(j)]);
            double p1 = psi(bvals[static_cast<std::size_t>(jn)]);
            if (p0 == 0.0) {
                double c = chi(bvals[static_cast<std::size_t>(j)]);
                if (c > 0.0) crossings.push_back(c);
                continue;
            }
            if ((p0 > 0.0) == (p1 > 0.0)) continue;
            double s0 = 2.0 * kPi * j / scan;
            double s1 = 2.0 * kPi * (j + 1) / scan;
            for (int it = 0; it < 60; ++it) {
                double sm = 0.5 * (s0 + s1);
                double pm = psi(eval_jet(map, std::polar(1.0, sm)).f - q);
                if ((pm > 0.0) == (p0 > 0.0))
                    s0 = sm;
                else
                    s1 = sm;
                if (s1 - s0 < 1e-13) break;
            }
            Complex w = eval_jet(map, std::polar(1.0, 0.5 * (s0 + s1))).f - q;
            double c = chi(w);
            if (c > 1e-14 * rmax) crossings.push_back(c);
        }
        std::sort(crossings.begin(), crossings.end());
        crossings.erase(std::unique(crossings.begin(), crossings.end(),
                                    [&](double a, double b) {
                                        return std::abs(a - b) < 1e-11 * rmax;
                                    }),
                        crossings.end());

        // The base point is interior, so each ray leaves through an odd
        // number of boundary crossings.
        if (crossings.empty() || crossings.size() % 2 == 0)
            throw Error(ErrorKind::Accuracy,
                        "exterior ray parity violated; boundary curve may be "
                        "tangent to a ray");

        // Outside intervals: (r_1, r_2), (r_3, r_4), ..., (r_last, r_out).
        double val = 0.0;
        for (std::size_t i = 0; i + 1 < crossings.size(); i += 2) {
            double a = crossings[i], b = crossings[i + 1];
            val += 0.5 * (1.0 / (a * a) - 1.0 / (b * b));
        }
        double last = crossings.back();
        val += 0.5 * (1.0 / (last * last) - 1.0 / (r_out * r_out));
        ray_vals[static_cast<std::size_t>(k)] = val;
    }

    double inner = pairwise_sum(ray_vals) * (2.0 * kPi / rays);
    double tail = kPi / (r_out * r_out); // exact integral beyond the cutoff
    return inner + tail;
}

} // namespace

const char* to_string(DomainKind k) {
    switch (k) {
    case DomainKind::FirstKind: return "FirstKind";
    case DomainKind::SecondKind: return "SecondKind";
    case DomainKind::BoundaryCase: return "BoundaryCase";
    case DomainKind::Inapplicable: return "Inapplicable";
    }
    return "?";
}

double D_series(const CoefficientMap& map, const RunConfig& cfg) {
    double a1 = std::abs(map.coeff(1));
    if (a1 == 0.0)
        throw Error(ErrorKind::Precondition, "D needs a nonzero first coefficient");
    if (std::abs(map.coeff(2)) > cfg.recenter_tol * a1)
        throw Error(ErrorKind::Precondition,
                    "D is defined for maps centered at a critical point "
                    "(a2 = 0); recenter first");
    std::vector<double> terms;
    for (int n = 3; n <= map.degree(); ++n) {
        double nn = static_cast<double>(n);
        terms.push_back(nn * nn / (nn - 2.0) * std::norm(map.coeff(n)));
    }
    return -a1 * a1 + pairwise_sum(terms);
}

double D_series(const NormalizedMap& map, const RunConfig& cfg) {
    return D_series(map.map, cfg);
}

double A_integral(const CoefficientMap& map, const RunConfig& cfg) {
    double a1 = std::abs(map.coeff(1));
    if (a1 == 0.0)
        throw Error(ErrorKind::Precondition, "A needs a nonzero first coefficient");
    if (std::abs(map.coeff(2)) > cfg.recenter_tol * a1)
        throw Error(ErrorKind::Precondition,
                    "A is defined for maps centered at a critical point "
                    "(a2 = 0); recenter first");
    UnivalenceReport uni = check_univalent(map, cfg);
    if (!uni.univalent)
        throw Error(ErrorKind::Precondition,
                    "area route needs a univalent map");

    double gap = 0.0;
    double inner = interior_integral(map, cfg, &gap);
    double outer = exterior_integral(map, map.coeff(0), cfg);
    return (inner - outer) / kPi;
}

double A_integral(const NormalizedMap& map, const RunConfig& cfg) {
    return A_integral(map.map, cfg);
}

ClassificationResult classify(const CoefficientMap& map, const RunConfig& cfg) {
    ClassificationResult res;
    res.area_series = series_area(map);
    res.area_boundary = boundary_area(map, cfg.boundary_samples);

    UnivalenceReport uni = check_univalent(map, cfg);
    res.univalent = uni.univalent;
    BoundaryRegularity breg = boundary_regularity(map, cfg);
    res.regular_boundary = breg.regular;

    if (!uni.univalent) {
        res.kind = DomainKind::Inapplicable;
        res.D_value = nan_value();
        // When the center is already critical the coefficient functional is
        // still a well-defined number; report it for diagnostics.
        double a1 = std::abs(map.coeff(1));
        if (a1 > 0.0 && std::abs(map.coeff(2)) <= cfg.recenter_tol * a1)
            res.D_value = D_series(map, cfg);
        res.diagnostics = "not univalent";
        if (!uni.interior_critical_points.empty())
            res.diagnostics += " (derivative vanishes inside)";
        else if (!uni.boundary_simple)
            res.diagnostics += " (boundary curve self-intersects)";
        return res;
    }

    // Critical point search on the pulled-back Robin function.
    res.critical_points = find_critical_points(map, cfg);
    if (res.critical_points.empty())
        throw Error(ErrorKind::Accuracy,
                    "no critical point found; the Robin function of a bounded "
                    "domain always has one");
    res.maxima_count = count_maxima(res.critical_points);

    // Recenter at the global maximum (the head of the sorted list).
    const CriticalPoint& top = res.critical_points.front();
    res.normalized = recenter(map, top.location, cfg);
    if (!res.normalized.tail_ok)
        res.warnings.push_back(
            "recentered series truncated with tail " +
            format_double(res.normalized.tail) +
            "; increase boundary_samples if more accuracy is needed");

    res.D_value = D_series(res.normalized, cfg);
    res.sector = check_S_I(res.normalized, cfg);
    res.starlike = check_starlike(map, cfg);

    if (cfg.cross_check) {
        // The area route is normalized for a1 = 1; rescale the recentered map.
        double a1 = std::abs(res.normalized.map.coeff(1));
        CoefficientMap unit = scale(res.normalized.map, 1.0 / a1);
        double a = A_integral(unit, cfg);
        res.A_value = a;
        double d_unit = D_series(unit, cfg);
        if (std::abs(d_unit - a) > cfg.cross_check_tol)
            throw Error(ErrorKind::Accuracy,
                        "series and area routes disagree: D = " +
                            format_double(d_unit) + ", A = " + format_double(a));
    }

    if (!breg.regular) {
        // Univalent but with boundary cusps: the first/second kind dichotomy
        // needs a regular boundary. A vanishing D still pins the map to the
        // borderline.
        if (std::abs(res.D_value) <= cfg.sign_tol) {
            res.kind = DomainKind::BoundaryCase;
            res.diagnostics = "Theorem A inapplicable: irregular boundary";
        } else {
            res.kind = DomainKind::Inapplicable;
            res.diagnostics =
                "Theorem A inapplicable: irregular boundary (D = " +
                format_double(res.D_value) + ")";
        }
        return res;
    }

    if (res.maxima_count >= 2) {
        res.kind = DomainKind::SecondKind;
        res.diagnostics = "multiple maxima (" +
                          std::to_string(res.maxima_count) + ")";
        return res;
    }

    if (res.D_value < -cfg.sign_tol) {
        res.kind = DomainKind::FirstKind;
        res.diagnostics = "unique maximum; D < 0";
    } else if (res.D_value > cfg.sign_tol) {
        res.kind = DomainKind::SecondKind;
        res.diagnostics = "unique maximum; D > 0";
    } else {
        res.kind = DomainKind::BoundaryCase;
        res.diagnostics = "unique maximum; D within tolerance of 0";
    }
    return res;
}

} // namespace domainkind
