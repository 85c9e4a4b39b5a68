#include "domainkind/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "domainkind/errors.hpp"
#include "domainkind/polyroots.hpp"

namespace domainkind {

namespace {

// Second-derivative bound sum n^2 |a_n|: |d^2/ds^2 f(e^{is})| never exceeds
// it, so a boundary arc of width ds stays within C2 ds^2 / 8 of its chord.
double curvature_bound(const CoefficientMap& map) {
    double c2 = 0.0;
    for (std::size_t n = 1; n < map.a.size(); ++n)
        c2 += static_cast<double>(n) * static_cast<double>(n) * std::abs(map.a[n]);
    return c2;
}

struct Arc {
    double s0, s1;
    Complex w0, w1;
};

Complex boundary_point(const CoefficientMap& map, double s) {
    return eval_jet(map, std::polar(1.0, s)).f;
}

double arc_dev(const Arc& a, double c2) {
    double ds = a.s1 - a.s0;
    return c2 * ds * ds / 8.0;
}

// Certified overlap test: the true arcs stay within their deviation tubes,
// so chord separation beyond the summed deviations rules an intersection
// out. Inside that bound, bisect the wider arc until the parameter windows
// pin the crossing (reported) or the tubes separate (pruned).
bool arcs_intersect(const CoefficientMap& map, Arc A, Arc B, double c2,
                    int depth, double* s_a, double* s_b) {
    double devA = arc_dev(A, c2);
    double devB = arc_dev(B, c2);
    double gap = segment_distance(A.w0, A.w1, B.w0, B.w1);
    if (gap > devA + devB) return false;
    if ((A.s1 - A.s0) + (B.s1 - B.s0) < 1e-10 || depth > 80) {
        *s_a = 0.5 * (A.s0 + A.s1);
        *s_b = 0.5 * (B.s0 + B.s1);
        return true;
    }
    if (A.s1 - A.s0 >= B.s1 - B.s0) {
        double mid = 0.5 * (A.s0 + A.s1);
        Complex wm = boundary_point(map, mid);
        Arc A1{A.s0, mid, A.w0, wm};
        Arc A2{mid, A.s1, wm, A.w1};
        return arcs_intersect(map, A1, B, c2, depth + 1, s_a, s_b) ||
               arcs_intersect(map, A2, B, c2, depth + 1, s_a, s_b);
    }
    double mid = 0.5 * (B.s0 + B.s1);
    Complex wm = boundary_point(map, mid);
    Arc B1{B.s0, mid, B.w0, wm};
    Arc B2{mid, B.s1, wm, B.w1};
    return arcs_intersect(map, A, B1, c2, depth + 1, s_a, s_b) ||
           arcs_intersect(map, A, B2, c2, depth + 1, s_a, s_b);
}

} // namespace

UnivalenceReport check_univalent(const CoefficientMap& map, const RunConfig& cfg) {
    if (!is_power_of_two(cfg.boundary_samples))
        throw Error(ErrorKind::Input, "boundary_samples must be a power of two");
    UnivalenceReport rep;

    // Interior zeros of f'.
    std::vector<Complex> dcoef;
    for (std::size_t n = 1; n < map.a.size(); ++n)
        dcoef.push_back(static_cast<double>(n) * map.a[n]);
    bool has_deriv = false;
    for (const Complex& c : dcoef)
        if (std::abs(c) != 0.0) has_deriv = true;
    if (!has_deriv) {
        rep.univalent = false;
        return rep; // constant map
    }
    if (dcoef.size() > 1) {
        bool nonconst = false;
        for (std::size_t k = 1; k < dcoef.size(); ++k)
            if (std::abs(dcoef[k]) != 0.0) nonconst = true;
        if (nonconst) {
            for (Complex r : polynomial_roots(dcoef))
                if (std::abs(r) < 1.0 - cfg.boundary_band)
                    rep.interior_critical_points.push_back(r);
        }
    }

    const int M = cfg.boundary_samples;
    std::vector<Complex> w(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j)
        w[static_cast<std::size_t>(j)] = boundary_point(map, 2.0 * kPi * j / M);

    for (int j = 0; j < M; ++j)
        if (std::abs(w[static_cast<std::size_t>(j)] -
                     w[static_cast<std::size_t>((j + 1) % M)]) == 0.0)
            throw Error(ErrorKind::Accuracy,
                        "coincident boundary samples; increase boundary_samples");

    rep.winding_degree = winding_number(w, map.a[0]);

    // Pairwise segment scan with a bounding-box prefilter; only non-adjacent
    // pairs can witness a genuine self-intersection.
    const double c2 = curvature_bound(map);
    const double ds = 2.0 * kPi / M;
    const double dev0 = c2 * ds * ds / 8.0;
    rep.boundary_simple = true;

    struct Box {
        double xmin, xmax, ymin, ymax;
    };
    std::vector<Box> boxes(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        Complex p = w[static_cast<std::size_t>(j)];
        Complex q = w[static_cast<std::size_t>((j + 1) % M)];
        boxes[static_cast<std::size_t>(j)] = {
            std::min(p.real(), q.real()) - dev0, std::max(p.real(), q.real()) + dev0,
            std::min(p.imag(), q.imag()) - dev0, std::max(p.imag(), q.imag()) + dev0};
    }

    for (int i = 0; i < M && rep.self_intersections.size() < 8; ++i) {
        const Box& bi = boxes[static_cast<std::size_t>(i)];
        for (int j = i + 2; j < M; ++j) {
            if (i == 0 && j == M - 1) continue; // adjacent through the seam
            const Box& bj = boxes[static_cast<std::size_t>(j)];
            if (bi.xmax < bj.xmin || bj.xmax < bi.xmin || bi.ymax < bj.ymin ||
                bj.ymax < bi.ymin)
                continue;
            Arc A{2.0 * kPi * i / M, 2.0 * kPi * (i + 1) / M,
                  w[static_cast<std::size_t>(i)],
                  w[static_cast<std::size_t>((i + 1) % M)]};
            Arc B{2.0 * kPi * j / M, 2.0 * kPi * (j + 1) / M,
                  w[static_cast<std::size_t>(j)],
                  w[static_cast<std::size_t>((j + 1) % M)]};
            double sa = 0.0, sb = 0.0;
            if (arcs_intersect(map, A, B, c2, 0, &sa, &sb)) {
                rep.boundary_simple = false;
                rep.self_intersections.emplace_back(sa, sb);
                if (rep.self_intersections.size() >= 8) break;
            }
        }
    }

    rep.univalent = rep.boundary_simple && rep.winding_degree == 1 &&
                    rep.interior_critical_points.empty();
    return rep;
}

BoundaryRegularity boundary_regularity(const CoefficientMap& map,
                                       const RunConfig& cfg) {
    BoundaryRegularity rep;
    std::vector<Complex> dcoef;
    for (std::size_t n = 1; n < map.a.size(); ++n)
        dcoef.push_back(static_cast<double>(n) * map.a[n]);

    bool nonconst = false;
    for (std::size_t k = 1; k < dcoef.size(); ++k)
        if (std::abs(dcoef[k]) != 0.0) nonconst = true;
    if (nonconst) {
        for (Complex r : polynomial_roots(dcoef)) {
            if (std::abs(std::abs(r) - 1.0) <= cfg.boundary_band) {
                rep.boundary_zeros.push_back(r);
                rep.cusp_angles.push_back(std::arg(r));
            }
        }
    }
    std::sort(rep.cusp_angles.begin(), rep.cusp_angles.end());
    std::sort(rep.boundary_zeros.begin(), rep.boundary_zeros.end(),
              [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
    rep.regular = rep.cusp_angles.empty();

    double mn = std::numeric_limits<double>::infinity();
    const int M = std::max(cfg.boundary_samples, 256);
    for (int j = 0; j < M; ++j)
        mn = std::min(mn, std::abs(eval_jet(map, std::polar(1.0, 2.0 * kPi * j / M)).fp));
    for (double t : rep.cusp_angles)
        mn = std::min(mn, std::abs(eval_jet(map, std::polar(1.0, t)).fp));
    rep.min_abs_fprime = mn;
    return rep;
}

StarlikeReport check_starlike(const CoefficientMap& map, Complex q,
                              const RunConfig& cfg) {
    StarlikeReport rep;
    const int M = std::max(cfg.boundary_samples, 256);
    double scale = 0.0;
    for (const Complex& c : map.a) scale = std::max(scale, std::abs(c));

    double mn = std::numeric_limits<double>::infinity();
    double at = 0.0;
    for (int j = 0; j < M; ++j) {
        double t = 2.0 * kPi * j / M;
        Complex z = std::polar(1.0, t);
        Jet jet = eval_jet(map, z);
        Complex d = jet.f - q;
        if (std::abs(d) < 1e-14 * std::max(scale, 1.0)) {
            rep.starlike = false;
            rep.min_margin = -std::numeric_limits<double>::infinity();
            rep.angle_at_min = t;
            rep.note = "boundary curve passes through the base point";
            return rep;
        }
        double p = (z * jet.fp / d).real();
        if (p < mn) {
            mn = p;
            at = t;
        }
    }
    rep.min_margin = mn;
    rep.angle_at_min = at;
    rep.starlike = mn > 0.0;
    return rep;
}

StarlikeReport check_starlike(const CoefficientMap& map, const RunConfig& cfg) {
    return check_starlike(map, map.coeff(0), cfg);
}

SICondition check_S_I(const CoefficientMap& map, const RunConfig& cfg) {
    double a1 = std::abs(map.coeff(1));
    if (a1 == 0.0)
        throw Error(ErrorKind::Precondition,
                    "sector condition needs a nonzero first coefficient");
    if (std::abs(map.coeff(2)) > cfg.recenter_tol * a1)
        throw Error(ErrorKind::Precondition,
                    "sector condition needs a map centered at a critical point "
                    "(a2 = 0); recenter first");
    std::vector<double> tail;
    for (std::size_t n = 2; n < map.a.size(); ++n)
        tail.push_back(static_cast<double>(n) * std::abs(map.a[n]));
    double margin = a1 - pairwise_sum(tail);

    SICondition out;
    out.margin = margin;
    if (margin > 0.0)
        out.status = SIStatus::Interior;
    else if (margin == 0.0)
        out.status = SIStatus::Boundary;
    else
        out.status = SIStatus::Outside;
    return out;
}

SICondition check_S_I(const NormalizedMap& map, const RunConfig& cfg) {
    return check_S_I(map.map, cfg);
}

} // namespace domainkind
