#include "domainkind/robin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "domainkind/errors.hpp"

namespace domainkind {

namespace {

constexpr double kInteriorPad = 1e-9;

bool inside(Complex z) { return std::abs(z) < 1.0 - kInteriorPad; }

// d(gradient)/dz and d(gradient)/dconj(z) of the Robin function, used for the
// Newton step on the Wirtinger derivative g = d(robin)/dz.
struct WirtingerHessian {
    Complex gz;
    Complex gzb;
};

WirtingerHessian robin_second(const CoefficientMap& map, Complex z) {
    Jet j = eval_jet(map, z);
    double r2 = std::norm(z);
    double om = 1.0 - r2;
    Complex fp2 = j.fp * j.fp;
    WirtingerHessian h;
    h.gz = ((j.fppp * j.fp - j.fpp * j.fpp) / fp2 -
            2.0 * std::conj(z) * std::conj(z) / (om * om)) /
           (4.0 * kPi);
    h.gzb = (-2.0 / om - 2.0 * r2 / (om * om)) / (4.0 * kPi);
    return h;
}

struct Candidate {
    Complex z;
    double residual;
};

// Damped Newton on g(z) = 0 in Wirtinger form: solve the real 2x2 system
// with columns (gz + gzb, i (gz - gzb)) applied to (dx, dy).
bool newton_refine(const CoefficientMap& map, Complex start, Candidate* out) {
    Complex z = start;
    double best_res = std::numeric_limits<double>::infinity();
    Complex best_z = z;
    for (int iter = 0; iter < 100; ++iter) {
        Complex g;
        try {
            g = robin_gradient(map, z);
        } catch (const Error&) {
            break;
        }
        double res = std::abs(g);
        if (res < best_res) {
            best_res = res;
            best_z = z;
        }
        if (res < 1e-15) break;

        WirtingerHessian h = robin_second(map, z);
        Complex cx = h.gz + h.gzb;
        Complex cy = Complex(0.0, 1.0) * (h.gz - h.gzb);
        double det = cx.real() * cy.imag() - cx.imag() * cy.real();
        if (std::abs(det) < 1e-300) break;
        double dx = (-g.real() * cy.imag() + g.imag() * cy.real()) / det;
        double dy = (-cx.real() * g.imag() + cx.imag() * g.real()) / det;
        Complex step(dx, dy);

        double lambda = 1.0;
        bool moved = false;
        for (int halving = 0; halving < 20; ++halving) {
            Complex trial = z + lambda * step;
            if (inside(trial)) {
                double trial_res;
                try {
                    trial_res = std::abs(robin_gradient(map, trial));
                } catch (const Error&) {
                    lambda *= 0.5;
                    continue;
                }
                if (trial_res < res) {
                    z = trial;
                    moved = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if (!moved) break;
    }
    out->z = best_z;
    out->residual = best_res;
    return std::isfinite(best_res);
}

struct EigPair {
    double lo, hi;
};

EigPair hessian_eigs(const CoefficientMap& map, Complex z, double h) {
    // Central differences of the analytic gradient give the real Hessian;
    // symmetrize to kill the O(h^2) asymmetry.
    auto grad = [&](Complex p) {
        Complex g = robin_gradient(map, p);
        return std::pair<double, double>(2.0 * g.real(), -2.0 * g.imag());
    };
    auto [gxp, gyp] = grad(z + Complex(h, 0.0));
    auto [gxm, gym] = grad(z - Complex(h, 0.0));
    auto [gxq, gyq] = grad(z + Complex(0.0, h));
    auto [gxr, gyr] = grad(z - Complex(0.0, h));
    double hxx = (gxp - gxm) / (2.0 * h);
    double hyx = (gyp - gym) / (2.0 * h);
    double hxy = (gxq - gxr) / (2.0 * h);
    double hyy = (gyq - gyr) / (2.0 * h);
    double off = 0.5 * (hxy + hyx);
    double tr = hxx + hyy;
    double disc = std::sqrt(std::max(0.0, (hxx - hyy) * (hxx - hyy) / 4.0 + off * off));
    return EigPair{tr / 2.0 - disc, tr / 2.0 + disc};
}

} // namespace

double robin_value(const CoefficientMap& map, Complex z) {
    if (std::abs(z) >= 1.0)
        throw Error(ErrorKind::OutOfDomain, "Robin function needs |z| < 1");
    Jet j = eval_jet(map, z);
    double m = (1.0 - std::norm(z)) * std::abs(j.fp);
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(m) / (2.0 * kPi);
}

Complex robin_gradient(const CoefficientMap& map, Complex z) {
    if (std::abs(z) >= 1.0)
        throw Error(ErrorKind::OutOfDomain, "Robin function needs |z| < 1");
    Jet j = eval_jet(map, z);
    if (std::abs(j.fp) == 0.0)
        throw Error(ErrorKind::Precondition,
                    "Robin gradient undefined where f' vanishes");
    return (j.fpp / j.fp - 2.0 * std::conj(z) / (1.0 - std::norm(z))) /
           (4.0 * kPi);
}

std::vector<CriticalPoint> find_critical_points(const CoefficientMap& map,
                                                const RunConfig& cfg) {
    std::vector<Candidate> found;

    const int nr = std::max(1, cfg.seed_grid.radii);
    const int na = std::max(4, cfg.seed_grid.angles);
    for (int ir = 0; ir < nr; ++ir) {
        double r = 0.05 + 0.9 * ir / std::max(1, nr - 1);
        for (int ia = 0; ia < na; ++ia) {
            Complex seed = std::polar(r, 2.0 * kPi * ia / na);
            Candidate cand;
            if (!newton_refine(map, seed, &cand)) continue;
            if (cand.residual > cfg.newton_tol) continue;
            bool dup = false;
            for (const Candidate& c : found)
                if (std::abs(c.z - cand.z) < 1e-6) {
                    dup = true;
                    break;
                }
            if (!dup) found.push_back(cand);
        }
    }

    // Merge residual-floor clusters: keep the representative with the larger
    // Robin value (ties go to the lexicographically smaller point).
    std::vector<Candidate> merged;
    std::vector<bool> used(found.size(), false);
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> cluster{i};
        for (std::size_t j = i + 1; j < found.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(found[i].z - found[j].z) < cfg.cluster_radius) {
                cluster.push_back(j);
                used[j] = true;
            }
        }
        std::size_t best = cluster[0];
        double best_val = robin_value(map, found[best].z);
        for (std::size_t k = 1; k < cluster.size(); ++k) {
            double v = robin_value(map, found[cluster[k]].z);
            if (v > best_val ||
                (v == best_val &&
                 (found[cluster[k]].z.real() < found[best].z.real() ||
                  (found[cluster[k]].z.real() == found[best].z.real() &&
                   found[cluster[k]].z.imag() < found[best].z.imag())))) {
                best = cluster[k];
                best_val = v;
            }
        }
        merged.push_back(found[best]);
    }

    std::vector<CriticalPoint> out;
    for (const Candidate& c : merged) {
        CriticalPoint p;
        p.location = c.z;
        p.newton_residual = c.residual;
        p.robin_value = robin_value(map, c.z);
        EigPair e = hessian_eigs(map, c.z, cfg.hessian_step);
        p.hessian_eigs[0] = e.lo;
        p.hessian_eigs[1] = e.hi;
        if (e.hi < -cfg.hessian_tol)
            p.kind = CriticalKind::Maximum;
        else if (e.lo > cfg.hessian_tol)
            p.kind = CriticalKind::Minimum;
        else if (e.lo < -cfg.hessian_tol && e.hi > cfg.hessian_tol)
            p.kind = CriticalKind::Saddle;
        else
            p.kind = CriticalKind::Degenerate;

        if (p.kind == CriticalKind::Degenerate) {
            // Quadratic test was inconclusive; sample small rings. A point
            // that strictly dominates all of them is a maximum even when an
            // eigenvalue vanishes (quartic top).
            bool dominates = true;
            bool dominated = true;
            for (double rad : {3e-3, 1e-2, 3e-2}) {
                for (int k = 0; k < 32; ++k) {
                    Complex q = c.z + std::polar(rad, 2.0 * kPi * k / 32.0);
                    if (!inside(q)) continue;
                    double v = robin_value(map, q);
                    if (v >= p.robin_value) dominates = false;
                    if (v <= p.robin_value) dominated = false;
                }
            }
            if (dominates)
                p.kind = CriticalKind::Maximum;
            else if (dominated)
                p.kind = CriticalKind::Minimum;
        }
        out.push_back(p);
    }

    std::sort(out.begin(), out.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) {
                  if (a.robin_value != b.robin_value)
                      return a.robin_value > b.robin_value;
                  if (a.location.real() != b.location.real())
                      return a.location.real() < b.location.real();
                  return a.location.imag() < b.location.imag();
              });
    return out;
}

int count_maxima(const std::vector<CriticalPoint>& points) {
    int n = 0;
    for (const CriticalPoint& p : points) {
        if (p.kind == CriticalKind::Degenerate)
            throw Error(ErrorKind::Indeterminate,
                        "degenerate critical point: maxima count undefined");
        if (p.kind == CriticalKind::Maximum) ++n;
    }
    return n;
}

const char* to_string(CriticalKind k) {
    switch (k) {
    case CriticalKind::Maximum: return "max";
    case CriticalKind::Saddle: return "saddle";
    case CriticalKind::Minimum: return "min";
    case CriticalKind::Degenerate: return "degenerate";
    }
    return "?";
}

} // namespace domainkind
