#include "domainkind/greens.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "domainkind/errors.hpp"

namespace domainkind {

namespace {

double image_scale(const CoefficientMap& map) {
    double s = 0.0;
    for (const Complex& c : map.a) s += std::abs(c);
    return std::max(s, 1e-30);
}

} // namespace

Complex inverse_map(const CoefficientMap& map, Complex w, const RunConfig& cfg) {
    // Winding precondition: w must lie strictly inside the image curve.
    const int M = std::max(cfg.boundary_samples, 1024);
    std::vector<Complex> boundary(static_cast<std::size_t>(M));
    double min_gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < M; ++j) {
        boundary[static_cast<std::size_t>(j)] =
            eval_jet(map, std::polar(1.0, 2.0 * kPi * j / M)).f;
        min_gap = std::min(min_gap,
                           std::abs(boundary[static_cast<std::size_t>(j)] - w));
    }
    double scale = image_scale(map);
    if (min_gap < 1e-12 * scale || winding_number(boundary, w) != 1)
        throw Error(ErrorKind::OutOfDomain,
                    "point is not strictly inside the image domain");

    // Seeds ordered by how close f lands to w.
    struct Seed {
        Complex z;
        double err;
    };
    std::vector<Seed> seeds;
    for (int ir = 0; ir < 12; ++ir) {
        double r = (ir + 0.5) / 12.5;
        for (int ia = 0; ia < 48; ++ia) {
            Complex z = std::polar(r, 2.0 * kPi * ia / 48.0);
            seeds.push_back({z, std::abs(eval_jet(map, z).f - w)});
        }
    }
    seeds.push_back({Complex(0.0, 0.0), std::abs(map.coeff(0) - w)});
    std::sort(seeds.begin(), seeds.end(),
              [](const Seed& a, const Seed& b) { return a.err < b.err; });

    const std::size_t tries = std::min<std::size_t>(seeds.size(), 24);
    for (std::size_t s = 0; s < tries; ++s) {
        Complex z = seeds[s].z;
        for (int iter = 0; iter < 100; ++iter) {
            Jet j = eval_jet(map, z);
            Complex r = j.f - w;
            if (std::abs(r) < cfg.inverse_tol * std::max(1.0, scale)) {
                if (std::abs(z) < 1.0 + 1e-9) return z;
                break;
            }
            if (std::abs(j.fp) < 1e-300) break;
            Complex step = -r / j.fp;
            double lambda = 1.0;
            bool moved = false;
            for (int h = 0; h < 30; ++h) {
                Complex trial = z + lambda * step;
                if (std::abs(trial) < 1.0 - 1e-12 &&
                    std::abs(eval_jet(map, trial).f - w) < std::abs(r)) {
                    z = trial;
                    moved = true;
                    break;
                }
                lambda *= 0.5;
            }
            if (!moved) break;
        }
    }
    throw Error(ErrorKind::Accuracy, "inverse map Newton did not converge");
}

GreensEvaluation green(const CoefficientMap& map, Complex x, Complex y,
                       const RunConfig& cfg) {
    double scale = image_scale(map);
    if (std::abs(x - y) < 1e-15 * scale)
        throw Error(ErrorKind::Precondition,
                    "Green's function diverges on the diagonal");
    GreensEvaluation out;
    out.x = x;
    out.y = y;
    out.zx = inverse_map(map, x, cfg);
    out.zy = inverse_map(map, y, cfg);
    double num = std::abs(out.zx - out.zy);
    double den = std::abs(1.0 - std::conj(out.zy) * out.zx);
    out.G = -std::log(num / den) / (2.0 * kPi);
    out.R = out.G + std::log(std::abs(x - y)) / (2.0 * kPi);
    return out;
}

double green_normal_derivative(const CoefficientMap& map, double t, Complex zy,
                               const RunConfig& cfg) {
    (void)cfg;
    Complex zt = std::polar(1.0, t);
    Jet j = eval_jet(map, zt);
    double fp = std::abs(j.fp);
    if (fp < 1e-12)
        throw Error(ErrorKind::Precondition,
                    "normal derivative undefined at a boundary cusp");
    double poisson =
        (1.0 - std::norm(zy)) / std::norm(zt - zy);
    return -poisson / (2.0 * kPi * fp);
}

HadamardReport hadamard_check(const std::function<CoefficientMap(double)>& family,
                              double t, Complex x, Complex y,
                              const RunConfig& cfg) {
    const double h = cfg.hadamard_step;
    CoefficientMap f0 = family(t);
    CoefficientMap fm = family(t - h);
    CoefficientMap fp = family(t + h);

    // A cusped boundary has no outward normal; refuse early.
    const int Mb = std::max(cfg.boundary_samples, 1024);
    double min_fp = std::numeric_limits<double>::infinity();
    for (int j = 0; j < Mb; ++j)
        min_fp = std::min(
            min_fp, std::abs(eval_jet(f0, std::polar(1.0, 2.0 * kPi * j / Mb)).fp));
    if (min_fp < 1e-8)
        throw Error(ErrorKind::Precondition,
                    "boundary has a cusp: Hadamard formula needs a normal");

    HadamardReport rep;
    rep.lhs_fd =
        (green(fp, x, y, cfg).G - green(fm, x, y, cfg).G) / (2.0 * h);

    // Velocity of the family at fixed boundary parameter, by the same
    // centered difference in t.
    Complex zx = inverse_map(f0, x, cfg);
    Complex zy = inverse_map(f0, y, cfg);

    const int M = Mb;
    std::vector<double> vals(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        double s = 2.0 * kPi * j / M;
        Complex zs = std::polar(1.0, s);
        Jet jet = eval_jet(f0, zs);
        Complex velocity =
            (eval_jet(fp, zs).f - eval_jet(fm, zs).f) / (2.0 * h);
        // Outward unit normal of the image curve: i tangent rotated -90deg.
        Complex tangent = Complex(0.0, 1.0) * zs * jet.fp;
        Complex normal = -Complex(0.0, 1.0) * tangent / std::abs(tangent);
        double px = (1.0 - std::norm(zx)) / std::norm(zs - zx);
        double py = (1.0 - std::norm(zy)) / std::norm(zs - zy);
        double vn = (velocity * std::conj(normal)).real();
        // dG/dnu at the boundary carries 1/|f'|; two of those against the
        // arclength element |f'| ds leaves a single 1/|f'|.
        vals[static_cast<std::size_t>(j)] =
            px * py * vn / std::abs(jet.fp);
    }
    rep.rhs_integral =
        pairwise_sum(vals) * (2.0 * kPi / M) / (4.0 * kPi * kPi);

    double denom = std::max({std::abs(rep.lhs_fd), std::abs(rep.rhs_integral), 1e-14});
    rep.rel_err = std::abs(rep.lhs_fd - rep.rhs_integral) / denom;
    rep.ok = rep.rel_err < cfg.hadamard_tol;
    return rep;
}

} // namespace domainkind
