// Acceptance gate for the domain-kind toolkit. Each criterion prints exactly
// one [PASS]/[FAIL] line (with indented notes on failure); the exit code is
// the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "domainkind/classifier.hpp"
#include "domainkind/deformations.hpp"
#include "domainkind/errors.hpp"
#include "domainkind/geometry.hpp"
#include "domainkind/greens.hpp"
#include "domainkind/robin.hpp"
#include "domainkind/series.hpp"

using namespace domainkind;

namespace {

std::string strf(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return std::string(buf);
}

struct Criterion {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

int g_failures = 0;

using Body = std::function<void(Criterion&)>;

void run_criterion(int index, const char* title, const Body& body) {
    Criterion c;
    try {
        body(c);
    } catch (const Error& e) {
        c.ok = false;
        c.notes.push_back(strf("unexpected %s error: %s",
                               to_string(e.kind()), e.what()));
    } catch (const std::exception& e) {
        c.ok = false;
        c.notes.push_back(strf("unexpected error: %s", e.what()));
    }
    std::printf("[%s] criterion %d: %s\n", c.ok ? "PASS" : "FAIL", index, title);
    const std::size_t cap = 6;
    for (std::size_t i = 0; i < c.notes.size() && i < cap; ++i)
        std::printf("       - %s\n", c.notes[i].c_str());
    if (c.notes.size() > cap)
        std::printf("       - (+%zu more)\n", c.notes.size() - cap);
    if (!c.ok) ++g_failures;
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

CoefficientMap disk_map() { return CoefficientMap({0.0, 1.0}, "disk"); }

CoefficientMap f3_map() {
    return CoefficientMap({0.0, 1.0, 0.0, 1.0 / 3.0}, "f3");
}

CoefficientMap appendix3_map(double t) {
    return CoefficientMap({0.0, 1.0, 0.0, 2.0 * t / 9.0, 0.0, t / 15.0},
                          "appendix3");
}

CoefficientMap nonuni_map(double t) {
    return CoefficientMap({0.0, 1.0, 0.0, t / 3.0, t / 4.0}, "nonunivalent");
}

// Twenty deterministic pseudo-random maps of degree <= 6 with a2 = 0 and the
// coefficient tail rescaled so that sum_{n>=3} n |a_n| < |a1|.
std::vector<CoefficientMap> random_sector_maps() {
    std::mt19937 rng(20240814);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<CoefficientMap> maps;
    for (int i = 0; i < 20; ++i) {
        int degree = 3 + i % 4;
        std::vector<Complex> a(static_cast<std::size_t>(degree) + 1,
                               Complex(0.0));
        a[1] = 1.0;
        double weight = 0.0;
        for (int n = 3; n <= degree; ++n) {
            double r = 0.2 + 0.8 * u01(rng);
            double phi = 2.0 * kPi * u01(rng);
            a[static_cast<std::size_t>(n)] = std::polar(r, phi);
            weight += n * r;
        }
        double margin = 0.2 + 0.6 * u01(rng);
        double factor = (1.0 - margin) / weight;
        for (int n = 3; n <= degree; ++n)
            a[static_cast<std::size_t>(n)] *= factor;
        maps.emplace_back(std::move(a), strf("random-%02d", i));
    }
    return maps;
}

} // namespace

int main() {
    RunConfig cfg;

    run_criterion(1, "disk exactness", [&](Criterion& c) {
        auto t0 = std::chrono::steady_clock::now();
        CoefficientMap m = disk_map();
        c.require(D_series(m) == -1.0, "D of the unit disk is not exactly -1");
        ClassificationResult res = classify(m, cfg);
        c.require(res.kind == DomainKind::FirstKind,
                  strf("verdict %s, expected FirstKind", to_string(res.kind)));
        c.require(res.D_value == -1.0,
                  strf("pipeline D = %.17g, expected -1 exactly", res.D_value));
        double a = A_integral(m, cfg);
        c.require(std::abs(a + 1.0) < 1e-6,
                  strf("A integral %.12g, expected -1 within 1e-6", a));
        c.require(res.critical_points.size() == 1,
                  strf("%zu critical points, expected 1",
                       res.critical_points.size()));
        if (!res.critical_points.empty())
            c.require(res.critical_points[0].newton_residual < 1e-10,
                      strf("gradient residual %.3g >= 1e-10",
                           res.critical_points[0].newton_residual));
        double dt = seconds_since(t0);
        c.require(dt < 1.0, strf("runtime %.2f s exceeds 1 s", dt));
    });

    run_criterion(2, "cubic boundary case", [&](Criterion& c) {
        CoefficientMap m = f3_map();
        double d = D_series(m);
        c.require(std::abs(d) <= 1e-12, strf("|D| = %.3g > 1e-12", d));
        double tail_weight = 3.0 * std::abs(m.coeff(3));
        c.require(tail_weight == 1.0,
                  strf("sum n |a_n| = %.17g, expected exactly 1", tail_weight));
        c.require(check_S_I(m).margin == 0.0, "sector margin is not exactly 0");
        BoundaryRegularity reg = boundary_regularity(m, cfg);
        c.require(reg.boundary_zeros.size() == 2,
                  strf("%zu boundary derivative zeros, expected 2",
                       reg.boundary_zeros.size()));
        const Complex plus_i(0.0, 1.0);
        const Complex cusp_image(0.0, 2.0 / 3.0);
        for (Complex z : reg.boundary_zeros) {
            double dz = std::min(std::abs(z - plus_i), std::abs(z + plus_i));
            c.require(dz < 1e-6,
                      strf("derivative zero %.6g%+.6gi is %.3g from +/-i",
                           z.real(), z.imag(), dz));
            Complex w = eval(m, z);
            double dw = std::min(std::abs(w - cusp_image),
                                 std::abs(w + cusp_image));
            c.require(dw < 1e-6,
                      strf("cusp image %.6g%+.6gi is %.3g from +/-(2/3)i",
                           w.real(), w.imag(), dw));
        }
        ClassificationResult res = classify(m, cfg);
        c.require(res.kind == DomainKind::BoundaryCase,
                  strf("verdict %s, expected BoundaryCase",
                       to_string(res.kind)));
        c.require(!res.regular_boundary, "boundary reported regular");
    });

    run_criterion(3, "appendix3 family reproduction", [&](Criterion& c) {
        for (double t : {0.5, 1.0, 2.0}) {
            double d = D_series(appendix3_map(t));
            double expect = 13.0 * t * t / 27.0 - 1.0;
            c.require(std::abs(d - expect) <= 1e-12,
                      strf("D(%.1f) = %.17g, closed form %.17g", t, d, expect));
        }
        for (double t : {0.5, 1.0}) {
            CoefficientMap m = appendix3_map(t);
            double d = D_series(m);
            double a1 = std::abs(m.coeff(1));
            double a = A_integral(m, cfg);
            c.require(std::abs(d - a1 * a) < 1e-4,
                      strf("|D - a1 A| = %.3g at t = %.1f",
                           std::abs(d - a1 * a), t));
        }
        DeformationFamily fam = builtin_family("appendix3");
        BisectResult b = threshold_bisect(fam, Witness::DSign, 1.0, 2.0, 1e-8,
                                          cfg);
        c.require(std::abs(b.t_star - 1.44115343) <= 1e-6,
                  strf("D zero crossing at %.9f, expected 1.44115343 +- 1e-6",
                       b.t_star));
        ClassificationResult r12 = classify(appendix3_map(1.2), cfg);
        c.require(r12.kind == DomainKind::FirstKind,
                  strf("t = 1.2 verdict %s", to_string(r12.kind)));
        ClassificationResult r15 = classify(appendix3_map(1.5), cfg);
        c.require(r15.kind == DomainKind::SecondKind,
                  strf("t = 1.5 verdict %s", to_string(r15.kind)));
        c.require(r15.maxima_count == 1,
                  strf("t = 1.5 has %d maxima, expected 1", r15.maxima_count));
        c.require(r15.starlike.starlike, "t = 1.5 image reported not starlike");
        ClassificationResult r24 = classify(appendix3_map(2.4), cfg);
        c.require(r24.maxima_count == 2,
                  strf("t = 2.4 has %d maxima, expected 2", r24.maxima_count));
        ClassificationResult r25 = classify(appendix3_map(2.5), cfg);
        c.require(!r25.starlike.starlike, "t = 2.5 image reported starlike");
        auto t0 = std::chrono::steady_clock::now();
        std::vector<SweepRow> rows =
            sweep(fam, uniform_grid(fam.t_min, fam.t_max, 26), SweepChecks{},
                  cfg);
        double dt = seconds_since(t0);
        c.require(rows.size() == 26,
                  strf("sweep produced %zu rows, expected 26", rows.size()));
        c.require(dt < 60.0, strf("26-point sweep took %.1f s (budget 60 s)",
                                  dt));
    });

    run_criterion(4, "non-univalence detection", [&](Criterion& c) {
        c.require(check_univalent(nonuni_map(0.5), cfg).univalent,
                  "t = 0.5 flagged non-univalent");
        for (double t : {0.70, 0.75, 0.80}) {
            c.require(!check_univalent(nonuni_map(t), cfg).univalent,
                      strf("t = %.2f not flagged non-univalent", t));
        }
        double d = D_series(nonuni_map(0.8));
        double expect = 1.5 * 0.8 * 0.8 - 1.0;
        c.require(std::abs(d - expect) <= 1e-12,
                  strf("D(0.8) = %.17g, closed form %.17g", d, expect));
        c.require(d < 0.0, strf("D(0.8) = %.6g is not negative", d));
    });

    run_criterion(5, "scaling path stays first kind with small steps",
                  [&](Criterion& c) {
        std::vector<CoefficientMap> bases;
        bases.push_back(f3_map());
        bases.push_back(appendix3_map(1.2));
        std::vector<double> grid = uniform_grid(0.0, 1.0, 21);
        for (const CoefficientMap& base : bases) {
            DeformationFamily fam = scaling_path(base);
            double prev = 0.0;
            bool have_prev = false;
            for (double t : grid) {
                CoefficientMap m = family_at(fam, t);
                ClassificationResult res = classify(m, cfg);
                bool first_or_boundary = res.kind == DomainKind::FirstKind ||
                                         res.kind == DomainKind::BoundaryCase;
                c.require(first_or_boundary,
                          strf("%s path at t = %.2f classifies %s",
                               base.label.c_str(), t, to_string(res.kind)));
                if (t <= 0.99) {
                    double fp = boundary_regularity(m, cfg).min_abs_fprime;
                    c.require(fp > 0.0,
                              strf("%s path at t = %.2f has min |f'| = %.3g",
                                   base.label.c_str(), t, fp));
                }
                double d = d_infty(m, cfg);
                if (have_prev) {
                    c.require(std::abs(d - prev) < 0.05,
                              strf("%s path d_infty step %.4f at t = %.2f "
                                   "(budget 0.05)",
                                   base.label.c_str(), std::abs(d - prev), t));
                }
                prev = d;
                have_prev = true;
            }
        }
    });

    std::vector<CoefficientMap> suite = random_sector_maps();
    std::vector<ClassificationResult> suite_results;
    suite_results.reserve(suite.size());

    run_criterion(6, "recentering and verdict invariance", [&](Criterion& c) {
        for (const CoefficientMap& m : suite) {
            ClassificationResult res = classify(m, cfg);
            double a2 = std::abs(res.normalized.map.coeff(2));
            c.require(a2 < 1e-8,
                      strf("%s recentered |a2| = %.3g", m.label.c_str(), a2));
            for (double angle : {0.9, 2.2}) {
                ClassificationResult r = classify(rotate(m, angle), cfg);
                c.require(r.kind == res.kind,
                          strf("%s verdict changes under rotation by %.1f",
                               m.label.c_str(), angle));
            }
            for (double delta : {0.5, 2.0, 10.0}) {
                ClassificationResult r = classify(scale(m, delta), cfg);
                c.require(r.kind == res.kind,
                          strf("%s verdict changes under dilation by %.1f",
                               m.label.c_str(), delta));
            }
            suite_results.push_back(std::move(res));
        }
    });

    run_criterion(7, "sector condition implies first kind", [&](Criterion& c) {
        c.require(suite_results.size() == suite.size(),
                  "classification suite incomplete");
        for (std::size_t i = 0; i < suite_results.size(); ++i) {
            const CoefficientMap& m = suite[i];
            SICondition sector = check_S_I(m, cfg);
            c.require(sector.status == SIStatus::Interior,
                      strf("%s is not in the open sector (margin %.3g)",
                           m.label.c_str(), sector.margin));
            const ClassificationResult& res = suite_results[i];
            c.require(res.kind == DomainKind::FirstKind,
                      strf("%s classifies %s, expected FirstKind",
                           m.label.c_str(), to_string(res.kind)));
            c.require(res.D_value < 0.0,
                      strf("%s has D = %.6g, expected negative",
                           m.label.c_str(), res.D_value));
            c.require(res.starlike.starlike,
                      strf("%s image reported not starlike", m.label.c_str()));
        }
    });

    run_criterion(8, "green function and boundary variation", [&](Criterion& c) {
        auto t0 = std::chrono::steady_clock::now();
        CoefficientMap m = appendix3_map(0.8);
        std::mt19937 rng(4242);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        double worst = 0.0;
        for (int k = 0; k < 50; ++k) {
            Complex zx = std::polar(0.85 * u01(rng), 2.0 * kPi * u01(rng));
            Complex zy = std::polar(0.85 * u01(rng), 2.0 * kPi * u01(rng));
            if (std::abs(zx - zy) < 1e-3) continue;
            Complex x = eval(m, zx);
            Complex y = eval(m, zy);
            double gap = std::abs(green(m, x, y, cfg).G -
                                  green(m, y, x, cfg).G);
            worst = std::max(worst, gap);
        }
        c.require(worst < 1e-10,
                  strf("worst symmetry gap %.3g over 50 pairs", worst));
        CoefficientMap d = disk_map();
        double worst_r = 0.0;
        for (int k = 1; k <= 20; ++k) {
            Complex x = std::polar(0.045 * k, 0.37 * k);
            worst_r = std::max(worst_r,
                               std::abs(green(d, x, Complex(0.0), cfg).R));
        }
        c.require(worst_r < 1e-12,
                  strf("disk regular part |R(x,0)| up to %.3g", worst_r));
        double dt = seconds_since(t0);
        c.require(dt < 10.0, strf("green checks took %.1f s (budget 10 s)", dt));

        t0 = std::chrono::steady_clock::now();
        DeformationFamily dil = builtin_family("disk-dilation");
        HadamardReport h1 = hadamard_check(dil.at, 0.5, Complex(0.2),
                                           Complex(-0.3), cfg);
        c.require(h1.rel_err < 1e-3,
                  strf("dilation variational mismatch %.3g", h1.rel_err));
        dt = seconds_since(t0);
        c.require(dt < 10.0,
                  strf("dilation variational check took %.1f s (budget 10 s)",
                       dt));

        t0 = std::chrono::steady_clock::now();
        DeformationFamily app = builtin_family("appendix3");
        HadamardReport h2 = hadamard_check(app.at, 0.5, Complex(0.1),
                                           Complex(0.0, 0.2), cfg);
        c.require(h2.rel_err < 1e-3,
                  strf("appendix3 variational mismatch %.3g", h2.rel_err));
        dt = seconds_since(t0);
        c.require(dt < 10.0,
                  strf("appendix3 variational check took %.1f s (budget 10 s)",
                       dt));
    });

    run_criterion(9, "area identity on builtin maps", [&](Criterion& c) {
        std::vector<CoefficientMap> maps;
        maps.push_back(disk_map());
        maps.push_back(f3_map());
        for (double t : {0.5, 1.2, 2.4}) maps.push_back(appendix3_map(t));
        for (double t : {0.5, 0.8}) maps.push_back(nonuni_map(t));
        maps.push_back(CoefficientMap({0.0, 1.5}, "disk-dilation"));
        for (const CoefficientMap& m : maps) {
            double s = series_area(m);
            double b = boundary_area(m);
            c.require(std::abs(s - b) <= 1e-6,
                      strf("%s series area %.12g vs boundary %.12g",
                           m.label.c_str(), s, b));
        }
    });

    std::printf("%d of 9 criteria passed.\n", 9 - g_failures);
    return g_failures;
}
