#include "domainkind/deformations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "domainkind/errors.hpp"
#include "domainkind/geometry.hpp"

namespace domainkind {

namespace {

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

void require_range(const DeformationFamily& family, double t) {
    const double pad = 1e-12 * (1.0 + std::abs(family.t_max));
    if (t < family.t_min - pad || t > family.t_max + pad)
        throw Error(ErrorKind::Input, "parameter outside the family range");
}

} // namespace

DeformationFamily scaling_path(const CoefficientMap& base, double t_min,
                               double t_max) {
    DeformationFamily fam;
    fam.name = "scaling(" + (base.label.empty() ? "map" : base.label) + ")";
    fam.t_min = t_min;
    fam.t_max = t_max;
    std::vector<Complex> a = base.a;
    fam.at = [a](double t) {
        std::vector<Complex> out(a.size());
        out[0] = t * a[0];
        double p = 1.0; // t^{n-1}
        for (std::size_t n = 1; n < a.size(); ++n) {
            out[n] = a[n] * p;
            p *= t;
        }
        return CoefficientMap(std::move(out));
    };
    fam.coeff_velocity = [a](double t) {
        std::vector<Complex> v(a.size());
        v[0] = a[0];
        for (std::size_t n = 1; n < a.size(); ++n) {
            double nn = static_cast<double>(n);
            v[n] = (n == 1) ? Complex(0.0)
                            : a[n] * (nn - 1.0) * std::pow(t, nn - 2.0);
        }
        return v;
    };
    return fam;
}

DeformationFamily coefficient_path(const CoefficientMap& base, double t_min,
                                   double t_max) {
    if (std::abs(base.coeff(2)) > 1e-12 * std::max(1.0, std::abs(base.coeff(1))))
        throw Error(ErrorKind::Precondition,
                    "coefficient path needs a2 = 0 in the base map");
    DeformationFamily fam;
    fam.name = "coefficients(" + (base.label.empty() ? "map" : base.label) + ")";
    fam.t_min = t_min;
    fam.t_max = t_max;
    std::vector<Complex> a = base.a;
    fam.at = [a](double t) {
        std::vector<Complex> out = a;
        for (std::size_t n = 3; n < out.size(); ++n) out[n] *= t;
        return CoefficientMap(std::move(out));
    };
    fam.coeff_velocity = [a](double) {
        std::vector<Complex> v(a.size(), Complex(0.0));
        for (std::size_t n = 3; n < a.size(); ++n) v[n] = a[n];
        return v;
    };
    return fam;
}

DeformationFamily builtin_family(const std::string& name) {
    DeformationFamily fam;
    fam.name = name;
    if (name == "appendix3") {
        fam.t_min = 0.0;
        fam.t_max = 2.5;
        fam.at = [](double t) {
            return CoefficientMap({0.0, 1.0, 0.0, 2.0 * t / 9.0, 0.0, t / 15.0},
                                  "appendix3");
        };
        fam.coeff_velocity = [](double) {
            return std::vector<Complex>{0.0, 0.0, 0.0, 2.0 / 9.0, 0.0, 1.0 / 15.0};
        };
        return fam;
    }
    if (name == "nonunivalent") {
        fam.t_min = 0.0;
        fam.t_max = 1.0;
        fam.at = [](double t) {
            return CoefficientMap({0.0, 1.0, 0.0, t / 3.0, t / 4.0},
                                  "nonunivalent");
        };
        fam.coeff_velocity = [](double) {
            return std::vector<Complex>{0.0, 0.0, 0.0, 1.0 / 3.0, 1.0 / 4.0};
        };
        return fam;
    }
    if (name == "disk-dilation" || name == "diskdilation") {
        fam.name = "disk-dilation";
        fam.t_min = 0.0;
        fam.t_max = 1.0;
        fam.at = [](double t) {
            return CoefficientMap({0.0, 1.0 + t}, "disk-dilation");
        };
        fam.coeff_velocity = [](double) {
            return std::vector<Complex>{0.0, 1.0};
        };
        return fam;
    }
    throw Error(ErrorKind::Input, "unknown family: " + name);
}

CoefficientMap family_at(const DeformationFamily& family, double t) {
    require_range(family, t);
    return family.at(t);
}

std::vector<Complex> family_velocity(const DeformationFamily& family, double t) {
    require_range(family, t);
    if (!family.coeff_velocity)
        throw Error(ErrorKind::Input, "family has no velocity rule");
    return family.coeff_velocity(t);
}

double d_infty(const CoefficientMap& map, const RunConfig& cfg) {
    const int M = std::max(cfg.boundary_samples, 1024);

    auto refine_max = [&](auto&& value) {
        double best = -std::numeric_limits<double>::infinity();
        double at = 0.0;
        for (int j = 0; j < M; ++j) {
            double t = 2.0 * kPi * j / M;
            double v = value(t);
            if (v > best) {
                best = v;
                at = t;
            }
        }
        double width = 2.0 * kPi / M;
        for (int round = 0; round < 3; ++round) {
            double lo = at - width, hi = at + width;
            for (int k = 0; k <= 32; ++k) {
                double t = lo + (hi - lo) * k / 32.0;
                double v = value(t);
                if (v > best) {
                    best = v;
                    at = t;
                }
            }
            width /= 16.0;
        }
        return best;
    };

    double sup_f = refine_max([&](double t) {
        Complex z = std::polar(1.0, t);
        return std::abs(eval_jet(map, z).f - z);
    });
    double sup_fp = refine_max([&](double t) {
        Complex z = std::polar(1.0, t);
        return std::abs(eval_jet(map, z).fp - 1.0);
    });
    return sup_f + sup_fp;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    if (points < 2 || !(hi > lo))
        throw Error(ErrorKind::Input, "grid needs at least two increasing points");
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
    return g;
}

std::vector<SweepRow> sweep(const DeformationFamily& family,
                            const std::vector<double>& t_grid,
                            SweepChecks checks, const RunConfig& cfg) {
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw Error(ErrorKind::Input, "sweep grid must be strictly increasing");

    std::vector<SweepRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        SweepRow row;
        row.t = t;
        row.D = nan_value();
        row.s_i_margin = nan_value();
        try {
            CoefficientMap map = family_at(family, t);
            row.area = series_area(map);

            if (checks.s_i) {
                try {
                    row.s_i_margin = check_S_I(map, cfg).margin;
                } catch (const Error&) {
                    // margin undefined (a2 != 0); leave NaN
                }
            }

            if (checks.classify || checks.maxima || checks.univalent ||
                checks.starlike) {
                ClassificationResult res = classify(map, cfg);
                row.kind = res.kind;
                row.D = res.D_value;
                row.maxima = res.maxima_count;
                row.univalent = res.univalent;
                row.starlike = res.starlike.starlike;
                if (!res.univalent)
                    row.status = "non-univalent";
                else if (!res.regular_boundary)
                    row.status = "irregular-boundary";
                else
                    row.status = "ok";
            } else {
                row.status = "ok";
            }
        } catch (const Error& e) {
            row.status = std::string("error: ") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double witness_value(const DeformationFamily& family, Witness witness, double t,
                     const RunConfig& cfg) {
    CoefficientMap map = family_at(family, t);
    switch (witness) {
    case Witness::DSign: {
        ClassificationResult res = classify(map, cfg);
        return res.D_value;
    }
    case Witness::StarlikeMargin: {
        ClassificationResult res = classify(map, cfg);
        return res.starlike.min_margin;
    }
    case Witness::BoundarySimplicity: {
        // Smallest gap between non-adjacent boundary segments while the
        // curve is simple; -(number of recorded crossings) once it folds,
        // so the witness changes sign exactly at the first contact.
        UnivalenceReport uni = check_univalent(map, cfg);
        if (!uni.boundary_simple)
            return -static_cast<double>(uni.self_intersections.size());
        const int M = std::min(cfg.boundary_samples, 1024);
        std::vector<Complex> w(static_cast<std::size_t>(M));
        for (int j = 0; j < M; ++j)
            w[static_cast<std::size_t>(j)] =
                eval_jet(map, std::polar(1.0, 2.0 * kPi * j / M)).f;
        double mn = std::numeric_limits<double>::infinity();
        for (int i = 0; i < M; ++i)
            for (int j = i + 2; j < M; ++j) {
                if (i == 0 && j == M - 1) continue;
                mn = std::min(mn, segment_distance(
                                      w[static_cast<std::size_t>(i)],
                                      w[static_cast<std::size_t>((i + 1) % M)],
                                      w[static_cast<std::size_t>(j)],
                                      w[static_cast<std::size_t>((j + 1) % M)]));
            }
        return mn;
    }
    case Witness::MaximaCount: {
        CoefficientMap m = family_at(family, t);
        std::vector<CriticalPoint> pts = find_critical_points(m, cfg);
        return static_cast<double>(count_maxima(pts));
    }
    }
    throw Error(ErrorKind::Input, "unknown witness");
}

BisectResult threshold_bisect(const DeformationFamily& family, Witness witness,
                              double t_lo, double t_hi, double tol,
                              const RunConfig& cfg) {
    if (!(t_hi > t_lo))
        throw Error(ErrorKind::Input, "bracket must satisfy t_lo < t_hi");
    require_range(family, t_lo);
    require_range(family, t_hi);

    double w_lo = witness_value(family, witness, t_lo, cfg);
    double w_hi = witness_value(family, witness, t_hi, cfg);

    const bool count_mode = (witness == Witness::MaximaCount);
    if (count_mode) {
        if (w_lo == w_hi)
            throw Error(ErrorKind::Bracket,
                        "witness count does not change across the bracket");
    } else {
        if (w_lo == 0.0 || w_hi == 0.0) {
            // An exact zero at an endpoint is already the threshold.
        } else if ((w_lo > 0.0) == (w_hi > 0.0)) {
            throw Error(ErrorKind::Bracket,
                        "witness has the same sign at both bracket ends");
        }
    }

    BisectResult res;
    res.lo = t_lo;
    res.hi = t_hi;
    res.witness_lo = w_lo;
    res.witness_hi = w_hi;

    if (!count_mode && w_lo == 0.0) {
        res.t_star = t_lo;
        return res;
    }
    if (!count_mode && w_hi == 0.0) {
        res.t_star = t_hi;
        return res;
    }

    double lo = t_lo, hi = t_hi;
    double vlo = w_lo;
    for (int iter = 0; iter < 200 && (hi - lo) * 0.5 > tol; ++iter) {
        double mid = 0.5 * (lo + hi);
        double vmid = witness_value(family, witness, mid, cfg);
        ++res.iterations;
        bool same_side = count_mode ? (vmid == w_lo)
                                    : (vmid != 0.0 && (vmid > 0.0) == (vlo > 0.0));
        if (!count_mode && vmid == 0.0) {
            res.t_star = mid;
            res.lo = lo;
            res.hi = hi;
            return res;
        }
        if (same_side) {
            lo = mid;
            vlo = vmid;
        } else {
            hi = mid;
        }
    }
    res.lo = lo;
    res.hi = hi;
    res.t_star = 0.5 * (lo + hi);
    return res;
}

} // namespace domainkind
