#pragma once

#include <cstddef>

namespace domainkind {

// Seed lattice for the damped-Newton critical point search: `radii`
// concentric circles, `angles` equispaced directions on each.
struct SeedGrid {
    int radii = 19;
    int angles = 64;
};

// Numerical knobs shared across the library. The defaults reproduce every
// documented example; tests construct their own copies when they need to
// provoke accuracy failures.
struct RunConfig {
    // Boundary sampling (FFTs, curve scans, quadrature in the angle).
    // Must be a power of two.
    int boundary_samples = 4096;

    // Residual below which a critical point candidate is accepted.
    double newton_tol = 1e-12;

    // How small |a2| must be (relative to |a1|) for a map to count as
    // centered at a critical point of its Robin function.
    double recenter_tol = 1e-8;

    // Half-width of the indeterminate band around D = 0.
    double sign_tol = 1e-6;

    // Number of dyadic refinement levels for the area-route quadrature.
    int quad_levels = 3;

    // Whether classify() also runs the independent area-integral route and
    // compares it against the series value.
    bool cross_check = false;

    SeedGrid seed_grid{};

    // --- secondary knobs (the "advanced" block in a JSON config) ---

    // Agreement required between the two routes for D.
    double cross_check_tol = 1e-4;

    // Relative level-to-level agreement required from the area quadrature.
    double quad_tol = 1e-4;

    // Newton maps with a critical point closer to the unit circle than this
    // are rejected by recenter() as ill conditioned.
    double recenter_margin = 1e-6;

    // Half-width of the band around |z| = 1 inside which a zero of f' counts
    // as a boundary zero (cusp) rather than interior / exterior.
    double boundary_band = 1e-8;

    // |eigenvalue| below which a Hessian eigenvalue is treated as zero.
    double hessian_tol = 1e-7;

    // Critical points closer than this are merged (the one with the larger
    // Robin value survives).
    double cluster_radius = 2e-4;

    // Step for the finite-difference Hessian of the Robin function.
    double hessian_step = 1e-5;

    // Newton target for inverse_map().
    double inverse_tol = 1e-12;

    // Step for the finite-difference side of the Hadamard check.
    double hadamard_step = 1e-4;

    // Relative mismatch above which the Hadamard check reports failure.
    double hadamard_tol = 1e-3;

    // Rays used when integrating over the exterior of the image curve.
    int exterior_rays = 2048;

    // Boundary pre-scan resolution for locating ray/boundary crossings.
    int exterior_scan = 4096;
};

} // namespace domainkind
