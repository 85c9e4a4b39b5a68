#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace domainkind {

using Complex = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Pairwise (cascade) summation: O(log n) error growth instead of O(n).
double pairwise_sum(const double* data, std::size_t n);
double pairwise_sum(const std::vector<double>& data);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

// In-place radix-2 FFT (forward: sign = -1). data.size() must be a power of two.
void fft_inplace(std::vector<Complex>& data, int sign);

bool is_power_of_two(int n);

// Minimum distance between two closed segments [a0,a1] and [b0,b1] in the
// plane; returns 0 when they intersect.
double segment_distance(Complex a0, Complex a1, Complex b0, Complex b1);

// Strict segment intersection test (shared endpoints do not count).
bool segments_cross(Complex a0, Complex a1, Complex b0, Complex b1);

// Winding number of the closed polyline `pts` (pts[last] connects back to
// pts[0]) around w. Exact for points off the curve.
int winding_number(const std::vector<Complex>& pts, Complex w);

} // namespace domainkind
