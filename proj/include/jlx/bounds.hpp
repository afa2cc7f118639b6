#pragma once

#include <array>
#include <span>
#include <vector>

#include "jlx/exponents.hpp"

// Explicit rational upper/lower bounds on f_{n,s}(a) built from Taylor
// expansions of the ln Gamma differences with polygamma derivative
// estimates, and the threshold dimensions derived from them. The rational
// first-line forms are authoritative here; the expanded closed-form
// polynomials are carried only as cross-check data (their printed
// coefficients are not a uniform rescaling of the rational forms, so root
// sets can differ).

namespace jlx::bounds {

enum class BoundOrder { V1, V2 };

struct BoundPair {
    double lower;
    double upper;
    double f_value;
    BoundOrder order;
};

// Order-2 Taylor bounds (cubic remainder terms). Preconditions: n > 2s + 4,
// n > (a + sqrt(max(a^2 + 2s - 2, 0)))^2, 0 <= a < a_max.
//
// The upper bound holds throughout that region. The lower bounds (both
// orders) degrade near its edges: for a within a few percent of a_max
// (f -> -inf under a finite rational bound), for a beyond roughly n^(1/4),
// and for V1 when n - 2s - 4 is tiny with small a. Enclosure is reliable on
// n >= 2s + 5, 0 <= a <= min(0.8 * a_max, 1.6), which covers the root
// neighborhood the bounds exist to locate.
BoundPair bound_v1(const exponents::ProblemParams& p, double a);

// Order-2 upper / order-3 lower bounds (tighter for large n).
BoundPair bound_v2(const exponents::ProblemParams& p, double a);

enum class ThresholdDirection { UpperA, LowerA };

struct ThresholdReport {
    double eps;
    // (a* + sqrt(max(a*^2 + 2s - 2, 0)))^2 with a* = 1 + eps1 or 1 - eps2;
    // above it every Gamma argument of f at a* is positive.
    double domain_term;
    // Refined location of the last sign change of the scanned bound.
    double poly_term;
    double nbar;  // max(domain_term, poly_term)
    ThresholdDirection direction;
};

// Smallest certified dimension beyond which a_{n,s} < 1 + eps1: integer scan
// of n -> bound_v2(n, s, 1+eps1).upper for its last sign change, refined by
// bisection to width 1e-6, spot-checked against solve_a.
ThresholdReport threshold_upper(double s, double eps1);

// Same for a_{n,s} > 1 - eps2 via bound_v2(...).lower, eps2 in (0, 1).
ThresholdReport threshold_lower(double s, double eps2);

// All real roots of the polynomial (coefficients highest degree first)
// inside [lo, hi], to 1e-9 absolute: sign-change scan on a 10^4-point grid
// plus bisection. Roots closer than the grid resolution may merge.
std::vector<double> real_roots(std::span<const double> coeffs, double lo, double hi);

// Closed-form threshold polynomials, cross-check data only. The quartic is
// in n; the sextic is in t with n = t^2.
std::array<double, 5> threshold_upper_poly_coeffs(double s, double eps1);
std::array<double, 7> threshold_lower_poly_coeffs(double s, double eps2);

}  // namespace jlx::bounds
