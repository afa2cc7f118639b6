#pragma once

#include <cmath>
#include <optional>

#include "jlx/errors.hpp"

// Core pipeline around the Gamma-quotient equation
//
//   p * G(n/2 - s/(p-1)) G(s + s/(p-1)) / (G(s/(p-1)) G((n-2s)/2 - s/(p-1)))
//     = G((n+2s)/4)^2 / G((n-2s)/4)^2
//
// for the stability of singular radial solutions of the fractional
// Lane-Emden equation. The substitutions k = 2s/(p-1) and
// k = (n-2s-2)/2 + a*sqrt(n) turn the equation into f_{n,s}(a) = 0 for an
// even function f that is positive at 0 and strictly decreasing on a > 0,
// so everything reduces to one bracketed root a_{n,s}. All Gamma-quotient
// quantities are computed in log space; doubles would overflow near n ~ 700
// otherwise.

namespace jlx::exponents {

// The pair (n, s), n > 2s > 0. Real n is accepted at the library level;
// integrality of n is a CLI-side default only.
struct ProblemParams {
    double n;
    double s;
    ProblemParams(double n_, double s_);
};

// f_{n,s} is defined exactly for |a| < a_max; every ln Gamma argument is
// positive iff a is inside the open interval (-a_max, a_max).
struct ADomain {
    double a_max;
};

enum class Regime { SingleRoot, TwoRoots };

struct ExponentReport {
    double a_ns;
    double k1;
    double k2;
    double p1;
    std::optional<double> p2;  // absent when k1 <= 0 (n <= n0(s)); the infinite branch
    double p_sobolev;          // (n+2s)/(n-2s)
    double hardy;              // Lambda(n, s)
    Regime regime;
};

enum class Stability { Stable, Unstable, Boundary };

// log_margin = ln(p A^{p-1}) - ln Lambda. Positive means the Gamma-quotient
// inequality is strict (instability); the Boundary band is |margin| <= 1e-10.
struct StabilityVerdict {
    Stability state;
    double log_margin;
};

// Boundary tolerance on the log margin: below the end-to-end residual
// guarantee (1e-8), above accumulated kernel rounding.
inline constexpr double kBoundaryTol = 1e-10;

// k1 is treated as <= 0 within this tolerance; at (n, s) = (10, 1) the true
// k1 is exactly zero and the computed value lands within roundoff of it.
inline double k1_zero_tol(double n) { return 1e-9 * (1.0 + std::sqrt(n)); }

// Sharp constant of the generalized Hardy inequality,
// Lambda = Gamma((n+2s)/4)^2 / Gamma((n-2s)/4)^2.
double hardy_constant(const ProblemParams& p);

// A^{p-1} for the singular radial solution amplitude; requires
// p > n/(n-2s), i.e. k = 2s/(p-1) in (0, n-2s).
double singular_amplitude_power(const ProblemParams& p, double exponent);

// Classifies the exponent by the sign of ln(p A^{p-1}) - ln Lambda.
StabilityVerdict stability_gap(const ProblemParams& p, double exponent);

// a_max = (n - 2s + 2) / (2 sqrt(n)).
ADomain a_domain(const ProblemParams& p);

// f_{n,s}(a) as the explicit combination g1 + g2 - g3 - g4 of ln Gamma
// differences. Throws DomainError for |a| >= a_max.
double f_eval(const ProblemParams& p, double a);

// Unique positive root of f_{n,s} in (1/sqrt(n), a_max): bracketed bisection
// with secant acceleration, terminating at bracket width 1e-12 * a_max.
double solve_a(const ProblemParams& p);

struct KRoots {
    double k1;
    double k2;
};

// k = (n-2s-2)/2 -/+ a_{n,s} sqrt(n); k1 < k2, k1 + k2 = n - 2s - 2.
KRoots k_roots(const ProblemParams& p);

// p = 1 + 2s/k, the inverse of k = 2s/(p-1). Returns +infinity for k <= 0
// (the p_JL = infinity branch).
double p_from_k(double s, double k);

// Full report: p1 from k2 always, p2 from k1 iff k1 > 0.
ExponentReport exponent_report(const ProblemParams& p);

// Largest integer n > 2s with k1(n, s) <= 0. Scans upward, declares n0 after
// the condition has failed at 5 consecutive integers, hard-capped at
// ceil((2 + sqrt(2s+6))^2) + 50.
int critical_dimension(double s);

enum class ClosedFormVariant {
    S1,           // s = 1: a = sqrt((n-1)/n)
    S2Paper,      // s = 2 with radicand (n-4)^2 + 4 as printed
    S2Corrected,  // s = 2 with radicand n^2 - 8n + 32
};

// Closed forms for s = 1 and s = 2. The printed s = 2 radicand does not
// reproduce the root; the corrected variant does (the two are kept side by
// side deliberately).
double closed_form_a(const ProblemParams& p, ClosedFormVariant variant);

// Classical piecewise Joseph-Lundgren formulas, s = 1 (Joseph-Lundgren /
// Farina) and s = 2 (Gazzola-Grunau, corrected radicand). Returns +infinity
// on the n <= 10 resp. n <= 12 branch. Requires integer n.
double jl_reference(const ProblemParams& p);

}  // namespace jlx::exponents
