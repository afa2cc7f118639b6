#include "jlx/exponents.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jlx/specfun.hpp"

namespace jlx::exponents {

namespace {

double lg(double x) { return specfun::ln_gamma(specfun::PositiveReal(x)); }

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative bracket width at which the root solve stops.
constexpr double kBracketTol = 1e-12;

// First trial for the negative endpoint sits this far inside a_max.
constexpr double kEdgeBackoff = 1e-3;

}  // namespace

ProblemParams::ProblemParams(double n_, double s_) : n(n_), s(s_) {
    if (!std::isfinite(n) || !std::isfinite(s))
        throw DomainError("ProblemParams: n and s must be finite");
    if (!(s > 0.0)) throw DomainError("ProblemParams: require s > 0");
    if (!(n > 2.0 * s)) throw DomainError("ProblemParams: require n > 2s");
}

double hardy_constant(const ProblemParams& p) {
    return std::exp(2.0 * (lg((p.n + 2.0 * p.s) / 4.0) - lg((p.n - 2.0 * p.s) / 4.0)));
}

double singular_amplitude_power(const ProblemParams& p, double exponent) {
    if (!(exponent > p.n / (p.n - 2.0 * p.s)))
        throw DomainError("singular_amplitude_power: require p > n/(n-2s)");
    const double half_k = p.s / (exponent - 1.0);
    // arguments: n/2 - k/2, s + k/2, k/2, (n-2s)/2 - k/2 -- all positive here
    return std::exp(lg(p.n / 2.0 - half_k) + lg(p.s + half_k) - lg(half_k) -
                    lg((p.n - 2.0 * p.s) / 2.0 - half_k));
}

StabilityVerdict stability_gap(const ProblemParams& p, double exponent) {
    if (!(exponent > p.n / (p.n - 2.0 * p.s)))
        throw DomainError("stability_gap: require p > n/(n-2s)");
    const double half_k = p.s / (exponent - 1.0);
    const double ln_amp = lg(p.n / 2.0 - half_k) + lg(p.s + half_k) - lg(half_k) -
                          lg((p.n - 2.0 * p.s) / 2.0 - half_k);
    const double ln_hardy =
        2.0 * (lg((p.n + 2.0 * p.s) / 4.0) - lg((p.n - 2.0 * p.s) / 4.0));
    const double margin = std::log(exponent) + ln_amp - ln_hardy;
    Stability state = Stability::Boundary;
    if (margin > kBoundaryTol)
        state = Stability::Unstable;
    else if (margin < -kBoundaryTol)
        state = Stability::Stable;
    return {state, margin};
}

ADomain a_domain(const ProblemParams& p) {
    return {(p.n - 2.0 * p.s + 2.0) / (2.0 * std::sqrt(p.n))};
}

double f_eval(const ProblemParams& p, double a) {
    const double am = a_domain(p).a_max;
    if (!(std::abs(a) < am)) throw DomainError("f_eval: require |a| < a_max");
    const double plus = p.n / 4.0 + p.s / 2.0;
    const double minus = p.n / 4.0 - p.s / 2.0;
    const double h = 0.5 * a * std::sqrt(p.n);
    const double g1 = lg(plus + 0.5 + h) - lg(plus);
    const double g2 = lg(plus + 0.5 - h) - lg(plus);
    const double g3 = lg(minus + 0.5 + h) - lg(minus);
    const double g4 = lg(minus + 0.5 - h) - lg(minus);
    // grouped so that a -> -a swaps the two addends: evenness is bit-exact
    return (g1 - g3) + (g2 - g4);
}

double solve_a(const ProblemParams& p) {
    const double am = a_domain(p).a_max;
    double lo = 1.0 / std::sqrt(p.n);
    double flo = f_eval(p, lo);
    if (!(flo > 0.0))
        throw BracketError("solve_a: f(1/sqrt(n)) not positive at n=" + std::to_string(p.n) +
                           " s=" + std::to_string(p.s));

    // Push the upper endpoint toward a_max until f goes negative. f tends to
    // -inf at a_max, so this terminates almost immediately.
    double hi = am * (1.0 - kEdgeBackoff);
    double fhi = f_eval(p, hi);
    while (fhi >= 0.0) {
        const double gap = am - hi;
        if (gap < 1e-14 * am)
            throw BracketError("solve_a: no sign change below a_max");
        hi = am - 0.5 * gap;
        fhi = f_eval(p, hi);
    }

    // Bisection with a secant step every other iteration; f is strictly
    // decreasing on the bracket so sign updates are safe either way.
    const double width_tol = kBracketTol * am;
    bool use_secant = false;
    while (hi - lo > width_tol) {
        double mid;
        if (use_secant && fhi != flo) {
            mid = lo + (hi - lo) * flo / (flo - fhi);
            const double margin = 0.01 * (hi - lo);
            if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
        } else {
            mid = 0.5 * (lo + hi);
        }
        use_secant = !use_secant;
        const double fm = f_eval(p, mid);
        if (fm > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    // Endpoint with the smaller residual.
    return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

KRoots k_roots(const ProblemParams& p) {
    const double a = solve_a(p);
    const double c = 0.5 * (p.n - 2.0 * p.s - 2.0);
    const double d = a * std::sqrt(p.n);
    return {c - d, c + d};
}

double p_from_k(double s, double k) {
    if (!(k > 0.0)) return kInf;
    return 1.0 + 2.0 * s / k;
}

ExponentReport exponent_report(const ProblemParams& p) {
    const double a = solve_a(p);
    const double c = 0.5 * (p.n - 2.0 * p.s - 2.0);
    const double d = a * std::sqrt(p.n);
    ExponentReport r;
    r.a_ns = a;
    r.k1 = c - d;
    r.k2 = c + d;
    r.p1 = p_from_k(p.s, r.k2);
    const bool two_roots = r.k1 > k1_zero_tol(p.n);
    if (two_roots) r.p2 = p_from_k(p.s, r.k1);
    r.regime = two_roots ? Regime::TwoRoots : Regime::SingleRoot;
    r.p_sobolev = (p.n + 2.0 * p.s) / (p.n - 2.0 * p.s);
    r.hardy = hardy_constant(p);
    return r;
}

int critical_dimension(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("critical_dimension: require s > 0");
    const double cap_real = std::pow(2.0 + std::sqrt(2.0 * s + 6.0), 2.0);
    const int cap = static_cast<int>(std::ceil(cap_real)) + 50;
    int n = static_cast<int>(std::floor(2.0 * s)) + 1;
    if (!(static_cast<double>(n) > 2.0 * s)) ++n;
    int last_good = -1;
    int consecutive_failures = 0;
    for (; n <= cap; ++n) {
        const ProblemParams p(static_cast<double>(n), s);
        const double k1 = k_roots(p).k1;
        if (k1 <= k1_zero_tol(p.n)) {
            last_good = n;
            consecutive_failures = 0;
        } else if (++consecutive_failures >= 5) {
            return last_good;
        }
    }
    throw CapError("critical_dimension: scan exceeded hard cap at s=" + std::to_string(s));
}

double closed_form_a(const ProblemParams& p, ClosedFormVariant variant) {
    const double n = p.n;
    switch (variant) {
        case ClosedFormVariant::S1:
            if (p.s != 1.0) throw DomainError("closed_form_a: S1 requires s = 1");
            return std::sqrt((n - 1.0) / n);
        case ClosedFormVariant::S2Paper:
        case ClosedFormVariant::S2Corrected: {
            if (p.s != 2.0) throw DomainError("closed_form_a: S2 variants require s = 2");
            const double radicand = variant == ClosedFormVariant::S2Paper
                                        ? (n - 4.0) * (n - 4.0) + 4.0
                                        : n * n - 8.0 * n + 32.0;
            const double root = std::sqrt(radicand);
            return std::sqrt(2.0 * (n - 1.0) * (n * n - 2.0 * n - 2.0) /
                             (n * (n * n + 4.0 + n * root)));
        }
    }
    throw DomainError("closed_form_a: unknown variant");
}

double jl_reference(const ProblemParams& p) {
    const double n = p.n;
    if (n != std::floor(n)) throw DomainError("jl_reference: require integer n");
    if (p.s == 1.0) {
        if (n <= 10.0) return kInf;
        return ((n - 2.0) * (n - 2.0) - 4.0 * n + 8.0 * std::sqrt(n - 1.0)) /
               ((n - 2.0) * (n - 10.0));
    }
    if (p.s == 2.0) {
        if (n <= 12.0) return kInf;
        const double inner = std::sqrt(n * n - 8.0 * n + 32.0);
        const double x = std::sqrt(n * n + 4.0 - n * inner);
        return (n + 2.0 - x) / (n - 6.0 - x);
    }
    throw DomainError("jl_reference: defined for s = 1 and s = 2 only");
}

}  // namespace jlx::exponents
