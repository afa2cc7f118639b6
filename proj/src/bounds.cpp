#include "jlx/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jlx::bounds {

using exponents::ProblemParams;

namespace {

void check_preconditions(const ProblemParams& p, double a) {
    if (!(p.n > 2.0 * p.s + 4.0))
        throw DomainError("bounds: require n > 2s + 4");
    if (!(a >= 0.0)) throw DomainError("bounds: require a >= 0");
    const double offset = std::sqrt(std::max(a * a + 2.0 * p.s - 2.0, 0.0));
    if (!(p.n > (a + offset) * (a + offset)))
        throw DomainError("bounds: require n > (a + sqrt(max(a^2+2s-2,0)))^2");
    if (!(a < exponents::a_domain(p).a_max))
        throw DomainError("bounds: require a < a_max");
}

struct Pieces {
    double q;   // n/4 - s/2 - 1
    double big; // n/4 + s/2
    double h;   // a sqrt(n) / 2
    double c2;  // 1/4 + a^2 n / 4, quadratic Taylor weight
};

Pieces pieces(const ProblemParams& p, double a) {
    Pieces w;
    w.q = p.n / 4.0 - p.s / 2.0 - 1.0;
    w.big = p.n / 4.0 + p.s / 2.0;
    w.h = 0.5 * a * std::sqrt(p.n);
    w.c2 = 0.25 + 0.25 * a * a * p.n;
    return w;
}

double upper_v1(const ProblemParams& p, double a) {
    const Pieces w = pieces(p, a);
    const double cube = (w.h + 0.5) * (w.h + 0.5) * (w.h + 0.5);
    return p.s * (1.0 / w.q - w.c2 / (w.big * w.big) + cube / (3.0 * w.q * w.q * w.q));
}

double lower_v1(const ProblemParams& p, double a) {
    const Pieces w = pieces(p, a);
    const double cube = (w.h - 0.5) * (w.h - 0.5) * (w.h - 0.5);
    return p.s * (1.0 / w.big - w.c2 / (w.q * w.q) - cube / (3.0 * w.q * w.q * w.q));
}

double upper_v2(const ProblemParams& p, double a) {
    const Pieces w = pieces(p, a);
    const double c3 = 1.0 / 24.0 + a * a * p.n / 8.0;  // cubic Taylor weight
    return p.s * (1.0 / w.q - w.c2 / (w.big * w.big) + 2.0 * c3 / (w.q * w.q * w.q));
}

double lower_v2(const ProblemParams& p, double a) {
    const Pieces w = pieces(p, a);
    const double c3 = 1.0 / 24.0 + a * a * p.n / 8.0;
    const double a2n = a * a * p.n;
    const double c4 = 1.0 / 192.0 + a2n * a2n / 192.0 + a2n / 32.0;  // quartic weight
    const double q2 = w.q * w.q;
    const double big3 = w.big * w.big * w.big;
    return p.s * (1.0 / w.big - w.c2 / q2 + 2.0 * c3 / big3 - 6.0 * c4 / (q2 * q2));
}

// Shared scan machinery: find the last integer in [start, cap] where
// `wrong_sign(bound(n))` holds, then refine the crossing to width 1e-6.
template <typename Bound, typename WrongSign>
double last_sign_change(double start_real, double cap, Bound bound, WrongSign wrong_sign,
                        const char* what) {
    const int first = static_cast<int>(std::floor(start_real)) + 1;
    const int last = static_cast<int>(std::floor(cap));
    int last_wrong = -1;
    for (int n = first; n <= last; ++n) {
        if (wrong_sign(bound(static_cast<double>(n)))) last_wrong = n;
    }
    if (last_wrong == last)
        throw CapError(std::string(what) + ": no final sign change below the scan cap");
    if (last_wrong < 0) return start_real;  // already past the crossing at scan start
    double lo = static_cast<double>(last_wrong);
    double hi = static_cast<double>(last_wrong) + 1.0;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (wrong_sign(bound(mid)))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double domain_term(double s, double a_star) {
    const double offset = std::sqrt(std::max(a_star * a_star + 2.0 * s - 2.0, 0.0));
    return (a_star + offset) * (a_star + offset);
}

void spot_check(double s, double nbar, bool upper, double a_star, const char* what) {
    for (int bump : {1, 10, 100}) {
        const double n = std::floor(nbar) + bump;
        const double a = exponents::solve_a(ProblemParams(n, s));
        const bool ok = upper ? (a < a_star) : (a > a_star);
        if (!ok)
            throw NumericalError(std::string(what) + ": spot check failed at n=" +
                                 std::to_string(n));
    }
}

}  // namespace

BoundPair bound_v1(const ProblemParams& p, double a) {
    check_preconditions(p, a);
    return {lower_v1(p, a), upper_v1(p, a), exponents::f_eval(p, a), BoundOrder::V1};
}

BoundPair bound_v2(const ProblemParams& p, double a) {
    check_preconditions(p, a);
    return {lower_v2(p, a), upper_v2(p, a), exponents::f_eval(p, a), BoundOrder::V2};
}

ThresholdReport threshold_upper(double s, double eps1) {
    if (!(s > 0.0)) throw DomainError("threshold_upper: require s > 0");
    if (!(eps1 > 0.0)) throw DomainError("threshold_upper: require eps1 > 0");
    const double a_star = 1.0 + eps1;
    const double dom = domain_term(s, a_star);
    const double start = std::max(2.0 * s + 4.0, dom);
    const double cap = 10.0 * (dom + 100.0);
    const double poly = last_sign_change(
        start, cap, [&](double n) { return upper_v2(ProblemParams(n, s), a_star); },
        [](double v) { return v >= 0.0; }, "threshold_upper");
    ThresholdReport r{eps1, dom, poly, std::max(dom, poly), ThresholdDirection::UpperA};
    spot_check(s, r.nbar, /*upper=*/true, a_star, "threshold_upper");
    return r;
}

ThresholdReport threshold_lower(double s, double eps2) {
    if (!(s > 0.0)) throw DomainError("threshold_lower: require s > 0");
    if (!(eps2 > 0.0 && eps2 < 1.0)) throw DomainError("threshold_lower: require 0 < eps2 < 1");
    const double a_star = 1.0 - eps2;
    const double dom = domain_term(s, a_star);
    const double start = std::max(2.0 * s + 4.0, dom);
    const double cap = 10.0 * (dom + 100.0);
    const double poly = last_sign_change(
        start, cap, [&](double n) { return lower_v2(ProblemParams(n, s), a_star); },
        [](double v) { return v <= 0.0; }, "threshold_lower");
    ThresholdReport r{eps2, dom, poly, std::max(dom, poly), ThresholdDirection::LowerA};
    spot_check(s, r.nbar, /*upper=*/false, a_star, "threshold_lower");
    return r;
}

std::vector<double> real_roots(std::span<const double> coeffs, double lo, double hi) {
    if (coeffs.empty() || coeffs.front() == 0.0)
        throw DomainError("real_roots: need a nonzero leading coefficient");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw DomainError("real_roots: need a finite interval lo < hi");

    const auto eval = [&](double x) {
        double acc = 0.0;
        for (double c : coeffs) acc = acc * x + c;
        return acc;
    };

    constexpr int kGrid = 10000;
    std::vector<double> roots;
    double x_prev = lo;
    double f_prev = eval(lo);
    for (int i = 1; i <= kGrid; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / kGrid;
        const double f = eval(x);
        if (f_prev == 0.0) {
            roots.push_back(x_prev);
        } else if (f != 0.0 && std::signbit(f) != std::signbit(f_prev)) {
            double a = x_prev, b = x, fa = f_prev;
            while (b - a > 1e-10) {
                const double m = 0.5 * (a + b);
                const double fm = eval(m);
                if (fm == 0.0) {
                    a = b = m;
                } else if (std::signbit(fm) == std::signbit(fa)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        x_prev = x;
        f_prev = f;
    }
    if (f_prev == 0.0) roots.push_back(x_prev);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                roots.end());
    return roots;
}

std::array<double, 5> threshold_upper_poly_coeffs(double s, double eps1) {
    const double a2 = (1.0 + eps1) * (1.0 + eps1);
    return {
        -(eps1 * eps1 + 2.0 * eps1),
        -27.0 + (18.0 * s + 48.0) * a2,
        (-36.0 * s * s - 96.0 * s - 144.0) * a2 - 24.0 * s * s - 30.0 * s + 88.0,
        (24.0 * s * s * s + 192.0 * s * s + 288.0 * s + 192.0) * a2 + 60.0 * s * s +
            64.0 * s - 144.0,
        48.0 * s * s * s * s + 216.0 * s * s * s + 352.0 * s * s + 288.0 * s + 192.0,
    };
}

std::array<double, 7> threshold_lower_poly_coeffs(double s, double eps2) {
    const double b = 1.0 - eps2;
    const double b2 = b * b;
    const double b3 = b2 * b;
    return {
        eps2 * eps2 + 2.0 * eps2,
        -2.0 * b3,
        18.0 * b2 - 18.0 * s - 39.0,
        -4.0 * b3 * s - 6.0 * b,
        (12.0 * s * s + 36.0 * s) * b2 + 36.0 * s * s + 144.0 * s + 158.0,
        -12.0 * b * s,
        -24.0 * s * s * s - 132.0 * s * s - 260.0 * s - 192.0,
    };
}

}  // namespace jlx::bounds
