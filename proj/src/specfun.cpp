#include "jlx/specfun.hpp"

#include <array>
#include <cmath>

namespace jlx::specfun {

namespace {

constexpr double kHalfLn2Pi = 0.91893853320467274178032973640561764;

// Arguments below this are lifted by the recurrence before the series.
constexpr double kAsymptoticCutoff = 10.0;

// Even Bernoulli numbers B2..B14.
constexpr std::array<double, 7> kBernoulli2k = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};

// B_{2k} / (2k (2k-1)) for the ln Gamma series.
constexpr std::array<double, 7> kLnGammaTail = {
    1.0 / 12.0,  -1.0 / 360.0,        1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0,  1.0 / 156.0};

// B_{2k} / (2k) for the digamma series.
constexpr std::array<double, 7> kDigammaTail = {
    1.0 / 12.0,  -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,   1.0 / 12.0};

constexpr std::array<double, 4> kFactorial = {1.0, 1.0, 2.0, 6.0};

// ln Gamma(y) for y >= 10: Stirling series truncated after the B14 term.
double ln_gamma_asymptotic(double y) {
    const double inv = 1.0 / y;
    const double inv2 = inv * inv;
    double corr = 0.0;
    double t = inv;
    for (double c : kLnGammaTail) {
        corr += c * t;
        t *= inv2;
    }
    return (y - 0.5) * std::log(y) - y + kHalfLn2Pi + corr;
}

double digamma_asymptotic(double y) {
    const double inv = 1.0 / y;
    const double inv2 = inv * inv;
    double corr = 0.0;
    double t = inv2;
    for (double c : kDigammaTail) {
        corr += c * t;
        t *= inv2;
    }
    return std::log(y) - 0.5 * inv - corr;
}

// psi^(m)(y) for y >= 10, m in {1,2,3}:
// (-1)^(m-1) [ (m-1)!/y^m + m!/(2 y^{m+1}) + sum_k B_{2k} (2k+m-1)!/((2k)! y^{2k+m}) ]
double polygamma_asymptotic(int m, double y) {
    const double inv = 1.0 / y;
    const double inv2 = inv * inv;
    double lead = kFactorial[static_cast<std::size_t>(m) - 1] * std::pow(inv, m) +
                  0.5 * kFactorial[static_cast<std::size_t>(m)] * std::pow(inv, m + 1);
    double tail = 0.0;
    double t = std::pow(inv, m + 2);
    for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
        // (2k+m-1)!/(2k)! = product of (2k+1) .. (2k+m-1); empty for m = 1
        double rising = 1.0;
        for (std::size_t j = 2 * k + 1; j + 1 <= 2 * k + static_cast<std::size_t>(m); ++j)
            rising *= static_cast<double>(j);
        tail += kBernoulli2k[k - 1] * rising * t;
        t *= inv2;
    }
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    return sign * (lead + tail);
}

}  // namespace

double ln_gamma(PositiveReal x) {
    double y = x.value();
    double prod = 1.0;
    while (y < kAsymptoticCutoff) {
        prod *= y;
        y += 1.0;
    }
    double r = ln_gamma_asymptotic(y);
    if (prod != 1.0) r -= std::log(prod);
    return r;
}

double digamma(PositiveReal x) {
    double y = x.value();
    double acc = 0.0;
    while (y < kAsymptoticCutoff) {
        acc -= 1.0 / y;
        y += 1.0;
    }
    return digamma_asymptotic(y) + acc;
}

double polygamma(int order, PositiveReal x) {
    if (order < 1 || order > 3)
        throw DomainError("polygamma: order must be 1, 2 or 3");
    double y = x.value();
    // psi^(m)(y) = psi^(m)(y+1) - (-1)^m m! y^{-(m+1)}
    const double step_sign = (order % 2 == 0) ? -1.0 : 1.0;
    const double fact = kFactorial[static_cast<std::size_t>(order)];
    double acc = 0.0;
    while (y < kAsymptoticCutoff) {
        acc += step_sign * fact * std::pow(y, -(order + 1));
        y += 1.0;
    }
    return polygamma_asymptotic(order, y) + acc;
}

}  // namespace jlx::specfun
