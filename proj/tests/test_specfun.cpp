#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jlx/specfun.hpp"

using jlx::DomainError;
using jlx::specfun::digamma;
using jlx::specfun::ln_gamma;
using jlx::specfun::polygamma;
using jlx::specfun::PositiveReal;

namespace {

double lg(double x) { return ln_gamma(PositiveReal(x)); }
double psi(double x) { return digamma(PositiveReal(x)); }
double psi_m(int m, double x) { return polygamma(m, PositiveReal(x)); }

bool rel_close(double actual, double expected, double tol) {
    return std::abs(actual - expected) <= tol * std::abs(expected);
}

struct FixtureRow {
    std::string function;
    int order;
    double x;
    double value;
};

std::vector<FixtureRow> load_fixture() {
    std::ifstream in(JLX_REFERENCE_CSV);
    REQUIRE(in.good());
    std::vector<FixtureRow> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        FixtureRow r;
        std::string field;
        std::getline(ss, r.function, ',');
        std::getline(ss, field, ',');
        r.order = std::stoi(field);
        std::getline(ss, field, ',');
        r.x = std::stod(field);
        std::getline(ss, field, ',');
        r.value = std::stod(field);
        rows.push_back(r);
    }
    return rows;
}

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

}  // namespace

TEST_CASE("PositiveReal rejects nonpositive and non-finite input") {
    CHECK_THROWS_AS(PositiveReal(0.0), DomainError);
    CHECK_THROWS_AS(PositiveReal(-1.5), DomainError);
    CHECK_THROWS_AS(PositiveReal(std::nan("")), DomainError);
    CHECK_THROWS_AS(PositiveReal(std::numeric_limits<double>::infinity()), DomainError);
    CHECK(PositiveReal(1e-300).value() == 1e-300);
}

TEST_CASE("ln_gamma anchor values") {
    CHECK(std::abs(lg(1.0)) <= 1e-14);
    CHECK(std::abs(lg(2.0)) <= 1e-14);
    CHECK(rel_close(lg(6.0), std::log(120.0), 1e-14));
    // Gamma(1/2) = sqrt(pi)
    CHECK(rel_close(lg(0.5), 0.5 * std::log(M_PI), 1e-14));
}

TEST_CASE("digamma anchor values") {
    CHECK(rel_close(psi(1.0), -kEulerGamma, 1e-14));
    CHECK(rel_close(psi(2.0), psi(1.0) + 1.0, 1e-14));
    double harmonic9 = 0.0;
    for (int i = 1; i <= 9; ++i) harmonic9 += 1.0 / i;
    CHECK(rel_close(psi(10.0), -kEulerGamma + harmonic9, 1e-13));
}

TEST_CASE("polygamma anchor values and sign structure") {
    CHECK(rel_close(psi_m(1, 1.0), M_PI * M_PI / 6.0, 1e-13));
    // recurrence psi'(x) - psi'(x+1) = 1/x^2
    for (double x : {0.03, 0.7, 1.0, 4.2, 55.0}) {
        CHECK(rel_close(psi_m(1, x) - psi_m(1, x + 1.0), 1.0 / (x * x), 1e-12));
    }
    const double p2 = psi_m(2, 5.0);
    CHECK(p2 >= -1.0 / 16.0);
    CHECK(p2 <= -1.0 / 25.0);
    CHECK_THROWS_AS(psi_m(0, 1.0), DomainError);
    CHECK_THROWS_AS(psi_m(4, 1.0), DomainError);
}

TEST_CASE("domain errors propagate through the kernels") {
    CHECK_THROWS_AS(lg(-2.0), DomainError);
    CHECK_THROWS_AS(psi(0.0), DomainError);
    CHECK_THROWS_AS(psi_m(2, -1.0), DomainError);
}

TEST_CASE("fixture: agreement with the high-precision references") {
    const auto rows = load_fixture();
    CHECK(rows.size() == 20);
    for (const auto& r : rows) {
        INFO(r.function, " order=", r.order, " x=", r.x);
        if (r.function == "ln_gamma") {
            CHECK(rel_close(lg(r.x), r.value, 1e-13));
        } else if (r.function == "digamma") {
            CHECK(rel_close(psi(r.x), r.value, 1e-12));
        } else {
            CHECK(rel_close(psi_m(r.order, r.x), r.value, 1e-10));
        }
    }
}

TEST_CASE("property: ln_gamma recurrence on (0, 100]") {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> dist(1e-12, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(rng);
        const double residual = lg(x + 1.0) - lg(x) - std::log(x);
        CHECK(std::abs(residual) <= 1e-12);
    }
}

TEST_CASE("property: digamma recurrence and monotonicity") {
    std::mt19937_64 rng(987123);
    std::uniform_real_distribution<double> dist(1e-4, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(rng);
        CHECK(std::abs(psi(x + 1.0) - psi(x) - 1.0 / x) <= 1e-12 * std::max(1.0, 1.0 / x));
        const double h = 0.25 * x;
        CHECK(psi(x + h) > psi(x));
    }
}

TEST_CASE("property: derivative estimates sandwich for m = 2, 3 on x > 1") {
    std::mt19937_64 rng(5550123);
    std::uniform_real_distribution<double> dist(1.0000001, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = dist(rng);
        const double p2 = psi_m(2, x);
        CHECK(p2 >= -1.0 / ((x - 1.0) * (x - 1.0)));
        CHECK(p2 <= -1.0 / (x * x));
        const double p3 = psi_m(3, x);
        CHECK(p3 >= 2.0 / (x * x * x));
        CHECK(p3 <= 2.0 / ((x - 1.0) * (x - 1.0) * (x - 1.0)));
    }
}

TEST_CASE("property: series signs on x > 0") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> dist(0.01, 200.0);
    for (int i = 0; i < 500; ++i) {
        const double x = dist(rng);
        CHECK(psi_m(1, x) > 0.0);
        CHECK(psi_m(2, x) < 0.0);
        CHECK(psi_m(3, x) > 0.0);
    }
}
