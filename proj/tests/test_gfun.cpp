#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "beurling/gfun.hpp"
#include "beurling/quadrature.hpp"

using namespace beurling;
using gfun::G_eval;
using gfun::G_logderiv;
using gfun::G_zeros;
using gfun::g_density;
using std::complex;

TEST_CASE("G basics") {
    CHECK(std::abs(G_eval({0.0, 0.0})) < 1e-15);
    CHECK(std::abs(G_eval({40.0, 0.0}) - 1.0) < 1e-15);
    // series and direct branches agree near the switch radius
    for (double r : {9e-4, 1.1e-3}) {
        const complex<double> z{r, 0.5 * r};
        const complex<double> a = 1.0 - (std::exp(-z) - std::exp(-2.0 * z)) / z;
        CHECK(std::abs(G_eval(z) - a) < 1e-14);
    }
    // leading Taylor coefficient 3/2
    CHECK(std::abs(G_eval({1e-6, 0.0}) / 1e-6 - 1.5) < 1e-5);
}

TEST_CASE("G log-derivative matches finite differences") {
    for (const complex<double> z : {complex<double>{0.7, 2.0}, complex<double>{-0.4, 5.0},
                                    complex<double>{2.0, -3.0}}) {
        const double h = 1e-6;
        const complex<double> fd =
            (G_eval(z + complex<double>{h, 0.0}) - G_eval(z - complex<double>{h, 0.0})) /
            (2.0 * h) / G_eval(z);
        CHECK(std::abs(G_logderiv(z) - fd) < 1e-6);
    }
}

TEST_CASE("G zeros from asymptotic seeds") {
    const auto zs = G_zeros(24);
    REQUIRE(zs.size() == 24);
    for (int j = 1; j <= 24; ++j) {
        const auto z = zs[static_cast<size_t>(j - 1)];
        CHECK(std::abs(G_eval(z)) <= 1e-12);
        // conjugate is a zero as well
        CHECK(std::abs(G_eval(std::conj(z))) <= 1e-12);
        // gap to the seed shrinks like j^{-1/2}
        const complex<double> seed{-0.5 * std::log(M_PI * j), M_PI * (j + 0.25)};
        CHECK(std::abs(z - seed) <= 2.0 / std::sqrt(static_cast<double>(j)));
    }
}

TEST_CASE("g density pieces") {
    CHECK(g_density(2.0) == 0.0);                       // below e
    CHECK(g_density(std::exp(1.5)) == doctest::Approx(1.0)); // only j = 1
    CHECK(g_density(std::exp(2.5)) == doctest::Approx(0.25)); // (w-2)/2
    // g log u < 7/3 beyond e^4
    for (double w = 4.0; w <= 60.0; w += 0.037)
        CHECK(g_density(std::exp(w)) * w < 7.0 / 3.0);
    // |g log u - 1| < 2.7 u^{-0.22} beyond e^5
    for (double w = 5.0; w <= 60.0; w += 0.041)
        CHECK(std::abs(g_density(std::exp(w)) * w - 1.0) < 2.7 * std::exp(-0.22 * w));
}

TEST_CASE("transform identity integral g u^{-z-1} = -log G") {
    // numeric quadrature of int_0^inf g(e^t) e^{-zt} dt; g is smooth per
    // unit piece, so a couple of Gauss panels per piece converge fast
    auto transform = [](complex<double> z) {
        double re = 0.0, im = 0.0;
        for (int m = 1; m <= 80; ++m) {
            auto fre = [&](double t) {
                return g_density(std::exp(t)) * std::exp(-z.real() * t) * std::cos(z.imag() * t);
            };
            auto fim = [&](double t) {
                return -g_density(std::exp(t)) * std::exp(-z.real() * t) * std::sin(z.imag() * t);
            };
            re += integrate_panels(fre, m, m + 1.0, 3).value;
            im += integrate_panels(fim, m, m + 1.0, 3).value;
        }
        return complex<double>{re, im};
    };
    for (int i = 0; i < 20; ++i) {
        const complex<double> z{0.3 + 2.7 * i / 19.0, -1.5 + 3.0 * (i % 7) / 6.0};
        const complex<double> lhs = transform(z);
        const complex<double> rhs = -std::log(G_eval(z));
        CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}

TEST_CASE("decay rate of (g log u)'") {
    // regression of log |d/dw (g(e^w) w)| against w at piece midpoints
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (int m = 6; m <= 40; ++m) {
        const double w = m + 0.5;
        const double d = std::abs(gfun::g_logweight_derivative(w));
        if (d <= 0.0) continue;
        const double y = std::log(d);
        sx += w;
        sy += y;
        sxx += w * w;
        sxy += w * y;
        ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    // bound (5.3) predicts exp(-0.22 w); verify the rate, not the constant
    CHECK(slope < -0.17);
}
