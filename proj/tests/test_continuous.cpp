#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "beurling/continuous.hpp"
#include "beurling/errors.hpp"
#include "beurling/gfun.hpp"
#include "beurling/quadrature.hpp"

using namespace beurling;

namespace {

// 256-bit product oracle for zeta_C at real or complex s
cxd zeta_product_oracle(const ContinuousSystem& sys, cxd s) {
    const mpfr_prec_t P = 256;
    Complex acc{Real(s.real(), P), Real(s.imag(), P)};
    const Complex one{Real(1.0, P), Real(0.0, P)};
    const Complex sm1 = acc - one;
    Complex val = acc * reciprocal(sm1);
    auto Gmp = [&](const Complex& z) {
        const Complex e1 = exp(-z);
        const Complex e2 = exp(Complex{-2.0 * z.re, -2.0 * z.im});
        return one - (e1 - e2) * reciprocal(z);
    };
    for (int k = sys.k0; k <= sys.k_max; ++k) {
        const ZeroParamR zp = sys.zero_param_real(k, P);
        const Complex srho{Real(s.real(), P) - zp.beta, Real(s.imag(), P) - zp.gamma};
        const Complex srhoc{Real(s.real(), P) - zp.beta, Real(s.imag(), P) + zp.gamma};
        val = val * Gmp(Complex{zp.ell * srho.re, zp.ell * srho.im});
        val = val * Gmp(Complex{zp.ell * srhoc.re, zp.ell * srhoc.im});
    }
    return {val.re.to_double(), val.im.to_double()};
}

} // namespace

TEST_CASE("zeta_C basics") {
    const auto none = ContinuousSystem::none();
    CHECK(zeta_C(none, {2.0, 0.0}).value.real() == doctest::Approx(2.0));
    CHECK_THROWS_AS(zeta_C(none, {0.4, 3.0}), domain_error);
    CHECK_THROWS_AS(zeta_C(none, {1.0, 0.0}), domain_error);

    const auto app = ContinuousSystem::appendix(0.75, 0.55, 0.15, 2, 40);
    // vanishes at a retained zero
    const ZeroParamD z3 = app.zero_param(3);
    const auto at_zero = zeta_C(app, {z3.beta, z3.gamma});
    CHECK(std::abs(at_zero.value) < 1e-12);
    // high-precision product oracle at a few points
    for (const cxd s : {cxd{2.0, 0.0}, cxd{0.8, 5.0}, cxd{0.7, 33.0}}) {
        const cxd got = zeta_C(app, s).value;
        const cxd want = zeta_product_oracle(app, s);
        CHECK(std::abs(got - want) <= 1e-11 * std::abs(want) + 1e-13);
    }
    // real and positive on (1, inf), conjugate symmetry
    for (double sig : {1.1, 1.5, 3.0}) {
        const auto v = zeta_C(app, {sig, 0.0}).value;
        CHECK(v.imag() == 0.0);
        CHECK(v.real() > 0.0);
    }
    const cxd s{0.8, 17.0};
    CHECK(std::abs(zeta_C(app, std::conj(s)).value - std::conj(zeta_C(app, s).value)) < 1e-14);
    // truncation tail reported small for the desk system
    CHECK(zeta_C(app, {0.8, 20.0}).truncation_bound < 1e-6);
}

TEST_CASE("pi_density") {
    const auto none = ContinuousSystem::none();
    CHECK(pi_density(none, 1.0) == 0.0); // the (1 - 1/u) factor at u = 1
    for (double u : {1.5, 2.0, 10.0, 1e4}) CHECK(pi_density(none, u) > 0.0);
    // near u = 1 the base density tends to 1
    CHECK(pi_density(none, 1.0 + 1e-9) == doctest::Approx(1.0).epsilon(1e-6));

    // appendix with k0 too small: positivity fails at desk scale
    const auto bad = ContinuousSystem::appendix(0.75, 0.55, 0.15, 2, 40);
    const auto scan_bad = positivity_scan(bad, 2000.0);
    CHECK(!scan_bad.ok);
    CHECK(scan_bad.first_violation.has_value());
    CHECK(pi_density(bad, *scan_bad.first_violation * 1.0000001) <= 1e-10);

    // detection-scale system with high k0 stays positive through 1e4
    const auto good = ContinuousSystem::appendix(0.75, 0.55, 0.15, 8, 60);
    const auto scan_good = positivity_scan(good, 1.0e4);
    CHECK(scan_good.ok);
}

TEST_CASE("psi_C closed form for the no-zero system") {
    const auto none = ContinuousSystem::none();
    for (double x : {1.0, 2.0, 10.0, 1234.5}) {
        const double want = x - 1.0 - std::log(x);
        CHECK(psi_C(none, x) == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("psi_C matches adaptive quadrature for a single small zero") {
    // single zero pair at beta = 0.75, gamma ~ 7
    const auto sys = ContinuousSystem::appendix(0.75, 0.55, 0.15, 2, 2);
    const ZeroParamD z = sys.zero_param(2);
    for (double x : {30.0, 120.0, 900.0}) {
        auto integrand = [&](double w) {
            return w * gfun::g_density(std::exp(w / z.ell)) * std::exp(z.beta * w) *
                   std::cos(z.gamma * w) / z.ell;
        };
        const double I = integrate_adaptive(integrand, 0.0, std::log(x), 1e-11).value;
        const double want = x - 1.0 - std::log(x) - 2.0 * I;
        CHECK(psi_C(sys, x) == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("psi_C derivative matches log u times the density") {
    const auto sys = ContinuousSystem::appendix(0.75, 0.55, 0.15, 2, 10);
    for (double u : {50.0, 300.0, 2500.0}) {
        // keep clear of the piece kinks e^{m l_k}
        const double h = 1e-4 * u;
        const double fd = (psi_C(sys, u + h) - psi_C(sys, u - h)) / (2.0 * h);
        const double direct = std::log(u) * pi_density(sys, u);
        CHECK(fd == doctest::Approx(direct).epsilon(1e-5));
    }
}

TEST_CASE("psi_C DMV terms vanish above K") {
    // x below gamma_{k}: I_k inactive once log x < l_k
    const auto dmv = ContinuousSystem::dmv(0.75, 1, 4);
    const Real x(std::exp(20.0), 256);
    const auto dec = psi_C_decomposed(dmv, x);
    REQUIRE(dec.I_k.size() == 4);
    CHECK(dec.I_k[1].to_double() != 0.0); // l_2 = 16 <= 20
    CHECK(dec.I_k[2].to_double() == 0.0); // l_3 = 64 > 20
    CHECK(dec.I_k[3].to_double() == 0.0);
    // precision guard names the required bits
    const auto dmv_low = ContinuousSystem::dmv(0.75, 1, 3, 64);
    CHECK_THROWS_AS(psi_C_decomposed(dmv_low, Real(std::exp(80.0), 64)), precision_error);
}

TEST_CASE("N_C both methods on the no-zero system") {
    const auto none = ContinuousSystem::none();
    NcGrid grid(none, 1100.0, 4096);
    for (double x : {10.0, 100.0, 1000.0}) {
        const auto nc = grid.N_at(x);
        CHECK(std::abs(nc.value - x) / x < 1e-3);
        const auto np = N_C_perron(none, x);
        CHECK(std::abs(np.value - x) / x < 1e-3);
    }
    CHECK_THROWS_AS(grid.N_at(5000.0), domain_error);
}

TEST_CASE("N_C cross-method on a small appendix system") {
    const auto sys = ContinuousSystem::appendix(0.7, 0.6, 0.2, 3, 30);
    NcGrid grid(sys, 150.0, 4096);
    for (double x : {40.0, 100.0}) {
        const auto nc = grid.N_at(x);
        const auto np = N_C_perron(sys, x);
        CHECK(std::abs(nc.value - np.value) / np.value < 1e-3);
    }
}

TEST_CASE("discretize inverts Pi at half-integers") {
    const auto none = ContinuousSystem::none();
    const auto primes = discretize(none, 40);
    REQUIRE(primes.primes.size() == 40);
    for (int j = 1; j <= 40; ++j) {
        const double q = primes.primes[static_cast<size_t>(j - 1)];
        CHECK(std::abs(Pi_C(none, q) - (j - 0.5)) < 1e-8);
    }
    // nondecreasing
    for (size_t i = 1; i < primes.primes.size(); ++i)
        CHECK(primes.primes[i] >= primes.primes[i - 1]);
}

TEST_CASE("psi of the discretized system tracks psi_C") {
    const auto sys = ContinuousSystem::appendix(0.75, 0.55, 0.15, 8, 60);
    const auto primes = discretize(sys, 1500);
    const auto stream = enumerate_integers(primes, 1.0e4);
    double worst = 0.0;
    for (double x = 10.0; x <= 9000.0; x *= 1.7) {
        const double diff = std::abs(stream.chebyshev_psi(x) - psi_C(sys, x));
        worst = std::max(worst, diff / (std::sqrt(x) * std::log(x)));
    }
    CHECK(worst < 5.0);
}

TEST_CASE("system config parsing") {
    const auto cfg = Config::from_string("kind = \"appendix\"\nbeta = 0.75\ntheta = 0.55\n"
                                         "eps = 0.15\nk0 = 8\nk_max = 60\nprecision_bits = 192\n");
    const auto sys = ContinuousSystem::from_config(cfg);
    CHECK(sys.kind == SystemKind::Appendix);
    CHECK(sys.beta == 0.75);
    CHECK(sys.k0 == 8);
    CHECK(sys.precision == 192);
    CHECK_THROWS_AS(ContinuousSystem::from_config(Config::from_string("kind = \"x\"\n")),
                    domain_error);
}
