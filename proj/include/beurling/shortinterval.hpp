// beurling-lab: the DMV short-interval experiment. Picks B and h so that
// the phases sin(gamma_{K-j} log x) and sin(gamma_{K-j} log(x+h)) hit
// -+(-1)^K exactly (solved as phase equations, not first-order
// approximations), then measures (psi_C(x+h) - psi_C(x))/h and its
// decomposition into the driving term and the small-k / mid-k remainders.

#ifndef BEURLING_SHORTINTERVAL_HPP
#define BEURLING_SHORTINTERVAL_HPP

#include <string>

#include "beurling/continuous.hpp"
#include "beurling/mpreal.hpp"

namespace beurling {

struct ShortIntervalConfig {
    double lambda = 0.8;           // in [4/5, 1)
    int K = 2;                     // >= 2
    mpfr_prec_t precision_bits = 256;

    ShortIntervalConfig(double lam, int K_, mpfr_prec_t bits = 256);
    int j() const;        // 1 - lambda in (4^{-j-1}, 4^{-j}]
    int k_drive() const;  // K - j
    double kappa() const; // K - j + log_4 (1/(1-lambda))
    // bits needed: log2(gamma_K * 4^{K+1}) + 48
    double required_bits() const;
};

// Smallest B in [1, 1.09] with sin(gamma_{K-j} log(B e^{4^kappa})) = (-1)^K.
Real select_B(const ShortIntervalConfig& cfg, const ContinuousSystem& sys);

// h in [(pi/2) x^lambda, 3 pi x^lambda] with the opposite phase at x+h.
// The driving index K-j is recovered from x and lambda.
Real select_h(double lambda, const Real& x, const ContinuousSystem& sys);

struct ShortIntervalResult {
    double kappa = 0.0;
    double B = 0.0;
    Real x, h;              // kept in extended precision (may exceed double range)
    double ratio = 0.0;     // (psi_C(x+h) - psi_C(x)) / h
    double main_term_M_over_h = 0.0; // 2M/h, signed
    double abs_M_over_xlambda = 0.0; // |M| / x^lambda
    double deviation_bound = 0.0;    // 0.02 exp(-1/(1-lambda))
    double small_k_over_h = 0.0;     // (2/h) sum_{k < K-j} Delta I_k
    double mid_k_over_h = 0.0;       // (2/h) sum_{K-j < k <= K} Delta I_k
    double drive_over_h = 0.0;       // (2/h) Delta I_{K-j}
    double log_correction = 0.0;     // log((x+h)/x) / h
    double h_over_xlambda = 0.0;
    double phase_residual = 0.0;     // max phase defect at the two endpoints
};

ShortIntervalResult short_interval_experiment(const ShortIntervalConfig& cfg);

} // namespace beurling

#endif
