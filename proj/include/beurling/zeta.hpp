// beurling-lab: Dirichlet-series analytics for discrete systems: partial
// sums, the tail-corrected zeta approximation, the Moebius mollifier, and
// the dyadic zero-detection blocks.

#ifndef BEURLING_ZETA_HPP
#define BEURLING_ZETA_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "beurling/selberg.hpp"
#include "beurling/systems.hpp"

namespace beurling {

// sum_{n_k <= Y} n_k^{-s}, compensated summation; Y must not exceed the cutoff.
cxd zeta_partial(const IntegerStream& stream, cxd s, double Y);

struct ZetaApprox {
    cxd value;        // partial sum + A Y^{1-s}/(s-1)
    double err_bound; // certificate-based bound on |zeta - value|
};

// Analytic continuation surrogate valid for Re s > cert.theta, s != 1.
ZetaApprox zeta_approx(const IntegerStream& stream, const WellBehavedCertificate& cert,
                       cxd s, double Y);

struct Mollifier {
    cxd value;
    double trivial_bound; // X^{1-sigma} log(X+1)
};

// M_X(s) = sum_{n_k <= X} mu(n_k) / n_k^s.
Mollifier mollifier_M(const IntegerStream& stream, cxd s, double X);

struct DetectionConfig {
    double T;     // > 2
    double nu;    // in (1, 2]
    double theta; // in [0, 1)
    double X;     // mollifier length
    double alpha;

    DetectionConfig(double T_, double nu_, double theta_, double X_, double alpha_);
    double sum_length() const; // T^{nu/(1-theta)}
};

// Coefficients a_k of zeta_partial * M_X at factorization level, stored
// sparsely against the stream: exact integers, a_1 = 1, a_k = 0 on (1, X].
struct DetectionCoefficients {
    std::vector<size_t> index; // stream indices with nonzero a_k, ascending
    std::vector<long> a;
    double X = 1.0, Y = 1.0;
};

DetectionCoefficients detection_coefficients(const IntegerStream& stream, double X, double Y);

struct DetectionRun {
    std::vector<DirichletPolynomial> blocks; // D_l over (2^l X, 2^{l+1} X]
    std::vector<double> block_N;             // N = 2^l X
    long L = 0;                              // block count - 1
    double mollifier_len = 1.0;              // X
    double Y = 1.0;
    DirichletPolynomial mollifier;           // (n_k, mu(n_k)) for n_k <= X
};

DetectionRun dyadic_blocks(const IntegerStream& stream, const DetectionCoefficients& coeffs,
                           double X, double Y, double alpha);

struct DetectionCheck {
    double lhs;       // |zeta(s) M_X(s) - sum_l D_l(s)|
    double max_block; // max_l |D_l(s)|
    double threshold; // 1/(2(L+1)) - slack
    double slack;     // measured residual of the mollified identity
    bool pass;
};

// At a numerically verified zero of zeta_eval this asserts the detector
// inequality with measured slack. Non-zero points must be flagged generic.
DetectionCheck detection_check(const DetectionRun& run,
                               const std::function<cxd(cxd)>& zeta_eval, cxd s,
                               bool generic_point = false);

void export_detection_csv(const DetectionRun& run, const std::vector<cxd>& zeros,
                          const std::string& path);

} // namespace beurling

#endif
