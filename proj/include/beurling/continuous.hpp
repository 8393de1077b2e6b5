// beurling-lab: continuous Beurling systems defined by G-kernel products.
//
// A system is the zeta function s/(s-1) * prod_k G(l_k(s-rho_k)) G(l_k(s-conj rho_k))
// together with its prime density dPi and Chebyshev function psi_C. Two
// families are built in: the DMV system (l_k = 4^k, gamma_k = e^{l_k},
// beta_k = 1 - 1/l_k) and the appendix family (beta fixed, gamma_k a power
// of k). psi_C is evaluated exactly per polynomial piece of g in extended
// precision because the phases gamma_k log x overflow double accuracy.

#ifndef BEURLING_CONTINUOUS_HPP
#define BEURLING_CONTINUOUS_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "beurling/csvio.hpp"
#include "beurling/mpreal.hpp"
#include "beurling/systems.hpp"

namespace beurling {

using cxd = std::complex<double>;

enum class SystemKind { None, DMV, Appendix };

struct ZeroParamD {
    double ell;
    double beta;
    double gamma; // rho = beta + i gamma
};

struct ZeroParamR {
    Real ell, beta, gamma;
};

struct ContinuousSystem {
    SystemKind kind = SystemKind::None;
    double theta = 0.0;
    double beta = 0.0, eps = 0.0; // appendix family
    int k0 = 1, k_max = 0;        // inclusive; k_max < k0 means no zeros
    mpfr_prec_t precision = 256;

    static ContinuousSystem none();
    static ContinuousSystem dmv(double theta, int k0, int k_max, mpfr_prec_t prec = 256);
    static ContinuousSystem appendix(double beta, double theta, double eps, int k0, int k_max,
                                     mpfr_prec_t prec = 256);
    static ContinuousSystem from_config(const Config& cfg);

    double alpha_param() const; // appendix: 1/(1-beta) + eps
    double gamma_exponent() const;

    ZeroParamD zero_param(int k) const;
    ZeroParamR zero_param_real(int k, mpfr_prec_t prec) const;
    std::vector<ZeroParamD> zero_params() const;
};

struct ZetaCValue {
    cxd value;
    double truncation_bound; // bound on |log| of the dropped tail factors
};

// Product evaluation; requires Re s > 1/2 and s != 1.
ZetaCValue zeta_C(const ContinuousSystem& sys, cxd s);

// Density of dPi at u (the du-part). Returns 0 at u == 1.
double pi_density(const ContinuousSystem& sys, double u);

struct PositivityScan {
    bool ok = true;
    std::optional<double> first_violation;
};

// Sign scan of pi_density over [1, u_max] with refinement near sign changes.
PositivityScan positivity_scan(const ContinuousSystem& sys, double u_max, int grid = 4096);

struct PsiDecomposition {
    Real main;            // x - 1 - log x
    std::vector<Real> I_k; // aligned with k0..k_max; psi = main - 2 sum I_k
    Real value;
};

// psi_C(x) via closed-form piecewise antiderivatives at the system precision.
Real psi_C(const ContinuousSystem& sys, const Real& x);
double psi_C(const ContinuousSystem& sys, double x);
PsiDecomposition psi_C_decomposed(const ContinuousSystem& sys, const Real& x);

struct NcResult {
    double value = 0.0;
    double err = 0.0;
};

// Log-grid multiplicative-convolution exponential of dPi; query N at any
// x below the build cutoff. Build cost is O(cells^2 * series length).
class NcGrid {
  public:
    NcGrid(const ContinuousSystem& sys, double x_max, int cells = 16384);
    NcResult N_at(double x) const;
    double x_max() const { return x_max_; }

  private:
    std::vector<double> mass_;      // N-measure mass per cell (atom at 1 excluded)
    std::vector<double> mass_half_; // same from the half-resolution build
    double h_ = 0.0, T_ = 0.0, x_max_ = 0.0;
};

// Perron contour integral with a window symmetric about x; the reported
// error combines the contour tail estimate and the quadrature estimate.
NcResult N_C_perron(const ContinuousSystem& sys, double x, double tol = 1e-4);

enum class NcMethod { ConvExp, Perron };
NcResult N_C(const ContinuousSystem& sys, double x, NcMethod method, int cells = 16384);

// Deterministic discretization stand-in: q_j = Pi^{-1}(j - 1/2).
PrimeSequence discretize(const ContinuousSystem& sys, int j_max);

// Pi_C(u) by cumulative quadrature (exposed for tests).
double Pi_C(const ContinuousSystem& sys, double u);

} // namespace beurling

#endif
