// beurling-lab: zero localization and counting by the argument principle,
// closed-form zero lists for G-product systems, N(alpha, T) tabulation and
// the explicit-formula residual check.

#ifndef BEURLING_ZEROS_HPP
#define BEURLING_ZEROS_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "beurling/continuous.hpp"

namespace beurling {

struct Rect {
    double x0, x1; // real part range
    double y0, y1; // imaginary part range
};

struct WindingOptions {
    double max_step = 0.1;      // initial boundary sampling step
    double min_modulus = 1e-9;  // boundary values below this raise geometry_error
    int max_depth = 40;
};

// Zeros-with-multiplicity count inside the box by boundary phase tracking.
// f must be analytic inside and nonzero on the boundary.
long winding_count(const std::function<cxd(cxd)>& f, const Rect& box,
                   const WindingOptions& opt = {});

struct BoxQuery {
    double alpha;            // 1/2 < alpha <= 1
    double T1, T2;           // 0 <= T1 < T2
    bool include_conjugates; // also report the [-T2, -T1] mirror

    BoxQuery(double a, double t1, double t2, bool conj = true);
};

enum class ZeroSource { known_param, argument_principle };

struct ZeroRecord {
    cxd rho;
    int multiplicity = 1;
    double residual = 0.0; // |zeta_C(rho)| after refinement
    ZeroSource source = ZeroSource::known_param;
};

// Parameter-derived zeros (rho_k + z_j / l_k and conjugates) filtered to the
// query box and Newton-refined on zeta_C; duplicates merged at 1e-8.
std::vector<ZeroRecord> known_zeros(const ContinuousSystem& sys, const BoxQuery& box);

// Winding-based N(alpha, T) over [alpha, 1] x [-T, T], decomposed into
// unit-height strips; the band |t| < t_split is excluded to keep the pole
// factor off the contour (our systems have no zeros there).
long N_alpha_T(const ContinuousSystem& sys, double alpha, double T, double t_split = 0.25);

// Per-strip counts over [j, j+1), j = 0..ceil(T)-1 (positive heights only).
std::vector<long> strip_counts(const ContinuousSystem& sys, double alpha, double T,
                               double t_split = 0.25);

struct DensityRow {
    double alpha, T;
    long N;
    double upper_bound; // T^{(c(mu)+eps)(1-mu)} (log T)^9
    double lower_bound; // appendix strip exponent, 0 when not applicable
    bool proviso;       // mu >= 2/3 and T >= T0
    bool pass_upper;
};

std::vector<DensityRow> density_report(const ContinuousSystem& sys,
                                       const std::vector<double>& alphas,
                                       const std::vector<double>& Ts, double eps_report = 0.05,
                                       double T0 = 2.0);

void export_density_csv(const std::vector<DensityRow>& rows, const std::string& path);
void export_zeros_csv(const std::vector<ZeroRecord>& zeros, const std::string& path);

struct ExplicitFormulaCheck {
    double residual;   // |psi_C(x) - (x - sum x^rho / rho)|
    double budget;     // (x^b + x/T) (log x)^3
    long zeros_used;
};

// Verifies the zero list against a winding count before using it.
ExplicitFormulaCheck explicit_formula_residual(const ContinuousSystem& sys, double x, double b,
                                               double T);

} // namespace beurling

#endif
