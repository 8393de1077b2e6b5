#include "beurling/shortinterval.hpp"

#include <cmath>

#include "beurling/errors.hpp"

namespace beurling {

ShortIntervalConfig::ShortIntervalConfig(double lam, int K_, mpfr_prec_t bits)
    : lambda(lam), K(K_), precision_bits(bits) {
    if (!(lambda >= 0.8 && lambda < 1.0))
        throw domain_error("ShortIntervalConfig: lambda must lie in [4/5, 1)");
    if (K < 2) throw domain_error("ShortIntervalConfig: K must be >= 2");
    if (k_drive() < 1) throw parameter_error("ShortIntervalConfig: K too small for this lambda");
    if (static_cast<double>(bits) < required_bits())
        throw precision_error("ShortIntervalConfig: need at least " +
                              std::to_string(static_cast<long>(std::ceil(required_bits()))) +
                              " bits of precision for K = " + std::to_string(K));
}

int ShortIntervalConfig::j() const {
    const double v = -std::log(1.0 - lambda) / std::log(4.0);
    int j = static_cast<int>(std::floor(v));
    // land 1-lambda in (4^{-j-1}, 4^{-j}]
    if (std::pow(4.0, -j) < 1.0 - lambda) --j;
    if (std::pow(4.0, -j - 1) >= 1.0 - lambda) ++j;
    return j;
}

int ShortIntervalConfig::k_drive() const { return K - j(); }

double ShortIntervalConfig::kappa() const {
    return K - j() + std::log(1.0 / (1.0 - lambda)) / std::log(4.0);
}

double ShortIntervalConfig::required_bits() const {
    // log2(gamma_K) = 4^K log2(e)
    return std::pow(4.0, K) * 1.4426950408889634 + 2.0 * (K + 1) + 48.0;
}

namespace {

// 4^kappa = 4^{K-j} / (1 - lambda), exactly in extended precision.
Real four_pow_kappa(const ShortIntervalConfig& cfg, mpfr_prec_t prec) {
    return pow(Real(4.0, prec), static_cast<long>(cfg.k_drive())) /
           (Real(1.0, prec) - Real(cfg.lambda, prec));
}

Real phase_target(int K, mpfr_prec_t prec, bool at_x) {
    // sin = (-1)^K at x, sin = -(-1)^K at x+h
    const Real half_pi = pi(prec) / 2.0;
    const bool positive = at_x ? (K % 2 == 0) : (K % 2 != 0);
    return positive ? half_pi : -half_pi;
}

// smallest nonnegative representative of (target - base) mod 2pi
Real phase_gap(const Real& base, const Real& target, mpfr_prec_t prec) {
    const Real two_pi = 2.0 * pi(prec);
    Real r = remainder(target - base, two_pi);
    if (r.sign() < 0) r += two_pi;
    return r;
}

} // namespace

Real select_B(const ShortIntervalConfig& cfg, const ContinuousSystem& sys) {
    const mpfr_prec_t prec = cfg.precision_bits;
    const ZeroParamR drive = sys.zero_param_real(cfg.k_drive(), prec);
    const Real A = four_pow_kappa(cfg, prec); // log x at B = 1
    const Real base = drive.gamma * A;
    const Real target = phase_target(cfg.K, prec, true);

    const Real delta = phase_gap(base, target, prec);
    const Real logB = delta / drive.gamma;
    const Real B = exp(logB);
    if (B.to_double() > 1.09) {
        const double sweep = (drive.gamma * Real(std::log(1.09), prec)).to_double();
        throw parameter_error("select_B: no admissible B in [1, 1.09] (phase sweep " +
                              std::to_string(sweep) + " rad" +
                              (sweep < 2.0 * M_PI ? " < 2 pi; K too small" : "") + ")");
    }
    return B;
}

Real select_h(double lambda, const Real& x, const ContinuousSystem& sys) {
    const mpfr_prec_t prec = x.prec();
    const Real logx = log(x);
    // recover the driving index: 4^{K-j} = (1 - lambda) log x at B ~ 1
    const double kd_guess = std::log((1.0 - lambda) * logx.to_double()) / std::log(4.0);
    const int k_drive = static_cast<int>(std::lround(kd_guess));
    if (k_drive < 1 || std::abs(kd_guess - k_drive) > 0.2)
        throw parameter_error("select_h: x is not of the form B exp(4^kappa) for this lambda");
    const double v = -std::log(1.0 - lambda) / std::log(4.0);
    const int j = static_cast<int>(std::floor(v + 1e-12));
    const int K = k_drive + j;

    const ZeroParamR drive = sys.zero_param_real(k_drive, prec);
    const Real xlam = exp(Real(lambda, prec) * logx);
    const Real h_lo = pi(prec) / 2.0 * xlam;
    const Real h_hi = 3.0 * pi(prec) * xlam;

    const Real phi_lo = drive.gamma * log(x + h_lo);
    const Real target = phase_target(K, prec, false);
    const Real tau = phi_lo + phase_gap(phi_lo, target, prec);
    const Real h = exp(tau / drive.gamma) - x;
    if (h > h_hi)
        throw parameter_error("select_h: no phase root inside [(pi/2) x^l, 3 pi x^l]");
    return h;
}

ShortIntervalResult short_interval_experiment(const ShortIntervalConfig& cfg) {
    const mpfr_prec_t prec = cfg.precision_bits;
    ContinuousSystem sys = ContinuousSystem::dmv(0.75, 1, cfg.K + 1, prec);

    ShortIntervalResult out;
    out.kappa = cfg.kappa();
    const Real B = select_B(cfg, sys);
    out.B = B.to_double();
    const Real x = B * exp(four_pow_kappa(cfg, prec));
    const Real h = select_h(cfg.lambda, x, sys);
    out.x = x;
    out.h = h;

    const int kd = cfg.k_drive();
    const ZeroParamR drive = sys.zero_param_real(kd, prec);

    // phase defects at both endpoints (should be at rounding level)
    const Real s0 = sin(drive.gamma * log(x));
    const Real s1 = sin(drive.gamma * log(x + h));
    const double want0 = (cfg.K % 2 == 0) ? 1.0 : -1.0;
    out.phase_residual = std::max(std::abs(s0.to_double() - want0),
                                  std::abs(s1.to_double() + want0));

    const PsiDecomposition at_x = psi_C_decomposed(sys, x);
    const PsiDecomposition at_xh = psi_C_decomposed(sys, x + h);

    const Real diff = at_xh.value - at_x.value;
    out.ratio = (diff / h).to_double();
    out.log_correction = ((log(x + h) - log(x)) / h).to_double();

    double small = 0.0, mid = 0.0, driveterm = 0.0;
    for (int k = sys.k0; k <= sys.k_max; ++k) {
        const size_t idx = static_cast<size_t>(k - sys.k0);
        if (idx >= at_x.I_k.size()) break;
        const double contrib = (2.0 * (at_xh.I_k[idx] - at_x.I_k[idx]) / h).to_double();
        if (k < kd)
            small += contrib;
        else if (k == kd)
            driveterm = contrib;
        else
            mid += contrib;
    }
    out.small_k_over_h = small;
    out.mid_k_over_h = mid;
    out.drive_over_h = driveterm;

    // main term of Delta I_{K-j}: (1/gamma)[ u^{l-1} sin(l gamma log u) ]
    // with g log u replaced by 1, evaluated through the original variable.
    const Real expo = Real(1.0, prec) - Real(1.0, prec) / drive.ell;
    const Real M = (exp(expo * log(x + h)) * s1 - exp(expo * log(x)) * s0) / drive.gamma;
    const Real xlam = exp(Real(cfg.lambda, prec) * log(x));
    out.main_term_M_over_h = (2.0 * M / h).to_double();
    out.abs_M_over_xlambda = abs(M / xlam).to_double();
    out.h_over_xlambda = (h / xlam).to_double();
    out.deviation_bound = 0.02 * std::exp(-1.0 / (1.0 - cfg.lambda));
    return out;
}

} // namespace beurling
