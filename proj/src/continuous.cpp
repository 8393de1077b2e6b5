#include "beurling/continuous.hpp"

#include <algorithm>
#include <cmath>

#include "beurling/errors.hpp"
#include "beurling/gfun.hpp"
#include "beurling/quadrature.hpp"

namespace beurling {

ContinuousSystem ContinuousSystem::none() {
    ContinuousSystem s;
    s.kind = SystemKind::None;
    s.k0 = 1;
    s.k_max = 0;
    return s;
}

ContinuousSystem ContinuousSystem::dmv(double theta, int k0, int k_max, mpfr_prec_t prec) {
    if (k0 < 1) throw domain_error("dmv: k0 must be >= 1");
    ContinuousSystem s;
    s.kind = SystemKind::DMV;
    s.theta = theta;
    s.k0 = k0;
    s.k_max = k_max;
    s.precision = prec;
    return s;
}

ContinuousSystem ContinuousSystem::appendix(double beta, double theta, double eps, int k0,
                                            int k_max, mpfr_prec_t prec) {
    if (!(0.5 < theta && theta < beta && beta < 1.0))
        throw domain_error("appendix system: need 1/2 < theta < beta < 1");
    if (k0 < 2) throw domain_error("appendix system: k0 must be >= 2");
    ContinuousSystem s;
    s.kind = SystemKind::Appendix;
    s.beta = beta;
    s.theta = theta;
    s.eps = eps;
    s.k0 = k0;
    s.k_max = k_max;
    s.precision = prec;
    return s;
}

ContinuousSystem ContinuousSystem::from_config(const Config& cfg) {
    const std::string kind = cfg.get_str("kind");
    const auto prec = static_cast<mpfr_prec_t>(cfg.get_int("precision_bits", 256));
    if (kind == "none") return none();
    if (kind == "dmv")
        return dmv(cfg.get_num("theta", 0.75), cfg.get_int("k0", 1),
                   static_cast<int>(cfg.get_int("k_max", 4)), prec);
    if (kind == "appendix")
        return appendix(cfg.get_num("beta"), cfg.get_num("theta"), cfg.get_num("eps"),
                        static_cast<int>(cfg.get_int("k0", 2)),
                        static_cast<int>(cfg.get_int("k_max", 40)), prec);
    throw domain_error("unknown system kind: " + kind);
}

double ContinuousSystem::alpha_param() const { return 1.0 / (1.0 - beta) + eps; }

double ContinuousSystem::gamma_exponent() const {
    return 2.0 * alpha_param() * (beta - theta) + 1.0 + eps;
}

ZeroParamD ContinuousSystem::zero_param(int k) const {
    ZeroParamD z;
    switch (kind) {
        case SystemKind::DMV:
            z.ell = std::pow(4.0, k);
            z.beta = 1.0 - 1.0 / z.ell;
            z.gamma = std::exp(z.ell); // overflows for k >= 6; callers stay below
            break;
        case SystemKind::Appendix:
            z.ell = alpha_param() * std::log(k);
            z.beta = beta;
            z.gamma = std::pow(static_cast<double>(k), gamma_exponent());
            break;
        case SystemKind::None:
            throw domain_error("zero_param: system has no zeros");
    }
    return z;
}

ZeroParamR ContinuousSystem::zero_param_real(int k, mpfr_prec_t prec) const {
    switch (kind) {
        case SystemKind::DMV: {
            Real ell = pow(Real(4.0, prec), static_cast<long>(k));
            Real beta_k = Real(1.0, prec) - Real(1.0, prec) / ell;
            return {ell, beta_k, exp(ell)};
        }
        case SystemKind::Appendix: {
            Real lk = log(Real(static_cast<long>(k), prec));
            Real ell = Real(alpha_param(), prec) * lk;
            return {ell, Real(beta, prec), exp(Real(gamma_exponent(), prec) * lk)};
        }
        case SystemKind::None:
            throw domain_error("zero_param_real: system has no zeros");
    }
    throw domain_error("zero_param_real: bad kind");
}

std::vector<ZeroParamD> ContinuousSystem::zero_params() const {
    std::vector<ZeroParamD> out;
    for (int k = k0; k <= k_max; ++k) out.push_back(zero_param(k));
    return out;
}

ZetaCValue zeta_C(const ContinuousSystem& sys, cxd s) {
    if (!(s.real() > 0.5)) throw domain_error("zeta_C: need Re s > 1/2");
    if (s == cxd{1.0, 0.0}) throw domain_error("zeta_C: s = 1 is the pole");

    ZetaCValue out;
    out.value = s / (s - cxd{1.0, 0.0});
    for (int k = sys.k0; k <= sys.k_max; ++k) {
        const ZeroParamD z = sys.zero_param(k);
        const cxd rho{z.beta, z.gamma};
        out.value *= gfun::G_eval(z.ell * (s - rho));
        out.value *= gfun::G_eval(z.ell * (s - std::conj(rho)));
    }

    // Bound |log| of the dropped factors. For tail k the distance to the
    // zero obeys |z| >= l_k max(|sigma - beta_k|, |gamma_k - |t||).
    double tail = 0.0;
    if (sys.kind != SystemKind::None) {
        const double sigma = s.real(), t = std::abs(s.imag());
        for (int k = sys.k_max + 1; k <= sys.k_max + 100000; ++k) {
            ZeroParamD z;
            if (sys.kind == SystemKind::DMV) {
                z.ell = std::pow(4.0, k);
                z.beta = 1.0 - 1.0 / z.ell;
                if (z.ell > 650.0) break; // e^{l} beyond double, factor is 1 to all bits
                z.gamma = std::exp(z.ell);
            } else {
                z = sys.zero_param(k);
            }
            if (z.gamma < 2.0 * t) {
                // below the query height the tail logic does not apply yet
                tail += 1.0; // flagged as uncertified
                continue;
            }
            const double dist = z.ell * std::max(z.gamma - t, std::abs(sigma - z.beta));
            const double e1 = std::exp(-z.ell * (sigma - z.beta));
            const double phi = (e1 + e1 * e1) / std::max(dist, 1e-300);
            const double term = (phi < 0.5) ? 2.0 * (phi + phi * phi) : 1.0;
            tail += 2.0 * term;
            if (term < 1e-22 && k > sys.k_max + 8) break;
        }
    }
    out.truncation_bound = tail;
    return out;
}

namespace {

double base_density(double u) {
    // (1 - 1/u)/log u, stable near u = 1.
    const double t = u - 1.0;
    if (t < 1e-8) return (t / u) / (t > 0 ? std::log1p(t) : 1.0);
    return (t / u) / std::log(u);
}

// cos(gamma log u) with the phase reduced at the system precision.
double reduced_cos(const ContinuousSystem& sys, int k, double logu) {
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(sys.precision, 128);
    const ZeroParamR z = sys.zero_param_real(k, prec);
    const Real phase = z.gamma * Real(logu, prec);
    return cos(remainder(phase, 2.0 * pi(prec))).to_double();
}

} // namespace

double pi_density(const ContinuousSystem& sys, double u) {
    if (!(u >= 1.0)) throw domain_error("pi_density: u must be >= 1");
    if (u == 1.0) return 0.0;
    const double logu = std::log(u);
    double dens = base_density(u);
    for (int k = sys.k0; k <= sys.k_max; ++k) {
        const ZeroParamD z = sys.zero_param(k);
        if (logu < z.ell) {
            if (sys.kind == SystemKind::DMV || sys.kind == SystemKind::Appendix) {
                // later k only have larger l_k
                break;
            }
        }
        if (logu < z.ell) continue;
        const double g = gfun::g_density(std::exp(logu / z.ell));
        if (g == 0.0) continue;
        dens -= 2.0 * g * std::pow(u, z.beta - 1.0) * reduced_cos(sys, k, logu) / z.ell;
    }
    return dens;
}

PositivityScan positivity_scan(const ContinuousSystem& sys, double u_max, int grid) {
    PositivityScan out;
    if (!(u_max > 1.0)) return out;
    const double llo = 0.0, lhi = std::log(u_max);
    double prev_u = 1.0, prev_v = 0.0;
    for (int i = 1; i <= grid; ++i) {
        const double u = std::exp(llo + (lhi - llo) * i / grid);
        const double v = pi_density(sys, u);
        if (v < 0.0 || (prev_v >= 0.0 && v < 0.0)) {
            // refine the first crossing by bisection
            double a = prev_u, b = u;
            for (int it = 0; it < 80 && (b - a) > 1e-12 * b; ++it) {
                const double m = 0.5 * (a + b);
                if (pi_density(sys, m) < 0.0)
                    b = m;
                else
                    a = m;
            }
            out.ok = false;
            out.first_violation = b;
            return out;
        }
        prev_u = u;
        prev_v = v;
    }
    return out;
}

namespace {

// int w^d e^{aw} dw evaluated at w (the e^{aw} factor is passed in).
Complex antiderivative_sum(int d, const Real& w, const Complex& inv_a) {
    // sum_{i=0}^{d} (-1)^i d!/(d-i)! w^{d-i} / a^{i+1}
    Complex term = pow(w, static_cast<long>(d)) * inv_a;
    Complex acc = term;
    const Complex step_base = inv_a;
    for (int i = 0; i < d; ++i) {
        // term_{i+1} = term_i * ( -(d-i) / (a w) )
        term = term * step_base;
        term = Real(static_cast<long>(-(d - i)), w.prec()) * term;
        term = Complex{term.re / w, term.im / w};
        acc = acc + term;
    }
    return acc;
}

} // namespace

PsiDecomposition psi_C_decomposed(const ContinuousSystem& sys, const Real& x) {
    const mpfr_prec_t prec = std::max<mpfr_prec_t>(sys.precision, x.prec());
    const Real xr = x; // at caller precision
    const Real W = log(xr);
    if (W.sign() < 0) throw domain_error("psi_C: x must be >= 1");

    PsiDecomposition out;
    out.main = xr - Real(1.0, prec) - W;
    out.value = out.main;

    const double Wd = W.to_double();

    for (int k = sys.k0; k <= sys.k_max; ++k) {
        const ZeroParamR zp = sys.zero_param_real(k, prec);
        const double elld = zp.ell.to_double();
        if (Wd < elld) {
            out.I_k.emplace_back(Real(0.0, prec));
            continue;
        }

        // precision check: phases reach gamma_k * W
        const double log2_phase =
            (log(zp.gamma) + log(W)).to_double() * 1.4426950408889634;
        if (static_cast<double>(prec) < log2_phase + 48.0)
            throw precision_error("psi_C: need at least " +
                                  std::to_string(static_cast<long>(std::ceil(log2_phase + 48.0))) +
                                  " bits for gamma*log x, have " + std::to_string(prec));

        const int m_hi = static_cast<int>(std::floor(Wd / elld + 1e-15));
        // working precision absorbs the alternating g-coefficients
        const mpfr_prec_t wprec = prec + static_cast<mpfr_prec_t>(3 * (m_hi + 2)) + 64;

        const ZeroParamR z = sys.zero_param_real(k, wprec);
        const Complex a{z.beta, z.gamma};
        const Complex inv_a = reciprocal(a);
        const Real Wlocal = log(Real(0.0, wprec) + xr); // log x at working precision

        Real I_k(0.0, wprec);
        for (int m = 1; m <= m_hi; ++m) {
            const Real w0 = Real(static_cast<long>(m), wprec) * z.ell;
            Real w1 = Real(static_cast<long>(m + 1), wprec) * z.ell;
            if (Wlocal < w1) w1 = Wlocal;
            if (!(w0 < w1)) continue;

            const auto cy = gfun::g_polynomial_real(m, wprec); // coeffs in y = w/l
            // integrand: w * P(w/l) e^{aw};  w-monomial coeff q_{d+1} = cy[d]/l^d
            std::vector<Real> q(cy.size() + 1, Real(0.0, wprec));
            Real ellpow(1.0, wprec);
            for (size_t d = 0; d < cy.size(); ++d) {
                q[d + 1] = cy[d] / ellpow;
                ellpow *= z.ell;
            }

            // definite integral: [e^{aw} sum_d q_d S_d(w)]_{w0}^{w1}
            const Complex E1 = exp(Complex{a.re * w1, a.im * w1});
            const Complex E0 = exp(Complex{a.re * w0, a.im * w0});
            Complex S1{Real(0.0, wprec), Real(0.0, wprec)};
            Complex S0{Real(0.0, wprec), Real(0.0, wprec)};
            for (size_t d = 1; d < q.size(); ++d) {
                if (q[d].is_zero()) continue;
                const Complex A1 = antiderivative_sum(static_cast<int>(d), w1, inv_a);
                const Complex A0 = antiderivative_sum(static_cast<int>(d), w0, inv_a);
                S1 = S1 + Complex{q[d] * A1.re, q[d] * A1.im};
                S0 = S0 + Complex{q[d] * A0.re, q[d] * A0.im};
            }
            const Complex piece = E1 * S1 - E0 * S0;
            I_k += piece.re; // real part = integral against cos
        }
        I_k /= z.ell;

        Real I_out(0.0, prec);
        I_out += I_k;
        out.I_k.push_back(I_out);
        out.value -= 2.0 * I_out;
    }
    return out;
}

Real psi_C(const ContinuousSystem& sys, const Real& x) { return psi_C_decomposed(sys, x).value; }

double psi_C(const ContinuousSystem& sys, double x) {
    return psi_C(sys, Real(x, std::max<mpfr_prec_t>(sys.precision, 128))).to_double();
}

namespace {

double cell_mass(const ContinuousSystem& sys, double t0, double t1) {
    // mass of dPi-pushforward in t = log u over [t0, t1], 4-pt Gauss
    static const double xs[2] = {0.3399810435848563, 0.8611363115940526};
    static const double wsq[2] = {0.6521451548625461, 0.3478548451374538};
    const double c = 0.5 * (t0 + t1), h = 0.5 * (t1 - t0);
    double acc = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (double sgn : {-1.0, 1.0}) {
            const double t = c + sgn * h * xs[i];
            acc += wsq[i] * pi_density(sys, std::exp(t)) * std::exp(t);
        }
    }
    return acc * h;
}

std::vector<double> build_mass(const ContinuousSystem& sys, double T, int n) {
    const double h = T / n;
    std::vector<double> q(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) q[static_cast<size_t>(i)] = cell_mass(sys, i * h, (i + 1) * h);

    // exp*: N-mass = sum_j q^{*j} / j!, truncated once a term stops mattering
    std::vector<double> acc(q), cj(q);
    double fact = 1.0;
    for (int j = 2; j <= 400; ++j) {
        std::vector<double> next(static_cast<size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            const double qi = q[static_cast<size_t>(i)];
            if (qi == 0.0) continue;
            const int lim = n - 1 - i;
            for (int p = 0; p <= lim; ++p) {
                const double m = qi * cj[static_cast<size_t>(p)];
                // product of two cell-center atoms lands on the shared cell
                // boundary; split it to stay second-order accurate
                const int idx = i + p;
                next[static_cast<size_t>(idx)] += 0.5 * m;
                if (idx + 1 < n) next[static_cast<size_t>(idx + 1)] += 0.5 * m;
            }
        }
        cj.swap(next);
        fact *= j;
        double total = 0.0, term = 0.0;
        for (int i = 0; i < n; ++i) {
            term += cj[static_cast<size_t>(i)] / fact;
            total += acc[static_cast<size_t>(i)];
        }
        for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i)] += cj[static_cast<size_t>(i)] / fact;
        if (term < 1e-12 * std::max(total, 1.0)) break;
    }
    return acc;
}

} // namespace

NcGrid::NcGrid(const ContinuousSystem& sys, double x_max, int cells) {
    if (!(x_max > 1.0)) throw domain_error("NcGrid: x_max must exceed 1");
    if (cells < 64) throw precision_error("NcGrid: grid too coarse");
    x_max_ = x_max;
    T_ = std::log(x_max) * 1.0000001;
    h_ = T_ / cells;
    mass_ = build_mass(sys, T_, cells);
    mass_half_ = build_mass(sys, T_, cells / 2);
}

NcResult NcGrid::N_at(double x) const {
    if (!(x >= 1.0) || x > x_max_ * (1 + 1e-12))
        throw domain_error("NcGrid: x outside built range");
    const double t = std::log(x);
    auto eval = [t](const std::vector<double>& m, double h) {
        double acc = 1.0; // atom at u = 1
        const auto n = static_cast<int>(m.size());
        const int full = std::min(n, static_cast<int>(std::floor(t / h)));
        for (int i = 0; i < full; ++i) acc += m[static_cast<size_t>(i)];
        if (full < n) acc += m[static_cast<size_t>(full)] * (t / h - full);
        return acc;
    };
    NcResult r;
    r.value = eval(mass_, h_);
    r.err = std::abs(r.value - eval(mass_half_, 2.0 * h_)) + 1e-9 * r.value;
    return r;
}

NcResult N_C_perron(const ContinuousSystem& sys, double x, double tol) {
    if (!(x > 1.5)) throw domain_error("N_C_perron: x must exceed 1.5");
    const double kappa = 1.0 + 1.0 / std::log(x);
    const double xl = x - 0.5, xr = x + 0.5;

    auto integrand = [&](double t) {
        const cxd s{kappa, t};
        const cxd z = zeta_C(sys, s).value;
        const cxd sp1 = s + cxd{1.0, 0.0};
        const cxd wl = std::exp(sp1 * std::log(xl));
        const cxd wr = std::exp(sp1 * std::log(xr));
        return (z * (wr - wl) / (s * sp1)).real();
    };

    // |window| <= 2 x^{kappa+1}/t^2 and one integration by parts in the
    // oscillation e^{it log x} buys another 1/(omega T0).
    double zbound = 0.0;
    for (double t = 0.0; t <= 50.0; t += 7.0)
        zbound = std::max(zbound, std::abs(zeta_C(sys, {kappa, t + 1.0}).value));
    const double omega = std::log(xl);
    double T0 = 50.0;
    const double xpow = std::pow(x, kappa + 1.0);
    while (4.0 * zbound * xpow / (omega * T0 * T0) > 0.5 * tol * x && T0 < 5e6) T0 *= 1.4;

    const double panel = std::min(0.35, 2.0 * M_PI / (8.0 * std::log(xr)));
    const int panels = static_cast<int>(std::ceil(T0 / panel));
    QuadResult q = integrate_panels(integrand, 0.0, T0, panels);

    NcResult out;
    out.value = q.value / M_PI; // (1/2pi) * 2 Re over the full line
    out.err = q.error_estimate / M_PI + 4.0 * zbound * xpow / (omega * T0 * T0);
    return out;
}

NcResult N_C(const ContinuousSystem& sys, double x, NcMethod method, int cells) {
    if (method == NcMethod::Perron) return N_C_perron(sys, x);
    NcGrid grid(sys, x * 1.001, cells);
    return grid.N_at(x);
}

double Pi_C(const ContinuousSystem& sys, double u) {
    if (!(u >= 1.0)) throw domain_error("Pi_C: u must be >= 1");
    if (u == 1.0) return 0.0;
    auto f = [&](double t) { return pi_density(sys, std::exp(t)) * std::exp(t); };
    return integrate_adaptive(f, 0.0, std::log(u), 1e-10).value;
}

PrimeSequence discretize(const ContinuousSystem& sys, int j_max) {
    if (j_max < 1) throw domain_error("discretize: j_max must be >= 1");

    // cumulative Pi on a log grid, grown until it covers j_max - 1/2
    double u_hi = std::max(16.0, 3.0 * j_max * std::log(j_max + 2.0));
    std::vector<double> ts, cum;
    for (int attempt = 0; attempt < 40; ++attempt) {
        const int n = std::max(8192, 64 * j_max);
        const double T = std::log(u_hi);
        ts.assign(1, 0.0);
        cum.assign(1, 0.0);
        double acc = 0.0;
        bool monotone = true;
        for (int i = 0; i < n; ++i) {
            const double t0 = T * i / n, t1 = T * (i + 1) / n;
            const double m = cell_mass(sys, t0, t1);
            if (m <= 0.0) monotone = false;
            acc += m;
            ts.push_back(t1);
            cum.push_back(acc);
        }
        if (!monotone)
            throw domain_error("discretize: Pi_C is not strictly increasing on the range");
        if (acc >= j_max - 0.5 + 2.0) break;
        u_hi *= 2.0;
        if (attempt == 39)
            throw resource_error("discretize: could not cover requested prime count");
    }

    std::vector<double> primes;
    primes.reserve(static_cast<size_t>(j_max));
    size_t lo = 0;
    for (int j = 1; j <= j_max; ++j) {
        const double target = j - 0.5;
        while (lo + 1 < cum.size() && cum[lo + 1] < target) ++lo;
        // bracket [ts[lo], ts[lo+1]]; refine by bisection on Pi within cell
        double ta = ts[lo], tb = ts[lo + 1];
        double ca = cum[lo];
        for (int it = 0; it < 60; ++it) {
            const double tm = 0.5 * (ta + tb);
            const double cm = ca + cell_mass(sys, ta, tm);
            if (cm < target) {
                ta = tm;
                ca = cm;
            } else {
                tb = tm;
            }
        }
        primes.push_back(std::exp(0.5 * (ta + tb)));
    }
    return PrimeSequence(std::move(primes), "discretized");
}

} // namespace beurling
