#include "beurling/zeros.hpp"

#include <algorithm>
#include <cmath>

#include "beurling/bounds.hpp"
#include "beurling/csvio.hpp"
#include "beurling/errors.hpp"
#include "beurling/gfun.hpp"

namespace beurling {

namespace {

double arg_diff(cxd a, cxd b) {
    // principal argument of b/a
    return std::arg(b / a);
}

struct Walker {
    const std::function<cxd(cxd)>& f;
    const WindingOptions& opt;
    double total = 0.0;
    long evals = 0;

    cxd probe(cxd z) {
        ++evals;
        const cxd v = f(z);
        if (std::abs(v) < opt.min_modulus)
            throw geometry_error("winding_count: |f| below min_modulus on the boundary; "
                                 "perturb the box");
        return v;
    }

    void segment(cxd z0, cxd z1, cxd f0, cxd f1, int depth) {
        const double d = arg_diff(f0, f1);
        if (std::abs(d) < M_PI / 2 && depth > 0) {
            total += d;
            return;
        }
        if (depth >= opt.max_depth)
            throw geometry_error("winding_count: phase step not settling; "
                                 "a zero may sit on the boundary");
        const cxd zm = 0.5 * (z0 + z1);
        const cxd fm = probe(zm);
        segment(z0, zm, f0, fm, depth + 1);
        segment(zm, z1, fm, f1, depth + 1);
    }

    void edge(cxd z0, cxd z1) {
        const double len = std::abs(z1 - z0);
        const int steps = std::max(1, static_cast<int>(std::ceil(len / opt.max_step)));
        cxd zprev = z0;
        cxd fprev = probe(z0);
        for (int i = 1; i <= steps; ++i) {
            const cxd z = z0 + (z1 - z0) * (static_cast<double>(i) / steps);
            const cxd fv = probe(z);
            segment(zprev, z, fprev, fv, 0);
            zprev = z;
            fprev = fv;
        }
    }
};

} // namespace

long winding_count(const std::function<cxd(cxd)>& f, const Rect& box, const WindingOptions& opt) {
    if (!(box.x0 < box.x1 && box.y0 < box.y1)) throw domain_error("winding_count: empty box");
    Walker w{f, opt};
    const cxd c00{box.x0, box.y0}, c10{box.x1, box.y0}, c11{box.x1, box.y1}, c01{box.x0, box.y1};
    w.edge(c00, c10);
    w.edge(c10, c11);
    w.edge(c11, c01);
    w.edge(c01, c00);
    const double turns = w.total / (2.0 * M_PI);
    const long n = std::lround(turns);
    if (std::abs(turns - static_cast<double>(n)) > 0.25)
        throw geometry_error("winding_count: phase total is not settling to an integer");
    return n;
}

BoxQuery::BoxQuery(double a, double t1, double t2, bool conj)
    : alpha(a), T1(t1), T2(t2), include_conjugates(conj) {
    if (!(alpha > 0.5 && alpha <= 1.0)) throw domain_error("BoxQuery: alpha must lie in (1/2, 1]");
    if (!(0.0 <= T1 && T1 < T2)) throw domain_error("BoxQuery: need 0 <= T1 < T2");
}

namespace {

cxd zeta_C_logderiv(const ContinuousSystem& sys, cxd s) {
    cxd acc = 1.0 / s - 1.0 / (s - cxd{1.0, 0.0});
    for (int k = sys.k0; k <= sys.k_max; ++k) {
        const ZeroParamD z = sys.zero_param(k);
        const cxd rho{z.beta, z.gamma};
        acc += z.ell * gfun::G_logderiv(z.ell * (s - rho));
        acc += z.ell * gfun::G_logderiv(z.ell * (s - std::conj(rho)));
    }
    return acc;
}

std::optional<ZeroRecord> refine_zero(const ContinuousSystem& sys, cxd seed) {
    cxd s = seed;
    for (int it = 0; it < 60; ++it) {
        const cxd L = zeta_C_logderiv(sys, s);
        const cxd step = 1.0 / L;
        s -= step;
        if (std::abs(step) < 1e-13) break;
    }
    const double res = std::abs(zeta_C(sys, s).value);
    if (res > 1e-8 || std::abs(s - seed) > 0.5) return std::nullopt;
    ZeroRecord r;
    r.rho = s;
    r.residual = res;
    r.source = ZeroSource::known_param;
    return r;
}

} // namespace

std::vector<ZeroRecord> known_zeros(const ContinuousSystem& sys, const BoxQuery& box) {
    if (!(box.alpha > 0.55))
        throw domain_error("known_zeros: alpha must clear the convergence margin 1/2 + 0.05");
    std::vector<ZeroRecord> out;
    if (sys.kind == SystemKind::None || sys.k_max < sys.k0) return out;

    auto covers = [&](double g) {
        return (box.T1 - 0.5 <= g && g <= box.T2 + 0.5) ||
               (box.include_conjugates && box.T1 - 0.5 <= -g && -g <= box.T2 + 0.5);
    };

    std::vector<cxd> seeds;
    for (int k = sys.k0; k <= sys.k_max; ++k) {
        const ZeroParamD z = sys.zero_param(k);
        if (z.gamma > 1e12) continue;
        // number of G-zeros that can still clear Re s >= alpha
        const double re_budget = 2.0 * z.ell * (z.beta - box.alpha) + 2.0;
        const int j_hi = static_cast<int>(std::min(4000.0, std::exp(std::min(re_budget, 9.0)) / M_PI + 2.0));
        static thread_local std::vector<cxd> gz_cache;
        if (static_cast<int>(gz_cache.size()) < j_hi)
            gz_cache = gfun::G_zeros(std::max(j_hi, 8));

        for (double sgn : {1.0, -1.0}) {
            if (sgn < 0 && !box.include_conjugates) continue;
            const cxd rho{z.beta, sgn * z.gamma};
            if (covers(sgn * z.gamma)) seeds.push_back(rho);
            for (int j = 1; j <= j_hi; ++j) {
                for (const cxd zj : {gz_cache[static_cast<size_t>(j - 1)],
                                     std::conj(gz_cache[static_cast<size_t>(j - 1)])}) {
                    const cxd cand = rho + zj / z.ell;
                    if (cand.real() < box.alpha - 0.05) continue;
                    if (covers(cand.imag())) seeds.push_back(cand);
                }
            }
        }
    }

    for (const cxd seed : seeds) {
        auto rec = refine_zero(sys, seed);
        if (!rec) continue;
        const double re = rec->rho.real(), im = rec->rho.imag();
        const bool in_main = (re >= box.alpha && re <= 1.0 && im >= box.T1 && im <= box.T2);
        const bool in_conj = box.include_conjugates &&
                             (re >= box.alpha && re <= 1.0 && -im >= box.T1 && -im <= box.T2);
        if (!in_main && !in_conj) continue;
        // seeds from different k can refine to the same (simple) zero of the
        // product; keep one record
        bool duplicate = false;
        for (auto& existing : out) {
            if (std::abs(existing.rho - rec->rho) < 1e-8) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) out.push_back(*rec);
    }
    std::sort(out.begin(), out.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.rho.imag() < b.rho.imag(); });
    return out;
}

namespace {

std::function<cxd(cxd)> zeta_fn(const ContinuousSystem& sys) {
    return [&sys](cxd s) { return zeta_C(sys, s).value; };
}

} // namespace

std::vector<long> strip_counts(const ContinuousSystem& sys, double alpha, double T,
                               double t_split) {
    if (!(alpha > 0.55)) throw domain_error("strip_counts: alpha must exceed 1/2 + margin");
    std::vector<long> counts;
    const auto f = zeta_fn(sys);
    double lo = t_split;
    for (long j = 0; lo < T; ++j) {
        const double hi = std::min(T, static_cast<double>(j + 1));
        if (hi <= lo) {
            counts.push_back(0);
            lo = hi;
            continue;
        }
        counts.push_back(winding_count(f, Rect{alpha, 1.0, lo, hi}));
        lo = hi;
    }
    return counts;
}

long N_alpha_T(const ContinuousSystem& sys, double alpha, double T, double t_split) {
    if (alpha >= 1.0) {
        // zeros sit strictly left of Re s = 1
        const auto f = zeta_fn(sys);
        return winding_count(f, Rect{1.0, 1.3, t_split, std::max(T, t_split + 1.0)}) +
               winding_count(f, Rect{1.0, 1.3, -std::max(T, t_split + 1.0), -t_split});
    }
    if (!(alpha > 0.55)) throw domain_error("N_alpha_T: alpha must exceed 1/2 + margin");
    const auto f = zeta_fn(sys);
    long total = 0;
    for (long c : strip_counts(sys, alpha, T, t_split)) total += c;
    // conjugate side
    double lo = t_split;
    for (long j = 0; lo < T; ++j) {
        const double hi = std::min(T, static_cast<double>(j + 1));
        if (hi > lo) total += winding_count(f, Rect{alpha, 1.0, -hi, -lo});
        lo = hi;
    }
    return total;
}

std::vector<DensityRow> density_report(const ContinuousSystem& sys,
                                       const std::vector<double>& alphas,
                                       const std::vector<double>& Ts, double eps_report,
                                       double T0) {
    std::vector<DensityRow> rows;
    const double theta = sys.theta;
    for (double alpha : alphas) {
        for (double T : Ts) {
            DensityRow r;
            r.alpha = alpha;
            r.T = T;
            r.N = N_alpha_T(sys, alpha, T);
            const double mu = (alpha - theta) / (1.0 - theta);
            r.proviso = (mu >= 2.0 / 3.0) && (T >= T0);
            if (mu > 0.0 && mu <= 1.0) {
                const double expo = (bounds::c_mu(mu) + eps_report) * (1.0 - mu);
                r.upper_bound = std::pow(T, expo) * std::pow(std::log(T), 9.0);
            } else {
                r.upper_bound = 0.0;
                r.proviso = false;
            }
            r.lower_bound = 0.0;
            if (sys.kind == SystemKind::Appendix && alpha > theta && alpha <= sys.beta) {
                const auto ae = bounds::appendix_exponents(sys.beta, theta, sys.eps);
                r.lower_bound = std::pow(T, ae.strip_exp(alpha));
            }
            r.pass_upper = !r.proviso || static_cast<double>(r.N) <= r.upper_bound;
            rows.push_back(r);
        }
    }
    return rows;
}

void export_density_csv(const std::vector<DensityRow>& rows, const std::string& path) {
    CsvWriter w(path, {"alpha", "T", "N", "upper_bound", "lower_bound", "proviso", "pass_upper"});
    for (const auto& r : rows)
        w.row({r.alpha, r.T, static_cast<double>(r.N), r.upper_bound, r.lower_bound,
               r.proviso ? 1.0 : 0.0, r.pass_upper ? 1.0 : 0.0});
}

void export_zeros_csv(const std::vector<ZeroRecord>& zeros, const std::string& path) {
    CsvWriter w(path, {"beta", "gamma", "multiplicity", "residual", "source"});
    for (const auto& z : zeros)
        w.row({z.rho.real(), z.rho.imag(), static_cast<double>(z.multiplicity), z.residual,
               z.source == ZeroSource::known_param ? 0.0 : 1.0});
}

ExplicitFormulaCheck explicit_formula_residual(const ContinuousSystem& sys, double x, double b,
                                               double T) {
    if (!(sys.theta < b && b < 1.0))
        throw domain_error("explicit_formula_residual: need theta < b < 1");
    if (!(4.0 <= T && T <= x)) throw domain_error("explicit_formula_residual: need 4 <= T <= x");

    std::vector<ZeroRecord> zs;
    if (sys.kind != SystemKind::None && b > 0.55) {
        const double t_split = 0.25;
        zs = known_zeros(sys, BoxQuery(b, t_split, T, true));
        // consistency: the winding count over the positive strip must agree
        long expect = 0;
        for (const auto& z : zs)
            if (z.rho.imag() > 0) expect += z.multiplicity;
        const auto f = zeta_fn(sys);
        const long wind = winding_count(f, Rect{b, 1.0, t_split, T});
        if (wind != expect)
            throw consistency_error("explicit_formula_residual: winding count " +
                                    std::to_string(wind) + " != known zeros " +
                                    std::to_string(expect));
    }

    double sum = 0.0;
    for (const auto& z : zs) {
        const cxd rho = z.rho;
        const cxd term = std::exp(rho * std::log(x)) / rho;
        sum += static_cast<double>(z.multiplicity) * term.real();
    }

    ExplicitFormulaCheck out;
    out.zeros_used = static_cast<long>(zs.size());
    const double psi = psi_C(sys, x);
    out.residual = std::abs(psi - (x - sum));
    out.budget = (std::pow(x, b) + x / T) * std::pow(std::log(x), 3.0);
    return out;
}

} // namespace beurling
