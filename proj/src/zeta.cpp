#include "beurling/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "beurling/csvio.hpp"
#include "beurling/errors.hpp"

namespace beurling {

namespace {

cxd power_term(double n, cxd s) {
    // n^{-s} = exp(-s log n)
    const double ln = std::log(n);
    const double mag = std::exp(-s.real() * ln);
    const double ph = -s.imag() * ln;
    return {mag * std::cos(ph), mag * std::sin(ph)};
}

struct NeumaierSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double total() const { return s + c; }
};

struct ExpKey {
    std::vector<std::pair<uint32_t, uint32_t>> e;
    bool operator==(const ExpKey& o) const { return e == o.e; }
};

struct ExpKeyHash {
    size_t operator()(const ExpKey& k) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (auto [i, m] : k.e) {
            h ^= (static_cast<size_t>(i) << 32 | m) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::vector<std::pair<uint32_t, uint32_t>> merge_exponents(
    const std::vector<std::pair<uint32_t, uint32_t>>& a,
    const std::vector<std::pair<uint32_t, uint32_t>>& b) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            out.push_back(a[i++]);
        else if (a[i].first > b[j].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

} // namespace

cxd zeta_partial(const IntegerStream& stream, cxd s, double Y) {
    if (Y > stream.cutoff()) throw domain_error("zeta_partial: Y beyond stream cutoff");
    NeumaierSum re, im;
    for (const auto& it : stream.items()) {
        if (it.value > Y) break;
        const cxd t = power_term(it.value, s);
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.total(), im.total()};
}

ZetaApprox zeta_approx(const IntegerStream& stream, const WellBehavedCertificate& cert,
                       cxd s, double Y) {
    const double sigma = s.real();
    if (sigma <= cert.theta)
        throw domain_error("zeta_approx: Re s must exceed the certificate theta");
    if (s == cxd{1.0, 0.0}) throw domain_error("zeta_approx: s = 1 is the pole");
    ZetaApprox out;
    const cxd one_minus_s = cxd{1.0, 0.0} - s;
    // Y^{1-s}
    const double lnY = std::log(Y);
    const cxd Ypow = std::exp(one_minus_s.real() * lnY) *
                     cxd{std::cos(one_minus_s.imag() * lnY), std::sin(one_minus_s.imag() * lnY)};
    out.value = zeta_partial(stream, s, Y) + cert.A * Ypow / (s - cxd{1.0, 0.0});
    const double T = std::max(std::abs(s.imag()), 1.0);
    const double K = cert.K_const;
    out.err_bound = cert.A * std::pow(Y, 1.0 - sigma) / T +
                    K * std::pow(Y, cert.theta - sigma) +
                    (std::abs(s.imag()) + 2.0) * K * std::pow(Y, cert.theta - sigma) /
                        (sigma - cert.theta);
    return out;
}

Mollifier mollifier_M(const IntegerStream& stream, cxd s, double X) {
    if (X > stream.cutoff()) throw domain_error("mollifier_M: X beyond stream cutoff");
    NeumaierSum re, im;
    for (const auto& it : stream.items()) {
        if (it.value > X) break;
        const int mu = moebius(it);
        if (mu == 0) continue;
        const cxd t = static_cast<double>(mu) * power_term(it.value, s);
        re.add(t.real());
        im.add(t.imag());
    }
    Mollifier m;
    m.value = {re.total(), im.total()};
    m.trivial_bound = std::pow(X, 1.0 - s.real()) * std::log(X + 1.0);
    return m;
}

DetectionConfig::DetectionConfig(double T_, double nu_, double theta_, double X_, double alpha_)
    : T(T_), nu(nu_), theta(theta_), X(X_), alpha(alpha_) {
    if (!(T > 2.0)) throw domain_error("DetectionConfig: T must exceed 2");
    if (!(nu > 1.0 && nu <= 2.0)) throw domain_error("DetectionConfig: nu must lie in (1,2]");
    if (!(theta >= 0.0 && theta < 1.0)) throw domain_error("DetectionConfig: theta in [0,1)");
    if (!(X >= 1.0)) throw domain_error("DetectionConfig: X must be >= 1");
    if (X > sum_length()) throw domain_error("DetectionConfig: X exceeds T^{nu/(1-theta)}");
}

double DetectionConfig::sum_length() const { return std::pow(T, nu / (1.0 - theta)); }

DetectionCoefficients detection_coefficients(const IntegerStream& stream, double X, double Y) {
    if (!(Y >= 1.0)) throw domain_error("detection_coefficients: Y must be >= 1");
    if (!(X >= 1.0)) throw domain_error("detection_coefficients: X must be >= 1");
    if (X * Y > stream.cutoff() * (1.0 + 1e-12))
        throw resource_error("detection_coefficients: X*Y exceeds the stream cutoff");

    const auto& items = stream.items();

    // Map exponent vectors to stream indices so products land on the exact
    // stream entry regardless of double rounding in the product value.
    std::unordered_map<ExpKey, size_t, ExpKeyHash> lookup;
    lookup.reserve(items.size() * 2);
    for (size_t k = 0; k < items.size(); ++k) lookup[ExpKey{items[k].exponents}] = k;

    std::unordered_map<size_t, long> acc;
    for (size_t j = 0; j < items.size(); ++j) {
        const auto& mol = items[j];
        if (mol.value > X) break;
        const int mu = moebius(mol);
        if (mu == 0) continue;
        for (size_t l = 0; l < items.size(); ++l) {
            const auto& part = items[l];
            if (part.value > Y) break;
            if (part.value * mol.value > X * Y * (1.0 + 1e-12)) break;
            ExpKey key{merge_exponents(part.exponents, mol.exponents)};
            auto it = lookup.find(key);
            if (it == lookup.end())
                throw consistency_error("detection_coefficients: product missing from stream");
            acc[it->second] += mu;
        }
    }

    DetectionCoefficients out;
    out.X = X;
    out.Y = Y;
    std::vector<std::pair<size_t, long>> nz(acc.begin(), acc.end());
    std::sort(nz.begin(), nz.end());
    for (auto& [idx, v] : nz) {
        if (v == 0) continue;
        out.index.push_back(idx);
        out.a.push_back(v);
    }
    return out;
}

DetectionRun dyadic_blocks(const IntegerStream& stream, const DetectionCoefficients& coeffs,
                           double X, double Y, double alpha) {
    (void)alpha;
    DetectionRun run;
    run.mollifier_len = X;
    run.Y = Y;
    const long L = std::max<long>(0, static_cast<long>(std::ceil(std::log2(Y))) - 1);
    run.L = L;
    const auto& items = stream.items();

    std::vector<std::vector<std::pair<double, cxd>>> terms(static_cast<size_t>(L) + 1);
    for (size_t i = 0; i < coeffs.index.size(); ++i) {
        const double v = items[coeffs.index[i]].value;
        if (v <= X) continue; // the n = 1 head stays outside the blocks
        long l = static_cast<long>(std::floor(std::log2(v / X)));
        // land exactly in (2^l X, 2^{l+1} X]
        while (l > 0 && v <= std::ldexp(X, static_cast<int>(l))) --l;
        while (l < L && v > std::ldexp(X, static_cast<int>(l) + 1)) ++l;
        if (l < 0 || l > L) throw consistency_error("dyadic_blocks: value outside block range");
        terms[static_cast<size_t>(l)].emplace_back(v, cxd(static_cast<double>(coeffs.a[i]), 0.0));
    }
    for (long l = 0; l <= L; ++l) {
        run.block_N.push_back(std::ldexp(X, static_cast<int>(l)));
        run.blocks.emplace_back(std::move(terms[static_cast<size_t>(l)]));
    }

    std::vector<std::pair<double, cxd>> mol;
    for (const auto& it : items) {
        if (it.value > X) break;
        const int mu = moebius(it);
        if (mu != 0) mol.emplace_back(it.value, cxd(static_cast<double>(mu), 0.0));
    }
    run.mollifier = DirichletPolynomial(std::move(mol));
    return run;
}

namespace {

cxd eval_at_s(const DirichletPolynomial& p, cxd s) {
    NeumaierSum re, im;
    for (const auto& [n, a] : p.terms) {
        const cxd t = a * power_term(n, s);
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.total(), im.total()};
}

} // namespace

DetectionCheck detection_check(const DetectionRun& run,
                               const std::function<cxd(cxd)>& zeta_eval, cxd s,
                               bool generic_point) {
    const cxd zeta_val = zeta_eval(s);
    if (!generic_point && std::abs(zeta_val) > 1e-6)
        throw usage_error("detection_check: s is not a numerical zero; "
                          "flag it as a generic point for diagnostics");

    const cxd M = eval_at_s(run.mollifier, s);
    cxd sumD{0.0, 0.0};
    double maxD = 0.0;
    for (const auto& b : run.blocks) {
        const cxd d = eval_at_s(b, s);
        sumD += d;
        maxD = std::max(maxD, std::abs(d));
    }

    DetectionCheck out;
    out.lhs = std::abs(zeta_val * M - sumD);
    out.slack = std::abs(zeta_val * M - (cxd{1.0, 0.0} + sumD));
    out.max_block = maxD;
    out.threshold = 1.0 / (2.0 * static_cast<double>(run.L + 1)) - out.slack;
    out.pass = maxD >= out.threshold;
    return out;
}

void export_detection_csv(const DetectionRun& run, const std::vector<cxd>& zeros,
                          const std::string& path) {
    CsvWriter w(path, {"rho_re", "rho_im", "l", "N", "block_size", "max_abs_a", "abs_D_l"});
    for (const cxd& rho : zeros) {
        for (size_t l = 0; l < run.blocks.size(); ++l) {
            const auto& b = run.blocks[l];
            double maxa = 0.0;
            for (const auto& [n, a] : b.terms) maxa = std::max(maxa, std::abs(a));
            w.row({rho.real(), rho.imag(), static_cast<double>(l), run.block_N[l],
                   static_cast<double>(b.terms.size()), maxa, std::abs(eval_at_s(b, rho))});
        }
    }
}

} // namespace beurling
