#include "beurling/gfun.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "beurling/errors.hpp"

namespace beurling::gfun {

using boost::multiprecision::cpp_int;
using std::complex;

namespace {

cpp_int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    cpp_int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

cpp_int factorial(int n) {
    cpp_int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Irwin-Hall-type piece: the j-fold convolution of 1_[1,2] restricted to
// [j+i, j+i+1), expanded in w-monomials.
std::vector<Rational> conv_power_piece(int j, int i) {
    std::vector<Rational> coeffs(static_cast<size_t>(j), Rational(0));
    const Rational inv_fact(1, factorial(j - 1));
    for (int l = 0; l <= i; ++l) {
        const cpp_int cjl = binomial(j, l);
        const int sign = (l % 2 == 0) ? 1 : -1;
        // (w - (j + l))^{j-1}
        const cpp_int c = j + l;
        cpp_int cpow = 1; // c^{j-1-d} built from the top
        std::vector<cpp_int> cpows(static_cast<size_t>(j));
        for (int d = j - 1; d >= 0; --d) {
            cpows[static_cast<size_t>(d)] = cpow;
            cpow *= c;
        }
        for (int d = 0; d <= j - 1; ++d) {
            cpp_int term = binomial(j - 1, d) * cpows[static_cast<size_t>(d)];
            if ((j - 1 - d) % 2 != 0) term = -term;
            coeffs[static_cast<size_t>(d)] += Rational(sign * cjl * term) * inv_fact;
        }
    }
    return coeffs;
}

std::vector<Rational> build_piece(int m, int depth) {
    std::vector<Rational> out(static_cast<size_t>(std::max(1, m)), Rational(0));
    if (m < 1) return out;
    // valid j on [m, m+1): j <= w < 2j, i.e. ceil((m+1)/2) <= j <= m
    for (int j = (m + 2) / 2; j <= std::min(m, depth); ++j) {
        const int i = m - j;
        if (i < 0 || i > j - 1) continue;
        auto piece = conv_power_piece(j, i);
        const Rational inv_j(1, j);
        for (size_t d = 0; d < piece.size(); ++d) out[d] += piece[d] * inv_j;
    }
    return out;
}

std::map<int, std::vector<Rational>> g_cache;
std::mutex g_cache_mutex;

Real rational_to_real(const Rational& q, mpfr_prec_t prec) {
    const std::string num = numerator(q).str();
    const std::string den = denominator(q).str();
    return Real(num, prec) / Real(den, prec);
}

// working precision per piece; alternating coefficients lose about 2.5 bits
// per degree
mpfr_prec_t piece_prec(size_t degree) { return 64 + static_cast<mpfr_prec_t>(3 * degree); }

std::map<std::pair<int, mpfr_prec_t>, std::vector<Real>> g_real_cache;
std::mutex g_real_cache_mutex;

const std::vector<Real>& g_piece_real_cached(int m, mpfr_prec_t prec);

double eval_piece_at(int m, double w) {
    const auto& coeffs = g_piece_real_cached(m, 0); // 0 = default bucket
    Real acc(0.0, coeffs.empty() ? 64 : coeffs[0].prec());
    const Real wr(w, acc.prec());
    for (size_t d = coeffs.size(); d-- > 0;) acc = acc * wr + coeffs[d];
    return acc.to_double();
}

} // namespace

complex<double> G_eval(complex<double> z) {
    if (std::abs(z) < 1e-3) {
        // G = sum_{m>=1} (-1)^m (1 - 2^{m+1})/(m+1)! z^m
        complex<double> acc{0.0, 0.0}, zp{1.0, 0.0};
        double fact = 1.0, two = 2.0;
        for (int m = 1; m <= 12; ++m) {
            zp *= z;
            fact *= m + 1;
            two *= 2.0;
            double c = (1.0 - two) / fact;
            if (m % 2 != 0) c = -c;
            acc += c * zp;
        }
        return acc;
    }
    return 1.0 - (std::exp(-z) - std::exp(-2.0 * z)) / z;
}

complex<double> G_logderiv(complex<double> z) {
    if (std::abs(z) < 1e-3) {
        if (z == complex<double>{0.0, 0.0})
            throw domain_error("G_logderiv: simple pole at z = 0");
        complex<double> num{0.0, 0.0}, den{0.0, 0.0}, zp{1.0, 0.0};
        double fact = 1.0, two = 2.0;
        for (int m = 1; m <= 12; ++m) {
            fact *= m + 1;
            two *= 2.0;
            double c = (1.0 - two) / fact;
            if (m % 2 != 0) c = -c;
            den += c * zp;                             // G / z
            num += static_cast<double>(m) * c * zp;    // G' collected as z^{m-1}
            zp *= z;
        }
        return num / (z * den);
    }
    const complex<double> e1 = std::exp(-z), e2 = std::exp(-2.0 * z);
    const complex<double> Gp = ((e1 - 2.0 * e2) * z + (e1 - e2)) / (z * z);
    return Gp / G_eval(z);
}

const std::vector<Rational>& g_polynomial_w(int m) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(m);
    if (it == g_cache.end()) it = g_cache.emplace(m, build_piece(m, m)).first;
    return it->second;
}

namespace {

const std::vector<Real>& g_piece_real_cached(int m, mpfr_prec_t prec) {
    const auto& piece = g_polynomial_w(m);
    if (prec == 0) prec = piece_prec(piece.size());
    std::lock_guard<std::mutex> lock(g_real_cache_mutex);
    auto key = std::make_pair(m, prec);
    auto it = g_real_cache.find(key);
    if (it == g_real_cache.end()) {
        std::vector<Real> conv;
        conv.reserve(piece.size());
        for (const auto& q : piece) conv.push_back(rational_to_real(q, prec));
        it = g_real_cache.emplace(key, std::move(conv)).first;
    }
    return it->second;
}

} // namespace

std::vector<Rational> g_polynomial_w_depth(int m, int depth) { return build_piece(m, depth); }

double g_density(double u, int depth) {
    if (!(u >= 1.0)) throw domain_error("g_density: u must be >= 1");
    const double w = std::log(u);
    if (w < 1.0) return 0.0;
    const int m = static_cast<int>(std::floor(w));
    if (m >= 2 * depth) return 0.0;
    if (depth >= m) return eval_piece_at(m, w);
    // truncated depth: evaluate the reduced piece without caching
    const auto piece = g_polynomial_w_depth(m, depth);
    const mpfr_prec_t prec = piece_prec(piece.size());
    Real acc(0.0, prec);
    const Real wr(w, prec);
    for (size_t d = piece.size(); d-- > 0;) acc = acc * wr + rational_to_real(piece[d], prec);
    return acc.to_double();
}

double g_logweight_derivative(double w) {
    if (w < 1.0) return 0.0;
    const int m = static_cast<int>(std::floor(w));
    const auto& coeffs = g_piece_real_cached(m, 0);
    // d/dw [ w * P(w) ] = P(w) + w P'(w)
    const mpfr_prec_t prec = coeffs.empty() ? 64 : coeffs[0].prec();
    Real p(0.0, prec), dp(0.0, prec);
    const Real wr(w, prec);
    for (size_t d = coeffs.size(); d-- > 0;) {
        dp = dp * wr + p;
        p = p * wr + coeffs[d];
    }
    return (p + wr * dp).to_double();
}

std::vector<Real> g_polynomial_real(int m, mpfr_prec_t prec) {
    return g_piece_real_cached(m, prec);
}

std::vector<complex<double>> G_zeros(int j_max) {
    if (j_max < 1) throw domain_error("G_zeros: j_max must be >= 1");
    std::vector<complex<double>> zeros;
    zeros.reserve(static_cast<size_t>(j_max));
    for (int j = 1; j <= j_max; ++j) {
        complex<double> z{-0.5 * std::log(M_PI * j), M_PI * (j + 0.25)};
        const complex<double> seed = z;
        bool converged = false;
        for (int it = 0; it < 80; ++it) {
            const complex<double> g = G_eval(z);
            if (std::abs(g) <= 1e-13) {
                converged = true;
                break;
            }
            // Newton step G/G' written through the log-derivative so the
            // small-|z| series branch is reused.
            z -= 1.0 / G_logderiv(z);
        }
        if (!converged || std::abs(G_eval(z)) > 1e-12)
            throw precision_error("G_zeros: Newton failed from seed " + std::to_string(seed.real()) +
                                  "+" + std::to_string(seed.imag()) + "i");
        zeros.push_back(z);
    }
    return zeros;
}

} // namespace beurling::gfun
