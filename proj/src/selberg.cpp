#include "beurling/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "beurling/csvio.hpp"
#include "beurling/errors.hpp"

namespace beurling {

DirichletPolynomial::DirichletPolynomial(
    std::vector<std::pair<double, std::complex<double>>> t, double n_max)
    : terms(std::move(t)) {
    for (auto& [n, a] : terms)
        if (!(n >= 1.0)) throw domain_error("DirichletPolynomial: frequencies must be >= 1");
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    N_max = terms.empty() ? 1.0 : terms.back().first;
    if (n_max > N_max) N_max = n_max;
}

std::complex<double> DirichletPolynomial::eval(double t) const {
    double re = 0.0, im = 0.0;
    for (const auto& [n, a] : terms) {
        const double phase = -t * std::log(n);
        const double c = std::cos(phase), s = std::sin(phase);
        re += a.real() * c - a.imag() * s;
        im += a.real() * s + a.imag() * c;
    }
    return {re, im};
}

double DirichletPolynomial::coeff_norm2() const {
    double s = 0.0;
    for (const auto& [n, a] : terms) s += std::norm(a);
    return s;
}

void DirichletPolynomial::export_csv(const std::string& path) const {
    CsvWriter w(path, {"n_k", "re_a_k", "im_a_k"});
    for (const auto& [n, a] : terms) w.row({n, a.real(), a.imag()});
}

DirichletPolynomial DirichletPolynomial::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open polynomial CSV: " + path);
    std::vector<std::pair<double, std::complex<double>>> terms;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("n_k", 0) == 0) continue;
        double n, re, im;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &n, &re, &im) == 3)
            terms.emplace_back(n, std::complex<double>{re, im});
    }
    return DirichletPolynomial(std::move(terms));
}

MajorantWindow::MajorantWindow(double t0, double t, double eta_, double delta_)
    : T0(t0), T(t), eta(eta_), delta(delta_) {
    if (!(T > 0.0) || !(eta > 0.0) || !(delta > 0.0))
        throw domain_error("MajorantWindow: T, eta, delta must be positive");
}

WellSpacedSet::WellSpacedSet(std::vector<double> pts, const MajorantWindow& w)
    : points(std::move(pts)) {
    std::sort(points.begin(), points.end());
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i] < w.T0 + w.delta / 2 - 1e-12 || points[i] > w.T0 + w.T - w.delta / 2 + 1e-12)
            throw domain_error("WellSpacedSet: point outside window core");
        if (i > 0 && points[i] - points[i - 1] < w.delta - 1e-12)
            throw domain_error("WellSpacedSet: gap below delta");
    }
}

namespace {

// sin(pi x)/(pi x), stable near 0 and exact at integers.
double sinc_pi(double y) {
    if (y == 0.0) return 1.0;
    const double r = y - std::nearbyint(y);
    double s = std::sin(M_PI * r);
    if (static_cast<long long>(std::nearbyint(y)) % 2 != 0) s = -s;
    return s / (M_PI * y);
}

// sin^2(pi x) with argument reduction.
double sin2_pi(double x) {
    const double r = x - std::nearbyint(x);
    const double s = std::sin(M_PI * r);
    return s * s;
}

// Enveloping brackets of trigamma(z) for z > 0. The asymptotic series
// 1/z + 1/(2z^2) + sum B_2k / z^{2k+1} has alternating tail, so stopping
// before a positive term underestimates and before a negative term
// overestimates.
void trigamma_brackets(double z, double& lo, double& hi) {
    double shift = 0.0;
    while (z < 16.0) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    const double iz = 1.0 / z, iz2 = iz * iz;
    // B_2 = 1/6, B_4 = -1/30, B_6 = 1/42, B_8 = -1/30
    double base = iz + 0.5 * iz2;
    const double t1 = (1.0 / 6.0) * iz2 * iz;
    const double t2 = -(1.0 / 30.0) * iz2 * iz2 * iz;
    const double t3 = (1.0 / 42.0) * iz2 * iz2 * iz2 * iz;
    lo = shift + base + t1 + t2;      // next term positive
    hi = shift + base + t1 + t2 + t3; // next term negative
}

} // namespace

double beurling_selberg_B(double x, int terms) {
    if (terms < 8) throw domain_error("beurling_selberg_B: need terms >= 8");
    // The tail brackets require the truncation point to clear |x|.
    const int M = std::max<long>(terms, static_cast<long>(std::ceil(std::abs(x))) + terms);

    std::vector<double> parts;
    parts.reserve(2 * static_cast<size_t>(M) + 3);
    for (int n = 0; n <= M; ++n) {
        const double sp = sinc_pi(x - n);
        parts.push_back(sp * sp);
    }
    for (int n = 1; n <= M; ++n) {
        const double sm = sinc_pi(x + n);
        parts.push_back(-sm * sm);
    }
    const double s0 = sinc_pi(x);
    parts.push_back(2.0 * x * s0 * s0);

    const double s2 = sin2_pi(x) / (M_PI * M_PI);
    double plo, phi, mlo, mhi;
    trigamma_brackets(M + 1.0 - x, plo, phi); // sum_{n>M} (x-n)^{-2}
    trigamma_brackets(M + 1.0 + x, mlo, mhi); // sum_{n>M} (x+n)^{-2}
    parts.push_back(s2 * phi);
    parts.push_back(-s2 * mlo);
    return pairwise_sum(parts);
}

double majorant_F(double x, const MajorantWindow& w) {
    const int terms = 256;
    return 0.5 * (beurling_selberg_B(w.eta * (x - w.T0), terms) +
                  beurling_selberg_B(w.eta * (w.T0 + w.T - x), terms));
}

QuadResult mvt_lhs(const DirichletPolynomial& S, const MajorantWindow& w, long quad_points) {
    const double freq = std::log(std::max(S.N_max, 1.0 + 1e-12));
    // >= 8 points per period of the fastest oscillation across the window
    const long required = std::max<long>(16, static_cast<long>(std::ceil(w.T * freq / (2.0 * M_PI) * 8.0)));
    if (quad_points < required)
        throw precision_error("mvt_lhs: oscillation unresolved; need quad_points >= " +
                              std::to_string(required));
    const int panels = static_cast<int>(std::max<long>(1, quad_points / 15));
    auto f = [&](double t) { return std::norm(S.eval(t)); };
    return integrate_panels(f, w.T0, w.T0 + w.T, panels);
}

double mvt_rhs(const DirichletPolynomial& S, const MajorantWindow& w,
               const IntegerStream& stream) {
    const double window = w.eta * S.N_max;
    double s = 0.0;
    for (const auto& [n, a] : S.terms) {
        if (!stream.contains_value(n))
            throw domain_error("mvt_rhs: polynomial frequency not found in stream");
        s += static_cast<double>(stream.chi(n, window)) * std::norm(a);
    }
    return (w.T + 1.0 / w.eta) * s;
}

double discrete_mvt_rhs(const DirichletPolynomial& S, const MajorantWindow& w,
                        const IntegerStream& stream) {
    return (std::log(S.N_max) + 1.0 / w.delta) * mvt_rhs(S, w, stream);
}

double large_values_cap(const DirichletPolynomial& S, const MajorantWindow& w,
                        const IntegerStream& stream, double V) {
    if (!(V > 0.0)) throw domain_error("large_values_cap: V must be positive");
    return discrete_mvt_rhs(S, w, stream) / (V * V);
}

double sum_over_points(const DirichletPolynomial& S, const WellSpacedSet& pts) {
    double s = 0.0;
    for (double t : pts.points) s += std::norm(S.eval(t));
    return s;
}

} // namespace beurling
