// beurling-lab: Beurling-Selberg extremal majorant and the mean-value /
// large-values machinery for generalized Dirichlet polynomials.

#ifndef BEURLING_SELBERG_HPP
#define BEURLING_SELBERG_HPP

#include <complex>
#include <string>
#include <vector>

#include "beurling/quadrature.hpp"
#include "beurling/systems.hpp"

namespace beurling {

using cxd = std::complex<double>;

struct DirichletPolynomial {
    // (frequency n_k >= 1, coefficient a_k), nondecreasing in frequency.
    std::vector<std::pair<double, std::complex<double>>> terms;
    double N_max = 1.0;

    DirichletPolynomial() = default;
    explicit DirichletPolynomial(std::vector<std::pair<double, std::complex<double>>> t,
                                 double n_max = 0.0);
    DirichletPolynomial(std::initializer_list<std::pair<double, std::complex<double>>> t)
        : DirichletPolynomial(std::vector<std::pair<double, std::complex<double>>>(t)) {}

    std::complex<double> eval(double t) const; // S(t) = sum a_k n_k^{-it}
    double coeff_norm2() const;                // sum |a_k|^2

    void export_csv(const std::string& path) const;
    static DirichletPolynomial from_csv(const std::string& path);
};

struct MajorantWindow {
    double T0 = 0.0;
    double T = 1.0;
    double eta = 1.0;
    double delta = 1.0; // spacing for the discrete mean value theorem

    MajorantWindow(double t0, double t, double eta_, double delta_ = 1.0);
};

struct WellSpacedSet {
    std::vector<double> points;
    // Validates containment in [T0+delta/2, T0+T-delta/2] and pairwise gaps.
    WellSpacedSet(std::vector<double> pts, const MajorantWindow& w);
};

// Certified upper evaluation of the Beurling function B: the truncation
// tails are bracketed with trigamma asymptotics and resolved in the
// direction that keeps the returned value an upper bound of the true B(x).
// In particular the return value always majorizes sgn(x).
double beurling_selberg_B(double x, int terms);

// F(x) = (B(eta(x-T0)) + B(eta(T0+T-x))) / 2; majorant of 1_[T0, T0+T].
double majorant_F(double x, const MajorantWindow& w);

// Integral of |S|^2 over the window, with two-level error estimate.
// quad_points must resolve the fastest phase log(N_max) with >= 8 points
// per period over the window.
QuadResult mvt_lhs(const DirichletPolynomial& S, const MajorantWindow& w, long quad_points);

// (T + 1/eta) * sum chi(n_k, eta N) |a_k|^2, chi taken from the stream.
double mvt_rhs(const DirichletPolynomial& S, const MajorantWindow& w,
               const IntegerStream& stream);

// The discrete variant carries the extra factor (log N + 1/delta).
double discrete_mvt_rhs(const DirichletPolynomial& S, const MajorantWindow& w,
                        const IntegerStream& stream);

// Predicted cap on the number of delta-well-spaced points with |S| >= V.
double large_values_cap(const DirichletPolynomial& S, const MajorantWindow& w,
                        const IntegerStream& stream, double V);

double sum_over_points(const DirichletPolynomial& S, const WellSpacedSet& pts); // sum |S(t)|^2

} // namespace beurling

#endif
