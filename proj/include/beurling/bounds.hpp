// beurling-lab: closed-form exponent functions and thresholds of the
// zero-density machinery, evaluated in double precision.
//
// Conventions: theta in [0,1) is the integer-counting error exponent,
// mu in (0,1] parametrizes alpha = (1-mu)*theta + mu, nu in (1,2] is the
// partial-sum length exponent.

#ifndef BEURLING_BOUNDS_HPP
#define BEURLING_BOUNDS_HPP

#include <string>
#include <vector>

namespace beurling::bounds {

// c(mu) = 4 mu / (2 mu^2 - 3 mu + 2); increasing on [2/3, 1], c(2/3)=3, c(1)=4.
double c_mu(double mu);

// Quadratic controlling the admissible range of the detection parameter X.
double F_nu(double alpha, double nu, double theta);

// Discriminant of F_nu: (1-theta)^2 (-7 nu^2 + 10 nu + 1).
double D_nu(double nu, double theta);

// Largest root of F_nu; domain error when the discriminant is negative
// (nu above (5 + sqrt 32)/7).
double alpha_of_nu(double nu, double theta);

// Optimal nu for a given alpha = (1-mu) theta + mu.
double nu_of_alpha(double mu);

// Epsilon-perturbed variants used to close the T_0 bookkeeping.
double c_mu_eps(double mu, double eps);
double nu_alpha_eps(double mu, double eps);

// Largest roots for the Halasz-Montgomery route and the Ramanujan-condition
// route; both dominate alpha_of_nu on (1, 3/2].
double hm_alpha_tilde(double nu, double theta);
double ram_alpha(double nu, double theta);
// nu making ram_alpha(nu) = alpha.
double ram_nu_of_alpha(double alpha, double theta);

// Exponent of T in the zero-density estimate for given alpha, nu.
double density_exponent(double alpha, double nu, double theta);

// Short-interval PNT thresholds.
double pnt_lambda_threshold(double b, double d1, double c, double L);
double pnt_lambda_cheb(double b, double d2, double c, double Kconst);

struct AppendixExponents {
    double line_exp;                    // exponent of T in N(beta, T) >> T^...
    double strip_exp(double sigma) const;
    double beta, theta, eps;
};

// Lower-bound exponents of the appendix family; requires 1/2 < theta < beta < 1.
AppendixExponents appendix_exponents(double beta, double theta, double eps);

struct ExponentRow {
    std::string name;
    std::vector<double> args;
    double value;
};

struct ExponentTable {
    double theta;
    std::vector<ExponentRow> entries;
};

// Evaluates every formula above on the given (mu, nu, eps) and returns the
// rows; used by the CLI `bounds` subcommand and by zeros::density_report.
ExponentTable make_table(double theta, double mu, double nu, double eps);

} // namespace beurling::bounds

#endif
