#include "beurling/bounds.hpp"

#include <cmath>

#include "beurling/errors.hpp"

namespace beurling::bounds {

double c_mu(double mu) {
    if (mu <= 0.0 || mu > 1.0) throw domain_error("c_mu: mu must lie in (0,1]");
    return 4.0 * mu / (2.0 * mu * mu - 3.0 * mu + 2.0);
}

double F_nu(double alpha, double nu, double theta) {
    return 2.0 * nu * alpha * alpha - (3.0 * nu - 1.0 + (nu + 1.0) * theta) * alpha +
           (2.0 * nu - 2.0 + (3.0 - nu) * theta + (nu - 1.0) * theta * theta);
}

double D_nu(double nu, double theta) {
    const double om = 1.0 - theta;
    return om * om * (-7.0 * nu * nu + 10.0 * nu + 1.0);
}

double alpha_of_nu(double nu, double theta) {
    const double disc = -7.0 * nu * nu + 10.0 * nu + 1.0;
    if (disc < 0.0)
        throw domain_error("alpha_of_nu: negative discriminant, nu exceeds (5+sqrt(32))/7");
    return (3.0 * nu - 1.0 + (nu + 1.0) * theta + (1.0 - theta) * std::sqrt(disc)) / (4.0 * nu);
}

double nu_of_alpha(double mu) {
    return (2.0 - mu) / (2.0 * mu * mu - 3.0 * mu + 2.0);
}

double c_mu_eps(double mu, double eps) {
    const double den = 2.0 * mu * mu - 3.0 * mu + 2.0 - 2.0 * eps * (4.0 * mu - 3.0 - 4.0 * eps);
    return (4.0 * mu + 8.0 * eps * (1.0 - mu + 2.0 * eps)) / den;
}

double nu_alpha_eps(double mu, double eps) {
    const double den = 2.0 * mu * mu - 3.0 * mu + 2.0 - 2.0 * eps * (4.0 * mu - 3.0 - 4.0 * eps);
    return (2.0 - mu + 2.0 * eps) / den;
}

double hm_alpha_tilde(double nu, double theta) {
    const double disc = -7.0 * nu * nu + 10.0 * nu + 1.0;
    if (disc < 0.0)
        throw domain_error("hm_alpha_tilde: negative discriminant, nu exceeds (5+sqrt(32))/7");
    return (5.0 * nu + 1.0 + (3.0 * nu - 1.0) * theta + (1.0 - theta) * std::sqrt(disc)) /
           (8.0 * nu);
}

double ram_alpha(double nu, double theta) {
    const double om = 1.0 - theta;
    const double disc = (8.0 * theta - 7.0) * nu * nu + 10.0 * om * nu + om * om;
    if (disc < 0.0) throw domain_error("ram_alpha: negative discriminant");
    return (3.0 * nu + theta - 1.0 + std::sqrt(disc)) / (4.0 * nu);
}

double ram_nu_of_alpha(double alpha, double theta) {
    return (1.0 - theta) * (2.0 - alpha) / (2.0 * alpha * alpha - 3.0 * alpha + 2.0 - theta);
}

double density_exponent(double alpha, double nu, double theta) {
    const double r = (1.0 - alpha) / (1.0 - theta);
    return r * (2.0 + 2.0 * nu - 4.0 * nu * r);
}

double pnt_lambda_threshold(double b, double d1, double c, double L) {
    if (d1 <= 0.0 || c <= 0.0 || L <= 0.0) throw domain_error("pnt_lambda_threshold: inputs must be positive");
    return std::max(b, 1.0 - d1 / (c * d1 + L));
}

double pnt_lambda_cheb(double b, double d2, double c, double Kconst) {
    if (d2 <= 0.0 || c <= 0.0 || Kconst <= 0.0) throw domain_error("pnt_lambda_cheb: inputs must be positive");
    return std::max(b, 1.0 - d2 / (c * d2 + std::max(std::log(2.0 * Kconst), c * d2)));
}

double AppendixExponents::strip_exp(double sigma) const {
    return (1.0 + beta - 2.0 * sigma) * (1.0 - eps) / (1.0 + beta - 2.0 * theta);
}

AppendixExponents appendix_exponents(double beta, double theta, double eps) {
    if (!(0.5 < theta && theta < beta && beta < 1.0))
        throw domain_error("appendix_exponents: need 1/2 < theta < beta < 1");
    AppendixExponents e;
    e.beta = beta;
    e.theta = theta;
    e.eps = eps;
    e.line_exp = (1.0 - beta) * (1.0 - eps) / (1.0 + beta - 2.0 * theta);
    return e;
}

ExponentTable make_table(double theta, double mu, double nu, double eps) {
    ExponentTable t;
    t.theta = theta;
    const double alpha = (1.0 - mu) * theta + mu;
    t.entries.push_back({"c_mu", {mu}, c_mu(mu)});
    t.entries.push_back({"alpha", {mu, theta}, alpha});
    t.entries.push_back({"nu_of_alpha", {mu}, nu_of_alpha(mu)});
    t.entries.push_back({"c_mu_eps", {mu, eps}, c_mu_eps(mu, eps)});
    t.entries.push_back({"nu_alpha_eps", {mu, eps}, nu_alpha_eps(mu, eps)});
    t.entries.push_back({"F_nu", {alpha, nu, theta}, F_nu(alpha, nu, theta)});
    t.entries.push_back({"D_nu", {nu, theta}, D_nu(nu, theta)});
    if (D_nu(nu, theta) >= 0.0) {
        t.entries.push_back({"alpha_of_nu", {nu, theta}, alpha_of_nu(nu, theta)});
        t.entries.push_back({"hm_alpha_tilde", {nu, theta}, hm_alpha_tilde(nu, theta)});
    }
    t.entries.push_back({"ram_alpha", {nu, theta}, ram_alpha(nu, theta)});
    t.entries.push_back({"density_exponent", {alpha, nu, theta}, density_exponent(alpha, nu, theta)});
    return t;
}

} // namespace beurling::bounds
