// beurling-lab: scalar quadrature helpers (Gauss-Legendre panels with
// a two-level error estimate, plus deterministic pairwise summation).

#ifndef BEURLING_QUADRATURE_HPP
#define BEURLING_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace beurling {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// One 15-point Gauss-Legendre panel on [a, b].
double gauss15(const std::function<double(double)>& f, double a, double b);

// Composite rule with `panels` equal panels; the error estimate comes from
// comparing against the rule with doubled panel count.
QuadResult integrate_panels(const std::function<double(double)>& f, double a, double b,
                            int panels);

// Adaptive bisection on top of gauss15 until the local two-level difference
// is below tol (absolute) or depth exceeds max_depth.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol, int max_depth = 28);

// Sums in pairwise (tree) order; deterministic for a fixed input order.
double pairwise_sum(const std::vector<double>& xs);

} // namespace beurling

#endif
