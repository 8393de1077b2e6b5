#include "beurling/quadrature.hpp"

#include <cmath>
#include <cstddef>

namespace beurling {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric half listed).
const double kNodes[8] = {
    0.0000000000000000000,
    0.2011940939974345223,
    0.3941513470775633699,
    0.5709721726085388475,
    0.7244177313601700474,
    0.8482065834104272162,
    0.9372733924007059043,
    0.9879925180204854284,
};
const double kWeights[8] = {
    0.2025782419255612729,
    0.1984314853271115765,
    0.1861610000155622110,
    0.1662692058169939336,
    0.1395706779261543144,
    0.1071592204671719351,
    0.0703660474881081247,
    0.0307532419961172684,
};

} // namespace

double gauss15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = kWeights[0] * f(c);
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kNodes[i];
        s += kWeights[i] * (f(c - dx) + f(c + dx));
    }
    return s * h;
}

QuadResult integrate_panels(const std::function<double(double)>& f, double a, double b,
                            int panels) {
    if (panels < 1) panels = 1;
    auto composite = [&](int n) {
        std::vector<double> parts;
        parts.reserve(static_cast<size_t>(n));
        const double h = (b - a) / n;
        for (int i = 0; i < n; ++i)
            parts.push_back(gauss15(f, a + i * h, a + (i + 1) * h));
        return pairwise_sum(parts);
    };
    const double coarse = composite(panels);
    const double fine = composite(2 * panels);
    return {fine, std::abs(fine - coarse)};
}

namespace {

void adapt(const std::function<double(double)>& f, double a, double b, double whole,
           double tol, int depth, int max_depth, double& acc, double& err) {
    const double m = 0.5 * (a + b);
    const double left = gauss15(f, a, m);
    const double right = gauss15(f, m, b);
    const double diff = std::abs(left + right - whole);
    if (depth >= max_depth || diff <= tol) {
        acc += left + right;
        err += diff;
        return;
    }
    adapt(f, a, m, left, 0.5 * tol, depth + 1, max_depth, acc, err);
    adapt(f, m, b, right, 0.5 * tol, depth + 1, max_depth, acc, err);
}

} // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double tol, int max_depth) {
    QuadResult r;
    const double whole = gauss15(f, a, b);
    adapt(f, a, b, whole, tol, 0, max_depth, r.value, r.error_estimate);
    return r;
}

double pairwise_sum(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    std::vector<double> cur(xs);
    while (cur.size() > 1) {
        std::vector<double> next;
        next.reserve((cur.size() + 1) / 2);
        for (size_t i = 0; i + 1 < cur.size(); i += 2) next.push_back(cur[i] + cur[i + 1]);
        if (cur.size() % 2) next.push_back(cur.back());
        cur.swap(next);
    }
    return cur[0];
}

} // namespace beurling
