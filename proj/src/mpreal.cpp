#include "beurling/mpreal.hpp"

#include <vector>

namespace beurling {

std::string Real::str(size_t digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%zuRg", digits);
    std::vector<char> buf(digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

#define BEURLING_UNARY(name, fn)                      \
    Real name(const Real& x) {                        \
        Real r(x.prec());                             \
        fn(r.raw(), x.raw(), MPFR_RNDN);              \
        return r;                                     \
    }

BEURLING_UNARY(exp, mpfr_exp)
BEURLING_UNARY(log, mpfr_log)
BEURLING_UNARY(sin, mpfr_sin)
BEURLING_UNARY(cos, mpfr_cos)
BEURLING_UNARY(sqrt, mpfr_sqrt)
BEURLING_UNARY(abs, mpfr_abs)

#undef BEURLING_UNARY

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_rint(r.raw(), x.raw(), MPFR_RNDD);
    return r;
}

void sin_cos(const Real& x, Real& s, Real& c) {
    Real rs(x.prec()), rc(x.prec());
    mpfr_sin_cos(rs.raw(), rc.raw(), x.raw(), MPFR_RNDN);
    s = std::move(rs);
    c = std::move(rc);
}

Real pow(const Real& x, const Real& y) {
    Real r(x.prec() > y.prec() ? x.prec() : y.prec());
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long n) {
    Real r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real remainder(const Real& x, const Real& m) {
    Real r(x.prec() > m.prec() ? x.prec() : m.prec());
    mpfr_remainder(r.raw(), x.raw(), m.raw(), MPFR_RNDN);
    return r;
}

Complex exp(const Complex& z) {
    Real mag = exp(z.re);
    Real s(z.im.prec()), c(z.im.prec());
    sin_cos(z.im, s, c);
    return {mag * c, mag * s};
}

Complex reciprocal(const Complex& z) {
    Real d = z.abs2();
    return {z.re / d, -z.im / d};
}

} // namespace beurling
