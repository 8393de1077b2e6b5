// beurling-lab: thin value-semantics wrapper around MPFR.
//
// The oscillatory antiderivatives in the continuous module and the phase
// solves of the short-interval experiment need sin/cos of arguments of size
// up to ~2^400 with ~50 digits left after cancellation, so double is not an
// option there. Each Real carries its own precision; binary operations
// compute at the larger of the two operand precisions. Rounding is always
// to nearest.

#ifndef BEURLING_MPREAL_HPP
#define BEURLING_MPREAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

namespace beurling {

class Real {
  public:
    explicit Real(mpfr_prec_t prec = 53) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(const std::string& s, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 53); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    std::string str(size_t digits = 30) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // arithmetic ---------------------------------------------------------
    friend Real operator+(const Real& a, const Real& b) {
        Real r(pmax(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(pmax(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(pmax(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(pmax(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    friend Real operator*(const Real& a, double b) { return a * Real(b, a.prec()); }
    friend Real operator*(double a, const Real& b) { return Real(a, b.prec()) * b; }
    friend Real operator+(const Real& a, double b) { return a + Real(b, a.prec()); }
    friend Real operator+(double a, const Real& b) { return Real(a, b.prec()) + b; }
    friend Real operator-(const Real& a, double b) { return a - Real(b, a.prec()); }
    friend Real operator-(double a, const Real& b) { return Real(a, b.prec()) - b; }
    friend Real operator/(const Real& a, double b) { return a / Real(b, a.prec()); }
    friend Real operator/(double a, const Real& b) { return Real(a, b.prec()) / b; }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

  private:
    static mpfr_prec_t pmax(const Real& a, const Real& b) {
        mpfr_prec_t pa = mpfr_get_prec(a.v_), pb = mpfr_get_prec(b.v_);
        return pa > pb ? pa : pb;
    }
    mpfr_t v_;
};

Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(const Real& x, Real& s, Real& c);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real floor(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real pi(mpfr_prec_t prec);
// remainder of x mod m in [-m/2, m/2]
Real remainder(const Real& x, const Real& m);

// Complex number over Real; only the handful of operations the
// antiderivative recurrence needs.
struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 53) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Complex operator-() const { return {-re, -im}; }
    Real abs2() const { return re * re + im * im; }
};

Complex exp(const Complex& z);       // exp(re) * (cos im + i sin im)
Complex reciprocal(const Complex& z);

} // namespace beurling

#endif
