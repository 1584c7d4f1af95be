#pragma once

#include "isola/real.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace isola {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Univariate polynomial in t with rational coefficients, stored low degree first.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigRational> coeffs);
    Poly(long c);  // NOLINT(google-explicit-constructor)
    explicit Poly(const BigRational& c);

    static Poly monomial(const BigRational& c, int degree);
    static Poly t() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational coeff(int i) const;
    const BigRational& leading() const { return c_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const BigRational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division; throws on a zero divisor.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    Poly exact_div(const Poly& b) const;
    Poly monic() const;
    Poly derivative() const;

    BigRational eval(const BigRational& x) const;

    // Integer coefficient vector proportional to this polynomial, with the
    // common factor returned through `scale` (poly = ints / scale).
    std::vector<BigInt> integer_coeffs(BigRational& scale) const;

    std::string str(const char* var = "t") const;

private:
    void trim();
    std::vector<BigRational> c_;
};

Poly gcd(const Poly& a, const Poly& b);

// Reduced quotient num/den with den monic.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit RatFun(const BigRational& c) : num_(c), den_(1) {}
    explicit RatFun(Poly num);
    RatFun(Poly num, Poly den);

    static RatFun t() { return RatFun(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Exact value at a rational point; throws if the denominator vanishes there.
    BigRational eval(const BigRational& x) const;

    // Lazy check that the denominator has no zero on (0,1]: sign scan on a
    // grid refined by bisection with Sturm counting when signs agree.
    bool den_nonvanishing_on_unit_interval() const;

    std::string str() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

// Element c_h^g * rat(t) of Q(c_h^2) (g = 0) or c_h Q(c_h^2) (g = 1).
class GradedScalar {
public:
    GradedScalar() = default;
    GradedScalar(long c) : rat_(c) {}  // NOLINT(google-explicit-constructor)
    GradedScalar(int g, RatFun rat);

    static GradedScalar ch() { return GradedScalar(1, RatFun(1)); }
    static GradedScalar t() { return GradedScalar(0, RatFun::t()); }

    int grade() const { return g_; }
    const RatFun& rat() const { return rat_; }
    bool is_zero() const { return rat_.is_zero(); }

    GradedScalar operator-() const { return GradedScalar(g_, -rat_); }
    friend GradedScalar operator+(const GradedScalar& a, const GradedScalar& b);
    friend GradedScalar operator-(const GradedScalar& a, const GradedScalar& b);
    friend GradedScalar operator*(const GradedScalar& a, const GradedScalar& b);
    friend GradedScalar operator/(const GradedScalar& a, const GradedScalar& b);
    GradedScalar& operator+=(const GradedScalar& o) { return *this = *this + o; }
    GradedScalar& operator-=(const GradedScalar& o) { return *this = *this - o; }
    GradedScalar& operator*=(const GradedScalar& o) { return *this = *this * o; }
    GradedScalar& operator/=(const GradedScalar& o) { return *this = *this / o; }
    friend bool operator==(const GradedScalar& a, const GradedScalar& b);

    std::string str() const;

private:
    int g_ = 0;
    RatFun rat_;
};

enum class ArithOp { add, sub, mul, div };

GradedScalar gs_arith(const GradedScalar& a, const GradedScalar& b, ArithOp op);

// tanh(h k) as a rational function of t = tanh h.
const RatFun& tanh_multiple(int k);

// (d/dz)^m coth(z) at z = h k, as a rational function of t.
const RatFun& coth_derivative(int k, int m);

// Polynomial D_m(c) with (d/dz)^m coth(z) = D_m(coth z).
const Poly& coth_derivative_poly(int m);

// Numeric value of s at depth h with the given working precision.
Real eval_scalar(const GradedScalar& s, const Real& h, int precision_bits);

// Same, reusing a precomputed t = tanh h and c_h = sqrt(t).
Real eval_scalar_at(const GradedScalar& s, const Real& t, const Real& ch);

Real to_real(const BigRational& q);
Real to_real(const BigInt& z);

}  // namespace isola
