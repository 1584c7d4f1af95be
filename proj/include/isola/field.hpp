#pragma once

#include "isola/exactfield.hpp"
#include "isola/real.hpp"

#include <map>
#include <utility>

namespace isola {

// Scalar context for the exact mode: coefficients live in Q(c_h^2) and c_h Q(c_h^2).
class ExactField {
public:
    using Scalar = GradedScalar;
    static constexpr bool exact = true;

    Scalar zero() const { return Scalar(); }
    Scalar one() const { return Scalar(1); }
    Scalar integer(long n) const { return Scalar(n); }
    Scalar rational(long n, long d) const { return Scalar(0, RatFun(BigRational(n, d))); }
    Scalar ch() const { return GradedScalar::ch(); }
    Scalar t() const { return GradedScalar::t(); }
    Scalar tanh_k(int k) const { return Scalar(0, tanh_multiple(k)); }
    Scalar coth_d(int k, int m) const { return Scalar(0, coth_derivative(k, m)); }
};

// Scalar context for the numeric mode at a fixed depth and working precision.
class NumericField {
public:
    using Scalar = Real;
    static constexpr bool exact = false;

    NumericField(const Real& h, int precision_bits);

    const Real& h() const { return h_; }
    int precision() const { return bits_; }

    Scalar zero() const { return Real(0); }
    Scalar one() const { return Real(1); }
    Scalar integer(long n) const { return Real(n); }
    Scalar rational(long n, long d) const { return Real(n) / Real(d); }
    Scalar ch() const { return ch_; }
    Scalar t() const { return t_; }
    Scalar tanh_k(int k) const;
    Scalar coth_d(int k, int m) const;

    // Numeric value of an exact scalar at this depth.
    Real eval(const GradedScalar& s) const { return eval_scalar_at(s, t_, ch_); }

private:
    Real h_, t_, ch_;
    int bits_;
    mutable std::map<int, Real> tanh_cache_;
    mutable std::map<std::pair<int, int>, Real> coth_cache_;
};

}  // namespace isola
