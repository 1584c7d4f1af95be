#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

namespace isola {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr int kDefaultPrecisionBits = 256;

// Working precision in bits for newly created Real values.
void set_precision_bits(int bits);
int precision_bits();

// Restores the previous working precision on scope exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_digits10_;
};

// Precision requested through ISOLA_PRECISION, or the fallback.
int precision_from_env(int fallback = kDefaultPrecisionBits);

// Decimal rendering with enough digits to round-trip at the value's precision.
std::string to_decimal(const Real& x);
std::string to_decimal(const Real& x, int digits);

}  // namespace isola
