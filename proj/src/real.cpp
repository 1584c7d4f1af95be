#include "isola/real.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <locale>
#include <sstream>
#include <stdexcept>

namespace isola {

namespace {

unsigned bits_to_digits10(int bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

}  // namespace

void set_precision_bits(int bits) {
    if (bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
    Real::default_precision(bits_to_digits10(bits));
}

int precision_bits() {
    return static_cast<int>(Real::default_precision() * 3.32192809488736235);
}

PrecisionGuard::PrecisionGuard(int bits) : saved_digits10_(Real::default_precision()) {
    set_precision_bits(bits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_digits10_); }

int precision_from_env(int fallback) {
    const char* v = std::getenv("ISOLA_PRECISION");
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    long bits = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || bits < 53 || bits > 1 << 20)
        throw std::invalid_argument("ISOLA_PRECISION must be an integer >= 53");
    return static_cast<int>(bits);
}

std::string to_decimal(const Real& x, int digits) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(digits) << x;
    return os.str();
}

std::string to_decimal(const Real& x) {
    return to_decimal(x, static_cast<int>(x.precision()) + 3);
}

}  // namespace isola
