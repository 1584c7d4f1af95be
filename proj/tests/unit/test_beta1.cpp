#include "isola/beta1.hpp"
#include "isola/collision.hpp"

#include <doctest.h>

#include <cmath>

using namespace isola;

TEST_CASE("collision root solves the resonance condition") {
    PrecisionGuard guard(128);
    for (int p = 2; p <= 6; ++p)
        for (const char* hs : {"0.1", "1", "4"}) {
            const Real h(hs);
            const PhiResult r = solve_phi(p, h);
            // direct check: omega^-(phi) equals omega^+(phi + p) with omega^s = c_h x - s Omega(x)
            const double hd = std::stod(hs), phi = static_cast<double>(r.phi), ch = std::sqrt(std::tanh(hd));
            auto om = [&](double x) { return std::sqrt(x * std::tanh(hd * x)); };
            CHECK(ch * phi + om(phi) == doctest::Approx(ch * (phi + p) - om(phi + p)).epsilon(1e-12));
        }
}

TEST_CASE("shallow collision law") {
    PrecisionGuard guard(128);
    const Real h("0.01");
    for (int p = 2; p <= 5; ++p) {
        const double ratio = static_cast<double>(solve_phi(p, h).phi / (h * h)) / (p * (p * p - 1) / 12.0);
        CHECK(ratio == doctest::Approx(1).epsilon(1e-3));
    }
}

TEST_CASE("beta1 for p = 2 changes sign at the critical depth") {
    PrecisionGuard guard(128);
    const RootScan scan = beta1_roots(2, 1.5, 2.2, 40, 128);
    REQUIRE(scan.roots.size() == 1);
    CHECK(scan.roots[0] == doctest::Approx(1.84940).epsilon(1e-5));
}

TEST_CASE("beta1 sum has three terms for p = 2 and is real") {
    PrecisionGuard guard(128);
    const Beta1Result r = beta1_eval(2, Real(1), 128);
    CHECK(r.term_count == 3);
    CHECK(abs(r.imag_residual) < Real("1e-30"));
    CHECK(static_cast<double>(r.beta1) == doctest::Approx(-0.16561703881133907).epsilon(1e-12));
}

TEST_CASE("shallow constant for p = 2 is -9/16") {
    PrecisionGuard guard(128);
    CHECK(abs(beta1_shallow_constant(2) + Real(9) / 16) < Real("1e-30"));
}
