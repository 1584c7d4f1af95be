#include "isola/field.hpp"
#include "isola/linearization.hpp"
#include "isola/spectrum.hpp"
#include "isola/stokes.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace isola;

TEST_CASE("flat-surface spectrum equals the dispersion relation") {
    PrecisionGuard guard(128);
    const double h = 1.3, mu = 0.31;
    const int M = 6;
    const NumericField fld(Real(h), 128);
    const auto lin = linearization_coeffs(fld, stokes_expand(fld, 3));
    const auto ev = eigenvalues(build_truncated(h, mu, 0.0, M, 3, lin));
    std::vector<double> got, want;
    const double ch = std::sqrt(std::tanh(h));
    for (const auto& z : ev) {
        CHECK(std::abs(z.real()) < 1e-12);
        got.push_back(z.imag());
    }
    for (int j = -M; j <= M; ++j) {
        const double x = j + mu, om = std::sqrt(std::abs(x) * std::tanh(h * std::abs(x)));
        want.push_back(ch * x + om);
        want.push_back(ch * x - om);
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("ellipse fit recovers a sampled ellipse") {
    std::vector<cplx> pts;
    for (int i = 0; i < 40; ++i) {
        const double th = 2 * M_PI * i / 40;
        pts.emplace_back(0.3 * std::cos(th), 2.0 + 0.5 * std::sin(th));
    }
    const EllipseFit e = fit_ellipse(pts);
    CHECK(e.semi_re == doctest::Approx(0.3).epsilon(1e-9));
    CHECK(e.semi_im == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(e.center_im == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("log-log slope of a power law") {
    CHECK(loglog_slope({0.1, 0.2, 0.4}, {0.01, 0.04, 0.16}) == doctest::Approx(2));
}
