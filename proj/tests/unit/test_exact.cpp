#include "isola/exactfield.hpp"
#include "isola/field.hpp"
#include "isola/linearization.hpp"
#include "isola/richardson.hpp"
#include "isola/stokes.hpp"

#include <doctest.h>

#include <cmath>

using namespace isola;

namespace {

BigRational q(long n, long d = 1) { return BigRational(n, d); }

Real rel_err(const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), Real(abs(b))); }

}  // namespace

TEST_CASE("polynomial division and gcd") {
    const Poly t = Poly::t();
    const Poly a = (t - Poly(1)) * (t + Poly(2)) * (t * t + Poly(3));
    const Poly b = (t - Poly(1)) * (t - Poly(5));
    CHECK(gcd(a, b) == (t - Poly(1)).monic());
    Poly quo, rem;
    Poly::divmod(a, t - Poly(1), quo, rem);
    CHECK(rem.is_zero());
    CHECK(quo * (t - Poly(1)) == a);
    CHECK(a.eval(q(1)) == 0);
    CHECK(a.eval(q(2)) == q(4 * 7));
}

TEST_CASE("rational functions reduce to lowest terms") {
    const Poly t = Poly::t();
    const RatFun f((t * t - Poly(1)), (t - Poly(1)));
    CHECK(f == RatFun(t + Poly(1)));
}

TEST_CASE("grading: c_h squared is t") {
    const GradedScalar ch = GradedScalar::ch();
    CHECK(ch.grade() == 1);
    CHECK((ch * ch) == GradedScalar::t());
    CHECK((ch * ch).grade() == 0);
    CHECK_THROWS(ch + GradedScalar::t());
}

TEST_CASE("numeric evaluation of graded scalars") {
    PrecisionGuard guard(128);
    const Real h("0.7");
    const Real t = tanh(h);
    const GradedScalar s = GradedScalar::ch() * (GradedScalar::t() + GradedScalar(3)) / GradedScalar(2);
    CHECK(rel_err(eval_scalar(s, h, 128), sqrt(t) * (t + 3) / 2) < Real("1e-35"));
}

TEST_CASE("second order Stokes coefficients match the classical closed forms") {
    const auto st = stokes_expand(ExactField(), 3);
    PrecisionGuard guard(160);
    for (const char* hs : {"0.3", "1", "2.5"}) {
        const Real h(hs), t = tanh(h);
        const NumericField nf(h, 160);
        CHECK(rel_err(nf.eval(st.eta[2].coeff(2)), (3 - t * t) / (4 * t * t * t)) < Real("1e-40"));
        CHECK(rel_err(nf.eval(st.eta[2].coeff(0)), (t * t - 1) / (4 * t)) < Real("1e-40"));
        CHECK(nf.eval(st.eta[1].coeff(1)) == 1);
    }
}

TEST_CASE("deep-water second order limit is one half") {
    const auto lim = exact_deep_limits(3);
    CHECK(lim[1].eta == q(1, 2));
    CHECK(lim[1].psi == q(1, 2));
}

TEST_CASE("numeric pipeline agrees with the exact one") {
    const ExactField ef;
    const auto est = stokes_expand(ef, 4);
    const auto elin = linearization_coeffs(ef, est);
    PrecisionGuard guard(200);
    const NumericField nf(Real("1.3"), 200);
    const auto nst = stokes_expand(nf, 4);
    const auto nlin = linearization_coeffs(nf, nst);
    for (int l = 0; l <= 4; ++l) {
        for (int k = 0; k <= l; ++k) {
            CHECK(rel_err(nf.eval(est.eta[l].coeff(k)), nst.eta[l].coeff(k)) < Real("1e-50"));
            CHECK(rel_err(nf.eval(elin.p[l].coeff(k)), nlin.p[l].coeff(k)) < Real("1e-50"));
            CHECK(rel_err(nf.eval(elin.a[l].coeff(k)), nlin.a[l].coeff(k)) < Real("1e-50"));
        }
    }
}

TEST_CASE("traveling wave residual is of order N + 1") {
    PrecisionGuard guard(200);
    const Real h(1), eps("0.02");
    const NumericField nf(h, 200);
    for (int N : {4, 6}) {
        const auto st = stokes_expand(nf, N);
        const Real ratio = traveling_residual(st, h, eps).sup / traveling_residual(st, h, eps / 2).sup;
        CHECK(static_cast<double>(ratio) == doctest::Approx(std::pow(2.0, N + 1)).epsilon(0.05));
    }
}

TEST_CASE("Richardson extrapolation in h^2 is exact on even polynomials") {
    PrecisionGuard guard(128);
    std::vector<Real> v;
    for (Real h : {Real("0.4"), Real("0.2"), Real("0.1")}) v.push_back(1 + 2 * h * h - 3 * pow(h, 4));
    CHECK(abs(richardson_h2(v) - 1) < Real("1e-30"));
}
