#include "isola/real.hpp"
#include "isola/trigseries.hpp"

#include <doctest.h>

using namespace isola;

TEST_CASE("product to sum: cos x cos 2x = (cos x + cos 3x)/2") {
    TrigPoly<double> a(1, Parity::Evn), b(2, Parity::Evn), out(3, Parity::Evn);
    a.at(1) = 1;
    b.at(2) = 1;
    trig_mul_acc(a, b, out);
    CHECK(out.coeff(1) == doctest::Approx(0.5));
    CHECK(out.coeff(3) == doctest::Approx(0.5));
}

TEST_CASE("product to sum: sin x sin x = (1 - cos 2x)/2") {
    TrigPoly<double> a(1, Parity::Odd), out(2, Parity::Evn);
    a.at(1) = 1;
    trig_mul_acc(a, a, out);
    CHECK(out.coeff(0) == doctest::Approx(0.5));
    CHECK(out.coeff(2) == doctest::Approx(-0.5));
}

TEST_CASE("derivative and Hilbert transform flip parity") {
    TrigPoly<double> c(3, Parity::Odd);
    c.at(1) = 2;
    c.at(3) = 1;
    const auto d = trig_dx(c);
    CHECK(d.parity() == Parity::Evn);
    CHECK(d.coeff(1) == doctest::Approx(2));
    CHECK(d.coeff(3) == doctest::Approx(3));
    CHECK(trig_hilbert(c).parity() == Parity::Evn);
}

TEST_CASE("series product truncates in epsilon") {
    EpsSeries<double> f(3, Parity::Evn);
    f[0].at(0) = 1;
    f[1].at(1) = 1;
    const auto g = ts_mul(f, f);
    CHECK(g.N() == 3);
    CHECK(g[2].coeff(0) == doctest::Approx(0.5));
    CHECK(g[2].coeff(2) == doctest::Approx(0.5));
    CHECK(g[1].coeff(1) == doctest::Approx(2));
}
