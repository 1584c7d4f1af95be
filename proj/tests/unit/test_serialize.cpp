#include "isola/serialize.hpp"

#include <doctest.h>

#include <sstream>

using namespace isola;

TEST_CASE("graded scalars round-trip through JSON") {
    const GradedScalar a = GradedScalar::ch() * (GradedScalar::t() * GradedScalar(3) - GradedScalar(1)) /
                           (GradedScalar(7) * GradedScalar::t() * GradedScalar::t() + GradedScalar(2));
    const json j = to_json(a);
    CHECK(j["g"] == 1);
    CHECK(graded_from_json(json::parse(j.dump())) == a);
    CHECK(graded_from_json(to_json(GradedScalar())) == GradedScalar());
}

TEST_CASE("exact Stokes coefficients round-trip through JSON") {
    const auto st = stokes_expand(ExactField(), 4);
    const json j = stokes_json(st, json::object());
    const auto& c = j.at("coefficients");
    CHECK(graded_from_json(c.at("eta[3][3]")) == st.eta[3].coeff(3));
    CHECK(graded_from_json(c.at("c[2]")) == st.c[2].coeff(0));
}

TEST_CASE("real values round-trip at full precision") {
    PrecisionGuard guard(256);
    const Real x = sqrt(Real(2)) / 3;
    CHECK(real_from_json(to_json(x)) == x);
}

TEST_CASE("CSV output ignores the global locale") {
    std::ostringstream os;
    CsvWriter w(os, {"a", "b"});
    w.row({CsvWriter::num(0.5), CsvWriter::num(-1e-20)});
    CHECK(os.str() == "a,b\n0.5,-9.9999999999999995e-21\n");
    CHECK_THROWS(w.row({"1"}));
}
