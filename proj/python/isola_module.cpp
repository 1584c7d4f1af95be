#include "isola/beta1.hpp"
#include "isola/collision.hpp"
#include "isola/combinatorics.hpp"
#include "isola/field.hpp"
#include "isola/linearization.hpp"
#include "isola/real.hpp"
#include "isola/serialize.hpp"
#include "isola/spectrum.hpp"
#include "isola/stokes.hpp"
#include "isola/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace isola;

namespace {

int bits_or_default(int bits) { return bits > 0 ? bits : precision_bits(); }

std::string expansion_json(int order, bool exact, double depth, int bits, bool linearized) {
    json meta;
    meta["kind"] = linearized ? "linearization" : "stokes";
    meta["mode"] = exact ? "exact" : "numeric";
    if (exact) {
        const ExactField fld;
        const auto st = stokes_expand(fld, order);
        return (linearized ? linearization_json(linearization_coeffs(fld, st), meta) : stokes_json(st, meta)).dump();
    }
    bits = bits_or_default(bits);
    PrecisionGuard guard(bits);
    meta["depth"] = depth;
    const NumericField fld(Real(depth), bits);
    const auto st = stokes_expand(fld, order);
    return (linearized ? linearization_json(linearization_coeffs(fld, st), meta) : stokes_json(st, meta)).dump();
}

}  // namespace

PYBIND11_MODULE(_isola, m) {
    m.doc() = "Stokes expansions, collision data, beta1 and isola spectra";

    m.def("set_precision_bits", &set_precision_bits, py::arg("bits"));
    m.def("precision_bits", &precision_bits);

    m.def(
        "stokes_expand_json",
        [](int order, bool exact, double depth, int bits) { return expansion_json(order, exact, depth, bits, false); },
        py::arg("order"), py::arg("exact") = false, py::arg("depth") = 1.0, py::arg("precision_bits") = 0);
    m.def(
        "linearize_json",
        [](int order, bool exact, double depth, int bits) { return expansion_json(order, exact, depth, bits, true); },
        py::arg("order"), py::arg("exact") = false, py::arg("depth") = 1.0, py::arg("precision_bits") = 0);

    m.def(
        "collision_json",
        [](int p, double depth) { return collision_json(collision_tables(p, Real(depth), true)).dump(); },
        py::arg("p"), py::arg("depth"));
    m.def(
        "phi",
        [](int p, double depth) { return static_cast<double>(solve_phi(p, Real(depth)).phi); }, py::arg("p"),
        py::arg("depth"));

    m.def(
        "beta1",
        [](int p, double depth, int bits) {
            bits = bits_or_default(bits);
            PrecisionGuard guard(bits);
            return static_cast<double>(beta1_eval(p, Real(depth), bits).beta1);
        },
        py::arg("p"), py::arg("depth"), py::arg("precision_bits") = 0);
    m.def(
        "beta1_json",
        [](int p, double depth, int bits) {
            bits = bits_or_default(bits);
            PrecisionGuard guard(bits);
            return beta1_json(beta1_eval(p, Real(depth), bits)).dump();
        },
        py::arg("p"), py::arg("depth"), py::arg("precision_bits") = 0);
    m.def(
        "beta1_roots",
        [](int p, double lo, double hi, int n, int bits) {
            py::gil_scoped_release release;
            return beta1_roots(p, lo, hi, n, bits_or_default(bits)).roots;
        },
        py::arg("p"), py::arg("lo"), py::arg("hi"), py::arg("n") = 200, py::arg("precision_bits") = 128);

    m.def(
        "Ap", [](int p) { return Ap_bruteforce(p).get_str(); }, py::arg("p"));
    m.def(
        "Cp", [](int p) { return Cp_bruteforce(p).get_str(); }, py::arg("p"));
    m.def("III_kernel_check", &III_kernel_check, py::arg("p"));

    m.def(
        "eigenvalues",
        [](double depth, double mu, double eps, int M, int K) {
            PrecisionGuard guard(128);
            const NumericField fld(Real(depth), 128);
            const auto lin = linearization_coeffs(fld, stokes_expand(fld, K));
            return eigenvalues(build_truncated(depth, mu, eps, M, K, lin));
        },
        py::arg("depth"), py::arg("mu"), py::arg("eps"), py::arg("modes") = 16, py::arg("order") = 4);
    m.def(
        "trace_isola_json",
        [](int p, double depth, double eps, int M, int K, int samples) {
            IsolaOptions io;
            io.M = M;
            io.K = K > 0 ? K : p + 2;
            io.samples = samples;
            io.precision_bits = precision_bits();
            py::gil_scoped_release release;
            return isola_json(trace_isola(p, depth, eps, io)).dump();
        },
        py::arg("p"), py::arg("depth"), py::arg("eps"), py::arg("modes") = 16, py::arg("order") = 0,
        py::arg("samples") = 64);

    m.def(
        "run_criterion",
        [](int id) {
            VerifyOptions vo;
            vo.precision_bits = precision_bits();
            const CriterionResult r = run_criterion(id, vo);
            return py::make_tuple(r.pass, format_result(r));
        },
        py::arg("id"));
}
