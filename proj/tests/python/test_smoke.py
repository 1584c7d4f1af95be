import math

import isola


def test_stokes_second_order_closed_form():
    s = isola.stokes_expand(3, depth=1.0)
    t = math.tanh(1.0)
    eta22 = float(s["coefficients"]["eta[2][2]"])
    assert abs(eta22 - (3 - t * t) / (4 * t**3)) < 1e-14


def test_exact_expansion_serializes_rational_functions():
    s = isola.stokes_expand(2, exact=True)
    c = s["coefficients"]["eta[2][2]"]
    assert c["g"] == 0
    assert c["num"] and c["den"]


def test_collision_and_beta1_root():
    assert 0 < isola.phi(2, 1.0) < 1
    roots = isola.beta1_roots(2, 1.5, 2.2, 40)
    assert len(roots) == 1
    assert abs(roots[0] - 1.84940) < 1e-4


def test_identities():
    assert isola.Ap(6) == "0"
    assert isola.Cp(4) == "100/3"
    assert isola.III_kernel_check(25)


def test_flat_spectrum_is_imaginary():
    ev = isola.eigenvalues(1.0, 0.3, 0.0, modes=6, order=3)
    assert len(ev) == 26
    assert max(abs(z.real) for z in ev) < 1e-12


def test_isola_matches_prediction():
    tr = isola.trace_isola(2, 1.0, 0.02, samples=24)
    assert abs(tr["max_re"] / tr["prediction"]["semi_re"] - 1) < 0.05
