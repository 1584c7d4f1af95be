#pragma once

#include "isola/stokes.hpp"

namespace isola {

template <class S>
struct VelocityField {
    EpsSeries<S> V;  // Evn
    EpsSeries<S> B;  // Odd
};

template <class S>
struct Straightening {
    EpsSeries<S> pgoth;  // Odd
    EpsSeries<S> f;      // constant Evn series
};

// Coefficients of the linearized operator along the Stokes wave.
template <class S>
struct LinearizationCoeffs {
    int N = 0;
    EpsSeries<S> p;      // Evn
    EpsSeries<S> a;      // Evn
    EpsSeries<S> f;      // constants, zero at odd orders
    EpsSeries<S> pgoth;  // Odd
    EpsSeries<S> V;      // Evn
    EpsSeries<S> B;      // Odd

    S f_coeff(int l) const { return f[l].coeff(0); }
};

// V = (psi_x + c eta_x^2) / (1 + eta_x^2), B = (psi_x - c) eta_x / (1 + eta_x^2).
template <class Field>
VelocityField<typename Field::Scalar> velocity_field(const Field&, const StokesExpansion<typename Field::Scalar>& st) {
    using Series = EpsSeries<typename Field::Scalar>;
    const int n = st.N;
    const Series etax = ts_dx(st.eta);
    const Series psix = ts_dx(st.psi);
    const Series etax2 = ts_mul(etax, etax, n);
    const Series r = ts_reciprocal(etax2, n);
    VelocityField<typename Field::Scalar> out;
    out.V = ts_mul(psix + ts_mul(st.c, etax2, n), r, n);
    out.B = ts_mul(ts_mul(psix - st.c, etax, n), r, n);
    return out;
}

// Order-by-order solution of p = H coth((h + f)|D|)[eta(x + p)], f = mean of eta(x + p).
template <class Field>
Straightening<typename Field::Scalar> straightening(const Field& fld, const StokesExpansion<typename Field::Scalar>& st) {
    using S = typename Field::Scalar;
    using Series = EpsSeries<S>;
    const int n = st.N;
    Straightening<S> out{Series(n, Parity::Odd), Series(n, Parity::Evn)};
    for (int l = 1; l <= n; ++l) {
        const Series u = ts_compose(st.eta.truncated(l), out.pgoth.truncated(l), l);
        if (l % 2 == 0) out.f[l].at(0) = u[l].at(0);
        const Series v = ts_scaled_coth(fld, out.f.truncated(l), u, l);
        out.pgoth[l] = v[l];
    }
    return out;
}

// c_h + p = (c - V(x + p)) / (1 + p_x), 1 + a = (1 + (V(x + p) - c) B_x(x + p)) / (1 + p_x).
template <class Field>
LinearizationCoeffs<typename Field::Scalar> linearization_coeffs(const Field& fld,
                                                                 const StokesExpansion<typename Field::Scalar>& st) {
    using S = typename Field::Scalar;
    using Series = EpsSeries<S>;
    const int n = st.N;
    LinearizationCoeffs<S> out;
    out.N = n;
    auto vb = velocity_field(fld, st);
    auto sp = straightening(fld, st);
    const Series Vc = ts_compose(vb.V, sp.pgoth, n);
    const Series Bxc = ts_compose(ts_dx(vb.B), sp.pgoth, n);
    const Series r = ts_reciprocal(ts_dx(sp.pgoth), n);
    out.p = ts_mul(st.c - Vc, r, n) - Series::constant(n, fld.ch());
    out.a = ts_mul(Series::constant(n, fld.one()) + ts_mul(Vc - st.c, Bxc, n), r, n) - Series::constant(n, fld.one());
    out.f = std::move(sp.f);
    out.pgoth = std::move(sp.pgoth);
    out.V = std::move(vb.V);
    out.B = std::move(vb.B);
    return out;
}

// Shallow constants of p_l^{[l]}, a_l^{[l]} and the deep-water identity p = a.
struct LinearizationLimitRow {
    int l = 0;
    Real p_lead, p_second, a_lead, a_second;                       // fitted
    Real p_lead_expected, p_second_expected, a_lead_expected, a_second_expected;
    Real rel_p_lead, rel_p_second, rel_a_lead, rel_a_second;
    Real deep_p, deep_a, deep_gap;
};

struct LinearizationLimitsReport {
    std::vector<Real> shallow_h;
    Real deep_h;
    std::vector<LinearizationLimitRow> rows;
    Real max_shallow_rel;
    Real max_deep_gap;
};

LinearizationLimitsReport verify_linearization_limits(int lmax, int precision_bits = kDefaultPrecisionBits);

}  // namespace isola
