#pragma once

#include "isola/field.hpp"
#include "isola/real.hpp"
#include "isola/trigseries.hpp"

#include <stdexcept>
#include <vector>

namespace isola {

// eta = sum eps^l eta_l (Evn), psi = sum eps^l psi_l (Odd), c = sum eps^l c_l (constants).
template <class S>
struct StokesExpansion {
    int N = 0;
    EpsSeries<S> eta;
    EpsSeries<S> psi;
    EpsSeries<S> c;

    S c_coeff(int l) const { return c[l].coeff(0); }
};

// Throws if a per-harmonic solve denominator vanishes (exact) or is below 1e-30 (numeric).
void check_denominator(const GradedScalar& d);
void check_denominator(const Real& d);

// Jets u_s = G_s(eta) psi for s = 0..jmax, truncated at N.
template <class Field>
std::vector<EpsSeries<typename Field::Scalar>> dn_jets(const Field& fld, const EpsSeries<typename Field::Scalar>& eta,
                                                       const EpsSeries<typename Field::Scalar>& psi, int N, int jmax) {
    using S = typename Field::Scalar;
    using Series = EpsSeries<S>;
    if (eta.parity() != Parity::Evn || psi.parity() != Parity::Odd)
        throw std::logic_error("Dirichlet-Neumann jets need eta even and psi odd");
    const int n = std::min({N, eta.N(), psi.N()});
    const auto etapow = ts_powers(eta.truncated(n), jmax, n);
    const Series psix = ts_dx(psi.truncated(n));
    auto G0 = [&fld](const Series& f) { return ts_G0(fld, f); };
    auto inv_fact = [](int m) { return S(1) / S(factorial(m)); };
    auto eta_pow = [&etapow](int m) -> const Series& { return etapow[static_cast<std::size_t>(m)]; };

    std::vector<Series> u;
    u.reserve(static_cast<std::size_t>(jmax) + 1);
    u.push_back(G0(psi.truncated(n)));
    for (int j = 1; j <= jmax; ++j) {
        Series acc(n, Parity::Odd);
        if (j % 2 == 0) {
            const int r = j / 2;
            Series lead = ts_absD(ts_dx(ts_mul(eta_pow(2 * r), psix, n)), 2 * r - 2);
            acc -= G0(lead) * inv_fact(2 * r);
            for (int s = 0; s <= r - 1; ++s) {
                acc -= ts_absD(ts_mul(eta_pow(2 * r - 2 * s), u[static_cast<std::size_t>(2 * s)], n), 2 * r - 2 * s) *
                       inv_fact(2 * r - 2 * s);
                acc -= G0(ts_absD(ts_mul(eta_pow(2 * r - 2 * s - 1), u[static_cast<std::size_t>(2 * s + 1)], n),
                                  2 * r - 2 * s - 2)) *
                       inv_fact(2 * r - 2 * s - 1);
            }
        } else {
            const int r = (j + 1) / 2;
            Series lead = ts_absD(ts_dx(ts_mul(eta_pow(2 * r - 1), psix, n)), 2 * r - 2);
            acc -= lead * inv_fact(2 * r - 1);
            for (int s = 0; s <= r - 1; ++s)
                acc -= G0(ts_absD(ts_mul(eta_pow(2 * r - 2 * s - 1), u[static_cast<std::size_t>(2 * s)], n),
                                  2 * r - 2 * s - 2)) *
                       inv_fact(2 * r - 2 * s - 1);
            for (int s = 0; s <= r - 2; ++s)
                acc -= ts_absD(ts_mul(eta_pow(2 * r - 2 * s - 2), u[static_cast<std::size_t>(2 * s + 1)], n),
                               2 * r - 2 * s - 2) *
                       inv_fact(2 * r - 2 * s - 2);
        }
        u.push_back(std::move(acc));
    }
    return u;
}

// G_j(eta) psi truncated at N.
template <class Field>
EpsSeries<typename Field::Scalar> dn_apply(const Field& fld, int j, const EpsSeries<typename Field::Scalar>& eta,
                                           const EpsSeries<typename Field::Scalar>& psi, int N) {
    if (j < 0) throw std::invalid_argument("jet order must be nonnegative");
    return dn_jets(fld, eta, psi, N, j).back();
}

// (G(eta) - G0) psi truncated at N.
template <class Field>
EpsSeries<typename Field::Scalar> dn_remainder(const Field& fld, const EpsSeries<typename Field::Scalar>& eta,
                                               const EpsSeries<typename Field::Scalar>& psi, int N) {
    using S = typename Field::Scalar;
    const int n = std::min({N, eta.N(), psi.N()});
    EpsSeries<S> r(n, Parity::Odd);
    if (n < 2) return r;
    auto u = dn_jets(fld, eta, psi, n, n - 1);
    for (int j = 1; j < static_cast<int>(u.size()); ++j) r += u[static_cast<std::size_t>(j)];
    return r;
}

// Order-by-order Stokes expansion up to order N.
template <class Field>
StokesExpansion<typename Field::Scalar> stokes_expand(const Field& fld, int N) {
    using S = typename Field::Scalar;
    using Series = EpsSeries<S>;
    if (N < 1) throw std::invalid_argument("Stokes order must be at least 1");
    StokesExpansion<S> st;
    st.N = N;
    st.eta = Series(N, Parity::Evn);
    st.psi = Series(N, Parity::Odd);
    st.c = Series(N, Parity::Evn);
    const S ch = fld.ch();
    const S one = fld.one();
    const S half = S(1) / S(2);
    st.c[0].at(0) = ch;
    st.eta[1].at(1) = one;
    st.psi[1].at(1) = one / ch;
    const S t = fld.t();

    for (int l = 2; l <= N; ++l) {
        const Series eta = st.eta.truncated(l);
        const Series psi = st.psi.truncated(l);
        const Series c = st.c.truncated(l);
        const Series etax = ts_dx(eta);
        const Series psix = ts_dx(psi);

        // f_l = [-psix^2/2 + etax^2 (psix - c)^2 / (2 (1 + etax^2))]_l
        const Series etax2 = ts_mul(etax, etax, l);
        const Series w = psix - c;
        Series f = ts_mul(ts_mul(etax2, ts_mul(w, w, l), l), ts_reciprocal(etax2, l), l) * half;
        f -= ts_mul(psix, psix, l) * half;
        // g_l = [-(G(eta) - G0) psi]_l
        const Series g = -dn_remainder(fld, eta, psi, l);

        TrigPoly<S> F = f[l];
        TrigPoly<S> G = g[l];
        for (int l1 = 2; l1 <= l - 2; l1 += 2) {
            const S cl1 = st.c_coeff(l1);
            F.accumulate(psix[l - l1], cl1);
            G.accumulate(etax[l - l1], -cl1);
        }
        if (l % 2 == 1) {
            // solvability on the first harmonic fixes c_{l-1}
            const S cl = -half * (ch * F.at(1) + G.at(1));
            st.c[l - 1].at(0) = cl;
            F.at(1) += cl / ch;
            G.at(1) += cl;
        }

        TrigPoly<S>& el = st.eta[l];
        TrigPoly<S>& pl = st.psi[l];
        for (std::size_t i = 0; i < el.size(); ++i) {
            const int k = el.harmonic(i);
            if (k == 0) {
                el.at(0) = F.at(0);
            } else if (k == 1) {
                // l odd here; particular solution orthogonal to the kernel (c_h cos x, sin x)
                const S denom = S(2) * (one + t);
                el.at(1) = (F.at(1) - G.at(1) / ch) / denom;
                pl.at(1) = (G.at(1) - ch * F.at(1)) / denom;
            } else {
                const S Tk = fld.tanh_k(k);
                const S kk = S(k);
                const S det = kk * Tk - kk * kk * t;
                check_denominator(det);
                el.at(k) = (kk * Tk * F.at(k) + ch * kk * G.at(k)) / det;
                pl.at(k) = (ch * kk * F.at(k) + G.at(k)) / det;
            }
        }
    }
    return st;
}

// Sup-norm residuals of the traveling-wave system for the summed numeric expansion at amplitude eps.
// G(eta) psi is evaluated independently by collocating the harmonic extension with `modes` sine modes.
struct TravelingResidual {
    int N = 0;
    Real h, eps;
    Real kinematic;  // c eta_x + G(eta) psi
    Real dynamic;    // c psi_x - eta - psi_x^2/2 + (G psi + eta_x psi_x)^2 / (2 (1 + eta_x^2))
    Real sup;
};

TravelingResidual traveling_residual(const StokesExpansion<Real>& st, const Real& h, const Real& eps, int grid = 64,
                                     int modes = 40);

// Shallow and deep structural limits of eta_l^{[l]}, psi_l^{[l]}.
struct StokesLimitRow {
    int l = 0;
    Real x_from_eta, x_from_psi, y, z;          // fitted
    Real x_expected, y_expected, z_expected;    // closed forms
    Real rel_x_eta, rel_x_psi, rel_y, rel_z;
    Real deep_eta, deep_psi, deep_f_ratio;       // at h = deep_h; deep_f_ratio = -f_l^{[l]}/(l-1)
    Real deep_gap;                               // |eta - psi| at h = deep_h
};

struct StokesLimitsReport {
    std::vector<Real> shallow_h;
    Real deep_h;
    std::vector<StokesLimitRow> rows;
    Real max_shallow_rel;
    Real max_deep_gap;
};

StokesLimitsReport verify_stokes_limits(int lmax, int precision_bits = kDefaultPrecisionBits);

// Exact deep-water value of eta_l^{[l]} and psi_l^{[l]} (t -> 1) from the exact expansion.
struct ExactDeepLimit {
    BigRational eta, psi;
};
std::vector<ExactDeepLimit> exact_deep_limits(int lmax);

}  // namespace isola
