#include "isola/stokes.hpp"

#include "isola/richardson.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <stdexcept>

namespace isola {

void check_denominator(const GradedScalar& d) {
    if (d.is_zero()) throw std::domain_error("vanishing solve denominator");
}

void check_denominator(const Real& d) {
    if (abs(d) < Real("1e-30")) throw std::domain_error("solve denominator below 1e-30");
}

namespace {

struct SurfaceSample {
    Real eta, etax, psix;
};

}  // namespace

TravelingResidual traveling_residual(const StokesExpansion<Real>& st, const Real& h, const Real& eps, int grid,
                                     int modes) {
    if (grid < 4 || modes < 2) throw std::invalid_argument("residual grid too small");
    using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
    const Real pi = boost::math::constants::pi<Real>();
    const auto eh = ts_harmonics(st.eta, eps);
    const auto ph = ts_harmonics(st.psi, eps);
    const Real c = ts_harmonics(st.c, eps)[0];

    auto sample = [&](const Real& x) {
        SurfaceSample s{Real(0), Real(0), Real(0)};
        for (std::size_t k = 0; k < eh.size(); ++k) {
            const Real kx = Real(static_cast<long>(k)) * x;
            s.eta += eh[k] * cos(kx);
            s.etax -= Real(static_cast<long>(k)) * eh[k] * sin(kx);
        }
        for (std::size_t k = 1; k < ph.size(); ++k)
            s.psix += Real(static_cast<long>(k)) * ph[k] * cos(Real(static_cast<long>(k)) * x);
        return s;
    };
    auto psi_at = [&](const Real& x) {
        Real v = 0;
        for (std::size_t k = 1; k < ph.size(); ++k) v += ph[k] * sin(Real(static_cast<long>(k)) * x);
        return v;
    };

    // odd harmonic extension Phi = sum b_k sin(kx) cosh(k(y+h))/cosh(kh), matched to psi on the surface
    Mat A(modes, modes);
    Vec rhs(modes);
    for (int i = 0; i < modes; ++i) {
        const Real x = pi * (i + 1) / (modes + 1);
        const Real eta = sample(x).eta;
        for (int k = 1; k <= modes; ++k) A(i, k - 1) = sin(k * x) * cosh(k * (eta + h)) / cosh(k * h);
        rhs(i) = psi_at(x);
    }
    const Vec b = A.partialPivLu().solve(rhs);

    TravelingResidual out;
    out.N = st.N;
    out.h = h;
    out.eps = eps;
    out.kinematic = 0;
    out.dynamic = 0;
    for (int j = 0; j < grid; ++j) {
        const Real x = 2 * pi * j / grid;
        const SurfaceSample s = sample(x);
        Real phix = 0, phiy = 0;
        for (int k = 1; k <= modes; ++k) {
            const Real ch = cosh(k * h);
            phix += b(k - 1) * k * cos(k * x) * cosh(k * (s.eta + h)) / ch;
            phiy += b(k - 1) * k * sin(k * x) * sinh(k * (s.eta + h)) / ch;
        }
        const Real Gpsi = phiy - s.etax * phix;
        const Real r1 = c * s.etax + Gpsi;
        const Real q = Gpsi + s.etax * s.psix;
        const Real r2 = c * s.psix - s.eta - s.psix * s.psix / 2 + q * q / (2 * (1 + s.etax * s.etax));
        out.kinematic = std::max(out.kinematic, Real(abs(r1)));
        out.dynamic = std::max(out.dynamic, Real(abs(r2)));
    }
    out.sup = std::max(out.kinematic, out.dynamic);
    return out;
}

StokesLimitsReport verify_stokes_limits(int lmax, int precision_bits) {
    if (lmax < 2 || lmax > 8) throw std::invalid_argument("limit checks cover orders 2..8");
    PrecisionGuard guard(precision_bits);
    StokesLimitsReport rep;
    rep.shallow_h = {Real("0.08"), Real("0.04"), Real("0.02")};
    rep.deep_h = 15;
    std::vector<StokesExpansion<Real>> shallow;
    for (const Real& h : rep.shallow_h) shallow.push_back(stokes_expand(NumericField(h, precision_bits), lmax));
    const NumericField deep_fld(rep.deep_h, precision_bits);
    const StokesExpansion<Real> deep = stokes_expand(deep_fld, lmax);

    const EpsSeries<Real> etax = ts_dx(deep.eta);
    const EpsSeries<Real> psix = ts_dx(deep.psi);
    const EpsSeries<Real> etax2 = ts_mul(etax, etax, lmax);
    const EpsSeries<Real> w = EpsSeries<Real>::constant(lmax, deep_fld.ch()) - psix;
    EpsSeries<Real> f = ts_mul(ts_mul(etax2, ts_mul(w, w, lmax), lmax), ts_reciprocal(etax2, lmax), lmax) * Real(0.5);
    f -= ts_mul(psix, psix, lmax) * Real(0.5);

    rep.max_shallow_rel = 0;
    rep.max_deep_gap = 0;
    for (int l = 2; l <= lmax; ++l) {
        StokesLimitRow row;
        row.l = l;
        std::vector<Real> ev, pv;
        for (const auto& st : shallow) {
            ev.push_back(st.eta[l].leading());
            pv.push_back(st.psi[l].leading());
        }
        const ShallowFit fe = fit_shallow(rep.shallow_h, ev, Real(3 - 3 * l));
        const ShallowFit fp = fit_shallow(rep.shallow_h, pv, Real(3 - 3 * l) - Real(0.5));
        const Real x = pow(Real(3) / 8, l - 1);
        row.x_expected = x;
        row.y_expected = Real(5 * l * l + 3 * l - 5) / 18 * x;
        row.z_expected = Real(l * (l - 1) * (l + 2)) / 6 * x;
        row.x_from_eta = fe.leading / l;
        row.x_from_psi = fp.leading;
        row.y = fp.second;
        row.z = fe.second;
        row.rel_x_eta = abs(row.x_from_eta / x - 1);
        row.rel_x_psi = abs(row.x_from_psi / x - 1);
        row.rel_y = abs(row.y / row.y_expected - 1);
        row.rel_z = abs(row.z / row.z_expected - 1);
        rep.max_shallow_rel = std::max({rep.max_shallow_rel, row.rel_x_eta, row.rel_x_psi, row.rel_y, row.rel_z});

        row.deep_eta = deep.eta[l].leading();
        row.deep_psi = deep.psi[l].leading();
        row.deep_f_ratio = -f[l].leading() / (l - 1);
        row.deep_gap = abs(row.deep_eta - row.deep_psi);
        rep.max_deep_gap = std::max(rep.max_deep_gap, row.deep_gap);
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<ExactDeepLimit> exact_deep_limits(int lmax) {
    const auto st = stokes_expand(ExactField(), lmax);
    std::vector<ExactDeepLimit> out;
    for (int l = 1; l <= lmax; ++l)
        out.push_back({st.eta[l].leading().rat().eval(1), st.psi[l].leading().rat().eval(1)});
    return out;
}

}  // namespace isola
