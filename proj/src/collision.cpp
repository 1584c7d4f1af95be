#include "isola/collision.hpp"

#include <boost/math/tools/roots.hpp>

#include <cstdint>

namespace isola {

Real Omega(const Real& phi, const Real& h) {
    Real v = phi * tanh(h * phi);
    return v > 0 ? sqrt(v) : Real(0);
}

Real dOmega(const Real& phi, const Real& h) {
    const Real th = tanh(h * phi);
    return (th + h * phi * (1 - th * th)) / (2 * sqrt(phi * th));
}

Real dispersion(const Real& phi, const Real& h, int sigma) {
    const Real ch = sqrt(tanh(h));
    return ch * phi - sigma * Omega(phi, h);
}

Real collision_function(int p, const Real& phi, const Real& h) {
    return Omega(phi, h) + Omega(phi + p, h) - sqrt(tanh(h)) * p;
}

PhiResult solve_phi(int p, const Real& h) {
    if (p < 2) throw std::invalid_argument("collision index p must be at least 2");
    if (h <= 0) throw std::invalid_argument("depth must be positive");
    Real lo = 0, hi = 1;
    if (p >= 3) {
        lo = solve_phi(p - 1, h).phi;
        hi = Real((p - 1) * (p - 1)) / 4;
    }
    auto F = [&](const Real& x) { return collision_function(p, x, h); };
    Real flo = F(lo), fhi = F(hi);
    if (fhi == 0) return {hi, Real(0), false};
    if (!(flo < 0 && fhi > 0)) throw std::logic_error("collision root is not bracketed");
    const int bits = precision_bits();
    boost::math::tools::eps_tolerance<Real> tol(bits - 8);
    std::uintmax_t iters = 2000;
    auto r = boost::math::tools::toms748_solve(F, lo, hi, flo, fhi, tol, iters);
    PhiResult out;
    out.phi = (r.first + r.second) / 2;
    out.residual = F(out.phi);
    out.excluded = abs(out.phi - round(out.phi)) < Real("1e-8");
    return out;
}

CollisionData collision_tables(int p, const Real& h, bool allow_excluded) {
    PhiResult pr = solve_phi(p, h);
    if (pr.excluded && !allow_excluded) throw ExcludedDepth("phi(p,h) is an integer: excluded depth");
    CollisionData cd;
    cd.p = p;
    cd.h = h;
    cd.phi = pr.phi;
    cd.excluded = pr.excluded;
    cd.ch = sqrt(tanh(h));
    cd.omega_star = cd.ch * cd.phi + Omega(cd.phi, h);
    for (int j = 0; j <= p; ++j) {
        const Real x = cd.phi + j;
        const Real Om = Omega(x, h);
        cd.Omega.push_back(Om);
        cd.t.push_back(x / Om);
        cd.omega_plus.push_back(cd.ch * x - Om);
        cd.omega_minus.push_back(cd.ch * x + Om);
    }
    if (!allow_excluded) {
        const Real gap("1e-10");
        for (int j = 0; j <= p; ++j)
            for (int s : {1, -1}) {
                if ((j == 0 && s == -1) || (j == p && s == 1)) continue;
                if (abs(cd.omega(j, s) - cd.omega_star) < gap)
                    throw ExcludedDepth("near-resonant frequency in the collision tables");
            }
    }
    cd.alpha1 = -cd.ch + dOmega(cd.phi + p, h);
    cd.gamma1 = cd.ch + dOmega(cd.phi, h);
    cd.T1 = cd.alpha1 + cd.gamma1;
    cd.E = (cd.gamma1 - cd.alpha1) / (cd.gamma1 + cd.alpha1);
    return cd;
}

Real phi_shallow(int p, const Real& h) {
    const Real pp(p);
    return pp * (pp * pp - 1) * h * h / 12 + (19 - 15 * pp * pp - 4 * pp * pp * pp * pp) * pp * pow(h, 4) / 720;
}

Real phi_deep(int p, const Real& h) {
    const Real base = Real((p - 1) * (p - 1)) / 4;
    if (p == 2) return base + Real(3) / 8 * exp(-h / 2);
    if (p == 3) return base - Real(8) / 3 * exp(-2 * h);
    return base - Real(p * p - 1) / 2 * exp(-2 * h);
}

}  // namespace isola
