#pragma once

#include "isola/real.hpp"

#include <stdexcept>
#include <vector>

namespace isola {

// Raised when phi(p,h) is an integer (within 1e-8) or a denominator of the
// beta1 sum is near resonant.
class ExcludedDepth : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Omega(phi, h) = sqrt(phi tanh(h phi)).
Real Omega(const Real& phi, const Real& h);
// d Omega / d phi.
Real dOmega(const Real& phi, const Real& h);
// omega^sigma(phi, h) = c_h phi - sigma Omega(phi, h), sigma = +1 or -1.
Real dispersion(const Real& phi, const Real& h, int sigma);
// F_p(phi, h) = Omega(phi) + Omega(phi + p) - c_h p.
Real collision_function(int p, const Real& phi, const Real& h);

struct PhiResult {
    Real phi;
    Real residual;
    bool excluded = false;
};

// Unique root of F_p on (phi(p-1,h), (p-1)^2/4] for p >= 3, (0,1) for p = 2.
PhiResult solve_phi(int p, const Real& h);

struct CollisionData {
    int p = 0;
    Real h;
    Real phi;
    Real omega_star;
    Real ch;
    std::vector<Real> Omega;       // Omega_j = Omega(j + phi), j = 0..p
    std::vector<Real> t;           // t_j = (j + phi) / Omega_j
    std::vector<Real> omega_plus;  // omega_j^+
    std::vector<Real> omega_minus; // omega_j^-
    Real alpha1, gamma1, T1, E;
    bool excluded = false;

    const Real& omega(int j, int sigma) const {
        return sigma > 0 ? omega_plus[static_cast<std::size_t>(j)] : omega_minus[static_cast<std::size_t>(j)];
    }
};

// Tables for the beta1 formula; throws ExcludedDepth on integer phi unless allow_excluded.
CollisionData collision_tables(int p, const Real& h, bool allow_excluded = false);

// Shallow-water expansion p(p^2-1)h^2/12 + (19 - 15p^2 - 4p^4) p h^4 / 720.
Real phi_shallow(int p, const Real& h);
// Deep-water expansion (p-1)^2/4 + y(p,h).
Real phi_deep(int p, const Real& h);

}  // namespace isola
