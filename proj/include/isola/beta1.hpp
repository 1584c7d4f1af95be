#pragma once

#include "isola/collision.hpp"
#include "isola/real.hpp"

#include <vector>

namespace isola {

// Maximal Taylor-Fourier coefficients a_l^{[l]}, p_l^{[l]} for l = 1..order (index 0 unused).
struct MaximalCoeffs {
    int order = 0;
    std::vector<Real> a;
    std::vector<Real> p;
};

MaximalCoeffs maximal_linearization_coeffs(const Real& h, int order, int precision_bits);

// Entanglement coefficient with the eps power stripped: value = magnitude * i^ipow.
struct EntanglementCoeff {
    int l = 0, j = 0, sigma = 1, sigma_prime = 1;
    Real magnitude;
    int ipow = 0;

    Real real_part() const;
    Real imag_part() const;
};

// Coefficient linking (j, sigma) to (j + l, sigma_prime).
EntanglementCoeff ent_coeff(const CollisionData& cd, const MaximalCoeffs& mc, int l, int j, int sigma,
                            int sigma_prime);

struct Beta1Result {
    int p = 0;
    Real h;
    Real beta1;
    Real imag_residual;
    long term_count = 0;
    Real b0;
    // partial[q][m]: real part of the terms with q intermediate indices and m minus signs
    std::vector<std::vector<Real>> partial;
    bool excluded = false;
};

// Closed-form sum for beta1^{(p)}(h).
Beta1Result beta1_eval(int p, const Real& h, int precision_bits);

// Same sum from precomputed tables (no excluded-depth handling).
Beta1Result beta1_sum(const CollisionData& cd, const MaximalCoeffs& mc);

struct RootScan {
    std::vector<double> roots;
    std::vector<double> excluded_gaps;
};

// Sign-change scan on grid_n points refined to 1e-6 (and below) by bracketing.
RootScan beta1_roots(int p, double h_lo, double h_hi, int grid_n, int precision_bits);

// Shallow-water limit of beta1 h^{3p - 11/2}.
Real beta1_shallow_constant(int p);

// Deep-water tensor: nu_j = sqrt(j + (p-1)^2/4), B and the signed sum S over sign vectors.
Real nu_deep(int p, int j);
Real deep_B(int p, const std::vector<int>& js, const std::vector<int>& sigmas);
Real deep_S(int p, const std::vector<int>& js);

}  // namespace isola
