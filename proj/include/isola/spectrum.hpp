#pragma once

#include "isola/collision.hpp"
#include "isola/linearization.hpp"
#include "isola/real.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace isola {

using cplx = std::complex<double>;

// Bloch-Floquet operator L_{mu,eps} truncated to the modes e^{ijx}, j = -M..M.
struct TruncatedOperator {
    double h = 0, mu = 0, eps = 0;
    int M = 0, K = 0;
    Eigen::MatrixXcd matrix;  // 2(2M+1) square; block rows (eta, psi), columns ordered j = -M..M
};

// Coefficients of L_{mu,eps} summed to order K at amplitude eps.
struct OperatorSymbols {
    double ch = 0;
    double f = 0;                 // f_eps
    std::vector<double> p_cos;    // p_eps(x) = sum_k p_cos[k] cos(kx)
    std::vector<double> a_cos;    // a_eps(x) = sum_k a_cos[k] cos(kx)
};

OperatorSymbols operator_symbols(const LinearizationCoeffs<Real>& lin, const Real& ch, double eps, int K);

TruncatedOperator build_truncated(double h, double mu, double eps, int M, int K, const LinearizationCoeffs<Real>& lin);
TruncatedOperator build_truncated(double h, double mu, int M, const OperatorSymbols& sym);

std::vector<cplx> eigenvalues(const Eigen::MatrixXcd& m);
std::vector<cplx> eigenvalues(const TruncatedOperator& op);

struct IsolaSample {
    double mu = 0;
    cplx lambda_plus, lambda_minus;
};

struct EllipseFit {
    double semi_re = 0;  // semi-axis along the real direction
    double semi_im = 0;  // semi-axis along the imaginary direction
    double center_im = 0;
    double aspect = 0;   // semi_im / semi_re, compared with E = (gamma1 - alpha1) / (gamma1 + alpha1)
    double rms = 0;      // rms of x^2 - (A + B y + C y^2) over the samples
};

struct IsolaPrediction {
    double semi_re = 0;    // |beta1| eps^p
    double width = 0;      // 4 |beta1| / T1 eps^p
    double E = 0;          // (gamma1 - alpha1) / (gamma1 + alpha1)
    double omega_star = 0;
    double beta1 = 0;
    double T1 = 0;
};

struct IsolaTrace {
    int p = 0;
    double h = 0, eps = 0;
    int M = 0, K = 0;
    double phi = 0;
    std::vector<IsolaSample> samples;
    double mu_center = 0;
    double mu_wedge = 0, mu_vee = 0;
    double max_re = 0;
    double min_re_minus = 0;
    double center_im = 0;
    EllipseFit ellipse;
    IsolaPrediction prediction;
};

struct IsolaOptions {
    int M = 16;
    int K = 0;              // 0 selects p + 2
    int samples = 64;
    int grid = 201;         // coarse mu grid used to locate the unstable interval
    double mu_window = 0;   // 0 selects a window from the predicted width and an eps^2 allowance
    int threads = 1;
    int precision_bits = kDefaultPrecisionBits;
};

// Traces the p-th isola at depth h and amplitude eps.
IsolaTrace trace_isola(int p, double h, double eps, const IsolaOptions& opt);
IsolaTrace trace_isola(int p, double h, double eps, const IsolaOptions& opt, const LinearizationCoeffs<Real>& lin,
                       double beta1);

// Least-squares fit x^2 = A + B y + C y^2 of points (x, y) = (Re, Im).
EllipseFit fit_ellipse(const std::vector<cplx>& pts);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace isola
