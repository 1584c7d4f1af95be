#include "isola/beta1.hpp"

#include "isola/field.hpp"
#include "isola/linearization.hpp"

#include <boost/math/tools/roots.hpp>

#include <cstdint>
#include <functional>

namespace isola {

MaximalCoeffs maximal_linearization_coeffs(const Real& h, int order, int precision_bits) {
    NumericField fld(h, precision_bits);
    auto st = stokes_expand(fld, order);
    auto lin = linearization_coeffs(fld, st);
    MaximalCoeffs mc;
    mc.order = order;
    mc.a.assign(static_cast<std::size_t>(order) + 1, Real(0));
    mc.p.assign(static_cast<std::size_t>(order) + 1, Real(0));
    for (int l = 1; l <= order; ++l) {
        mc.a[static_cast<std::size_t>(l)] = lin.a[l].leading();
        mc.p[static_cast<std::size_t>(l)] = lin.p[l].leading();
    }
    return mc;
}

Real EntanglementCoeff::real_part() const {
    switch (ipow & 3) {
        case 0: return magnitude;
        case 2: return -magnitude;
        default: return Real(0);
    }
}

Real EntanglementCoeff::imag_part() const {
    switch (ipow & 3) {
        case 1: return magnitude;
        case 3: return -magnitude;
        default: return Real(0);
    }
}

EntanglementCoeff ent_coeff(const CollisionData& cd, const MaximalCoeffs& mc, int l, int j, int sigma,
                            int sigma_prime) {
    if (l < 1 || l > mc.order) throw std::out_of_range("linearization order missing for entanglement coefficient");
    if (j < 0 || j + l > cd.p) throw std::out_of_range("entanglement index outside 0..p");
    EntanglementCoeff e;
    e.l = l;
    e.j = j;
    e.sigma = sigma;
    e.sigma_prime = sigma_prime;
    // sqrt(sigma) conj(sqrt(sigma')) with sqrt(-1) = i
    e.ipow = (sigma < 0 ? 1 : 0) + (sigma_prime < 0 ? 3 : 0);
    const auto J = static_cast<std::size_t>(j);
    const auto JL = static_cast<std::size_t>(j + l);
    const auto L = static_cast<std::size_t>(l);
    e.magnitude = sqrt(cd.Omega[J] * cd.Omega[JL]) / 4 *
                  (mc.a[L] - mc.p[L] * (sigma * cd.t[J] + sigma_prime * cd.t[JL]));
    return e;
}

Beta1Result beta1_sum(const CollisionData& cd, const MaximalCoeffs& mc) {
    const int p = cd.p;
    Beta1Result res;
    res.p = p;
    res.h = cd.h;
    res.excluded = cd.excluded;
    res.partial.assign(static_cast<std::size_t>(p), std::vector<Real>(static_cast<std::size_t>(p), Real(0)));
    Real re = 0, im = 0;

    // adds value * i^(k-1), the global 1/i included
    auto accumulate = [&](const Real& v, int k, int q, int minus) {
        switch ((k + 3) & 3) {
            case 0:
                re += v;
                res.partial[static_cast<std::size_t>(q)][static_cast<std::size_t>(minus)] += v;
                break;
            case 1: im += v; break;
            case 2:
                re -= v;
                res.partial[static_cast<std::size_t>(q)][static_cast<std::size_t>(minus)] -= v;
                break;
            default: im -= v; break;
        }
        ++res.term_count;
    };

    std::function<void(int, int, int, const Real&, int, int)> walk = [&](int j, int sigma, int q, const Real& mag,
                                                                          int k, int minus) {
        EntanglementCoeff last = ent_coeff(cd, mc, p - j, j, sigma, 1);
        accumulate(mag * last.magnitude, k + last.ipow, q, minus);
        for (int jn = j + 1; jn < p; ++jn)
            for (int sn : {1, -1}) {
                EntanglementCoeff e = ent_coeff(cd, mc, jn - j, j, sigma, sn);
                Real denom = cd.omega(jn, sn) - cd.omega_star;
                // the sign prefactor sigma_1 ... sigma_q folds into the magnitude
                Real m = mag * e.magnitude / denom * sn;
                walk(jn, sn, q + 1, m, k + e.ipow, minus + (sn < 0 ? 1 : 0));
            }
    };
    walk(0, -1, 0, Real(1), 0, 0);

    res.b0 = res.partial[0][0];
    res.beta1 = re;
    res.imag_residual = im;
    return res;
}

namespace {

Beta1Result beta1_direct(int p, const Real& h, int precision_bits) {
    PrecisionGuard guard(precision_bits);
    CollisionData cd = collision_tables(p, h, true);
    MaximalCoeffs mc = maximal_linearization_coeffs(h, p, precision_bits);
    return beta1_sum(cd, mc);
}

}  // namespace

Beta1Result beta1_eval(int p, const Real& h, int precision_bits) {
    PrecisionGuard guard(precision_bits);
    Real hh(h);
    PhiResult pr = solve_phi(p, hh);
    if (!pr.excluded) {
        CollisionData cd = collision_tables(p, hh, false);
        MaximalCoeffs mc = maximal_linearization_coeffs(hh, p, precision_bits);
        return beta1_sum(cd, mc);
    }
    const Real dh("1e-4");
    Beta1Result lo = beta1_direct(p, hh - dh, precision_bits);
    Beta1Result hi = beta1_direct(p, hh + dh, precision_bits);
    Beta1Result out = lo;
    out.h = hh;
    out.beta1 = (lo.beta1 + hi.beta1) / 2;
    out.imag_residual = (lo.imag_residual + hi.imag_residual) / 2;
    out.b0 = (lo.b0 + hi.b0) / 2;
    for (std::size_t q = 0; q < out.partial.size(); ++q)
        for (std::size_t m = 0; m < out.partial[q].size(); ++m)
            out.partial[q][m] = (lo.partial[q][m] + hi.partial[q][m]) / 2;
    out.excluded = true;
    return out;
}

RootScan beta1_roots(int p, double h_lo, double h_hi, int grid_n, int precision_bits) {
    if (!(h_lo > 0) || !(h_hi > h_lo) || grid_n < 2) throw std::invalid_argument("invalid root scan interval");
    PrecisionGuard guard(precision_bits);
    RootScan scan;
    auto f = [&](double h) { return static_cast<double>(beta1_eval(p, Real(h), precision_bits).beta1); };
    std::vector<double> hs(static_cast<std::size_t>(grid_n)), vs(static_cast<std::size_t>(grid_n));
    for (int i = 0; i < grid_n; ++i) {
        hs[static_cast<std::size_t>(i)] = h_lo + (h_hi - h_lo) * i / (grid_n - 1);
        if (solve_phi(p, Real(hs[static_cast<std::size_t>(i)])).excluded)
            scan.excluded_gaps.push_back(hs[static_cast<std::size_t>(i)]);
        vs[static_cast<std::size_t>(i)] = f(hs[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i + 1 < grid_n; ++i) {
        const double a = hs[static_cast<std::size_t>(i)], b = hs[static_cast<std::size_t>(i) + 1];
        const double fa = vs[static_cast<std::size_t>(i)], fb = vs[static_cast<std::size_t>(i) + 1];
        if (fa == 0) {
            scan.roots.push_back(a);
            continue;
        }
        if ((fa < 0) == (fb < 0)) continue;
        boost::math::tools::eps_tolerance<double> tol(40);
        std::uintmax_t iters = 200;
        auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
        scan.roots.push_back((r.first + r.second) / 2);
    }
    if (!vs.empty() && vs.back() == 0) scan.roots.push_back(hs.back());
    return scan;
}

Real beta1_shallow_constant(int p) {
    const Real pp(p);
    return -sqrt((pp * pp - 1) / 3) * pow(Real(3) / 8, p - 1) * pp * pp * (pp + 1) * (pp + 1) / 24;
}

Real nu_deep(int p, int j) { return sqrt(Real(j) + Real((p - 1) * (p - 1)) / 4); }

Real deep_B(int p, const std::vector<int>& js, const std::vector<int>& sigmas) {
    const std::size_t q = js.size();
    if (sigmas.size() != q || q == 0) throw std::invalid_argument("deep_B needs matching nonempty index and sign lists");
    Real b = 1 + nu_deep(p, 0) - sigmas[0] * nu_deep(p, js[0]);
    for (std::size_t i = 0; i < q; ++i) {
        const int jn = i + 1 < q ? js[i + 1] : p;
        const int sn = i + 1 < q ? sigmas[i + 1] : 1;
        b *= (1 - sigmas[i] * nu_deep(p, js[i]) - sn * nu_deep(p, jn)) * (2 * js[i] - p + 1 + 2 * sigmas[i] * nu_deep(p, js[i]));
    }
    return b;
}

Real deep_S(int p, const std::vector<int>& js) {
    const std::size_t q = js.size();
    Real s = 0;
    std::vector<int> sig(q);
    for (unsigned mask = 0; mask < (1u << q); ++mask) {
        int prod = 1;
        for (std::size_t i = 0; i < q; ++i) {
            sig[i] = (mask >> i) & 1u ? -1 : 1;
            prod *= sig[i];
        }
        s += prod * deep_B(p, js, sig);
    }
    return s;
}

}  // namespace isola
