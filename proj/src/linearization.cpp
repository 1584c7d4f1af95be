#include "isola/linearization.hpp"

#include "isola/richardson.hpp"

namespace isola {

LinearizationLimitsReport verify_linearization_limits(int lmax, int precision_bits) {
    if (lmax < 2 || lmax > 8) throw std::invalid_argument("limit checks cover orders 2..8");
    PrecisionGuard guard(precision_bits);
    LinearizationLimitsReport rep;
    rep.shallow_h = {Real("0.08"), Real("0.04"), Real("0.02")};
    rep.deep_h = 15;
    std::vector<LinearizationCoeffs<Real>> shallow;
    for (const Real& h : rep.shallow_h) {
        const NumericField fld(h, precision_bits);
        shallow.push_back(linearization_coeffs(fld, stokes_expand(fld, lmax)));
    }
    const NumericField deep_fld(rep.deep_h, precision_bits);
    const auto deep = linearization_coeffs(deep_fld, stokes_expand(deep_fld, lmax));

    rep.max_shallow_rel = 0;
    rep.max_deep_gap = 0;
    for (int l = 2; l <= lmax; ++l) {
        LinearizationLimitRow row;
        row.l = l;
        std::vector<Real> pv, av;
        for (const auto& lin : shallow) {
            pv.push_back(lin.p[l].leading());
            av.push_back(lin.a[l].leading());
        }
        const ShallowFit fp = fit_shallow(rep.shallow_h, pv, Real(3 - 3 * l) - Real(0.5));
        const ShallowFit fa = fit_shallow(rep.shallow_h, av, Real(2 - 3 * l));
        const Real x = pow(Real(3) / 8, l - 1);
        row.p_lead = fp.leading;
        row.p_second = fp.second;
        row.a_lead = fa.leading;
        row.a_second = fa.second;
        row.p_lead_expected = -2 * l * x;
        row.p_second_expected = -l * x * Real(11 * l * l - 9 * l + 1) / 9;
        row.a_lead_expected = -l * x;
        row.a_second_expected = -l * x * Real(31 * l * l - 9 * l + 2) / 18;
        row.rel_p_lead = abs(row.p_lead / row.p_lead_expected - 1);
        row.rel_p_second = abs(row.p_second / row.p_second_expected - 1);
        row.rel_a_lead = abs(row.a_lead / row.a_lead_expected - 1);
        row.rel_a_second = abs(row.a_second / row.a_second_expected - 1);
        rep.max_shallow_rel =
            std::max({rep.max_shallow_rel, row.rel_p_lead, row.rel_p_second, row.rel_a_lead, row.rel_a_second});

        row.deep_p = deep.p[l].leading();
        row.deep_a = deep.a[l].leading();
        row.deep_gap = abs(row.deep_p - row.deep_a);
        rep.max_deep_gap = std::max(rep.max_deep_gap, row.deep_gap);
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace isola
