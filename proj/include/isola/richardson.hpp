#pragma once

#include "isola/real.hpp"

#include <stdexcept>
#include <vector>

namespace isola {

// Limit as h -> 0 of samples v_i = A + B h_i^2 + C h_i^4 + ... taken on a halving grid
// h_0, h_0/2, h_0/4, ... (Neville table in h^2, ratio 4 per level).
inline Real richardson_h2(std::vector<Real> v) {
    if (v.empty()) throw std::invalid_argument("richardson needs at least one sample");
    Real factor = 4;
    for (std::size_t level = 1; level < v.size(); ++level) {
        for (std::size_t i = 0; i + level < v.size(); ++i) v[i] = (factor * v[i + 1] - v[i]) / (factor - 1);
        factor *= 4;
    }
    return v.front();
}

// Leading and next constants of Q(h) = h^alpha (A + B h^2 + O(h^4)) from samples on a halving grid.
struct ShallowFit {
    Real leading;
    Real second;
};

inline ShallowFit fit_shallow(const std::vector<Real>& hs, const std::vector<Real>& q, const Real& alpha) {
    if (hs.size() != q.size() || hs.size() < 2) throw std::invalid_argument("shallow fit needs matching samples");
    std::vector<Real> r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = q[i] * pow(hs[i], -alpha);
    ShallowFit fit;
    fit.leading = richardson_h2(r);
    const std::size_t n = r.size();
    const Real g1 = (r[n - 2] - fit.leading) / (hs[n - 2] * hs[n - 2]);
    const Real g2 = (r[n - 1] - fit.leading) / (hs[n - 1] * hs[n - 1]);
    fit.second = richardson_h2({g1, g2});
    return fit;
}

}  // namespace isola
