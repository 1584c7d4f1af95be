#include "isola/field.hpp"

#include <stdexcept>

namespace isola {

NumericField::NumericField(const Real& h, int precision_bits) : bits_(precision_bits) {
    set_precision_bits(precision_bits);
    h_ = Real(h);
    if (h_ <= 0) throw std::invalid_argument("depth must be positive");
    t_ = tanh(h_);
    ch_ = sqrt(t_);
}

Real NumericField::tanh_k(int k) const {
    auto it = tanh_cache_.find(k);
    if (it != tanh_cache_.end()) return it->second;
    Real v = tanh(h_ * k);
    tanh_cache_.emplace(k, v);
    return v;
}

Real NumericField::coth_d(int k, int m) const {
    auto it = coth_cache_.find({k, m});
    if (it != coth_cache_.end()) return it->second;
    Real c = 1 / tanh_k(k);
    const auto& co = coth_derivative_poly(m).coeffs();
    Real acc = 0;
    for (auto p = co.rbegin(); p != co.rend(); ++p) acc = acc * c + to_real(*p);
    coth_cache_.emplace(std::make_pair(k, m), acc);
    return acc;
}

}  // namespace isola
