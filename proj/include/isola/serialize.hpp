#pragma once

#include "isola/beta1.hpp"
#include "isola/collision.hpp"
#include "isola/exactfield.hpp"
#include "isola/linearization.hpp"
#include "isola/real.hpp"
#include "isola/spectrum.hpp"
#include "isola/stokes.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace isola {

using json = nlohmann::ordered_json;

// {"g": 0|1, "num": [...], "den": [...]}: integer coefficient lists, low degree first, as decimal strings.
json to_json(const GradedScalar& s);
GradedScalar graded_from_json(const json& j);

// Decimal string at the value's full precision.
json to_json(const Real& x);
Real real_from_json(const json& j);

template <class S>
void put_series(json& out, const char* name, const EpsSeries<S>& f, bool constant_only = false) {
    for (int l = 0; l <= f.N(); ++l) {
        for (std::size_t i = 0; i < f[l].size(); ++i) {
            const int k = f[l].harmonic(i);
            if (constant_only) {
                if (k == 0) out[std::string(name) + "[" + std::to_string(l) + "]"] = to_json(f[l][i]);
            } else {
                out[std::string(name) + "[" + std::to_string(l) + "][" + std::to_string(k) + "]"] = to_json(f[l][i]);
            }
        }
    }
}

template <class S>
json stokes_json(const StokesExpansion<S>& st, const json& meta) {
    json out = meta;
    out["order"] = st.N;
    json coeffs = json::object();
    put_series(coeffs, "eta", st.eta);
    put_series(coeffs, "psi", st.psi);
    put_series(coeffs, "c", st.c, true);
    out["coefficients"] = std::move(coeffs);
    return out;
}

template <class S>
json linearization_json(const LinearizationCoeffs<S>& lin, const json& meta) {
    json out = meta;
    out["order"] = lin.N;
    json coeffs = json::object();
    put_series(coeffs, "p", lin.p);
    put_series(coeffs, "a", lin.a);
    put_series(coeffs, "f", lin.f, true);
    out["coefficients"] = std::move(coeffs);
    return out;
}

json collision_json(const CollisionData& cd);
json beta1_json(const Beta1Result& r);
json isola_json(const IsolaTrace& tr);

// CSV writer: '.' decimal point, '\n' line endings, header row, no locale dependence.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, const std::vector<std::string>& header);
    void row(const std::vector<std::string>& cells);
    static std::string num(double x);

private:
    std::ostream& os_;
    std::size_t width_;
};

}  // namespace isola
