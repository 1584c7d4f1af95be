#include "isola/serialize.hpp"

#include <iomanip>
#include <locale>
#include <sstream>
#include <stdexcept>

namespace isola {

namespace {

json int_list(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

Poly poly_from_list(const json& a) {
    std::vector<BigRational> c;
    for (const auto& x : a) c.emplace_back(BigInt(x.get<std::string>()));
    return Poly(std::move(c));
}

}  // namespace

json to_json(const GradedScalar& s) {
    // num/den = (N / sN) / (D / sD) = (N * sD) / (D * sN) with integer vectors N, D
    BigRational sn, sd;
    std::vector<BigInt> n = s.rat().num().integer_coeffs(sn);
    std::vector<BigInt> d = s.rat().den().integer_coeffs(sd);
    const BigRational ratio = sd / sn;
    for (auto& x : n) x *= ratio.get_num();
    for (auto& x : d) x *= ratio.get_den();
    json j;
    j["g"] = s.grade();
    j["num"] = int_list(n);
    j["den"] = int_list(d.empty() ? std::vector<BigInt>{BigInt(1)} : d);
    return j;
}

GradedScalar graded_from_json(const json& j) {
    const int g = j.at("g").get<int>();
    if (g != 0 && g != 1) throw std::invalid_argument("grade must be 0 or 1");
    return GradedScalar(g, RatFun(poly_from_list(j.at("num")), poly_from_list(j.at("den"))));
}

json to_json(const Real& x) { return to_decimal(x); }

Real real_from_json(const json& j) { return Real(j.get<std::string>()); }

json collision_json(const CollisionData& cd) {
    json j;
    j["p"] = cd.p;
    j["depth"] = to_json(cd.h);
    j["phi"] = to_json(cd.phi);
    j["omega_star"] = to_json(cd.omega_star);
    j["c_h"] = to_json(cd.ch);
    j["excluded"] = cd.excluded;
    json rows = json::array();
    for (int jj = 0; jj <= cd.p; ++jj) {
        json r;
        r["j"] = jj;
        r["Omega"] = to_json(cd.Omega[static_cast<std::size_t>(jj)]);
        r["t"] = to_json(cd.t[static_cast<std::size_t>(jj)]);
        r["omega_plus"] = to_json(cd.omega_plus[static_cast<std::size_t>(jj)]);
        r["omega_minus"] = to_json(cd.omega_minus[static_cast<std::size_t>(jj)]);
        rows.push_back(std::move(r));
    }
    j["tables"] = std::move(rows);
    j["alpha1"] = to_json(cd.alpha1);
    j["gamma1"] = to_json(cd.gamma1);
    j["T1"] = to_json(cd.T1);
    j["E"] = to_json(cd.E);
    return j;
}

json beta1_json(const Beta1Result& r) {
    json j;
    j["p"] = r.p;
    j["depth"] = to_json(r.h);
    j["beta1"] = to_json(r.beta1);
    j["imag_residual"] = to_json(r.imag_residual);
    j["term_count"] = r.term_count;
    j["b0"] = to_json(r.b0);
    j["excluded"] = r.excluded;
    json parts = json::object();
    for (std::size_t q = 0; q < r.partial.size(); ++q)
        for (std::size_t m = 0; m <= q && m < r.partial[q].size(); ++m)
            parts["q" + std::to_string(q) + "_minus" + std::to_string(m)] = to_json(r.partial[q][m]);
    j["partials"] = std::move(parts);
    return j;
}

json isola_json(const IsolaTrace& tr) {
    json j;
    j["p"] = tr.p;
    j["depth"] = tr.h;
    j["eps"] = tr.eps;
    j["modes"] = tr.M;
    j["order"] = tr.K;
    j["phi"] = tr.phi;
    j["mu_center"] = tr.mu_center;
    j["mu_wedge"] = tr.mu_wedge;
    j["mu_vee"] = tr.mu_vee;
    j["max_re"] = tr.max_re;
    j["center_im"] = tr.center_im;
    j["ellipse"] = {{"semi_re", tr.ellipse.semi_re},
                    {"semi_im", tr.ellipse.semi_im},
                    {"center_im", tr.ellipse.center_im},
                    {"aspect", tr.ellipse.aspect},
                    {"rms", tr.ellipse.rms}};
    j["prediction"] = {{"beta1", tr.prediction.beta1},
                       {"semi_re", tr.prediction.semi_re},
                       {"width", tr.prediction.width},
                       {"E", tr.prediction.E},
                       {"T1", tr.prediction.T1},
                       {"omega_star", tr.prediction.omega_star}};
    return j;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os), width_(header.size()) {
    row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw std::invalid_argument("CSV row width differs from the header");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os_ << ',';
        os_ << cells[i];
    }
    os_ << '\n';
}

std::string CsvWriter::num(double x) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17) << x;
    return os.str();
}

}  // namespace isola
