#include "isola/verify.hpp"

#include "isola/beta1.hpp"
#include "isola/combinatorics.hpp"
#include "isola/field.hpp"
#include "isola/linearization.hpp"
#include "isola/richardson.hpp"
#include "isola/spectrum.hpp"
#include "isola/stokes.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <iomanip>
#include <locale>
#include <random>
#include <sstream>

namespace isola {

namespace {

class Detail {
public:
    Detail() { os_.imbue(std::locale::classic()); }
    template <class T>
    Detail& operator<<(const T& v) {
        os_ << v;
        return *this;
    }
    Detail& operator<<(const Real& v) {
        os_ << to_decimal(v, 6);
        return *this;
    }
    std::string str() const { return os_.str(); }

private:
    std::ostringstream os_;
};

std::string sci(double x) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(4) << x;
    return os.str();
}

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
int uniform_int(Rng& rng, int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }

// ---------------------------------------------------------------- criteria

CriterionResult c1_cancellation(const VerifyOptions& opt) {
    CriterionResult r{1, "A(p) = 0 (enumeration and determinant), III v = 0", true, 0, 30, ""};
    int bad = 0;
    for (int p = 2; p <= 40; ++p)
        if (Ap_bruteforce(p, opt.threads) != 0 || Ap_determinant(p) != 0) {
            ++bad;
            r.detail += "A(" + std::to_string(p) + ") != 0; ";
        }
    int kernel_bad = 0;
    for (int p = 2; p <= 200; ++p)
        if (!III_kernel_check(p)) ++kernel_bad;
    r.pass = bad == 0 && kernel_bad == 0;
    r.detail += "A(p) exact zero for " + std::to_string(39 - bad) + "/39 p in 2..40; kernel identity holds for " +
                std::to_string(199 - kernel_bad) + "/199 p in 2..200";
    return r;
}

CriterionResult c2_cp(const VerifyOptions& opt) {
    CriterionResult r{2, "C(p) = p(p+1)^2/3 exactly, p = 2..20", true, 0, 60, ""};
    int bad = 0;
    for (int p = 2; p <= 20; ++p)
        if (Cp_bruteforce(p, opt.threads) != Cp_expected(p)) {
            ++bad;
            r.detail += "C(" + std::to_string(p) + ") mismatch; ";
        }
    r.pass = bad == 0;
    r.detail += "C(p)=p(p+1)^2/3 verified exactly for " + std::to_string(19 - bad) + "/19 values";
    return r;
}

CriterionResult c3_residual(const VerifyOptions& opt) {
    CriterionResult r{3, "Stokes residual < 10 eps^9 (h = 1, eps = 1e-2, N = 8, 64 points)", true, 0, 5, ""};
    PrecisionGuard guard(opt.precision_bits);
    const Real h(1), eps("0.01");
    const auto st = stokes_expand(NumericField(h, opt.precision_bits), 8);
    const TravelingResidual res = traveling_residual(st, h, eps, 64, 40);
    const Real bound = 10 * pow(eps, 9);
    r.pass = res.sup < bound;
    Detail d;
    d << "sup residual " << res.sup << " (kinematic " << res.kinematic << ", dynamic " << res.dynamic << "), bound "
      << bound << ", residual/eps^9 = " << Real(res.sup / pow(eps, 9));
    r.detail = d.str();
    return r;
}

CriterionResult c4_shallow(const VerifyOptions& opt) {
    CriterionResult r{4, "shallow constants x, y, z and p, a within 5% (l = 2..6)", true, 0, 60, ""};
    const auto st = verify_stokes_limits(6, opt.precision_bits);
    const auto lin = verify_linearization_limits(6, opt.precision_bits);
    const Real tol("0.05");
    r.pass = st.max_shallow_rel < tol && lin.max_shallow_rel < tol;
    Detail d;
    d << "max relative error: Stokes (x, y, z) " << st.max_shallow_rel << ", linearization (p, a) "
      << lin.max_shallow_rel << "; Richardson on h = 0.08, 0.04, 0.02";
    r.detail = d.str();
    return r;
}

CriterionResult c5_deep(const VerifyOptions& opt) {
    CriterionResult r{5, "deep water: eta = psi and p = a at h = 15; exact eta_2(inf) = 1/2", true, 0, 10, ""};
    const auto st = verify_stokes_limits(6, opt.precision_bits);
    const auto lin = verify_linearization_limits(6, opt.precision_bits);
    const auto ex = exact_deep_limits(2);
    const bool exact_ok = ex[1].eta == BigRational(1, 2) && ex[1].psi == BigRational(1, 2);
    const Real tol("1e-6");
    r.pass = st.max_deep_gap < tol && lin.max_deep_gap < tol && exact_ok;
    Detail d;
    d << "max |eta - psi| " << st.max_deep_gap << ", max |p - a| " << lin.max_deep_gap << ", exact eta_2(inf) = "
      << ex[1].eta.get_str() << ", psi_2(inf) = " << ex[1].psi.get_str();
    r.detail = d.str();
    return r;
}

CriterionResult c6_collision(const VerifyOptions& opt) {
    CriterionResult r{6, "collision root: shallow and deep laws, |F_p| < 1e-12", true, 0, 5, ""};
    PrecisionGuard guard(opt.precision_bits);
    Real worst_shallow = 0;
    const Real hs("0.02");
    for (int p = 2; p <= 5; ++p) {
        const Real ratio = solve_phi(p, hs).phi / (hs * hs) / (Real(p * (p * p - 1)) / 12);
        worst_shallow = std::max(worst_shallow, Real(abs(ratio - 1)));
    }
    const Real hd(15);
    const Real deep_ratio = (solve_phi(2, hd).phi - Real(0.25)) / (Real(3) / 8 * exp(-hd / 2));
    Real worst_res = 0;
    for (int p = 2; p <= 8; ++p)
        for (const char* h : {"0.02", "0.05", "0.1", "0.3", "0.5", "1", "2", "5", "10", "15"})
            worst_res = std::max(worst_res, Real(abs(solve_phi(p, Real(h)).residual)));
    r.pass = worst_shallow < Real("0.01") && abs(deep_ratio - 1) < Real("0.05") && worst_res < Real("1e-12");
    Detail d;
    d << "max |phi/h^2 / (p(p^2-1)/12) - 1| = " << worst_shallow << " at h = 0.02; (phi(2,15) - 1/4)/((3/8)e^-7.5) = "
      << deep_ratio << "; max |F_p| = " << worst_res;
    r.detail = d.str();
    return r;
}

CriterionResult c7_roots(const VerifyOptions&) {
    CriterionResult r{7, "beta1 zeros 1.84940 (p=2), 0.82064 (p=3), 0.566633 and 1.255969 (p=4)", true, 0, 120, ""};
    struct Case {
        int p;
        double lo, hi;
        int n;
        std::vector<double> expected;
    };
    const std::vector<Case> cases = {{2, 0.5, 3.0, 200, {1.84940}},
                                     {3, 0.3, 2.0, 200, {0.82064}},
                                     {4, 0.3, 2.0, 400, {0.566633, 1.255969}}};
    Detail d;
    for (const auto& c : cases) {
        const RootScan scan = beta1_roots(c.p, c.lo, c.hi, c.n, 128);
        d << "p=" << c.p << ":";
        for (double root : scan.roots) d << " " << sci(root);
        d << "; ";
        for (double e : c.expected) {
            bool found = false;
            for (double root : scan.roots) found = found || std::abs(root - e) < 1e-3;
            r.pass = r.pass && found;
        }
    }
    r.detail = d.str();
    return r;
}

CriterionResult c8_shallow_beta(const VerifyOptions& opt) {
    CriterionResult r{8, "beta1 h^(3p-11/2) shallow limit within 10%, p = 2, 3, 4", true, 0, 120, ""};
    PrecisionGuard guard(opt.precision_bits);
    Detail d;
    const std::vector<Real> hs = {Real("0.08"), Real("0.04"), Real("0.02")};
    for (int p = 2; p <= 4; ++p) {
        std::vector<Real> v;
        for (const Real& h : hs) v.push_back(beta1_eval(p, h, opt.precision_bits).beta1 * pow(h, 3 * p - Real(5.5)));
        const Real lim = richardson_h2(v);
        const Real target = beta1_shallow_constant(p);
        const Real rel = abs(lim / target - 1);
        r.pass = r.pass && rel < Real("0.1");
        d << "p=" << p << ": " << lim << " vs " << target << " (rel " << rel << "); ";
    }
    r.detail = d.str();
    return r;
}

CriterionResult c9_deep_beta(const VerifyOptions& opt) {
    CriterionResult r{9, "beta1 deep decay (p = 2..5) and S-tensor cancellation (q <= 4, p <= 6)", true, 0, 60, ""};
    PrecisionGuard guard(opt.precision_bits);
    Detail d;
    for (int p = 2; p <= 5; ++p) {
        const Beta1Result b15 = beta1_eval(p, Real(15), opt.precision_bits);
        const Beta1Result b1 = beta1_eval(p, Real(1), opt.precision_bits);
        const Real ratio = abs(b15.beta1) / abs(b1.beta1);
        r.pass = r.pass && ratio < Real("0.01");
        d << "p=" << p << " |b(15)/b(1)| " << ratio << (b15.excluded ? " (continued)" : "") << "; ";
    }
    Real worst = 0;
    int tuples = 0;
    for (int p = 2; p <= 6; ++p) {
        std::vector<int> js;
        std::function<void(int)> walk = [&](int start) {
            if (!js.empty()) {
                worst = std::max(worst, Real(abs(deep_S(p, js))));
                ++tuples;
            }
            if (static_cast<int>(js.size()) == 4) return;
            for (int j = start; j < p; ++j) {
                js.push_back(j);
                walk(j + 1);
                js.pop_back();
            }
        };
        walk(1);
    }
    r.pass = r.pass && worst < Real("1e-25");
    d << "max |S| over " << tuples << " tuples = " << worst;
    r.detail = d.str();
    return r;
}

CriterionResult c10_spectrum(const VerifyOptions& opt) {
    CriterionResult r{10, "spectrum vs prediction (p = 2, h = 1, M = 16, K = 4; p = 3 slope)", true, 0, 180, ""};
    Detail d;
    IsolaOptions io;
    io.M = 16;
    io.K = 4;
    io.threads = opt.threads;
    io.precision_bits = opt.precision_bits;
    std::vector<double> es, mr;
    for (double e : {0.02, 0.05}) {
        const IsolaTrace tr = trace_isola(2, 1.0, e, io);
        const double size = tr.max_re / tr.prediction.semi_re;
        const double width = (tr.mu_vee - tr.mu_wedge) / tr.prediction.width;
        r.pass = r.pass && std::abs(size - 1) < 0.10 && std::abs(width - 1) < 0.15;
        d << "eps=" << e << " maxRe/pred " << sci(size) << " width/pred " << sci(width) << "; ";
        es.push_back(e);
        mr.push_back(tr.max_re);
    }
    const double s2 = loglog_slope(es, mr);
    r.pass = r.pass && std::abs(s2 - 2) < 0.1;
    d << "slope p=2 " << sci(s2) << "; ";

    io.K = 5;
    es.clear();
    mr.clear();
    for (double e : {0.025, 0.05, 0.1}) {
        es.push_back(e);
        mr.push_back(trace_isola(3, 1.0, e, io).max_re);
    }
    const double s3 = loglog_slope(es, mr);
    r.pass = r.pass && std::abs(s3 - 3) < 0.15;
    d << "slope p=3 over eps 0.025..0.1 " << sci(s3) << "; ";

    PrecisionGuard guard(opt.precision_bits);
    const NumericField fld(Real(1), opt.precision_bits);
    const auto lin = linearization_coeffs(fld, stokes_expand(fld, 4));
    const double phi = static_cast<double>(solve_phi(2, Real(1)).phi);
    double worst_re = 0, worst_pair = 0;
    for (double mu : {phi, 0.1, 0.37, -0.25}) {
        const auto ev = eigenvalues(build_truncated(1.0, mu, 0.0, 16, 4, lin));
        for (const auto& z : ev) {
            worst_re = std::max(worst_re, std::abs(z.real()));
            double best = 1e300;
            for (const auto& w : ev) best = std::min(best, std::abs(w + std::conj(z)));
            worst_pair = std::max(worst_pair, best);
        }
    }
    for (double mu : {phi, 0.37})
        for (double e : {0.05, 0.1}) {
            const auto ev = eigenvalues(build_truncated(1.0, mu, e, 16, 4, lin));
            for (const auto& z : ev) {
                double best = 1e300;
                for (const auto& w : ev) best = std::min(best, std::abs(w + std::conj(z)));
                worst_pair = std::max(worst_pair, best);
            }
        }
    r.pass = r.pass && worst_re < 1e-12 && worst_pair < 1e-10;
    d << "eps=0 max |Re| " << sci(worst_re) << ", pairing defect " << sci(worst_pair);
    r.detail = d.str();
    return r;
}

CriterionResult c11_properties(const VerifyOptions& opt) {
    CriterionResult r{11, "property suites (parity/grading, exact vs numeric, phase reality, isola symmetry)", true, 0,
                      120, ""};
    const int n = std::max(opt.property_cases, 200);
    const std::vector<PropertyReport> reps = {property_parity_grading(n, opt.seed),
                                              property_exact_numeric(n, opt.seed + 1, opt.precision_bits),
                                              property_phase_reality(n, opt.seed + 2, opt.precision_bits),
                                              property_isola_symmetry(n, opt.seed + 3, opt.precision_bits)};
    Detail d;
    for (const auto& p : reps) {
        r.pass = r.pass && p.failures == 0 && p.cases >= 200;
        d << p.name << " " << (p.cases - p.failures) << "/" << p.cases;
        if (p.failures) d << " [" << p.first_failure << "]";
        d << "; ";
    }
    r.detail = d.str();
    return r;
}

// ---------------------------------------------------------------- property helpers

Poly random_poly(Rng& rng, int max_degree, bool nonzero) {
    for (;;) {
        std::vector<BigRational> c;
        const int deg = uniform_int(rng, 0, max_degree);
        for (int i = 0; i <= deg; ++i) c.emplace_back(uniform_int(rng, -9, 9), uniform_int(rng, 1, 5));
        for (auto& x : c) x.canonicalize();
        Poly p(std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

GradedScalar random_scalar(Rng& rng, int grade) {
    return GradedScalar(grade, RatFun(random_poly(rng, 3, false), random_poly(rng, 2, true)));
}

TrigPoly<Real> random_trig(Rng& rng, int order, Parity par) {
    TrigPoly<Real> t(order, par);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = Real(uniform(rng, -1, 1));
    return t;
}

Real trig_eval(const TrigPoly<Real>& t, const Real& x) {
    Real v = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Real kx = Real(t.harmonic(i)) * x;
        v += t[i] * (t.parity() == Parity::Evn ? cos(kx) : sin(kx));
    }
    return v;
}

}  // namespace

PropertyReport property_parity_grading(int cases, std::uint64_t seed) {
    PropertyReport rep{"parity/grading", 0, 0, ""};
    PrecisionGuard guard(128);
    Rng rng(seed);
    auto fail = [&](const std::string& what) {
        if (rep.failures++ == 0) rep.first_failure = what;
    };
    for (int c = 0; c < cases; ++c, ++rep.cases) {
        const int ga = uniform_int(rng, 0, 1), gb = uniform_int(rng, 0, 1), gc = uniform_int(rng, 0, 1);
        const GradedScalar a = random_scalar(rng, ga), b = random_scalar(rng, gb), cc = random_scalar(rng, gc);
        const GradedScalar d = random_scalar(rng, gb);
        const GradedScalar ab = a * b;
        if (!ab.is_zero() && ab.grade() != (ga + gb) % 2) fail("product grade");
        if (!((a * b) * cc == a * (b * cc))) fail("associativity");
        if (!(a * (b + d) == a * b + a * d)) fail("distributivity");
        if (!(gs_arith(a, b, ArithOp::mul) == ab)) fail("gs_arith mul");

        const int la = uniform_int(rng, 0, 6), lb = uniform_int(rng, 0, 6);
        const Parity pa = uniform_int(rng, 0, 1) ? Parity::Evn : Parity::Odd;
        const Parity pb = uniform_int(rng, 0, 1) ? Parity::Evn : Parity::Odd;
        const TrigPoly<Real> ta = random_trig(rng, la, pa), tb = random_trig(rng, lb, pb);
        TrigPoly<Real> prod(la + lb, pa * pb);
        trig_mul_acc(ta, tb, prod);
        const Real x(uniform(rng, 0, 6.283185307179586));
        if (abs(trig_eval(prod, x) - trig_eval(ta, x) * trig_eval(tb, x)) > Real("1e-30")) fail("product-to-sum rule");
        const TrigPoly<Real> dx = trig_dx(ta);
        if (dx.parity() != flip(pa) || dx.order() != la) fail("derivative parity");
    }
    return rep;
}

PropertyReport property_exact_numeric(int cases, std::uint64_t seed, int precision_bits) {
    PropertyReport rep{"exact-vs-numeric", 0, 0, ""};
    const int N = 5;
    const ExactField ef;
    const auto est = stokes_expand(ef, N);
    const auto elin = linearization_coeffs(ef, est);
    Rng rng(seed);
    PrecisionGuard guard(precision_bits);
    const Real tol("1e-20");
    for (int c = 0; c < cases; ++c, ++rep.cases) {
        const Real h(uniform(rng, 0.2, 4.0));
        const NumericField nf(h, precision_bits);
        const auto nst = stokes_expand(nf, N);
        const auto nlin = linearization_coeffs(nf, nst);
        Real worst = 0;
        auto cmp = [&](const EpsSeries<GradedScalar>& e, const EpsSeries<Real>& n) {
            for (int l = 0; l <= N; ++l)
                for (std::size_t i = 0; i < e[l].size(); ++i) {
                    const Real ev = nf.eval(e[l][i]);
                    worst = std::max(worst, Real(abs(ev - n[l][i]) / std::max(Real(1), Real(abs(ev)))));
                }
        };
        cmp(est.eta, nst.eta);
        cmp(est.psi, nst.psi);
        cmp(est.c, nst.c);
        cmp(elin.p, nlin.p);
        cmp(elin.a, nlin.a);
        cmp(elin.f, nlin.f);
        cmp(elin.pgoth, nlin.pgoth);
        if (!(worst < tol) && rep.failures++ == 0) rep.first_failure = "h=" + to_decimal(h, 8) + " err " + to_decimal(worst, 4);
    }
    return rep;
}

PropertyReport property_phase_reality(int cases, std::uint64_t seed, int precision_bits) {
    PropertyReport rep{"phase reality", 0, 0, ""};
    Rng rng(seed);
    PrecisionGuard guard(precision_bits);
    auto fail = [&](const std::string& what) {
        if (rep.failures++ == 0) rep.first_failure = what;
    };
    for (int c = 0; c < cases; ++c, ++rep.cases) {
        const int p = uniform_int(rng, 2, 6);
        const Real h(uniform(rng, 0.3, 3.0));
        const CollisionData cd = collision_tables(p, h, true);
        const MaximalCoeffs mc = maximal_linearization_coeffs(h, p, precision_bits);
        const int l = uniform_int(rng, 1, p);
        const int j = uniform_int(rng, 0, p - l);
        const int s = uniform_int(rng, 0, 1) ? 1 : -1, sp = uniform_int(rng, 0, 1) ? 1 : -1;
        const EntanglementCoeff e = ent_coeff(cd, mc, l, j, s, sp);
        const bool real_expected = s == sp;
        if (real_expected ? e.imag_part() != 0 : e.real_part() != 0) fail("reality pattern");
        // independent complex evaluation with principal square roots
        using C = std::complex<double>;
        const C rs = std::sqrt(C(s, 0)), rsp = std::sqrt(C(sp, 0));
        const auto J = static_cast<std::size_t>(j), JL = static_cast<std::size_t>(j + l),
                   L = static_cast<std::size_t>(l);
        const double mag = std::sqrt(static_cast<double>(cd.Omega[J] * cd.Omega[JL])) / 4 *
                           static_cast<double>(mc.a[L] - mc.p[L] * (s * cd.t[J] + sp * cd.t[JL]));
        const C ref = rs * std::conj(rsp) * mag;
        const C got(static_cast<double>(e.real_part()), static_cast<double>(e.imag_part()));
        if (std::abs(ref - got) > 1e-12 * std::max(1.0, std::abs(ref))) fail("complex value");
        const Beta1Result b = beta1_sum(cd, mc);
        if (abs(b.imag_residual) > Real("1e-20") * std::max(Real(1), Real(abs(b.beta1)))) fail("beta1 imaginary residual");
        long expected_terms = 1;
        for (int i = 1; i < p; ++i) expected_terms *= 3;
        if (b.term_count != expected_terms) fail("term count");
    }
    return rep;
}

PropertyReport property_isola_symmetry(int cases, std::uint64_t seed, int precision_bits) {
    PropertyReport rep{"isola symmetry", 0, 0, ""};
    Rng rng(seed);
    const int bits = std::min(precision_bits, 128);
    PrecisionGuard guard(bits);
    IsolaOptions io;
    io.M = 8;
    io.K = 4;
    io.samples = 12;
    io.grid = 41;
    io.precision_bits = bits;
    for (int c = 0; c < cases; ++c, ++rep.cases) {
        const double h = uniform(rng, 0.6, 1.6);
        const double eps = uniform(rng, 0.01, 0.06);
        const NumericField fld(Real(h), bits);
        const auto lin = linearization_coeffs(fld, stokes_expand(fld, io.K));
        const double b1 = static_cast<double>(beta1_eval(2, Real(h), bits).beta1);
        std::string why;
        try {
            const IsolaTrace tr = trace_isola(2, h, eps, io, lin, b1);
            double defect = std::abs(tr.max_re + tr.min_re_minus);
            double lo = 1e300, hi = -1e300;
            for (const auto& s : tr.samples) {
                defect = std::max(defect, std::abs(s.lambda_minus + std::conj(s.lambda_plus)));
                lo = std::min(lo, s.lambda_plus.imag());
                hi = std::max(hi, s.lambda_plus.imag());
            }
            if (defect > 1e-9) why = "pair not symmetric (" + sci(defect) + ")";
            else if (!(tr.ellipse.center_im >= lo && tr.ellipse.center_im <= hi)) why = "ellipse center outside trace";
        } catch (const std::exception& ex) {
            why = ex.what();
        }
        if (!why.empty() && rep.failures++ == 0) rep.first_failure = "h=" + sci(h) + " eps=" + sci(eps) + ": " + why;
    }
    return rep;
}

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
    using Fn = CriterionResult (*)(const VerifyOptions&);
    static const Fn table[] = {c1_cancellation, c2_cp,         c3_residual,  c4_shallow,
                               c5_deep,         c6_collision,  c7_roots,     c8_shallow_beta,
                               c9_deep_beta,    c10_spectrum,  c11_properties};
    if (id < 1 || id > 11) throw std::out_of_range("acceptance criteria are numbered 1..11");
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = table[id - 1](opt);
    } catch (const std::exception& ex) {
        r.id = id;
        r.pass = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
        r.pass = false;
        r.detail += "; runtime budget exceeded";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 11; ++id) {
        out.push_back(run_criterion(id, opt));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << std::fixed << std::setprecision(2)
       << r.seconds << " s / " << std::setprecision(0) << r.budget_seconds << " s): " << r.detail;
    return os.str();
}

}  // namespace isola
