#include "isola/spectrum.hpp"

#include "isola/beta1.hpp"
#include "isola/field.hpp"

#include <boost/math/tools/minima.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace isola {

OperatorSymbols operator_symbols(const LinearizationCoeffs<Real>& lin, const Real& ch, double eps, int K) {
    if (K > lin.N) throw std::invalid_argument("truncation order K exceeds the available linearization order");
    const Real e(eps);
    OperatorSymbols s;
    s.ch = static_cast<double>(ch);
    s.f = static_cast<double>(ts_harmonics(lin.f, e, K)[0]);
    for (const Real& x : ts_harmonics(lin.p, e, K)) s.p_cos.push_back(static_cast<double>(x));
    for (const Real& x : ts_harmonics(lin.a, e, K)) s.a_cos.push_back(static_cast<double>(x));
    return s;
}

TruncatedOperator build_truncated(double h, double mu, int M, const OperatorSymbols& sym) {
    if (M < 1) throw std::invalid_argument("Fourier cutoff must be positive");
    const int n = 2 * M + 1;
    const cplx I(0, 1);
    TruncatedOperator op;
    op.h = h;
    op.mu = mu;
    op.M = M;
    op.K = static_cast<int>(sym.p_cos.size()) - 1;
    op.matrix = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    // exponential Fourier coefficient of a cosine series at index d
    auto hat = [](const std::vector<double>& c, int d) {
        const int k = std::abs(d);
        if (k >= static_cast<int>(c.size())) return 0.0;
        return k == 0 ? c[0] : c[static_cast<std::size_t>(k)] / 2;
    };
    for (int r = 0; r < n; ++r) {
        const int j = r - M;
        const double kj = j + mu;
        for (int c = 0; c < n; ++c) {
            const int k = c - M;
            const double kk = k + mu;
            const double delta = r == c ? 1.0 : 0.0;
            const double pc = sym.ch * delta + hat(sym.p_cos, j - k);
            op.matrix(r, c) = I * kj * pc;
            op.matrix(n + r, c) = -(delta + hat(sym.a_cos, j - k));
            op.matrix(n + r, n + c) = pc * I * kk;
        }
        const double ak = std::abs(kj);
        op.matrix(r, n + r) = ak * std::tanh((h + sym.f) * ak);
    }
    return op;
}

TruncatedOperator build_truncated(double h, double mu, double eps, int M, int K, const LinearizationCoeffs<Real>& lin) {
    const NumericField fld(Real(h), precision_bits());
    TruncatedOperator op = build_truncated(h, mu, M, operator_symbols(lin, fld.ch(), eps, K));
    op.eps = eps;
    return op;
}

std::vector<cplx> eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    if (solver.info() != Eigen::Success) {
        // retry on a slightly perturbed copy
        Eigen::MatrixXcd mp = m;
        const double scale = m.norm() * 1e-15;
        for (Eigen::Index i = 0; i < m.rows(); ++i) mp(i, i) += scale * static_cast<double>(i + 1);
        solver.compute(mp, false);
        if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
    }
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<cplx> eigenvalues(const TruncatedOperator& op) { return eigenvalues(op.matrix); }

EllipseFit fit_ellipse(const std::vector<cplx>& pts) {
    if (pts.size() < 3) throw std::invalid_argument("ellipse fit needs at least three points");
    double ymean = 0;
    for (const auto& z : pts) ymean += z.imag();
    ymean /= static_cast<double>(pts.size());
    Eigen::MatrixXd A(static_cast<Eigen::Index>(pts.size()), 3);
    Eigen::VectorXd b(static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double y = pts[i].imag() - ymean;
        A(static_cast<Eigen::Index>(i), 0) = 1;
        A(static_cast<Eigen::Index>(i), 1) = y;
        A(static_cast<Eigen::Index>(i), 2) = y * y;
        b(static_cast<Eigen::Index>(i)) = pts[i].real() * pts[i].real();
    }
    const Eigen::Vector3d sol = A.colPivHouseholderQr().solve(b);
    EllipseFit fit;
    const double E2 = -sol(2);
    if (!(E2 > 0)) throw std::runtime_error("traced points do not lie on an ellipse");
    const double y0 = sol(1) / (2 * E2);
    const double R2 = sol(0) + E2 * y0 * y0;
    fit.center_im = ymean + y0;
    fit.semi_re = std::sqrt(std::max(R2, 0.0));
    fit.semi_im = fit.semi_re / std::sqrt(E2);
    fit.aspect = 1 / std::sqrt(E2);
    fit.rms = std::sqrt((A * sol - b).squaredNorm() / static_cast<double>(pts.size()));
    return fit;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope fit needs matching samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

struct PairAt {
    cplx plus, minus;
};

class PairTracker {
public:
    PairTracker(double h, int M, OperatorSymbols sym, double omega_ref)
        : h_(h), M_(M), sym_(std::move(sym)), ref_(0, omega_ref) {}

    PairAt at(double mu) const {
        const auto ev = eigenvalues(build_truncated(h_, mu, M_, sym_));
        std::vector<cplx> sorted(ev);
        std::partial_sort(sorted.begin(), sorted.begin() + 2, sorted.end(),
                          [this](const cplx& a, const cplx& b) { return std::abs(a - ref_) < std::abs(b - ref_); });
        cplx a = sorted[0], b = sorted[1];
        const bool swap = std::abs(a.real() - b.real()) > 1e-13 ? a.real() < b.real() : a.imag() < b.imag();
        if (swap) std::swap(a, b);
        return {a, b};
    }

    // negative inside the unstable interval, positive outside
    double gap(double mu) const {
        const PairAt pr = at(mu);
        const cplx d = pr.plus - pr.minus;
        return std::abs(d.imag()) - std::abs(d.real());
    }

    void recenter(double omega) { ref_ = cplx(0, omega); }

private:
    double h_;
    int M_;
    OperatorSymbols sym_;
    cplx ref_;
};

double bisect_edge(const PairTracker& tr, double inside, double outside) {
    for (int it = 0; it < 200 && std::abs(outside - inside) > 1e-15 * std::max(1.0, std::abs(inside)); ++it) {
        const double mid = (inside + outside) / 2;
        if (tr.gap(mid) < 0) inside = mid;
        else outside = mid;
    }
    return (inside + outside) / 2;
}

}  // namespace

IsolaTrace trace_isola(int p, double h, double eps, const IsolaOptions& opt, const LinearizationCoeffs<Real>& lin,
                       double beta1) {
    if (opt.M < 2 * p + 4) throw std::invalid_argument("Fourier cutoff must satisfy M >= 2p + 4");
    const int K = opt.K > 0 ? opt.K : p + 2;
    if (K < p) throw std::invalid_argument("truncation order K must be at least p");
    if (!(eps > 0)) throw std::invalid_argument("amplitude must be positive");
    PrecisionGuard guard(opt.precision_bits);
    const CollisionData cd = collision_tables(p, Real(h));

    IsolaTrace tr;
    tr.p = p;
    tr.h = h;
    tr.eps = eps;
    tr.M = opt.M;
    tr.K = K;
    tr.phi = static_cast<double>(cd.phi);
    auto& pred = tr.prediction;
    pred.beta1 = beta1;
    pred.T1 = static_cast<double>(cd.T1);
    pred.E = static_cast<double>(cd.E);
    pred.omega_star = static_cast<double>(cd.omega_star);
    const double ep = std::pow(eps, p);
    pred.semi_re = std::abs(beta1) * ep;
    pred.width = 4 * std::abs(beta1) / pred.T1 * ep;

    PairTracker tracker(h, opt.M, operator_symbols(lin, cd.ch, eps, K), pred.omega_star);
    const double window = opt.mu_window > 0 ? opt.mu_window : 5 * pred.width + 4 * eps * eps;
    const int grid = std::max(opt.grid, 5);
    std::vector<double> mus(grid), gaps(grid);
    for (int i = 0; i < grid; ++i) mus[static_cast<std::size_t>(i)] = tr.phi - window + 2 * window * i / (grid - 1);
    for (int i = 0; i < grid; ++i) gaps[static_cast<std::size_t>(i)] = tracker.gap(mus[static_cast<std::size_t>(i)]);
    const auto imin = static_cast<std::size_t>(std::min_element(gaps.begin(), gaps.end()) - gaps.begin());
    const double lo = mus[imin == 0 ? 0 : imin - 1];
    const double hi = mus[std::min<std::size_t>(imin + 1, mus.size() - 1)];
    const auto best = boost::math::tools::brent_find_minima([&](double m) { return tracker.gap(m); }, lo, hi, 50);
    double mu_c = best.first;
    if (!(best.second < 0)) throw std::runtime_error("isola below resolution: no unstable pair in the mu window");

    // the point of maximal real part is the isola center
    const auto top = boost::math::tools::brent_find_minima(
        [&](double m) { return -tracker.at(m).plus.real(); }, mu_c - window / (grid - 1), mu_c + window / (grid - 1), 50);
    if (tracker.gap(top.first) < 0) mu_c = top.first;
    tr.mu_center = mu_c;
    const PairAt center = tracker.at(mu_c);
    tracker.recenter((center.plus.imag() + center.minus.imag()) / 2);

    auto outward = [&](double dir) {
        double step = std::max(pred.width / 4, 1e-12);
        double out = mu_c + dir * step;
        while (tracker.gap(out) < 0) {
            step *= 2;
            out = mu_c + dir * step;
            if (step > window) throw std::runtime_error("unstable interval exceeds the mu window");
        }
        return bisect_edge(tracker, mu_c, out);
    };
    tr.mu_wedge = outward(-1);
    tr.mu_vee = outward(+1);

    const int n = std::max(opt.samples, 8);
    tr.samples.resize(static_cast<std::size_t>(n));
    auto fill = [&](int i0, int stride) {
        for (int i = i0; i < n; i += stride) {
            const double mu = tr.mu_wedge + (tr.mu_vee - tr.mu_wedge) * (i + 0.5) / n;
            const PairAt pr = tracker.at(mu);
            tr.samples[static_cast<std::size_t>(i)] = {mu, pr.plus, pr.minus};
        }
    };
    const int workers = std::max(1, std::min(opt.threads, n));
    if (workers == 1) {
        fill(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(fill, w, workers);
        for (auto& t : pool) t.join();
    }

    tr.max_re = center.plus.real();
    tr.min_re_minus = center.minus.real();
    tr.center_im = center.plus.imag();
    std::vector<cplx> pts;
    for (const auto& s : tr.samples) {
        tr.max_re = std::max(tr.max_re, s.lambda_plus.real());
        tr.min_re_minus = std::min(tr.min_re_minus, s.lambda_minus.real());
        pts.push_back(s.lambda_plus);
        pts.push_back(s.lambda_minus);
    }
    tr.ellipse = fit_ellipse(pts);
    return tr;
}

IsolaTrace trace_isola(int p, double h, double eps, const IsolaOptions& opt) {
    const int K = opt.K > 0 ? opt.K : p + 2;
    PrecisionGuard guard(opt.precision_bits);
    const NumericField fld(Real(h), opt.precision_bits);
    const auto lin = linearization_coeffs(fld, stokes_expand(fld, K));
    const double b1 = static_cast<double>(beta1_eval(p, Real(h), opt.precision_bits).beta1);
    return trace_isola(p, h, eps, opt, lin, b1);
}

}  // namespace isola
