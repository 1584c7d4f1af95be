#include "isola/beta1.hpp"
#include "isola/collision.hpp"
#include "isola/combinatorics.hpp"
#include "isola/field.hpp"
#include "isola/linearization.hpp"
#include "isola/real.hpp"
#include "isola/serialize.hpp"
#include "isola/spectrum.hpp"
#include "isola/stokes.hpp"
#include "isola/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <locale>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace isola;

namespace {

struct RunConfig {
    int precision_bits = kDefaultPrecisionBits;
    int threads = 1;
    bool strict = false;
    int warnings = 0;
};

void warn(RunConfig& cfg, const std::string& msg) {
    ++cfg.warnings;
    std::cerr << "warning: " << msg << "\n";
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_positive(const std::vector<double>& grid, const char* what) {
    if (grid.empty()) throw CLI::ValidationError(what, "grid is empty");
    for (double v : grid)
        if (!(v > 0)) throw CLI::ValidationError(what, "grid values must be positive");
}

json meta_for(const RunConfig& cfg, const char* kind, int order, bool exact, double depth) {
    json m;
    m["kind"] = kind;
    m["mode"] = exact ? "exact" : "numeric";
    if (!exact) m["depth"] = depth;
    m["order"] = order;
    m["precision_bits"] = exact ? 0 : cfg.precision_bits;
    return m;
}

std::string fmt(const Real& x, int digits) { return to_decimal(x, digits); }

}  // namespace

int main(int argc, char** argv) {
    std::locale::global(std::locale::classic());
    RunConfig cfg;
    cfg.precision_bits = precision_from_env(kDefaultPrecisionBits);

    CLI::App app{"Isola expansions and spectra of Stokes waves in finite depth"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--precision", cfg.precision_bits, "working precision in bits (ISOLA_PRECISION sets the default)")
        ->check(CLI::Range(53, 1 << 16));
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1, 1024));
    app.add_flag("--strict", cfg.strict, "exit nonzero when an excluded depth is encountered");

    // stokes expand
    auto* stokes = app.add_subcommand("stokes", "Stokes wave expansion");
    stokes->require_subcommand(1);
    auto* expand = stokes->add_subcommand("expand", "coefficients eta, psi, c up to order N");
    int order = 5;
    bool exact = false;
    double depth = 1.0;
    std::string out;
    for (auto* sc : {expand, app.add_subcommand("linearize", "coefficients p, a, f of the linearized operator")}) {
        sc->add_option("--order", order, "truncation order N")->check(CLI::Range(1, 40));
        sc->add_flag("--exact", exact, "rational functions of t = tanh(h) and c_h");
        sc->add_option("--depth", depth, "depth h (numeric mode)")->check(CLI::PositiveNumber);
        sc->add_option("--out", out, "output JSON file (default stdout)");
    }
    auto* linearize = app.get_subcommand("linearize");

    // collision
    auto* collision = app.add_subcommand("collision", "collision Floquet exponent and dispersion tables");
    int p = 2;
    std::vector<double> depths;
    collision->add_option("--p", p, "collision index p")->check(CLI::Range(2, 64));
    collision->add_option("--depth", depths, "depth h (repeatable)")->required();
    collision->add_option("--out", out, "output JSON file (default stdout)");

    // beta1
    auto* beta1 = app.add_subcommand("beta1", "isola coefficient beta1");
    beta1->require_subcommand(1);
    auto* b_eval = beta1->add_subcommand("eval", "beta1 at given depths");
    b_eval->add_option("--p", p)->check(CLI::Range(2, 14));
    b_eval->add_option("--depth", depths, "depth h (repeatable)")->required();
    b_eval->add_option("--out", out, "output JSON file (default stdout)");
    auto* b_curve = beta1->add_subcommand("curve", "beta1 on a uniform depth grid, CSV");
    double from = 0.5, to = 3.0;
    int npts = 200;
    for (auto* sc : {b_curve, beta1->add_subcommand("roots", "zeros of beta1 in a depth interval")}) {
        sc->add_option("--p", p)->check(CLI::Range(2, 14));
        sc->add_option("--from", from, "lower depth")->check(CLI::PositiveNumber);
        sc->add_option("--to", to, "upper depth")->check(CLI::PositiveNumber);
        sc->add_option("--n", npts, "grid points")->check(CLI::Range(2, 1000000));
    }
    b_curve->add_option("--csv", out, "output CSV file (default stdout)");
    auto* b_roots = beta1->get_subcommand("roots");

    // identities
    auto* identities = app.add_subcommand("identities", "exact combinatorial identities");
    std::string which = "A";
    int pmax = 20;
    identities->add_option("--check", which, "A, C or sums")->check(CLI::IsMember({"A", "C", "sums"}));
    identities->add_option("--pmax", pmax, "largest p (or l for sums)")->check(CLI::Range(2, 400));
    identities->add_option("--lmax", pmax, "largest l for sums")->check(CLI::Range(2, 400));

    // spectrum isola
    auto* spectrum = app.add_subcommand("spectrum", "truncated Bloch-Floquet spectrum");
    spectrum->require_subcommand(1);
    auto* isola = spectrum->add_subcommand("isola", "trace the p-th isola and compare with the prediction");
    IsolaOptions io;
    std::vector<double> epss;
    std::string csv;
    isola->add_option("--p", p)->check(CLI::Range(2, 8));
    isola->add_option("--depth", depth)->check(CLI::PositiveNumber);
    isola->add_option("--eps", epss, "amplitude (repeatable)")->required();
    isola->add_option("--modes", io.M, "Fourier modes M (basis size 2M+1)")->check(CLI::Range(4, 256));
    isola->add_option("--order", io.K, "expansion order K of the coefficients (default p+2)")->check(CLI::Range(0, 20));
    isola->add_option("--samples", io.samples, "samples along the isola")->check(CLI::Range(8, 100000));
    isola->add_option("--csv", csv, "CSV of the traced eigenvalues");
    isola->add_option("--out", out, "summary JSON (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "acceptance suite");
    verify->require_subcommand(1);
    auto* v_all = verify->add_subcommand("all", "run all acceptance criteria");
    std::vector<int> only;
    v_all->add_option("--only", only, "restrict to these criterion ids")->check(CLI::Range(1, 11));

    CLI11_PARSE(app, argc, argv);

    try {
        set_precision_bits(cfg.precision_bits);

        if (expand->parsed() || linearize->parsed()) {
            const bool lin = linearize->parsed();
            const json meta = meta_for(cfg, lin ? "linearization" : "stokes", order, exact, depth);
            json j;
            if (exact) {
                const ExactField fld;
                const auto st = stokes_expand(fld, order);
                j = lin ? linearization_json(linearization_coeffs(fld, st), meta) : stokes_json(st, meta);
            } else {
                const NumericField fld(Real(depth), cfg.precision_bits);
                const auto st = stokes_expand(fld, order);
                j = lin ? linearization_json(linearization_coeffs(fld, st), meta) : stokes_json(st, meta);
            }
            emit(out, dump(j));
        } else if (collision->parsed()) {
            require_positive(depths, "--depth");
            json arr = json::array();
            for (double h : depths) {
                const CollisionData cd = collision_tables(p, Real(h), true);
                if (cd.excluded) warn(cfg, "depth " + CsvWriter::num(h) + " is excluded for p = " + std::to_string(p));
                arr.push_back(collision_json(cd));
            }
            emit(out, dump(depths.size() == 1 ? arr[0] : arr));
        } else if (b_eval->parsed()) {
            require_positive(depths, "--depth");
            json arr = json::array();
            for (double h : depths) {
                const Beta1Result r = beta1_eval(p, Real(h), cfg.precision_bits);
                if (r.excluded)
                    warn(cfg, "depth " + CsvWriter::num(h) + " is excluded; value continued from h +- 1e-4");
                arr.push_back(beta1_json(r));
            }
            emit(out, dump(depths.size() == 1 ? arr[0] : arr));
        } else if (b_curve->parsed()) {
            if (!(from < to)) throw CLI::ValidationError("--from/--to", "empty depth interval");
            std::ostringstream os;
            CsvWriter w(os, {"h", "beta1", "excluded"});
            for (int i = 0; i < npts; ++i) {
                const double h = from + (to - from) * i / (npts - 1);
                const Beta1Result r = beta1_eval(p, Real(h), cfg.precision_bits);
                if (r.excluded) warn(cfg, "depth " + CsvWriter::num(h) + " is excluded");
                w.row({CsvWriter::num(h), fmt(r.beta1, 17), r.excluded ? "1" : "0"});
            }
            emit(out, os.str());
        } else if (b_roots->parsed()) {
            if (!(from < to)) throw CLI::ValidationError("--from/--to", "empty depth interval");
            const RootScan scan = beta1_roots(p, from, to, npts, cfg.precision_bits);
            for (double g : scan.excluded_gaps)
                warn(cfg, "sign change at excluded depth near " + CsvWriter::num(g) + " skipped");
            for (double r : scan.roots) {
                std::ostringstream os;
                os.imbue(std::locale::classic());
                os.precision(10);
                os << std::fixed << r;
                std::cout << os.str() << "\n";
            }
            if (scan.roots.empty()) std::cout << "no roots in [" << from << ", " << to << "]\n";
        } else if (identities->parsed()) {
            if (which == "A") {
                int bad = 0;
                for (int q = 2; q <= pmax; ++q) {
                    const bool brute = q > 40 || Ap_bruteforce(q, cfg.threads) == 0;
                    if (!brute || Ap_determinant(q) != 0 || !III_kernel_check(q)) {
                        ++bad;
                        std::cout << "A(" << q << ") != 0\n";
                    }
                }
                if (bad) return 1;
                std::cout << "A(p)=0 verified exactly for p=2.." << pmax << "\n";
            } else if (which == "C") {
                for (int q = 2; q <= pmax; ++q)
                    if (Cp_bruteforce(q, cfg.threads) != Cp_expected(q)) {
                        std::cout << "C(" << q << ") = " << Cp_bruteforce(q, cfg.threads).get_str() << " differs from "
                                  << Cp_expected(q).get_str() << "\n";
                        return 1;
                    }
                std::cout << "C(p)=p(p+1)^2/3 verified exactly\n";
            } else {
                const auto fails = sum_identities_check(pmax);
                for (const auto& f : fails) std::cout << "l=" << f.l << ": " << f.identity << " fails\n";
                if (!fails.empty()) return 1;
                std::cout << "sum identities verified exactly for l=1.." << pmax << "\n";
            }
        } else if (isola->parsed()) {
            require_positive(epss, "--eps");
            if (io.K == 0) io.K = p + 2;
            io.threads = cfg.threads;
            io.precision_bits = cfg.precision_bits;
            std::ostringstream cs;
            CsvWriter w(cs, {"eps", "mu", "re_plus", "im_plus", "re_minus", "im_minus"});
            json arr = json::array();
            for (double e : epss) {
                const IsolaTrace tr = trace_isola(p, depth, e, io);
                for (const auto& s : tr.samples)
                    w.row({CsvWriter::num(e), CsvWriter::num(s.mu), CsvWriter::num(s.lambda_plus.real()),
                           CsvWriter::num(s.lambda_plus.imag()), CsvWriter::num(s.lambda_minus.real()),
                           CsvWriter::num(s.lambda_minus.imag())});
                arr.push_back(isola_json(tr));
            }
            if (!csv.empty()) emit(csv, cs.str());
            emit(out, dump(epss.size() == 1 ? arr[0] : arr));
        } else if (v_all->parsed()) {
            VerifyOptions vo;
            vo.threads = cfg.threads;
            vo.precision_bits = cfg.precision_bits;
            std::vector<int> ids = only;
            if (ids.empty())
                for (int i = 1; i <= 11; ++i) ids.push_back(i);
            int failed = 0;
            for (int id : ids) {
                const CriterionResult r = run_criterion(id, vo);
                std::cout << format_result(r) << std::endl;
                failed += r.pass ? 0 : 1;
            }
            std::cout << (ids.size() - static_cast<std::size_t>(failed)) << "/" << ids.size() << " criteria passed\n";
            return failed == 0 ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return cfg.strict && cfg.warnings > 0 ? 3 : 0;
}
