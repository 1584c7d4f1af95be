#include "isola/exactfield.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace isola {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const BigRational& c) {
    if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const BigRational& c, int degree) {
    if (c == 0) return Poly();
    std::vector<BigRational> v(static_cast<std::size_t>(degree) + 1, BigRational(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const BigRational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    q = Poly();
    if (a.degree() < b.degree()) return;
    std::vector<BigRational> qc(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigRational(0));
    const BigRational inv_lead = 1 / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        BigRational f = r.leading() * inv_lead;
        qc[static_cast<std::size_t>(shift)] = f;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[j + static_cast<std::size_t>(shift)] -= f * b.c_[j];
        r.c_.back() = 0;
        r.trim();
    }
    q = Poly(std::move(qc));
}

Poly Poly::exact_div(const Poly& b) const {
    Poly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    r *= BigRational(1) / leading();
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<BigRational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

BigRational Poly::eval(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<BigInt> Poly::integer_coeffs(BigRational& scale) const {
    BigInt l = 1;
    for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(c_.size());
    BigInt g = 0;
    for (const auto& x : c_) {
        BigInt v = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (g == 0) g = 1;
    for (auto& v : out) v /= g;
    scale = BigRational(l, g);
    scale.canonicalize();
    return out;
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        BigRational a = abs(c_[i]);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly q, r;
        Poly::divmod(x, y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(1) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    BigRational lead = den_.leading();
    if (lead != 1) {
        BigRational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {

RatFun make_reduced(Poly num, Poly den) {
    RatFun r;
    r = RatFun(std::move(num), std::move(den));
    return r;
}

RatFun add_impl(const RatFun& a, const RatFun& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    const Poly bn = subtract ? -b.num() : b.num();
    if (a.den() == b.den()) return make_reduced(a.num() + bn, a.den());
    Poly d1 = gcd(a.den(), b.den());
    if (d1.degree() == 0) return make_reduced(a.num() * b.den() + bn * a.den(), a.den() * b.den());
    Poly ad = a.den().exact_div(d1);
    Poly bd = b.den().exact_div(d1);
    return make_reduced(a.num() * bd + bn * ad, ad * b.den());
}

}  // namespace

RatFun operator+(const RatFun& a, const RatFun& b) { return add_impl(a, b, false); }

RatFun operator-(const RatFun& a, const RatFun& b) { return add_impl(a, b, true); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    if (a.den().degree() == 0 && b.den().degree() == 0) {
        RatFun r;
        r.num_ = a.num_ * b.num_;
        r.num_ *= 1 / (a.den_.leading() * b.den_.leading());
        return r;
    }
    Poly g1 = gcd(a.num(), b.den());
    Poly g2 = gcd(b.num(), a.den());
    Poly n = a.num().exact_div(g1) * b.num().exact_div(g2);
    Poly d = a.den().exact_div(g2) * b.den().exact_div(g1);
    RatFun r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    BigRational lead = r.den_.leading();
    if (lead != 1) {
        BigRational inv = 1 / lead;
        r.num_ *= inv;
        r.den_ *= inv;
    }
    return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero rational function");
    RatFun inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    BigRational lead = inv.den_.leading();
    if (lead != 1) {
        BigRational s = 1 / lead;
        inv.num_ *= s;
        inv.den_ *= s;
    }
    return a * inv;
}

BigRational RatFun::eval(const BigRational& x) const {
    BigRational d = den_.eval(x);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

namespace {

int sign_of(const BigRational& x) { return sgn(x); }

int sturm_variations(const std::vector<Poly>& seq, const BigRational& x) {
    int count = 0, last = 0;
    for (const auto& p : seq) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

bool RatFun::den_nonvanishing_on_unit_interval() const {
    Poly d = den_;
    // strip the factor t^k, whose only root t = 0 lies outside (0,1]
    while (d.degree() > 0 && d.coeff(0) == 0) d = d.exact_div(Poly::t());
    if (d.degree() <= 0) return true;
    constexpr int kGrid = 64;
    int s0 = sign_of(d.eval(BigRational(1, kGrid)));
    for (int i = 1; i <= kGrid; ++i) {
        int s = sign_of(d.eval(BigRational(i, kGrid)));
        if (s == 0 || s != s0) return false;
    }
    std::vector<Poly> seq{d, d.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        Poly q, r;
        Poly::divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    // sign of d is nonzero at 0 after stripping t^k, so the Sturm count is exact
    return sturm_variations(seq, 0) - sturm_variations(seq, 1) == 0;
}

std::string RatFun::str() const {
    if (den_.degree() == 0) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------- GradedScalar

GradedScalar::GradedScalar(int g, RatFun rat) : g_(g), rat_(std::move(rat)) {
    if (g != 0 && g != 1) throw std::invalid_argument("grade must be 0 or 1");
    if (rat_.is_zero()) g_ = 0;
}

namespace {

void check_grades(const GradedScalar& a, const GradedScalar& b) {
    if (!a.is_zero() && !b.is_zero() && a.grade() != b.grade())
        throw std::domain_error("adding graded scalars of different grade");
}

}  // namespace

GradedScalar operator+(const GradedScalar& a, const GradedScalar& b) {
    check_grades(a, b);
    int g = a.is_zero() ? b.g_ : a.g_;
    return GradedScalar(g, a.rat_ + b.rat_);
}

GradedScalar operator-(const GradedScalar& a, const GradedScalar& b) {
    check_grades(a, b);
    int g = a.is_zero() ? b.g_ : a.g_;
    return GradedScalar(g, a.rat_ - b.rat_);
}

GradedScalar operator*(const GradedScalar& a, const GradedScalar& b) {
    if (a.is_zero() || b.is_zero()) return GradedScalar();
    RatFun r = a.rat_ * b.rat_;
    if (a.g_ == 1 && b.g_ == 1) r = r * RatFun::t();
    return GradedScalar((a.g_ + b.g_) % 2, std::move(r));
}

GradedScalar operator/(const GradedScalar& a, const GradedScalar& b) {
    if (b.is_zero()) throw std::domain_error("division by a zero graded scalar");
    if (a.is_zero()) return GradedScalar();
    RatFun r = a.rat_ / b.rat_;
    // c_h^{-1} = c_h / t
    if (a.g_ == 0 && b.g_ == 1) r = r / RatFun::t();
    return GradedScalar((a.g_ + b.g_) % 2, std::move(r));
}

bool operator==(const GradedScalar& a, const GradedScalar& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.g_ == b.g_ && a.rat_ == b.rat_;
}

std::string GradedScalar::str() const {
    if (g_ == 0) return rat_.str();
    return "c_h*" + rat_.str();
}

GradedScalar gs_arith(const GradedScalar& a, const GradedScalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

// ---------------------------------------------------------------- tanh / coth

namespace {

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const RatFun& tanh_multiple(int k) {
    if (k < 1) throw std::invalid_argument("tanh_multiple needs k >= 1");
    static std::map<int, RatFun> cache;
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<BigRational> odd(static_cast<std::size_t>(k) + 1, BigRational(0));
    std::vector<BigRational> even(static_cast<std::size_t>(k) + 1, BigRational(0));
    BigInt binom = 1;
    for (int j = 0; j <= k; ++j) {
        (j % 2 ? odd : even)[static_cast<std::size_t>(j)] = BigRational(binom);
        binom = binom * (k - j) / (j + 1);
    }
    return cache.emplace(k, RatFun(Poly(odd), Poly(even))).first->second;
}

const Poly& coth_derivative_poly(int m) {
    if (m < 0) throw std::invalid_argument("derivative order must be nonnegative");
    static std::vector<Poly> polys{Poly::t()};
    std::lock_guard<std::mutex> lock(cache_mutex());
    const Poly one_minus_c2 = Poly(1) - Poly::monomial(1, 2);
    while (static_cast<int>(polys.size()) <= m) polys.push_back(polys.back().derivative() * one_minus_c2);
    return polys[static_cast<std::size_t>(m)];
}

const RatFun& coth_derivative(int k, int m) {
    static std::map<std::pair<int, int>, RatFun> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find({k, m});
        if (it != cache.end()) return it->second;
    }
    const RatFun& tk = tanh_multiple(k);
    const Poly& dm = coth_derivative_poly(m);
    RatFun c = RatFun(tk.den(), tk.num());
    RatFun acc;
    const auto& co = dm.coeffs();
    for (auto it = co.rbegin(); it != co.rend(); ++it) acc = acc * c + RatFun(*it);
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cache.emplace(std::make_pair(k, m), std::move(acc)).first->second;
}

// ---------------------------------------------------------------- evaluation

Real to_real(const BigInt& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const BigRational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

namespace {

struct HornerResult {
    Real value;
    Real magnitude;
};

HornerResult horner(const std::vector<BigInt>& c, const Real& t) {
    HornerResult r{Real(0), Real(0)};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        Real ci = to_real(*it);
        r.value = r.value * t + ci;
        r.magnitude = r.magnitude * t + abs(ci);
    }
    return r;
}

void check_cancellation(const HornerResult& h, int bits) {
    if (h.magnitude == 0) return;
    if (h.value == 0) throw std::runtime_error("exact cancellation in scalar evaluation");
    Real lost = log2(h.magnitude / abs(h.value));
    if (lost > bits / 2) throw std::runtime_error("evaluation lost more than half of the working precision");
}

}  // namespace

Real eval_scalar_at(const GradedScalar& s, const Real& t, const Real& ch) {
    if (s.is_zero()) return Real(0);
    BigRational sn, sd;
    auto n = s.rat().num().integer_coeffs(sn);
    auto d = s.rat().den().integer_coeffs(sd);
    const int bits = precision_bits();
    HornerResult hn = horner(n, t);
    HornerResult hd = horner(d, t);
    check_cancellation(hn, bits);
    check_cancellation(hd, bits);
    Real v = hn.value / hd.value * to_real(BigRational(sd / sn));
    if (s.grade() == 1) v *= ch;
    return v;
}

Real eval_scalar(const GradedScalar& s, const Real& h, int bits) {
    PrecisionGuard guard(bits);
    Real hh(h);
    Real t = tanh(hh);
    Real ch = sqrt(t);
    return eval_scalar_at(s, t, ch);
}

}  // namespace isola
