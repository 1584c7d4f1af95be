#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace isola {

// Evn: cosine basis (harmonic 0 is the constant). Odd: sine basis.
enum class Parity { Evn, Odd };

inline Parity operator*(Parity a, Parity b) { return a == b ? Parity::Evn : Parity::Odd; }
inline Parity flip(Parity p) { return p == Parity::Evn ? Parity::Odd : Parity::Evn; }
inline const char* parity_name(Parity p) { return p == Parity::Evn ? "Evn" : "Odd"; }

inline long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Trigonometric polynomial of Evn_l or Odd_l: harmonics k <= l with k = l (mod 2).
template <class S>
class TrigPoly {
public:
    TrigPoly() = default;
    TrigPoly(int order, Parity parity) : order_(order), parity_(parity) {
        if (order < 0) throw std::invalid_argument("negative trigonometric order");
        int n = order_ >= kmin() ? (order_ - kmin()) / 2 + 1 : 0;
        c_.assign(static_cast<std::size_t>(n), S{});
    }

    int order() const { return order_; }
    Parity parity() const { return parity_; }
    int kmin() const { return parity_ == Parity::Evn ? order_ % 2 : (order_ % 2 == 0 ? 2 : 1); }
    std::size_t size() const { return c_.size(); }
    int harmonic(std::size_t i) const { return kmin() + 2 * static_cast<int>(i); }

    bool allowed(int k) const { return k >= kmin() && k <= order_ && (order_ - k) % 2 == 0; }

    S coeff(int k) const { return allowed(k) ? c_[slot(k)] : S{}; }
    S& at(int k) {
        if (!allowed(k)) throw std::logic_error("harmonic outside the parity grid");
        return c_[slot(k)];
    }
    const S& at(int k) const {
        if (!allowed(k)) throw std::logic_error("harmonic outside the parity grid");
        return c_[slot(k)];
    }
    S& operator[](std::size_t i) { return c_[i]; }
    const S& operator[](std::size_t i) const { return c_[i]; }

    // Leading harmonic coefficient f^{[l]}.
    S leading() const { return coeff(order_); }

    TrigPoly& operator+=(const TrigPoly& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TrigPoly& operator-=(const TrigPoly& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TrigPoly& operator*=(const S& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    // Adds s * o, where o has the same parity and an order of the same parity not above this one.
    void accumulate(const TrigPoly& o, const S& s) {
        if (o.parity_ != parity_ || o.order_ > order_ || (order_ - o.order_) % 2 != 0)
            throw std::logic_error("parity bookkeeping violation");
        for (std::size_t i = 0; i < o.size(); ++i) at(o.harmonic(i)) += s * o[i];
    }

private:
    std::size_t slot(int k) const { return static_cast<std::size_t>((k - kmin()) / 2); }
    void check_same(const TrigPoly& o) const {
        if (o.order_ != order_ || o.parity_ != parity_) throw std::logic_error("parity bookkeeping violation");
    }

    int order_ = 0;
    Parity parity_ = Parity::Evn;
    std::vector<S> c_;
};

// Adds a * b into out (out must carry order a.order()+b.order() and the product parity).
template <class S>
void trig_mul_acc(const TrigPoly<S>& a, const TrigPoly<S>& b, TrigPoly<S>& out) {
    if (out.order() != a.order() + b.order() || out.parity() != a.parity() * b.parity())
        throw std::logic_error("parity bookkeeping violation");
    const S half = S(1) / S(2);
    auto add = [&out](int k, bool sine, const S& v) {
        if (sine) {
            if (k == 0) return;
            if (k < 0) out.at(-k) -= v;
            else out.at(k) += v;
        } else {
            out.at(std::abs(k)) += v;
        }
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int ka = a.harmonic(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            const int kb = b.harmonic(j);
            S v = half * a[i] * b[j];
            if (a.parity() == Parity::Evn && b.parity() == Parity::Evn) {
                add(ka - kb, false, v);
                add(ka + kb, false, v);
            } else if (a.parity() == Parity::Odd && b.parity() == Parity::Odd) {
                add(ka - kb, false, v);
                add(ka + kb, false, -v);
            } else if (a.parity() == Parity::Evn) {
                // cos a sin b = (sin(a+b) - sin(a-b)) / 2
                add(ka + kb, true, v);
                add(ka - kb, true, -v);
            } else {
                // sin a cos b = (sin(a+b) + sin(a-b)) / 2
                add(ka + kb, true, v);
                add(ka - kb, true, v);
            }
        }
    }
}

// Truncated power series sum_{l=0}^{N} eps^l f_l with f_l in Evn_l or Odd_l.
template <class S>
class EpsSeries {
public:
    EpsSeries() = default;
    EpsSeries(int N, Parity parity) : parity_(parity) {
        if (N < 0) throw std::invalid_argument("negative truncation order");
        terms_.reserve(static_cast<std::size_t>(N) + 1);
        for (int l = 0; l <= N; ++l) terms_.emplace_back(l, parity);
    }

    static EpsSeries constant(int N, const S& c) {
        EpsSeries s(N, Parity::Evn);
        s.terms_[0].at(0) = c;
        return s;
    }

    int N() const { return static_cast<int>(terms_.size()) - 1; }
    Parity parity() const { return parity_; }
    TrigPoly<S>& operator[](int l) { return terms_.at(static_cast<std::size_t>(l)); }
    const TrigPoly<S>& operator[](int l) const { return terms_.at(static_cast<std::size_t>(l)); }

    EpsSeries truncated(int n) const {
        EpsSeries r(std::min(n, N()), parity_);
        for (int l = 0; l <= r.N(); ++l) r[l] = (*this)[l];
        return r;
    }

    EpsSeries& operator+=(const EpsSeries& o) {
        check_parity(o);
        for (int l = 0; l <= std::min(N(), o.N()); ++l) (*this)[l] += o[l];
        if (o.N() < N()) terms_.resize(static_cast<std::size_t>(o.N()) + 1);
        return *this;
    }
    EpsSeries& operator-=(const EpsSeries& o) {
        check_parity(o);
        for (int l = 0; l <= std::min(N(), o.N()); ++l) (*this)[l] -= o[l];
        if (o.N() < N()) terms_.resize(static_cast<std::size_t>(o.N()) + 1);
        return *this;
    }
    EpsSeries& operator*=(const S& s) {
        for (auto& t : terms_) t *= s;
        return *this;
    }
    friend EpsSeries operator+(EpsSeries a, const EpsSeries& b) { return a += b; }
    friend EpsSeries operator-(EpsSeries a, const EpsSeries& b) { return a -= b; }
    friend EpsSeries operator*(EpsSeries a, const S& s) { return a *= s; }
    EpsSeries operator-() const {
        EpsSeries r = *this;
        r *= S(-1);
        return r;
    }

private:
    void check_parity(const EpsSeries& o) const {
        if (o.parity_ != parity_) throw std::logic_error("parity bookkeeping violation");
    }

    Parity parity_ = Parity::Evn;
    std::vector<TrigPoly<S>> terms_;
};

// Cauchy product truncated at min(N, f.N(), g.N()).
template <class S>
EpsSeries<S> ts_mul(const EpsSeries<S>& f, const EpsSeries<S>& g, int N = 1 << 20) {
    const int n = std::min({N, f.N(), g.N()});
    EpsSeries<S> r(n, f.parity() * g.parity());
    for (int l1 = 0; l1 <= n; ++l1) {
        if (f[l1].size() == 0) continue;
        for (int l2 = 0; l1 + l2 <= n; ++l2) {
            if (g[l2].size() == 0) continue;
            trig_mul_acc(f[l1], g[l2], r[l1 + l2]);
        }
    }
    return r;
}

template <class S>
EpsSeries<S> ts_pow(const EpsSeries<S>& f, int m, int N = 1 << 20) {
    const int n = std::min(N, f.N());
    EpsSeries<S> r = EpsSeries<S>::constant(n, S(1));
    for (int i = 0; i < m; ++i) r = ts_mul(r, f, n);
    return r;
}

// All powers f^0 .. f^m.
template <class S>
std::vector<EpsSeries<S>> ts_powers(const EpsSeries<S>& f, int m, int N = 1 << 20) {
    const int n = std::min(N, f.N());
    std::vector<EpsSeries<S>> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    out.push_back(EpsSeries<S>::constant(n, S(1)));
    for (int i = 1; i <= m; ++i) out.push_back(ts_mul(out.back(), f, n));
    return out;
}

// d/dx: cos kx -> -k sin kx, sin kx -> k cos kx.
template <class S>
TrigPoly<S> trig_dx(const TrigPoly<S>& f) {
    TrigPoly<S> r(f.order(), flip(f.parity()));
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int k = f.harmonic(i);
        if (k == 0) continue;
        r.at(k) = f.parity() == Parity::Evn ? f[i] * S(-k) : f[i] * S(k);
    }
    return r;
}

// Hilbert transform: cos kx -> sin kx, sin kx -> -cos kx, 1 -> 0.
template <class S>
TrigPoly<S> trig_hilbert(const TrigPoly<S>& f) {
    TrigPoly<S> r(f.order(), flip(f.parity()));
    for (std::size_t i = 0; i < f.size(); ++i) {
        const int k = f.harmonic(i);
        if (k == 0) continue;
        r.at(k) = f.parity() == Parity::Evn ? f[i] : -f[i];
    }
    return r;
}

// Diagonal Fourier multiplier m(k) on each harmonic.
template <class S, class M>
TrigPoly<S> trig_multiplier(const TrigPoly<S>& f, M&& m) {
    TrigPoly<S> r = f;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] * m(r.harmonic(i));
    return r;
}

template <class S>
EpsSeries<S> ts_dx(const EpsSeries<S>& f) {
    EpsSeries<S> r(f.N(), flip(f.parity()));
    for (int l = 0; l <= f.N(); ++l) r[l] = trig_dx(f[l]);
    return r;
}

template <class S>
EpsSeries<S> ts_hilbert(const EpsSeries<S>& f) {
    EpsSeries<S> r(f.N(), flip(f.parity()));
    for (int l = 0; l <= f.N(); ++l) r[l] = trig_hilbert(f[l]);
    return r;
}

template <class S, class M>
EpsSeries<S> ts_multiplier(const EpsSeries<S>& f, M&& m) {
    EpsSeries<S> r = f;
    for (int l = 0; l <= f.N(); ++l) r[l] = trig_multiplier(f[l], m);
    return r;
}

// G0 = |D| tanh(h|D|).
template <class Field>
EpsSeries<typename Field::Scalar> ts_G0(const Field& fld, const EpsSeries<typename Field::Scalar>& f) {
    using S = typename Field::Scalar;
    return ts_multiplier(f, [&fld](int k) { return k == 0 ? S{} : S(k) * fld.tanh_k(k); });
}

// |D|^m.
template <class S>
EpsSeries<S> ts_absD(const EpsSeries<S>& f, int m = 1) {
    return ts_multiplier(f, [m](int k) {
        long v = 1;
        for (int i = 0; i < m; ++i) v *= k;
        return S(v);
    });
}

// H coth((h + f_eps)|D|) applied to u, with f_eps a constant even series
// without order-0 term, expanded through the derivatives of coth at h k.
template <class Field>
EpsSeries<typename Field::Scalar> ts_scaled_coth(const Field& fld, const EpsSeries<typename Field::Scalar>& f_eps,
                                                 const EpsSeries<typename Field::Scalar>& u, int N = 1 << 20) {
    using S = typename Field::Scalar;
    const int n = std::min({N, u.N(), f_eps.N()});
    for (int l = 0; l <= f_eps.N(); ++l)
        for (std::size_t i = 0; i < f_eps[l].size(); ++i)
            if (f_eps[l].harmonic(i) != 0 && !(f_eps[l][i] == S{}))
                throw std::logic_error("coth scaling needs a constant series");
    if (f_eps[0].size() > 0 && !(f_eps[0][0] == S{})) throw std::logic_error("coth scaling needs f_0 = 0");
    EpsSeries<S> hu = ts_hilbert(u.truncated(n));
    auto fpow = ts_powers(f_eps.truncated(n), n, n);
    EpsSeries<S> r(n, hu.parity());
    for (int m = 0; m <= n; ++m) {
        const S inv_fact = S(1) / S(factorial(m));
        for (int j = m; j <= n; ++j) {
            const S fj = fpow[static_cast<std::size_t>(m)][j].coeff(0);
            if (fj == S{}) continue;
            for (int l1 = 0; l1 + j <= n; ++l1) {
                const TrigPoly<S>& src = hu[l1];
                TrigPoly<S> term = trig_multiplier(src, [&](int k) {
                    if (k == 0) return S{};
                    long km = 1;
                    for (int i = 0; i < m; ++i) km *= k;
                    return S(km) * fld.coth_d(k, m);
                });
                term *= fj * inv_fact;
                // orders l1 and l1 + j share parity only when j is even
                if ((j % 2) != 0) throw std::logic_error("odd-order term in a constant even series");
                TrigPoly<S>& dst = r[l1 + j];
                for (std::size_t i = 0; i < term.size(); ++i) dst.at(term.harmonic(i)) += term[i];
            }
        }
    }
    return r;
}

// f(x + g(x)) = sum_m (1/m!) (d/dx)^m f * g^m, g odd with zero order-0 term.
template <class S>
EpsSeries<S> ts_compose(const EpsSeries<S>& f, const EpsSeries<S>& g, int N = 1 << 20) {
    if (g.parity() != Parity::Odd) throw std::logic_error("composition needs an odd displacement");
    const int n = std::min({N, f.N(), g.N()});
    auto gp = ts_powers(g.truncated(n), n, n);
    EpsSeries<S> r(n, f.parity());
    EpsSeries<S> df = f.truncated(n);
    for (int m = 0; m <= n; ++m) {
        EpsSeries<S> term = ts_mul(df, gp[static_cast<std::size_t>(m)], n);
        if (term.parity() != f.parity()) throw std::logic_error("parity bookkeeping violation");
        term *= S(1) / S(factorial(m));
        r += term;
        df = ts_dx(df);
    }
    return r;
}

// 1 / (1 + ft) = sum_k (-1)^k ft^k, ft even with zero order-0 term.
template <class S>
EpsSeries<S> ts_reciprocal(const EpsSeries<S>& ft, int N = 1 << 20) {
    if (ft.parity() != Parity::Evn) throw std::logic_error("reciprocal needs an even series");
    const int n = std::min(N, ft.N());
    EpsSeries<S> r = EpsSeries<S>::constant(n, S(1));
    EpsSeries<S> p = r;
    for (int k = 1; k <= n; ++k) {
        p = ts_mul(p, ft, n);
        if (k % 2) r -= p;
        else r += p;
    }
    return r;
}

// Harmonic amplitudes of sum_{l <= K} eps^l f_l, indexed by k = 0..K (cos for Evn, sin for Odd).
template <class S>
std::vector<S> ts_harmonics(const EpsSeries<S>& f, const S& eps, int K = 1 << 20) {
    const int n = std::min(K, f.N());
    std::vector<S> out(static_cast<std::size_t>(n) + 1, S(0));
    S e = S(1);
    for (int l = 0; l <= n; ++l) {
        for (std::size_t i = 0; i < f[l].size(); ++i)
            out[static_cast<std::size_t>(f[l].harmonic(i))] += e * f[l][i];
        e *= eps;
    }
    return out;
}

// Applies a scalar map (for instance exact -> numeric) coefficientwise.
template <class T, class S, class F>
EpsSeries<T> ts_map(const EpsSeries<S>& f, F&& conv) {
    EpsSeries<T> r(f.N(), f.parity());
    for (int l = 0; l <= f.N(); ++l)
        for (std::size_t i = 0; i < f[l].size(); ++i) r[l][i] = conv(f[l][i]);
    return r;
}

}  // namespace isola
