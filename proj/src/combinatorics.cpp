#include "isola/combinatorics.hpp"

#include <functional>
#include <stdexcept>
#include <thread>

namespace isola {

namespace {

BigInt cube(long n) { return BigInt(n) * n * n; }

void check_p(int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
}

// Running data along an ascending tuple j_1 < ... < j_q.
struct ChainState {
    int q = 0;
    int first = 0;
    int last = 0;
    BigRational a;      // a_q without the closing factor (p - j_q)
    BigRational inv;    // sum 1/j_i
    BigRational sq;     // sum j_i^2
    BigRational frac;   // sum (p + j_i)/(p^2 + j_i^2 + p j_i - 1)
    BigRational cons;   // sum j_i j_{i+1}, i < q
};

ChainState extend(const ChainState& s, int p, int j) {
    ChainState n = s;
    n.q = s.q + 1;
    if (s.q == 0) n.first = j;
    n.a = s.a * BigRational(BigInt(-12) * j * (j - s.last), collision_denominator(p, j));
    n.a.canonicalize();
    n.inv += BigRational(1, j);
    n.inv.canonicalize();
    n.sq += j * j;
    BigRational f(BigInt(p + j), BigInt(p) * p + BigInt(j) * j + BigInt(p) * j - 1);
    f.canonicalize();
    n.frac += f;
    if (s.q > 0) n.cons += BigInt(s.last) * j;
    n.last = j;
    return n;
}

BigRational closing_a(const ChainState& s, int p) { return s.a * (p - s.last); }

BigRational closing_g(const ChainState& s, int p) {
    const BigRational P3(cube(p) - p);
    BigRational g = BigRational(49 * s.q, 45) + BigRational(32, 9) * (BigInt(s.first) * s.first) - BigRational(4, 9) -
                    BigRational(4, 9) * P3 / s.first + BigRational(5, 18) * P3 * s.inv + BigRational(38, 15) * s.sq +
                    P3 / 5 * s.frac - BigRational(13, 9) * (s.cons + BigInt(s.last) * p);
    g /= 3;
    g.canonicalize();
    return g;
}

ChainState chain_root() {
    ChainState s;
    s.a = 1;
    return s;
}

// Sum of leaf(state) over all nonempty ascending tuples whose first index is j1.
template <class Leaf>
BigRational enumerate_from(int p, int j1, Leaf&& leaf) {
    BigRational total = 0;
    std::function<void(const ChainState&)> walk = [&](const ChainState& s) {
        total += leaf(s);
        for (int j = s.last + 1; j < p; ++j) walk(extend(s, p, j));
    };
    walk(extend(chain_root(), p, j1));
    total.canonicalize();
    return total;
}

template <class Leaf>
BigRational enumerate_all(int p, int threads, Leaf leaf) {
    const int n = p - 1;
    std::vector<BigRational> parts(static_cast<std::size_t>(n), BigRational(0));
    const int workers = std::max(1, std::min(threads, n));
    if (workers == 1) {
        for (int j1 = 1; j1 < p; ++j1) parts[static_cast<std::size_t>(j1 - 1)] = enumerate_from(p, j1, leaf);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int j1 = 1 + w; j1 < p; j1 += workers)
                    parts[static_cast<std::size_t>(j1 - 1)] = enumerate_from(p, j1, leaf);
            });
        for (auto& t : pool) t.join();
    }
    BigRational total = 0;
    for (const auto& x : parts) total += x;
    total.canonicalize();
    return total;
}

}  // namespace

BigInt collision_denominator(int p, int j) { return cube(p) - p + j - cube(j); }

BigRational cancel_coeff(int p, const std::vector<int>& js) {
    check_p(p);
    ChainState s = chain_root();
    for (int j : js) {
        if (j <= s.last || j >= p) throw std::invalid_argument("tuple must be ascending inside (0, p)");
        s = extend(s, p, j);
    }
    if (s.q == 0) throw std::invalid_argument("empty tuple");
    return closing_a(s, p);
}

BigRational g_weight(int p, const std::vector<int>& js) {
    check_p(p);
    ChainState s = chain_root();
    for (int j : js) {
        if (j <= s.last || j >= p) throw std::invalid_argument("tuple must be ascending inside (0, p)");
        s = extend(s, p, j);
    }
    if (s.q == 0) throw std::invalid_argument("empty tuple");
    return closing_g(s, p);
}

BigRational Ap_enumerate(int p, int threads) {
    check_p(p);
    if (p > 24) throw std::invalid_argument("literal enumeration is limited to p <= 24");
    return BigRational(p) + enumerate_all(p, threads, [p](const ChainState& s) -> BigRational { return closing_a(s, p); });
}

BigRational Ap_chain(int p) {
    check_p(p);
    // S(j): sum of a-products over tuples ending at j, without the closing factor
    std::vector<BigRational> S(static_cast<std::size_t>(p), BigRational(0));
    S[0] = 1;
    BigRational total = p;
    for (int j = 1; j < p; ++j) {
        BigRational acc = 0;
        for (int k = 0; k < j; ++k) acc += S[static_cast<std::size_t>(k)] * (j - k);
        S[static_cast<std::size_t>(j)] = acc * BigRational(BigInt(-12) * j, collision_denominator(p, j));
        S[static_cast<std::size_t>(j)].canonicalize();
        total += S[static_cast<std::size_t>(j)] * (p - j);
    }
    total.canonicalize();
    return total;
}

BigRational Ap_bruteforce(int p, int threads) { return p <= 20 ? Ap_enumerate(p, threads) : Ap_chain(p); }

BigInt TridiagIII::entry(int k, int j) const {
    if (k < 1 || j < 1 || k > p || j > p) throw std::out_of_range("III index outside 1..p");
    if (k == j) return diag[static_cast<std::size_t>(j - 1)];
    if (j == k + 1) return upper[static_cast<std::size_t>(k - 1)];
    if (k == j + 1) return lower[static_cast<std::size_t>(j - 1)];
    return 0;
}

std::vector<BigInt> TridiagIII::apply(const std::vector<BigInt>& v) const {
    if (static_cast<int>(v.size()) != p) throw std::invalid_argument("vector size must equal p");
    std::vector<BigInt> out(static_cast<std::size_t>(p), BigInt(0));
    for (int k = 1; k <= p; ++k)
        for (int j = std::max(1, k - 1); j <= std::min(p, k + 1); ++j)
            out[static_cast<std::size_t>(k - 1)] += entry(k, j) * v[static_cast<std::size_t>(j - 1)];
    return out;
}

TridiagIII tridiag_III(int p) {
    check_p(p);
    TridiagIII m;
    m.p = p;
    auto off = [p](int j) -> BigInt { return cube(j) - j - cube(p) + p; };
    for (int j = 1; j <= p; ++j) m.diag.push_back(j < p ? 2 * cube(p) - 2 * p - 2 * cube(j) - 10 * j : BigInt(1));
    for (int j = 1; j < p; ++j) {
        m.upper.push_back(off(j + 1));  // row j, column j+1
        m.lower.push_back(off(j));      // row j+1, column j
    }
    return m;
}

BigInt tridiag_det(const TridiagIII& m) {
    BigInt f2 = 1, f1 = m.diag[0];
    for (int k = 2; k <= m.p; ++k) {
        BigInt f = m.diag[static_cast<std::size_t>(k - 1)] * f1 -
                   m.upper[static_cast<std::size_t>(k - 2)] * m.lower[static_cast<std::size_t>(k - 2)] * f2;
        f2 = f1;
        f1 = f;
    }
    return f1;
}

BigRational Ap_determinant(int p) {
    const TridiagIII m = tridiag_III(p);
    BigInt prod = 1;
    for (int j = 1; j < p; ++j) prod *= collision_denominator(p, j);
    BigRational r(tridiag_det(m), prod);
    r.canonicalize();
    return r;
}

std::vector<BigInt> III_kernel_vector(int p) {
    check_p(p);
    std::vector<BigInt> v;
    for (int j = 1; j < p; ++j) v.emplace_back(j);
    v.push_back(BigInt(3) * p * (p - 1) * (p - 1));
    return v;
}

bool III_kernel_check(int p) {
    for (const auto& x : tridiag_III(p).apply(III_kernel_vector(p)))
        if (x != 0) return false;
    return true;
}

BigRational Cp_bruteforce(int p, int threads) {
    check_p(p);
    if (p > 24) throw std::invalid_argument("C^{(p)} enumeration is limited to p <= 24");
    BigRational base = BigRational(28, 27) * cube(p);
    BigRational r = base + enumerate_all(p, threads, [p](const ChainState& s) -> BigRational {
        return closing_a(s, p) * closing_g(s, p);
    });
    r.canonicalize();
    return r;
}

BigRational Cp_expected(int p) {
    BigRational r(BigInt(p) * (p + 1) * (p + 1), 3);
    r.canonicalize();
    return r;
}

std::vector<SumIdentityFailure> sum_identities_check(int lmax) {
    std::vector<SumIdentityFailure> fails;
    for (long l = 1; l <= lmax; ++l) {
        BigInt s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
        for (long a = 1; a < l; ++a) {
            const long b = l - a;
            s1 += BigInt(a) * b;
            s2 += BigInt(a) * a * b * b;
            s3 += BigInt(a) * b * (5 * b * b + 3 * b - 5);
            s4 += BigInt(b) * a * (a - 1) * (a + 2);
            s5 += BigInt(a) * b * b;
        }
        const BigInt L = l, L21 = L * L - 1;
        if (6 * s1 != L * L21) fails.push_back({static_cast<int>(l), "sum l1 l2"});
        if (30 * s2 != L21 * L * (L * L + 1)) fails.push_back({static_cast<int>(l), "sum l1^2 l2^2"});
        if (4 * s3 != L21 * L * (L * L + L - 4)) fails.push_back({static_cast<int>(l), "sum l1 l2 (5 l2^2 + 3 l2 - 5)"});
        if (60 * s4 != L21 * L * (L - 2) * (3 * L + 11))
            fails.push_back({static_cast<int>(l), "sum l2 l1 (l1 - 1)(l1 + 2)"});
        if (12 * s5 != L21 * L * L) fails.push_back({static_cast<int>(l), "sum l1 l2^2"});
    }
    return fails;
}

}  // namespace isola
