#include "isola/combinatorics.hpp"

#include <doctest.h>

#include <vector>

using namespace isola;

namespace {

// Fraction-free Bareiss elimination on the dense matrix.
BigInt dense_det(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = v / prev;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

TEST_CASE("tridiagonal determinant agrees with dense elimination") {
    for (int p = 2; p <= 12; ++p) {
        const TridiagIII m = tridiag_III(p);
        std::vector<std::vector<BigInt>> d(static_cast<std::size_t>(p), std::vector<BigInt>(static_cast<std::size_t>(p), 0));
        for (int k = 1; k <= p; ++k)
            for (int j = 1; j <= p; ++j) d[k - 1][j - 1] = m.entry(k, j);
        CHECK(tridiag_det(m) == dense_det(d));
        CHECK(tridiag_det(m) == 0);
    }
}

TEST_CASE("kernel vector of III is annihilated") {
    for (int p : {2, 3, 7, 50}) {
        const auto v = III_kernel_vector(p);
        for (const auto& x : tridiag_III(p).apply(v)) CHECK(x == 0);
        CHECK(III_kernel_check(p));
    }
}

TEST_CASE("A(p) vanishes by enumeration and by the chain recursion") {
    for (int p = 2; p <= 9; ++p) {
        CHECK(Ap_enumerate(p) == 0);
        CHECK(Ap_chain(p) == 0);
    }
}

TEST_CASE("C(p) closed form") {
    CHECK(Cp_expected(2) == 6);
    CHECK(Cp_expected(3) == 16);
    for (int p = 2; p <= 8; ++p) CHECK(Cp_bruteforce(p) == Cp_expected(p));
}

TEST_CASE("sum identities hold exactly") { CHECK(sum_identities_check(8).empty()); }
