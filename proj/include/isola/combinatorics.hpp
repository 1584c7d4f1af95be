#pragma once

#include "isola/exactfield.hpp"

#include <string>
#include <vector>

namespace isola {

// D(j) = p^3 - p + j - j^3.
BigInt collision_denominator(int p, int j);

// a_q^{(p)}(j_1..j_q) for an ascending tuple in (0, p).
BigRational cancel_coeff(int p, const std::vector<int>& js);

// g_q^{(p)}(j_1..j_q) for an ascending tuple in (0, p).
BigRational g_weight(int p, const std::vector<int>& js);

// A^{(p)} by literal enumeration of the 2^{p-1} tuples (p <= 24).
BigRational Ap_enumerate(int p, int threads = 1);
// A^{(p)} by the chain recursion over the last index, regrouping identical products exactly.
BigRational Ap_chain(int p);
// A^{(p)}: literal enumeration for p <= 20, chain recursion above.
BigRational Ap_bruteforce(int p, int threads = 1);

// p x p tridiagonal integer matrix III (row k, column j, 1-based).
struct TridiagIII {
    int p = 0;
    std::vector<BigInt> diag;   // III_j^j, j = 1..p
    std::vector<BigInt> upper;  // III_j^{j+1}, j = 1..p-1
    std::vector<BigInt> lower;  // III_{j+1}^j, j = 1..p-1

    BigInt entry(int k, int j) const;
    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;
};

TridiagIII tridiag_III(int p);
BigInt tridiag_det(const TridiagIII& m);
// det III / prod_{j<p} D(j).
BigRational Ap_determinant(int p);
// (1, 2, ..., p-1, 3p(p-1)^2).
std::vector<BigInt> III_kernel_vector(int p);
// True when III v = 0 exactly.
bool III_kernel_check(int p);

// C^{(p)} = 28 p^3 / 27 + sum a_q g_q over all tuples (exact).
BigRational Cp_bruteforce(int p, int threads = 1);
BigRational Cp_expected(int p);

struct SumIdentityFailure {
    int l = 0;
    std::string identity;
};

// Exact check of the five convolution identities for l = 2..lmax.
std::vector<SumIdentityFailure> sum_identities_check(int lmax);

}  // namespace isola
