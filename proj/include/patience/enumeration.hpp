#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace patience {

using BigNat = boost::multiprecision::cpp_int;

// Bell triangle.
BigNat bell(int n);
// F(0) = F(1) = 1.
BigNat fib(int n);

// f(n, k): permutations of size n with a unique patience-sorting preimage
// and first letter k; f(n) sums row n.
struct CountTable {
    int n_max = 0;
    std::vector<std::vector<BigNat>> f_nk;  // f_nk[n][k], 0 <= k <= n
    std::vector<BigNat> f_n;

    const BigNat& at(int n, int k) const { return f_nk[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; }
};

// f(0,0) = 1; f(n,0) = 0, f(n,1) = f(n-1), f(n,2) = [n = 2] for n >= 1;
// f(n,k) = f(n,k-1) + f(n-1,k-1) + f(n-2,k-2) for 3 <= k <= n.
CountTable f_table(int n_max);

// Coefficient of x^n in x^(k+2) / (1 - x - x^2)^(k+1).
BigNat convolved_fib(int n, int k);

// c[k][m] for 0 <= m <= k <= k_max from c(2,0) = 1 and
// c(k,m) = c(k-1,m-1) + c(k-1,m) + c(k-2,m).
std::vector<std::vector<BigNat>> c_coeffs(int k_max);

// f(0..n_max) from f(n,1) = f(n-1) and, for n >= k >= 2,
// f(n,k) = sum_{m=0}^{k-3} c(k-1,m) f(n-k+m) + [n = k] F(k-2).
std::vector<BigNat> f_alt(int n_max);

// Dense N x N integer matrix, row-major, indices from 0.
struct LowerTriMatrix {
    int size = 0;
    std::vector<std::vector<BigNat>> rows;

    explicit LowerTriMatrix(int n = 0);
    const BigNat& operator()(int i, int j) const { return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    BigNat& operator()(int i, int j) { return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    friend LowerTriMatrix operator*(const LowerTriMatrix& a, const LowerTriMatrix& b);
    friend bool operator==(const LowerTriMatrix&, const LowerTriMatrix&) = default;
};

// a(n,k) = convolved_fib(n, k).
LowerTriMatrix matrix_A(int n);
// (I - A)^-1 by forward substitution.
LowerTriMatrix matrix_inverse(int n);
// X with (I - A) X = (1, F(0), F(1), ...): the first n values of f.
std::vector<BigNat> matrix_solve(int n);

// (I - A)^-1 equals I + A + ... + A^terms on the n x n truncation, each power
// of A starts two diagonals further down, and the inverse is nonnegative.
// Requires terms >= ceil(n / 2).
bool neumann_check(int n, int terms);

// (1 - y - xy - x^2 y^2) Phi(x,y)
//   = 1 - y - xy + xy^2 - xy^2 Phi(xy,1) + xy(1 - y - xy) Phi(x,1)
// through total degree `order`, with Phi(x,y) = sum f(n,k) x^n y^k.
bool phi_equation_check(int order);

// x + 1 + s(x) F(x) - F(s(x)/x) = 0 through degree `order`, where
// F(x) = Phi(x,1) and s(x) = (sqrt(1 + 2x + 5x^2) - x - 1) / 2.
bool kernel_identity_check(int order);

}  // namespace patience
