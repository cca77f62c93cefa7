#include "patience/enumeration.hpp"

#include <stdexcept>

#include "patience/series.hpp"

namespace patience {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Coefficients 0..len-1 of 1 / (1 - x - x^2)^power.
std::vector<BigNat> fib_power(int power, int len) {
    std::vector<BigNat> out(idx(std::max(len, 0)), 0);
    if (len <= 0) return out;
    out[0] = 1;
    std::vector<BigNat> f(idx(len));
    for (int i = 0; i < len; ++i) f[idx(i)] = fib(i);
    for (int p = 0; p < power; ++p) {
        std::vector<BigNat> next(idx(len), 0);
        for (int i = 0; i < len; ++i) {
            for (int j = 0; i + j < len; ++j) next[idx(i + j)] += out[idx(i)] * f[idx(j)];
        }
        out = std::move(next);
    }
    return out;
}

std::vector<BigNat> fib_vector(int n) {
    std::vector<BigNat> f(idx(std::max(n, 2)));
    f[0] = 1;
    f[1] = 1;
    for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
    f.resize(idx(n));
    return f;
}

}  // namespace

BigNat bell(int n) {
    require(n >= 0, "bell: n must be nonnegative");
    std::vector<BigNat> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<BigNat> next{row.back()};
        for (const BigNat& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

BigNat fib(int n) {
    require(n >= 0, "fib: n must be nonnegative");
    BigNat a = 1;
    BigNat b = 1;
    for (int i = 1; i < n; ++i) {
        BigNat c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

CountTable f_table(int n_max) {
    require(n_max >= 0, "f_table: n_max must be nonnegative");
    CountTable t;
    t.n_max = n_max;
    t.f_nk.resize(idx(n_max) + 1);
    t.f_n.resize(idx(n_max) + 1);
    t.f_nk[0] = {1};
    t.f_n[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        auto& row = t.f_nk[idx(n)];
        row.assign(idx(n) + 1, 0);
        row[1] = t.f_n[idx(n - 1)];
        if (n >= 2) row[2] = n == 2 ? t.f_n[1] : BigNat(0);
        for (int k = 3; k <= n; ++k) row[idx(k)] = row[idx(k - 1)] + t.at(n - 1, k - 1) + t.at(n - 2, k - 2);
        for (const BigNat& v : row) t.f_n[idx(n)] += v;
    }
    return t;
}

BigNat convolved_fib(int n, int k) {
    require(n >= 0 && k >= 0, "convolved_fib: indices must be nonnegative");
    if (n < k + 2) return 0;
    return fib_power(k + 1, n - k - 1)[idx(n - k - 2)];
}

std::vector<std::vector<BigNat>> c_coeffs(int k_max) {
    require(k_max >= 2, "c_coeffs: k_max must be at least 2");
    std::vector<std::vector<BigNat>> c(idx(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) c[idx(k)].assign(idx(k) + 1, 0);
    c[2][0] = 1;
    auto get = [&](int k, int m) -> BigNat {
        if (k < 2 || m < 0 || m > k - 2) return 0;
        return c[idx(k)][idx(m)];
    };
    for (int k = 3; k <= k_max; ++k) {
        for (int m = 0; m <= k - 2; ++m) c[idx(k)][idx(m)] = get(k - 1, m - 1) + get(k - 1, m) + get(k - 2, m);
    }
    return c;
}

std::vector<BigNat> f_alt(int n_max) {
    require(n_max >= 0, "f_alt: n_max must be nonnegative");
    const auto c = c_coeffs(std::max(n_max, 2));
    const auto F = fib_vector(n_max + 1);
    std::vector<BigNat> f(idx(n_max) + 1, 0);
    f[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigNat total = f[idx(n - 1)];
        for (int k = 2; k <= n; ++k) {
            for (int m = 0; m <= k - 3; ++m) total += c[idx(k - 1)][idx(m)] * f[idx(n - k + m)];
            if (n == k) total += F[idx(k - 2)];
        }
        f[idx(n)] = total;
    }
    return f;
}

LowerTriMatrix::LowerTriMatrix(int n) : size(n), rows(idx(n), std::vector<BigNat>(idx(n), 0)) {}

LowerTriMatrix operator*(const LowerTriMatrix& a, const LowerTriMatrix& b) {
    LowerTriMatrix out(a.size);
    for (int i = 0; i < a.size; ++i) {
        for (int k = 0; k <= i; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j <= k; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

LowerTriMatrix matrix_A(int n) {
    require(n >= 1, "matrix_A: N must be positive");
    LowerTriMatrix a(n);
    for (int k = 0; k < n; ++k) {
        const auto col = fib_power(k + 1, std::max(n - k - 2, 0));
        for (int i = k + 2; i < n; ++i) a(i, k) = col[idx(i - k - 2)];
    }
    return a;
}

LowerTriMatrix matrix_inverse(int n) {
    const LowerTriMatrix a = matrix_A(n);
    LowerTriMatrix inv(n);
    for (int j = 0; j < n; ++j) {
        inv(j, j) = 1;
        for (int i = j + 1; i < n; ++i) {
            BigNat acc = 0;
            for (int k = j; k < i; ++k) acc += a(i, k) * inv(k, j);
            inv(i, j) = acc;
        }
    }
    return inv;
}

std::vector<BigNat> matrix_solve(int n) {
    const LowerTriMatrix a = matrix_A(n);
    std::vector<BigNat> rhs(idx(n));
    rhs[0] = 1;
    for (int i = 1; i < n; ++i) rhs[idx(i)] = fib(i - 1);
    std::vector<BigNat> x(idx(n));
    for (int i = 0; i < n; ++i) {
        BigNat acc = rhs[idx(i)];
        for (int k = 0; k < i; ++k) acc += a(i, k) * x[idx(k)];
        x[idx(i)] = acc;
    }
    return x;
}

bool neumann_check(int n, int terms) {
    require(n >= 1 && 2 * terms >= n, "neumann_check: needs terms >= ceil(N/2)");
    const LowerTriMatrix a = matrix_A(n);
    LowerTriMatrix power(n);
    LowerTriMatrix sum(n);
    for (int i = 0; i < n; ++i) power(i, i) = 1;
    for (int j = 0; j <= terms; ++j) {
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                if (r - c < 2 * j && power(r, c) != 0) return false;
                sum(r, c) += power(r, c);
            }
        }
        power = power * a;
    }
    const LowerTriMatrix inv = matrix_inverse(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (inv(r, c) < 0) return false;
        }
    }
    return sum == inv;
}

bool phi_equation_check(int order) {
    require(order >= 2, "phi_equation_check: order must be at least 2");
    const CountTable t = f_table(order);
    BivariateSeries phi(order);
    BivariateSeries phi_xy(order);  // Phi(xy, 1)
    BivariateSeries phi_x(order);   // Phi(x, 1)
    for (int n = 0; n <= order; ++n) {
        for (int k = 0; k <= n; ++k) phi.add(n, k, Rational(t.at(n, k)));
        phi_xy.add(n, n, Rational(t.f_n[idx(n)]));
        phi_x.add(n, 0, Rational(t.f_n[idx(n)]));
    }
    auto poly = [&](std::initializer_list<std::tuple<int, int, int>> terms) {
        BivariateSeries p(order);
        for (const auto& [i, j, c] : terms) p.add(i, j, c);
        return p;
    };
    const BivariateSeries lhs = poly({{0, 0, 1}, {0, 1, -1}, {1, 1, -1}, {2, 2, -1}}) * phi;
    const BivariateSeries rhs = poly({{0, 0, 1}, {0, 1, -1}, {1, 1, -1}, {1, 2, 1}}) - poly({{1, 2, 1}}) * phi_xy +
                                poly({{1, 1, 1}, {1, 2, -1}, {2, 2, -1}}) * phi_x;
    return (lhs - rhs).is_zero();
}

bool kernel_identity_check(int order) {
    require(order >= 4, "kernel_identity_check: order must be at least 4");
    const int work = order + 1;
    const CountTable t = f_table(work);
    std::vector<Rational> fc;
    for (const BigNat& v : t.f_n) fc.emplace_back(v);
    const TruncatedSeries F(work, fc);
    const TruncatedSeries radicand(work, {1, 2, 5});
    TruncatedSeries s = radicand.sqrt() - TruncatedSeries(work, {1, 1});
    s *= Rational(1, 2);
    const TruncatedSeries inner = s.divide_by_x();
    const TruncatedSeries lhs = TruncatedSeries(work, {1, 1}) + s * F;
    const TruncatedSeries composed = F.compose(inner);
    for (int d = 0; d <= order; ++d) {
        if (lhs[d] != composed[d]) return false;
    }
    return true;
}

}  // namespace patience
