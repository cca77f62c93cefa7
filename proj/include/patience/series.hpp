#pragma once

#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace patience {

using Rational = boost::multiprecision::cpp_rational;

// Power series in x with exact rational coefficients, kept modulo x^(order+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coefficients);

    static TruncatedSeries monomial(int order, int degree, Rational c = 1);

    int order() const noexcept { return order_; }
    // Zero beyond the stored coefficients.
    Rational operator[](int degree) const;
    void set(int degree, Rational c);
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const Rational& k);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& k) { return a *= k; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    // Throws CompositionNotWellDefined if the constant term is zero.
    TruncatedSeries inverse() const;
    // Newton iteration; the constant term must be the square of a positive
    // rational, else CompositionNotWellDefined.
    TruncatedSeries sqrt() const;
    // this(inner(x)); inner must have zero constant term, else
    // CompositionNotWellDefined.
    TruncatedSeries compose(const TruncatedSeries& inner) const;
    // Drops the constant term, which must be zero, and shifts down.
    TruncatedSeries divide_by_x() const;

    bool is_zero() const;
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    int order_;
    std::vector<Rational> c_;
};

// Series in x and y truncated at total degree `order`.
class BivariateSeries {
public:
    explicit BivariateSeries(int order) : order_(order) {}

    int order() const noexcept { return order_; }
    Rational operator()(int i, int j) const;
    void add(int i, int j, const Rational& c);
    const std::map<std::pair<int, int>, Rational>& terms() const noexcept { return terms_; }

    BivariateSeries& operator+=(const BivariateSeries& other);
    BivariateSeries& operator-=(const BivariateSeries& other);
    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

    bool is_zero() const;

private:
    int order_;
    std::map<std::pair<int, int>, Rational> terms_;  // nonzero only
};

}  // namespace patience
