#include "patience/series.hpp"

#include <algorithm>

#include "patience/errors.hpp"

namespace patience {

namespace {

using boost::multiprecision::cpp_int;

cpp_int exact_root(const cpp_int& v) {
    if (v < 0) return -1;
    cpp_int r = boost::multiprecision::sqrt(v);
    return r * r == v ? r : cpp_int(-1);
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coefficients) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coefficients.size() && i < c_.size(); ++i) c_[i] = std::move(coefficients[i]);
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, Rational c) {
    TruncatedSeries s(order);
    s.set(degree, std::move(c));
    return s;
}

Rational TruncatedSeries::operator[](int degree) const {
    if (degree < 0 || degree > order_) return 0;
    return c_[static_cast<std::size_t>(degree)];
}

void TruncatedSeries::set(int degree, Rational c) {
    if (degree >= 0 && degree <= order_) c_[static_cast<std::size_t>(degree)] = std::move(c);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    for (int i = 0; i <= order_; ++i) c_[static_cast<std::size_t>(i)] += other[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    for (int i = 0; i <= order_; ++i) c_[static_cast<std::size_t>(i)] -= other[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& k) {
    for (Rational& v : c_) v *= k;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order_, b.order_);
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            out.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0] == 0) throw CompositionNotWellDefined("series with zero constant term has no inverse");
    TruncatedSeries out(order_);
    out.c_[0] = 1 / c_[0];
    for (int n = 1; n <= order_; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += c_[static_cast<std::size_t>(k)] * out.c_[static_cast<std::size_t>(n - k)];
        out.c_[static_cast<std::size_t>(n)] = -acc * out.c_[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::sqrt() const {
    const cpp_int num = exact_root(boost::multiprecision::numerator(c_[0]));
    const cpp_int den = exact_root(boost::multiprecision::denominator(c_[0]));
    if (c_[0] <= 0 || num < 0 || den < 0) {
        throw CompositionNotWellDefined("square root needs a constant term that is a positive rational square");
    }
    TruncatedSeries g(order_);
    g.c_[0] = Rational(num, den);
    for (int correct = 1; correct <= order_; correct *= 2) {
        const int next = std::min(order_, 2 * correct);
        TruncatedSeries a(next, c_);
        TruncatedSeries gn(next, g.c_);
        gn = (gn + a * gn.inverse()) * Rational(1, 2);
        g = TruncatedSeries(order_, gn.c_);
    }
    return g;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    if (inner[0] != 0) throw CompositionNotWellDefined("inner series must have zero constant term");
    const int order = std::min(order_, inner.order_);
    TruncatedSeries out(order);
    TruncatedSeries power = monomial(order, 0);
    for (int k = 0; k <= order; ++k) {
        out += power * c_[static_cast<std::size_t>(k)];
        power = power * inner;
    }
    return out;
}

TruncatedSeries TruncatedSeries::divide_by_x() const {
    if (c_[0] != 0) throw CompositionNotWellDefined("cannot divide by x: nonzero constant term");
    return TruncatedSeries(order_ - 1, std::vector<Rational>(c_.begin() + 1, c_.end()));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return v == 0; });
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::max(a.order_, b.order_);
    for (int i = 0; i <= order; ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

Rational BivariateSeries::operator()(int i, int j) const {
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariateSeries::add(int i, int j, const Rational& c) {
    if (i < 0 || j < 0 || i + j > order_ || c == 0) return;
    Rational& slot = terms_[{i, j}];
    slot += c;
    if (slot == 0) terms_.erase({i, j});
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
    for (const auto& [ij, c] : other.terms_) add(ij.first, ij.second, c);
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
    for (const auto& [ij, c] : other.terms_) add(ij.first, ij.second, -c);
    return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries out(std::min(a.order_, b.order_));
    for (const auto& [p, u] : a.terms_) {
        for (const auto& [q, v] : b.terms_) out.add(p.first + q.first, p.second + q.second, u * v);
    }
    return out;
}

bool BivariateSeries::is_zero() const { return terms_.empty(); }

}  // namespace patience
