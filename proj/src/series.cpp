#include "hlnum/series.hpp"

#include <stdexcept>
#include <string>

#include "hlnum/errors.hpp"

namespace hlnum {

namespace {

void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
}

} // namespace

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

const Rat& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order_)
        throw std::invalid_argument("series coefficient index out of range");
    return coeffs_[static_cast<size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, const Rat& c) {
    if (k < 0 || k > order_)
        throw std::invalid_argument("series coefficient index out of range");
    coeffs_[static_cast<size_t>(k)] = c;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b);
    TruncatedSeries r(a.order_);
    for (int k = 0; k <= a.order_; ++k)
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b);
    TruncatedSeries r(a.order_);
    for (int k = 0; k <= a.order_; ++k)
        r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b);
    TruncatedSeries r(a.order_);
    for (int k = 0; k <= a.order_; ++k) {
        Rat acc(0);
        for (int i = 0; i <= k; ++i)
            acc += a.coeffs_[i] * b.coeffs_[k - i];
        r.coeffs_[k] = acc;
    }
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order_ != b.order_) return false;
    for (int k = 0; k <= a.order_; ++k)
        if (a.coeffs_[k] != b.coeffs_[k]) return false;
    return true;
}

TruncatedSeries TruncatedSeries::recip() const {
    if (coeffs_[0] == 0)
        throw NotInvertible("series has zero constant term");
    TruncatedSeries r(order_);
    r.coeffs_[0] = 1 / coeffs_[0];
    for (int k = 1; k <= order_; ++k) {
        Rat acc(0);
        for (int i = 1; i <= k; ++i)
            acc += coeffs_[i] * r.coeffs_[k - i];
        r.coeffs_[k] = -acc / coeffs_[0];
    }
    return r;
}

TruncatedSeries exp_neg(const Rat& c, int order) {
    TruncatedSeries s(order);
    Rat term(1); // (-c)^k / k!
    s.set_coeff(0, term);
    for (int k = 1; k <= order; ++k) {
        term *= -c;
        term /= k;
        s.set_coeff(k, term);
    }
    return s;
}

TruncatedSeries chi_y_factor(long t, const Rat& y, int order) {
    if (y == -1)
        throw DegenerateEvaluation("chi_y factor is identically degenerate at y = -1");
    if (t == 0)
        return TruncatedSeries::constant(Rat(1) + y, order);

    // numerator 1 + y e^{-tx}
    TruncatedSeries e = exp_neg(make_rat(t), order);
    TruncatedSeries num(order);
    for (int k = 0; k <= order; ++k) {
        Rat c = y * e.coeff(k);
        if (k == 0) c += 1;
        num.set_coeff(k, c);
    }

    // unit denominator (1 - e^{-tx}) / (tx): coefficient of x^k is
    // (-t)^k / (k+1)!  (step k multiplies by -t and divides by k+1, so the
    // running divisor is 2 * 3 * ... * (k+1) = (k+1)!)
    TruncatedSeries unit(order);
    Rat term(1);
    unit.set_coeff(0, term);
    for (int k = 1; k <= order; ++k) {
        term *= -t;
        term /= (k + 1);
        unit.set_coeff(k, term);
    }

    return num * unit.recip();
}

std::vector<Rat> interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate abscissa " +
                                            points[i].first.get_str());

    // accumulate y_i * prod_{j != i} (x - x_j) / (x_i - x_j) in coefficient form
    std::vector<Rat> acc(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rat> basis{Rat(1)}; // ascending coefficients
        Rat denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= points[i].first - points[j].first;
            // multiply basis by (x - x_j)
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * points[j].first;
            }
            basis = std::move(next);
        }
        Rat scale = points[i].second / denom;
        for (size_t k = 0; k < basis.size(); ++k)
            acc[k] += basis[k] * scale;
    }
    return acc;
}

Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat v(0);
    for (size_t k = coeffs.size(); k-- > 0;)
        v = v * x + coeffs[k];
    return v;
}

} // namespace hlnum
