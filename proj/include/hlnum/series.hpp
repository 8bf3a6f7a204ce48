#pragma once

#include <utility>
#include <vector>

#include "hlnum/rational.hpp"

namespace hlnum {

// Power series in one variable truncated at a fixed order: coefficients
// c_0..c_order are stored, everything above is discarded.  All arithmetic is
// exact.  Binary operations require both operands to share the same order;
// mixing orders is a usage bug and throws std::invalid_argument.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    static TruncatedSeries constant(const Rat& c, int order);

    int order() const { return order_; }
    const Rat& coeff(int k) const;
    void set_coeff(int k, const Rat& c);

    // multiplicative inverse; throws NotInvertible when coeff(0) == 0
    TruncatedSeries recip() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    int order_;
    std::vector<Rat> coeffs_;
};

// exp(-c x) truncated at `order`: coefficient of x^k is (-c)^k / k!
TruncatedSeries exp_neg(const Rat& c, int order);

// Per-Chern-root factor of the Hirzebruch chi_y class, evaluated on a root of
// multiplicity t:
//
//     x (1 + y e^{-tx}) / (1 - e^{-tx})
//
// as a series in x.  For t = 0 the factor is the constant 1 + y (the limit of
// the expression above).  The denominator 1 - e^{-tx} has zero constant term,
// so the quotient is formed against the unit series (1 - e^{-tx}) / (tx),
// whose coefficients are (-t)^k x^k / (k+1)!.  Evaluation at y = -1 throws
// DegenerateEvaluation: the numerator would also vanish at x = 0 and the
// genus degenerates for every input.
TruncatedSeries chi_y_factor(long t, const Rat& y, int order);

// Coefficients (ascending, size = points.size()) of the unique polynomial of
// degree < points.size() through the given (x, y) pairs.  Abscissas must be
// pairwise distinct.
std::vector<Rat> interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Horner evaluation of an ascending coefficient list.
Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x);

} // namespace hlnum
