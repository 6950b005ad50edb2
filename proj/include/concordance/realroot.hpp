#pragma once

#include "concordance/upoly.hpp"

#include <vector>

namespace concordance {

struct Interval {
    Rational lo, hi;
};

/// Enclosure of p over [lo, hi] by interval Horner evaluation.
Interval eval_interval(const QPoly& p, const Rational& lo, const Rational& hi);

std::vector<QPoly> sturm_sequence(const QPoly& p);
int sign_variations(const std::vector<QPoly>& seq, const Rational& x);

/// A real root of a squarefree rational polynomial, held as an isolating
/// interval (lo, hi) with nonzero values at both ends, or lo == hi for a
/// rational root. Queries refine the interval in place.
class RealRoot {
public:
    RealRoot(QPoly squarefree, Rational lo, Rational hi);

    const QPoly& poly() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_rational() const { return lo_ == hi_; }

    /// Bisects until hi - lo < width.
    void refine(const Rational& width) const;
    /// Exact sign of r at the root.
    int sign_of(const QPoly& r) const;
    /// Sign of (root - x).
    int compare(const Rational& x) const;
    double approx() const;

private:
    void bisect() const;

    QPoly poly_;
    mutable Rational lo_, hi_;
};

/// Real roots of p in the open interval (lo, hi), ascending.
std::vector<RealRoot> real_roots(const QPoly& p, const Rational& lo, const Rational& hi);

}  // namespace concordance
