#pragma once

#include "concordance/upoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace concordance::laurent {

/// Integer polynomial in t and 1/t. Zero coefficients are never stored, so the
/// zero polynomial is the empty map.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const std::map<int, Integer>& terms);
    /// Coefficients of t^shift, t^(shift+1), ...
    explicit LaurentPolynomial(const ZPoly& p, int shift = 0);

    static LaurentPolynomial monomial(const Integer& c, int exponent);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Integer>& terms() const { return terms_; }
    Integer coeff(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    /// p(1/t).
    LaurentPolynomial inverted() const;
    /// Dense coefficients after dividing by t^min_exponent.
    ZPoly shifted_to_zero() const;
    Integer eval(const Integer& t) const;  // t must be nonzero when negative exponents occur

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a);
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    std::string str(const std::string& var = "t") const;

private:
    std::map<int, Integer> terms_;
};

/// Representative with minimum exponent 0, nonzero constant term and
/// positive leading coefficient.
class NormalizedAlexander {
public:
    const ZPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    LaurentPolynomial laurent() const { return LaurentPolynomial(poly_); }
    Integer at(long t) const { return poly_.eval(Integer(t)); }
    /// |p(1)| = 1, the condition every knot's Alexander polynomial satisfies.
    bool is_knot_polynomial() const { return abs(at(1)) == 1; }

    friend bool operator==(const NormalizedAlexander&, const NormalizedAlexander&) = default;

private:
    friend NormalizedAlexander normalize(const LaurentPolynomial& p);
    explicit NormalizedAlexander(ZPoly p) : poly_(std::move(p)) {}
    ZPoly poly_;
};

struct Factor {
    ZPoly poly;  ///< primitive, positive leading coefficient, irreducible over Q
    int multiplicity = 1;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// input = unit * content * t^shift * prod(factor^multiplicity).
struct IrreducibleFactorization {
    int unit = 1;
    Integer content = 1;
    int shift = 0;
    std::vector<Factor> factors;  ///< ordered by degree, then coefficients from t^0 upward

    LaurentPolynomial expand() const;
};

NormalizedAlexander normalize(const LaurentPolynomial& p);
IrreducibleFactorization factor(const NormalizedAlexander& p);
/// Factorization of an arbitrary nonzero Laurent polynomial.
IrreducibleFactorization factor(const LaurentPolynomial& p);

bool is_symmetric(const LaurentPolynomial& p);
bool is_symmetric(const ZPoly& p);

/// Returns f with p = ±t^n f(t) f(1/t), or nothing when no such f exists.
std::optional<LaurentPolynomial> fox_milnor_test(const NormalizedAlexander& p);

NormalizedAlexander cyclotomic_phi_2p(long p);

/// Normalized reversal t^deg q(1/t) with positive leading coefficient.
ZPoly reciprocal(const ZPoly& q);

/// Parses "1,-3,3,-3,1" (coefficients of t^0, t^1, ...).
LaurentPolynomial parse_coefficients(std::string_view text);
std::string format_coefficients(const NormalizedAlexander& p);

}  // namespace concordance::laurent
