#pragma once

#include "concordance/laurent.hpp"
#include "concordance/matrix.hpp"
#include "concordance/realroot.hpp"

#include <string>
#include <vector>

namespace concordance::seifert {

/// Square integer matrix V with det(V - V^t) = ±1.
class SeifertMatrix {
public:
    SeifertMatrix() = default;  // the unknot's empty form

    const IntMatrix& matrix() const { return v_; }
    std::size_t size() const { return v_.rows(); }
    /// The genus of the surface V comes from, n/2.
    int genus_bound() const { return static_cast<int>(v_.rows() / 2); }

    friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }

private:
    friend SeifertMatrix validate(const IntMatrix& v);
    explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {}
    IntMatrix v_;
};

/// Throws DomainError unless v is square with det(v - v^t) = ±1.
SeifertMatrix validate(const IntMatrix& v);
SeifertMatrix validate(std::string_view text);

/// Connected sum model.
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);
/// Seifert matrix -V of the reversed mirror image, the concordance inverse.
SeifertMatrix mirror(const SeifertMatrix& v);

laurent::NormalizedAlexander alexander_polynomial(const SeifertMatrix& v);

/// Signature of V + V^t. The right-handed trefoil [[-1,1],[0,-1]] has signature -2.
int classical_signature(const SeifertMatrix& v);

/// Evaluation exactly at a root of the Alexander polynomial.
class OnJumpError : public DomainError {
public:
    OnJumpError(const std::string& what, int before, int after)
        : DomainError(what), before_(before), after_(after) {}
    int before() const { return before_; }
    int after() const { return after_; }

private:
    int before_, after_;
};

/// Signature of (1 - w) V + (1 - conj w) V^t at w = exp(2 pi i fraction), 0 < fraction < 1.
/// Throws OnJumpError when w is a root of the Alexander polynomial.
int tristram_levine_signature(const SeifertMatrix& v, const Rational& fraction);

/// A unit-circle root exp(i theta), 0 < theta < pi, of an irreducible
/// symmetric factor, held as the real algebraic number 2 cos(theta).
struct RootAngle {
    ZPoly factor;
    RealRoot two_cos;
    double theta() const;
};

struct Jump {
    RootAngle at;
    int size;  ///< value after theta minus value before
};

/// Piecewise-constant TL signature on (0, pi). values[i] holds on the arc
/// between jumps[i-1] and jumps[i]; values.front() is the limit at 0+.
struct SignatureFunction {
    std::vector<Jump> jumps;  ///< ascending in theta
    std::vector<int> values;
    int value_at(double theta) const;
};

SignatureFunction signature_function(const SeifertMatrix& v);

/// q with p(t) = t^d q(t + 1/t), for palindromic p of degree 2d.
ZPoly half_polynomial(const ZPoly& p);
/// Roots of p on the open upper unit semicircle, ascending in theta.
std::vector<RootAngle> unit_circle_roots(const ZPoly& p);

/// (V + V^t, V^-1 V^t) for the Witt-reduced, nonsingular form.
struct IsometricStructure {
    RatMatrix inner_product;
    RatMatrix transformation;
};

/// Splits off hyperbolic pairs until the form is nonsingular.
RatMatrix witt_reduce(RatMatrix v);
IsometricStructure isometric_structure(const SeifertMatrix& v);

/// Signature of V + V^t restricted to the p_theta summand. Equals the jump of
/// the TL signature at theta.
int milnor_theta_signature(const SeifertMatrix& v, const ZPoly& factor, const RootAngle& angle);
/// Same, with theta given numerically (matched to within 1e-9 of a root).
int milnor_theta_signature(const SeifertMatrix& v, const ZPoly& factor, double theta);

struct MilnorSignature {
    RootAngle at;
    int multiplicity;  ///< of the factor in the Alexander polynomial
    int value;
};

/// Every Milnor signature of V: all irreducible symmetric factors, all root angles.
std::vector<MilnorSignature> milnor_signatures(const SeifertMatrix& v);

struct FiniteAbelianGroup {
    std::vector<Integer> invariant_factors;  ///< each > 1, d_1 | d_2 | ...
    Integer order() const;
    std::string str() const;
};

/// Cokernel of V + V^t.
FiniteAbelianGroup branched_cover_homology(const SeifertMatrix& v);

}  // namespace concordance::seifert
