#pragma once

#include "concordance/upoly.hpp"

#include <memory>

namespace concordance {

/// Element of Q[x]/(f) for an irreducible f, stored as its reduced residue.
/// Rational constants carry no modulus and adopt the modulus of whatever they
/// are combined with, so they can be built from plain integers.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(long c) : r_(QPoly::constant(Rational(c))) {}
    FieldElem(const Rational& c) : r_(QPoly::constant(c)) {}
    FieldElem(const QPoly& residue, std::shared_ptr<const QPoly> modulus);

    /// The class of x.
    static FieldElem generator(std::shared_ptr<const QPoly> modulus);

    const QPoly& residue() const { return r_; }
    const std::shared_ptr<const QPoly>& modulus() const { return mod_; }

    FieldElem inverse() const;

    friend bool is_zero(const FieldElem& a) { return a.r_.is_zero(); }
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.r_ == b.r_; }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }

private:
    static const std::shared_ptr<const QPoly>& pick(const FieldElem& a, const FieldElem& b) {
        return a.mod_ ? a.mod_ : b.mod_;
    }

    QPoly r_;
    std::shared_ptr<const QPoly> mod_;
};

}  // namespace concordance
