#pragma once

#include "concordance/arith.hpp"

#include <string>
#include <utility>
#include <vector>

namespace concordance {

/// Dense univariate polynomial, coefficients from degree 0 upward, no trailing zeros.
template <class T>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static UPoly constant(const T& a) { return UPoly(std::vector<T>{a}); }
    static UPoly monomial(const T& a, std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = a;
        return UPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const T& lead() const { return c_.back(); }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const std::vector<T>& coeffs() const { return c_; }

    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    UPoly derivative() const {
        std::vector<T> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(T(static_cast<long>(k)) * c_[k]);
        return UPoly(std::move(d));
    }

    /// t^deg p(1/t).
    UPoly reversed() const {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return UPoly(std::move(r));
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }
    friend bool operator<(const UPoly& a, const UPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
        return false;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<T> c = a.c_;
        for (auto& x : c) x = -x;
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const T& s, const UPoly& a) {
        std::vector<T> c = a.c_;
        for (auto& x : c) x = s * x;
        return UPoly(std::move(c));
    }

    UPoly pow(unsigned e) const {
        UPoly result = constant(T(1)), base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using ZPoly = UPoly<Integer>;
using QPoly = UPoly<Rational>;

/// Quotient and remainder over a field.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);
QPoly monic(const QPoly& a);

/// Exact division in Z[t]; throws if b does not divide a.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
bool divides(const ZPoly& b, const ZPoly& a);

Integer content(const ZPoly& p);
/// Primitive part with positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);
ZPoly primitive_part(const QPoly& p);
QPoly to_qpoly(const ZPoly& p);

/// The m-th cyclotomic polynomial.
ZPoly cyclotomic_polynomial(long m);

/// "1,-3,3,-3,1" style text.
std::string format_coeffs(const ZPoly& p);
/// Human-readable form in the variable t, highest degree first.
std::string pretty(const ZPoly& p, const std::string& var = "t");

}  // namespace concordance
