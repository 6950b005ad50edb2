#include "concordance/upoly.hpp"

#include <sstream>

namespace concordance {

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {QPoly{}, a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        Rational f = r[k] / b.lead();
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly monic(const QPoly& a) {
    if (a.is_zero()) return a;
    Rational inv = 1 / a.lead();
    return inv * a;
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.is_zero()) return {};
    std::vector<Integer> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) throw DomainError("inexact polynomial division");
    std::vector<Integer> q(a.degree() - db + 1, Integer(0));
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b.lead().get_mpz_t()))
            throw DomainError("inexact polynomial division");
        Integer f = r[k] / b.lead();
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
    }
    for (const auto& x : r)
        if (x != 0) throw DomainError("inexact polynomial division");
    return ZPoly(std::move(q));
}

bool divides(const ZPoly& b, const ZPoly& a) {
    try {
        exact_div(a, b);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

Integer content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& x : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (p.lead() < 0) g = -g;
    std::vector<Integer> c = p.coeffs();
    for (auto& x : c) x /= g;
    return ZPoly(std::move(c));
}

ZPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return {};
    Integer l = 1;
    for (const auto& x : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Integer> c;
    for (const auto& x : p.coeffs()) c.push_back(Integer(x * l));
    return primitive_part(ZPoly(std::move(c)));
}

QPoly to_qpoly(const ZPoly& p) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return QPoly(std::move(c));
}

std::string format_coeffs(const ZPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out << ',';
        out << p.coeffs()[k];
    }
    return out.str();
}

std::string pretty(const ZPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Integer c = p.coeff(k);
        if (c == 0) continue;
        Integer a = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) out << a;
        if (k >= 1) out << var;
        if (k >= 2) out << '^' << k;
        first = false;
    }
    return out.str();
}

ZPoly cyclotomic_polynomial(long m) {
    if (m < 1) throw DomainError("cyclotomic index must be positive");
    ZPoly p = ZPoly::monomial(Integer(1), m) - ZPoly::constant(Integer(1));
    for (long d = 1; d < m; ++d)
        if (m % d == 0) p = exact_div(p, cyclotomic_polynomial(d));
    return p;
}

}  // namespace concordance
