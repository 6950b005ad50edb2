#include "concordance/laurent.hpp"

#include "zassenhaus.hpp"

#include <algorithm>
#include <sstream>

namespace concordance::laurent {

LaurentPolynomial::LaurentPolynomial(const std::map<int, Integer>& terms) {
    for (const auto& [e, c] : terms)
        if (c != 0) terms_.emplace(e, c);
}

LaurentPolynomial::LaurentPolynomial(const ZPoly& p, int shift) {
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (p.coeffs()[k] != 0) terms_.emplace(static_cast<int>(k) + shift, p.coeffs()[k]);
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, int exponent) {
    return LaurentPolynomial(std::map<int, Integer>{{exponent, c}});
}

Integer LaurentPolynomial::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
    if (is_zero()) throw DomainError("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
    std::map<int, Integer> t;
    for (const auto& [e, c] : terms_) t.emplace(-e, c);
    return LaurentPolynomial(t);
}

ZPoly LaurentPolynomial::shifted_to_zero() const {
    if (is_zero()) return {};
    const int lo = min_exponent();
    std::vector<Integer> c(max_exponent() - lo + 1, Integer(0));
    for (const auto& [e, v] : terms_) c[e - lo] = v;
    return ZPoly(std::move(c));
}

Integer LaurentPolynomial::eval(const Integer& t) const {
    if (is_zero()) return 0;
    const int lo = min_exponent();
    if (lo < 0 && abs(t) != 1) throw DomainError("Laurent evaluation with negative exponents needs t = ±1");
    Integer acc = 0;
    for (const auto& [e, c] : terms_) {
        Integer pw = 1;
        Integer base = t;
        int k = e < 0 ? -e : e;  // for t = ±1, t^-k = t^k
        for (int i = 0; i < k; ++i) pw *= base;
        acc += c * pw;
    }
    return acc;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    std::map<int, Integer> t = a.terms_;
    for (const auto& [e, c] : b.terms_) t[e] += c;
    return LaurentPolynomial(t);
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
    std::map<int, Integer> t;
    for (const auto& [e, c] : a.terms_) t.emplace(e, -c);
    return LaurentPolynomial(t);
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    std::map<int, Integer> t;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) t[ea + eb] += ca * cb;
    return LaurentPolynomial(t);
}

std::string LaurentPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Integer a = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (a != 1 || e == 0) out << a;
        if (e != 0) {
            out << var;
            if (e != 1) out << '^' << e;
        }
        first = false;
    }
    return out.str();
}

LaurentPolynomial IrreducibleFactorization::expand() const {
    ZPoly acc = ZPoly::constant(Integer(unit) * content);
    for (const auto& f : factors) acc = acc * f.poly.pow(f.multiplicity);
    return LaurentPolynomial(acc, shift);
}

NormalizedAlexander normalize(const LaurentPolynomial& p) {
    if (p.is_zero()) throw DomainError("normalize: zero polynomial");
    ZPoly q = p.shifted_to_zero();
    if (q.lead() < 0) q = -q;
    return NormalizedAlexander(std::move(q));
}

namespace {

bool factor_less(const Factor& a, const Factor& b) {
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.multiplicity < b.multiplicity;
}

IrreducibleFactorization factor_dense(const ZPoly& q, int shift) {
    IrreducibleFactorization out;
    out.shift = shift;
    out.unit = q.lead() < 0 ? -1 : 1;
    out.content = content(q);
    ZPoly prim = primitive_part(q);
    auto parts = detail::squarefree_decomposition(prim);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() <= 0) continue;
        for (auto& g : detail::factor_squarefree(parts[i]))
            out.factors.push_back(Factor{std::move(g), static_cast<int>(i + 1)});
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    return out;
}

}  // namespace

IrreducibleFactorization factor(const NormalizedAlexander& p) { return factor_dense(p.poly(), 0); }

IrreducibleFactorization factor(const LaurentPolynomial& p) {
    if (p.is_zero()) throw DomainError("factor: zero polynomial");
    return factor_dense(p.shifted_to_zero(), p.min_exponent());
}

bool is_symmetric(const ZPoly& p) {
    if (p.is_zero()) throw DomainError("is_symmetric: zero polynomial");
    ZPoly q = LaurentPolynomial(p).shifted_to_zero();
    ZPoly r = q.reversed();
    return r == q || r == -q;
}

bool is_symmetric(const LaurentPolynomial& p) {
    if (p.is_zero()) throw DomainError("is_symmetric: zero polynomial");
    return is_symmetric(p.shifted_to_zero());
}

ZPoly reciprocal(const ZPoly& q) {
    ZPoly r = LaurentPolynomial(q).shifted_to_zero().reversed();
    return r.lead() < 0 ? -r : r;
}

std::optional<LaurentPolynomial> fox_milnor_test(const NormalizedAlexander& p) {
    if (!p.is_knot_polynomial()) throw DomainError("fox_milnor_test: |p(1)| != 1, not a knot polynomial");
    const auto fz = factor(p);
    ZPoly witness = ZPoly::constant(Integer(1));
    std::vector<bool> used(fz.factors.size(), false);
    for (std::size_t i = 0; i < fz.factors.size(); ++i) {
        if (used[i]) continue;
        const auto& f = fz.factors[i];
        if (is_symmetric(f.poly)) {
            if (f.multiplicity % 2) return std::nullopt;
            witness = witness * f.poly.pow(f.multiplicity / 2);
            used[i] = true;
            continue;
        }
        ZPoly rec = reciprocal(f.poly);
        std::size_t j = i + 1;
        while (j < fz.factors.size() && (used[j] || fz.factors[j].poly != rec)) ++j;
        if (j == fz.factors.size() || fz.factors[j].multiplicity != f.multiplicity) return std::nullopt;
        used[i] = used[j] = true;
        // Take the later member of each reciprocal pair in factor order.
        witness = witness * fz.factors[j].poly.pow(f.multiplicity);
    }
    LaurentPolynomial w(witness);
    ZPoly check = (w * w.inverted()).shifted_to_zero();
    if (check != p.poly() && -check != p.poly()) throw std::logic_error("fox_milnor_test: witness does not reproduce input");
    return w;
}

NormalizedAlexander cyclotomic_phi_2p(long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw DomainError("cyclotomic_phi_2p: need an odd prime, got " + std::to_string(p));
    std::vector<Integer> c(p);
    for (long k = 0; k < p; ++k) c[k] = (k % 2 == 0) ? 1 : -1;
    return normalize(LaurentPolynomial(ZPoly(std::move(c))));
}

LaurentPolynomial parse_coefficients(std::string_view text) {
    std::vector<Integer> c;
    std::size_t start = 0;
    if (text.empty()) throw DomainError("empty coefficient list");
    while (true) {
        auto pos = text.find(',', start);
        std::string tok(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t\r") + 1);
        if (tok.empty()) throw DomainError("empty coefficient in '" + std::string(text) + "'");
        std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (i == tok.size() || tok.find_first_not_of("0123456789", i) != std::string::npos)
            throw DomainError("malformed coefficient '" + tok + "'");
        if (tok[0] == '+') tok.erase(0, 1);
        c.emplace_back(tok);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return LaurentPolynomial(ZPoly(std::move(c)));
}

std::string format_coefficients(const NormalizedAlexander& p) { return format_coeffs(p.poly()); }

}  // namespace concordance::laurent
