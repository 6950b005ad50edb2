#include "concordance/numfield.hpp"

namespace concordance {

namespace {

QPoly reduce(const QPoly& p, const std::shared_ptr<const QPoly>& mod) {
    if (!mod || p.degree() < mod->degree()) return p;
    return divmod(p, *mod).second;
}

}  // namespace

FieldElem::FieldElem(const QPoly& residue, std::shared_ptr<const QPoly> modulus)
    : r_(reduce(residue, modulus)), mod_(std::move(modulus)) {}

FieldElem FieldElem::generator(std::shared_ptr<const QPoly> modulus) {
    return FieldElem(QPoly::monomial(Rational(1), 1), std::move(modulus));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    FieldElem c;
    c.r_ = a.r_ + b.r_;
    c.mod_ = FieldElem::pick(a, b);
    return c;
}

FieldElem operator-(const FieldElem& a) {
    FieldElem c = a;
    c.r_ = -a.r_;
    return c;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const auto& mod = FieldElem::pick(a, b);
    return FieldElem(a.r_ * b.r_, mod);
}

FieldElem FieldElem::inverse() const {
    if (r_.is_zero()) throw DomainError("division by zero in number field");
    if (r_.degree() == 0) return FieldElem(QPoly::constant(Rational(1) / r_.lead()), mod_);
    // Extended Euclid: track s with s * r_ = current remainder (mod f).
    QPoly a = *mod_, b = r_;
    QPoly sa, sb = QPoly::constant(Rational(1));
    while (b.degree() > 0) {
        auto [q, rem] = divmod(a, b);
        QPoly s = sa - q * sb;
        a = std::move(b);
        b = std::move(rem);
        sa = std::move(sb);
        sb = std::move(s);
    }
    if (b.is_zero()) throw DomainError("modulus is reducible: element not invertible");
    return FieldElem((Rational(1) / b.lead()) * sb, mod_);
}

}  // namespace concordance
