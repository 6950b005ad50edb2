#include "concordance/seifert.hpp"

#include "concordance/numfield.hpp"
#include "concordance/snf.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace concordance::seifert {

using laurent::NormalizedAlexander;

SeifertMatrix validate(const IntMatrix& v) {
    if (!v.square()) throw DomainError("invalid Seifert form: matrix is not square");
    Integer d = determinant(v - v.transpose());
    if (abs(d) != 1) throw DomainError("invalid Seifert form: det(V - V^t) = " + to_string(d));
    return SeifertMatrix(v);
}

SeifertMatrix validate(std::string_view text) { return validate(parse_int_matrix(text)); }

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    return validate(block_diagonal(a.matrix(), b.matrix()));
}

SeifertMatrix mirror(const SeifertMatrix& v) { return validate(-v.matrix()); }

NormalizedAlexander alexander_polynomial(const SeifertMatrix& v) {
    const IntMatrix& V = v.matrix();
    const IntMatrix Vt = V.transpose();
    const std::size_t n = V.rows();
    // det(V - tV^t) has degree <= n: sample at t = 0..n and interpolate (Newton form).
    std::vector<Rational> dd(n + 1);
    for (std::size_t t = 0; t <= n; ++t) dd[t] = determinant(V - Integer(static_cast<long>(t)) * Vt);
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(level);
    QPoly p = QPoly::constant(dd[n]);
    for (std::size_t i = n; i-- > 0;) p = p * QPoly{Rational(-static_cast<long>(i)), Rational(1)} + QPoly::constant(dd[i]);
    std::vector<Integer> coeffs;
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw std::logic_error("non-integral Alexander polynomial");
        coeffs.push_back(c.get_num());
    }
    return laurent::normalize(laurent::LaurentPolynomial(ZPoly(std::move(coeffs))));
}

int classical_signature(const SeifertMatrix& v) { return signature(v.matrix() + v.matrix().transpose()); }

// ---------------------------------------------------------------------------
// Tristram-Levine signatures at roots of unity

namespace {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

// Sign of sum r_k cos(2 pi k a / m), known to be real and nonzero.
int real_cyclotomic_sign(const QPoly& r, long a, long m) {
    Integer den = 1;
    for (const auto& c : r.coeffs()) den = lcm(den, c.get_den());
    std::vector<Integer> c;
    Integer l1 = 0;
    for (const auto& x : r.coeffs()) {
        c.push_back(x.get_num() * (den / x.get_den()));
        l1 += abs(c.back());
    }
    for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
        Mpfr two_pi(prec), ang(prec), term(prec), acc(prec), bound(prec), z(prec);
        mpfr_const_pi(two_pi.get(), MPFR_RNDN);
        mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
        mpfr_set_ui(acc.get(), 0, MPFR_RNDN);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            long j = mod_floor(static_cast<long>(k) * a, m);
            mpfr_mul_ui(ang.get(), two_pi.get(), static_cast<unsigned long>(j), MPFR_RNDN);
            mpfr_div_ui(ang.get(), ang.get(), static_cast<unsigned long>(m), MPFR_RNDN);
            mpfr_cos(term.get(), ang.get(), MPFR_RNDN);
            mpfr_mul_z(term.get(), term.get(), c[k].get_mpz_t(), MPFR_RNDN);
            mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
        }
        // Each term is off by at most |c_k| 2^(7-prec); each addition adds at most l1 2^-prec.
        mpfr_set_z(bound.get(), l1.get_mpz_t(), MPFR_RNDU);
        mpfr_mul_ui(bound.get(), bound.get(), c.size() + 1, MPFR_RNDU);
        mpfr_mul_2si(bound.get(), bound.get(), 8 - static_cast<long>(prec), MPFR_RNDU);
        mpfr_abs(z.get(), acc.get(), MPFR_RNDN);
        if (mpfr_cmp(z.get(), bound.get()) > 0) return mpfr_sgn(acc.get());
    }
    throw std::logic_error("sign of cyclotomic number undecided");
}

int descartes_variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

RatMatrix real_form_at(const IntMatrix& V, const Rational& u) {
    // w = ((1 - u^2) + 2iu) / (1 + u^2), hermitian form A + iB realified.
    Rational den = 1 + u * u;
    Rational x = (1 - u * u) / den, y = 2 * u / den;
    const std::size_t n = V.rows();
    RatMatrix M(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational a = (1 - x) * Rational(V(i, j) + V(j, i));
            Rational b = -y * Rational(V(i, j) - V(j, i));
            M(i, j) = a;
            M(n + i, n + j) = a;
            M(i, n + j) = -b;
            M(n + i, j) = b;
        }
    return M;
}

int signature_at_point(const IntMatrix& V, const Rational& u) { return signature(real_form_at(V, u)) / 2; }

// Rational u with 2 Re w(u) strictly inside (lo, hi), where -2 <= lo < hi <= 2.
Rational parameter_in_gap(const Rational& lo, const Rational& hi) {
    auto two_x = [](const Rational& u) -> Rational { return 2 * (1 - u * u) / (1 + u * u); };
    Rational a = 0, b = 1;  // two_x(a) >= hi throughout
    while (two_x(b) >= hi) {
        a = b;
        b *= 2;
    }
    while (two_x(b) <= lo) {
        Rational mid = (a + b) / 2;
        if (two_x(mid) >= hi)
            a = mid;
        else
            b = mid;
    }
    return b;
}

// Refines two distinct real algebraic numbers until their intervals are disjoint; true if a > b.
bool greater(const RealRoot& a, const RealRoot& b) {
    Rational width = 1;
    for (int iter = 0; iter < 4096; ++iter) {
        if (a.lo() > b.hi()) return true;
        if (b.lo() > a.hi()) return false;
        width /= 2;
        a.refine(width);
        b.refine(width);
    }
    throw std::logic_error("could not separate two roots");
}

}  // namespace

double RootAngle::theta() const { return std::acos(std::clamp(two_cos.approx() / 2, -1.0, 1.0)); }

ZPoly half_polynomial(const ZPoly& p) {
    if (p.degree() < 0 || p.degree() % 2 != 0 || p.reversed() != p)
        throw DomainError("half_polynomial needs a palindromic polynomial of even degree");
    const int d = p.degree() / 2;
    ZPoly s = ZPoly::monomial(Integer(1), 1);
    ZPoly prev = ZPoly::constant(Integer(2)), cur = s;
    ZPoly q = ZPoly::constant(p.coeff(d));
    for (int k = 1; k <= d; ++k) {
        q = q + p.coeff(d + k) * cur;
        ZPoly next = s * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return q;
}

std::vector<RootAngle> unit_circle_roots(const ZPoly& p) {
    std::vector<RootAngle> out;
    if (p.degree() < 2 || p.degree() % 2 != 0 || p.reversed() != p) return out;
    auto roots = real_roots(to_qpoly(half_polynomial(p)), Rational(-2), Rational(2));
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) out.push_back(RootAngle{p, *it});
    return out;
}

int SignatureFunction::value_at(double theta) const {
    std::size_t i = 0;
    while (i < jumps.size() && jumps[i].at.theta() < theta) ++i;
    return values[i];
}

SignatureFunction signature_function(const SeifertMatrix& v) {
    SignatureFunction sf;
    const auto fz = laurent::factor(alexander_polynomial(v));
    std::vector<RootAngle> roots;
    for (const auto& f : fz.factors)
        for (auto& r : unit_circle_roots(f.poly)) roots.push_back(std::move(r));
    // theta ascending means 2 cos(theta) descending
    std::sort(roots.begin(), roots.end(),
              [](const RootAngle& a, const RootAngle& b) { return greater(a.two_cos, b.two_cos); });
    // make neighbouring intervals disjoint and strictly inside (-2, 2)
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) greater(roots[i].two_cos, roots[i + 1].two_cos);
    for (auto& r : roots) {
        Rational w = 1;
        while (r.two_cos.hi() >= 2 || r.two_cos.lo() <= -2) r.two_cos.refine(w /= 2);
    }

    std::vector<Rational> upper{Rational(2)}, lower;
    for (const auto& r : roots) {
        lower.push_back(r.two_cos.hi());
        upper.push_back(r.two_cos.lo());
    }
    lower.push_back(Rational(-2));
    for (std::size_t arc = 0; arc <= roots.size(); ++arc)
        sf.values.push_back(signature_at_point(v.matrix(), parameter_in_gap(lower[arc], upper[arc])));
    for (std::size_t i = 0; i < roots.size(); ++i)
        sf.jumps.push_back(Jump{roots[i], sf.values[i + 1] - sf.values[i]});
    return sf;
}

int tristram_levine_signature(const SeifertMatrix& v, const Rational& fraction) {
    Rational f = fraction;
    f.canonicalize();
    if (f <= 0 || f >= 1) throw DomainError("TL signature angle must lie strictly between 0 and 1 turn");
    const long a = f.get_num().get_si();
    const long m = f.get_den().get_si();
    const auto delta = alexander_polynomial(v);
    const ZPoly phi = cyclotomic_polynomial(m);
    if (divides(phi, delta.poly())) {
        const auto sf = signature_function(v);
        const double theta = 2 * std::numbers::pi * std::min(f.get_d(), 1 - f.get_d());
        std::size_t best = 0;
        for (std::size_t i = 1; i < sf.jumps.size(); ++i)
            if (std::abs(sf.jumps[i].at.theta() - theta) < std::abs(sf.jumps[best].at.theta() - theta)) best = i;
        throw OnJumpError("exp(2 pi i " + to_string(f) + ") is a root of the Alexander polynomial", sf.values[best],
                          sf.values[best + 1]);
    }

    const std::size_t n = v.size();
    if (n == 0) return 0;
    auto mod = std::make_shared<const QPoly>(to_qpoly(phi));
    const FieldElem x = FieldElem::generator(mod);
    const FieldElem xbar(QPoly::monomial(Rational(1), static_cast<std::size_t>(m - 1)), mod);
    const FieldElem one(1);
    Matrix<FieldElem> H(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            H(i, j) = (one - x) * FieldElem(Rational(v.matrix()(i, j))) +
                      (one - xbar) * FieldElem(Rational(v.matrix()(j, i)));

    // Faddeev-LeVerrier: characteristic polynomial det(lambda I - H).
    std::vector<FieldElem> c(n + 1);
    c[n] = FieldElem(1);
    Matrix<FieldElem> M(n, n), HM(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = HM;
        for (std::size_t i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        HM = H * M;
        FieldElem tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += HM(i, i);
        c[n - k] = -(tr / FieldElem(static_cast<long>(k)));
    }
    // H is hermitian, so every root is real and Descartes' rule counts exactly.
    std::vector<int> pos(n + 1), neg(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        int s = is_zero(c[k]) ? 0 : real_cyclotomic_sign(c[k].residue(), a, m);
        pos[k] = s;
        neg[k] = (k % 2) ? -s : s;
    }
    if (pos[0] == 0) throw std::logic_error("singular TL form off the jump locus");
    return descartes_variations(pos) - descartes_variations(neg);
}

// ---------------------------------------------------------------------------
// Isometric structures and Milnor signatures

RatMatrix witt_reduce(RatMatrix v) {
    while (v.rows() > 0) {
        RatMatrix ker = nullspace(v);
        if (ker.cols() == 0) break;
        const std::size_t n = v.rows();
        RatMatrix x = ker.submatrix([&] {
            std::vector<std::size_t> r(n);
            for (std::size_t i = 0; i < n; ++i) r[i] = i;
            return r;
        }(), {0});
        // With Vx = 0, the complement {z : x^t V z = 0} contains x; V on it modulo x
        // is Witt equivalent to V.
        RatMatrix perp = nullspace(x.transpose() * v);
        std::vector<std::vector<Rational>> chosen{std::vector<Rational>(n)};
        for (std::size_t i = 0; i < n; ++i) chosen[0][i] = x(i, 0);
        auto as_matrix = [&](const std::vector<std::vector<Rational>>& cols) {
            RatMatrix m(n, cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
            return m;
        };
        for (std::size_t j = 0; j < perp.cols() && chosen.size() < n - 1; ++j) {
            std::vector<Rational> col(n);
            for (std::size_t i = 0; i < n; ++i) col[i] = perp(i, j);
            chosen.push_back(col);
            if (rank(as_matrix(chosen)) < chosen.size()) chosen.pop_back();
        }
        if (chosen.size() != n - 1) throw std::logic_error("Witt reduction failed: V - V^t is singular");
        chosen.erase(chosen.begin());
        RatMatrix C = as_matrix(chosen);
        v = C.transpose() * v * C;
    }
    return v;
}

IsometricStructure isometric_structure(const SeifertMatrix& v) {
    RatMatrix w = witt_reduce(to_rational(v.matrix()));
    RatMatrix wt = w.transpose();
    return {w + wt, inverse(w) * wt};
}

namespace {

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, int e) {
    Matrix<T> r = Matrix<T>::identity(m.rows());
    for (int i = 0; i < e; ++i) r = r * m;
    return r;
}

RatMatrix eval_at_matrix(const ZPoly& p, const RatMatrix& T) {
    RatMatrix acc(T.rows(), T.cols());
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * T;
        for (std::size_t i = 0; i < T.rows(); ++i) acc(i, i) += Rational(*it);
    }
    return acc;
}

int multiplicity_in(const ZPoly& factor, ZPoly delta) {
    int k = 0;
    while (delta.degree() >= factor.degree() && divides(factor, delta)) {
        delta = exact_div(delta, factor);
        ++k;
    }
    return k;
}

// The p-primary summand X_p = ker p(T)^k with T and B restricted to it.
struct PrimaryPart {
    RatMatrix B, T;
};

PrimaryPart primary_part(const IsometricStructure& iso, const ZPoly& p, int k) {
    RatMatrix K = nullspace(matrix_power(eval_at_matrix(p, iso.transformation), k));
    RatMatrix Kt = K.transpose();
    RatMatrix Tp = inverse(Kt * K) * Kt * iso.transformation * K;
    return {Kt * iso.inner_product * K, Tp};
}

// Signature of B on ker (S - s)^(dim) with S = T + T^-1, over Q(s) embedded at the given root.
int restricted_signature(const PrimaryPart& part, const ZPoly& q, const RootAngle& angle) {
    const std::size_t r = part.T.rows();
    if (r == 0) return 0;
    RatMatrix S = part.T + inverse(part.T);
    auto mod = std::make_shared<const QPoly>(monic(to_qpoly(q)));
    const FieldElem s = FieldElem::generator(mod);
    auto lift = [](const RatMatrix& m) { return m.map([](const Rational& x) { return FieldElem(x); }); };
    Matrix<FieldElem> A = lift(S);
    for (std::size_t i = 0; i < r; ++i) A(i, i) -= s;
    Matrix<FieldElem> K = nullspace(matrix_power(A, static_cast<int>(r)));
    Matrix<FieldElem> Br = K.transpose() * lift(part.B) * K;
    const RealRoot& root = angle.two_cos;
    return symmetric_signature<FieldElem>(Br, [&root](const FieldElem& e) { return root.sign_of(e.residue()); });
}

void check_symmetric_irreducible(const ZPoly& p) {
    if (p.degree() < 2 || p.degree() % 2 != 0 || p.reversed() != p)
        throw DomainError("factor must be a palindromic polynomial of even degree");
    const auto fz = laurent::factor(laurent::LaurentPolynomial(p));
    if (fz.factors.size() != 1 || fz.factors[0].multiplicity != 1) throw DomainError("factor is not irreducible");
}

}  // namespace

int milnor_theta_signature(const SeifertMatrix& v, const ZPoly& factor, const RootAngle& angle) {
    const ZPoly p = primitive_part(factor);
    check_symmetric_irreducible(p);
    const ZPoly q = half_polynomial(p);
    if (angle.two_cos.compare(Rational(-2)) <= 0 || angle.two_cos.compare(Rational(2)) >= 0 ||
        angle.two_cos.sign_of(to_qpoly(q)) != 0)
        throw DomainError("angle is not a root of the factor on the unit circle");
    const int k = multiplicity_in(p, alexander_polynomial(v).poly());
    if (k == 0) throw DomainError("factor does not divide the Alexander polynomial");
    const auto part = primary_part(isometric_structure(v), p, k);
    return restricted_signature(part, q, angle);
}

int milnor_theta_signature(const SeifertMatrix& v, const ZPoly& factor, double theta) {
    const ZPoly p = primitive_part(factor);
    check_symmetric_irreducible(p);
    for (const auto& r : unit_circle_roots(p))
        if (std::abs(r.theta() - theta) < 1e-9) return milnor_theta_signature(v, p, r);
    throw DomainError("theta is not the argument of a root of the factor");
}

std::vector<MilnorSignature> milnor_signatures(const SeifertMatrix& v) {
    std::vector<MilnorSignature> out;
    const auto fz = laurent::factor(alexander_polynomial(v));
    IsometricStructure iso;
    bool have_iso = false;
    for (const auto& f : fz.factors) {
        auto roots = unit_circle_roots(f.poly);
        if (roots.empty()) continue;
        if (!have_iso) {
            iso = isometric_structure(v);
            have_iso = true;
        }
        const auto part = primary_part(iso, f.poly, f.multiplicity);
        const ZPoly q = half_polynomial(f.poly);
        for (auto& r : roots) {
            int value = restricted_signature(part, q, r);
            out.push_back(MilnorSignature{std::move(r), f.multiplicity, value});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const MilnorSignature& a, const MilnorSignature& b) { return greater(a.at.two_cos, b.at.two_cos); });
    return out;
}

// ---------------------------------------------------------------------------

Integer FiniteAbelianGroup::order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

std::string FiniteAbelianGroup::str() const {
    if (invariant_factors.empty()) return "0";
    std::string s;
    for (const auto& d : invariant_factors) {
        if (!s.empty()) s += " + ";
        s += "Z/" + to_string(d);
    }
    return s;
}

FiniteAbelianGroup branched_cover_homology(const SeifertMatrix& v) {
    const IntMatrix A = v.matrix() + v.matrix().transpose();
    if (determinant(A) == 0) throw DomainError("det(V + V^t) = 0: infinite homology");
    FiniteAbelianGroup g;
    for (const auto& d : smith_normal_form(A).diagonal())
        if (d != 1) g.invariant_factors.push_back(d);
    return g;
}

}  // namespace concordance::seifert
