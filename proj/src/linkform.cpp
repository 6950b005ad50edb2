#include "concordance/linkform.hpp"

#include "concordance/snf.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace concordance::linkform {

namespace {

long inv_mod(long a, long p) {
    a = mod_floor(a, p);
    long r = 1, e = p - 2;  // p prime
    long b = a;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    if (a == 0 || r * a % p != 1) throw DomainError("not invertible mod p");
    return r;
}

// Reduced row echelon form over F_p; zero rows dropped.
std::vector<Vec> rref(std::vector<Vec> rows, long p, std::size_t n) {
    std::size_t r = 0;
    for (auto& row : rows)
        for (auto& x : row) x = mod_floor(x, p);
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        long inv = inv_mod(rows[r][c], p);
        for (auto& x : rows[r]) x = x * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            long f = rows[i][c];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = mod_floor(rows[i][j] - f * rows[r][j], p);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// Right kernel over F_p of the constraint rows.
std::vector<Vec> kernel(const std::vector<Vec>& constraints, long p, std::size_t n) {
    auto R = rref(constraints, p, n);
    std::vector<std::size_t> pivots;
    for (const auto& row : R) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        pivots.push_back(c);
    }
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        Vec v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < R.size(); ++i) v[pivots[i]] = mod_floor(-R[i][f], p);
        out.push_back(v);
    }
    return out;
}

Integer ipow(long p, int k) {
    Integer r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

}  // namespace

FiniteLinkingForm::FiniteLinkingForm(long p, std::vector<int> exponents, const RatMatrix& pairing)
    : p_(p), exponents_(std::move(exponents)), pairing_(pairing.map([](const Rational& q) { return frac(q); })) {
    if (!is_prime(p)) throw DomainError("linking form prime must be prime");
    const std::size_t r = exponents_.size();
    if (pairing.rows() != r || pairing.cols() != r) throw DomainError("pairing matrix has the wrong size");
    for (int k : exponents_)
        if (k < 1) throw DomainError("summand exponents must be positive");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (pairing_(i, j) != pairing_(j, i)) throw DomainError("pairing is not symmetric");
            Rational scaled = pairing_(i, j) * Rational(ipow(p, std::min(exponents_[i], exponents_[j])));
            if (scaled.get_den() != 1) throw DomainError("pairing value incompatible with summand orders");
        }
    // Nonsingular iff injective on the socle: S_ij = p^{k_i} beta(e_i, e_j) mod p is invertible.
    std::vector<Vec> S(r, Vec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rational s = pairing_(i, j) * Rational(ipow(p, exponents_[i]));
            S[i][j] = mod_floor(Integer(s.get_num()), Integer(p)).get_si();
        }
    if (rref(S, p, r).size() != r) throw DomainError("linking form is singular");
    if (homogeneous()) {
        num_.assign(r, std::vector<long>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) num_[i][j] = S[i][j];
    }
}

FiniteLinkingForm::FiniteLinkingForm(long p, const RatMatrix& pairing)
    : FiniteLinkingForm(p, std::vector<int>(pairing.rows(), 1), pairing) {}

bool FiniteLinkingForm::homogeneous() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int k) { return k == 1; });
}

Integer FiniteLinkingForm::order() const {
    Integer o = 1;
    for (int k : exponents_) o *= ipow(p_, k);
    return o;
}

void FiniteLinkingForm::require_homogeneous() const {
    if (!homogeneous()) throw DomainError("operation needs a homogeneous (Z/p)^r linking form");
}

long FiniteLinkingForm::pair(const Vec& x, const Vec& y) const {
    require_homogeneous();
    long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s = (s + x[i] * num_[i][j] % p_ * y[j]) % p_;
    }
    return mod_floor(s, p_);
}

std::string FiniteLinkingForm::str() const {
    std::string s;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (i) s += " + ";
        s += "Z/" + to_string(ipow(p_, exponents_[i]));
    }
    if (s.empty()) s = "0";
    return s + " with pairing " + format_matrix(pairing_);
}

FiniteLinkingForm from_seifert(const seifert::SeifertMatrix& v, long p) {
    if (!is_prime(p)) throw DomainError("from_seifert needs a prime");
    const IntMatrix A = v.matrix() + v.matrix().transpose();
    const Integer det = determinant(A);
    if (det == 0) throw DomainError("det(V + V^t) = 0: infinite homology");
    if (det % p != 0) throw DomainError("trivial form: p does not divide |det(V + V^t)|");
    const SmithForm s = smith_normal_form(A);
    const RatMatrix Uinv = to_rational(unimodular_inverse(s.U));
    const RatMatrix P = Uinv.transpose() * inverse(to_rational(A)) * Uinv;

    std::vector<std::size_t> idx;
    std::vector<int> exps;
    std::vector<Integer> unit;  // d_i = p^k u
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        Integer x = d[i];
        int k = 0;
        while (x % p == 0) {
            x /= p;
            ++k;
        }
        if (k == 0) continue;
        idx.push_back(i);
        exps.push_back(k);
        unit.push_back(x);
    }
    RatMatrix G(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) G(a, b) = Rational(unit[a] * unit[b]) * P(idx[a], idx[b]);
    return FiniteLinkingForm(p, exps, G);
}

FiniteLinkingForm hyperbolic(long p, int g) {
    RatMatrix m(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) m(2 * i, 2 * i + 1) = m(2 * i + 1, 2 * i) = Rational(1, p);
    return FiniteLinkingForm(p, m);
}

FiniteLinkingForm orthogonal_sum(const FiniteLinkingForm& a, const FiniteLinkingForm& b) {
    if (a.prime() != b.prime()) throw DomainError("orthogonal sum of forms at different primes");
    std::vector<int> e = a.exponents();
    e.insert(e.end(), b.exponents().begin(), b.exponents().end());
    return FiniteLinkingForm(a.prime(), e, block_diagonal(a.pairing(), b.pairing()));
}

FiniteLinkingForm negate(const FiniteLinkingForm& a) { return FiniteLinkingForm(a.prime(), a.exponents(), -a.pairing()); }

// ---------------------------------------------------------------------------

Subgroup::Subgroup(long p, std::size_t n, const std::vector<Vec>& generators)
    : p_(p), n_(n), basis_(rref(generators, p, n)) {
    for (const auto& g : generators)
        if (g.size() != n) throw DomainError("generator has the wrong length");
}

Integer Subgroup::order() const { return ipow(p_, static_cast<int>(rank())); }

bool Subgroup::contains(const Vec& x) const {
    auto rows = basis_;
    rows.push_back(x);
    return rref(rows, p_, n_).size() == basis_.size();
}

bool Subgroup::contains(const Subgroup& s) const {
    return std::all_of(s.basis_.begin(), s.basis_.end(), [this](const Vec& v) { return contains(v); });
}

std::vector<Vec> Subgroup::elements() const {
    std::vector<Vec> out;
    std::vector<long> coeff(rank(), 0);
    while (true) {
        Vec x(n_, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i)
            for (std::size_t j = 0; j < n_; ++j) x[j] = (x[j] + coeff[i] * basis_[i][j]) % p_;
        out.push_back(std::move(x));
        std::size_t i = 0;
        while (i < coeff.size() && coeff[i] == p_ - 1) coeff[i++] = 0;
        if (i == coeff.size()) break;
        ++coeff[i];
    }
    return out;
}

std::string Subgroup::str() const {
    if (basis_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ';';
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) s += ',';
            s += std::to_string(basis_[i][j]);
        }
    }
    return s;
}

std::vector<Subgroup> subgroups_of(const Subgroup& S) {
    std::set<Subgroup> seen{Subgroup(S.prime(), S.ambient_rank(), {})};
    std::vector<Subgroup> out(seen.begin(), seen.end());
    const auto elems = S.elements();
    for (std::size_t i = 0; i < out.size(); ++i) {  // grows while iterating: breadth first by rank
        for (const auto& x : elems) {
            if (out[i].contains(x)) continue;
            auto gens = out[i].basis();
            gens.push_back(x);
            Subgroup bigger(S.prime(), S.ambient_rank(), gens);
            if (seen.insert(bigger).second) out.push_back(bigger);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.rank() < b.rank(); });
    return out;
}

Subgroup whole_group(const FiniteLinkingForm& L) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        Vec v(L.rank(), 0);
        v[i] = 1;
        e.push_back(v);
    }
    return Subgroup(L.prime(), L.rank(), e);
}

Subgroup zero_subgroup(const FiniteLinkingForm& L) { return Subgroup(L.prime(), L.rank(), {}); }

Subgroup annihilator(const FiniteLinkingForm& L, const Subgroup& S) {
    const std::size_t n = L.rank();
    std::vector<Vec> constraints;
    for (const auto& s : S.basis()) {
        Vec row(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            row[i] = L.pair(e, s);
        }
        constraints.push_back(row);
    }
    return Subgroup(L.prime(), n, kernel(constraints, L.prime(), n));
}

bool is_isotropic(const FiniteLinkingForm& L, const Subgroup& S) {
    const auto& b = S.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j)
            if (L.pair(b[i], b[j]) != 0) return false;
    return true;
}

bool is_metabolizer(const FiniteLinkingForm& L, const Subgroup& M) { return annihilator(L, M) == M; }

std::vector<Subgroup> enumerate_metabolizers(const FiniteLinkingForm& L) {
    if (!L.homogeneous()) throw DomainError("metabolizer enumeration needs a homogeneous (Z/p)^r form");
    const std::size_t n = L.rank();
    if (n % 2 != 0) throw DomainError("no metabolizer: |H| = p^" + std::to_string(n) + " is not a square");
    const std::size_t k = n / 2;
    const long p = L.prime();
    std::vector<Subgroup> out;

    // Echelon rows with pivots c_0 < c_1 < ...; row i is 1 at c_i, 0 at the other
    // pivots and before c_i, free elsewhere. Rows are checked for isotropy as they
    // are completed, so dead branches are cut early.
    std::vector<std::size_t> pivots(k);
    std::vector<Vec> rows(k, Vec(n, 0));
    std::function<void(std::size_t)> fill_row;
    std::function<void(std::size_t, std::size_t)> choose_pivots = [&](std::size_t i, std::size_t start) {
        if (i == k) {
            fill_row(0);
            return;
        }
        for (std::size_t c = start; c + (k - i) <= n; ++c) {
            pivots[i] = c;
            choose_pivots(i + 1, c + 1);
        }
    };
    fill_row = [&](std::size_t i) {
        if (i == k) {
            out.emplace_back(p, n, rows);
            return;
        }
        std::vector<std::size_t> free;
        for (std::size_t c = pivots[i] + 1; c < n; ++c)
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back(c);
        Vec& row = rows[i];
        std::fill(row.begin(), row.end(), 0);
        row[pivots[i]] = 1;
        std::vector<long> digits(free.size(), 0);
        while (true) {
            for (std::size_t f = 0; f < free.size(); ++f) row[free[f]] = digits[f];
            bool ok = L.pair(row, row) == 0;
            for (std::size_t j = 0; ok && j < i; ++j) ok = L.pair(row, rows[j]) == 0;
            if (ok) fill_row(i + 1);
            std::size_t f = free.size();
            while (f > 0 && digits[f - 1] == p - 1) digits[--f] = 0;
            if (f == 0) break;
            ++digits[f - 1];
        }
    };
    choose_pivots(0, 0);
    return out;
}

long character(const FiniteLinkingForm& L, const Vec& m, const Vec& x) { return L.pair(x, m); }

std::optional<std::vector<Vec>> hyperbolic_basis(const FiniteLinkingForm& L) {
    if (!L.homogeneous() || L.prime() == 2 || L.rank() % 2 != 0) return std::nullopt;
    const long p = L.prime();
    const std::size_t n = L.rank();
    std::vector<Vec> basis;
    Subgroup rest = whole_group(L);  // orthogonal complement of the pairs found so far
    while (rest.rank() > 0) {
        std::optional<Vec> e;
        for (const auto& x : rest.elements()) {
            bool nonzero = std::any_of(x.begin(), x.end(), [](long c) { return c != 0; });
            if (nonzero && L.pair(x, x) == 0) {
                e = x;
                break;
            }
        }
        if (!e) return std::nullopt;
        std::optional<Vec> f;
        for (const auto& y : rest.basis())
            if (L.pair(*e, y) != 0) {
                f = y;
                break;
            }
        if (!f) return std::nullopt;  // cannot happen for nonsingular forms
        long scale = inv_mod(L.pair(*e, *f), p);
        for (auto& c : *f) c = c * scale % p;
        long half = L.pair(*f, *f) * inv_mod(2, p) % p;  // f - (beta(f,f)/2) e is isotropic
        for (std::size_t i = 0; i < n; ++i) (*f)[i] = mod_floor((*f)[i] - half * (*e)[i], p);
        basis.push_back(*e);
        basis.push_back(*f);
        // rest <- rest ∩ {e, f}^perp, solved in coordinates of the basis of rest
        const auto& rb = rest.basis();
        std::vector<Vec> constraints;
        for (const Vec* b : {&*e, &*f}) {
            Vec row(rb.size());
            for (std::size_t i = 0; i < rb.size(); ++i) row[i] = L.pair(rb[i], *b);
            constraints.push_back(row);
        }
        std::vector<Vec> gens;
        for (const auto& kv : kernel(constraints, p, rb.size())) {
            Vec g(n, 0);
            for (std::size_t i = 0; i < rb.size(); ++i)
                for (std::size_t j = 0; j < n; ++j) g[j] = (g[j] + kv[i] * rb[i][j]) % p;
            gens.push_back(g);
        }
        rest = Subgroup(p, n, gens);
    }
    return basis;
}

FiniteLinkingForm change_basis(const FiniteLinkingForm& L, const std::vector<Vec>& basis) {
    if (basis.size() != L.rank() || Subgroup(L.prime(), L.rank(), basis).rank() != L.rank())
        throw DomainError("change_basis needs a basis");
    RatMatrix m(L.rank(), L.rank());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = Rational(L.pair(basis[i], basis[j]), L.prime());
    return FiniteLinkingForm(L.prime(), m);
}

}  // namespace concordance::linkform
