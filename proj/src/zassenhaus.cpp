#include "zassenhaus.hpp"

#include <algorithm>
#include <cmath>

namespace concordance::detail {

namespace {

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long fp_inv(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = mod_floor(a, p);
    while (new_r != 0) {
        long q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) throw DomainError("element not invertible mod p");
    return mod_floor(t, p);
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k];
    for (std::size_t k = 0; k < b.size(); ++k) c[k] = mod_floor(c[k] - b[k], p);
    fp_trim(c);
    return c;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k];
    for (std::size_t k = 0; k < b.size(); ++k) c[k] = (c[k] + b[k]) % p;
    fp_trim(c);
    return c;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    fp_trim(c);
    return c;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly r = a;
    if (r.size() < b.size()) return {{}, r};
    FpPoly q(r.size() - b.size() + 1, 0);
    long inv = fp_inv(b.back(), p);
    for (std::size_t k = r.size(); k-- >= b.size();) {
        long f = r[k] * inv % p;
        q[k - b.size() + 1] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[k - b.size() + 1 + j] = mod_floor(r[k - b.size() + 1 + j] - f * b[j], p);
    }
    fp_trim(q);
    fp_trim(r);
    return {q, r};
}

FpPoly fp_monic(FpPoly a, long p) {
    if (a.empty()) return a;
    long inv = fp_inv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

FpPoly fp_derivative(const FpPoly& a, long p) {
    FpPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(static_cast<long>(k) % p * a[k] % p);
    fp_trim(d);
    return d;
}

/// s*a + t*b = 1 for coprime a, b.
std::pair<FpPoly, FpPoly> fp_ext_gcd(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = fp_divmod(r0, r1, p);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw DomainError("Hensel lifting: factors not coprime mod p");
    long inv = fp_inv(r0[0], p);
    for (auto& x : s0) x = x * inv % p;
    for (auto& x : t0) x = x * inv % p;
    return {s0, t0};
}

/// Right kernel basis of an n x n matrix over F_p.
std::vector<std::vector<long>> fp_nullspace(std::vector<std::vector<long>> m, long p) {
    const std::size_t n = m.size(), cols = n ? m[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[r]);
        long inv = fp_inv(m[r][c], p);
        for (auto& x : m[r]) x = x * inv % p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod_floor(m[i][j] - f * m[r][j], p);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<long>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<long> v(cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod_floor(-m[i][c], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Polynomials with Integer coefficients reduced modulo a prime power.

ZPoly mod_reduce(const ZPoly& a, const Integer& m) {
    std::vector<Integer> c;
    for (const auto& x : a.coeffs()) c.push_back(mod_floor(x, m));
    return ZPoly(std::move(c));
}

ZPoly from_fp(const FpPoly& a) {
    std::vector<Integer> c;
    for (long x : a) c.emplace_back(x);
    return ZPoly(std::move(c));
}

Integer symmetric_residue(const Integer& x, const Integer& m) {
    Integer r = mod_floor(x, m);
    if (2 * r > m) r -= m;
    return r;
}

/// Lifts F = a0 * b0 (mod p), a0 monic, to F = a * b (mod p^k).
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& F, const FpPoly& a0, const FpPoly& b0, long p, int k) {
    auto [s, t] = fp_ext_gcd(a0, b0, p);
    ZPoly a = from_fp(a0), b = from_fp(b0);
    Integer pj = p;
    for (int j = 1; j < k; ++j) {
        Integer next = pj * p;
        ZPoly diff = mod_reduce(F - a * b, next);
        std::vector<long> e;
        for (const auto& x : diff.coeffs()) {
            Integer q = x / pj;  // exact: F = a*b mod p^j
            e.push_back(mod_floor(q, Integer(p)).get_si());
        }
        fp_trim(e);
        auto [quo, tau] = fp_divmod(fp_mul(t, e, p), a0, p);
        // sigma * a0 + tau * b0 = e with deg tau < deg a0
        FpPoly sigma = fp_add(fp_mul(s, e, p), fp_mul(quo, b0, p), p);
        a = mod_reduce(a + pj * from_fp(tau), next);
        b = mod_reduce(b + pj * from_fp(sigma), next);
        pj = next;
    }
    return {a, b};
}

/// Lifts F = lc * prod(factors) (mod p) to a factorization modulo p^k with monic factors.
std::vector<ZPoly> multi_lift(const ZPoly& F, const std::vector<FpPoly>& factors, long p, int k, const Integer& pk) {
    if (factors.size() == 1) {
        Integer inv;
        Integer lc = mod_floor(F.lead(), pk);
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
        return {mod_reduce(inv * F, pk)};
    }
    FpPoly rest = fp_reduce(F, p);
    rest = fp_divmod(rest, factors[0], p).first;
    auto [a, b] = hensel_lift(F, factors[0], rest, p, k);
    std::vector<FpPoly> tail(factors.begin() + 1, factors.end());
    auto lifted = multi_lift(b, tail, p, k, pk);
    lifted.insert(lifted.begin(), a);
    return lifted;
}

Integer coefficient_bound(const ZPoly& f) {
    // 2^n * ||f||_2 bounds every coefficient of every factor of f.
    Integer norm2 = 0;
    for (const auto& x : f.coeffs()) norm2 += x * x;
    Integer root = sqrt(norm2) + 1;
    Integer pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), f.degree());
    return pow2 * root;
}

}  // namespace

FpPoly fp_reduce(const ZPoly& f, long p) {
    FpPoly c;
    for (const auto& x : f.coeffs()) c.push_back(mod_floor(x, Integer(p)).get_si());
    fp_trim(c);
    return c;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    while (!b.empty()) {
        FpPoly r = fp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

std::vector<FpPoly> berlekamp(const FpPoly& f, long p) {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return {f};
    // Row i holds x^(i p) mod f.
    FpPoly xp{1};
    {
        FpPoly base{0, 1};
        long e = p;
        while (e) {
            if (e & 1) xp = fp_divmod(fp_mul(xp, base, p), f, p).second;
            base = fp_divmod(fp_mul(base, base, p), f, p).second;
            e >>= 1;
        }
    }
    std::vector<std::vector<long>> qt(n, std::vector<long>(n, 0));  // transpose of Q - I
    FpPoly row{1};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) qt[j][i] = j < row.size() ? row[j] : 0;
        qt[i][i] = mod_floor(qt[i][i] - 1, p);
        row = fp_divmod(fp_mul(row, xp, p), f, p).second;
    }
    auto kernel = fp_nullspace(qt, p);
    const std::size_t r = kernel.size();
    std::vector<FpPoly> factors{f};
    for (const auto& v : kernel) {
        if (factors.size() == r) break;
        FpPoly g(v.begin(), v.end());
        fp_trim(g);
        if (g.size() <= 1) continue;
        std::vector<FpPoly> next;
        for (const auto& u : factors) {
            if (u.size() <= 2) {
                next.push_back(u);
                continue;
            }
            FpPoly rem = u;
            for (long c = 0; c < p && rem.size() > 1; ++c) {
                FpPoly gc = g;
                gc[0] = mod_floor(gc[0] - c, p);
                fp_trim(gc);
                FpPoly h = fp_gcd(rem, gc, p);
                if (h.size() > 1) {
                    next.push_back(h);
                    rem = fp_divmod(rem, h, p).first;
                }
            }
            if (rem.size() > 1) next.push_back(fp_monic(rem, p));
        }
        factors = std::move(next);
    }
    if (factors.size() != r) throw DomainError("Berlekamp splitting incomplete");
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<ZPoly> squarefree_decomposition(const ZPoly& f) {
    QPoly F = to_qpoly(f);
    std::vector<ZPoly> parts;
    if (f.degree() <= 0) return parts;
    QPoly a = gcd(F, F.derivative());
    QPoly b = divmod(F, a).first;
    QPoly c = divmod(F.derivative(), a).first;
    QPoly d = c - b.derivative();
    while (b.degree() > 0) {
        QPoly ai = gcd(b, d);
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        d = c - b.derivative();
        parts.push_back(ai.degree() > 0 ? primitive_part(ai) : ZPoly{Integer(1)});
    }
    return parts;
}

std::vector<ZPoly> factor_squarefree(const ZPoly& input) {
    ZPoly f = primitive_part(input);
    if (f.degree() <= 1) return {f};

    // Pick the good prime with the fewest modular factors among the first few.
    long best_p = 0;
    std::vector<FpPoly> best;
    int good_seen = 0;
    for (long p = 3; good_seen < 5 && p < 2000; p += 2) {
        if (!is_prime(p) || mpz_divisible_ui_p(f.lead().get_mpz_t(), p)) continue;
        FpPoly fp = fp_reduce(f, p);
        if (fp_gcd(fp, fp_derivative(fp, p), p).size() != 1) continue;
        ++good_seen;
        auto modular = berlekamp(fp_monic(fp, p), p);
        if (best_p == 0 || modular.size() < best.size()) {
            best_p = p;
            best = std::move(modular);
        }
        if (best.size() == 1) return {f};
    }
    if (best_p == 0) throw DomainError("no good prime found for factorization");

    const long p = best_p;
    Integer bound = 2 * abs(f.lead()) * coefficient_bound(f);
    int k = 1;
    Integer pk = p;
    while (pk <= bound) {
        pk *= p;
        ++k;
    }
    std::vector<ZPoly> lifted = multi_lift(f, best, p, k, pk);

    std::vector<ZPoly> found;
    ZPoly rest = f;
    std::size_t subset_size = 1;
    while (2 * subset_size <= lifted.size()) {
        bool progress = false;
        std::vector<std::size_t> idx(subset_size);
        for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            ZPoly cand = ZPoly::constant(rest.lead());
            for (auto i : idx) cand = mod_reduce(cand * lifted[i], pk);
            std::vector<Integer> sym;
            for (const auto& x : cand.coeffs()) sym.push_back(symmetric_residue(x, pk));
            ZPoly g = primitive_part(ZPoly(std::move(sym)));
            if (g.degree() > 0 && divides(g, rest)) {
                found.push_back(g);
                rest = primitive_part(exact_div(rest, g));
                for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + idx[j]);
                progress = true;
                break;
            }
            // next combination
            std::size_t pos = subset_size;
            while (pos > 0 && idx[pos - 1] == lifted.size() - subset_size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!progress) ++subset_size;
    }
    if (rest.degree() > 0) found.push_back(rest);
    return found;
}

}  // namespace concordance::detail
