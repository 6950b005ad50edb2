#pragma once

// Helpers shared by the test suites: random Seifert matrices and floating-point
// oracles that are independent of the exact library code.

#include "concordance/seifert.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <random>

namespace testsupport {

using concordance::Integer;
using concordance::IntMatrix;
using concordance::ZPoly;
using concordance::laurent::LaurentPolynomial;

/// V = P^t (S + N) P with S symmetric, N the upper half of the standard
/// symplectic form and P a product of random elementary unimodular moves, so
/// V - V^t = P^t J P has determinant 1.
inline IntMatrix random_seifert(std::mt19937_64& rng, std::size_t genus, long bound = 2, int moves = 6) {
    const std::size_t n = 2 * genus;
    std::uniform_int_distribution<long> entry(-bound, bound);
    IntMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) v(i, j) = v(j, i) = entry(rng);
    for (std::size_t k = 0; k < genus; ++k) v(2 * k, 2 * k + 1) += 1;
    if (n == 0) return v;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long> mult(-1, 1);
    for (int m = 0; m < moves; ++m) {
        std::size_t a = idx(rng), b = idx(rng);
        long c = mult(rng);
        if (a == b || c == 0) continue;
        // column a += c column b, then row a += c row b
        for (std::size_t i = 0; i < n; ++i) v(i, a) += c * v(i, b);
        for (std::size_t j = 0; j < n; ++j) v(a, j) += c * v(b, j);
    }
    return v;
}

inline Eigen::MatrixXd to_eigen(const IntMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).get_d();
    return e;
}

/// Signature of (1 - w) V + (1 - conj w) V^t at w = exp(i theta), or nothing if
/// an eigenvalue is too close to zero to call.
inline std::optional<int> numeric_tl(const IntMatrix& v, double theta) {
    using C = std::complex<double>;
    const Eigen::MatrixXd V = to_eigen(v);
    const C w = std::polar(1.0, theta);
    Eigen::MatrixXcd H = (C(1) - w) * V.cast<C>() + (C(1) - std::conj(w)) * V.transpose().cast<C>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    int sig = 0;
    for (double lambda : es.eigenvalues()) {
        if (std::abs(lambda) < 1e-7) return std::nullopt;
        sig += lambda > 0 ? 1 : -1;
    }
    return sig;
}

inline std::optional<int> numeric_signature(const IntMatrix& sym) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(sym));
    int sig = 0;
    for (double lambda : es.eigenvalues()) {
        if (std::abs(lambda) < 1e-7) return std::nullopt;
        sig += lambda > 0 ? 1 : -1;
    }
    return sig;
}

// Brute-force oracle over sub-multisets of the factorization: is p = ±t^n f f* for
// some product f of factors?
inline bool fox_milnor_bruteforce(const concordance::laurent::NormalizedAlexander& p) {
    const auto fz = factor(p);
    std::vector<int> choice(fz.factors.size(), 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == fz.factors.size()) {
            ZPoly f = ZPoly::constant(Integer(1));
            for (std::size_t k = 0; k < choice.size(); ++k) f = f * fz.factors[k].poly.pow(choice[k]);
            LaurentPolynomial w(f);
            ZPoly prod = (w * w.inverted()).shifted_to_zero();
            return prod == p.poly() || -prod == p.poly();
        }
        for (int m = 0; m <= fz.factors[i].multiplicity; ++m) {
            choice[i] = m;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

// Factorization-free oracle: f f* has t^0 coefficient sum(f_i^2) = |middle coefficient of p|,
// so every candidate f of degree deg(p)/2 has bounded coefficients.
inline bool fox_milnor_candidates(const concordance::laurent::NormalizedAlexander& p) {
    if (p.degree() % 2) return false;
    const int d = p.degree() / 2;
    long mid = std::abs(p.poly().coeff(d).get_si());
    long bound = 0;
    while ((bound + 1) * (bound + 1) <= mid) ++bound;
    std::vector<long> f(d + 1, -bound);
    while (true) {
        long sq = 0;
        for (long x : f) sq += x * x;
        if (sq == mid && f[0] != 0 && f[d] != 0) {
            std::vector<Integer> c(f.begin(), f.end());
            LaurentPolynomial w(ZPoly(std::move(c)));
            ZPoly prod = (w * w.inverted()).shifted_to_zero();
            if (prod == p.poly() || -prod == p.poly()) return true;
        }
        int k = 0;
        while (k <= d && f[k] == bound) f[k++] = -bound;
        if (k > d) break;
        ++f[k];
    }
    return false;
}

inline IntMatrix trefoil() { return IntMatrix{{-1, 1}, {0, -1}}; }
inline IntMatrix figure_eight() { return IntMatrix{{-1, 1}, {0, 1}}; }
inline IntMatrix slice_block() { return IntMatrix{{0, 1}, {2, 0}}; }

}  // namespace testsupport
