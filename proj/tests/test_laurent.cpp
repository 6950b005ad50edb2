#include <doctest.h>

#include "support.hpp"

#include "concordance/laurent.hpp"

#include <random>

using namespace concordance;
using namespace concordance::laurent;
using testsupport::fox_milnor_bruteforce;
using testsupport::fox_milnor_candidates;

namespace {

LaurentPolynomial L(std::initializer_list<long> coeffs, int shift = 0) {
    std::vector<Integer> c;
    for (long x : coeffs) c.emplace_back(x);
    return LaurentPolynomial(ZPoly(std::move(c)), shift);
}

ZPoly Z(std::initializer_list<long> coeffs) {
    std::vector<Integer> c;
    for (long x : coeffs) c.emplace_back(x);
    return ZPoly(std::move(c));
}

using Pattern = std::vector<std::pair<ZPoly, int>>;

Pattern pattern(const IrreducibleFactorization& f) {
    Pattern out;
    for (const auto& x : f.factors) out.emplace_back(x.poly, x.multiplicity);
    return out;
}

}  // namespace

TEST_CASE("normalize picks the associate with min exponent 0 and positive leading coefficient") {
    auto n = normalize(L({1, -3, 3, -3, 1}, -2));
    CHECK(n.poly() == Z({1, -3, 3, -3, 1}));
    CHECK(n.degree() == 4);

    auto one = normalize(L({-1}));
    CHECK(one.poly() == Z({1}));
    CHECK(one.degree() == 0);

    auto q = normalize(L({0, -2, 5, -2}));
    CHECK(q.poly() == Z({2, -5, 2}));
    CHECK(q.degree() == 2);

    CHECK_THROWS_AS(normalize(LaurentPolynomial{}), DomainError);
}

TEST_CASE("factor: published and hand-derived examples") {
    auto f62 = factor(normalize(L({1, -3, 3, -3, 1})));
    REQUIRE(f62.factors.size() == 1);
    CHECK(f62.factors[0].multiplicity == 1);

    auto sq = factor(normalize(L({1, -2, 3, -2, 1})));
    CHECK(pattern(sq) == Pattern{{Z({1, -1, 1}), 2}});

    auto rat = factor(normalize(L({2, -5, 2})));
    CHECK(pattern(rat) == Pattern{{Z({-2, 1}), 1}, {Z({-1, 2}), 1}});
}

TEST_CASE("factor agrees with frozen sympy factorizations") {
    struct Case {
        ZPoly input;
        Pattern expected;
    };
    std::vector<Case> cases = {
        {Z({1, -4, 8, -12, 13, -12, 8, -4, 1}), {{Z({1, -1, 1}), 2}, {Z({1, -2, 1, -2, 1}), 1}}},
        {Z({1, -5, 10, -13, 10, -5, 1}), {{Z({1, -3, 1}), 1}, {Z({1, -1, 1}), 2}}},
        {Z({1, -7, 18, -23, 18, -7, 1}), {{Z({1, -3, 1}), 2}, {Z({1, -1, 1}), 1}}},
        {Z({2, -9, 18, -23, 18, -9, 2}), {{Z({-2, 1}), 1}, {Z({-1, 2}), 1}, {Z({1, -1, 1}), 2}}},
        {Z({1, -5, 14, -28, 41, -47, 41, -28, 14, -5, 1}),
         {{Z({1, -1, 1}), 2}, {Z({-1, 1, -2, 1}), 1}, {Z({-1, 2, -1, 1}), 1}}},
        {Z({2, -9, 18, -27, 36, -45, 54, -63, 72, -81, 90, -95, 90, -81, 72, -63, 54, -45, 36, -27, 18, -9, 2}),
         {{Z({-2, 1}), 1}, {Z({-1, 2}), 1}, {Z({1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1}), 2}}},
        {Z({1, 0, -20, 0, 102, 0, -20, 0, 1}), {{Z({1, 0, -10, 0, 1}), 2}}},
        {Z({25, -45, 79, -101, -96, 299, -109, -10, -214, 190, 120, -159, 0, 36}),
         {{Z({1, 0, 4}), 1}, {Z({1, 1, 1}), 1}, {Z({1, 0, -1, 1}), 1}, {Z({5, -7, 0, 3}), 2}}},
    };
    for (const auto& c : cases) {
        auto fz = factor(normalize(LaurentPolynomial(c.input)));
        CHECK(pattern(fz) == c.expected);
        CHECK(fz.expand().shifted_to_zero() == c.input);
    }

    auto x8 = factor(LaurentPolynomial(Z({-1, 0, 0, 0, 0, 0, 0, 0, 1})));
    CHECK(pattern(x8) == Pattern{{Z({-1, 1}), 1}, {Z({1, 1}), 1}, {Z({1, 0, 1}), 1}, {Z({1, 0, 0, 0, 1}), 1}});
}

TEST_CASE("factor handles content, sign and powers of t") {
    auto p = L({-6, 0, 6}, 3);  // -6t^3 + 6t^5 = 6 t^3 (t-1)(t+1)
    auto fz = factor(p);
    CHECK(fz.content == 6);
    CHECK(fz.shift == 3);
    CHECK(fz.unit == 1);
    CHECK(fz.expand() == p);
    auto neg = L({3, -1}, -1);
    auto fn = factor(neg);
    CHECK(fn.unit == -1);
    CHECK(fn.expand() == neg);
}

TEST_CASE("property: factorization is multiplicative and reconstructs the input") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(1, 5);
    auto random_poly = [&] {
        int d = deg(rng);
        std::vector<Integer> c(d + 1);
        do {
            for (auto& x : c) x = coeff(rng);
        } while (c[0] == 0 || c[d] == 0);
        return ZPoly(std::move(c));
    };
    for (int trial = 0; trial < 60; ++trial) {
        ZPoly a = random_poly(), b = random_poly();
        auto fa = factor(LaurentPolynomial(a)), fb = factor(LaurentPolynomial(b));
        auto fab = factor(LaurentPolynomial(a * b));
        CHECK(fab.expand() == LaurentPolynomial(a * b));
        CHECK(fa.expand() == LaurentPolynomial(a));
        std::map<ZPoly, int, std::less<>> merged;
        for (const auto& f : fa.factors) merged[f.poly] += f.multiplicity;
        for (const auto& f : fb.factors) merged[f.poly] += f.multiplicity;
        std::map<ZPoly, int, std::less<>> got;
        for (const auto& f : fab.factors) got[f.poly] += f.multiplicity;
        CHECK(got == merged);
        CHECK(fab.content == fa.content * fb.content);
    }
}

TEST_CASE("property: normalize commutes with products") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> shift(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::map<int, Integer> ta, tb;
        for (int k = 0; k < 4; ++k) {
            ta[shift(rng)] = coeff(rng);
            tb[shift(rng)] = coeff(rng);
        }
        LaurentPolynomial p(ta), q(tb);
        if (p.is_zero() || q.is_zero()) continue;
        auto lhs = normalize(p * q).poly();
        auto rhs = normalize(LaurentPolynomial(normalize(p).poly() * normalize(q).poly())).poly();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(L({1, -1, 1})));
    CHECK_FALSE(is_symmetric(L({-2, 1})));
    CHECK(is_symmetric(L({1, -3, 3, -3, 1})));
    CHECK(is_symmetric(L({1, -1}, -3)));  // t^-3 - t^-2 is -t^-5 times its reversal
    CHECK_THROWS_AS(is_symmetric(LaurentPolynomial{}), DomainError);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Integer> c(1 + trial % 6);
        for (auto& x : c) x = coeff(rng);
        ZPoly p(c);
        if (p.is_zero()) continue;
        LaurentPolynomial lp(p);
        CHECK(is_symmetric(lp * lp.inverted() * LaurentPolynomial::monomial(1, p.degree())));
    }
}

TEST_CASE("fox_milnor_test examples") {
    auto w = fox_milnor_test(normalize(L({1, -2, 3, -2, 1})));
    REQUIRE(w.has_value());
    CHECK(w->shifted_to_zero() == Z({1, -1, 1}));

    auto w2 = fox_milnor_test(normalize(L({2, -5, 2})));
    REQUIRE(w2.has_value());
    CHECK(w2->shifted_to_zero() == Z({-1, 2}));

    CHECK_FALSE(fox_milnor_test(normalize(L({1, -3, 1}))).has_value());
    CHECK_FALSE(fox_milnor_candidates(normalize(L({1, -3, 1}))));

    CHECK_THROWS_AS(fox_milnor_test(normalize(L({1, 1, 1}))), DomainError);
}

TEST_CASE("fox_milnor_test agrees with both oracles on small symmetric polynomials") {
    int checked = 0, positive = 0;
    for (int d = 0; d <= 3; ++d) {
        std::vector<long> half(d + 1, -3);
        half[0] = 1;
        while (true) {
            std::vector<Integer> c(2 * d + 1);
            for (int k = 0; k <= d; ++k) c[k] = c[2 * d - k] = half[k];
            ZPoly p(c);
            if (abs(p.eval(Integer(1))) == 1) {
                auto n = normalize(LaurentPolynomial(p));
                bool got = fox_milnor_test(n).has_value();
                CHECK(got == fox_milnor_bruteforce(n));
                CHECK(got == fox_milnor_candidates(n));
                ++checked;
                positive += got;
            }
            int k = 0;
            while (k <= d && half[k] == 3) half[k++] = (k == 0 ? 1 : -3);
            if (k > d) break;
            ++half[k];
        }
    }
    CHECK(checked > 100);
    CHECK(positive > 0);
}

TEST_CASE("cyclotomic_phi_2p") {
    auto phi10 = cyclotomic_phi_2p(5);
    CHECK(phi10.poly() == Z({1, -1, 1, -1, 1}));
    CHECK(phi10.at(1) == 1);
    CHECK(phi10.at(-1) == 5);
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
        auto fz = factor(cyclotomic_phi_2p(p));
        REQUIRE(fz.factors.size() == 1);
        CHECK(fz.factors[0].multiplicity == 1);
        CHECK(cyclotomic_phi_2p(p).at(-1) == p);
    }
    CHECK_THROWS_AS(cyclotomic_phi_2p(9), DomainError);
    CHECK_THROWS_AS(cyclotomic_phi_2p(2), DomainError);
}

TEST_CASE("coefficient text round trip") {
    auto p = parse_coefficients("1,-3,3,-3,1");
    CHECK(format_coefficients(normalize(p)) == "1,-3,3,-3,1");
    CHECK_THROWS_AS(parse_coefficients("1,,2"), DomainError);
    CHECK_THROWS_AS(parse_coefficients("x"), DomainError);
    CHECK(normalize(p).laurent().str() == "t^4 - 3t^3 + 3t^2 - 3t + 1");
}
