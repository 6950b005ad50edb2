#include <doctest.h>

#include "support.hpp"

#include "concordance/seifert.hpp"

#include <numbers>

using namespace concordance;
using namespace concordance::seifert;
using testsupport::figure_eight;
using testsupport::slice_block;
using testsupport::trefoil;

namespace {

ZPoly Z(std::initializer_list<long> coeffs) {
    std::vector<Integer> c;
    for (long x : coeffs) c.emplace_back(x);
    return ZPoly(std::move(c));
}

// det(V - t V^t) by Leibniz expansion over Z[t].
ZPoly leibniz_alexander(const IntMatrix& v) {
    const std::size_t n = v.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    ZPoly total;
    do {
        int parity = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) parity += perm[i] > perm[j];
        ZPoly term = ZPoly::constant(Integer(parity % 2 ? -1 : 1));
        for (std::size_t i = 0; i < n; ++i) term = term * ZPoly{v(i, perm[i]), -v(perm[i], i)};
        total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0 ? ZPoly::constant(Integer(1)) : total;
}

SeifertMatrix granny() { return block_sum(validate(trefoil()), validate(trefoil())); }
SeifertMatrix square() { return block_sum(validate(trefoil()), mirror(validate(trefoil()))); }

std::vector<SeifertMatrix> random_forms(std::uint64_t seed, int count, std::size_t max_genus) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> g(1, max_genus);
    std::vector<SeifertMatrix> out;
    for (int i = 0; i < count; ++i) out.push_back(validate(testsupport::random_seifert(rng, g(rng))));
    return out;
}

// Characteristic polynomial det(tI - T) over Q by interpolation at t = 0..n.
QPoly char_poly(const RatMatrix& T) {
    const std::size_t n = T.rows();
    QPoly acc;
    for (std::size_t i = 0; i <= n; ++i) {
        QPoly basis = QPoly::constant(determinant(Rational(static_cast<long>(i)) * RatMatrix::identity(n) - T));
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis = basis * QPoly{Rational(-static_cast<long>(j)), Rational(1)};
            basis = (Rational(1) / Rational(static_cast<long>(i) - static_cast<long>(j))) * basis;
        }
        acc = acc + basis;
    }
    return acc;
}

}  // namespace

TEST_CASE("validate") {
    CHECK_NOTHROW(validate(trefoil()));
    CHECK_NOTHROW(validate(slice_block()));
    CHECK_THROWS_AS(validate(IntMatrix{{1, 1}, {1, 1}}), DomainError);
    CHECK_THROWS_AS(validate(IntMatrix(2, 3)), DomainError);
    CHECK_THROWS_AS(validate(IntMatrix{{0, 1}, {3, 0}}), DomainError);
    CHECK(validate("0,1;2,0").genus_bound() == 1);
}

TEST_CASE("alexander_polynomial examples") {
    CHECK(alexander_polynomial(validate(slice_block())).poly() == Z({2, -5, 2}));
    CHECK(alexander_polynomial(granny()).poly() == Z({1, -2, 3, -2, 1}));
    CHECK(alexander_polynomial(SeifertMatrix{}).poly() == Z({1}));
    CHECK(alexander_polynomial(validate(trefoil())).poly() == Z({1, -1, 1}));
    CHECK(alexander_polynomial(validate(figure_eight())).poly() == Z({1, -3, 1}));
}

TEST_CASE("property: alexander_polynomial matches Leibniz expansion, |D(1)| = 1, |D(-1)| = |H_1|") {
    for (const auto& v : random_forms(1, 60, 3)) {
        auto delta = alexander_polynomial(v);
        auto direct = laurent::normalize(laurent::LaurentPolynomial(leibniz_alexander(v.matrix())));
        CHECK(delta == direct);
        CHECK(abs(delta.at(1)) == 1);
        CHECK(abs(delta.at(-1)) == branched_cover_homology(v).order());
        CHECK(abs(delta.at(-1)) == abs(determinant(v.matrix() + v.matrix().transpose())));
    }
}

TEST_CASE("classical_signature") {
    CHECK(classical_signature(validate(trefoil())) == -2);
    CHECK(classical_signature(validate(slice_block())) == 0);
    CHECK(classical_signature(granny()) == -4);
    CHECK(classical_signature(mirror(granny())) == 4);
    CHECK(classical_signature(square()) == 0);
    for (const auto& v : random_forms(2, 60, 3)) {
        auto num = testsupport::numeric_signature(v.matrix() + v.matrix().transpose());
        if (num) CHECK(classical_signature(v) == *num);
    }
}

TEST_CASE("property: block sums multiply Alexander polynomials and add signatures") {
    auto forms = random_forms(3, 20, 2);
    for (std::size_t i = 0; i + 1 < forms.size(); i += 2) {
        auto s = block_sum(forms[i], forms[i + 1]);
        auto prod = laurent::normalize(laurent::LaurentPolynomial(alexander_polynomial(forms[i]).poly() *
                                                                 alexander_polynomial(forms[i + 1]).poly()));
        CHECK(alexander_polynomial(s) == prod);
        CHECK(classical_signature(s) == classical_signature(forms[i]) + classical_signature(forms[i + 1]));
        CHECK(tristram_levine_signature(s, Rational(2, 5)) ==
              tristram_levine_signature(forms[i], Rational(2, 5)) +
                  tristram_levine_signature(forms[i + 1], Rational(2, 5)));
    }
}

TEST_CASE("tristram_levine_signature examples") {
    auto t = validate(trefoil());
    CHECK(tristram_levine_signature(t, Rational(1, 3)) == -2);
    CHECK(tristram_levine_signature(t, Rational(2, 3)) == -2);
    CHECK(tristram_levine_signature(t, Rational(1, 12)) == 0);
    CHECK(tristram_levine_signature(t, Rational(1, 2)) == -2);
    CHECK(tristram_levine_signature(validate(slice_block()), Rational(1, 3)) == 0);
    CHECK_THROWS_AS(tristram_levine_signature(t, Rational(0)), DomainError);
    CHECK_THROWS_AS(tristram_levine_signature(t, Rational(1)), DomainError);
    try {
        tristram_levine_signature(t, Rational(1, 6));
        FAIL("expected an on-jump error");
    } catch (const OnJumpError& e) {
        CHECK(e.before() == 0);
        CHECK(e.after() == -2);
    }
}

TEST_CASE("property: TL signatures agree with floating-point eigenvalues and conjugation symmetry") {
    const std::vector<Rational> fractions{Rational(1, 7), Rational(1, 5), Rational(2, 7), Rational(3, 10),
                                          Rational(2, 5), Rational(3, 7), Rational(1, 2), Rational(5, 9)};
    int compared = 0;
    for (const auto& v : random_forms(4, 25, 3)) {
        for (const auto& f : fractions) {
            int exact;
            try {
                exact = tristram_levine_signature(v, f);
            } catch (const OnJumpError&) {
                continue;
            }
            CHECK(exact == tristram_levine_signature(v, 1 - f));
            CHECK(exact % 2 == 0);
            auto num = testsupport::numeric_tl(v.matrix(), 2 * std::numbers::pi * f.get_d());
            if (num) {
                CHECK(exact == *num);
                ++compared;
            }
        }
    }
    CHECK(compared > 150);
}

TEST_CASE("signature_function examples") {
    auto sf = signature_function(validate(trefoil()));
    REQUIRE(sf.jumps.size() == 1);
    CHECK(sf.jumps[0].at.theta() == doctest::Approx(std::numbers::pi / 3));
    CHECK(sf.values == std::vector<int>{0, -2});
    CHECK(sf.jumps[0].size == -2);

    auto slice = signature_function(validate(slice_block()));
    CHECK(slice.jumps.empty());
    CHECK(slice.values == std::vector<int>{0});

    auto g = signature_function(granny());
    REQUIRE(g.jumps.size() == 1);
    CHECK(std::abs(g.jumps[0].size) == 4);

    auto sq = signature_function(square());
    REQUIRE(sq.jumps.size() == 1);
    CHECK(sq.jumps[0].size == 0);
}

TEST_CASE("property: signature_function arcs match sampled TL signatures") {
    for (const auto& v : random_forms(5, 30, 3)) {
        auto sf = signature_function(v);
        CHECK(sf.values.front() == 0);
        CHECK(sf.values.size() == sf.jumps.size() + 1);
        std::vector<double> cuts{0};
        for (const auto& j : sf.jumps) cuts.push_back(j.at.theta());
        cuts.push_back(std::numbers::pi);
        for (std::size_t arc = 0; arc + 1 < cuts.size(); ++arc) {
            CHECK(sf.values[arc] % 2 == 0);
            double mid = (cuts[arc] + cuts[arc + 1]) / 2;
            auto num = testsupport::numeric_tl(v.matrix(), mid);
            if (num) CHECK(sf.values[arc] == *num);
        }
        // roots of the Alexander polynomial on the circle are exactly the jump points
        auto delta = alexander_polynomial(v);
        std::size_t unit_roots = 0;
        for (const auto& f : laurent::factor(delta).factors) unit_roots += unit_circle_roots(f.poly).size();
        CHECK(unit_roots == sf.jumps.size());
    }
}

TEST_CASE("half_polynomial and unit_circle_roots") {
    CHECK(half_polynomial(Z({1, -1, 1})) == Z({-1, 1}));
    CHECK(half_polynomial(Z({1, -3, 3, -3, 1})) == Z({1, -3, 1}));  // t^2 - 3t + 3 - 3/t + 1/t^2 = s^2 - 3s + 1
    auto phi10 = unit_circle_roots(Z({1, -1, 1, -1, 1}));
    REQUIRE(phi10.size() == 2);
    CHECK(phi10[0].theta() == doctest::Approx(std::numbers::pi / 5));
    CHECK(phi10[1].theta() == doctest::Approx(3 * std::numbers::pi / 5));
    CHECK(unit_circle_roots(Z({1, -3, 1})).empty());
    CHECK_THROWS_AS(half_polynomial(Z({-2, 1})), DomainError);
}

TEST_CASE("isometric_structure examples") {
    auto iso = isometric_structure(validate(trefoil()));
    CHECK(iso.inner_product == RatMatrix{{-2, 1}, {1, -2}});
    const auto& T = iso.transformation;
    CHECK(T.transpose() * iso.inner_product * T == iso.inner_product);
    CHECK(char_poly(T) == QPoly{Rational(1), Rational(-1), Rational(1)});

    auto s = isometric_structure(validate(slice_block()));
    CHECK(s.inner_product == RatMatrix{{0, 3}, {3, 0}});
    CHECK(char_poly(s.transformation) == QPoly{Rational(1), Rational(-5, 2), Rational(1)});
}

TEST_CASE("property: isometric structures preserve the form and carry the Alexander polynomial") {
    int singular = 0;
    for (const auto& v : random_forms(6, 60, 3)) {
        if (determinant(v.matrix()) == 0) ++singular;
        auto iso = isometric_structure(v);
        const auto& T = iso.transformation;
        CHECK(T.transpose() * iso.inner_product * T == iso.inner_product);
        ZPoly cp = primitive_part(char_poly(T));
        auto lhs = laurent::normalize(laurent::LaurentPolynomial(cp.is_zero() ? ZPoly{1} : cp));
        CHECK(lhs.poly() == primitive_part(alexander_polynomial(v).poly()));
        CHECK(signature(iso.inner_product) == classical_signature(v));
    }
    CHECK(singular > 0);
}

TEST_CASE("witt_reduce removes hyperbolic pairs") {
    // trefoil plus a null block [[0,1],[0,0]] is S-equivalent to the trefoil
    IntMatrix v(4, 4);
    v(0, 0) = -1;
    v(0, 1) = 1;
    v(1, 1) = -1;
    v(2, 3) = 1;
    auto w = witt_reduce(to_rational(v));
    CHECK(w.rows() == 2);
    CHECK(determinant(w - w.transpose()) != 0);
    CHECK(signature(w + w.transpose()) == -2);
}

TEST_CASE("milnor_theta_signature examples") {
    auto t = validate(trefoil());
    CHECK(milnor_theta_signature(t, Z({1, -1, 1}), std::numbers::pi / 3) == -2);
    CHECK(milnor_theta_signature(granny(), Z({1, -1, 1}), std::numbers::pi / 3) == -4);
    CHECK(milnor_theta_signature(square(), Z({1, -1, 1}), std::numbers::pi / 3) == 0);
    CHECK_THROWS_AS(milnor_theta_signature(validate(slice_block()), Z({1, -1, 1}), std::numbers::pi / 3),
                    DomainError);
    CHECK(milnor_signatures(validate(slice_block())).empty());
    CHECK_THROWS_AS(milnor_theta_signature(t, Z({1, -1, 1}), 1.0), DomainError);
    CHECK_THROWS_AS(milnor_theta_signature(t, Z({2, -5, 2}), 1.0), DomainError);
}

TEST_CASE("property: Milnor signatures equal TL jumps and sum to the classical signature") {
    auto forms = random_forms(7, 40, 3);
    forms.push_back(validate(trefoil()));
    forms.push_back(validate(figure_eight()));
    forms.push_back(granny());
    forms.push_back(square());
    for (const auto& v : forms) {
        auto ms = milnor_signatures(v);
        auto sf = signature_function(v);
        REQUIRE(ms.size() == sf.jumps.size());
        int total = 0;
        for (std::size_t i = 0; i < ms.size(); ++i) {
            CHECK(ms[i].value == sf.jumps[i].size);
            CHECK(ms[i].at.theta() == doctest::Approx(sf.jumps[i].at.theta()));
            total += ms[i].value;
        }
        CHECK(total == classical_signature(v));
    }
}

TEST_CASE("branched_cover_homology") {
    CHECK(branched_cover_homology(validate(slice_block())).invariant_factors == std::vector<Integer>{3, 3});
    CHECK(branched_cover_homology(validate(trefoil())).invariant_factors == std::vector<Integer>{3});
    CHECK(branched_cover_homology(validate(trefoil())).str() == "Z/3");
    SeifertMatrix v = validate(slice_block());
    for (int n = 2; n <= 4; ++n) {
        v = block_sum(v, validate(slice_block()));
        auto h = branched_cover_homology(v);
        CHECK(h.invariant_factors == std::vector<Integer>(2 * n, Integer(3)));
        Integer nine_n = 1;
        for (int i = 0; i < n; ++i) nine_n *= 9;
        CHECK(h.order() == nine_n);
    }
    CHECK(branched_cover_homology(SeifertMatrix{}).str() == "0");
}
