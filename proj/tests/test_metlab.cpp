#include <doctest.h>

#include "concordance/metlab.hpp"

#include <random>

using namespace concordance;
using namespace concordance::metlab;
using linkform::hyperbolic;

namespace {

Vec e(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

Subgroup diagonal(std::size_t n) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(2 * n, 0);
        v[i] = v[n + i] = 1;
        gens.push_back(v);
    }
    return Subgroup(3, 2 * n, gens);
}

}  // namespace

TEST_CASE("split on the diagonal metabolizer") {
    auto H = hyperbolic(3, 1);
    Subgroup mj(3, 2, {e(2, 0)});
    auto s = split(H, H, diagonal(2), mj);
    CHECK(s.m_k == Subgroup(3, 2, {e(2, 0)}));
    CHECK(s.m_0.rank() == 0);
    CHECK(s.m_j0.rank() == 0);
    // membership scan over all 81 pairs (m, m')
    std::size_t in_mk = 0;
    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b)
            for (long c = 0; c < 3; ++c)
                for (long d = 0; d < 3; ++d)
                    if (mj.contains(Vec{c, d}) && s.m_sharp.contains(Vec{a, b, c, d})) {
                        CHECK(s.m_k.contains(Vec{a, b}));
                        ++in_mk;
                    }
    CHECK(in_mk == 3);
    CHECK(verify_coset_lemma(s));
    CHECK(verify_injection_lemma(s));
    CHECK(verify_metabolizer_theorem(s));
    CHECK(s.str() == "M#=[1,0,1,0;0,1,0,1] M_J=[1,0] M_K=[1,0] M_0=[0] M_J0=[0]");
}

TEST_CASE("split on a product metabolizer") {
    auto H = hyperbolic(3, 1);
    Subgroup product(3, 4, {e(4, 0), e(4, 3)});  // span(e1) (+) span(e2)
    auto s = split(H, H, product, Subgroup(3, 2, {e(2, 0)}));
    CHECK(s.m_0 == Subgroup(3, 2, {e(2, 0)}));
    CHECK(s.m_k == s.m_0);
    CHECK(s.m_j0 == Subgroup(3, 2, {e(2, 1)}));
    CHECK(verify_coset_lemma(s));
    CHECK(verify_injection_lemma(s));
    CHECK(verify_metabolizer_theorem(s));
    CHECK(quotient_order_k(s) == 1);
    CHECK(quotient_order_j(s) == 3);
}

TEST_CASE("split rejects non-metabolizers") {
    auto H = hyperbolic(3, 1);
    CHECK_THROWS_AS(split(H, H, Subgroup(3, 4, {e(4, 0)}), Subgroup(3, 2, {e(2, 0)})), DomainError);
    CHECK_THROWS_AS(split(H, H, diagonal(2), Subgroup(3, 2, {Vec{1, 1}})), DomainError);
}

TEST_CASE("exhaustive lemma sweep over (Z3)^4 + (Z3)^4") {
    // H_K in a scrambled basis so the sweep is not aligned with the coordinates
    auto K = linkform::change_basis(hyperbolic(3, 2), {Vec{1, 1, 0, 0}, Vec{0, 1, 2, 0}, Vec{0, 0, 1, 1}, Vec{1, 0, 0, 1}});
    auto r = sweep_lemmas(K, hyperbolic(3, 2));
    CHECK(r.splits == 2240u * 8u);
    CHECK(r.all_hold());
    CHECK_FALSE(r.first_counterexample);
    auto small = sweep_lemmas(hyperbolic(3, 1), hyperbolic(3, 1));
    CHECK(small.splits == 8u * 2u);
    CHECK(small.all_hold());
}

TEST_CASE("property: quotient orders and M_0 closure on random splits") {
    std::mt19937_64 rng(61);
    for (long p : {2L, 3L}) {
        auto K = hyperbolic(p, 2), J = hyperbolic(p, 1);
        auto ambient = linkform::orthogonal_sum(K, linkform::negate(J));
        auto sharps = linkform::enumerate_metabolizers(ambient);
        auto mjs = linkform::enumerate_metabolizers(J);
        std::uniform_int_distribution<std::size_t> pick_s(0, sharps.size() - 1), pick_j(0, mjs.size() - 1);
        for (int trial = 0; trial < 30; ++trial) {
            auto s = split(K, J, sharps[pick_s(rng)], mjs[pick_j(rng)]);
            CHECK(quotient_order_k(s) <= quotient_order_j(s));
            const auto m0 = s.m_0.elements();
            CHECK(m0.size() == s.fibers.at(Vec(J.rank(), 0)).size());
            CHECK(s.m_k.contains(s.m_0));
            CHECK(verify_coset_lemma(s));
            CHECK(verify_injection_lemma(s));
            CHECK(verify_metabolizer_theorem(s));
        }
    }
}

TEST_CASE("nontrivial M_0 under a rank gap") {
    auto r = verify_nontrivial_m0(hyperbolic(3, 2), hyperbolic(3, 1));
    CHECK(r.applicable);
    CHECK(r.sharps == 80);
    CHECK(r.pairs == 160);
    CHECK(r.holds_for_all());
    CHECK(r.holds_for_some());
    CHECK(r.sharps_nontrivial == r.sharps);

    auto two = verify_nontrivial_m0(hyperbolic(2, 2), hyperbolic(2, 1));
    CHECK(two.applicable);
    CHECK(two.pairs > 0);
    CHECK(two.holds_for_all());

    auto none = verify_nontrivial_m0(hyperbolic(3, 1), hyperbolic(3, 1));
    CHECK_FALSE(none.applicable);
    CHECK_FALSE(none.holds_for_all());

    // without a rank gap the conclusion genuinely fails: the diagonal has M_0 = 0
    auto H = hyperbolic(3, 1);
    CHECK(split(H, H, diagonal(2), Subgroup(3, 2, {e(2, 0)})).m_0.rank() == 0);

    CHECK_THROWS_AS(verify_nontrivial_m0(hyperbolic(3, 4), hyperbolic(3, 2)), DomainError);
}
