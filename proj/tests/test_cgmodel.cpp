#include <doctest.h>

#include "concordance/cgmodel.hpp"

#include <random>

using namespace concordance;
using namespace concordance::cgmodel;

namespace {

Vec plus(const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = (x[i] + y[i]) % 3;
    return r;
}

// Fixed seed for every randomized base function in this file.
constexpr std::uint64_t base_seed = 20021105;

}  // namespace

TEST_CASE("configuration layout") {
    auto cfg = CGConfiguration::zero_base(3);
    CHECK(cfg.links().size() == 8u);  // N^2 - 1
    CHECK(cfg.links().front().label() == "(a1,b1)");
    CHECK(cfg.links().back().label() == "(a2,aN)");
    CHECK(cfg.schedule().size() == 12u);
    CHECK(cfg.schedule_doubles());
    CHECK(cfg.schedule_separates());
    CHECK(cfg.form().pair(cfg.a(2), cfg.b(2)) == 1);
    CHECK(cfg.form().pair(cfg.a(1), cfg.b(2)) == 0);
    CHECK(make_schedule(2, Rational(1), SchedulePolicy::separating) ==
          std::vector<Rational>{3, 8, 24, 72, 216, 648});
    CHECK(make_schedule(2, Rational(1), SchedulePolicy::doubling) == std::vector<Rational>{3, 7, 15, 31, 63, 127});
    CHECK_THROWS_AS(CGConfiguration(2, std::vector<Rational>(80, 0), Rational(0)), DomainError);
    std::vector<Rational> odd(81, 0);
    odd[1] = 1;  // m = a_1 but not -a_1
    CHECK_THROWS_AS(CGConfiguration(2, odd, Rational(1)), DomainError);
    std::vector<Rational> big(81, 0);
    big[1] = big[2] = 5;
    CHECK_THROWS_AS(CGConfiguration(2, big, Rational(1)), DomainError);
    std::vector<Rational> origin(81, 0);
    origin[0] = 1;
    CHECK_THROWS_AS(CGConfiguration(2, origin, Rational(1)), DomainError);
}

TEST_CASE("coefficients examples") {
    auto cfg = CGConfiguration::zero_base(3);
    auto zero = coefficients(cfg, Vec(6, 0));
    CHECK(zero.c == 0);
    CHECK(zero.d == std::vector<int>(3, 0));
    CHECK(zero.e == std::vector<int>(8, 0));
    // m = b_1 + a_3: chi_m(a_1) = 1 and chi_m(a_1 + b_3) = 2 on the sublink (a_1, b_3)
    Vec m = plus(cfg.b(1), cfg.a(3));
    CHECK(cfg.form().pair(cfg.a(1), m) == 1);
    CHECK(cfg.form().pair(plus(cfg.a(1), cfg.b(3)), m) == 2);
    const std::size_t idx = 2;  // (a1,b3)
    CHECK(cfg.links()[idx].label() == "(a1,b3)");
    CHECK(coefficients(cfg, m).e[idx] == 0);
    // m - m_0 with m_0 = b_1
    Vec shifted = cfg.a(3);
    CHECK(cfg.form().pair(cfg.a(1), shifted) == 0);
    CHECK(cfg.form().pair(plus(cfg.a(1), cfg.b(3)), shifted) == 1);
    CHECK(coefficients(cfg, shifted).e[idx] == -1);
    // C reads chi(a_N), D_i reads chi(b_i)
    CHECK(coefficients(cfg, cfg.b(3)).c == 1);
    CHECK(coefficients(cfg, cfg.a(2)).d == std::vector<int>{0, 1, 0});
}

TEST_CASE("cg_value examples") {
    std::mt19937_64 rng(base_seed);
    CGConfiguration cfg(2, random_even_base(2, 4, rng), Rational(4));
    CHECK(cg_value(cfg, Vec(4, 0)) == 0);
    for (const auto& m : cfg.elements()) {
        Vec neg(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) neg[i] = (3 - m[i]) % 3;
        CHECK(cg_value(cfg, m) == cg_value(cfg, neg));
    }
    // b_1 + a_2 and a_2 differ only in the E coefficient of (a1,b2)
    auto zero = CGConfiguration::zero_base(2);
    Vec m1 = plus(zero.b(1), zero.a(2)), m2 = zero.a(2);
    auto c1 = coefficients(zero, m1), c2 = coefficients(zero, m2);
    CHECK(c1.c == c2.c);
    CHECK(c1.d == c2.d);
    std::size_t differing = 0, where = 0;
    for (std::size_t i = 0; i < c1.e.size(); ++i)
        if (c1.e[i] != c2.e[i]) ++differing, where = i;
    REQUIRE(differing == 1);
    CHECK(zero.links()[where].label() == "(a1,b2)");
    CHECK(abs(cg_value(zero, m1) - cg_value(zero, m2)) == 2 * zero.schedule()[1 + 2 + where]);
}

TEST_CASE("separation property") {
    CHECK(separation_property(CGConfiguration::zero_base(2)));
    CHECK(separation_property(CGConfiguration::zero_base(3)));
    // sigma'' = sigma' breaks doubling: C and D_1 trade places
    auto good = CGConfiguration::zero_base(2);
    auto sched = good.schedule();
    sched[1] = sched[0];
    CGConfiguration tied(2, std::vector<Rational>(81, 0), Rational(0), sched);
    CHECK_THROWS_AS(separation_property(tied), DomainError);
    auto rep = separation(tied);
    CHECK_FALSE(rep.distinct_patterns_separate);
    REQUIRE(rep.collision);
    CHECK(cg_value(tied, rep.collision->first) == cg_value(tied, rep.collision->second));
    CHECK_FALSE(coefficients(tied, rep.collision->first) == coefficients(tied, rep.collision->second));
}

TEST_CASE("property: separation holds for bounded even base functions") {
    std::mt19937_64 rng(base_seed);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 2;
        CGConfiguration cfg(n, random_even_base(n, 5, rng), Rational(5));
        auto rep = separation(cfg);
        CHECK(rep.distinct_patterns_separate);
        CHECK(cfg.schedule_separates());
    }
}

TEST_CASE("the bare doubling schedule collides at N = 3") {
    // E differences reach +-2, so doubling alone does not keep subset sums apart
    auto cfg = CGConfiguration::zero_base(3, SchedulePolicy::doubling);
    REQUIRE(cfg.schedule_doubles());
    CHECK_FALSE(cfg.schedule_separates());
    auto rep = separation(cfg);
    CHECK_FALSE(rep.distinct_patterns_separate);
    REQUIRE(rep.collision);
    const auto& [x, y] = *rep.collision;
    CHECK(cg_value(cfg, x) == cg_value(cfg, y));
    auto cx = coefficients(cfg, x).flat(), cy = coefficients(cfg, y).flat();
    CHECK(cx != cy);
    bool two_step = false;
    for (std::size_t i = 0; i < cx.size(); ++i) two_step = two_step || std::abs(cx[i] - cy[i]) == 2;
    CHECK(two_step);
    CHECK_FALSE(separation_property(cfg));
    // at N = 2 the realized patterns never cancel
    CHECK(separation_property(CGConfiguration::zero_base(2, SchedulePolicy::doubling)));
}

TEST_CASE("M_0 support") {
    auto r = verify_m0_support(CGConfiguration::zero_base(2));
    CHECK(r.metabolizers == 8);
    CHECK(r.holds());
    auto r3 = verify_m0_support(CGConfiguration::zero_base(3));
    CHECK(r3.metabolizers == 80);
    CHECK(r3.holds());
    // any m with a nonzero a_1 coefficient lights up D_1
    auto cfg = CGConfiguration::zero_base(2);
    CHECK(coefficients(cfg, cfg.a(1)).d[0] == 1);
    CHECK(coefficients(cfg, cfg.b(2)).c == 1);
}

TEST_CASE("nonconstancy on cosets of M_0") {
    auto two = verify_nonconstancy(2);
    CHECK(two.applicable);
    CHECK(two.cases > 0);
    CHECK(two.all_pass());
    for (const auto& row : two.rows) {
        CHECK(row.proof_witness_ok);
        CHECK(row.link.rfind("L'''", 0) == 0);
    }
    auto three = verify_nonconstancy(3);
    CHECK(three.all_pass());
    CHECK(three.cases > two.cases);
    auto one = verify_nonconstancy(1);
    CHECK_FALSE(one.applicable);
    CHECK_FALSE(one.all_pass());
    CHECK_THROWS_AS(verify_nonconstancy(4), DomainError);
    CHECK(two.table().rfind("N=2 metabolizers=8", 0) == 0);
}

TEST_CASE("property: nonconstancy survives 100 random even base functions") {
    std::mt19937_64 rng(base_seed);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 2;
        const long bound = 1 + trial % 7;
        CGConfiguration cfg(n, random_even_base(n, bound, rng), Rational(bound));
        auto r = verify_nonconstancy(cfg);
        CHECK(r.all_pass());
        for (const auto& row : r.rows) CHECK(row.proof_witness_ok);
    }
}

TEST_CASE("property: additivity over connected sums") {
    std::mt19937_64 rng(base_seed + 1);
    CGConfiguration a(2, random_even_base(2, 2, rng), Rational(2));
    CGConfiguration b = CGConfiguration::zero_base(2, SchedulePolicy::doubling);
    const auto ea = a.elements(), eb = b.elements();
    std::uniform_int_distribution<std::size_t> pa(0, ea.size() - 1), pb(0, eb.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& x = ea[pa(rng)];
        const auto& y = eb[pb(rng)];
        Vec xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        CHECK(cg_value_sum(a, b, xy) == cg_value(a, x) + cg_value(b, y));
    }
}
