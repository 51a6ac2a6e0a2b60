#include "doctest.h"

#include <stdexcept>

#include "mckay/congruence_lab.hpp"
#include "oracles.hpp"

using namespace mckay;

TEST_CASE("inverse of 24 mod prime powers") {
    CHECK(atkin_watson_delta(5, 1) == 4);
    CHECK(atkin_watson_delta(7, 1) == 5);
    CHECK(atkin_watson_delta(11, 1) == 6);
    CHECK(atkin_watson_delta(5, 2) == 24);
    CHECK(atkin_watson_delta(7, 2) == 47);
    CHECK(atkin_watson_delta(11, 2) == 116);
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul}) {
        for (unsigned k = 1; k <= 3; ++k) {
            const unsigned long d = atkin_watson_delta(p, k);
            CHECK(24 * d % ipow(p, k) == 1);
        }
    }
    CHECK_THROWS_AS(atkin_watson_delta(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(atkin_watson_delta(3, 1), std::invalid_argument);
}

TEST_CASE("progression shifts") {
    CHECK(progression_shift(5, 0) == 1);
    CHECK(progression_shift(5, 9) == -44);
    CHECK(progression_shift(11, 3) == -28);
    CHECK(progression_shift(7, 7) == -47);
    CHECK_THROWS_AS(progression_shift(3, 1), std::invalid_argument);
}

TEST_CASE("claim builders reproduce the worked progressions") {
    {
        // p_11(3; 121 n + 28) = 0 (mod 11^3)
        CongruenceClaim c = make_thm16_claim(1, 11, 3, 2);
        CHECK(c.step == 121);
        CHECK(c.offset == 28);
        CHECK(c.modulus == 1331);
    }
    {
        // p_7(7; 343 n + 47) = 0 (mod 7^3)
        CongruenceClaim c = make_thm16_claim(2, 7, 7, 3);
        CHECK(c.step == 343);
        CHECK(c.offset == 47);
        CHECK(c.modulus == 343);
    }
    {
        // p_5(9; 125 n + 44) = 0 (mod 5^4)
        CongruenceClaim c = make_thm16_claim(3, 5, 9, 3);
        CHECK(c.step == 125);
        CHECK(c.offset == 44);
        CHECK(c.modulus == 625);
    }
    {
        // p_5(10; 125 n + 49) = 0 (mod 5^3)
        CongruenceClaim c = make_thm16_claim(5, 5, 10, 3);
        CHECK(c.step == 125);
        CHECK(c.offset == 49);
        CHECK(c.modulus == 125);
    }
    {
        // p_7(45; 343 n + 313) = 0 (mod 7^3)
        CongruenceClaim c = make_thm16_claim(5, 7, 45, 3);
        CHECK(c.step == 343);
        CHECK(c.offset == 313);
        CHECK(c.modulus == 343);
    }
    {
        // part 4 steps by ell^4
        CongruenceClaim c = make_thm16_claim(4, 5, 10, 4);
        CHECK(c.step == 625);
        CHECK(c.offset == 49);
        CHECK(c.modulus == 625);
    }
}

TEST_CASE("claim builders validate their ranges") {
    CHECK_THROWS_AS(make_thm16_claim(1, 5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_thm16_claim(1, 5, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_thm16_claim(2, 5, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_thm16_claim(3, 5, 6, 1), std::invalid_argument);  // a = ell+1
    CHECK_THROWS_AS(make_thm16_claim(3, 5, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_thm16_claim(4, 5, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_thm16_claim(5, 5, 30, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_thm16_claim(6, 5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_thm16_claim(1, 13, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_ramanujan_claim(3), std::invalid_argument);
}

TEST_CASE("ramanujan progressions") {
    CongruenceClaim c5 = make_ramanujan_claim(5);
    CHECK(c5.step == 5);
    CHECK(c5.offset == 4);
    CHECK(c5.modulus == 5);
    CHECK(make_ramanujan_claim(7).offset == 5);
    CHECK(make_ramanujan_claim(11).offset == 6);
}

TEST_CASE("atkin-watson claims use the halved power for 7") {
    CHECK(make_atkin_watson_claim(5, 2).modulus == 25);
    CHECK(make_atkin_watson_claim(7, 2).modulus == 49);
    CHECK(make_atkin_watson_claim(7, 3).modulus == 49);  // floor(3/2)+1 = 2
    CHECK(make_atkin_watson_claim(11, 2).modulus == 121);
}

TEST_CASE("verify_claim passes on true families and counts points") {
    SeriesCache cache;
    {
        VerifyResult r = verify_claim(make_ramanujan_claim(5), 150, cache);
        CHECK(r.checked == 151);
        CHECK(r.pass());
    }
    {
        VerifyResult r = verify_claim(make_thm16_claim(1, 5, 1, 1), 60, cache);
        CHECK(r.checked == 61);
        CHECK(r.pass());
    }
    {
        VerifyResult r = verify_claim(make_lcore_gks_claim(5, 1), 120, cache);
        CHECK(r.pass());
    }
    {
        VerifyResult r = verify_claim(make_atkin_watson_claim(7, 2), 20, cache);
        CHECK(r.pass());
    }
}

TEST_CASE("verify_claim reports violations for a false claim") {
    SeriesCache cache;
    CongruenceClaim wrong = make_ramanujan_claim(5);
    wrong.offset = 3;  // p(5n+3) is not 0 mod 5 in general
    VerifyResult r = verify_claim(wrong, 30, cache);
    CHECK_FALSE(r.pass());
    REQUIRE(!r.violations.empty());
    // p(3) = 3: index 3, residue 3
    CHECK(r.violations[0].index == 3);
    CHECK(r.violations[0].value == 3);
    CHECK(r.violations[0].residue == 3);
}

TEST_CASE("max_checkable_n") {
    CongruenceClaim c = make_thm16_claim(1, 11, 3, 2);  // 121 n + 28
    auto n = max_checkable_n(c, 10200);
    REQUIRE(n.has_value());
    CHECK(*n == 84);
    CHECK(c.required_truncation(*n) <= 10200);
    CHECK_FALSE(max_checkable_n(c, 27).has_value());
}

TEST_CASE("the mod-125 counterexample witness") {
    SeriesCache cache;
    CounterexampleWitness w = counterexample_witness(cache);
    CHECK(w.value == 5594200);
    CHECK(w.residue_125 == 75);
    CHECK(w.residue_25 == 0);
}

TEST_CASE("part-3 boundary probe reports without asserting") {
    SeriesCache cache;
    VerifyResult r = probe_part3_boundary(5, 10, cache);
    CHECK(r.checked == 11);
    MESSAGE("a = ell+1 boundary at ell=5: ", r.violations.size(),
            " of ", r.checked, " points violate the part-3 modulus");
}

TEST_CASE("nonzero counts against the triangular oracle") {
    SeriesCache cache;
    for (unsigned long X : {10ul, 100ul, 1000ul}) {
        CHECK(nonzero_count(2, 0, X, cache) == testing::triangular_count(X));
    }
    // gamma_2(1;X) counts n with n-2 triangular (shift by 2, includes 0)
    CHECK(nonzero_count(2, 1, 100, cache) ==
          1 + testing::triangular_count(98));
}

TEST_CASE("density reports reproduce the published first decades") {
    SeriesCache cache;
    {
        DensityReport r = density_gamma(2, 0, 100, cache);
        REQUIRE(r.rows.size() == 2);
        CHECK(r.rows[0].x == 10);
        CHECK(r.rows[0].count == 4);   // .40000
        CHECK(r.rows[1].x == 100);
        CHECK(r.rows[1].count == 13);  // .13000
    }
    {
        DensityReport r = density_gamma(3, 0, 100, cache);
        CHECK(r.rows[0].count == 8);   // .80000
        CHECK(r.rows[1].count == 57);  // .57000
    }
    {
        CHECK(density_delta(5, 0, 2, 10, cache).rows[0].count == 6);  // .6000
        CHECK(density_delta(5, 0, 3, 10, cache).rows[0].count == 7);  // .7000
        CHECK(density_delta(5, 0, 4, 10, cache).rows[0].count == 9);  // .9000
        CHECK(density_delta(5, 0, 5, 10, cache).rows[0].count == 7);  // .7000
    }
    CHECK_THROWS_AS(density_gamma(2, 0, 9, cache), std::invalid_argument);
    CHECK_THROWS_AS(density_delta(5, 0, 1, 100, cache), std::invalid_argument);
}

TEST_CASE("gamma_3 ratios thin monotonically across decades") {
    SeriesCache cache;
    DensityReport r = density_gamma(3, 0, 10000, cache);
    REQUIRE(r.rows.size() == 4);
    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        // count_i / X_i < count_{i-1} / X_{i-1}, cross-multiplied to stay exact
        CHECK(r.rows[i].count * r.rows[i - 1].x <
              r.rows[i - 1].count * r.rows[i].x);
    }
}

TEST_CASE("delta_5 fourth-decade counts, dual-route verified") {
    // frozen after agreement of two independent coefficient pipelines; the
    // m = 3 entry at 1e4 is 3049 (the reference table prints .3040 there,
    // inconsistent with its own neighboring entries)
    SeriesCache cache;
    CHECK(nondivisible_count(5, 0, 2, 10000, cache) == 244);
    CHECK(nondivisible_count(5, 0, 3, 10000, cache) == 3049);
    CHECK(nondivisible_count(5, 0, 4, 10000, cache) == 2424);
    CHECK(nondivisible_count(5, 0, 5, 10000, cache) == 5224);
}

TEST_CASE("nondivisible counts cross-check against direct recomputation") {
    SeriesCache cache;
    auto core = cache.core(5, 200);
    const TruncatedSeries ps = p_series(5, 2, *core);
    unsigned long direct = 0;
    for (unsigned long n = 1; n <= 200; ++n)
        if (ps.coeff(n) % 3 != 0) ++direct;
    CHECK(nondivisible_count(5, 2, 3, 200, cache) == direct);
}

TEST_CASE("family names are stable identifiers") {
    CHECK(family_name(CongruenceFamily::ramanujan) == "ramanujan");
    CHECK(family_name(CongruenceFamily::atkin_watson) == "atkin_watson");
    CHECK(family_name(CongruenceFamily::lcore_gks) == "lcore_gks");
    CHECK(family_name(CongruenceFamily::thm16_part4) == "thm16_part4");
}
