#include "doctest.h"

#include <stdexcept>

#include "mckay/darcais.hpp"
#include "mckay/mckay.hpp"
#include "mckay/partitions.hpp"
#include "oracles.hpp"

using namespace mckay;

TEST_CASE("repunits") {
    CHECK(repunit(5, 0) == 0);
    CHECK(repunit(5, 1) == 1);
    CHECK(repunit(5, 2) == 6);
    CHECK(repunit(5, 3) == 31);
    for (unsigned k = 1; k <= 6; ++k) CHECK(repunit(2, k) == (1ul << k) - 1);
}

namespace {

// independent bounded search over at most three indices (enough for the
// desk-scale a used here)
unsigned long z_count_oracle(unsigned long ell, unsigned long a) {
    const unsigned long r2 = repunit(ell, 2), r3 = repunit(ell, 3);
    unsigned long count = 0;
    for (unsigned long z3 = 0; z3 * r3 <= a; ++z3) {
        for (unsigned long z2 = 0; z3 * r3 + z2 * r2 <= a; ++z2) {
            ++count;  // z1 absorbs the remainder, [1] = 1
        }
    }
    return count;
}

}  // namespace

TEST_CASE("z_set enumeration") {
    CHECK(z_set(5, 0) == std::vector<ZVector>{ZVector{}});
    CHECK(z_set(5, 3) == std::vector<ZVector>{ZVector{{3}}});
    {
        auto zs = z_set(5, 6);
        REQUIRE(zs.size() == 2);
        CHECK(std::count(zs.begin(), zs.end(), ZVector{{6}}) == 1);
        CHECK(std::count(zs.begin(), zs.end(), ZVector{{0, 1}}) == 1);
    }
    for (unsigned long ell : {2ul, 3ul, 5ul}) {
        for (unsigned long a = 0; a <= 12; ++a) {
            auto zs = z_set(ell, a);
            CHECK(zs.size() == z_count_oracle(ell, a));
            for (const ZVector& z : zs) CHECK(z.weight(ell) == a);
        }
    }
    // below ell the solution is unique
    for (unsigned long a = 0; a < 7; ++a) CHECK(z_set(7, a).size() == 1);
}

TEST_CASE("2-core series is the triangular indicator") {
    const TruncatedSeries core = ell_core_series(2, 500);
    for (unsigned long n = 0; n <= 500; ++n) {
        CHECK(core.coeff(n) == (is_triangular(n) ? 1 : 0));
    }
}

TEST_CASE("3-core series equals the divisor character sum") {
    const TruncatedSeries core = ell_core_series(3, 200);
    for (unsigned long n = 0; n <= 200; ++n) {
        CHECK(core.coeff(n) == three_core_closed(n));
    }
    CHECK(three_core_closed(0) == 1);
    CHECK(three_core_closed(1) == 1);  // divisors of 4: 1 - 1 + 1
}

TEST_CASE("core series counts ell-cores (brute force)") {
    for (unsigned long ell : {2ul, 3ul, 5ul, 7ul}) {
        const TruncatedSeries core = ell_core_series(ell, 25);
        for (unsigned long n = 0; n <= 25; ++n) {
            CHECK(core.coeff(n) == Int(mckay_bruteforce(ell, 0, n)));
        }
    }
}

TEST_CASE("core series coefficients are nonnegative") {
    for (unsigned long ell : {2ul, 3ul, 5ul, 7ul, 11ul}) {
        const TruncatedSeries core = ell_core_series(ell, 400);
        for (unsigned long n = 0; n <= 400; ++n) CHECK(core.coeff(n) >= 0);
    }
}

TEST_CASE("core positivity for ell in {5,7,11} up to 1e4") {
    for (unsigned long ell : {5ul, 7ul, 11ul}) {
        const TruncatedSeries core = ell_core_series(ell, 10000);
        for (unsigned long n = 0; n <= 10000; ++n) {
            REQUIRE(core.coeff(n) > 0);
        }
    }
}

TEST_CASE("omega polynomial structure") {
    // a = 0: the empty product
    CHECK(omega_series(5, 0, 10) == TruncatedSeries::one(10));
    // 0 < a < ell: the single monomial f(-ell;a) q^{a ell}
    for (unsigned long ell : {5ul, 7ul}) {
        for (unsigned long a = 1; a < ell; ++a) {
            const auto terms = omega_terms(ell, a);
            REQUIRE(terms.size() == 1);
            CHECK(terms[0].exponent == a * ell);
            CHECK(terms[0].coeff ==
                  darcais_eval_series(-static_cast<long>(ell), a));
        }
    }
    // f(-5;1) = 5
    const auto t51 = omega_terms(5, 1);
    REQUIRE(t51.size() == 1);
    CHECK(t51[0].exponent == 5);
    CHECK(t51[0].coeff == 5);
}

TEST_CASE("corollary specializations for a = 1, 2, 3") {
    for (unsigned long ell : {5ul, 7ul, 11ul}) {
        const long l = static_cast<long>(ell);
        const TruncatedSeries core = ell_core_series(ell, 300);
        const TruncatedSeries p1 = p_series(ell, 1, core);
        const TruncatedSeries p2 = p_series(ell, 2, core);
        const TruncatedSeries p3 = p_series(ell, 3, core);
        for (unsigned long n = 0; n <= 300; ++n) {
            const Int c1 = n >= ell ? core.coeff(n - ell) : Int(0);
            const Int c2 = n >= 2 * ell ? core.coeff(n - 2 * ell) : Int(0);
            const Int c3 = n >= 3 * ell ? core.coeff(n - 3 * ell) : Int(0);
            CHECK(p1.coeff(n) == l * c1);
            CHECK(p2.coeff(n) == l * (l + 3) / 2 * c2);
            CHECK(p3.coeff(n) == l * (l + 1) * (l + 8) / 6 * c3);
        }
    }
}

TEST_CASE("p_value honors the zero convention for negative shifts") {
    const TruncatedSeries core = ell_core_series(5, 50);
    CHECK(p_value(5, 1, 3, core) == 0);   // n - 5 < 0
    CHECK(p_value(5, 1, 5, core) == 5);   // 5 * p_5(0;0)
    CHECK(p_value(5, 0, 0, core) == 1);
    CHECK_THROWS_AS(p_value(5, 0, 51, core), std::out_of_range);
}

TEST_CASE("series route matches the brute-force oracle") {
    for (unsigned long ell : {2ul, 3ul, 5ul}) {
        const TruncatedSeries core = ell_core_series(ell, 30);
        for (unsigned long n = 0; n <= 30; ++n) {
            const auto hist = mckay_valuation_histogram(ell, n);
            for (unsigned long a = 0; a < hist.size() + 2; ++a) {
                const unsigned long expected = a < hist.size() ? hist[a] : 0;
                CHECK(p_value(ell, a, n, core) == Int(expected));
            }
        }
    }
}

TEST_CASE("closed formulas for ell = 2, 3") {
    CHECK(closed_formula(ClosedFormula::p2_a1, 5) == 2);   // 5-2 = 3 triangular
    CHECK(closed_formula(ClosedFormula::p2_a1, 4) == 0);
    CHECK(closed_formula(ClosedFormula::p2_a1, 2) == 2);   // 0 is triangular
    CHECK(closed_formula(ClosedFormula::p3_a1, 3) == 3);
    CHECK(closed_formula(ClosedFormula::p3_a2, 6) == 9);
    CHECK_THROWS_AS(closed_formula(ClosedFormula::p3_a1, 2), std::invalid_argument);
    CHECK_THROWS_AS(closed_formula(ClosedFormula::p3_a2, 5), std::invalid_argument);

    const TruncatedSeries p21 = p_series(2, 1, 100);
    const TruncatedSeries p31 = p_series(3, 1, 100);
    const TruncatedSeries p32 = p_series(3, 2, 100);
    for (unsigned long n = 0; n <= 100; ++n) {
        CHECK(p21.coeff(n) == closed_formula(ClosedFormula::p2_a1, n));
        if (n > 2) CHECK(p31.coeff(n) == closed_formula(ClosedFormula::p3_a1, n));
        if (n > 5) CHECK(p32.coeff(n) == closed_formula(ClosedFormula::p3_a2, n));
    }
}

TEST_CASE("bivariate product expansion") {
    for (unsigned long ell : {2ul, 3ul, 5ul}) {
        const std::size_t N = 18;
        const std::size_t A = 6;
        const BivariateSeries F = nakamura_bivariate(ell, A, N);
        // x-degree 0 slice is the core series
        CHECK(F.x_slice(0) == ell_core_series(ell, N));
        // coefficients count partitions: nonnegative, and equal to the oracle
        for (unsigned long n = 0; n <= N; ++n) {
            const auto hist = mckay_valuation_histogram(ell, n);
            for (unsigned long a = 0; a <= A; ++a) {
                CHECK(F.coeff(a, n) >= 0);
                const unsigned long expected = a < hist.size() ? hist[a] : 0;
                CHECK(F.coeff(a, n) == Int(expected));
            }
        }
    }
}

TEST_CASE("bivariate row sums reconstruct p(n)") {
    const auto p = testing::pentagonal_partition_numbers(25);
    for (unsigned long ell : {2ul, 3ul}) {
        const std::size_t N = 25;
        const std::size_t A = default_x_truncation(ell, N);
        const BivariateSeries F = nakamura_bivariate(ell, A, N);
        for (unsigned long n = 0; n <= N; ++n) {
            Int sum = 0;
            for (std::size_t a = 0; a <= A; ++a) sum += F.coeff(a, n);
            CHECK(sum == p[n]);
        }
    }
}

TEST_CASE("series cache reuses and regrows") {
    SeriesCache cache;
    auto a = cache.core(5, 100);
    auto b = cache.core(5, 60);
    CHECK(a.get() == b.get());  // reuses the longer series
    auto c = cache.core(5, 200);
    CHECK(c->trunc() >= 200);
    CHECK(a->coeff(40) == c->coeff(40));
    auto pn = cache.partition_numbers(50);
    const auto p = testing::pentagonal_partition_numbers(50);
    for (unsigned long n = 0; n <= 50; ++n) CHECK(pn->coeff(n) == p[n]);
}

TEST_CASE("prime validation") {
    CHECK_THROWS_AS(ell_core_series(4, 10), std::invalid_argument);
    CHECK_THROWS_AS(z_set(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(nakamura_bivariate(9, 4, 10), std::invalid_argument);
}
