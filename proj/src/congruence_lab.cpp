#include "mckay/congruence_lab.hpp"

#include <stdexcept>

namespace mckay {

std::string family_name(CongruenceFamily f) {
    switch (f) {
        case CongruenceFamily::ramanujan: return "ramanujan";
        case CongruenceFamily::atkin_watson: return "atkin_watson";
        case CongruenceFamily::lcore_gks: return "lcore_gks";
        case CongruenceFamily::thm16_part1: return "thm16_part1";
        case CongruenceFamily::thm16_part2: return "thm16_part2";
        case CongruenceFamily::thm16_part3: return "thm16_part3";
        case CongruenceFamily::thm16_part4: return "thm16_part4";
        case CongruenceFamily::thm16_part5: return "thm16_part5";
    }
    throw std::logic_error("family_name: unreachable");
}

std::size_t CongruenceClaim::required_truncation(unsigned long n_max) const {
    return static_cast<std::size_t>(step) * n_max + offset;
}

long progression_shift(unsigned long ell, unsigned long a) {
    if (ell < 5 || (ell * ell - 1) % 24 != 0)
        throw std::invalid_argument("progression_shift: needs ell^2 = 1 (mod 24)");
    return static_cast<long>((ell * ell - 1) / 24) - static_cast<long>(a * ell);
}

namespace {

unsigned long normalize_offset(long shift, unsigned long step) {
    // claims check indices step*n - shift; store -shift mod step
    long b = (-shift) % static_cast<long>(step);
    if (b < 0) b += static_cast<long>(step);
    return static_cast<unsigned long>(b);
}

void require_congruence_prime(unsigned long ell) {
    if (ell != 5 && ell != 7 && ell != 11)
        throw std::invalid_argument("this congruence family needs ell in {5, 7, 11}");
}

CongruenceClaim shifted_claim(CongruenceFamily family, unsigned long ell,
                              unsigned long a, unsigned m, unsigned step_power,
                              unsigned modulus_power) {
    CongruenceClaim c;
    c.family = family;
    c.ell = ell;
    c.a = a;
    c.m = m;
    c.step = ipow(ell, step_power);
    c.offset = normalize_offset(progression_shift(ell, a), c.step);
    mpz_ui_pow_ui(c.modulus.get_mpz_t(), ell, modulus_power);
    return c;
}

}  // namespace

CongruenceClaim make_thm16_claim(unsigned part, unsigned long ell, unsigned long a,
                                 unsigned m) {
    require_congruence_prime(ell);
    switch (part) {
        case 1:
            if (a == 0 || a >= ell)
                throw std::invalid_argument("part 1 needs 0 < a < ell");
            if (m < 1) throw std::invalid_argument("part 1 needs m >= 1");
            return shifted_claim(CongruenceFamily::thm16_part1, ell, a, m, m, m + 1);
        case 2:
            if (a != ell) throw std::invalid_argument("part 2 needs a = ell");
            if (m < 1) throw std::invalid_argument("part 2 needs m >= 1");
            return shifted_claim(CongruenceFamily::thm16_part2, ell, a, m, m, m);
        case 3:
            if (a <= ell + 1 || a >= 2 * ell)
                throw std::invalid_argument("part 3 needs ell+1 < a < 2 ell");
            return shifted_claim(CongruenceFamily::thm16_part3, ell, a, 3, 3, 4);
        case 4:
            if (a != 2 * ell) throw std::invalid_argument("part 4 needs a = 2 ell");
            return shifted_claim(CongruenceFamily::thm16_part4, ell, a, 4, 4, 4);
        case 5:
            if (a == 0 || a >= ell * (ell + 1))
                throw std::invalid_argument("part 5 needs 0 < a < ell(ell+1)");
            return shifted_claim(CongruenceFamily::thm16_part5, ell, a, 3, 3, 3);
        default:
            throw std::invalid_argument("part must be 1..5");
    }
}

CongruenceClaim make_ramanujan_claim(unsigned long ell) {
    require_congruence_prime(ell);
    CongruenceClaim c;
    c.family = CongruenceFamily::ramanujan;
    c.ell = ell;
    c.m = 1;
    c.step = ell;
    c.offset = atkin_watson_delta(ell, 1);  // 4, 5, 6 for ell = 5, 7, 11
    c.modulus = static_cast<long>(ell);
    return c;
}

CongruenceClaim make_atkin_watson_claim(unsigned long p, unsigned m) {
    require_congruence_prime(p);
    if (m < 1) throw std::invalid_argument("atkin_watson: m >= 1");
    CongruenceClaim c;
    c.family = CongruenceFamily::atkin_watson;
    c.ell = p;
    c.m = m;
    c.step = ipow(p, m);
    c.offset = atkin_watson_delta(p, m);
    // modulus p^m, with the classical adjustment p^{floor(m/2)+1} for p = 7
    const unsigned power = (p == 7) ? m / 2 + 1 : m;
    mpz_ui_pow_ui(c.modulus.get_mpz_t(), p, power);
    return c;
}

CongruenceClaim make_lcore_gks_claim(unsigned long ell, unsigned m) {
    require_congruence_prime(ell);
    if (m < 1) throw std::invalid_argument("lcore_gks: m >= 1");
    CongruenceClaim c;
    c.family = CongruenceFamily::lcore_gks;
    c.ell = ell;
    c.a = 0;
    c.m = m;
    c.step = ipow(ell, m);
    c.offset = normalize_offset(progression_shift(ell, 0), c.step);
    mpz_ui_pow_ui(c.modulus.get_mpz_t(), ell, m);
    return c;
}

namespace {

VerifyResult run_progression(const CongruenceClaim& claim, unsigned long n_max,
                             const TruncatedSeries& values,
                             const std::vector<OmegaTerm>* omega) {
    VerifyResult result;
    result.claim = claim;
    for (unsigned long n = 0; n <= n_max; ++n) {
        const unsigned long idx = claim.step * n + claim.offset;
        Int v = omega ? p_value(idx, values, *omega) : values.coeff(idx);
        Int residue;
        mpz_mod(residue.get_mpz_t(), v.get_mpz_t(), claim.modulus.get_mpz_t());
        ++result.checked;
        if (residue != 0)
            result.violations.push_back(
                CongruenceViolation{idx, std::move(v), std::move(residue)});
    }
    return result;
}

}  // namespace

VerifyResult verify_claim(const CongruenceClaim& claim, unsigned long n_max,
                          SeriesCache& cache) {
    const std::size_t need = claim.required_truncation(n_max);
    switch (claim.family) {
        case CongruenceFamily::ramanujan:
        case CongruenceFamily::atkin_watson: {
            auto series = cache.partition_numbers(need);
            return run_progression(claim, n_max, *series, nullptr);
        }
        case CongruenceFamily::lcore_gks: {
            auto core = cache.core(claim.ell, need);
            return run_progression(claim, n_max, *core, nullptr);
        }
        default: {
            auto core = cache.core(claim.ell, need);
            const std::vector<OmegaTerm> omega = omega_terms(claim.ell, claim.a);
            return run_progression(claim, n_max, *core, &omega);
        }
    }
}

std::optional<unsigned long> max_checkable_n(const CongruenceClaim& claim,
                                             std::size_t trunc) {
    if (claim.offset > trunc) return std::nullopt;
    return (trunc - claim.offset) / claim.step;
}

CounterexampleWitness counterexample_witness(SeriesCache& cache) {
    auto core = cache.core(5, 99);
    CounterexampleWitness w;
    w.value = p_value(5, 14, 99, *core);
    mpz_mod_ui(w.residue_125.get_mpz_t(), w.value.get_mpz_t(), 125);
    mpz_mod_ui(w.residue_25.get_mpz_t(), w.value.get_mpz_t(), 25);
    return w;
}

VerifyResult probe_part3_boundary(unsigned long ell, unsigned long n_max,
                                  SeriesCache& cache) {
    require_congruence_prime(ell);
    // a = ell + 1 with part 3's progression and modulus; not asserted by the
    // stated range, reported as observation only
    CongruenceClaim c =
        shifted_claim(CongruenceFamily::thm16_part3, ell, ell + 1, 3, 3, 4);
    return verify_claim(c, n_max, cache);
}

unsigned long nonzero_count(unsigned long ell, unsigned long a, unsigned long X,
                            SeriesCache& cache) {
    auto core = cache.core(ell, X);
    TruncatedSeries ps = p_series(ell, a, *core);
    unsigned long count = 0;
    for (unsigned long n = 1; n <= X; ++n)
        if (ps.coeff(n) != 0) ++count;
    return count;
}

unsigned long nondivisible_count(unsigned long ell, unsigned long a,
                                 unsigned long m, unsigned long X,
                                 SeriesCache& cache) {
    if (m < 2) throw std::invalid_argument("nondivisible_count: modulus must be >= 2");
    auto core = cache.core(ell, X);
    TruncatedSeries ps = p_series(ell, a, *core);
    unsigned long count = 0;
    for (unsigned long n = 1; n <= X; ++n)
        if (mpz_divisible_ui_p(ps.coeff(n).get_mpz_t(), m) == 0) ++count;
    return count;
}

namespace {

std::vector<unsigned long> decade_grid(unsigned long xmax) {
    if (xmax < 10)
        throw std::invalid_argument("density tables need xmax >= 10");
    std::vector<unsigned long> xs;
    for (unsigned long x = 10; x <= xmax; x *= 10) {
        xs.push_back(x);
        if (x > xmax / 10) break;
    }
    return xs;
}

}  // namespace

DensityReport density_gamma(unsigned long ell, unsigned long a, unsigned long xmax,
                            SeriesCache& cache) {
    DensityReport report;
    report.ell = ell;
    report.a = a;
    const std::vector<unsigned long> xs = decade_grid(xmax);
    auto core = cache.core(ell, xs.back());
    TruncatedSeries ps = p_series(ell, a, *core);
    unsigned long count = 0, n = 1;
    for (unsigned long x : xs) {
        for (; n <= x; ++n)
            if (ps.coeff(n) != 0) ++count;
        report.rows.push_back(DensityRow{x, count});
    }
    return report;
}

DensityReport density_delta(unsigned long ell, unsigned long a, unsigned long m,
                            unsigned long xmax, SeriesCache& cache) {
    if (m < 2) throw std::invalid_argument("density_delta: modulus must be >= 2");
    DensityReport report;
    report.ell = ell;
    report.a = a;
    report.m = m;
    const std::vector<unsigned long> xs = decade_grid(xmax);
    auto core = cache.core(ell, xs.back());
    TruncatedSeries ps = p_series(ell, a, *core);
    unsigned long count = 0, n = 1;
    for (unsigned long x : xs) {
        for (; n <= x; ++n)
            if (mpz_divisible_ui_p(ps.coeff(n).get_mpz_t(), m) == 0) ++count;
        report.rows.push_back(DensityRow{x, count});
    }
    return report;
}

unsigned long atkin_watson_delta(unsigned long p, unsigned k) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("atkin_watson_delta: p must be a prime >= 5 "
                                    "(24 must be invertible)");
    if (k < 1) throw std::invalid_argument("atkin_watson_delta: k >= 1");
    const Int modulus(ipow(p, k));
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), Int(24).get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::logic_error("atkin_watson_delta: 24 not invertible");
    Int least = inv % modulus;
    if (least <= 0) least += modulus;
    return least.get_ui();
}

}  // namespace mckay
