#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mckay/arith.hpp"
#include "mckay/mckay.hpp"

namespace mckay {

enum class CongruenceFamily {
    ramanujan,     // p(ell n + b) = 0 (mod ell), ell in {5,7,11}
    atkin_watson,  // p(p^m n + 24^{-1} mod p^m) = 0 (mod p^m, 7 halved)
    lcore_gks,     // p_ell(0; ell^m n - (ell^2-1)/24) = 0 (mod ell^m)
    thm16_part1,   // 0 < a < ell:        p_ell(a; ell^m n - d) = 0 (mod ell^{m+1})
    thm16_part2,   // a = ell:            p_ell(a; ell^m n - d) = 0 (mod ell^m)
    thm16_part3,   // ell+1 < a < 2 ell:  p_ell(a; ell^3 n - d) = 0 (mod ell^4)
    thm16_part4,   // a = 2 ell:          p_ell(a; ell^4 n - d) = 0 (mod ell^4)
    thm16_part5,   // 0 < a < ell(ell+1): p_ell(a; ell^3 n - d) = 0 (mod ell^3)
};

std::string family_name(CongruenceFamily f);

// A single arithmetic-progression congruence: value(A n + B) = 0 (mod M)
// for all n >= 0, with the offset normalized into [0, A).
struct CongruenceClaim {
    CongruenceFamily family;
    unsigned long ell = 0;  // prime of the family (= p for partition families)
    unsigned long a = 0;    // hook-product valuation; unused for p(n) families
    unsigned m = 1;         // power in the progression, where applicable
    unsigned long step = 1;    // A
    unsigned long offset = 0;  // B, normalized into [0, step)
    Int modulus;               // M

    // Largest series index touched when checking n = 0..n_max.
    std::size_t required_truncation(unsigned long n_max) const;
};

// delta(a;ell) = (ell^2 - 1)/24 - a*ell, the progression shift of the
// shifted congruence families (can be negative; claims store the offset
// normalized mod the step).
long progression_shift(unsigned long ell, unsigned long a);

// Claim builders. Each validates the family's range constraints
// (throws std::invalid_argument outside them).
CongruenceClaim make_thm16_claim(unsigned part, unsigned long ell, unsigned long a,
                                 unsigned m);
CongruenceClaim make_ramanujan_claim(unsigned long ell);
CongruenceClaim make_atkin_watson_claim(unsigned long p, unsigned m);
CongruenceClaim make_lcore_gks_claim(unsigned long ell, unsigned m);

struct CongruenceViolation {
    unsigned long index;  // argument of the partition function
    Int value;
    Int residue;
};

struct VerifyResult {
    CongruenceClaim claim;
    unsigned long checked = 0;
    std::vector<CongruenceViolation> violations;

    bool pass() const { return violations.empty(); }
};

// Exhaustive check of claim over progression points 0 <= n <= n_max.
VerifyResult verify_claim(const CongruenceClaim& claim, unsigned long n_max,
                          SeriesCache& cache);

// n_max for which every touched index stays within a series truncated at N;
// nullopt when not even n = 0 fits.
std::optional<unsigned long> max_checkable_n(const CongruenceClaim& claim,
                                             std::size_t trunc);

struct CounterexampleWitness {
    Int value;        // p_5(14;99)
    Int residue_125;  // its residue mod 5^3 (nonzero: the family stops here)
    Int residue_25;   // its residue mod 5^2 (zero)
};

// Recomputes the scalar showing that the unshifted mod-ell^3 extension
// fails: p_5(14;99) = 5594200, which is 0 mod 25 but 75 mod 125.
CounterexampleWitness counterexample_witness(SeriesCache& cache);

// Empirical status of the a = ell+1 boundary that the part-3 range
// excludes: checked like part 3 but carrying no claim of correctness.
VerifyResult probe_part3_boundary(unsigned long ell, unsigned long n_max,
                                  SeriesCache& cache);

struct DensityRow {
    unsigned long x;      // upper bound of the window 1..X
    unsigned long count;  // matching n in the window; ratio = count / X
};

struct DensityReport {
    unsigned long ell = 0;
    unsigned long a = 0;
    std::optional<unsigned long> m;  // set for nondivisibility reports
    std::vector<DensityRow> rows;    // one row per power of ten <= xmax
};

// #{1 <= n <= X : p_ell(a;n) != 0}.
unsigned long nonzero_count(unsigned long ell, unsigned long a, unsigned long X,
                            SeriesCache& cache);

// #{1 <= n <= X : p_ell(a;n) != 0 (mod m)}.
unsigned long nondivisible_count(unsigned long ell, unsigned long a,
                                 unsigned long m, unsigned long X,
                                 SeriesCache& cache);

// gamma_ell(a;X) rows for X = 10, 100, ..., the largest power of ten <= xmax.
DensityReport density_gamma(unsigned long ell, unsigned long a, unsigned long xmax,
                            SeriesCache& cache);

// delta_ell(a;m;X) rows on the same grid.
DensityReport density_delta(unsigned long ell, unsigned long a, unsigned long m,
                            unsigned long xmax, SeriesCache& cache);

// Least positive inverse of 24 mod p^k (requires p >= 5).
unsigned long atkin_watson_delta(unsigned long p, unsigned k);

}  // namespace mckay
