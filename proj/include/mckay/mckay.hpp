#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "mckay/arith.hpp"
#include "mckay/series.hpp"

namespace mckay {

// [k]_ell = (ell^k - 1)/(ell - 1), the base-ell repunit ([0] = 0, [1] = 1).
unsigned long repunit(unsigned long ell, unsigned k);

// Finitely supported solution of sum_k z_k * [k]_ell = a. entries[i] holds
// z_{i+1}; trailing zeros trimmed.
struct ZVector {
    std::vector<unsigned long> entries;

    unsigned long weight(unsigned long ell) const;      // sum z_k [k]_ell
    unsigned long q_exponent(unsigned long ell) const;  // sum z_k ell^k

    bool operator==(const ZVector& o) const { return entries == o.entries; }
};

// Complete enumeration of Z_ell(a). Deterministic order (largest index
// explored first). Tiny for desk-scale a.
std::vector<ZVector> z_set(unsigned long ell, unsigned long a);

struct CoreSeriesSpec {
    unsigned long ell;
    std::size_t trunc;
};

// Generating function of ell-core partitions: prod (1-q^{ell n})^ell / (1-q^n),
// coefficients p_ell(0;n) for 0 <= n <= N.
TruncatedSeries ell_core_series(unsigned long ell, std::size_t N);
TruncatedSeries ell_core_series(const CoreSeriesSpec& spec);

// Closed form for 3-cores: sum of the quadratic character mod 3 over the
// divisors of 3n+1.
Int three_core_closed(unsigned long n);

// One monomial of the finite q-polynomial Omega_ell(a;q).
struct OmegaTerm {
    unsigned long exponent;
    Int coeff;
};

// Omega_ell(a;q) as a sparse polynomial: for each z in Z_ell(a) the monomial
// q^{sum z_k ell^k} with coefficient
// prod_k sum_{m=0}^{floor(z_k/ell)} f(ell^{k+1};m) f(-ell^k; z_k - m ell).
// Terms merged by exponent, zero coefficients dropped, ascending exponent.
std::vector<OmegaTerm> omega_terms(unsigned long ell, unsigned long a);

// The same polynomial materialized at truncation N.
TruncatedSeries omega_series(unsigned long ell, unsigned long a, std::size_t N);

// P_ell(a;q) = Omega_ell(a;q) * P_ell(0;q), given a precomputed core series.
TruncatedSeries p_series(unsigned long ell, unsigned long a,
                         const TruncatedSeries& core);
TruncatedSeries p_series(unsigned long ell, unsigned long a, std::size_t N);

// Single value p_ell(a;n) from a cached core series; n may exceed no index
// of the core. By convention p_ell(0;n) = 0 for n < 0, which shifted
// exponents honor automatically.
Int p_value(unsigned long ell, unsigned long a, unsigned long n,
            const TruncatedSeries& core);
// Same, with the Omega polynomial already expanded (it determines ell and a).
Int p_value(unsigned long n, const TruncatedSeries& core,
            const std::vector<OmegaTerm>& omega);

// Bivariate generating function F_ell(x;q) = sum_a P_ell(a;q) x^a via the
// McKay-number infinite product
//   prod_{k>=0} prod_{n>=1} (1-x^{ell n [k]}q^{ell^{k+1}n})^{ell^{k+1}}
//                         / (1-x^{n [k]}q^{ell^k n})^{ell^k};
// c_{a,n} = p_ell(a;n) for a <= A, n <= N.
BivariateSeries nakamura_bivariate(unsigned long ell, std::size_t A, std::size_t N);

// x-truncation at which row sums over a reconstruct p(n) for all n <= N.
std::size_t default_x_truncation(unsigned long ell, std::size_t N);

// Closed formulas for ell = 2, 3.
enum class ClosedFormula {
    p2_a1,  // p_2(1;n), any n >= 0
    p3_a1,  // p_3(1;n), n > 2
    p3_a2,  // p_3(2;n), n > 5
};

Int closed_formula(ClosedFormula which, unsigned long n);

// Grow-on-demand cache of the base series the congruence and density work
// reuses. Safe for concurrent readers; snapshots are immutable.
class SeriesCache {
public:
    std::shared_ptr<const TruncatedSeries> core(unsigned long ell, std::size_t min_trunc);
    // p(n) = f(-1;n), the ordinary partition numbers.
    std::shared_ptr<const TruncatedSeries> partition_numbers(std::size_t min_trunc);

private:
    std::mutex mu_;
    std::map<unsigned long, std::shared_ptr<const TruncatedSeries>> cores_;
    std::shared_ptr<const TruncatedSeries> partitions_;
};

}  // namespace mckay
