#pragma once

#include <complex>
#include <map>
#include <vector>

#include "mckay/arith.hpp"
#include "mckay/series.hpp"

namespace mckay {

// Finite product prod_{delta | N} eta(delta z)^{r_delta}. Every key of
// `exponents` must divide `level`.
struct EtaQuotient {
    unsigned long level = 1;
    std::map<unsigned long, long> exponents;
};

// eta^ell(ell z) / eta(z): level ell, exponents {ell: ell, 1: -1}. Its
// Fourier expansion is q^{(ell^2-1)/24} times the ell-core series.
EtaQuotient ell_core_eta_quotient(unsigned long ell);

struct TransformationCheck {
    Rat weight;                     // (1/2) sum r_delta
    bool integral_weight;
    bool cond24_delta;              // sum delta * r_delta = 0 (mod 24)
    bool cond24_level_over_delta;   // sum (N/delta) * r_delta = 0 (mod 24)

    bool all() const { return integral_weight && cond24_delta && cond24_level_over_delta; }
};

// The integer-weight transformation-law conditions, evaluated exactly.
TransformationCheck check_transformation_conditions(const EtaQuotient& e);

struct CuspOrder {
    unsigned long d;  // cusp denominator, d | N
    Rat order;        // exact order of vanishing at c/d (independent of c)
};

struct CuspOrderReport {
    std::vector<CuspOrder> orders;  // one entry per divisor of N, ascending
    bool holomorphic() const;       // all orders >= 0
};

// Order of vanishing at each cusp class c/d:
//   (N/24) sum_{delta|N} gcd(d,delta)^2 r_delta / (gcd(d,N/d) d delta).
// Requires the transformation conditions to hold.
CuspOrderReport cusp_orders(const EtaQuotient& e);

// Nebentypus chi(d) = Kronecker((-1)^k s, d) with s = prod delta^{r_delta},
// reduced to the squarefree part of (-1)^k * numerator * denominator. The
// value is computed for d coprime to the character's conductor; other d are
// out of domain and map to 0 (the usual Dirichlet convention). Requires
// integral weight.
int character_value(const EtaQuotient& e, long d);

// Conductor of the character above: |D| for D = 1 (mod 4), else 4|D|,
// where D is the signed squarefree part.
unsigned long character_conductor(const EtaQuotient& e);

struct QExpansion {
    Rat leading_exponent;    // (1/24) sum delta * r_delta
    TruncatedSeries series;  // the q-integral factor, truncated at `terms`
};

QExpansion q_expansion(const EtaQuotient& e, std::size_t terms);

// Partial-product evaluation of Dedekind eta at a point of the upper half
// plane. Double precision; sanity layer only, never part of exact checks.
std::complex<double> eta_numeric(std::complex<double> z, unsigned terms = 64);

}  // namespace mckay
