#pragma once

#include <gmpxx.h>

namespace mckay {

using Int = mpz_class;
using Rat = mpq_class;

// Deterministic primality test for word-sized arguments (trial division).
bool is_prime(unsigned long n);

// b^e in unsigned long arithmetic; throws std::overflow_error if it does
// not fit.
unsigned long ipow(unsigned long base, unsigned exp);

// ord_p(n!) via Legendre's formula, sum_{i>=1} floor(n / p^i).
unsigned long factorial_valuation(unsigned long p, unsigned long n);

// Quadratic character mod 3: +1 for d = 1 (mod 3), -1 for d = 2 (mod 3),
// 0 for multiples of 3.
int chi3(unsigned long d);

// Sum of chi3 over the divisors of m (m >= 1).
Int chi3_divisor_sum(unsigned long m);

// n = m(m+1)/2 for some m >= 0.
bool is_triangular(unsigned long n);

}  // namespace mckay
