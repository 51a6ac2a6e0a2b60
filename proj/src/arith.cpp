#include "mckay/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace mckay {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (unsigned long d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

unsigned long ipow(unsigned long base, unsigned exp) {
    unsigned long r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > static_cast<unsigned long>(-1) / base)
            throw std::overflow_error("ipow: result does not fit in unsigned long");
        r *= base;
    }
    return r;
}

unsigned long factorial_valuation(unsigned long p, unsigned long n) {
    if (p < 2) throw std::invalid_argument("factorial_valuation: p must be >= 2");
    unsigned long total = 0;
    for (unsigned long q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break;  // next q would overflow
    }
    return total;
}

int chi3(unsigned long d) {
    switch (d % 3) {
        case 1: return 1;
        case 2: return -1;
        default: return 0;
    }
}

Int chi3_divisor_sum(unsigned long m) {
    if (m == 0) throw std::invalid_argument("chi3_divisor_sum: m must be positive");
    long sum = 0;
    for (unsigned long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        sum += chi3(d);
        unsigned long e = m / d;
        if (e != d) sum += chi3(e);
    }
    return Int(sum);
}

bool is_triangular(unsigned long n) {
    unsigned long m = static_cast<unsigned long>(std::sqrt(2.0 * static_cast<double>(n)));
    for (unsigned long k = (m > 1 ? m - 2 : 0); k <= m + 2; ++k) {
        if (k * (k + 1) / 2 == n) return true;
    }
    return false;
}

}  // namespace mckay
