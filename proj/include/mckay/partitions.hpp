#pragma once

#include <functional>
#include <vector>

#include "mckay/arith.hpp"

namespace mckay {

// A partition of n: non-increasing positive parts summing to n. The empty
// list is the unique partition of 0.
class Partition {
public:
    Partition() : n_(0) {}
    // Validates the shape; throws std::invalid_argument on violation.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned long n() const { return n_; }
    std::size_t num_parts() const { return parts_.size(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<unsigned> parts_;
    unsigned long n_;
};

// Hook lengths of the Ferrers-Young diagram, one per cell, sorted in
// non-increasing order, together with their exact product.
struct HookData {
    std::vector<unsigned> hooks;
    Int product;
};

// Default cap on exhaustive partition enumeration. p(60) ~ 9.7e5, which
// keeps full-oracle runs in the seconds range.
inline constexpr unsigned long kEnumerationGuard = 60;

// Every partition of n exactly once, in reverse-lexicographic order
// ({n} first, {1,...,1} last). The callback receives a reusable buffer of
// parts valid only for the duration of the call.
void for_each_partition(unsigned long n,
                        const std::function<void(const std::vector<unsigned>&)>& fn);

// Materialized enumeration, same order.
std::vector<Partition> enumerate_partitions(unsigned long n);

std::vector<unsigned> conjugate_parts(const std::vector<unsigned>& parts);
Partition conjugate(const Partition& p);

std::vector<unsigned> hook_lengths(const std::vector<unsigned>& parts);
HookData hook_data(const Partition& p);

// Largest e with ell^e | m. Requires ell prime and m >= 1 (the valuation of
// 0 is infinite and signals a bug upstream).
unsigned long ord_prime(unsigned long ell, const Int& m);

// p_ell(a;n): partitions of n whose hook product has ell-adic valuation
// exactly a, counted by exhaustive enumeration.
unsigned long mckay_bruteforce(unsigned long ell, unsigned long a, unsigned long n,
                               unsigned long guard = kEnumerationGuard);

// One pass over all partitions of n: histogram[a] = p_ell(a;n). The vector
// has length ord_ell(n!) + 1 (every reachable valuation).
std::vector<unsigned long> mckay_valuation_histogram(
    unsigned long ell, unsigned long n, unsigned long guard = kEnumerationGuard);

struct DimensionValuationCheck {
    unsigned long a;  // ord_ell of the hook product
    bool matches;     // ord_ell(n!/H) == ord_ell(n!) - a
};

// Frame-Thrall-Robinson consistency: dim = n!/H(lambda) is integral and its
// ell-adic valuation is ord_ell(n!) - ord_ell(H(lambda)).
DimensionValuationCheck dimension_valuation_check(unsigned long ell,
                                                  const Partition& p);

// No hook length divisible by t (t >= 1).
bool is_t_core(const Partition& p, unsigned long t);

}  // namespace mckay
