#include "mckay/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mckay {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    unsigned long sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
        sum += parts_[i];
    }
    n_ = sum;
}

namespace {

// Reverse-lexicographic generation: extend with the largest admissible part
// first, so {n} comes first and {1,..,1} last.
void gen_partitions(unsigned long remaining, unsigned max_part,
                    std::vector<unsigned>& buf,
                    const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (remaining == 0) {
        fn(buf);
        return;
    }
    unsigned hi = static_cast<unsigned>(
        std::min<unsigned long>(remaining, max_part));
    for (unsigned part = hi; part >= 1; --part) {
        buf.push_back(part);
        gen_partitions(remaining - part, part, buf, fn);
        buf.pop_back();
    }
}

}  // namespace

void for_each_partition(unsigned long n,
                        const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> buf;
    buf.reserve(n);
    gen_partitions(n, n > 0 ? static_cast<unsigned>(n) : 1u, buf, fn);
}

std::vector<Partition> enumerate_partitions(unsigned long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        out.push_back(Partition(parts));
    });
    return out;
}

std::vector<unsigned> conjugate_parts(const std::vector<unsigned>& parts) {
    if (parts.empty()) return {};
    std::vector<unsigned> conj(parts[0], 0);
    for (unsigned p : parts) {
        for (unsigned j = 0; j < p; ++j) ++conj[j];
    }
    return conj;
}

Partition conjugate(const Partition& p) {
    return Partition(conjugate_parts(p.parts()));
}

std::vector<unsigned> hook_lengths(const std::vector<unsigned>& parts) {
    std::vector<unsigned> conj = conjugate_parts(parts);
    std::vector<unsigned> hooks;
    std::size_t cells = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    hooks.reserve(cells);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (unsigned j = 0; j < parts[i]; ++j) {
            // arm + leg + 1 for cell (i, j), both 0-based
            hooks.push_back(parts[i] - j + conj[j] - static_cast<unsigned>(i) - 1);
        }
    }
    return hooks;
}

HookData hook_data(const Partition& p) {
    HookData hd;
    hd.hooks = hook_lengths(p.parts());
    std::sort(hd.hooks.begin(), hd.hooks.end(), std::greater<unsigned>());
    hd.product = 1;
    for (unsigned h : hd.hooks) {
        mpz_mul_ui(hd.product.get_mpz_t(), hd.product.get_mpz_t(), h);
    }
    return hd;
}

unsigned long ord_prime(unsigned long ell, const Int& m) {
    if (!is_prime(ell)) throw std::invalid_argument("ord_prime: ell must be prime");
    if (m <= 0)
        throw std::invalid_argument("ord_prime: m must be a positive integer");
    Int rest;
    Int p(static_cast<unsigned long>(ell));
    return mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

namespace {

// ord_ell(h) for every h in 1..n, so a partition's hook-product valuation is
// a straight table-lookup sum over its cells.
std::vector<unsigned> valuation_table(unsigned long ell, unsigned long n) {
    std::vector<unsigned> tab(n + 1, 0);
    for (unsigned long q = ell; q <= n; q *= ell) {
        for (unsigned long h = q; h <= n; h += q) ++tab[h];
        if (q > n / ell) break;
    }
    return tab;
}

void require_enumeration_guard(unsigned long n, unsigned long guard) {
    if (n > guard)
        throw std::invalid_argument(
            "exhaustive enumeration guard exceeded (n = " + std::to_string(n) +
            ", guard = " + std::to_string(guard) + ")");
}

}  // namespace

std::vector<unsigned long> mckay_valuation_histogram(unsigned long ell,
                                                     unsigned long n,
                                                     unsigned long guard) {
    if (!is_prime(ell))
        throw std::invalid_argument("mckay_valuation_histogram: ell must be prime");
    require_enumeration_guard(n, guard);
    std::vector<unsigned long> hist(factorial_valuation(ell, n) + 1, 0);
    const std::vector<unsigned> tab = valuation_table(ell, n);
    std::vector<unsigned> conj(n > 0 ? n : 1);
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        // conjugate profile gives the leg lengths in O(n)
        unsigned width = parts.empty() ? 0 : parts[0];
        std::fill(conj.begin(), conj.begin() + width, 0u);
        for (unsigned p : parts)
            for (unsigned j = 0; j < p; ++j) ++conj[j];
        unsigned long val = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (unsigned j = 0; j < parts[i]; ++j) {
                val += tab[parts[i] - j + conj[j] - static_cast<unsigned>(i) - 1];
            }
        }
        ++hist[val];
    });
    return hist;
}

unsigned long mckay_bruteforce(unsigned long ell, unsigned long a, unsigned long n,
                               unsigned long guard) {
    std::vector<unsigned long> hist = mckay_valuation_histogram(ell, n, guard);
    return a < hist.size() ? hist[a] : 0;
}

DimensionValuationCheck dimension_valuation_check(unsigned long ell,
                                                  const Partition& p) {
    if (!is_prime(ell))
        throw std::invalid_argument("dimension_valuation_check: ell must be prime");
    HookData hd = hook_data(p);
    const unsigned long n = p.n();
    Int factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(n));
    Int dim = factorial / hd.product;

    DimensionValuationCheck out;
    out.a = ord_prime(ell, hd.product);
    const unsigned long nf_val = factorial_valuation(ell, n);
    const unsigned long dim_val = ord_prime(ell, dim);
    out.matches = (factorial % hd.product == 0) && (dim_val == nf_val - out.a);
    return out;
}

bool is_t_core(const Partition& p, unsigned long t) {
    if (t == 0) throw std::invalid_argument("is_t_core: t must be >= 1");
    for (unsigned h : hook_lengths(p.parts())) {
        if (h % t == 0) return false;
    }
    return true;
}

}  // namespace mckay
