#include "mckay/mckay.hpp"

#include <algorithm>
#include <stdexcept>

#include "mckay/darcais.hpp"

namespace mckay {

unsigned long repunit(unsigned long ell, unsigned k) {
    unsigned long acc = 0;
    unsigned long power = 1;  // ell^i
    for (unsigned i = 0; i < k; ++i) {
        acc += power;
        if (power > static_cast<unsigned long>(-1) / ell)
            throw std::overflow_error("repunit: overflow");
        power *= ell;
    }
    return acc;
}

unsigned long ZVector::weight(unsigned long ell) const {
    unsigned long acc = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
        acc += entries[i] * repunit(ell, static_cast<unsigned>(i) + 1);
    return acc;
}

unsigned long ZVector::q_exponent(unsigned long ell) const {
    unsigned long acc = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
        acc += entries[i] * ipow(ell, static_cast<unsigned>(i) + 1);
    return acc;
}

std::vector<ZVector> z_set(unsigned long ell, unsigned long a) {
    if (!is_prime(ell)) throw std::invalid_argument("z_set: ell must be prime");
    // largest index that can appear: [K]_ell <= a
    unsigned K = 0;
    while (repunit(ell, K + 1) <= a) ++K;
    if (a == 0) return {ZVector{}};

    std::vector<ZVector> out;
    std::vector<unsigned long> z(K, 0);
    // bounded DFS over k descending; correctness over cleverness
    auto rec = [&](auto&& self, unsigned k, unsigned long remaining) -> void {
        if (k == 0) {
            if (remaining == 0) {
                ZVector v{z};
                while (!v.entries.empty() && v.entries.back() == 0)
                    v.entries.pop_back();
                out.push_back(std::move(v));
            }
            return;
        }
        if (k == 1) {
            // [1] = 1 always divides the remainder
            z[0] = remaining;
            self(self, 0, 0);
            z[0] = 0;
            return;
        }
        const unsigned long rk = repunit(ell, k);
        for (unsigned long c = remaining / rk + 1; c-- > 0;) {
            z[k - 1] = c;
            self(self, k - 1, remaining - c * rk);
        }
        z[k - 1] = 0;
    };
    rec(rec, K, a);
    return out;
}

TruncatedSeries ell_core_series(unsigned long ell, std::size_t N) {
    if (!is_prime(ell))
        throw std::invalid_argument("ell_core_series: ell must be prime");
    TruncatedSeries f = TruncatedSeries::one(N);
    f.mul_euler_product(ell, static_cast<long>(ell));
    f.mul_euler_product(1, -1);
    return f;
}

TruncatedSeries ell_core_series(const CoreSeriesSpec& spec) {
    return ell_core_series(spec.ell, spec.trunc);
}

Int three_core_closed(unsigned long n) {
    return chi3_divisor_sum(3 * n + 1);
}

namespace {

// sum_{m=0}^{floor(z/ell)} f(ell^{k+1};m) * f(-ell^k; z - m ell)
Int omega_weight(unsigned long ell, unsigned k, unsigned long z) {
    if (z == 0) return Int(1);
    const long pos_r = static_cast<long>(ipow(ell, k + 1));
    const TruncatedSeries f_pos = darcais_series(pos_r, z / ell);
    const TruncatedSeries f_neg = darcais_series(-static_cast<long>(ipow(ell, k)), z);
    Int acc;
    for (unsigned long m = 0; m <= z / ell; ++m) {
        acc += f_pos.coeff(m) * f_neg.coeff(z - m * ell);
    }
    return acc;
}

}  // namespace

std::vector<OmegaTerm> omega_terms(unsigned long ell, unsigned long a) {
    std::map<unsigned long, Int> merged;
    for (const ZVector& z : z_set(ell, a)) {
        Int coeff(1);
        unsigned long exponent = 0;
        for (std::size_t i = 0; i < z.entries.size(); ++i) {
            if (z.entries[i] == 0) continue;
            const unsigned k = static_cast<unsigned>(i) + 1;
            coeff *= omega_weight(ell, k, z.entries[i]);
            exponent += z.entries[i] * ipow(ell, k);
        }
        merged[exponent] += coeff;
    }
    std::vector<OmegaTerm> out;
    for (auto& [e, c] : merged) {
        if (c != 0) out.push_back(OmegaTerm{e, std::move(c)});
    }
    return out;
}

TruncatedSeries omega_series(unsigned long ell, unsigned long a, std::size_t N) {
    TruncatedSeries out(N);
    for (const OmegaTerm& t : omega_terms(ell, a)) {
        if (t.exponent <= N) out.coeff_mut(t.exponent) += t.coeff;
    }
    return out;
}

TruncatedSeries p_series(unsigned long ell, unsigned long a,
                         const TruncatedSeries& core) {
    TruncatedSeries out(core.trunc());
    for (const OmegaTerm& t : omega_terms(ell, a)) {
        if (t.exponent <= core.trunc())
            out.add_scaled_shifted(core, t.coeff, t.exponent);
    }
    return out;
}

TruncatedSeries p_series(unsigned long ell, unsigned long a, std::size_t N) {
    return p_series(ell, a, ell_core_series(ell, N));
}

Int p_value(unsigned long n, const TruncatedSeries& core,
            const std::vector<OmegaTerm>& omega) {
    if (n > core.trunc())
        throw std::out_of_range("p_value: n beyond core series truncation");
    Int acc;
    for (const OmegaTerm& t : omega) {
        if (t.exponent > n) break;  // p_ell(0; n - e) = 0 for e > n
        mpz_addmul(acc.get_mpz_t(), t.coeff.get_mpz_t(),
                   core.coeff(n - t.exponent).get_mpz_t());
    }
    return acc;
}

Int p_value(unsigned long ell, unsigned long a, unsigned long n,
            const TruncatedSeries& core) {
    return p_value(n, core, omega_terms(ell, a));
}

BivariateSeries nakamura_bivariate(unsigned long ell, std::size_t A, std::size_t N) {
    if (!is_prime(ell))
        throw std::invalid_argument("nakamura_bivariate: ell must be prime");
    BivariateSeries f = BivariateSeries::one(A, N);
    for (unsigned k = 0;; ++k) {
        const unsigned long ellk = ipow(ell, k);
        if (ellk > N) break;  // every remaining factor is invisible in q
        const unsigned long rep = repunit(ell, k);
        for (unsigned long n = 1; n * ellk <= N; ++n) {
            const unsigned long alpha = n * rep;
            if (alpha > A) break;
            // denominator stratum: (1 - x^{n[k]} q^{ell^k n})^{-ell^k}
            for (unsigned long i = 0; i < ellk; ++i)
                f.div_one_minus_monomial(alpha, n * ellk);
        }
        for (unsigned long n = 1; n * ellk * ell <= N; ++n) {
            const unsigned long alpha = ell * n * rep;
            if (alpha > A) break;
            // numerator stratum: (1 - x^{ell n [k]} q^{ell^{k+1} n})^{ell^{k+1}}
            for (unsigned long i = 0; i < ellk * ell; ++i)
                f.mul_one_minus_monomial(alpha, n * ellk * ell);
        }
    }
    return f;
}

std::size_t default_x_truncation(unsigned long ell, std::size_t N) {
    return factorial_valuation(ell, N);
}

Int closed_formula(ClosedFormula which, unsigned long n) {
    switch (which) {
        case ClosedFormula::p2_a1:
            return (n >= 2 && is_triangular(n - 2)) ? Int(2) : Int(0);
        case ClosedFormula::p3_a1:
            if (n <= 2)
                throw std::invalid_argument("closed_formula: p_3(1;n) formula needs n > 2");
            return 3 * chi3_divisor_sum(3 * n - 8);
        case ClosedFormula::p3_a2:
            if (n <= 5)
                throw std::invalid_argument("closed_formula: p_3(2;n) formula needs n > 5");
            return 9 * chi3_divisor_sum(3 * n - 17);
    }
    throw std::logic_error("closed_formula: unreachable");
}

std::shared_ptr<const TruncatedSeries> SeriesCache::core(unsigned long ell,
                                                         std::size_t min_trunc) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cores_.find(ell);
    if (it == cores_.end() || it->second->trunc() < min_trunc) {
        auto fresh = std::make_shared<const TruncatedSeries>(
            ell_core_series(ell, min_trunc));
        cores_[ell] = fresh;
        return fresh;
    }
    return it->second;
}

std::shared_ptr<const TruncatedSeries> SeriesCache::partition_numbers(
    std::size_t min_trunc) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!partitions_ || partitions_->trunc() < min_trunc) {
        partitions_ = std::make_shared<const TruncatedSeries>(
            binom_product_pow(-1, min_trunc, min_trunc));
    }
    return partitions_;
}

}  // namespace mckay
