#include "mckay/modularity.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mckay {

namespace {

void validate(const EtaQuotient& e) {
    if (e.level == 0) throw std::invalid_argument("EtaQuotient: level must be positive");
    for (const auto& [delta, r] : e.exponents) {
        (void)r;
        if (delta == 0 || e.level % delta != 0)
            throw std::invalid_argument("EtaQuotient: exponent key must divide the level");
    }
}

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

EtaQuotient ell_core_eta_quotient(unsigned long ell) {
    if (!is_prime(ell))
        throw std::invalid_argument("ell_core_eta_quotient: ell must be prime");
    EtaQuotient e;
    e.level = ell;
    e.exponents[ell] = static_cast<long>(ell);
    e.exponents[1] = -1;
    return e;
}

TransformationCheck check_transformation_conditions(const EtaQuotient& e) {
    validate(e);
    long sum_r = 0;
    Int sum_delta_r = 0, sum_cod_r = 0;
    for (const auto& [delta, r] : e.exponents) {
        sum_r += r;
        sum_delta_r += Int(delta) * r;
        sum_cod_r += Int(e.level / delta) * r;
    }
    TransformationCheck out;
    out.weight = Rat(sum_r, 2);
    out.weight.canonicalize();
    out.integral_weight = (sum_r % 2 == 0);
    out.cond24_delta = mpz_divisible_ui_p(sum_delta_r.get_mpz_t(), 24) != 0;
    out.cond24_level_over_delta = mpz_divisible_ui_p(sum_cod_r.get_mpz_t(), 24) != 0;
    return out;
}

bool CuspOrderReport::holomorphic() const {
    for (const CuspOrder& c : orders)
        if (c.order < 0) return false;
    return true;
}

CuspOrderReport cusp_orders(const EtaQuotient& e) {
    TransformationCheck tc = check_transformation_conditions(e);
    if (!tc.all())
        throw std::invalid_argument(
            "cusp_orders: the transformation-law conditions do not hold for "
            "this eta-quotient");
    CuspOrderReport report;
    const unsigned long N = e.level;
    for (unsigned long d : divisors(N)) {
        Rat acc(0);
        for (const auto& [delta, r] : e.exponents) {
            const unsigned long g = std::gcd(d, delta);
            Rat term(Int(g) * Int(g) * r,
                     Int(std::gcd(d, N / d)) * Int(d) * Int(delta));
            term.canonicalize();
            acc += term;
        }
        Rat order = acc * Rat(N, 24);
        order.canonicalize();
        report.orders.push_back(CuspOrder{d, order});
    }
    return report;
}

namespace {

// Signed squarefree part of (-1)^k * prod delta^{r_delta}: factor each
// divisor delta (word-sized), track prime exponents mod 2.
long signed_squarefree_part(const EtaQuotient& e, bool weight_odd) {
    std::map<unsigned long, unsigned long> parity;
    for (const auto& [delta, r] : e.exponents) {
        unsigned long m = delta;
        for (unsigned long p = 2; p * p <= m; ++p) {
            while (m % p == 0) {
                parity[p] += static_cast<unsigned long>(r < 0 ? -r : r);
                m /= p;
            }
        }
        if (m > 1) parity[m] += static_cast<unsigned long>(r < 0 ? -r : r);
    }
    long d = weight_odd ? -1 : 1;
    for (const auto& [p, count] : parity) {
        if (count % 2 == 1) d *= static_cast<long>(p);
    }
    return d;
}

}  // namespace

unsigned long character_conductor(const EtaQuotient& e) {
    validate(e);
    TransformationCheck tc = check_transformation_conditions(e);
    if (!tc.integral_weight)
        throw std::invalid_argument("character_conductor: weight is not integral");
    const bool weight_odd = (tc.weight.get_num() % 2 != 0);
    const long D = signed_squarefree_part(e, weight_odd);
    const unsigned long absD = static_cast<unsigned long>(D < 0 ? -D : D);
    // Kronecker(D, .) is a character mod |D| for D = 1 (mod 4), mod 4|D|
    // otherwise (D is squarefree here).
    long residue = ((D % 4) + 4) % 4;
    return residue == 1 ? absD : 4 * absD;
}

int character_value(const EtaQuotient& e, long d) {
    validate(e);
    TransformationCheck tc = check_transformation_conditions(e);
    if (!tc.integral_weight)
        throw std::invalid_argument("character_value: weight is not integral");
    const bool weight_odd = (tc.weight.get_num() % 2 != 0);
    const long D = signed_squarefree_part(e, weight_odd);
    const unsigned long conductor = character_conductor(e);
    const unsigned long abs_d = static_cast<unsigned long>(d < 0 ? -d : d);
    if (std::gcd(abs_d, conductor) != 1) return 0;  // out of the character's domain
    Int top(D);
    return mpz_kronecker_si(top.get_mpz_t(), d);
}

QExpansion q_expansion(const EtaQuotient& e, std::size_t terms) {
    validate(e);
    Rat lead(0);
    TruncatedSeries series = TruncatedSeries::one(terms);
    for (const auto& [delta, r] : e.exponents) {
        lead += Rat(Int(delta) * r, 24);
        series.mul_euler_product(delta, r);
    }
    lead.canonicalize();
    return QExpansion{lead, std::move(series)};
}

std::complex<double> eta_numeric(std::complex<double> z, unsigned terms) {
    if (z.imag() <= 0.0)
        throw std::invalid_argument("eta_numeric: requires Im(z) > 0");
    const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
    const std::complex<double> q = std::exp(two_pi_i * z);
    if (std::abs(q) >= 0.7)
        throw std::invalid_argument("eta_numeric: |q| too close to 1 for the partial product");
    std::complex<double> prod = std::exp(two_pi_i * z / 24.0);
    std::complex<double> qn(1.0, 0.0);
    for (unsigned n = 1; n <= terms; ++n) {
        qn *= q;
        prod *= (1.0 - qn);
    }
    return prod;
}

}  // namespace mckay
