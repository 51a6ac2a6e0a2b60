#include "mckay/series.hpp"

#include <sstream>
#include <stdexcept>

namespace mckay {

namespace {

void require_same_trunc(std::size_t a, std::size_t b, const char* where) {
    if (a != b) {
        throw std::invalid_argument(std::string(where) +
                                    ": truncation mismatch (" +
                                    std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

}  // namespace

TruncatedSeries TruncatedSeries::one(std::size_t trunc) {
    TruncatedSeries f(trunc);
    f.coeffs_[0] = 1;
    return f;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t trunc, std::size_t degree,
                                          Int coeff) {
    if (degree > trunc)
        throw std::out_of_range("TruncatedSeries::monomial: degree beyond truncation");
    TruncatedSeries f(trunc);
    f.coeffs_[degree] = std::move(coeff);
    return f;
}

const Int& TruncatedSeries::coeff(std::size_t n) const {
    if (n >= coeffs_.size())
        throw std::out_of_range("TruncatedSeries::coeff: index beyond truncation");
    return coeffs_[n];
}

Int& TruncatedSeries::coeff_mut(std::size_t n) {
    if (n >= coeffs_.size())
        throw std::out_of_range("TruncatedSeries::coeff_mut: index beyond truncation");
    return coeffs_[n];
}

bool TruncatedSeries::is_zero() const {
    for (const Int& c : coeffs_)
        if (c != 0) return false;
    return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& g) {
    require_same_trunc(trunc(), g.trunc(), "TruncatedSeries::operator+=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& g) {
    require_same_trunc(trunc(), g.trunc(), "TruncatedSeries::operator-=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
    return *this;
}

void TruncatedSeries::mul_one_minus_qm(std::size_t m) {
    if (m == 0) throw std::invalid_argument("mul_one_minus_qm: m must be >= 1");
    const std::size_t n = trunc();
    if (m > n) return;  // factor invisible at this truncation
    // c[i] -= c[i-m], descending so the subtrahend is still the old value
    for (std::size_t i = n; i >= m; --i) {
        coeffs_[i] -= coeffs_[i - m];
        if (i == m) break;
    }
}

void TruncatedSeries::div_one_minus_qm(std::size_t m) {
    if (m == 0) throw std::invalid_argument("div_one_minus_qm: m must be >= 1");
    const std::size_t n = trunc();
    for (std::size_t i = m; i <= n; ++i) coeffs_[i] += coeffs_[i - m];
}

void TruncatedSeries::mul_euler_product(std::size_t step, long r) {
    if (step == 0) throw std::invalid_argument("mul_euler_product: step must be >= 1");
    if (r == 0) return;
    const std::size_t n = trunc();
    const unsigned long reps = r > 0 ? static_cast<unsigned long>(r)
                                     : static_cast<unsigned long>(-(r + 1)) + 1;
    for (std::size_t m = step; m <= n; m += step) {
        for (unsigned long i = 0; i < reps; ++i) {
            if (r > 0)
                mul_one_minus_qm(m);
            else
                div_one_minus_qm(m);
        }
    }
}

TruncatedSeries TruncatedSeries::shifted(std::size_t e) const {
    TruncatedSeries out(trunc());
    for (std::size_t i = e; i <= trunc(); ++i) out.coeffs_[i] = coeffs_[i - e];
    return out;
}

void TruncatedSeries::scale(const Int& c) {
    for (Int& x : coeffs_) x *= c;
}

void TruncatedSeries::add_scaled_shifted(const TruncatedSeries& f, const Int& a,
                                         std::size_t shift) {
    require_same_trunc(trunc(), f.trunc(), "TruncatedSeries::add_scaled_shifted");
    for (std::size_t i = shift; i <= trunc(); ++i) {
        mpz_addmul(coeffs_[i].get_mpz_t(), a.get_mpz_t(),
                   f.coeffs_[i - shift].get_mpz_t());
    }
}

std::string TruncatedSeries::to_string(std::size_t max_terms) const {
    std::ostringstream os;
    std::size_t shown = 0;
    bool first = true;
    for (std::size_t i = 0; i <= trunc() && shown < max_terms; ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str() << "*q^" << i;
        first = false;
        ++shown;
    }
    if (first) os << "0";
    if (shown == max_terms) os << " + ...";
    os << " (O(q^" << trunc() + 1 << "))";
    return os.str();
}

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
    return f.trunc() == g.trunc() && f.coeffs() == g.coeffs();
}

TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g) {
    f += g;
    return f;
}

TruncatedSeries operator-(TruncatedSeries f, const TruncatedSeries& g) {
    f -= g;
    return f;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_trunc(f.trunc(), g.trunc(), "mul");
    const std::size_t n = f.trunc();
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        const Int& fi = f.coeff(i);
        if (fi == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            mpz_addmul(out.coeff_mut(i + j).get_mpz_t(), fi.get_mpz_t(),
                       g.coeff(j).get_mpz_t());
        }
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    return mul(f, g);
}

TruncatedSeries invert(const TruncatedSeries& f) {
    const Int& c0 = f.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("invert: constant term must be a unit (+-1)");
    const std::size_t n = f.trunc();
    TruncatedSeries out(n);
    out.coeff_mut(0) = c0;  // 1/c0 = c0 for c0 = +-1
    for (std::size_t k = 1; k <= n; ++k) {
        // c0 * out[k] = -(sum_{j=1}^{k} f[j] * out[k-j])
        Int acc;
        for (std::size_t j = 1; j <= k; ++j) {
            mpz_addmul(acc.get_mpz_t(), f.coeff(j).get_mpz_t(),
                       out.coeff(k - j).get_mpz_t());
        }
        out.coeff_mut(k) = (c0 == 1) ? -acc : acc;
    }
    return out;
}

TruncatedSeries binom_product_pow(long r, std::size_t M, std::size_t N) {
    if (M < N)
        throw std::invalid_argument(
            "binom_product_pow: need M >= N for the truncated infinite product");
    TruncatedSeries f = TruncatedSeries::one(N);
    f.mul_euler_product(1, r);  // factors with m > N are invisible anyway
    return f;
}

BivariateSeries::BivariateSeries(std::size_t xtrunc, std::size_t qtrunc)
    : grid_(xtrunc + 1, std::vector<Int>(qtrunc + 1)) {}

BivariateSeries BivariateSeries::one(std::size_t xtrunc, std::size_t qtrunc) {
    BivariateSeries f(xtrunc, qtrunc);
    f.grid_[0][0] = 1;
    return f;
}

const Int& BivariateSeries::coeff(std::size_t a, std::size_t n) const {
    if (a >= grid_.size() || n >= grid_[0].size())
        throw std::out_of_range("BivariateSeries::coeff: index beyond truncation");
    return grid_[a][n];
}

Int& BivariateSeries::coeff_mut(std::size_t a, std::size_t n) {
    if (a >= grid_.size() || n >= grid_[0].size())
        throw std::out_of_range("BivariateSeries::coeff_mut: index beyond truncation");
    return grid_[a][n];
}

void BivariateSeries::mul_one_minus_monomial(std::size_t alpha, std::size_t beta) {
    if (alpha == 0 && beta == 0)
        throw std::invalid_argument("mul_one_minus_monomial: (0,0) is not a valid monomial");
    const std::size_t A = xtrunc();
    const std::size_t N = qtrunc();
    if (alpha > A || beta > N) return;  // invisible
    for (std::size_t a = A; ; --a) {
        if (a >= alpha) {
            auto& row = grid_[a];
            const auto& src = grid_[a - alpha];
            for (std::size_t n = N; ; --n) {
                if (n >= beta) row[n] -= src[n - beta];
                if (n == 0) break;
            }
        }
        if (a == 0) break;
    }
}

void BivariateSeries::div_one_minus_monomial(std::size_t alpha, std::size_t beta) {
    if (alpha == 0 && beta == 0)
        throw std::invalid_argument("div_one_minus_monomial: (0,0) is not a valid monomial");
    const std::size_t A = xtrunc();
    const std::size_t N = qtrunc();
    if (alpha > A || beta > N) return;
    // ascending in both variables so the already-updated entries feed the
    // geometric expansion; for alpha = 0 each row divides independently
    for (std::size_t a = alpha; a <= A; ++a) {
        auto& row = grid_[a];
        const auto& src = grid_[a - alpha];
        for (std::size_t n = beta; n <= N; ++n) row[n] += src[n - beta];
    }
}

TruncatedSeries BivariateSeries::x_slice(std::size_t a) const {
    if (a >= grid_.size())
        throw std::out_of_range("BivariateSeries::x_slice: index beyond truncation");
    TruncatedSeries out(qtrunc());
    for (std::size_t n = 0; n <= qtrunc(); ++n) out.coeff_mut(n) = grid_[a][n];
    return out;
}

bool operator==(const BivariateSeries& f, const BivariateSeries& g) {
    if (f.xtrunc() != g.xtrunc() || f.qtrunc() != g.qtrunc()) return false;
    for (std::size_t a = 0; a <= f.xtrunc(); ++a)
        for (std::size_t n = 0; n <= f.qtrunc(); ++n)
            if (f.coeff(a, n) != g.coeff(a, n)) return false;
    return true;
}

BivariateSeries bivariate_mul(const BivariateSeries& f, const BivariateSeries& g) {
    if (f.xtrunc() != g.xtrunc() || f.qtrunc() != g.qtrunc())
        throw std::invalid_argument("bivariate_mul: truncation mismatch");
    const std::size_t A = f.xtrunc();
    const std::size_t N = f.qtrunc();
    BivariateSeries out(A, N);
    for (std::size_t a = 0; a <= A; ++a) {
        for (std::size_t n = 0; n <= N; ++n) {
            const Int& c = f.coeff(a, n);
            if (c == 0) continue;
            for (std::size_t b = 0; a + b <= A; ++b) {
                for (std::size_t m = 0; n + m <= N; ++m) {
                    mpz_addmul(out.coeff_mut(a + b, n + m).get_mpz_t(),
                               c.get_mpz_t(), g.coeff(b, m).get_mpz_t());
                }
            }
        }
    }
    return out;
}

}  // namespace mckay
