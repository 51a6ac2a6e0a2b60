#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mckay/arith.hpp"

namespace mckay {

// Exact formal power series over the integers, truncated at a fixed order N
// (the coefficient of q^N is the last one kept). All ring operations are
// exact; there is no floating point anywhere in this module. Mixing
// truncation orders is an error, never a silent re-truncation.
class TruncatedSeries {
public:
    // The zero series with coefficients c_0..c_trunc.
    explicit TruncatedSeries(std::size_t trunc) : coeffs_(trunc + 1) {}

    static TruncatedSeries one(std::size_t trunc);
    // c * q^degree. degree must be <= trunc.
    static TruncatedSeries monomial(std::size_t trunc, std::size_t degree,
                                    Int coeff = Int(1));

    std::size_t trunc() const { return coeffs_.size() - 1; }

    const Int& coeff(std::size_t n) const;
    Int& coeff_mut(std::size_t n);
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    TruncatedSeries& operator+=(const TruncatedSeries& g);
    TruncatedSeries& operator-=(const TruncatedSeries& g);

    // Multiply in place by the sparse factor (1 - q^m), m >= 1.
    void mul_one_minus_qm(std::size_t m);
    // Divide in place by (1 - q^m), i.e. multiply by 1 + q^m + q^{2m} + ...
    void div_one_minus_qm(std::size_t m);

    // Multiply in place by prod_{n>=1} (1 - q^{step*n})^r. Factors whose
    // lowest term exceeds the truncation order are invisible and skipped.
    void mul_euler_product(std::size_t step, long r);

    // q^e * (*this), truncated; coefficients shifted beyond N are dropped.
    TruncatedSeries shifted(std::size_t e) const;

    void scale(const Int& c);

    // c += a * f, where a is read at offset `shift` (f contributes a*q^shift*f).
    void add_scaled_shifted(const TruncatedSeries& f, const Int& a,
                            std::size_t shift);

    std::string to_string(std::size_t max_terms = 12) const;

private:
    std::vector<Int> coeffs_;
};

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g);

TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g);
TruncatedSeries operator-(TruncatedSeries f, const TruncatedSeries& g);

// Exact product truncated at the common order. Throws std::invalid_argument
// on truncation mismatch.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);

// Multiplicative inverse to order N. The constant term must be a unit (+-1).
TruncatedSeries invert(const TruncatedSeries& f);

// prod_{m=1}^{M} (1 - q^m)^r truncated at N, for any integer r (negative r
// expands through the inverse factors). Requires M >= N so that the result
// agrees with the infinite product at this truncation.
TruncatedSeries binom_product_pow(long r, std::size_t M, std::size_t N);

// Exact integer series in two variables x and q, truncated at x-degree A
// and q-degree N.
class BivariateSeries {
public:
    BivariateSeries(std::size_t xtrunc, std::size_t qtrunc);

    static BivariateSeries one(std::size_t xtrunc, std::size_t qtrunc);

    std::size_t xtrunc() const { return grid_.size() - 1; }
    std::size_t qtrunc() const { return grid_[0].size() - 1; }

    // Coefficient of x^a q^n; throws std::out_of_range outside the grid.
    const Int& coeff(std::size_t a, std::size_t n) const;
    Int& coeff_mut(std::size_t a, std::size_t n);

    // Multiply / divide in place by (1 - x^alpha q^beta), (alpha,beta) != (0,0).
    void mul_one_minus_monomial(std::size_t alpha, std::size_t beta);
    void div_one_minus_monomial(std::size_t alpha, std::size_t beta);

    // Row of fixed x-degree as a univariate series in q.
    TruncatedSeries x_slice(std::size_t a) const;

private:
    std::vector<std::vector<Int>> grid_;  // grid_[a][n] = coeff of x^a q^n
};

bool operator==(const BivariateSeries& f, const BivariateSeries& g);

// Exact product truncated in both variables; truncations must match.
BivariateSeries bivariate_mul(const BivariateSeries& f, const BivariateSeries& g);

}  // namespace mckay
